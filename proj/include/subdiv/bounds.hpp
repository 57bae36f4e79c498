#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "subdiv/bigint.hpp"
#include "subdiv/errors.hpp"

namespace subdiv {

enum class BoundSide { lower, upper };

/// An evaluated bound. Exact integers are kept as such up to 2^1024; past that
/// only log2 is stored. `asymptotic` marks values whose (1 +- o(1)) factor was
/// dropped, so the constant is not certified.
struct BoundReport {
  std::string name;
  std::map<std::string, double> inputs;
  std::variant<BigInt, double> value;  // exact integer, or a real
  bool value_is_log2 = false;
  BoundSide side = BoundSide::lower;
  bool asymptotic = false;
  std::optional<BigInt> compared_against;

  bool exact() const { return std::holds_alternative<BigInt>(value); }
};

inline constexpr unsigned kExactLimitBits = 1024;

inline BoundReport integer_report(std::string name, std::map<std::string, double> inputs, const BigInt &v,
                                  BoundSide side) {
  BoundReport r{std::move(name), std::move(inputs), {}, false, side, false, std::nullopt};
  if (v > 0 && boost::multiprecision::msb(v) >= kExactLimitBits) {
    r.value = log2_of(v);
    r.value_is_log2 = true;
  } else {
    r.value = v;
  }
  return r;
}

inline BoundReport real_report(std::string name, std::map<std::string, double> inputs, double v, BoundSide side,
                               bool asymptotic) {
  return BoundReport{std::move(name), std::move(inputs), v, false, side, asymptotic, std::nullopt};
}

struct MinDegreeBound {
  long exact = 0;          // smallest D with binom(D, l-2) >= t
  double closed_form = 0;  // e^{-1} (l-2) t^{1/(l-2)}
};

/// Minimum degree forced on non-isolated vertices of a (K_l,t)-locally dense
/// graph: t <= binom(|N(x) n N(y)|, l-2) <= binom(d(x), l-2).
inline MinDegreeBound min_degree_lower_bound(int l, long long t) {
  if (l < 3 || t < 1) throw DomainError("min_degree_lower_bound needs l >= 3, t >= 1");
  MinDegreeBound b;
  long d = l - 2;
  while (binomial(d, l - 2) < t) ++d;
  b.exact = d;
  b.closed_form = std::exp(-1.0) * (l - 2) * std::pow(static_cast<double>(t), 1.0 / (l - 2));
  return b;
}

/// Decides exact > e^{-1} (l-2) t^{1/(l-2)} without floating point:
/// equivalent to (exact * e)^{l-2} > (l-2)^{l-2} t, and e is bracketed by
/// 2718281828/10^9 < e < 2718281829/10^9. Returns nullopt only when the
/// bracket is too coarse to decide.
inline std::optional<bool> exceeds_closed_form(long exact, int l, long long t) {
  const unsigned q = static_cast<unsigned>(l - 2);
  const BigInt scale = power(BigInt(10), 9ul * q);
  const BigInt rhs = power(BigInt(l - 2), q) * BigInt(t) * scale;
  const BigInt low = power(BigInt(exact) * 2718281828, q);
  const BigInt high = power(BigInt(exact) * 2718281829, q);
  if (low > rhs) return true;
  if (high <= rhs) return false;
  return std::nullopt;
}

/// (10/23) d^2: average degree that forces a subdivision of K_d, with the
/// (1+o(1)) factor dropped.
inline double ko_threshold(double d) { return 10.0 / 23.0 * d * d; }

/// Largest d with (10/23) d^2 <= avg_degree.
inline long subdivision_order(double avg_degree) {
  if (avg_degree < 0) throw DomainError("average degree must be nonnegative");
  long d = static_cast<long>(std::floor(std::sqrt(2.3 * avg_degree)));
  while (d > 0 && 10.0 * d * d > 23.0 * avg_degree) --d;
  while (10.0 * (d + 1) * (d + 1) <= 23.0 * avg_degree) ++d;
  return d;
}

/// log2 of the lower bound 2^{t^{1/(2(l-2))}} on s_t(K_l).
inline double bound_i_log2(int l, double t) {
  if (l < 4 || t < 1) throw DomainError("bound_i_log2 needs l >= 4, t >= 1");
  return std::pow(t, 1.0 / (2.0 * (l - 2)));
}

/// sqrt(23(l-2)/(10e)) t^{1/(2(l-2))}, the (1-o(1)) factor dropped.
inline double eq2_d(int l, double t) {
  if (l < 4 || t < 1) throw DomainError("eq2_d needs l >= 4, t >= 1");
  return std::sqrt(23.0 * (l - 2) / (10.0 * std::exp(1.0))) * std::pow(t, 1.0 / (2.0 * (l - 2)));
}

/// 2^l (t+2)^{e_F + 2l}
inline BigInt bound_ii(int l, int e_f, long long t) {
  if (l < 0 || e_f < 0 || t < 0) throw DomainError("bound_ii needs nonnegative parameters");
  return power(BigInt(2), static_cast<unsigned long>(l)) *
         power(BigInt(t + 2), static_cast<unsigned long>(e_f + 2 * l));
}

/// 2^l (|B|+1)^{e_F + 2l}
inline BigInt lemma5_bound(int l, int e_f, long long b) {
  if (l < 0 || e_f < 0 || b < 0) throw DomainError("lemma5_bound needs nonnegative parameters");
  return power(BigInt(2), static_cast<unsigned long>(l)) *
         power(BigInt(b + 1), static_cast<unsigned long>(e_f + 2 * l));
}

/// 2^{|A|} * sum_{i <= 2l + e_F} binom(|B|, i): the number of vertex subsets
/// with at most 2l + e_F vertices in B.
inline BigInt lemma5_subset_count(int a, long long b, int l, int e_f) {
  BigInt sum = 0;
  for (long i = 0; i <= 2L * l + e_f; ++i) sum += binomial(b, i);
  return power(BigInt(2), static_cast<unsigned long>(a)) * sum;
}

/// (1 - 2 eps) (binom(l-2, 2) + 1)
inline double bound_iii_exponent(int l, double eps) {
  if (l < 4) throw DomainError("bound_iii_exponent needs l >= 4");
  if (!(eps > 0 && eps < 0.5)) throw DomainError("bound_iii_exponent needs 0 < eps < 1/2");
  return (1.0 - 2.0 * eps) * ((l - 2) * (l - 3) / 2 + 1);
}

/// (e(K_l^-) - 2l + 5, binom(l-2, 2) + 1); the two always agree.
inline std::pair<long, long> kminus_exponent_identity(int l) {
  if (l < 4) throw DomainError("kminus_exponent_identity needs l >= 4");
  const long edges = static_cast<long>(l) * (l - 1) / 2 - 1;
  return {edges - 2L * l + 5, static_cast<long>(l - 2) * (l - 3) / 2 + 1};
}

/// sum_{i=l}^{r} binom(r, i): vertex sets of size >= l in K_r.
inline BigInt complete_count(int l, int r) {
  if (l < 0 || r < l) throw DomainError("complete_count needs 0 <= l <= r");
  BigInt sum = 0;
  for (int i = l; i <= r; ++i) sum += binomial(r, i);
  return sum;
}

/// 2^{d+1} - binom(d+1, 2) - d - 2: cycles with distinct vertex sets in K_{d+1}.
inline BigInt komlos_cycle_count(int d) {
  if (d < 2) throw DomainError("komlos_cycle_count needs d >= 2");
  return power(BigInt(2), static_cast<unsigned long>(d + 1)) - binomial(d + 1, 2) - d - 2;
}

/// 2^d - sum_{i<l} binom(d, i): subsets I of [d] with |I| >= l.
inline BigInt theorem_i_count_lower(int d, int l) {
  if (l > d || l < 0) throw DomainError("theorem_i_count_lower needs 0 <= l <= d");
  BigInt sum = 0;
  for (int i = 0; i < l; ++i) sum += binomial(d, i);
  return power(BigInt(2), static_cast<unsigned long>(d)) - sum;
}

} // namespace subdiv
