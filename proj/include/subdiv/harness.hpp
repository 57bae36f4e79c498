#pragma once

#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "subdiv/bounds.hpp"
#include "subdiv/constructions.hpp"
#include "subdiv/density.hpp"
#include "subdiv/report_json.hpp"
#include "subdiv/subdivision.hpp"

namespace subdiv {

enum class Verdict { holds, violated, inconclusive };

inline const char *verdict_name(Verdict v) {
  switch (v) {
  case Verdict::holds:
    return "holds";
  case Verdict::violated:
    return "violated";
  case Verdict::inconclusive:
    return "inconclusive";
  }
  return "";
}

struct VerificationReport {
  std::string harness;
  Json inputs = Json::object();
  Json enumerated = Json::object();
  std::vector<BoundReport> bounds;
  Verdict verdict = Verdict::holds;
  std::vector<std::string> failures;  // relations that did not hold
  double runtime_ms = 0;

  /// Records an exact relation; any false one turns the verdict to violated.
  void require(bool ok, const std::string &relation) {
    if (ok) return;
    failures.push_back(relation);
    if (verdict != Verdict::inconclusive) verdict = Verdict::violated;
  }

  void truncated(const std::string &what) {
    failures.push_back(what + " truncated");
    verdict = Verdict::inconclusive;
  }
};

inline Json to_json(const VerificationReport &r) {
  Json j;
  j["harness"] = r.harness;
  j["inputs"] = r.inputs;
  j["enumerated"] = r.enumerated;
  Json b = Json::array();
  for (const auto &x : r.bounds) b.push_back(to_json(x));
  j["bound"] = std::move(b);
  j["verdict"] = verdict_name(r.verdict);
  if (!r.failures.empty()) j["failures"] = r.failures;
  j["runtime_ms"] = r.runtime_ms;
  return j;
}

/// p/q in lowest terms.
struct Fraction {
  long long num = 0;
  long long den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Parses a plain decimal such as "0.5" or "0.125" exactly.
inline Fraction parse_fraction(const std::string &text) {
  Fraction f;
  bool seen_point = false;
  bool any_digit = false;
  for (char c : text) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      any_digit = true;
      if (f.num > 100'000'000'000LL) throw DomainError("too many digits in '" + text + "'");
      f.num = f.num * 10 + (c - '0');
      if (seen_point) f.den *= 10;
    } else {
      throw DomainError("expected a decimal number, got '" + text + "'");
    }
  }
  if (!any_digit) throw DomainError("expected a decimal number, got '" + text + "'");
  const long long g = std::gcd(f.num, f.den);
  if (g > 1) {
    f.num /= g;
    f.den /= g;
  }
  return f;
}

namespace detail {

class Stopwatch {
public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline Json sets_json(const std::vector<VertexSet> &sets) {
  Json out = Json::array();
  for (const auto &s : sets) out.push_back(s.items());
  return out;
}

inline void put_params(std::map<std::string, double> &) {}

template <class V, class... Rest>
void put_params(std::map<std::string, double> &m, const char *key, V value, Rest... rest) {
  m[key] = static_cast<double>(value);
  put_params(m, rest...);
}

template <class... Args>
std::map<std::string, double> params(Args... args) {
  std::map<std::string, double> m;
  put_params(m, args...);
  return m;
}

inline BoundReport compared(BoundReport b, const BigInt &observed) {
  b.compared_against = observed;
  return b;
}

inline bool within(const BoundReport &b, const BigInt &observed) {
  const auto *v = std::get_if<BigInt>(&b.value);
  if (v) return b.side == BoundSide::upper ? observed <= *v : observed >= *v;
  const double lg = observed > 0 ? log2_of(observed) : -1.0;
  const double bound = b.value_is_log2 ? std::get<double>(b.value) : std::log2(std::get<double>(b.value));
  return b.side == BoundSide::upper ? lg <= bound : lg >= bound;
}

/// Whether the vertex sets of the witnesses are pairwise distinct, and
/// whether their traces on `marks` are.
struct Distinctness {
  std::size_t distinct_sets = 0;
  bool traces_distinct = true;
};

inline Distinctness distinctness(const std::vector<SubdivisionWitness> &ws, const std::vector<int> &marks) {
  std::set<VertexSet> sets;
  std::set<std::vector<int>> traces;
  for (const auto &w : ws) {
    const auto vs = w.vertex_set();
    sets.insert(vs);
    std::vector<int> trace;
    for (int x : marks)
      if (vs.contains(x)) trace.push_back(x);
    traces.insert(std::move(trace));
  }
  return {sets.size(), traces.size() == ws.size()};
}

} // namespace detail

/// Subsets of K_r spanning a subdivision of K_l, against the closed sum
/// (and, for l = 3, the cycle count).
inline VerificationReport verify_tuza_count(int l, int r, const Limits &limits = {}) {
  detail::Stopwatch clock;
  if (l < 3 || r < l) throw DomainError("tuza-count needs 3 <= ell <= r");
  VerificationReport rep;
  rep.harness = "tuza-count";
  rep.inputs = {{"ell", l}, {"r", r}};
  const Graph g = complete_graph(r);
  const Pattern f = Pattern::complete(l);
  auto res = enumerate_distinguishable_subset(g, f, {}, limits);
  rep.enumerated["count"] = to_decimal(res.count);
  if (res.truncated) rep.truncated("subset enumeration");
  if (r <= limits.embed_engine_max_n && r <= limits.embed_max_set_size) {
    auto other = enumerate_distinguishable_embed(g, f, {}, limits);
    rep.enumerated["count_embed"] = to_decimal(other.count);
    if (other.truncated) rep.truncated("embed enumeration");
    else rep.require(other.vertex_sets == res.vertex_sets, "subset and embed engines agree");
  }
  const auto formula = integer_report("complete_count", detail::params("ell", l, "r", r), complete_count(l, r),
                                      BoundSide::lower);
  rep.bounds.push_back(detail::compared(formula, res.count));
  rep.require(res.count == complete_count(l, r), "count = sum_{i=ell}^{r} binom(r,i)");
  const BigInt cap = power(BigInt(2), static_cast<unsigned long>(r));
  rep.bounds.push_back(detail::compared(integer_report("two_to_r", detail::params("r", r), cap, BoundSide::upper), res.count));
  rep.require(res.count <= cap, "count <= 2^r");
  if (l == 3) {
    const BigInt k = komlos_cycle_count(r - 1);
    rep.bounds.push_back(detail::compared(
        integer_report("komlos_cycle_count", detail::params("d", r - 1), k, BoundSide::lower), res.count));
    rep.require(res.count == k, "count = 2^{d+1} - binom(d+1,2) - d - 2");
  }
  rep.runtime_ms = clock.elapsed_ms();
  return rep;
}

/// Dense host for K_l: K_r with r = tuza_r_for(l, t) unless a host is given.
/// Certifies density, finds the largest topological clique and checks the
/// family of pairwise distinguishable K_l subdivisions has the exact size
/// 2^d - sum_{i<l} binom(d,i).
inline VerificationReport verify_thm2i(int l, long long t, std::optional<Graph> host = {}, const Limits &limits = {}) {
  detail::Stopwatch clock;
  if (l < 3 || t < 1) throw DomainError("thm2i needs ell >= 3 and t >= 1");
  VerificationReport rep;
  rep.harness = "thm2i";
  rep.inputs = {{"ell", l}, {"t", t}};
  const Graph g = host ? *host : complete_graph(tuza_r_for(l, t));
  rep.inputs["host_order"] = g.order();
  rep.inputs["host_size"] = g.size();
  if (!host) rep.inputs["host"] = "K" + std::to_string(g.order());

  const auto density = local_density(g, Pattern::complete(l), AnchorKind::edge, limits);
  rep.enumerated["density_min_count"] = density.min_count;
  rep.require(density.min_count >= static_cast<std::uint64_t>(t), "host is (K_ell, t)-locally dense");

  const auto top = max_topological_clique(g, limits.pattern_max_order, limits);
  rep.enumerated["max_topological_clique"] = top.d;
  if (!top.witness || top.d < l) {
    rep.require(false, "host contains a subdivision of K_ell");
    rep.runtime_ms = clock.elapsed_ms();
    return rep;
  }
  const auto family = theorem_i_family(g, *top.witness, l);
  std::size_t invalid = 0;
  for (const auto &w : family) invalid += validate_witness(g, w).empty() ? 0 : 1;
  const auto dist = detail::distinctness(family, top.witness->branch);
  rep.enumerated["family_size"] = family.size();
  rep.enumerated["family_distinct_sets"] = dist.distinct_sets;
  rep.enumerated["invalid_witnesses"] = invalid;
  const BigInt expected = theorem_i_count_lower(top.d, l);
  rep.bounds.push_back(detail::compared(
      integer_report("theorem_i_count_lower", detail::params("d", top.d, "ell", l), expected, BoundSide::lower),
      BigInt(family.size())));
  rep.require(BigInt(family.size()) == expected, "family size = 2^d - sum_{i<ell} binom(d,i)");
  rep.require(dist.distinct_sets == family.size() && dist.traces_distinct, "family pairwise distinguishable");
  rep.require(invalid == 0, "every family witness is valid");

  const auto md = min_degree_lower_bound(l, t);
  rep.bounds.push_back(integer_report("min_degree_exact", detail::params("ell", l, "t", double(t)), BigInt(md.exact),
                                      BoundSide::lower));
  rep.bounds.push_back(real_report("min_degree_closed_form", detail::params("ell", l, "t", double(t)),
                                   md.closed_form, BoundSide::lower, false));
  if (l >= 4) {
    rep.bounds.push_back(real_report("bound_i_log2", detail::params("ell", l, "t", double(t)),
                                     bound_i_log2(l, double(t)), BoundSide::lower, true));
    rep.bounds.back().value_is_log2 = true;
    rep.bounds.push_back(
        real_report("eq2_d", detail::params("ell", l, "t", double(t)), eq2_d(l, double(t)), BoundSide::lower, true));
  }
  if (g.order() <= limits.subset_engine_max_n) {
    auto res = enumerate_distinguishable_subset(g, Pattern::complete(l), {}, limits);
    rep.enumerated["s"] = to_decimal(res.count);
    if (res.truncated) rep.truncated("subset enumeration");
    else rep.require(res.count >= BigInt(family.size()), "s(K_ell, G) >= family size");
  }
  rep.runtime_ms = clock.elapsed_ms();
  return rep;
}

/// split_construction(l, t) against F (K_l^- by default): density, exact
/// s(F, G) and the polynomial upper bounds.
inline VerificationReport verify_thm2ii(int l, long long t, std::optional<Pattern> pattern = {},
                                        const Limits &limits = {}) {
  detail::Stopwatch clock;
  VerificationReport rep;
  rep.harness = "thm2ii";
  const Pattern f = pattern ? *pattern : Pattern::complete_minus(l);
  if (f.order() != l) throw DomainError("pattern must have ell vertices");
  if (f.is_complete()) throw DomainError("thm2ii needs a non-complete pattern");
  rep.inputs = {{"ell", l}, {"t", t}, {"pattern", pattern_to_json(f)}};
  const auto split = split_construction(l, static_cast<int>(t));
  const auto density = local_density(split.graph, f, AnchorKind::edge, limits);
  rep.enumerated["density_min_count"] = density.min_count;
  rep.require(density.min_count >= static_cast<std::uint64_t>(t), "host is (F, t)-locally dense");
  auto res = enumerate_distinguishable_subset(split.graph, f, {}, limits);
  rep.enumerated["s"] = to_decimal(res.count);
  if (res.truncated) rep.truncated("subset enumeration");
  const auto e_f = static_cast<int>(f.size());
  auto b2 = integer_report("bound_ii", detail::params("ell", l, "e_F", e_f, "t", double(t)),
                           bound_ii(l, e_f, t), BoundSide::upper);
  rep.require(detail::within(b2, res.count), "s(F, G) <= 2^ell (t+2)^{e(F)+2 ell}");
  rep.bounds.push_back(detail::compared(std::move(b2), res.count));
  const long long b = static_cast<long long>(split.b.size());
  auto l5 = integer_report("lemma5_bound", detail::params("ell", l, "e_F", e_f, "B", double(b)),
                           lemma5_bound(l, e_f, b), BoundSide::upper);
  rep.require(detail::within(l5, res.count), "s(F, G) <= 2^ell (|B|+1)^{e(F)+2 ell}");
  rep.bounds.push_back(detail::compared(std::move(l5), res.count));
  rep.runtime_ms = clock.elapsed_ms();
  return rep;
}

/// Per-path inner inequalities and the B-budget for one witness in a host
/// with parts (A, B), B independent. Empty means every relation holds.
inline std::vector<std::string> lemma5_violations(const SubdivisionWitness &w, const VertexSet &a, const VertexSet &b) {
  std::vector<std::string> out;
  const auto &edges = w.pattern.edges();
  for (std::size_t i = 0; i < w.routes.size(); ++i) {
    const auto &p = w.routes[i];
    long ap = 0, bp = 0;
    for (std::size_t j = 1; j + 1 < p.size(); ++j) {
      if (a.contains(p[j])) ++ap;
      if (b.contains(p[j])) ++bp;
    }
    const int ends_in_b = (b.contains(p.front()) ? 1 : 0) + (b.contains(p.back()) ? 1 : 0);
    const long slack = 1 - ends_in_b;  // +1, 0, -1
    if (bp > ap + slack)
      out.push_back("path for {" + std::to_string(edges[i].u) + "," + std::to_string(edges[i].v) +
                    "}: b_P = " + std::to_string(bp) + " > a_P " + (slack >= 0 ? "+ " : "- ") +
                    std::to_string(std::abs(slack)) + " = " + std::to_string(ap + slack));
  }
  long in_b = 0;
  for (int x : w.vertex_set()) in_b += b.contains(x) ? 1 : 0;
  const long budget = 2L * w.pattern.order() + static_cast<long>(w.pattern.size());
  if (in_b > budget)
    out.push_back("|V(T) n B| = " + std::to_string(in_b) + " > 2 ell + e(F) = " + std::to_string(budget));
  return out;
}

/// Every subdivision of F (K_l^- by default) in split_construction(l, t) is
/// checked against the inner inequalities, and the subset count against the
/// resulting bound.
inline VerificationReport verify_lemma5(int l, long long t, std::optional<Pattern> pattern = {},
                                        const Limits &limits = {}) {
  detail::Stopwatch clock;
  VerificationReport rep;
  rep.harness = "lemma5";
  const Pattern f = pattern ? *pattern : Pattern::complete_minus(l);
  if (f.order() != l) throw DomainError("pattern must have ell vertices");
  rep.inputs = {{"ell", l}, {"t", t}, {"pattern", pattern_to_json(f)}};
  const auto split = split_construction(l, static_cast<int>(t));
  std::uint64_t checked = 0;
  long max_in_b = 0;
  std::vector<std::string> violations;
  const bool truncated = for_each_witness(split.graph, f, {}, limits, [&](const SubdivisionWitness &w) {
    ++checked;
    long in_b = 0;
    for (int x : w.vertex_set()) in_b += split.b.contains(x) ? 1 : 0;
    max_in_b = std::max(max_in_b, in_b);
    if (violations.size() < 16)
      for (auto &v : lemma5_violations(w, split.a, split.b)) violations.push_back(std::move(v));
  });
  rep.enumerated["witnesses_checked"] = checked;
  rep.enumerated["max_vertices_in_B"] = max_in_b;
  rep.enumerated["violations"] = violations;
  if (truncated) rep.truncated("witness enumeration");
  rep.require(violations.empty(), "every witness satisfies the per-path and |V(T) n B| relations");
  const long budget = 2L * l + static_cast<long>(f.size());
  rep.enumerated["B_budget"] = budget;

  auto res = enumerate_distinguishable_subset(split.graph, f, {}, limits);
  rep.enumerated["s"] = to_decimal(res.count);
  if (res.truncated) rep.truncated("subset enumeration");
  const auto e_f = static_cast<int>(f.size());
  const long long b = static_cast<long long>(split.b.size());
  auto subsets = integer_report("lemma5_subset_count",
                                detail::params("A", double(split.a.size()), "B", double(b), "ell", l, "e_F", e_f),
                                lemma5_subset_count(static_cast<int>(split.a.size()), b, l, e_f), BoundSide::upper);
  rep.require(detail::within(subsets, res.count), "s(F, G) <= 2^|A| sum_{i <= 2 ell + e(F)} binom(|B|, i)");
  rep.bounds.push_back(detail::compared(std::move(subsets), res.count));
  auto l5 = integer_report("lemma5_bound", detail::params("ell", l, "e_F", e_f, "B", double(b)),
                           lemma5_bound(l, e_f, b), BoundSide::upper);
  rep.require(detail::within(l5, res.count), "s(F, G) <= 2^ell (|B|+1)^{e(F)+2 ell}");
  rep.bounds.push_back(detail::compared(std::move(l5), res.count));
  rep.runtime_ms = clock.elapsed_ms();
  return rep;
}

/// |B| >= 2 t^{1-eps} / (l-1) decided exactly for rational eps = p/q:
/// (|B| (l-1))^q >= 2^q t^{q-p}.
inline bool book_size_relation(std::size_t b, int l, long long t, Fraction eps) {
  const auto q = static_cast<unsigned long>(eps.den);
  const auto qp = static_cast<unsigned long>(eps.den - eps.num);
  return power(BigInt(b) * (l - 1), q) >= power(BigInt(2), q) * power(BigInt(t), qp);
}

/// g(e) < t^eps, exactly: g^q < t^p.
inline bool below_t_power(std::uint64_t g, long long t, Fraction eps) {
  return power(BigInt(g), static_cast<unsigned long>(eps.den)) < power(BigInt(t), static_cast<unsigned long>(eps.num));
}

/// Book structure on an edge of split_construction(l, t) (or a given host),
/// the claimed size of B against both sides of the inequality, and the
/// family T(X) of K_l^- subdivisions with distinct vertex sets.
inline VerificationReport verify_thm2iii(int l, long long t, Fraction eps, std::optional<Edge> edge = {},
                                         std::optional<Graph> host = {}, const Limits &limits = {}) {
  detail::Stopwatch clock;
  if (l < 4 || t < 1) throw DomainError("thm2iii needs ell >= 4 and t >= 1");
  if (!(eps.num > 0 && eps.num < eps.den)) throw DomainError("thm2iii needs 0 < eps < 1");
  VerificationReport rep;
  rep.harness = "thm2iii";
  rep.inputs = {{"ell", l}, {"t", t}, {"eps", eps.value()}};
  std::optional<SplitGraph> split;
  if (!host) split = split_construction(l, static_cast<int>(t));
  const Graph g = host ? *host : split->graph;
  const Pattern kminus = Pattern::complete_minus(l);
  const Pattern kl1 = Pattern::complete(l - 1);

  Edge e{};
  if (edge) {
    e = *edge;
  } else if (split && split->a.size() >= 2) {
    e = Edge(split->a.items()[0], split->a.items()[1]);
  } else {
    std::uint64_t best = 0;
    bool found = false;
    for (const Edge &cand : g.edges()) {
      const auto c = count_copies_anchored(g, kl1, Anchor::edge(cand.u, cand.v));
      if (c > 0 && (!found || c < best)) {
        best = c;
        e = cand;
        found = true;
      }
    }
    if (!found) throw DomainError("no edge of the host lies in a copy of K_{ell-1}");
  }
  rep.inputs["edge"] = Json::array({e.u, e.v});

  const auto density = local_density(g, kminus, AnchorKind::edge, limits);
  rep.enumerated["density_min_count"] = density.min_count;
  const Anchor anchor = Anchor::edge(e.u, e.v);
  rep.enumerated["kminus_copies_on_edge"] = count_copies_anchored(g, kminus, anchor, CopySemantics::subgraph);
  rep.enumerated["kminus_induced_copies_on_edge"] = count_copies_anchored(g, kminus, anchor, CopySemantics::induced);

  const auto search = find_book_structure(g, e, l);
  const auto &book = search.book;
  rep.enumerated["g_e"] = search.cliques_on_edge;
  rep.enumerated["book"] = to_json(book);
  rep.enumerated["book_size"] = book.b.size();
  const auto bv = book_violations(g, book);
  rep.require(bv.empty(), "book structure invariants");

  const double t_eps = std::pow(double(t), eps.value());
  const double claim_rhs = 2.0 * std::pow(double(t), 1.0 - eps.value()) / (l - 1);
  rep.bounds.push_back(real_report("t_pow_eps", detail::params("t", double(t), "eps", eps.value()), t_eps,
                                   BoundSide::upper, false));
  rep.bounds.back().compared_against = BigInt(search.cliques_on_edge);
  rep.bounds.push_back(real_report("book_size_lower",
                                   detail::params("ell", l, "t", double(t), "eps", eps.value()), claim_rhs,
                                   BoundSide::lower, false));
  rep.bounds.back().compared_against = BigInt(book.b.size());
  const bool premise = density.min_count >= static_cast<std::uint64_t>(t) && below_t_power(search.cliques_on_edge, t, eps);
  const bool relation = book_size_relation(book.b.size(), l, t, eps);
  rep.enumerated["claim_premise"] = premise;
  rep.enumerated["book_size_relation_holds"] = relation;
  // The size guarantee is only claimed under its premise.
  if (premise) rep.require(relation, "|B| >= 2 t^{1-eps} / (ell-1)");

  const int m = (l - 2) * (l - 3) / 2 + 1;
  if (static_cast<int>(book.b.size()) >= m) {
    const auto family = theorem_iii_family(g, book, l);
    std::size_t invalid = 0;
    for (const auto &w : family) invalid += validate_witness(g, w).empty() ? 0 : 1;
    const auto dist = detail::distinctness(family, {});
    rep.enumerated["family_size"] = family.size();
    rep.enumerated["family_distinct_sets"] = dist.distinct_sets;
    rep.enumerated["invalid_witnesses"] = invalid;
    auto expected = integer_report("family_lower", detail::params("B", double(book.b.size()), "m", m),
                                   binomial(static_cast<long>(book.b.size()), m), BoundSide::lower);
    rep.require(detail::within(expected, BigInt(dist.distinct_sets)), "distinct sets >= binom(|B|, binom(ell-2,2)+1)");
    rep.bounds.push_back(detail::compared(std::move(expected), BigInt(dist.distinct_sets)));
    rep.require(invalid == 0, "every family witness is valid");
  } else {
    rep.enumerated["family_size"] = 0;
    if (premise) rep.require(false, "|B| large enough for the family");
  }
  // the family-size exponent is only positive below eps = 1/2
  if (2 * eps.num < eps.den)
    rep.bounds.push_back(real_report("bound_iii_exponent", detail::params("ell", l, "eps", eps.value()),
                                     bound_iii_exponent(l, eps.value()), BoundSide::lower, true));
  const auto [lhs, rhs] = kminus_exponent_identity(l);
  rep.enumerated["exponent_identity"] = Json::array({lhs, rhs});
  rep.require(lhs == rhs, "e(K_ell^-) - 2 ell + 5 = binom(ell-2,2) + 1");
  rep.runtime_ms = clock.elapsed_ms();
  return rep;
}

/// F containing K_k takes the complete-host path (certify (K_k, t) density
/// on K_r, then the exact family of K_k subdivisions); K_k-free F takes the
/// split host, certified (F, k, t)-locally dense, with s(F, G) against the
/// polynomial bound.
inline VerificationReport verify_thm7(const Pattern &f, int k, long long t, const Limits &limits = {}) {
  detail::Stopwatch clock;
  const int l = f.order();
  if (k < 3 || k > l) throw DomainError("thm7 needs 3 <= k <= |F|");
  if (t < 1) throw DomainError("thm7 needs t >= 1");
  const int omega = clique_number(f.graph());
  if (omega >= k) {
    auto rep = verify_thm2i(k, t, {}, limits);
    rep.harness = "thm7";
    rep.inputs["pattern"] = pattern_to_json(f);
    rep.inputs["k"] = k;
    rep.inputs["ell"] = l;
    rep.inputs["t"] = t;
    rep.inputs["path"] = "contains K_k";
    rep.runtime_ms = clock.elapsed_ms();
    return rep;
  }
  VerificationReport rep;
  rep.harness = "thm7";
  rep.inputs = {{"pattern", pattern_to_json(f)}, {"k", k}, {"t", t}, {"ell", l}, {"path", "K_k-free"}};
  const auto split = split_construction(l, static_cast<int>(t));
  const auto density = k_local_density(split.graph, f, k, AnchorKind::edge, limits);
  rep.enumerated["density"] = to_json(density);
  rep.require(density.min_count >= static_cast<std::uint64_t>(t), "host is (F, k, t)-locally dense");
  auto res = enumerate_distinguishable_subset(split.graph, f, {}, limits);
  rep.enumerated["s"] = to_decimal(res.count);
  if (res.truncated) rep.truncated("subset enumeration");
  const auto e_f = static_cast<int>(f.size());
  auto b2 = integer_report("bound_ii", detail::params("ell", l, "e_F", e_f, "t", double(t)),
                           bound_ii(l, e_f, t), BoundSide::upper);
  rep.require(detail::within(b2, res.count), "s(F, G) <= 2^ell (t+2)^{e(F)+2 ell}");
  rep.bounds.push_back(detail::compared(std::move(b2), res.count));
  rep.runtime_ms = clock.elapsed_ms();
  return rep;
}

/// K_{r,r} with r = floor(d^2/8) has no subdivision of K_{d+1}; also every
/// K_{r,r} stays at or below r+1.
inline VerificationReport verify_jung(int d, const Limits &limits = {}) {
  detail::Stopwatch clock;
  if (d < 3) throw DomainError("jung needs d >= 3");
  VerificationReport rep;
  rep.harness = "jung";
  const int r = static_cast<int>(jung_r(d));
  rep.inputs = {{"d", d}, {"r", r}};
  const Graph g = complete_bipartite(r, r);
  const auto top = max_topological_clique(g, d + 1, limits);
  rep.enumerated["max_topological_clique"] = top.d;
  if (top.witness) rep.enumerated["witness"] = to_json(*top.witness);
  rep.require(top.d <= d, "no subdivision of K_{d+1} in K_{r,r}");
  rep.require(top.d <= r + 1, "max topological clique <= r + 1");
  rep.bounds.push_back(detail::compared(
      integer_report("degree_obstruction", detail::params("r", r), BigInt(r + 1), BoundSide::upper), BigInt(top.d)));
  const double avg = static_cast<double>(r);
  rep.enumerated["average_degree"] = avg;
  rep.enumerated["subdivision_order_at_average_degree"] = subdivision_order(avg);
  rep.bounds.push_back(real_report("ko_threshold", detail::params("d", d), ko_threshold(d), BoundSide::lower, true));
  rep.runtime_ms = clock.elapsed_ms();
  return rep;
}

} // namespace subdiv
