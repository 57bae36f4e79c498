// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "subdiv/subdiv.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace subdiv;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> notes;

  void check(bool ok, const std::string &what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

int failures = 0;

void criterion(int id, const std::string &title, double limit_s, const std::function<void(Outcome &)> &body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception &e) {
    o.check(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs >= limit_s) o.check(false, "runtime " + std::to_string(secs) + " s over limit");
  std::printf("%s %2d %s: %s (%.2f s", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.str().c_str(), secs);
  if (limit_s > 0) std::printf(", limit %.0f s", limit_s);
  std::printf(")\n");
  for (const auto &n : o.notes) std::printf("       - %s\n", n.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

BigInt binom_sum(int r, int from) {
  BigInt s = 0;
  for (int i = from; i <= r; ++i) s += oracle::binom(r, i);
  return s;
}

std::string str(const BigInt &v) { return to_decimal(v); }

std::set<std::vector<int>> as_sets(const EnumerationResult &r) {
  std::set<std::vector<int>> out;
  for (const auto &s : r.vertex_sets) out.insert(s.items());
  return out;
}

const std::vector<std::pair<int, int>> kSplitCases = {{4, 2}, {4, 3}, {4, 5}, {5, 2}, {5, 3}};

} // namespace

int main() {
  criterion(1, "complete-host count s(K_l, K_r) = sum_{i>=l} binom(r,i), 3<=l<=r<=6", 60, [](Outcome &o) {
    int cases = 0;
    for (int r = 3; r <= 6; ++r)
      for (int l = 3; l <= r; ++l) {
        const BigInt got = count_distinguishable(complete_graph(r), Pattern::complete(l));
        const BigInt want = binom_sum(r, l);
        o.check(got == want, "l=" + std::to_string(l) + " r=" + std::to_string(r) + ": " + str(got) + " != " + str(want));
        ++cases;
      }
    o.detail << cases << " cases exact";
  });

  criterion(2, "cycle count s(K_{d+1}, K_3) = 2^{d+1} - binom(d+1,2) - d - 2, d+1 in 3..6", 30, [](Outcome &o) {
    for (int n = 3; n <= 6; ++n) {
      const int d = n - 1;
      const BigInt got = count_distinguishable(complete_graph(n), Pattern::complete(3));
      const BigInt want = BigInt(1) << n;
      const BigInt formula = want - BigInt(oracle::binom(n, 2)) - d - 2;
      o.check(got == formula, "d+1=" + std::to_string(n) + ": " + str(got) + " != " + str(formula));
      o.check(komlos_cycle_count(d) == formula, "closed form disagrees at d=" + std::to_string(d));
      o.detail << "K" << n << "=" << str(got) << " ";
    }
  });

  criterion(3, "split(l,t) is (K_l^-, t)-locally dense and s(K_l^-, G) <= 2^l (t+2)^{e(F)+2l}", 300, [](Outcome &o) {
    for (auto [l, t] : kSplitCases) {
      const auto split = split_construction(l, t);
      const Pattern f = Pattern::complete_minus(l);
      const auto dens = local_density(split.graph, f);
      const BigInt s = count_distinguishable(split.graph, f);
      const BigInt bound = bound_ii(l, static_cast<int>(f.size()), t);
      const std::string tag = "(" + std::to_string(l) + "," + std::to_string(t) + ")";
      o.check(dens.min_count >= static_cast<std::uint64_t>(t), tag + " density " + std::to_string(dens.min_count));
      o.check(s <= bound, tag + " s " + str(s) + " exceeds bound");
      o.detail << tag << " density=" << dens.min_count << " s=" << str(s) << " ";
    }
  });

  criterion(4, "every witness in the split hosts meets the per-path relations and |V(T) n B| <= 2l + e(F)", 300,
            [](Outcome &o) {
              std::uint64_t total = 0, bad = 0;
              for (auto [l, t] : kSplitCases) {
                const auto split = split_construction(l, t);
                const Pattern f = Pattern::complete_minus(l);
                const bool truncated = for_each_witness(split.graph, f, {}, {}, [&](const SubdivisionWitness &w) {
                  ++total;
                  const auto v = lemma5_violations(w, split.a, split.b);
                  if (!v.empty()) {
                    ++bad;
                    if (bad <= 5) o.check(false, v.front());
                  }
                });
                o.check(!truncated, "witness enumeration truncated");
              }
              o.check(bad == 0, std::to_string(bad) + " violating witnesses");
              o.detail << total << " witnesses, " << bad << " violations";
            });

  criterion(5, "extraction from 100 random TK_k witnesses (k<=6, n<=14) keeps every branch vertex", 120,
            [](Outcome &o) {
              std::mt19937_64 rng(20240501);
              std::uint64_t extractions = 0, bad = 0;
              for (int i = 0; i < 100; ++i) {
                const int k = 3 + static_cast<int>(rng() % 4);
                const int n = k + static_cast<int>(rng() % static_cast<unsigned>(15 - k));
                const auto planted = gen::planted_clique_subdivision(rng, k, n, 0.2);
                if (!validate_witness(planted.host, planted.witness).empty()) {
                  ++bad;
                  o.check(false, "generator produced an invalid witness");
                  continue;
                }
                for (int l = 2; l <= k; ++l) {
                  ++extractions;
                  const auto out = extract_subclique_subdivision(planted.host, planted.witness, l);
                  bool ok = validate_witness(planted.host, out).empty() && out.pattern.order() == l;
                  const auto vs = out.vertex_set();
                  for (int b : planted.witness.branch) ok = ok && vs.contains(b);
                  if (!ok) {
                    ++bad;
                    o.check(false, "witness " + std::to_string(i) + " l=" + std::to_string(l));
                  }
                }
              }
              o.detail << extractions << " extractions, " << bad << " violations";
            });

  criterion(6, "theorem_i_family on trivial TK_d gives 2^d - sum_{i<l} binom(d,i) distinguishable witnesses", 60,
            [](Outcome &o) {
              for (auto [d, l] : std::vector<std::pair<int, int>>{{4, 3}, {5, 3}, {5, 4}, {6, 4}}) {
                std::vector<int> vs(static_cast<std::size_t>(d));
                std::iota(vs.begin(), vs.end(), 0);
                const Graph g = complete_graph(d);
                const auto fam = theorem_i_family(g, trivial_clique_witness(vs), l);
                std::uint64_t want = 1ULL << d;
                for (int i = 0; i < l; ++i) want -= oracle::binom(d, i);
                std::set<std::vector<int>> traces;
                bool valid = true;
                for (const auto &w : fam) {
                  valid = valid && validate_witness(g, w).empty();
                  traces.insert(w.vertex_set().items());  // host = K_d, so the trace on X is the whole set
                }
                const std::string tag = "(" + std::to_string(d) + "," + std::to_string(l) + ")";
                o.check(fam.size() == want, tag + " size " + std::to_string(fam.size()) + " != " + std::to_string(want));
                o.check(traces.size() == fam.size(), tag + " traces not pairwise distinct");
                o.check(valid, tag + " invalid witness");
                o.detail << tag << "=" << fam.size() << " ";
              }
            });

  criterion(7, "book on an A-internal edge of split(4,t): |B| >= 2 t^{1-eps}/(l-1) at eps=1/2, family >= binom(|B|,2)",
            60, [](Outcome &o) {
              const int l = 4;
              const Fraction eps = parse_fraction("0.5");
              for (int t : {3, 5, 8}) {
                const auto split = split_construction(l, t);
                const Edge e(split.a.items()[0], split.a.items()[1]);
                const auto search = find_book_structure(split.graph, e, l);
                const std::size_t b = search.book.b.size();
                const double rhs = 2.0 * std::sqrt(double(t)) / (l - 1);
                const bool rel = book_size_relation(b, l, t, eps);
                o.check(book_violations(split.graph, search.book).empty(), "t=" + std::to_string(t) + " not a book");
                o.check(rel, "t=" + std::to_string(t) + " |B|=" + std::to_string(b) + " < " + std::to_string(rhs));
                const auto fam = theorem_iii_family(split.graph, search.book, l);
                std::set<std::vector<int>> sets;
                bool valid = true;
                for (const auto &w : fam) {
                  sets.insert(w.vertex_set().items());
                  valid = valid && validate_witness(split.graph, w).empty();
                }
                const auto need = oracle::binom(static_cast<int>(b), 2);
                o.check(sets.size() >= need, "t=" + std::to_string(t) + " family " + std::to_string(sets.size()));
                o.check(valid, "t=" + std::to_string(t) + " invalid family witness");
                char buf[160];
                std::snprintf(buf, sizeof buf, "t=%d |B|=%zu vs %.3f, sets=%zu>=%llu; ", t, b, rhs, sets.size(),
                              static_cast<unsigned long long>(need));
                o.detail << buf;
              }
            });

  criterion(8, "split(4,3) is (K_4^-, k, 3)-locally dense for k=3 and k=4; K_4 in F takes the clique path", 300,
            [](Outcome &o) {
              const auto split = split_construction(4, 3);
              const Pattern f = Pattern::complete_minus(4);
              for (int k : {4, 3}) {
                const auto r = k_local_density(split.graph, f, k);
                std::ostringstream classes;
                for (const auto &c : *r.per_class) classes << c.name << ":" << c.count << " ";
                o.detail << "k=" << k << " min=" << r.min_count << " [" << classes.str() << "] ";
                o.check(r.min_count >= 3, "k=" + std::to_string(k) + ": min over classes " +
                                              std::to_string(r.min_count) + " < 3 (classes " + classes.str() + ")");
              }
              const auto rep = verify_thm7(Pattern::complete(4), 4, 3);
              const bool delegated = rep.inputs.at("path") == "contains K_k" && rep.verdict == Verdict::holds;
              o.check(delegated, "K_4 delegation did not hold");
              o.detail << "K4 path=" << rep.inputs.at("path").get<std::string>() << " verdict=" << verdict_name(rep.verdict);
            });

  criterion(9, "subset and embed engines agree on 200 random graphs (n<=9) x {K3,K4,K4-,C4,P4}", 600, [](Outcome &o) {
    const std::vector<Pattern> patterns = {Pattern::complete(3), Pattern::complete(4), Pattern::complete_minus(4),
                                           Pattern::cycle(4), Pattern::path(4)};
    const double ps[] = {0.3, 0.5, 0.7};
    std::mt19937_64 rng(9009);
    int comparisons = 0, mismatches = 0;
    for (int i = 0; i < 200; ++i) {
      const int n = 4 + static_cast<int>(rng() % 6);
      const double p = ps[i % 3];
      const Graph g = oracle::random_graph(rng, n, p);
      for (const auto &f : patterns) {
        ++comparisons;
        const auto a = enumerate_distinguishable_subset(g, f);
        const auto b = enumerate_distinguishable_embed(g, f);
        if (a.truncated || b.truncated || as_sets(a) != as_sets(b)) {
          ++mismatches;
          if (mismatches <= 5) o.check(false, "graph " + std::to_string(i) + " pattern " + f.name());
        }
      }
    }
    o.check(mismatches == 0, std::to_string(mismatches) + " mismatches");
    o.detail << comparisons << " comparisons, " << mismatches << " mismatches";
  });

  criterion(10, "min-degree bound strictly exceeds e^{-1}(l-2) t^{1/(l-2)}, l in {3,4,5}, t in {1,10,100}", 10,
            [](Outcome &o) {
              for (int l : {3, 4, 5})
                for (long long t : {1LL, 10LL, 100LL}) {
                  const auto b = min_degree_lower_bound(l, t);
                  const auto exact = exceeds_closed_form(b.exact, l, t);
                  o.check(exact.value_or(false), "l=" + std::to_string(l) + " t=" + std::to_string(t));
                  char buf[64];
                  std::snprintf(buf, sizeof buf, "(%d,%lld): %ld>%.3f ", l, t, b.exact, b.closed_form);
                  o.detail << buf;
                }
            });

  criterion(11, "max_topological_clique(K_{r,r}) <= r+1 for r in {2,3,4}", 120, [](Outcome &o) {
    for (int r : {2, 3, 4}) {
      const auto top = max_topological_clique(complete_bipartite(r, r), r + 2);
      o.check(top.d <= r + 1, "r=" + std::to_string(r) + " found " + std::to_string(top.d));
      if (top.witness)
        o.check(validate_witness(complete_bipartite(r, r), *top.witness).empty(), "invalid witness");
      o.detail << "r=" << r << ":" << top.d << " ";
    }
  });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
