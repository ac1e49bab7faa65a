#include "domgame/classify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "domgame/enumerate.hpp"
#include "domgame/families.hpp"
#include "domgame/game.hpp"
#include "domgame/graph6.hpp"
#include "domgame/invariants.hpp"

namespace domgame {

namespace {

VerificationResult pass(std::string claim) {
  return {std::move(claim), true, std::nullopt};
}

VerificationResult fail(std::string claim, const Graph& g,
                        std::string observed) {
  return {std::move(claim), false, Counterexample{g, std::move(observed)}};
}

VerificationResult expect_pair(std::string claim, const Graph& g,
                               int got_cg, int want_cg, int got_tcg,
                               int want_tcg) {
  if (got_cg == want_cg && got_tcg == want_tcg) return pass(std::move(claim));
  std::ostringstream obs;
  obs << "gamma_cg=" << got_cg << " (want " << want_cg << "), gamma_tcg="
      << got_tcg << " (want " << want_tcg << ")";
  return fail(std::move(claim), g, obs.str());
}

}  // namespace

ClassLabel classify(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) {
    throw std::invalid_argument(
        "classification needs a connected graph on at least two vertices");
  }
  ClassLabel label;
  label.gamma_cg = solve(g, GameVariant::connected, Player::dominator);
  label.gamma_tcg = solve(g, GameVariant::total_connected, Player::dominator);
  label.cls = label.gamma_tcg - label.gamma_cg;
  return label;
}

bool is_tree(const Graph& g) {
  return is_connected(g) && g.size() == g.order() - 1;
}

bool is_complete(const Graph& g) {
  return 2 * g.size() == g.order() * (g.order() - 1);
}

int leaf_count(const Graph& g) {
  int leaves = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) ++leaves;
  }
  return leaves;
}

int tree_game_value(const Graph& g) {
  if (!is_tree(g) || g.order() < 2) {
    throw std::invalid_argument(
        "the closed form needs a tree on at least two vertices");
  }
  if (g.order() == 2) return 1;
  return g.order() - leaf_count(g);
}

int tree_class(const Graph& g) {
  if (!is_tree(g) || g.order() < 3) {
    throw std::invalid_argument(
        "the closed form needs a tree on at least three vertices");
  }
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2) continue;
    bool has_leaf = false;
    for (int u : g.neighbors(v)) {
      if (g.degree(u) == 1) {
        has_leaf = true;
        break;
      }
    }
    if (!has_leaf) return 0;
  }
  return 1;
}

VerificationResult verify_class_trichotomy(const Graph& g) {
  ClassLabel label = classify(g);
  if (label.cls >= 0 && label.cls <= 2) return pass("class-trichotomy");
  std::ostringstream obs;
  obs << "gamma_cg=" << label.gamma_cg << " gamma_tcg=" << label.gamma_tcg
      << " difference=" << label.cls;
  return fail("class-trichotomy", g, obs.str());
}

VerificationResult verify_tcg_bounds(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) {
    throw std::invalid_argument(
        "the bounds need a connected graph on at least two vertices");
  }
  int gc = connected_domination_number(g).size;
  int tcg = solve(g, GameVariant::total_connected, Player::dominator);
  bool ok = gc == 1 ? tcg == 2 : (gc <= tcg && tcg <= 2 * gc - 1);
  if (ok) return pass("tcg-bounds");
  std::ostringstream obs;
  obs << "gamma_c=" << gc << " gamma_tcg=" << tcg;
  return fail("tcg-bounds", g, obs.str());
}

VerificationResult verify_non_inclusive_class0(const Graph& g) {
  if (!is_non_inclusive(g)) return pass("non-inclusive-class0 (vacuous)");
  ClassLabel label = classify(g);
  if (label.cls == 0) return pass("non-inclusive-class0");
  std::ostringstream obs;
  obs << "non-inclusive but gamma_cg=" << label.gamma_cg
      << " gamma_tcg=" << label.gamma_tcg;
  return fail("non-inclusive-class0", g, obs.str());
}

VerificationResult verify_corona_class1(const Graph& g,
                                        const std::vector<Graph>& hs) {
  if (!is_connected(g)) {
    throw std::invalid_argument("the corona base must be connected");
  }
  Graph k = generalized_corona(g, hs);
  std::ostringstream claim;
  claim << "corona-class1(base n=" << g.order() << "; attachments";
  for (const Graph& h : hs) claim << ' ' << h.order();
  claim << ')';
  ClassLabel label = classify(k);
  return expect_pair(claim.str(), k, label.gamma_cg, g.order(),
                     label.gamma_tcg, g.order() + 1);
}

VerificationResult verify_gr_class2(int r) {
  Graph g = family_g(r);
  std::string claim = "gr-class2(r=" + std::to_string(r) + ")";
  auto cds = connected_domination_number(g);
  VertexSet expected = VertexSet::first(r);
  for (int i = r + 1; i < 2 * r; ++i) expected = expected.with(i);
  auto all_min = minimum_connected_dominating_sets(g);
  ClassLabel label = classify(g);
  bool ok = cds.size == 2 * r - 1 && all_min.size() == 1 &&
            all_min.front() == expected && label.gamma_cg == 2 * r - 1 &&
            label.gamma_tcg == 2 * r + 1;
  if (ok) return pass(claim);
  std::ostringstream obs;
  obs << "gamma_c=" << cds.size << " minimum-witness-count="
      << all_min.size() << " gamma_cg=" << label.gamma_cg
      << " gamma_tcg=" << label.gamma_tcg;
  return fail(claim, g, obs.str());
}

std::vector<VerificationResult> reference_value_suite() {
  std::vector<VerificationResult> out;

  {
    ClassLabel f8 = classify(family_f(2));
    out.push_back(expect_pair("F(2) game values (4,4)", family_f(2),
                              f8.gamma_cg, 4, f8.gamma_tcg, 4));
    ClassLabel f12 = classify(family_f(3));
    if (f12.cls == 0) {
      out.push_back(pass("F(3) is Class 0"));
    } else {
      std::ostringstream obs;
      obs << "gamma_cg=" << f12.gamma_cg << " gamma_tcg=" << f12.gamma_tcg;
      out.push_back(fail("F(3) is Class 0", family_f(3), obs.str()));
    }
  }

  {
    Graph d = family_d15();
    GameReport rep = game_report(d);
    out.push_back(expect_pair("D15 game values (9,9)", d, rep.gamma_cg, 9,
                              rep.gamma_tcg, 9));

    std::vector<std::pair<int, int>> twins;
    for (int u = 0; u < d.order(); ++u) {
      for (int v = u + 1; v < d.order(); ++v) {
        if (d.closed_neighbors(u) == d.closed_neighbors(v)) {
          twins.emplace_back(u, v);
        }
      }
    }
    if (twins.size() == 1) {
      out.push_back(pass("D15 has exactly one closed twin pair"));
      auto [u, v] = twins.front();
      bool ok = rep.c_of_v[u] == 10 && rep.t_of_v[u] == 10 &&
                rep.c_of_v[v] == 10 && rep.t_of_v[v] == 10;
      if (ok) {
        out.push_back(pass("D15 twin openings cost 10"));
      } else {
        std::ostringstream obs;
        obs << "c(" << d.label(u) << ")=" << rep.c_of_v[u] << " t("
            << d.label(u) << ")=" << rep.t_of_v[u] << " c(" << d.label(v)
            << ")=" << rep.c_of_v[v] << " t(" << d.label(v)
            << ")=" << rep.t_of_v[v];
        out.push_back(fail("D15 twin openings cost 10", d, obs.str()));
      }
    } else {
      out.push_back(fail("D15 has exactly one closed twin pair", d,
                         "twin pair count=" + std::to_string(twins.size())));
    }
  }

  out.push_back(verify_gr_class2(3));
  out.push_back(verify_gr_class2(4));

  {
    Graph p = direct_product(paw(), complete(2));
    ClassLabel label = classify(p);
    out.push_back(expect_pair("paw direct K2 game values (5,5)", p,
                              label.gamma_cg, 5, label.gamma_tcg, 5));
  }

  {
    Graph p1 = direct_product(corona(cycle(3)), complete(2));
    ClassLabel l1 = classify(p1);
    out.push_back(expect_pair("corona(C3) direct K2 game values (6,7)", p1,
                              l1.gamma_cg, 6, l1.gamma_tcg, 7));
    Graph p2 = direct_product(corona(cycle(5)), complete(2));
    ClassLabel l2 = classify(p2);
    out.push_back(expect_pair("corona(C5) direct K2 game values (10,11)", p2,
                              l2.gamma_cg, 10, l2.gamma_tcg, 11));
  }

  for (int n = 3; n <= 8; ++n) {
    for (bool use_star : {true, false}) {
      Graph g = use_star ? star(n) : complete(n);
      std::string claim = (use_star ? "star(" : "complete(") +
                          std::to_string(n) + ") tcg value 2";
      int tcg = solve(g, GameVariant::total_connected, Player::dominator);
      if (tcg == 2) {
        out.push_back(pass(claim));
      } else {
        out.push_back(fail(claim, g, "gamma_tcg=" + std::to_string(tcg)));
      }
    }
  }

  {
    Graph k1 = complete(1);
    Graph k2 = complete(2);
    out.push_back(verify_corona_class1(complete(2), {k1, k1}));
    out.push_back(verify_corona_class1(complete(2), {k2, k2}));
    out.push_back(verify_corona_class1(complete(2), {k1, k2}));
    out.push_back(verify_corona_class1(path(3), {k1, k1, k1}));
    out.push_back(verify_corona_class1(path(3), {k2, k1, k2}));
    out.push_back(verify_corona_class1(path(3), {k2, k2, k2}));
    out.push_back(verify_corona_class1(cycle(3), {k1, k1, k1}));
    out.push_back(verify_corona_class1(cycle(3), {k2, k1, k2}));
    out.push_back(verify_corona_class1(cycle(3), {k2, k2, k2}));
    out.push_back(verify_corona_class1(path(4), {k1, k1, k1, k1}));
    out.push_back(verify_corona_class1(path(4), {k2, k1, k1, k2}));
    out.push_back(verify_corona_class1(path(4), {k2, k2, k2, k2}));
  }

  return out;
}

namespace {

// Splits the mask list into one contiguous block per worker and merges the
// per-block accumulators in block order, so output does not depend on the
// worker count.
template <typename Acc, typename Fn>
std::vector<Acc> scan_blocks(int n, const std::vector<std::uint32_t>& masks,
                             int workers, Fn fn) {
  std::size_t blocks = std::max(1, workers);
  blocks = std::min(blocks, std::max<std::size_t>(1, masks.size()));
  std::vector<Acc> accs(blocks);
  if (masks.empty()) return accs;
  std::size_t per = (masks.size() + blocks - 1) / blocks;
  if (blocks == 1) {
    for (std::uint32_t mask : masks) fn(accs[0], graph_from_edge_mask(n, mask));
    return accs;
  }
  std::vector<std::thread> threads;
  threads.reserve(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    std::size_t lo = b * per;
    std::size_t hi = std::min(masks.size(), lo + per);
    threads.emplace_back([&, b, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) {
        fn(accs[b], graph_from_edge_mask(n, masks[i]));
      }
    });
  }
  for (auto& t : threads) t.join();
  return accs;
}

}  // namespace

ScanOutcome exhaustive_claim_scan(int max_n, int workers) {
  if (max_n < 2 || max_n > kEnumerationCap) {
    throw std::invalid_argument("the exhaustive scan covers 2..7 vertices");
  }
  ScanOutcome outcome;
  for (int n = 2; n <= max_n; ++n) {
    auto masks = connected_edge_masks(n);
    auto accs = scan_blocks<ScanOutcome>(
        n, masks, workers, [](ScanOutcome& acc, const Graph& g) {
          ++acc.graphs;
          int cg = solve(g, GameVariant::connected, Player::dominator);
          int tcg = solve(g, GameVariant::total_connected, Player::dominator);
          int cls = tcg - cg;
          if (cls < 0 || cls > 2) {
            std::ostringstream obs;
            obs << "gamma_cg=" << cg << " gamma_tcg=" << tcg;
            acc.failures.push_back(
                {"class-trichotomy", false, Counterexample{g, obs.str()}});
          }
          int gc = connected_domination_number(g).size;
          bool bounds_ok = gc == 1 ? tcg == 2 : (gc <= tcg && tcg <= 2 * gc - 1);
          if (!bounds_ok) {
            std::ostringstream obs;
            obs << "gamma_c=" << gc << " gamma_tcg=" << tcg;
            acc.failures.push_back(
                {"tcg-bounds", false, Counterexample{g, obs.str()}});
          }
          if (is_non_inclusive(g) && cls != 0) {
            std::ostringstream obs;
            obs << "non-inclusive but gamma_cg=" << cg << " gamma_tcg=" << tcg;
            acc.failures.push_back(
                {"non-inclusive-class0", false, Counterexample{g, obs.str()}});
          }
        });
    for (auto& acc : accs) {
      outcome.graphs += acc.graphs;
      for (auto& f : acc.failures) outcome.failures.push_back(std::move(f));
    }
  }
  return outcome;
}

std::optional<RealizabilityEntry> realizability_entry(const Graph& g) {
  int gc = connected_domination_number(g).size;
  if (gc < 2) return std::nullopt;
  return RealizabilityEntry{
      gc, solve(g, GameVariant::total_connected, Player::dominator)};
}

void RealizabilityReport::add(const RealizabilityEntry& e) {
  ++buckets[e.gamma_c][e.gamma_tcg];
  ++scanned;
}

void RealizabilityReport::merge(const RealizabilityReport& other) {
  for (const auto& [gc, inner] : other.buckets) {
    for (const auto& [tcg, count] : inner) buckets[gc][tcg] += count;
  }
  scanned += other.scanned;
  skipped += other.skipped;
}

RealizabilityReport realizability_scan(int max_n, int workers) {
  if (max_n < 2 || max_n > kEnumerationCap) {
    throw std::invalid_argument("the realizability scan covers 2..7 vertices");
  }
  RealizabilityReport report;
  for (int n = 2; n <= max_n; ++n) {
    auto masks = connected_edge_masks(n);
    auto accs = scan_blocks<RealizabilityReport>(
        n, masks, workers, [](RealizabilityReport& acc, const Graph& g) {
          if (auto entry = realizability_entry(g)) {
            acc.add(*entry);
          } else {
            ++acc.skipped;
          }
        });
    for (const auto& acc : accs) report.merge(acc);
  }
  return report;
}

std::optional<SGameEqualityEntry> sgame_equality_entry(const Graph& g) {
  if (is_complete(g)) return std::nullopt;
  return SGameEqualityEntry{
      solve(g, GameVariant::connected, Player::staller),
      solve(g, GameVariant::total_connected, Player::staller)};
}

void SGameEqualityReport::merge(const SGameEqualityReport& other) {
  checked += other.checked;
  skipped_complete += other.skipped_complete;
  equal += other.equal;
  counterexamples.insert(counterexamples.end(), other.counterexamples.begin(),
                         other.counterexamples.end());
}

SGameEqualityReport sgame_equality_scan(int max_n, int workers) {
  if (max_n < 2 || max_n > kEnumerationCap) {
    throw std::invalid_argument("the equality scan covers 2..7 vertices");
  }
  SGameEqualityReport report;
  for (int n = 2; n <= max_n; ++n) {
    auto masks = connected_edge_masks(n);
    auto accs = scan_blocks<SGameEqualityReport>(
        n, masks, workers, [](SGameEqualityReport& acc, const Graph& g) {
          auto entry = sgame_equality_entry(g);
          if (!entry) {
            ++acc.skipped_complete;
            return;
          }
          ++acc.checked;
          if (entry->cg_s == entry->tcg_s) {
            ++acc.equal;
          } else {
            acc.counterexamples.push_back(
                {emit_graph6(g), entry->cg_s, entry->tcg_s});
          }
        });
    for (const auto& acc : accs) report.merge(acc);
  }
  return report;
}

}  // namespace domgame
