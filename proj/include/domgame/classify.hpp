#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "domgame/graph.hpp"

namespace domgame {

struct ClassLabel {
  int gamma_cg = 0;
  int gamma_tcg = 0;
  // gamma_tcg - gamma_cg.  Lands in {0,1,2} for every connected graph;
  // a value outside that range would disprove the trichotomy, so callers
  // report it through verify_class_trichotomy instead of crashing here.
  int cls = 0;
};

// Needs a connected graph on at least two vertices (the total variant is
// undefined on a single vertex).
ClassLabel classify(const Graph& g);

bool is_tree(const Graph& g);
bool is_complete(const Graph& g);
int leaf_count(const Graph& g);

// Closed form for trees: n minus the number of leaves, except the
// two-vertex tree where one move already finishes the game.
int tree_game_value(const Graph& g);

// Closed form for trees on at least three vertices: Class 1 exactly when
// every internal vertex has a leaf neighbor, Class 0 otherwise.  No tree
// is Class 2.
int tree_class(const Graph& g);

struct Counterexample {
  Graph graph;
  std::string observed;
};

struct VerificationResult {
  std::string claim;
  bool holds = true;
  std::optional<Counterexample> counterexample;
};

// gamma_cg <= gamma_tcg <= gamma_cg + 2.
VerificationResult verify_class_trichotomy(const Graph& g);

// gamma_c = 1 forces gamma_tcg = 2; otherwise
// gamma_c <= gamma_tcg <= 2 gamma_c - 1.
VerificationResult verify_tcg_bounds(const Graph& g);

// Non-inclusive closed neighborhoods force Class 0.  Vacuously holds when
// some neighborhood is contained in another.
VerificationResult verify_non_inclusive_class0(const Graph& g);

// A generalized corona over connected G is Class 1 with game values
// n(G) and n(G) + 1.
VerificationResult verify_corona_class1(const Graph& g,
                                        const std::vector<Graph>& hs);

// The cactus family G(r), r >= 3: connected domination number 2r - 1 with
// a unique minimum witness, game values 2r - 1 and 2r + 1, so Class 2.
VerificationResult verify_gr_class2(int r);

// Regression suite over the named families with frozen game values.
std::vector<VerificationResult> reference_value_suite();

struct ScanOutcome {
  std::uint64_t graphs = 0;
  std::vector<VerificationResult> failures;
};

// Checks class-trichotomy, tcg-bounds and non-inclusive-class0 on every
// connected labeled graph with 2..max_n vertices.  Deterministic output
// for any worker count.
ScanOutcome exhaustive_claim_scan(int max_n, int workers = 1);

struct RealizabilityEntry {
  int gamma_c = 0;
  int gamma_tcg = 0;
};

// gamma_c and gamma_tcg for one connected graph; nullopt when
// gamma_c < 2, which the realizability question leaves out of scope.
std::optional<RealizabilityEntry> realizability_entry(const Graph& g);

// Which values in [gamma_c, 2*gamma_c - 1] does gamma_tcg actually take?
struct RealizabilityReport {
  std::map<int, std::map<int, std::uint64_t>> buckets;
  std::uint64_t scanned = 0;
  std::uint64_t skipped = 0;
  void add(const RealizabilityEntry& e);
  void merge(const RealizabilityReport& other);
};

RealizabilityReport realizability_scan(int max_n, int workers = 1);

struct SGameCounterexample {
  std::string graph6;
  int cg_s = 0;
  int tcg_s = 0;
};

struct SGameEqualityEntry {
  int cg_s = 0;
  int tcg_s = 0;
};

// Staller-start values for one graph; nullopt for complete graphs, where
// the two values are known to differ and which the equality question
// excludes.
std::optional<SGameEqualityEntry> sgame_equality_entry(const Graph& g);

struct SGameEqualityReport {
  std::uint64_t checked = 0;
  std::uint64_t skipped_complete = 0;
  std::uint64_t equal = 0;
  std::vector<SGameCounterexample> counterexamples;
  void merge(const SGameEqualityReport& other);
};

// Does the Staller-start value of the two variants agree on every
// connected non-complete graph?  Reports, never asserts.
SGameEqualityReport sgame_equality_scan(int max_n, int workers = 1);

}  // namespace domgame
