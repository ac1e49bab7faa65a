#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "domgame/classify.hpp"
#include "domgame/graph.hpp"

namespace domgame::cli {

// Builds a graph from a spec like "direct(paw,complete(2))".  Bare names
// work for parameterless families ("paw", "D15"); the run() layer expands
// "G --r 3" and "F --k 2" into "G(3)" and "F(2)" before calling this.
Graph family_spec_parse(const std::string& text);

// Prints verification results in "json", "tsv" or "human" form and maps
// them to a process exit code: 0 when every claim holds, 2 otherwise.
// The summary mentions scanned_graphs when with_scan_count is set.
int report_verification(const std::vector<VerificationResult>& results,
                        const std::string& format, std::ostream& out,
                        std::uint64_t scanned_graphs = 0,
                        bool with_scan_count = false);

// Prints the Staller-start comparison, counterexamples first and the
// summary last, and returns 0 when both variants agreed on every graph
// checked, 2 otherwise.
int report_sgame_equality(const SGameEqualityReport& rep, int max_n,
                          const std::string& format, std::ostream& out);

// Dispatches one invocation; args holds everything after the program
// name.  Returns 0 on success, 1 on a usage error, 2 when a checked
// claim turned out false (counterexamples are printed before exit).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace domgame::cli
