#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "harmonia/seqcheck.hpp"

namespace harmonia {

// Exhaustive-search order caps. Chosen so worst-case desk-scale searches
// finish in seconds; override with SearchOptions::allow_large.
inline constexpr int kSymmetricSearchCap = 15;
inline constexpr int kHarmoniousSearchCap = 12;
inline constexpr int kRStarSearchCap = 12;

struct SearchOptions {
  std::size_t max_results = 0;  // 0 = unlimited
  bool allow_large = false;     // override the exhaustive-order cap
  bool up_to_rotation = false;  // search_harmonious only: pin position 0 to
                                // the identity, one sequence per rotation class
};

// Result of a backtracking search. If exhausted is true and found is
// empty, no sequence with the target property exists. Every found
// sequence passes the corresponding verifier; the list is sorted
// lexicographically so results are deterministic.
struct SearchOutcome {
  std::vector<GroupSequence> found;
  bool exhausted = false;
  std::uint64_t nodes_visited = 0;
};

// Backtracking over symmetric arrangements: positions i and l-i are
// assigned together as an inverse pair, position 0 is forced to the
// identity when l is odd (a proved consequence, soundness property-tested
// against unpruned search), and partial consecutive-product collisions
// prune. Exhaustive unless truncated by max_results.
SearchOutcome search_symmetric_harmonious(const FiniteGroup& g,
                                          const SearchOptions& options = {});

// Positional backtracking with consecutive-product collision pruning.
SearchOutcome search_harmonious(const FiniteGroup& g, const SearchOptions& options = {});

// Positional backtracking over the R-sequence quotients with the centered
// condition g0 g2 = g2 g0 = g1 applied at depth 3. Throws InputError for
// the trivial group (the center condition needs three positions).
SearchOutcome search_r_star(const FiniteGroup& g, const SearchOptions& options = {});

}  // namespace harmonia
