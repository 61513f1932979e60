#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "harmonia/group.hpp"

namespace harmonia {

// An ordering of all elements of a group, claimed to be a permutation.
// Non-owning: the referenced group must outlive the sequence.
struct GroupSequence {
  const FiniteGroup* group = nullptr;
  std::vector<Element> entries;
};

enum class FailedCheck {
  kNotPermutation,
  kProductsCollide,
  kSymmetryBroken,
  kRStarCenterBroken,
};

// Stable tag used in CLI output: "not-permutation", "products-collide",
// "symmetry-broken", "r-star-center-broken".
std::string_view to_string(FailedCheck check);

// Verdict of a sequence check. On failure, `witness` holds the two
// offending positions: the lexicographically smallest pair of positions
// holding equal elements/products, or (i, l-i) for a broken symmetry pair,
// or (0, 2) for a broken R* center.
struct VerificationReport {
  bool verdict = false;
  std::optional<FailedCheck> failed_check;
  std::optional<std::pair<int, int>> witness;

  static VerificationReport pass() { return {true, std::nullopt, std::nullopt}; }
  static VerificationReport fail(FailedCheck check, std::pair<int, int> witness) {
    return {false, check, witness};
  }
};

// True iff the entries are a permutation and the cyclic consecutive
// products g_i * g_{i+1} are one too. Throws InputError on a length
// mismatch with the group order.
VerificationReport verify_harmonious(const GroupSequence& s);

// verify_harmonious plus g_i * g_{l-i} == identity for 1 <= i <= l-1.
// Position 0 is exempt; the index l-i is never reduced mod l.
VerificationReport verify_symmetric_harmonious(const GroupSequence& s);

// True iff the entries are a permutation and the cyclic quotients
// g_i^-1 * g_{i+1} are one too.
VerificationReport verify_r_sequence(const GroupSequence& s);

// verify_r_sequence plus the centered condition g0 g2 = g2 g0 = g1.
// Throws InputError for sequences shorter than 3.
VerificationReport verify_r_star(const GroupSequence& s);

// The R* center condition on its own; used by verify_r_star.
bool r_star_center_holds(const FiniteGroup& g, std::span<const Element> entries);

// The successor map phi(g_i) = g_{i+1 mod l} of a harmonious sequence,
// returned as a function table indexed by element. Guaranteed to be a
// complete mapping consisting of a single |G|-cycle. Throws
// PreconditionError when the input is not harmonious.
std::vector<Element> harmonious_to_complete_mapping(const GroupSequence& s);

// True iff phi is a bijection and x -> x * phi(x) is a bijection.
bool is_complete_mapping(const FiniteGroup& g, std::span<const Element> phi);

// Number of cycles in the functional graph of a bijection. Throws
// InputError on non-bijective input.
int mapping_cycle_count(std::span<const Element> phi);

// Write |G| = 2^a * m with m odd; true iff a == 0 or no element has order
// 2^a. Equivalent to every Sylow 2-subgroup being trivial or non-cyclic
// (a Sylow 2-subgroup is cyclic exactly when an element of order 2^a
// exists).
bool hall_paige_condition(const FiniteGroup& g);

}  // namespace harmonia
