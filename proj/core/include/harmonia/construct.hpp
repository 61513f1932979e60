#pragma once

#include <vector>

#include "harmonia/group.hpp"
#include "harmonia/seqcheck.hpp"

namespace harmonia {

// Per-coset representatives and their suffix products, the data driving one
// lifting step over a quotient of order m.
//
//   reps[0] == identity, reps[i] lies in the coset at quotient-sequence
//   position i, and reps pair into mutual inverses:
//       reps[i] * reps[m-i] == identity            for 1 <= i <= m-1.
//   suffix_products[i] == reps[i+1] * ... * reps[m-1], with
//       suffix_products[m-1] == identity.
//
// The pairing forces suffix_products[0] == identity and the reflection law
//   reps[m-r] * suffix_products[m-r] == suffix_products[r].
struct LiftScaffold {
  std::vector<Element> reps;
  std::vector<Element> suffix_products;
};

// Base case: the sequence 0, 1, ..., n-1 over a canonically indexed cyclic
// group (table (i+j) mod n). Consecutive sums are 2i+1, a permutation
// because gcd(2, n) = 1, and i + (n-i) == 0 gives the symmetry. Throws
// ParityError for even n and InputError when the table is not the
// canonical cyclic one.
GroupSequence cyclic_symmetric_harmonious(const FiniteGroup& cyclic);

// Representatives for the lifting step: reps[0] = identity; for
// 1 <= i <= (m-1)/2 the minimal element of the coset at quotient-sequence
// position i, with reps[m-i] forced to its inverse. quotient_seq must be a
// symmetric harmonious sequence of q.quotient anchored at 0 (AnchorError
// otherwise; PreconditionError when verification fails).
std::vector<Element> choose_paired_reps(const FiniteGroup& g, const QuotientData& q,
                                        const GroupSequence& quotient_seq);

// Suffix products of paired representatives, computed right to left.
// Asserts suffix_products[0] == identity and the reflection law before
// returning; a violation (impossible for genuinely paired reps) raises
// InternalError.
LiftScaffold suffix_products(const FiniteGroup& g, const std::vector<Element>& reps);

// Lifts symmetric harmonious sequences of a normal subgroup H (order n)
// and of the quotient G/H (order m) to one of G:
//
//   out[p*m]     = h[2p mod n]
//   out[p*m + r] = k_r * mu_r * h[(2p+1) mod n] * mu_r^-1    for r >= 1,
//
// where cosets are reordered so position r means the coset at
// quotient_seq position r. sub_seq holds H's sequence embedded as element
// indices of g (it must enumerate q.cosets[0] and start at 0). The output
// is verified symmetric harmonious before returning; each out[p*m + r]
// lies in the coset at quotient_seq position r.
//
// Degenerate cases are accepted: a trivial subgroup (n = 1) reproduces the
// quotient sequence through the representatives, and a trivial quotient
// (m = 1) degenerates to the reindexing out[p] = sub_seq[2p mod n]. The
// reindexing is outside what the lifting identities guarantee and is not
// harmonious for every input; such calls throw PreconditionError when the
// reindexed sequence fails verification.
GroupSequence lift(const FiniteGroup& g, const QuotientData& q,
                   const GroupSequence& quotient_seq,
                   const std::vector<Element>& sub_seq,
                   LiftScaffold* scaffold_out = nullptr);

// Everything one lifting step saw, recorded by synthesize for inspection.
// Owns copies so records stay valid after the recursion's scratch groups
// are gone.
struct LiftRecord {
  FiniteGroup group;                      // G of this step
  QuotientData quotient_data;             // quotient + coset partition
  std::vector<Element> quotient_entries;  // sequence of the quotient
  std::vector<Element> sub_entries;       // subgroup sequence, G indices
  LiftScaffold scaffold;
  std::vector<Element> output;            // the lifted sequence
};

// Produces a symmetric harmonious sequence for any odd-order group:
//   - trivial group: [0]
//   - cyclic: powers of the smallest generator
//   - abelian non-cyclic: recurse on the closure of the smallest-index
//     element of prime order and on the quotient, then lift
//   - nonabelian: recurse on the derived subgroup and its quotient, then
//     lift
// The output is always re-verified before returning. Throws ParityError
// for even order and NonSolvabilityError if the derived subgroup fails to
// shrink (unreachable for genuine odd-order input).
GroupSequence synthesize(const FiniteGroup& g);

// As above, appending one LiftRecord per lifting step performed (in
// post-order of the recursion).
GroupSequence synthesize(const FiniteGroup& g, std::vector<LiftRecord>* trace);

}  // namespace harmonia
