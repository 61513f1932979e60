#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "harmonia/errors.hpp"

namespace harmonia {

using Element = int;

// Largest group order constructors accept. Defaults to 10000; the
// HARMONIA_MAX_ORDER environment variable overrides it.
int max_group_order();

struct ValidateOptions {
  // The O(n^3) associativity scan. On by default; the opt-out exists for
  // tables larger than 512 elements whose associativity is already known
  // from how they were generated.
  bool check_associativity = true;
};

// A finite group of order n as a validated Cayley table over elements
// 0..n-1, with the identity pinned at element 0.
//
// Invariants, all established at construction:
//   - table[0][j] == j and table[i][0] == i
//   - every row and every column is a permutation of 0..n-1
//   - table[table[i][j]][k] == table[i][table[j][k]]
//   - every element has a two-sided inverse
//
// Instances are immutable after construction and safe to share across
// threads; every operation on them is a pure function.
class FiniteGroup {
 public:
  int order() const { return order_; }

  // Product of two elements.
  Element op(Element a, Element b) const {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }

  // The unique y with op(x, y) == op(y, x) == 0.
  Element inverse(Element x) const { return inverse_[x]; }

  std::span<const Element> row(Element i) const {
    return {table_.data() + static_cast<std::size_t>(i) * order_,
            static_cast<std::size_t>(order_)};
  }

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  friend FiniteGroup from_cayley_table(int order, std::vector<Element> table,
                                       const ValidateOptions& opts);

  FiniteGroup(int order, std::vector<Element> table, std::vector<Element> inverse)
      : order_(order), table_(std::move(table)), inverse_(std::move(inverse)) {}

  int order_;
  std::vector<Element> table_;    // row-major n*n
  std::vector<Element> inverse_;  // precomputed two-sided inverses
  std::string label_;
};

// Validates every FiniteGroup invariant and returns the group.
// Throws StructureError (with a witness) on a Latin or associativity
// failure, NormalizationError when the table has a two-sided identity that
// is not element 0, and SizeError above max_group_order().
FiniteGroup from_cayley_table(int order, std::vector<Element> table,
                              const ValidateOptions& opts = {});
FiniteGroup from_cayley_table(const std::vector<std::vector<Element>>& table,
                              const ValidateOptions& opts = {});

// The cyclic group Z_n: table[i][j] = (i+j) mod n.
FiniteGroup make_cyclic(int n);

// Direct product on pairs enumerated row-major: (x, y) -> x*|b| + y.
FiniteGroup make_direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Builds one of the named group families:
//   cyclic:n         Z_n
//   abelian:d1,d2,…  Z_d1 x Z_d2 x …
//   frobenius:p:q    Z_p ⋊ Z_q, q | p-1, action constant of multiplicative
//                    order q (smallest such constant)
//   heisenberg:p     upper unitriangular 3x3 matrices over Z_p, order p^3
//   dihedral:n       order 2n; rotations 0..n-1 then reflections
//   elementary2:k    (Z_2)^k with XOR indexing
FiniteGroup make_builtin(const std::string& spec);

// Smallest k >= 1 with x^k = identity.
int element_order(const FiniteGroup& g, Element x);

bool is_abelian(const FiniteGroup& g);

// A subset of a group's elements closed under products (hence inverses),
// with normality computed by the conjugation test. Non-owning: `parent`
// must outlive the view.
struct SubgroupView {
  const FiniteGroup* parent = nullptr;
  std::vector<Element> members;  // sorted; always contains 0
  bool is_normal = false;
};

// Smallest subgroup containing the generators.
SubgroupView subgroup_closure(const FiniteGroup& g, std::span<const Element> generators);

// Closure of all commutators x^-1 y^-1 x y. Always normal.
SubgroupView derived_subgroup(const FiniteGroup& g);

// First (conjugator, member, conjugate) triple with the conjugate outside
// `members`, or nullopt when the subgroup is normal.
std::optional<std::array<Element, 3>> normality_witness(const FiniteGroup& g,
                                                        std::span<const Element> members);

// Left cosets of a subgroup: the coset containing 0 first, the remaining
// cosets ordered by their minimal element. coset_of maps each parent
// element to its coset index.
struct CosetPartition {
  std::vector<std::vector<Element>> cosets;  // each sorted
  std::vector<int> coset_of;
};

CosetPartition cosets_of(const FiniteGroup& g, const SubgroupView& h);

// A quotient group together with the coset partition it came from.
// cosets[0] is the subgroup itself, so the quotient identity is the coset
// of the identity; coset_of is a surjective homomorphism onto the quotient.
struct QuotientData {
  FiniteGroup quotient;
  std::vector<std::vector<Element>> cosets;
  std::vector<int> coset_of;
};

// Quotient by a normal subgroup. Throws NormalityError (with a conjugation
// witness) when h is not normal.
QuotientData quotient(const FiniteGroup& g, const SubgroupView& h);

// The subgroup reindexed as a standalone group: local element i is parent
// element h.members[i], so the parent identity is local element 0.
FiniteGroup subgroup_group(const FiniteGroup& g, const SubgroupView& h);

}  // namespace harmonia
