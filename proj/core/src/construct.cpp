#include "harmonia/construct.hpp"

#include <algorithm>
#include <sstream>

namespace harmonia {

namespace {

void require_odd(int n, const char* what) {
  if (n % 2 == 0) {
    std::ostringstream out;
    out << what << " has even order " << n
        << "; only odd-order groups admit symmetric harmonious sequences";
    throw ParityError(out.str());
  }
}

void check_quotient_consistency(const FiniteGroup& g, const QuotientData& q) {
  const int m = q.quotient.order();
  if (static_cast<int>(q.cosets.size()) != m ||
      static_cast<int>(q.coset_of.size()) != g.order() ||
      m * static_cast<int>(q.cosets[0].size()) != g.order()) {
    throw InputError("quotient data does not belong to the given group");
  }
}

void check_quotient_sequence(const QuotientData& q, const GroupSequence& quotient_seq) {
  const GroupSequence view{&q.quotient, quotient_seq.entries};
  if (!verify_symmetric_harmonious(view).verdict)
    throw PreconditionError("quotient sequence is not symmetric harmonious");
  if (quotient_seq.entries[0] != 0)
    throw AnchorError("quotient sequence must start at the identity coset");
}

// Symmetric harmonious check for a subgroup sequence given by parent
// element indices: entries must enumerate `members`, products must hit
// every member once, and opposite positions must multiply to the identity.
void check_embedded_subgroup_sequence(const FiniteGroup& g,
                                      const std::vector<Element>& members,
                                      const std::vector<Element>& entries) {
  const int n = static_cast<int>(members.size());
  if (static_cast<int>(entries.size()) != n)
    throw InputError("subgroup sequence length does not match the subgroup order");
  if (entries[0] != 0)
    throw AnchorError("subgroup sequence must start at the identity");
  std::vector<Element> sorted = entries;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != members)
    throw PreconditionError("subgroup sequence must enumerate the subgroup");

  std::vector<Element> products(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) products[i] = g.op(entries[i], entries[(i + 1) % n]);
  std::sort(products.begin(), products.end());
  if (products != members)
    throw PreconditionError("subgroup sequence is not harmonious within the subgroup");
  for (int i = 1; i < n; ++i) {
    if (g.op(entries[i], entries[n - i]) != 0)
      throw PreconditionError("subgroup sequence is not symmetric");
  }
}

}  // namespace

GroupSequence cyclic_symmetric_harmonious(const FiniteGroup& cyclic) {
  const int n = cyclic.order();
  require_odd(n, "group");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (cyclic.op(i, j) != (i + j) % n)
        throw InputError("cyclic_symmetric_harmonious expects the canonical cyclic table");
  GroupSequence s{&cyclic, std::vector<Element>(static_cast<std::size_t>(n))};
  for (int i = 0; i < n; ++i) s.entries[i] = i;
  return s;
}

std::vector<Element> choose_paired_reps(const FiniteGroup& g, const QuotientData& q,
                                        const GroupSequence& quotient_seq) {
  check_quotient_consistency(g, q);
  const int m = q.quotient.order();
  require_odd(m, "quotient");
  check_quotient_sequence(q, quotient_seq);

  std::vector<Element> reps(static_cast<std::size_t>(m), 0);
  const int half = (m - 1) / 2;
  for (int i = 1; i <= half; ++i) {
    // Minimal element of the coset at quotient-sequence position i; the
    // opposite position gets the forced inverse.
    const Element k = q.cosets[quotient_seq.entries[i]].front();
    reps[i] = k;
    reps[m - i] = g.inverse(k);
    if (q.coset_of[reps[m - i]] != quotient_seq.entries[m - i])
      throw InternalError("forced inverse landed outside its paired coset");
  }
  return reps;
}

LiftScaffold suffix_products(const FiniteGroup& g, const std::vector<Element>& reps) {
  const int m = static_cast<int>(reps.size());
  if (m < 1) throw InputError("empty representative list");
  if (reps[0] != 0) throw PreconditionError("reps[0] must be the identity");
  for (int i = 1; i < m; ++i) {
    if (g.op(reps[i], reps[m - i]) != 0)
      throw PreconditionError("representatives are not paired into inverses");
  }

  std::vector<Element> mu(static_cast<std::size_t>(m));
  mu[m - 1] = 0;
  for (int r = m - 1; r >= 1; --r) mu[r - 1] = g.op(reps[r], mu[r]);

  // The pairing makes the full product telescope away and mirrors prefix
  // inverses onto suffixes; a violation here means the reps were bad.
  if (mu[0] != 0) throw InternalError("suffix product of all representatives is not the identity");
  for (int r = 1; r < m; ++r) {
    if (g.op(reps[m - r], mu[m - r]) != mu[r])
      throw InternalError("suffix-product reflection law fails");
  }
  return LiftScaffold{reps, std::move(mu)};
}

GroupSequence lift(const FiniteGroup& g, const QuotientData& q,
                   const GroupSequence& quotient_seq,
                   const std::vector<Element>& sub_seq,
                   LiftScaffold* scaffold_out) {
  check_quotient_consistency(g, q);
  const int m = q.quotient.order();
  const int n = static_cast<int>(q.cosets[0].size());
  require_odd(m, "quotient");
  require_odd(n, "subgroup");
  check_quotient_sequence(q, quotient_seq);
  check_embedded_subgroup_sequence(g, q.cosets[0], sub_seq);

  LiftScaffold scaffold =
      suffix_products(g, choose_paired_reps(g, q, quotient_seq));
  const std::vector<Element>& k = scaffold.reps;
  const std::vector<Element>& mu = scaffold.suffix_products;

  std::vector<Element> out(static_cast<std::size_t>(m) * n);
  for (int p = 0; p < n; ++p) {
    out[static_cast<std::size_t>(p) * m] = sub_seq[(2 * p) % n];
    const Element h_odd = sub_seq[(2 * p + 1) % n];
    for (int r = 1; r < m; ++r) {
      const Element conj = g.op(g.op(mu[r], h_odd), g.inverse(mu[r]));
      out[static_cast<std::size_t>(p) * m + r] = g.op(k[r], conj);
    }
  }

  GroupSequence lifted{&g, std::move(out)};
  if (!verify_symmetric_harmonious(lifted).verdict) {
    // A single-coset lift degenerates to the reindexing p -> sub_seq[2p mod n],
    // which the lifting identities do not cover and which is not harmonious
    // for every input.
    if (m == 1)
      throw PreconditionError(
          "single-coset lift: the reindexed subgroup sequence is not harmonious");
    throw InternalError("lifted sequence failed verification");
  }
  if (scaffold_out != nullptr) *scaffold_out = std::move(scaffold);
  return lifted;
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

GroupSequence verified(GroupSequence s) {
  if (!verify_symmetric_harmonious(s).verdict)
    throw InternalError("synthesized sequence failed verification");
  return s;
}

}  // namespace

GroupSequence synthesize(const FiniteGroup& g) { return synthesize(g, nullptr); }

GroupSequence synthesize(const FiniteGroup& g, std::vector<LiftRecord>* trace) {
  const int n = g.order();
  require_odd(n, "group");

  if (n == 1) return verified(GroupSequence{&g, {0}});

  // Cyclic case: powers of the smallest generator. Consecutive products are
  // gen^(2i+1), all distinct because n is odd.
  for (int x = 1; x < n; ++x) {
    if (element_order(g, x) == n) {
      std::vector<Element> entries(static_cast<std::size_t>(n));
      Element acc = 0;
      for (int i = 0; i < n; ++i) {
        entries[i] = acc;
        acc = g.op(acc, x);
      }
      return verified(GroupSequence{&g, std::move(entries)});
    }
  }

  SubgroupView h;
  if (is_abelian(g)) {
    // Smallest-index element of prime order spans the recursion subgroup.
    Element pick = -1;
    for (int x = 1; x < n && pick == -1; ++x) {
      if (is_prime(element_order(g, x))) pick = x;
    }
    if (pick == -1) throw InternalError("no element of prime order found");
    h = subgroup_closure(g, std::vector<Element>{pick});
  } else {
    h = derived_subgroup(g);
    if (static_cast<int>(h.members.size()) == n)
      throw NonSolvabilityError(
          "derived subgroup equals the whole group; the table cannot be a "
          "genuine odd-order group");
  }

  QuotientData q = quotient(g, h);
  GroupSequence quotient_seq = synthesize(q.quotient, trace);

  const FiniteGroup sub = subgroup_group(g, h);
  GroupSequence sub_local = synthesize(sub, trace);
  std::vector<Element> sub_in_g(sub_local.entries.size());
  for (std::size_t i = 0; i < sub_local.entries.size(); ++i)
    sub_in_g[i] = h.members[sub_local.entries[i]];

  LiftScaffold scaffold;
  GroupSequence out = lift(g, q, quotient_seq, sub_in_g, &scaffold);

  if (trace != nullptr) {
    trace->push_back(LiftRecord{g, std::move(q), quotient_seq.entries,
                                std::move(sub_in_g), std::move(scaffold),
                                out.entries});
  }
  return out;
}

}  // namespace harmonia
