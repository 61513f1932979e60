#pragma once

#include <functional>
#include <string>
#include <vector>

#include "harmonia/group.hpp"
#include "harmonia/seqcheck.hpp"

namespace harmonia::test {

// Named groups used across the suites: odd and even orders, abelian and
// not, cyclic and not. All orders <= 48.
const std::vector<std::string>& corpus_specs();
const std::vector<std::string>& odd_corpus_specs();
const std::vector<std::string>& even_corpus_specs();

// Every permutation of 0..n-1 the predicate accepts, in lexicographic
// order. Brute force; keep n <= 8.
std::vector<std::vector<Element>> enumerate_passing(
    const FiniteGroup& g, const std::function<bool(const GroupSequence&)>& pred);

// Commutator closure computed independently of derived_subgroup: collect
// x^-1 y^-1 x y over all pairs, then close under products by fixpoint.
std::vector<Element> commutator_closure_bruteforce(const FiniteGroup& g);

// Hall-Paige via explicit subgroup enumeration: closures of all subsets of
// size <= 2, keep those of full Sylow-2 order, call the condition violated
// iff one of them is cyclic.
bool hall_paige_bruteforce(const FiniteGroup& g);

}  // namespace harmonia::test
