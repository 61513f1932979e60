#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace harmonia::test {

const std::vector<std::string>& corpus_specs() {
  static const std::vector<std::string> specs = {
      // odd
      "cyclic:1", "cyclic:3", "cyclic:5", "cyclic:7", "cyclic:9", "cyclic:15",
      "cyclic:27", "cyclic:45", "abelian:3,3", "abelian:3,9", "abelian:5,5",
      "abelian:3,3,3", "abelian:3,5", "frobenius:7:3", "heisenberg:3",
      "frobenius:13:3",
      // even
      "cyclic:2", "cyclic:4", "elementary2:2", "cyclic:6", "dihedral:3",
      "cyclic:8", "dihedral:4", "elementary2:3", "abelian:2,4", "cyclic:12",
      "dihedral:5", "cyclic:16", "abelian:4,4", "dihedral:6", "abelian:2,2,6",
      "cyclic:48", "dihedral:12", "elementary2:5",
  };
  return specs;
}

namespace {

std::vector<std::string> filter_by_parity(bool odd) {
  std::vector<std::string> out;
  for (const auto& spec : corpus_specs()) {
    const FiniteGroup g = make_builtin(spec);
    if ((g.order() % 2 == 1) == odd) out.push_back(spec);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& odd_corpus_specs() {
  static const std::vector<std::string> specs = filter_by_parity(true);
  return specs;
}

const std::vector<std::string>& even_corpus_specs() {
  static const std::vector<std::string> specs = filter_by_parity(false);
  return specs;
}

std::vector<std::vector<Element>> enumerate_passing(
    const FiniteGroup& g, const std::function<bool(const GroupSequence&)>& pred) {
  std::vector<Element> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<Element>> passing;
  do {
    const GroupSequence s{&g, perm};
    if (pred(s)) passing.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return passing;
}

std::vector<Element> commutator_closure_bruteforce(const FiniteGroup& g) {
  const int n = g.order();
  std::set<Element> members{0};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      members.insert(g.op(g.op(g.op(g.inverse(x), g.inverse(y)), x), y));
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<Element> next = members;
    for (Element a : members)
      for (Element b : members) next.insert(g.op(a, b));
    if (next.size() != members.size()) {
      members = std::move(next);
      grew = true;
    }
  }
  return {members.begin(), members.end()};
}

bool hall_paige_bruteforce(const FiniteGroup& g) {
  const int n = g.order();
  int sylow2 = 1;
  int m = n;
  while (m % 2 == 0) {
    m /= 2;
    sylow2 *= 2;
  }
  if (sylow2 == 1) return true;

  std::set<std::vector<Element>> subgroups;
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      const std::vector<Element> gens{x, y};
      const SubgroupView h = subgroup_closure(g, gens);
      if (static_cast<int>(h.members.size()) == sylow2) subgroups.insert(h.members);
    }
  }
  for (const auto& members : subgroups) {
    for (Element e : members) {
      if (element_order(g, e) == sylow2) return false;  // cyclic Sylow-2 found
    }
  }
  return true;
}

}  // namespace harmonia::test
