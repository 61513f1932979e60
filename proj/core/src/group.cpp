#include "harmonia/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace harmonia {

int max_group_order() {
  if (const char* env = std::getenv("HARMONIA_MAX_ORDER")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && end != nullptr && *end == '\0' && value > 0 &&
        value <= std::numeric_limits<int>::max()) {
      return static_cast<int>(value);
    }
  }
  return 10000;
}

namespace {

std::string describe(const char* what, int i, int j, int k) {
  std::ostringstream out;
  out << what << " at (" << i << ", " << j << ", " << k << ")";
  return out.str();
}

// Latin check for one line (row or column) of the table.
bool is_permutation_line(const auto& get, int n) {
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int t = 0; t < n; ++t) {
    Element v = get(t);
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

FiniteGroup from_cayley_table(int order, std::vector<Element> table,
                              const ValidateOptions& opts) {
  if (order < 1) throw InputError("group order must be at least 1");
  if (order > max_group_order()) {
    std::ostringstream out;
    out << "group order " << order << " exceeds the configured maximum "
        << max_group_order();
    throw SizeError(out.str());
  }
  const std::size_t n = static_cast<std::size_t>(order);
  if (table.size() != n * n) throw InputError("Cayley table is not square");
  for (Element v : table) {
    if (v < 0 || v >= order)
      throw InputError("Cayley table entry out of range [0, n)");
  }

  auto at = [&](int i, int j) -> Element { return table[static_cast<std::size_t>(i) * order + j]; };

  for (int i = 0; i < order; ++i) {
    if (!is_permutation_line([&](int j) { return at(i, j); }, order)) {
      std::ostringstream out;
      out << "row " << i << " of the table is not a permutation of 0.." << order - 1;
      throw StructureError(out.str());
    }
  }
  for (int j = 0; j < order; ++j) {
    if (!is_permutation_line([&](int i) { return at(i, j); }, order)) {
      std::ostringstream out;
      out << "column " << j << " of the table is not a permutation of 0.." << order - 1;
      throw StructureError(out.str());
    }
  }

  // Identity must be element 0: row 0 and column 0 are the identity maps.
  bool zero_is_identity = true;
  for (int j = 0; j < order && zero_is_identity; ++j) {
    if (at(0, j) != j || at(j, 0) != j) zero_is_identity = false;
  }
  if (!zero_is_identity) {
    for (int e = 1; e < order; ++e) {
      bool two_sided = true;
      for (int j = 0; j < order && two_sided; ++j) {
        if (at(e, j) != j || at(j, e) != j) two_sided = false;
      }
      if (two_sided) {
        std::ostringstream out;
        out << "identity is element " << e
            << ", not 0; reindex the table with the normalize tool";
        throw NormalizationError(out.str());
      }
    }
    throw StructureError("table has no two-sided identity element");
  }

  if (opts.check_associativity) {
    for (int i = 0; i < order; ++i) {
      for (int j = 0; j < order; ++j) {
        const Element ij = at(i, j);
        for (int k = 0; k < order; ++k) {
          if (at(ij, k) != at(i, at(j, k)))
            throw StructureError(describe("associativity fails", i, j, k));
        }
      }
    }
  }

  std::vector<Element> inverse(n, -1);
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      if (at(x, y) == 0) {
        if (at(y, x) != 0) {
          std::ostringstream out;
          out << "element " << x << " has no two-sided inverse";
          throw StructureError(out.str());
        }
        inverse[x] = y;
        break;
      }
    }
  }

  return FiniteGroup(order, std::move(table), std::move(inverse));
}

FiniteGroup from_cayley_table(const std::vector<std::vector<Element>>& table,
                              const ValidateOptions& opts) {
  const int order = static_cast<int>(table.size());
  std::vector<Element> flat;
  flat.reserve(static_cast<std::size_t>(order) * order);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != order)
      throw InputError("Cayley table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return from_cayley_table(order, std::move(flat), opts);
}

namespace {

// Internal constructors skip the O(n^3) scan above 512 elements; their
// tables are associative by construction.
ValidateOptions builder_options(int order) {
  return ValidateOptions{.check_associativity = order <= 512};
}

}  // namespace

FiniteGroup make_cyclic(int n) {
  if (n < 1) throw InputError("cyclic group order must be positive");
  if (n > max_group_order()) throw SizeError("cyclic group order exceeds the configured maximum");
  std::vector<Element> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
  FiniteGroup g = from_cayley_table(n, std::move(table), builder_options(n));
  g.set_label("cyclic:" + std::to_string(n));
  return g;
}

FiniteGroup make_direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const long long order = static_cast<long long>(a.order()) * b.order();
  if (order > max_group_order()) {
    std::ostringstream out;
    out << "direct product order " << order << " exceeds the configured maximum "
        << max_group_order();
    throw SizeError(out.str());
  }
  const int n = static_cast<int>(order);
  const int bn = b.order();
  std::vector<Element> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const int xi = i / bn, yi = i % bn;
    for (int j = 0; j < n; ++j) {
      const int xj = j / bn, yj = j % bn;
      table[static_cast<std::size_t>(i) * n + j] = a.op(xi, xj) * bn + b.op(yi, yj);
    }
  }
  FiniteGroup g = from_cayley_table(n, std::move(table), builder_options(n));
  if (!a.label().empty() && !b.label().empty()) g.set_label(a.label() + "x" + b.label());
  return g;
}

int element_order(const FiniteGroup& g, Element x) {
  if (x < 0 || x >= g.order()) throw InputError("element index out of range");
  int k = 1;
  Element acc = x;
  while (acc != 0) {
    acc = g.op(acc, x);
    ++k;
  }
  return k;
}

bool is_abelian(const FiniteGroup& g) {
  const int n = g.order();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.op(i, j) != g.op(j, i)) return false;
  return true;
}

SubgroupView subgroup_closure(const FiniteGroup& g, std::span<const Element> generators) {
  const int n = g.order();
  std::vector<char> present(static_cast<std::size_t>(n), 0);
  std::vector<Element> members;
  auto add = [&](Element x) {
    if (!present[x]) {
      present[x] = 1;
      members.push_back(x);
    }
  };
  add(0);
  for (Element x : generators) {
    if (x < 0 || x >= n) throw InputError("generator index out of range");
    add(x);
  }
  // Each element, once dequeued, is multiplied against everything known so
  // far; later arrivals pick up the remaining pairs on their own turn.
  for (std::size_t head = 0; head < members.size(); ++head) {
    const Element a = members[head];
    for (std::size_t j = 0; j < members.size(); ++j) {
      add(g.op(a, members[j]));
      add(g.op(members[j], a));
    }
  }
  std::sort(members.begin(), members.end());
  if (n % static_cast<int>(members.size()) != 0)
    throw InternalError("subgroup size does not divide the group order");
  const bool normal = !normality_witness(g, members).has_value();
  return SubgroupView{&g, std::move(members), normal};
}

SubgroupView derived_subgroup(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Element> commutators;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const Element c = g.op(g.op(g.op(g.inverse(x), g.inverse(y)), x), y);
      if (!seen[c]) {
        seen[c] = 1;
        commutators.push_back(c);
      }
    }
  }
  SubgroupView view = subgroup_closure(g, commutators);
  if (!view.is_normal) throw InternalError("derived subgroup failed the conjugation test");
  return view;
}

std::optional<std::array<Element, 3>> normality_witness(const FiniteGroup& g,
                                                        std::span<const Element> members) {
  const int n = g.order();
  std::vector<char> present(static_cast<std::size_t>(n), 0);
  for (Element m : members) present[m] = 1;
  for (int a = 0; a < n; ++a) {
    const Element inv_a = g.inverse(a);
    for (Element h : members) {
      const Element c = g.op(g.op(a, h), inv_a);
      if (!present[c]) return std::array<Element, 3>{a, h, c};
    }
  }
  return std::nullopt;
}

namespace {

void check_is_subgroup(const FiniteGroup& g, const SubgroupView& h) {
  const int n = g.order();
  if (h.members.empty()) throw InputError("subgroup has no members");
  std::vector<char> present(static_cast<std::size_t>(n), 0);
  for (Element m : h.members) {
    if (m < 0 || m >= n) throw InputError("subgroup member out of range");
    present[m] = 1;
  }
  if (!present[0]) throw InputError("subgroup does not contain the identity");
  for (Element a : h.members)
    for (Element b : h.members)
      if (!present[g.op(a, b)]) throw InputError("subgroup is not closed under products");
  if (n % static_cast<int>(h.members.size()) != 0)
    throw InputError("subgroup size does not divide the group order");
}

}  // namespace

CosetPartition cosets_of(const FiniteGroup& g, const SubgroupView& h) {
  check_is_subgroup(g, h);
  const int n = g.order();
  CosetPartition part;
  part.coset_of.assign(static_cast<std::size_t>(n), -1);
  // Ascending scan discovers the identity coset first, then cosets in
  // order of their minimal element.
  for (int x = 0; x < n; ++x) {
    if (part.coset_of[x] != -1) continue;
    const int index = static_cast<int>(part.cosets.size());
    std::vector<Element> coset;
    coset.reserve(h.members.size());
    for (Element m : h.members) coset.push_back(g.op(x, m));
    std::sort(coset.begin(), coset.end());
    for (Element e : coset) part.coset_of[e] = index;
    part.cosets.push_back(std::move(coset));
  }
  return part;
}

QuotientData quotient(const FiniteGroup& g, const SubgroupView& h) {
  check_is_subgroup(g, h);
  if (auto witness = normality_witness(g, h.members)) {
    std::ostringstream out;
    out << "subgroup is not normal: " << (*witness)[0] << " * " << (*witness)[1]
        << " * " << (*witness)[0] << "^-1 = " << (*witness)[2]
        << " lies outside the subgroup";
    throw NormalityError(out.str(), (*witness)[0], (*witness)[1], (*witness)[2]);
  }
  CosetPartition part = cosets_of(g, h);
  const int m = static_cast<int>(part.cosets.size());
  std::vector<Element> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    const Element rep_i = part.cosets[i].front();
    for (int j = 0; j < m; ++j) {
      table[static_cast<std::size_t>(i) * m + j] = part.coset_of[g.op(rep_i, part.cosets[j].front())];
    }
  }
  FiniteGroup q = from_cayley_table(m, std::move(table), builder_options(m));
  return QuotientData{std::move(q), std::move(part.cosets), std::move(part.coset_of)};
}

FiniteGroup subgroup_group(const FiniteGroup& g, const SubgroupView& h) {
  check_is_subgroup(g, h);
  const int m = static_cast<int>(h.members.size());
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < m; ++i) local[h.members[i]] = i;
  std::vector<Element> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[static_cast<std::size_t>(i) * m + j] = local[g.op(h.members[i], h.members[j])];
  return from_cayley_table(m, std::move(table), builder_options(m));
}

}  // namespace harmonia
