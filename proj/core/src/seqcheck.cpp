#include "harmonia/seqcheck.hpp"

#include <algorithm>
#include <sstream>

namespace harmonia {

std::string_view to_string(FailedCheck check) {
  switch (check) {
    case FailedCheck::kNotPermutation: return "not-permutation";
    case FailedCheck::kProductsCollide: return "products-collide";
    case FailedCheck::kSymmetryBroken: return "symmetry-broken";
    case FailedCheck::kRStarCenterBroken: return "r-star-center-broken";
  }
  return "unknown";
}

namespace {

void check_bound(const GroupSequence& s) {
  if (s.group == nullptr) throw InputError("sequence has no group");
  const int n = s.group->order();
  if (static_cast<int>(s.entries.size()) != n) {
    std::ostringstream out;
    out << "sequence length " << s.entries.size() << " does not match group order " << n;
    throw InputError(out.str());
  }
  for (Element e : s.entries) {
    if (e < 0 || e >= n) throw InputError("sequence entry out of range [0, n)");
  }
}

// Lexicographically smallest pair of positions holding equal values, or
// nullopt when all values are distinct. Values must already be in [0, n).
std::optional<std::pair<int, int>> collision_witness(std::span<const Element> values, int n) {
  std::vector<int> first(static_cast<std::size_t>(n), -1);
  std::vector<int> second(static_cast<std::size_t>(n), -1);
  bool any = false;
  for (int i = 0; i < static_cast<int>(values.size()); ++i) {
    const Element v = values[i];
    if (first[v] == -1) {
      first[v] = i;
    } else if (second[v] == -1) {
      second[v] = i;
      any = true;
    }
  }
  if (!any) return std::nullopt;
  std::pair<int, int> best{-1, -1};
  for (int v = 0; v < n; ++v) {
    if (second[v] == -1) continue;
    const std::pair<int, int> cand{first[v], second[v]};
    if (best.first == -1 || cand < best) best = cand;
  }
  return best;
}

}  // namespace

VerificationReport verify_harmonious(const GroupSequence& s) {
  check_bound(s);
  const FiniteGroup& g = *s.group;
  const int n = g.order();

  if (auto w = collision_witness(s.entries, n))
    return VerificationReport::fail(FailedCheck::kNotPermutation, *w);

  std::vector<Element> products(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    products[i] = g.op(s.entries[i], s.entries[(i + 1) % n]);
  if (auto w = collision_witness(products, n))
    return VerificationReport::fail(FailedCheck::kProductsCollide, *w);

  return VerificationReport::pass();
}

VerificationReport verify_symmetric_harmonious(const GroupSequence& s) {
  VerificationReport base = verify_harmonious(s);
  if (!base.verdict) return base;
  const FiniteGroup& g = *s.group;
  const int n = g.order();
  // i runs over 1..l-1 exactly; position 0 is exempt and l-i is never
  // reduced mod l.
  for (int i = 1; i < n; ++i) {
    if (g.op(s.entries[i], s.entries[n - i]) != 0)
      return VerificationReport::fail(FailedCheck::kSymmetryBroken, {i, n - i});
  }
  return VerificationReport::pass();
}

VerificationReport verify_r_sequence(const GroupSequence& s) {
  check_bound(s);
  const FiniteGroup& g = *s.group;
  const int n = g.order();

  if (auto w = collision_witness(s.entries, n))
    return VerificationReport::fail(FailedCheck::kNotPermutation, *w);

  std::vector<Element> quotients(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    quotients[i] = g.op(g.inverse(s.entries[i]), s.entries[(i + 1) % n]);
  if (auto w = collision_witness(quotients, n))
    return VerificationReport::fail(FailedCheck::kProductsCollide, *w);

  return VerificationReport::pass();
}

bool r_star_center_holds(const FiniteGroup& g, std::span<const Element> entries) {
  return g.op(entries[0], entries[2]) == entries[1] &&
         g.op(entries[2], entries[0]) == entries[1];
}

VerificationReport verify_r_star(const GroupSequence& s) {
  if (s.group == nullptr) throw InputError("sequence has no group");
  if (s.group->order() < 3)
    throw InputError("R* verification needs at least three positions");
  VerificationReport base = verify_r_sequence(s);
  if (!base.verdict) return base;
  if (!r_star_center_holds(*s.group, s.entries))
    return VerificationReport::fail(FailedCheck::kRStarCenterBroken, {0, 2});
  return VerificationReport::pass();
}

std::vector<Element> harmonious_to_complete_mapping(const GroupSequence& s) {
  VerificationReport report = verify_harmonious(s);
  if (!report.verdict)
    throw PreconditionError("harmonious_to_complete_mapping requires a harmonious sequence");
  const int n = s.group->order();
  std::vector<Element> phi(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) phi[s.entries[i]] = s.entries[(i + 1) % n];
  return phi;
}

bool is_complete_mapping(const FiniteGroup& g, std::span<const Element> phi) {
  const int n = g.order();
  if (static_cast<int>(phi.size()) != n)
    throw InputError("mapping length does not match group order");
  for (Element v : phi)
    if (v < 0 || v >= n) throw InputError("mapping value out of range [0, n)");

  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Element v : phi) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  std::fill(seen.begin(), seen.end(), 0);
  for (int x = 0; x < n; ++x) {
    const Element v = g.op(x, phi[x]);
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

int mapping_cycle_count(std::span<const Element> phi) {
  const int n = static_cast<int>(phi.size());
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (Element v : phi) {
    if (v < 0 || v >= n || hit[v]) throw InputError("mapping is not a bijection");
    hit[v] = 1;
  }
  std::fill(hit.begin(), hit.end(), 0);
  int cycles = 0;
  for (int x = 0; x < n; ++x) {
    if (hit[x]) continue;
    ++cycles;
    int y = x;
    while (!hit[y]) {
      hit[y] = 1;
      y = phi[y];
    }
  }
  return cycles;
}

bool hall_paige_condition(const FiniteGroup& g) {
  int m = g.order();
  int sylow2 = 1;
  while (m % 2 == 0) {
    m /= 2;
    sylow2 *= 2;
  }
  if (sylow2 == 1) return true;
  for (int x = 0; x < g.order(); ++x)
    if (element_order(g, x) == sylow2) return false;
  return true;
}

}  // namespace harmonia
