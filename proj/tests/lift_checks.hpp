#pragma once

#include <optional>
#include <sstream>
#include <string>

#include "harmonia/construct.hpp"
#include "harmonia/seqcheck.hpp"

namespace harmonia::test {

// Checks everything a recorded lifting step must satisfy:
//   - representative pairing k_i k_{m-i} = 1 and k_0 = 1
//   - suffix products: mu_0 = 1, the recurrence mu_{r-1} = k_r mu_r, and
//     the reflection law k_{m-r} mu_{m-r} = mu_r
//   - the three consecutive-product case identities
//       r = 0:      g_i g_{i+1} = h_{2p} h_{2p+1} mu_1^-1
//       0 < r < m-1: g_i g_{i+1} = mu_{r-1} (h_{2p+1})^2 mu_{r+1}^-1
//       r = m-1:    g_i g_{i+1} = k_{m-1} h_{2p+1} h_{2p+2}
//   - the pairing g_i g_{mn-i} = 1 for 1 <= i <= mn-1
//   - coset membership: g_{pm+r} lies in the coset at quotient-sequence
//     position r
//   - the output passes verify_symmetric_harmonious
// Returns a description of the first failure, or nullopt when all hold.
inline std::optional<std::string> check_lift_record(const LiftRecord& rec) {
  const FiniteGroup& g = rec.group;
  const QuotientData& q = rec.quotient_data;
  const int m = q.quotient.order();
  const int n = static_cast<int>(rec.sub_entries.size());
  const int l = m * n;
  const auto& k = rec.scaffold.reps;
  const auto& mu = rec.scaffold.suffix_products;
  const auto& h = rec.sub_entries;
  const auto& out = rec.output;

  auto fail = [](const std::string& what) { return std::optional<std::string>(what); };
  auto at = [](const char* tag, int a, int b) {
    std::ostringstream s;
    s << tag << " fails at (" << a << ", " << b << ")";
    return s.str();
  };

  if (static_cast<int>(k.size()) != m || static_cast<int>(mu.size()) != m)
    return fail("scaffold size mismatch");
  if (static_cast<int>(out.size()) != l || l != g.order())
    return fail("output size mismatch");

  if (k[0] != 0) return fail("k_0 is not the identity");
  for (int i = 1; i < m; ++i)
    if (g.op(k[i], k[m - i]) != 0) return fail(at("rep pairing", i, m - i));

  if (mu[0] != 0) return fail("mu_0 is not the identity");
  for (int r = 1; r < m; ++r) {
    if (mu[r - 1] != g.op(k[r], mu[r])) return fail(at("mu recurrence", r - 1, r));
    if (g.op(k[m - r], mu[m - r]) != mu[r]) return fail(at("reflection law", m - r, r));
  }

  for (int p = 0; p < n; ++p)
    for (int r = 0; r < m; ++r)
      if (q.coset_of[out[p * m + r]] != rec.quotient_entries[r])
        return fail(at("coset membership", p, r));

  for (int p = 0; p < n; ++p) {
    const Element h_odd = h[(2 * p + 1) % n];
    for (int r = 0; r < m; ++r) {
      const int i = p * m + r;
      const Element prod = g.op(out[i], out[(i + 1) % l]);
      Element expected;
      if (r == 0 && m >= 2) {
        expected = g.op(g.op(h[(2 * p) % n], h_odd), g.inverse(mu[1]));
      } else if (r == m - 1 && m >= 2) {
        expected = g.op(k[m - 1], g.op(h_odd, h[(2 * p + 2) % n]));
      } else if (r > 0) {
        expected = g.op(g.op(mu[r - 1], g.op(h_odd, h_odd)), g.inverse(mu[r + 1]));
      } else {
        continue;  // m == 1: no case identity applies
      }
      if (prod != expected) return fail(at("case identity", p, r));
    }
  }

  for (int i = 1; i < l; ++i)
    if (g.op(out[i], out[l - i]) != 0) return fail(at("output pairing", i, l - i));

  const GroupSequence seq{&g, out};
  if (!verify_symmetric_harmonious(seq).verdict)
    return fail("output failed verify_symmetric_harmonious");

  return std::nullopt;
}

}  // namespace harmonia::test
