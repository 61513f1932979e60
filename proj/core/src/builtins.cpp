#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "harmonia/group.hpp"

namespace harmonia {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

int parse_positive(const std::string& s, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || value < 1) {
    throw InputError(std::string("malformed builtin spec: ") + what +
                     " must be a positive integer, got '" + s + "'");
  }
  return value;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int mul_mod(int a, int b, int m) {
  return static_cast<int>(static_cast<long long>(a) * b % m);
}

int multiplicative_order(int s, int p) {
  int k = 1;
  int acc = s % p;
  while (acc != 1) {
    acc = mul_mod(acc, s, p);
    ++k;
  }
  return k;
}

void check_order_cap(long long order, const std::string& spec) {
  if (order > max_group_order()) {
    std::ostringstream out;
    out << "builtin '" << spec << "' has order " << order
        << ", above the configured maximum " << max_group_order();
    throw SizeError(out.str());
  }
}

ValidateOptions builder_options(long long order) {
  return ValidateOptions{.check_associativity = order <= 512};
}

FiniteGroup build_abelian(const std::string& args) {
  const std::vector<std::string> factors = split(args, ',');
  if (factors.empty()) throw InputError("malformed builtin spec: abelian needs factors");
  FiniteGroup g = make_cyclic(parse_positive(factors[0], "abelian factor"));
  for (std::size_t i = 1; i < factors.size(); ++i)
    g = make_direct_product(g, make_cyclic(parse_positive(factors[i], "abelian factor")));
  return g;
}

// Z_p ⋊ Z_q with (a1,b1)(a2,b2) = (a1 + s^b1 a2, b1 + b2); s is the
// smallest constant of multiplicative order exactly q mod p.
FiniteGroup build_frobenius(const std::string& spec, int p, int q) {
  if (!is_prime(p)) throw InputError("frobenius requires a prime p");
  if ((p - 1) % q != 0) throw InputError("frobenius requires q dividing p-1");
  const long long order = static_cast<long long>(p) * q;
  check_order_cap(order, spec);

  int s = 1;
  if (q > 1) {
    s = 0;
    for (int cand = 2; cand < p; ++cand) {
      if (multiplicative_order(cand, p) == q) {
        s = cand;
        break;
      }
    }
    if (s == 0) throw InternalError("no action constant of the requested order");
  }

  std::vector<int> s_pow(static_cast<std::size_t>(q), 1);
  for (int b = 1; b < q; ++b) s_pow[b] = mul_mod(s_pow[b - 1], s, p);

  const int n = static_cast<int>(order);
  std::vector<Element> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const int a1 = i / q, b1 = i % q;
    for (int j = 0; j < n; ++j) {
      const int a2 = j / q, b2 = j % q;
      const int a = (a1 + mul_mod(s_pow[b1], a2, p)) % p;
      const int b = (b1 + b2) % q;
      table[static_cast<std::size_t>(i) * n + j] = a * q + b;
    }
  }
  return from_cayley_table(n, std::move(table), builder_options(order));
}

// Upper unitriangular 3x3 matrices over Z_p, encoded as triples (a, b, c)
// with index a*p^2 + b*p + c and product
// (a1,b1,c1)(a2,b2,c2) = (a1+a2, b1+b2, c1+c2+a1*b2).
FiniteGroup build_heisenberg(const std::string& spec, int p) {
  if (!is_prime(p)) throw InputError("heisenberg requires a prime p");
  const long long order = static_cast<long long>(p) * p * p;
  check_order_cap(order, spec);
  const int n = static_cast<int>(order);
  std::vector<Element> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const int a1 = i / (p * p), b1 = (i / p) % p, c1 = i % p;
    for (int j = 0; j < n; ++j) {
      const int a2 = j / (p * p), b2 = (j / p) % p, c2 = j % p;
      const int a = (a1 + a2) % p;
      const int b = (b1 + b2) % p;
      const int c = (c1 + c2 + a1 * b2) % p;
      table[static_cast<std::size_t>(i) * n + j] = (a * p + b) * p + c;
    }
  }
  return from_cayley_table(n, std::move(table), builder_options(order));
}

// Rotations 0..n-1, reflections n..2n-1; reflection n+j acts as r^j s with
// s r s = r^-1.
FiniteGroup build_dihedral(const std::string& spec, int n) {
  const long long order = 2LL * n;
  check_order_cap(order, spec);
  const int m = static_cast<int>(order);
  auto compose = [n](int x, int y) -> int {
    const bool xr = x >= n, yr = y >= n;
    const int a = xr ? x - n : x;
    const int b = yr ? y - n : y;
    if (!xr && !yr) return (a + b) % n;
    if (!xr && yr) return (b + a) % n + n;
    if (xr && !yr) return (a - b + n) % n + n;
    return (a - b + n) % n;
  };
  std::vector<Element> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[static_cast<std::size_t>(i) * m + j] = compose(i, j);
  return from_cayley_table(m, std::move(table), builder_options(order));
}

FiniteGroup build_elementary2(const std::string& spec, int k) {
  if (k >= 31) throw SizeError("builtin '" + spec + "' is far above any representable order");
  check_order_cap(1LL << k, spec);
  const int n = 1 << k;
  std::vector<Element> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(i) * n + j] = i ^ j;
  return from_cayley_table(n, std::move(table), builder_options(n));
}

}  // namespace

FiniteGroup make_builtin(const std::string& spec) {
  const std::vector<std::string> parts = split(spec, ':');
  const std::string& kind = parts[0];

  FiniteGroup g = [&]() -> FiniteGroup {
    if (kind == "cyclic" && parts.size() == 2) {
      return make_cyclic(parse_positive(parts[1], "cyclic order"));
    }
    if (kind == "abelian" && parts.size() == 2) {
      return build_abelian(parts[1]);
    }
    if (kind == "frobenius" && parts.size() == 3) {
      return build_frobenius(spec, parse_positive(parts[1], "frobenius p"),
                             parse_positive(parts[2], "frobenius q"));
    }
    if (kind == "heisenberg" && parts.size() == 2) {
      return build_heisenberg(spec, parse_positive(parts[1], "heisenberg p"));
    }
    if (kind == "dihedral" && parts.size() == 2) {
      return build_dihedral(spec, parse_positive(parts[1], "dihedral n"));
    }
    if (kind == "elementary2" && parts.size() == 2) {
      return build_elementary2(spec, parse_positive(parts[1], "elementary2 k"));
    }
    throw InputError("malformed builtin spec '" + spec +
                     "'; expected cyclic:n, abelian:d1,d2,..., frobenius:p:q, "
                     "heisenberg:p, dihedral:n, or elementary2:k");
  }();

  g.set_label(spec);
  return g;
}

}  // namespace harmonia
