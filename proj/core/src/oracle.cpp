#include "harmonia/oracle.hpp"

#include <algorithm>
#include <sstream>

namespace harmonia {

namespace {

// Shared backtracking state: partial assignment, used elements, and
// incremental bookkeeping of the cyclic products (or R-quotients) that are
// already determined.
struct SearchState {
  const FiniteGroup& g;
  const int n;
  const bool quotient_products;
  std::vector<Element> pos;        // -1 = unassigned
  std::vector<char> used;          // element already placed
  std::vector<char> product_used;  // product value already taken
  std::vector<char> product_done;  // product index already computed
  std::uint64_t nodes = 0;
  std::vector<std::vector<Element>> found;
  std::size_t max_results;
  bool truncated = false;

  SearchState(const FiniteGroup& g, bool quotient_products, std::size_t max_results)
      : g(g),
        n(g.order()),
        quotient_products(quotient_products),
        pos(static_cast<std::size_t>(g.order()), -1),
        used(static_cast<std::size_t>(g.order()), 0),
        product_used(static_cast<std::size_t>(g.order()), 0),
        product_done(static_cast<std::size_t>(g.order()), 0),
        max_results(max_results) {}

  Element product_at(int i) const {
    const Element a = pos[i];
    const Element b = pos[(i + 1) % n];
    return quotient_products ? g.op(g.inverse(a), b) : g.op(a, b);
  }

  // Marks every product adjacent to freshly assigned position p that has
  // become computable, appending the marked indices to `marked`. Returns
  // false on a collision (the caller undoes via undo_products).
  bool mark_products_around(int p, std::vector<int>& marked) {
    const int left = (p + n - 1) % n;
    for (int idx : {left, p}) {
      if (product_done[idx]) continue;
      if (pos[idx] == -1 || pos[(idx + 1) % n] == -1) continue;
      const Element v = product_at(idx);
      if (product_used[v]) return false;
      product_used[v] = 1;
      product_done[idx] = 1;
      marked.push_back(idx);
    }
    return true;
  }

  // Call before unassigning the positions the products came from.
  void undo_products(const std::vector<int>& marked) {
    for (int idx : marked) {
      product_used[product_at(idx)] = 0;
      product_done[idx] = 0;
    }
  }

  void record() {
    found.push_back(pos);
    if (max_results != 0 && found.size() >= max_results) truncated = true;
  }
};

// ---- symmetric search: positions i and n-i assigned together ----

struct Step {
  enum class Kind { kFixedIdentity, kFree, kSelfInverse, kPair };
  Kind kind;
  int a;
  int b;  // pair partner, -1 otherwise
};

void symmetric_dfs(SearchState& st, const std::vector<Step>& steps, std::size_t depth) {
  if (st.truncated) return;
  if (depth == steps.size()) {
    st.record();
    return;
  }
  const Step& step = steps[depth];
  std::vector<int> marked;
  for (Element x = 0; x < st.n; ++x) {
    if (st.used[x]) continue;
    if (step.kind == Step::Kind::kFixedIdentity && x != 0) break;
    if (step.kind == Step::Kind::kSelfInverse && st.g.inverse(x) != x) continue;

    if (step.kind == Step::Kind::kPair) {
      const Element y = st.g.inverse(x);
      if (y == x || st.used[y]) continue;  // opposite positions need distinct mutual inverses
      st.pos[step.a] = x;
      st.pos[step.b] = y;
      st.used[x] = 1;
      st.used[y] = 1;
      marked.clear();
      if (st.mark_products_around(step.a, marked) &&
          st.mark_products_around(step.b, marked)) {
        ++st.nodes;
        symmetric_dfs(st, steps, depth + 1);
      }
      st.undo_products(marked);
      st.used[x] = 0;
      st.used[y] = 0;
      st.pos[step.a] = -1;
      st.pos[step.b] = -1;
    } else {
      st.pos[step.a] = x;
      st.used[x] = 1;
      marked.clear();
      if (st.mark_products_around(step.a, marked)) {
        ++st.nodes;
        symmetric_dfs(st, steps, depth + 1);
      }
      st.undo_products(marked);
      st.used[x] = 0;
      st.pos[step.a] = -1;
    }
    if (st.truncated) return;
  }
}

// ---- positional search (harmonious, R*) ----

void positional_dfs(SearchState& st, int p, bool fix_first, bool r_star_mode) {
  if (st.truncated) return;
  if (p == st.n) {
    st.record();
    return;
  }
  std::vector<int> marked;
  for (Element x = 0; x < st.n; ++x) {
    if (st.used[x]) continue;
    if (p == 0 && fix_first && x != 0) break;
    st.pos[p] = x;
    st.used[x] = 1;
    marked.clear();
    bool ok = st.mark_products_around(p, marked);
    if (ok && r_star_mode && p == 2) ok = r_star_center_holds(st.g, st.pos);
    if (ok) {
      ++st.nodes;
      positional_dfs(st, p + 1, fix_first, r_star_mode);
    }
    st.undo_products(marked);
    st.used[x] = 0;
    st.pos[p] = -1;
    if (st.truncated) return;
  }
}

void check_cap(const FiniteGroup& g, int cap, const SearchOptions& options, const char* what) {
  if (g.order() > cap && !options.allow_large) {
    std::ostringstream out;
    out << "group order " << g.order() << " exceeds the exhaustive " << what
        << " search cap " << cap << "; pass the large-search override to proceed";
    throw SizeError(out.str());
  }
}

SearchOutcome finish(const FiniteGroup& g, SearchState&& st) {
  std::sort(st.found.begin(), st.found.end());
  SearchOutcome outcome;
  outcome.found.reserve(st.found.size());
  for (auto& entries : st.found) outcome.found.push_back(GroupSequence{&g, std::move(entries)});
  outcome.exhausted = !st.truncated;
  outcome.nodes_visited = st.nodes;
  return outcome;
}

}  // namespace

SearchOutcome search_symmetric_harmonious(const FiniteGroup& g, const SearchOptions& options) {
  check_cap(g, kSymmetricSearchCap, options, "symmetric-harmonious");
  const int n = g.order();
  SearchState st(g, /*quotient_products=*/false, options.max_results);

  std::vector<Step> steps;
  if (n % 2 == 1) {
    // In odd order the off-identity positions pair into mutual inverses,
    // which leaves only the identity for position 0.
    steps.push_back({Step::Kind::kFixedIdentity, 0, -1});
    for (int d = 1; d <= (n - 1) / 2; ++d) steps.push_back({Step::Kind::kPair, d, n - d});
  } else {
    steps.push_back({Step::Kind::kFree, 0, -1});
    for (int d = 1; d < n / 2; ++d) steps.push_back({Step::Kind::kPair, d, n - d});
    steps.push_back({Step::Kind::kSelfInverse, n / 2, -1});
  }

  symmetric_dfs(st, steps, 0);
  return finish(g, std::move(st));
}

SearchOutcome search_harmonious(const FiniteGroup& g, const SearchOptions& options) {
  check_cap(g, kHarmoniousSearchCap, options, "harmonious");
  SearchState st(g, /*quotient_products=*/false, options.max_results);
  positional_dfs(st, 0, options.up_to_rotation, /*r_star_mode=*/false);
  return finish(g, std::move(st));
}

SearchOutcome search_r_star(const FiniteGroup& g, const SearchOptions& options) {
  if (g.order() < 2)
    throw InputError("R*-sequence search needs at least three positions");
  check_cap(g, kRStarSearchCap, options, "R*");
  SearchState st(g, /*quotient_products=*/true, options.max_results);
  positional_dfs(st, 0, /*fix_first=*/false, /*r_star_mode=*/true);
  return finish(g, std::move(st));
}

}  // namespace harmonia
