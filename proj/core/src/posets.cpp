#include "orthocompact/posets.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "orthocompact/triviality.hpp"

namespace orthocompact {

namespace {

IndexSet checked_support(const RankedContext& ctx, IndexSet I) {
  std::sort(I.begin(), I.end());
  I.erase(std::unique(I.begin(), I.end()), I.end());
  if (I.empty()) fail(Errc::OutOfRange, "support must be nonempty");
  if (I.front() < 1 || I.back() > ctx.rank())
    fail(Errc::OutOfRange, "support index outside 1..r");
  return I;
}

Weight lambda_of(const RankedContext& ctx, const IndexSet& I) {
  Weight la = zero_weight(ctx.rank());
  for (int i : I) la.coeffs[i - 1] = 1;
  return la;
}

std::string tuple_of(const RootVec& v) {
  std::string s = "(";
  const std::vector<int> a = v.alpha();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a[i]);
  }
  return s + ")";
}

int max_coeff(const RootVec& v) {
  int m = 0;
  for (int t : v.twice) m = std::max(m, t / 2);
  return m;
}

// Strict lambda_I-order comparability matrix.
std::vector<std::vector<bool>> less_matrix(const RankedContext& ctx, const Weight& la,
                                           const std::vector<RootVec>& vs) {
  const std::size_t n = vs.size();
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) less[i][j] = nphi_membership(ctx, la, vs[j] - vs[i]);
  return less;
}

std::vector<std::pair<int, int>> covers_of(const std::vector<std::vector<bool>>& less) {
  const std::size_t n = less.size();
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!less[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        cover = !(less[i][k] && less[k][j]);
      if (cover) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

RootVec theta_I(const RankedContext& ctx, const IndexSet& I) {
  const IndexSet s = checked_support(ctx, I);
  if (s.back() == ctx.rank())
    fail(Errc::OutOfRange, "theta_I is undefined when the short simple root lies in I");
  std::vector<int> a(ctx.rank(), 0);
  for (int i = s.back(); i <= ctx.rank(); ++i) a[i - 1] = 1;
  return rootvec_from_alpha(std::move(a));
}

std::vector<RootVec> enum_T2(const RankedContext& ctx, const IndexSet& I, int bound) {
  const IndexSet s = checked_support(ctx, I);
  if (bound < 0) fail(Errc::OutOfRange, "bound must be non-negative");
  const int r = ctx.rank();
  if (s.back() == r) return {};  // every compactification with this support is normal

  const int q = s.back();
  std::vector<RootVec> out;
  std::vector<int> a(r, 0);
  // Odometer over {0..bound}^r; only a_r odd survives, so step it by 2.
  for (;;) {
    for (a[r - 1] = 1; a[r - 1] <= bound; a[r - 1] += 2) {
      RootVec v = rootvec_from_alpha(a);
      const int ar = a[r - 1];
      if (ar >= 2 * std::min(r - l_index(ctx, v), r - q)) continue;
      const Weight w = alpha_to_omega(ctx, v);
      bool ok = true;
      for (int i = 1; i <= r && ok; ++i)
        if (w.coeffs[i - 1] > 0) ok = std::binary_search(s.begin(), s.end(), i);
      if (ok) out.push_back(std::move(v));
    }
    a[r - 1] = 0;
    int i = r - 2;
    while (i >= 0 && a[i] == bound) a[i--] = 0;
    if (i < 0) break;
    ++a[i];
  }
  std::sort(out.begin(), out.end(), [](const RootVec& x, const RootVec& y) {
    int sx = 0, sy = 0;
    for (int t : x.twice) sx += t;
    for (int t : y.twice) sy += t;
    if (sx != sy) return sx < sy;
    return x.twice < y.twice;
  });
  return out;
}

HassePoset hasse(const RankedContext& ctx, const IndexSet& I,
                 const std::vector<RootVec>& vertices) {
  const IndexSet s = checked_support(ctx, I);
  HassePoset poset;
  poset.r = ctx.rank();
  poset.support = s;
  poset.vertices = vertices;
  for (const RootVec& v : vertices) poset.bound = std::max(poset.bound, max_coeff(v));

  const Weight la = lambda_of(ctx, s);
  poset.edges = covers_of(less_matrix(ctx, la, vertices));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (max_coeff(vertices[i]) >= poset.bound - 1) poset.boundary.push_back(static_cast<int>(i));
  return poset;
}

HassePoset poset_T2(const RankedContext& ctx, const IndexSet& I, int bound) {
  const IndexSet s = checked_support(ctx, I);
  const std::vector<RootVec> vertices = enum_T2(ctx, s, bound);
  const std::vector<RootVec> working = enum_T2(ctx, s, bound + 2);

  HassePoset poset;
  poset.r = ctx.rank();
  poset.support = s;
  poset.bound = bound;
  poset.truncated = working.size() > vertices.size();
  poset.vertices = vertices;

  // Covers computed in the enlarged set: any chain between in-bound
  // endpoints stays componentwise below the top endpoint, so edges between
  // in-bound vertices are exact; the enlargement only reveals covers that
  // escape the bound, which mark their lower endpoint as boundary.
  const Weight la = lambda_of(ctx, s);
  const auto edges_w = covers_of(less_matrix(ctx, la, working));

  std::vector<int> index_in_bound(working.size(), -1);
  for (std::size_t w = 0, v = 0; w < working.size(); ++w)
    if (v < vertices.size() && working[w] == vertices[v]) index_in_bound[w] = static_cast<int>(v++);

  std::vector<bool> flagged(vertices.size(), false);
  for (auto [from, to] : edges_w) {
    if (index_in_bound[from] < 0) continue;
    if (index_in_bound[to] >= 0)
      poset.edges.emplace_back(index_in_bound[from], index_in_bound[to]);
    else
      flagged[index_in_bound[from]] = true;
  }
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (flagged[i] || max_coeff(vertices[i]) >= bound - 1)
      poset.boundary.push_back(static_cast<int>(i));
  return poset;
}

std::vector<std::vector<int>> enum_antichains(const RankedContext& ctx,
                                              const HassePoset& poset, int max_size) {
  if (max_size < 0) fail(Errc::OutOfRange, "antichain size bound must be non-negative");
  const Weight la = lambda_of(ctx, poset.support);
  const auto less = less_matrix(ctx, la, poset.vertices);
  const int n = static_cast<int>(poset.vertices.size());

  std::vector<std::vector<int>> out;
  std::vector<int> chosen;
  // Depth-first in index order emits the antichains lexicographically.
  auto extend = [&](auto&& self, int next) -> void {
    out.push_back(chosen);
    if (static_cast<int>(chosen.size()) == max_size) return;
    for (int j = next; j < n; ++j) {
      bool anti = true;
      for (int i : chosen)
        if (less[i][j] || less[j][i]) { anti = false; break; }
      if (!anti) continue;
      chosen.push_back(j);
      self(self, j + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

std::string render(const HassePoset& poset, RenderFormat format) {
  std::ostringstream os;
  switch (format) {
    case RenderFormat::Text: {
      os << "# T(I,2)  r=" << poset.r << "  I={";
      for (std::size_t i = 0; i < poset.support.size(); ++i)
        os << (i ? "," : "") << poset.support[i];
      os << "}  bound=" << poset.bound
         << (poset.truncated ? "  [truncated: the poset continues beyond the bound]" : "")
         << "\n";
      std::vector<bool> marked(poset.vertices.size(), false);
      for (int b : poset.boundary) marked[b] = true;
      os << "vertices (" << poset.vertices.size() << "; * = covers may exceed bound):\n";
      for (std::size_t i = 0; i < poset.vertices.size(); ++i)
        os << "  " << tuple_of(poset.vertices[i]) << (marked[i] ? " *" : "") << "\n";
      os << "edges (" << poset.edges.size() << "):\n";
      for (auto [from, to] : poset.edges)
        os << "  " << tuple_of(poset.vertices[from]) << " -> " << tuple_of(poset.vertices[to])
           << "\n";
      break;
    }
    case RenderFormat::Dot: {
      std::vector<bool> marked(poset.vertices.size(), false);
      for (int b : poset.boundary) marked[b] = true;
      os << "digraph T2 {\n  rankdir=BT;\n";
      for (std::size_t i = 0; i < poset.vertices.size(); ++i) {
        os << "  v" << i << " [label=\"" << tuple_of(poset.vertices[i]) << "\"";
        if (marked[i]) os << " style=dashed";
        os << "];\n";
      }
      for (auto [from, to] : poset.edges) os << "  v" << from << " -> v" << to << ";\n";
      os << "}\n";
      break;
    }
    case RenderFormat::Json: {
      nlohmann::ordered_json j;
      j["schema"] = "orthocompact/1";
      j["r"] = poset.r;
      j["I"] = poset.support;
      j["bound"] = poset.bound;
      j["truncated"] = poset.truncated;
      j["vertices"] = nlohmann::ordered_json::array();
      for (const RootVec& v : poset.vertices) j["vertices"].push_back(v.alpha());
      j["edges"] = nlohmann::ordered_json::array();
      for (auto [from, to] : poset.edges)
        j["edges"].push_back(nlohmann::ordered_json::array({from, to}));
      j["boundary"] = poset.boundary;
      os << j.dump(2) << "\n";
      break;
    }
  }
  return os.str();
}

}  // namespace orthocompact
