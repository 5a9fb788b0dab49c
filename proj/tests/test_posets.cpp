// Poset layer: the bounded enumerations of the second-generator classes,
// their Hasse diagrams, antichains, and the three renderings.  The three
// reference shapes (a chain, a branch, a grid) are frozen exactly.

#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "orthocompact/posets.hpp"
#include "orthocompact/triviality.hpp"

using namespace orthocompact;

namespace {

Weight wt(std::vector<int> c) { return Weight(std::move(c)); }
RootVec rv(std::vector<int> a) { return rootvec_from_alpha(std::move(a)); }

#define CHECK_DOMAIN(expr, errc)                               \
  do {                                                         \
    bool caught_ = false;                                      \
    try {                                                      \
      (void)(expr);                                            \
    } catch (const DomainError& e_) {                          \
      caught_ = true;                                          \
      CHECK(e_.code() == (errc));                              \
    }                                                          \
    CHECK_MESSAGE(caught_, "expected DomainError from " #expr); \
  } while (0)

Weight lambda_of(int r, const IndexSet& I) {
  Weight la = zero_weight(r);
  for (int i : I) la.coeffs[i - 1] = 1;
  return la;
}

std::set<std::vector<int>> vertex_set(const HassePoset& p) {
  std::set<std::vector<int>> out;
  for (const RootVec& v : p.vertices) out.insert(v.alpha());
  return out;
}

bool strictly_less(const RankedContext& ctx, const Weight& la, const RootVec& a,
                   const RootVec& b) {
  return !(a == b) && nphi_membership(ctx, la, b - a);
}

}  // namespace

TEST_CASE("minimal second generator") {
  const RankedContext ctx(3);
  CHECK(theta_I(ctx, {1, 2}) == rv({0, 1, 1}));
  CHECK(theta_I(ctx, {1}) == rv({1, 1, 1}));
  CHECK(theta_I(ctx, {2}) == rv({0, 1, 1}));
  CHECK_DOMAIN(theta_I(ctx, {3}), Errc::OutOfRange);   // short root in I
  CHECK_DOMAIN(theta_I(ctx, {}), Errc::OutOfRange);
  CHECK_DOMAIN(theta_I(ctx, {4}), Errc::OutOfRange);
}

TEST_CASE("bounded enumeration, frozen shapes") {
  const RankedContext ctx(3);

  // Support {1,2}: a single infinite chain (k,1,1).
  CHECK(enum_T2(ctx, {1, 2}, 4) ==
        std::vector<RootVec>{rv({0, 1, 1}), rv({1, 1, 1}), rv({2, 1, 1}),
                             rv({3, 1, 1}), rv({4, 1, 1})});

  // Support {1}: the chain needs a positive alpha_1-coefficient and the
  // deep vector (3,3,3) joins at coefficient three.
  CHECK(enum_T2(ctx, {1}, 3) ==
        std::vector<RootVec>{rv({1, 1, 1}), rv({2, 1, 1}), rv({3, 1, 1}),
                             rv({3, 3, 3})});

  // Support {r-1}: a single member, the tail string.
  for (int r = 3; r <= 5; ++r) {
    const RankedContext c(r);
    std::vector<int> tail(r, 0);
    tail[r - 2] = tail[r - 1] = 1;
    CHECK(enum_T2(c, {r - 1}, 6) == std::vector<RootVec>{rootvec_from_alpha(tail)});
  }

  // The short simple root in the support kills every class.
  CHECK(enum_T2(ctx, {1, 3}, 4).empty());
  CHECK(enum_T2(ctx, {3}, 4).empty());

  // Stability: enlarging the bound only appends, never edits.
  const auto small = enum_T2(ctx, {1}, 3);
  std::vector<RootVec> filtered;
  for (const RootVec& v : enum_T2(ctx, {1}, 5)) {
    bool in = true;
    for (int t : v.twice) in = in && t / 2 <= 3;
    if (in) filtered.push_back(v);
  }
  CHECK(small == filtered);

  CHECK_DOMAIN(enum_T2(ctx, {1}, -1), Errc::OutOfRange);
}

TEST_CASE("grid enumeration in rank four") {
  const RankedContext ctx(4);
  const auto vs = enum_T2(ctx, {1, 2, 3}, 3);
  REQUIRE(vs.size() == 16);
  std::set<std::vector<int>> expected;
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) expected.insert({i, j, 1, 1});
  std::set<std::vector<int>> got;
  for (const RootVec& v : vs) got.insert(v.alpha());
  CHECK(got == expected);
}

TEST_CASE("members are exactly the non-trivial classes") {
  // Every enumerated vector must escape the negative cone of lambda_I.
  const std::pair<int, IndexSet> cases[] = {
      {3, {1}}, {3, {2}}, {3, {1, 2}}, {4, {1, 2, 3}}, {4, {2}}};
  for (const auto& [r, I] : cases) {
    const RankedContext ctx(r);
    const Weight la = lambda_of(r, I);
    for (const RootVec& v : enum_T2(ctx, I, 3)) {
      CHECK_FALSE(in_neg_omega(ctx, la, v));
      CHECK(v.alpha()[r - 1] % 2 == 1);
    }
  }
}

TEST_CASE("hasse diagram of the branch shape, fully frozen") {
  const RankedContext ctx(3);
  const HassePoset p = poset_T2(ctx, {1}, 3);

  CHECK(p.r == 3);
  CHECK(p.support == IndexSet{1});
  CHECK(p.bound == 3);
  CHECK(p.truncated);
  REQUIRE(p.vertices.size() == 4);
  CHECK(p.vertices[0] == rv({1, 1, 1}));
  CHECK(p.vertices[1] == rv({2, 1, 1}));
  CHECK(p.vertices[2] == rv({3, 1, 1}));
  CHECK(p.vertices[3] == rv({3, 3, 3}));
  CHECK(p.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}});
  CHECK(p.boundary == std::vector<int>{1, 2, 3});
}

TEST_CASE("hasse diagram of the chain shape, fully frozen") {
  const RankedContext ctx(3);
  const HassePoset p = poset_T2(ctx, {1, 2}, 4);
  REQUIRE(p.vertices.size() == 5);
  for (int k = 0; k <= 4; ++k) CHECK(p.vertices[k] == rv({k, 1, 1}));
  CHECK(p.edges ==
        std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(p.truncated);
  CHECK(p.boundary == std::vector<int>{3, 4});
}

TEST_CASE("hasse diagram of the grid shape") {
  const RankedContext ctx(4);
  const HassePoset p = poset_T2(ctx, {1, 2, 3}, 3);
  REQUIRE(p.vertices.size() == 16);
  REQUIRE(p.edges.size() == 24);

  // Each cover raises exactly one of the first two coefficients by one.
  std::set<std::pair<std::vector<int>, std::vector<int>>> got;
  for (auto [from, to] : p.edges)
    got.insert({p.vertices[from].alpha(), p.vertices[to].alpha()});
  std::set<std::pair<std::vector<int>, std::vector<int>>> expected;
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) {
      if (i < 3) expected.insert({{i, j, 1, 1}, {i + 1, j, 1, 1}});
      if (j < 3) expected.insert({{i, j, 1, 1}, {i, j + 1, 1, 1}});
    }
  CHECK(got == expected);
  CHECK(p.truncated);
  // Conservative boundary: any vertex within one of the bound.
  std::set<int> boundary(p.boundary.begin(), p.boundary.end());
  for (int v = 0; v < 16; ++v) {
    const auto a = p.vertices[v].alpha();
    CHECK(boundary.count(v) == (std::max(a[0], a[1]) >= 2 ? 1 : 0));
  }
}

TEST_CASE("hasse on explicit vertices") {
  const RankedContext ctx(3);
  const HassePoset p = hasse(ctx, {1, 2}, {theta_I(ctx, {1, 2})});
  CHECK(p.vertices.size() == 1);
  CHECK(p.edges.empty());
  CHECK_FALSE(p.truncated);
}

TEST_CASE("the minimal generator is the unique minimum") {
  const std::pair<int, IndexSet> cases[] = {{3, {1}}, {3, {1, 2}}, {4, {1, 2, 3}}};
  for (const auto& [r, I] : cases) {
    const RankedContext ctx(r);
    const Weight la = lambda_of(r, I);
    const HassePoset p = poset_T2(ctx, I, 3);
    REQUIRE(!p.vertices.empty());
    CHECK(p.vertices[0] == theta_I(ctx, I));
    for (std::size_t i = 1; i < p.vertices.size(); ++i) {
      CHECK_FALSE(strictly_less(ctx, la, p.vertices[i], p.vertices[0]));
      WARN_MESSAGE(strictly_less(ctx, la, p.vertices[0], p.vertices[i]),
                   "vertex incomparable with the minimal generator");
    }
  }
}

TEST_CASE("covering edges decompose and admit no intermediate vertex") {
  const std::pair<int, IndexSet> cases[] = {{3, {1}}, {3, {1, 2}}, {4, {1, 2, 3}}};
  for (const auto& [r, I] : cases) {
    const RankedContext ctx(r);
    const Weight la = lambda_of(r, I);
    const HassePoset p = poset_T2(ctx, I, 3);
    for (auto [from, to] : p.edges) {
      CHECK(nphi_decompose(ctx, la, p.vertices[to] - p.vertices[from]).has_value());
      for (std::size_t m = 0; m < p.vertices.size(); ++m) {
        if (static_cast<int>(m) == from || static_cast<int>(m) == to) continue;
        CHECK_FALSE((strictly_less(ctx, la, p.vertices[from], p.vertices[m]) &&
                     strictly_less(ctx, la, p.vertices[m], p.vertices[to])));
      }
    }
    // The printed classification order agrees with the lambda_I-order on
    // the enumerated vertices (logged, not enforced: the former is coarser
    // on general vectors).
    for (const RootVec& x : p.vertices)
      for (const RootVec& y : p.vertices) {
        if (x == y) continue;
        WARN_MESSAGE(section4_leq(ctx, I, x, y) == strictly_less(ctx, la, x, y),
                     "printed order diverges from the lambda order");
      }
  }
}

TEST_CASE("antichains, frozen") {
  const RankedContext ctx(3);
  const HassePoset p = poset_T2(ctx, {1}, 3);

  CHECK(enum_antichains(ctx, p, 2) ==
        std::vector<std::vector<int>>{{}, {0}, {1}, {2}, {2, 3}, {3}});
  CHECK(enum_antichains(ctx, p, 1) ==
        std::vector<std::vector<int>>{{}, {0}, {1}, {2}, {3}});
  CHECK(enum_antichains(ctx, p, 0) == std::vector<std::vector<int>>{{}});
  CHECK_DOMAIN(enum_antichains(ctx, p, -1), Errc::OutOfRange);

  // Every emitted set is an antichain of the lambda_I-order.
  const Weight la = lambda_of(3, {1});
  for (const auto& chain : enum_antichains(ctx, p, 3))
    for (int i : chain)
      for (int j : chain)
        if (i != j)
          CHECK_FALSE(strictly_less(ctx, la, p.vertices[i], p.vertices[j]));
}

TEST_CASE("text rendering, fully frozen") {
  const RankedContext ctx(3);
  const HassePoset p = poset_T2(ctx, {1}, 3);
  CHECK(render(p, RenderFormat::Text) ==
        "# T(I,2)  r=3  I={1}  bound=3"
        "  [truncated: the poset continues beyond the bound]\n"
        "vertices (4; * = covers may exceed bound):\n"
        "  (1,1,1)\n"
        "  (2,1,1) *\n"
        "  (3,1,1) *\n"
        "  (3,3,3) *\n"
        "edges (3):\n"
        "  (1,1,1) -> (2,1,1)\n"
        "  (2,1,1) -> (3,1,1)\n"
        "  (2,1,1) -> (3,3,3)\n");
}

TEST_CASE("dot rendering") {
  const RankedContext ctx(3);
  const HassePoset p = poset_T2(ctx, {1, 2}, 4);
  const std::string dot = render(p, RenderFormat::Dot);
  CHECK(dot.rfind("digraph T2 {\n", 0) == 0);
  CHECK(dot.find("v0 [label=\"(0,1,1)\"]") != std::string::npos);
  CHECK(dot.find("v4 [label=\"(4,1,1)\" style=dashed]") != std::string::npos);
  std::size_t arrows = 0;
  for (std::size_t at = dot.find(" -> "); at != std::string::npos;
       at = dot.find(" -> ", at + 1))
    ++arrows;
  CHECK(arrows == 4);
}

TEST_CASE("json rendering") {
  const RankedContext ctx(3);
  const HassePoset p = poset_T2(ctx, {1}, 3);
  const nlohmann::json j = nlohmann::json::parse(render(p, RenderFormat::Json));
  CHECK(j.at("schema") == "orthocompact/1");
  CHECK(j.at("r") == 3);
  CHECK(j.at("I") == nlohmann::json::array({1}));
  CHECK(j.at("bound") == 3);
  CHECK(j.at("truncated") == true);
  REQUIRE(j.at("vertices").size() == 4);
  CHECK(j.at("vertices")[0] == nlohmann::json::array({1, 1, 1}));
  CHECK(j.at("vertices")[3] == nlohmann::json::array({3, 3, 3}));
  REQUIRE(j.at("edges").size() == 3);
  CHECK(j.at("edges")[2] == nlohmann::json::array({1, 3}));
  CHECK(j.at("boundary") == nlohmann::json::array({1, 2, 3}));
}
