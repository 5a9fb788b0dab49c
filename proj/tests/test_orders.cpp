// Order layer: the root-cone membership tests behind the lambda-order, the
// semigroup Xi(lambda) with its constructive decomposition, and the printed
// classification order it refines.

#include <doctest.h>

#include <algorithm>
#include <optional>
#include <vector>

#include "orthocompact/orders.hpp"

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

bool is_root_of(const RankedContext& ctx, const Weight& la, const Root& th,
                LengthFilter filter) {
  const auto roots = phi_plus_of(ctx, la, filter);
  return std::find(roots.begin(), roots.end(), th) != roots.end();
}

// The negative part tau^- of the fundamental coordinates of tau.
Weight negative_part(const RankedContext& ctx, const RootVec& tau) {
  Weight w = alpha_to_omega(ctx, tau);
  for (int& c : w.coeffs) c = std::max(0, -c);
  return w;
}

// xi_step must return a root of Phi^+(lambda) whose removal stays in
// Xi(lambda) and whose addition to lambda + tau^- stays dominant.
void check_step(const RankedContext& ctx, const Weight& la, const RootVec& tau) {
  const Root th = xi_step(ctx, la, tau);
  CHECK(is_root_of(ctx, la, th, LengthFilter::All));
  if (la.coeffs[ctx.rank() - 1] == 0) CHECK(th.length == RootLength::Long);
  CHECK(xi_membership(ctx, la, tau - th.vec));
  const Weight lifted = la + negative_part(ctx, tau) + alpha_to_omega(ctx, th.vec);
  CHECK(lifted.dominant());
}

std::vector<RootVec> rootvec_box(int r, int bound) {
  std::vector<RootVec> out;
  std::vector<int> a(r, 0);
  for (;;) {
    out.push_back(rootvec_from_alpha(a));
    int i = r - 1;
    while (i >= 0 && a[i] == bound) a[i--] = 0;
    if (i < 0) break;
    ++a[i];
  }
  return out;
}

}  // namespace

TEST_CASE("membership in the root cone of a support") {
  const RankedContext ctx(3);
  const Weight o1 = wt({1, 0, 0});

  CHECK(nphi_membership(ctx, o1, rv({2, 2, 2})));  // (1,1,0) + (1,1,2)
  CHECK_FALSE(nphi_membership(ctx, o1, rv({0, 1, 1})));
  CHECK(nphi_membership(ctx, o1, zero_rootvec(3)));
  CHECK_FALSE(nphi_membership(ctx, o1, rv({-1, 0, 0})));

  // Parity cuts the short root (1,1,1) out of the long cone.
  CHECK(nphi_membership(ctx, o1, rv({1, 1, 1})));
  CHECK(nphi_membership(ctx, o1, rv({1, 1, 1}), LengthFilter::ShortOnly));
  CHECK_FALSE(nphi_membership(ctx, o1, rv({1, 1, 1}), LengthFilter::LongOnly));

  CHECK_DOMAIN(nphi_membership(ctx, o1, RootVec({1, 0, 0})), Errc::NotIntegral);
}

TEST_CASE("witness decompositions") {
  const RankedContext ctx(3);
  const Weight o1 = wt({1, 0, 0});

  const auto parts = nphi_decompose(ctx, o1, rv({2, 2, 2}));
  REQUIRE(parts.has_value());
  RootVec sum = zero_rootvec(3);
  for (const Root& th : *parts) {
    CHECK(is_root_of(ctx, o1, th, LengthFilter::All));
    sum += th.vec;
  }
  CHECK(sum == rv({2, 2, 2}));
  // Deterministic: the same call yields the same witness.
  CHECK(nphi_decompose(ctx, o1, rv({2, 2, 2})) == parts);

  CHECK_FALSE(nphi_decompose(ctx, o1, rv({0, 1, 1})).has_value());
  CHECK_FALSE(nphi_decompose(ctx, o1, rv({-1, 0, 0})).has_value());
  const auto empty = nphi_decompose(ctx, o1, zero_rootvec(3));
  REQUIRE(empty.has_value());
  CHECK(empty->empty());
}

TEST_CASE("the lambda-order") {
  const RankedContext ctx(3);
  const Weight o1 = wt({1, 0, 0}), o2 = wt({0, 1, 0}), o3 = wt({0, 0, 1});

  CHECK(lambda_leq(ctx, o1, zero_weight(3), o2));  // omega_2 = (1,2,2), one root
  CHECK_FALSE(lambda_leq(ctx, o1, o1, o2));        // omega_2 - omega_1 avoids alpha_1
  CHECK(lambda_leq(ctx, o2, o1, o2));

  // lambda = 0 yields the trivial order.
  CHECK(lambda_leq(ctx, zero_weight(3), o1, o1));
  CHECK_FALSE(lambda_leq(ctx, zero_weight(3), o1, o2));

  CHECK_DOMAIN(lambda_leq(ctx, o1, o3, o2), Errc::NotInRootCoset);
  CHECK_DOMAIN(lambda_leq(ctx, wt({-1, 0, 0}), o1, o2), Errc::NotDominant);

  // For regular lambda the order is plain dominance.
  const Weight rho = wt({1, 1, 1});
  const Weight samples[] = {zero_weight(3), o1,           o2,
                            wt({2, 0, 0}),  wt({1, 1, 0}), wt({0, 0, 2})};
  for (const Weight& nu : samples)
    for (const Weight& mu : samples) {
      if (!omega_to_alpha(ctx, mu - nu).integral()) continue;
      CHECK(lambda_leq(ctx, rho, nu, mu) == dominance_leq(ctx, nu, mu));
    }
}

TEST_CASE("Xi membership, frozen") {
  const RankedContext ctx(3);
  const Weight o1 = wt({1, 0, 0}), o2 = wt({0, 1, 0}), o3 = wt({0, 0, 1});

  CHECK(xi_membership(ctx, o1, rv({1, 2, 2})));
  CHECK_FALSE(xi_membership(ctx, o1, rv({1, 1, 1})));  // short root, alpha_3 outside supp
  CHECK(xi_membership(ctx, o1, zero_rootvec(3)));
  CHECK(xi_membership(ctx, o3, rv({0, 0, 1})));
  CHECK(xi_membership(ctx, o2, rv({0, 2, 2})));        // (0,1,0) + (0,1,2)
  CHECK_FALSE(xi_membership(ctx, o2, rv({0, 1, 1})));
  CHECK_FALSE(xi_membership(ctx, o1, rv({-1, 0, 0})));

  CHECK_DOMAIN(xi_membership(ctx, zero_weight(3), rv({1, 0, 0})), Errc::OutOfRange);
  CHECK_DOMAIN(xi_membership(ctx, o1, RootVec({1, 0, 0})), Errc::NotIntegral);
}

TEST_CASE("xi_step, frozen cases") {
  const RankedContext ctx(3);
  const Weight o1 = wt({1, 0, 0}), o3 = wt({0, 0, 1});

  const Root th1 = xi_step(ctx, o1, rv({2, 2, 2}));
  CHECK(th1.vec == rv({1, 2, 2}));
  CHECK(th1.length == RootLength::Long);
  check_step(ctx, o1, rv({2, 2, 2}));

  const Root th2 = xi_step(ctx, o1, rv({1, 0, 0}));
  CHECK(th2.vec == rv({1, 0, 0}));
  CHECK(th2.length == RootLength::Long);
  check_step(ctx, o1, rv({1, 0, 0}));

  const Root th3 = xi_step(ctx, o3, rv({0, 0, 1}));
  CHECK(th3.vec == rv({0, 0, 1}));
  CHECK(th3.length == RootLength::Short);
  check_step(ctx, o3, rv({0, 0, 1}));

  CHECK_DOMAIN(xi_step(ctx, o1, rv({1, 1, 1})), Errc::NotInXi);
  CHECK_DOMAIN(xi_step(ctx, o1, zero_rootvec(3)), Errc::NotInXi);
}

TEST_CASE("xi_decompose, frozen") {
  const RankedContext ctx(3);
  const Weight o1 = wt({1, 0, 0});

  const auto parts = xi_decompose(ctx, o1, rv({2, 2, 2}));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].vec == rv({1, 2, 2}));
  CHECK(parts[1].vec == rv({1, 0, 0}));

  CHECK(xi_decompose(ctx, o1, zero_rootvec(3)).empty());

  const auto single = xi_decompose(ctx, o1, rv({1, 1, 2}));
  REQUIRE(single.size() == 1);
  CHECK(single[0].vec == rv({1, 1, 2}));

  CHECK_DOMAIN(xi_decompose(ctx, o1, rv({0, 1, 1})), Errc::NotInXi);
}

TEST_CASE("xi_step postconditions across a box sweep") {
  const RankedContext ctx(3);
  const Weight lambdas[] = {wt({1, 0, 0}), wt({0, 1, 0}), wt({1, 1, 0}),
                            wt({0, 0, 1}), wt({1, 0, 1})};
  for (const Weight& la : lambdas) {
    const LengthFilter filter =
        la.coeffs[2] != 0 ? LengthFilter::All : LengthFilter::LongOnly;
    for (const RootVec& tau : rootvec_box(3, 4)) {
      const bool member = xi_membership(ctx, la, tau);
      // The semigroup is exactly the root cone of the matching length class.
      CHECK(member == nphi_membership(ctx, la, tau, filter));
      if (!member || tau.is_zero()) continue;
      check_step(ctx, la, tau);
      RootVec rest = tau;
      for (const Root& th : xi_decompose(ctx, la, tau)) {
        CHECK(is_root_of(ctx, la, th, filter));
        rest -= th.vec;
      }
      CHECK(rest.is_zero());
    }
  }
}

TEST_CASE("the printed classification order") {
  const RankedContext ctx(3);
  const IndexSet I = {1};

  CHECK(section4_leq(ctx, I, rv({1, 1, 1}), rv({2, 1, 1})));
  CHECK_FALSE(section4_leq(ctx, I, rv({2, 1, 1}), rv({1, 1, 1})));
  // Irreflexive as printed: an empty difference is not supported on I.
  CHECK_FALSE(section4_leq(ctx, I, rv({1, 1, 1}), rv({1, 1, 1})));
  // Not supported on I at all:
  CHECK_FALSE(section4_leq(ctx, {2}, zero_rootvec(3), rv({1, 0, 0})));

  // The printed order is strictly coarser than the lambda-order: it accepts
  // alpha_1 + alpha_3, which no sum of alpha_1-supported roots reaches.
  CHECK(section4_leq(ctx, I, zero_rootvec(3), rv({1, 0, 1})));
  CHECK_FALSE(nphi_membership(ctx, wt({1, 0, 0}), rv({1, 0, 1})));

  CHECK_DOMAIN(section4_leq(ctx, {4}, zero_rootvec(3), rv({1, 0, 0})), Errc::OutOfRange);
  CHECK_DOMAIN(section4_leq(ctx, I, zero_rootvec(3), RootVec({1, 0, 0})), Errc::NotIntegral);
}
