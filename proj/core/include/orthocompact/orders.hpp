// The dominance-like order attached to a dominant weight lambda and the
// semigroup Xi(lambda) it generates.
//
// Phi^+(lambda) is the set of positive roots whose support meets
// Supp(lambda); the order on weights is nu <=_lambda mu iff mu - nu is an
// N-combination of Phi^+(lambda).  Xi(lambda) = N Phi^+(lambda) when
// alpha_r lies in Supp(lambda) and N Phi^+_long(lambda) otherwise; its
// members tau = sum a_i alpha_i are cut out by three explicit conditions
// on consecutive support indices p = min Supp, q = max Supp:
//
//   (C1) a_1 <= ... <= a_p;
//   (C2) sum_{i=s}^{t-1} |a_{i+1} - a_i| <= a_s + a_t for each pair s < t
//        of consecutive indices of Supp(lambda);
//   (C3) if q < r: a_r is even and 2 sum_{i in I_q} (a_{i+1} - a_i) <= a_r,
//        where I_q = { q <= i < r : a_i < a_{i+1} }.
//
// xi_step peels one root off a nonzero member of Xi(lambda), following the
// four cases of the constructive proof; xi_decompose iterates it.  The
// choice is pinned so decompositions are reproducible.

#pragma once

#include <optional>
#include <vector>

#include "orthocompact/lattice.hpp"

namespace orthocompact {

// theta in N Phi^+(lambda), optionally restricted to the long members.
// Requires theta integral (half-integral input is malformed); a negative
// entry simply makes the answer false.
bool nphi_membership(const RankedContext& ctx, const Weight& la, const RootVec& theta,
                     LengthFilter filter = LengthFilter::All);

// A witness decomposition of theta into roots of Phi^+(lambda), or nullopt.
// Deterministic: depth-first over the canonical root order, so the found
// list is reproducible and sorted by the exploration order.
std::optional<std::vector<Root>> nphi_decompose(const RankedContext& ctx, const Weight& la,
                                                const RootVec& theta,
                                                LengthFilter filter = LengthFilter::All);

// nu <=_lambda mu: mu - nu in N Phi^+(lambda).  Errors NotInRootCoset when
// mu - nu falls outside the root lattice.
bool lambda_leq(const RankedContext& ctx, const Weight& la, const Weight& nu,
                const Weight& mu);

// tau in Xi(lambda), by the conditions (C1)-(C3).  Requires lambda dominant
// and nonzero, tau integral with non-negative entries.
bool xi_membership(const RankedContext& ctx, const Weight& la, const RootVec& tau);

// One step of the constructive decomposition: a root theta of
// Phi^+(lambda) such that tau - theta is still in Xi(lambda).  Requires
// tau a nonzero member of Xi(lambda); errors NotInXi otherwise.  theta is
// long whenever alpha_r is outside Supp(lambda).
Root xi_step(const RankedContext& ctx, const Weight& la, const RootVec& tau);

// Full decomposition of tau into members of Phi^+(lambda) by iterating
// xi_step.  Empty for tau = 0.
std::vector<Root> xi_decompose(const RankedContext& ctx, const Weight& la,
                               const RootVec& tau);

// The order used by the classification tables: th1 <=_I th2 iff th2 - th1
// lies in N-Delta but not in N[Delta minus I] — integral, non-negative, and
// supported on I somewhere.  Note this differs from <=_lambda on general
// vectors (alpha_1 + alpha_3 for I = {alpha_1}, r = 3 separates them) and
// is irreflexive as defined; the lambda-order is the authoritative one for
// Hasse diagrams.
bool section4_leq(const RankedContext& ctx, const IndexSet& I, const RootVec& th1,
                  const RootVec& th2);

}  // namespace orthocompact
