// The triviality criterion for dominant weight pairs.
//
// For a dominant weight lambda of SO(2r+1) and dominant mu <= lambda, say
// mu is a trivial member of Pi^+(lambda) when V(mu) occurs in V(lambda)^(x)n
// for some n, equivalently when mu - lambda lies in the semigroup of the
// cone over the variety X_lambda.  Writing lambda - mu = sum a_i alpha_i,
// the exact combinatorial test is
//
//   a_r even,  or  a_r > 2 min{ r - q(lambda), r - q(mu) },
//
// where q(nu) is the largest index in Supp(nu) (0 for nu = 0).  The cousin
// predicate on the negative root cone replaces q(mu) by l(theta), the least
// l with a_i = a_r for all i >= l.  Everything here is a direct evaluation
// of these inequalities; the charring module provides the independent
// tensor-product oracle they are tested against.

#pragma once

#include "orthocompact/lattice.hpp"

namespace orthocompact {

// Largest index in Supp(lambda); 0 when lambda = 0.  Requires dominant
// input: q feeds the criterion, which is stated for dominant weights.
int q_index(const RankedContext& ctx, const Weight& la);

// Least l in 1..r with a_i = a_r for all i >= l.  Requires theta integral
// and non-negative.
int l_index(const RankedContext& ctx, const RootVec& theta);

// Whether mu is a trivial member of Pi^+(lambda).  Errors: NotDominant if
// either weight is not dominant, NotBelow if lambda - mu is not a
// non-negative integral root vector (spin-coset differences included).
bool is_trivial(const RankedContext& ctx, const Weight& la, const Weight& mu);

// Whether theta lies in -Omega(lambda), the saturation-free part of the
// negative cone: Supp(theta^+) inside Supp(lambda), and the parity
// criterion with l(theta) in place of q(mu).  theta^+ is the dominant part
// of the weight of theta (positive fundamental coefficients).
bool in_neg_omega(const RankedContext& ctx, const Weight& la, const RootVec& theta);

// The support condition (*): Supp(lambda) contains no long simple root, or
// contains the short one.  Exactly the lambdas whose variety X_lambda is
// normal, and exactly the ones with no little brother.
bool satisfies_star(const RankedContext& ctx, const Weight& la);

// The little brothers of lambda: empty when (*) holds, otherwise the single
// weight lambda - (alpha_p + ... + alpha_r) with p = q(lambda).  Requires
// lambda dominant.
std::vector<Weight> little_brothers(const RankedContext& ctx, const Weight& la);

// Whether V(mu) occurs in V(omega_1)^(x)n, by the closed criterion
// (a_r even or a_r > 2(r - q(mu)) for n omega_1 - mu = sum a_i alpha_i).
// Errors: NotDominant, NotBelow (mu must be <= n omega_1).
bool sw_contains_criterion(const RankedContext& ctx, int n, const Weight& mu);

// Same question decided through partitions: V(mu) occurs in the n-th tensor
// power of the vector representation iff the partition of mu extends to one
// of the two admissible shapes (pad with nothing, or with a column of 1s of
// odd total length).  Independent of the criterion above; kept as its
// cross-check.
bool sw_contains_partition(const RankedContext& ctx, int n, const Weight& mu);

}  // namespace orthocompact
