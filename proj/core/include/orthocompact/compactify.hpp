// Simple linear compactifications of SO(2r+1) and their classification
// data.
//
// A simple adjoint subset Pi is a finite set of dominant weights of
// SO(2r+1) (pairwise differences in the root lattice) with a unique
// dominance-maximal element lambda; it encodes the compactification
// X_Pi, the closure of the image of SO(2r+1) in P(End(V_Pi)).  Two
// subsets give the same variety iff they have the same support of lambda
// and the same translates mu - lambda; morphisms and isomorphisms between
// the varieties are decided purely combinatorially from the reductions of
// the subsets under the lambda-order.

#pragma once

#include "orthocompact/orders.hpp"
#include "orthocompact/triviality.hpp"

namespace orthocompact {

// Canonically sorted weights plus the distinguished maximal element.
struct SimpleSubset {
  std::vector<Weight> weights;  // sorted, duplicates removed
  Weight max;

  bool operator==(const SimpleSubset&) const = default;
};

// Validates and canonicalizes: every weight dominant (NotDominant),
// pairwise differences in the root lattice (NotAdjoint), exactly one
// dominance-maximal element (NoUniqueMax; an empty input has none).
SimpleSubset make_simple_subset(const RankedContext& ctx, std::vector<Weight> weights);

// The members mu with V(mu) eventually inside a tensor power of V(max):
// they are redundant for the classification.
std::vector<Weight> trivial_members(const RankedContext& ctx, const SimpleSubset& pi);

// The reduction: the maximal non-trivial members under the lambda-order,
// together with lambda itself.  X_Pi and X_{reduce(Pi)} are the same
// variety, and reduce is idempotent.
SimpleSubset reduce(const RankedContext& ctx, const SimpleSubset& pi);

// Same support of the maximal element and same translate sets
// { mu - max }: the two subsets define the same compactification.
bool equivalent(const RankedContext& ctx, const SimpleSubset& a, const SimpleSubset& b);

// Whether an equivariant morphism X_a -> X_b exists.  Only defined between
// equal supports (SupportMismatch otherwise).  Criterion: every non-trivial
// reduced member mu' of b admits a non-trivial reduced member mu of a with
// mu' - max_b <=_lambda mu - max_a.
bool morphism_exists(const RankedContext& ctx, const SimpleSubset& a,
                     const SimpleSubset& b);

// Equivariant isomorphism: the reductions are equivalent.
bool isomorphic(const RankedContext& ctx, const SimpleSubset& a, const SimpleSubset& b);

// Normality of X_Pi: Pi contains the little brothers of its maximum.
bool is_normal(const RankedContext& ctx, const SimpleSubset& pi);

}  // namespace orthocompact
