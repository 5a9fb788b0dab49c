// Exact character computations for Spin(2r+1): Weyl dimensions, weight
// multiplicities, tensor product decompositions, and the tensor-power
// oracle the combinatorial triviality criterion is verified against.
//
// Everything is exact: multiplicities in iterated tensor powers grow
// without bound, so they are arbitrary-precision integers.  Weight
// multiplicities come from Freudenthal's recursion run in (doubled)
// orthogonal coordinates, where all scalar products are integers; tensor
// products from the Racah-Speiser rule: shift every weight of the second
// factor by lambda + rho, reflect to the dominant chamber tracking the
// sign, and discard anything that hits a wall.
//
// Shared memo caches (weight systems keyed by (r, lambda), tensor products
// by the argument pair, tensor powers progressively per lambda) are
// append-only and internally synchronized; concurrent callers may at worst
// duplicate a computation, never observe a partial one.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <vector>

#include "orthocompact/lattice.hpp"

namespace orthocompact {

using BigInt = boost::multiprecision::cpp_int;

// Multiplicities of the dominant weights of an irreducible representation;
// the full weight system is the union of their Weyl orbits.
struct Character {
  std::map<Weight, BigInt> mults;
};

// A decomposition into irreducibles: highest weight -> multiplicity, with
// every multiplicity positive.
using TensorDecomposition = std::map<Weight, BigInt>;

// The half-sum of positive roots: all fundamental coefficients 1.
Weight rho(const RankedContext& ctx);

// dim V(lambda) by the Weyl dimension formula.  Requires lambda dominant.
BigInt weyl_dim(const RankedContext& ctx, const Weight& la);

// Dominant weight multiplicities of V(lambda) by Freudenthal's recursion.
// Requires lambda dominant.  Results are cached per (rank, lambda).
Character weight_mults(const RankedContext& ctx, const Weight& la);

// V(nu) (x) V(la) as a sum of irreducibles.  Requires both dominant.  The
// weight system of the second factor is expanded, so keep the small factor
// second when iterating.  Cached per argument pair.
TensorDecomposition tensor(const RankedContext& ctx, const Weight& nu, const Weight& la);

// Constituents of V(la)^(x)n, n >= 1.  Computed progressively and cached,
// so sweeping n upward per lambda costs one tensor layer per step.
TensorDecomposition tensor_power_constituents(const RankedContext& ctx, const Weight& la,
                                              int n);

// Whether V(nu) appears in factors[0] (x) ... (x) factors[k].  Requires a
// nonempty factor list, all weights dominant.
bool contains(const RankedContext& ctx, const Weight& nu,
              const std::vector<Weight>& factors);

// Bounded search for the least n with V(mu + (n-1) la) inside V(la)^(x)n.
// The combinatorial criterion answers the unbounded question; this oracle
// semidecides it, reporting the witness or "none up to n_max".
struct TrivialityWitness {
  std::optional<int> witness;
  int searched_up_to = 0;
};

TrivialityWitness oracle_trivial(const RankedContext& ctx, const Weight& la,
                                 const Weight& mu, int n_max = 8);

// V(la + nu) inside V(mu) (x) V(la)?  The inclusion pattern behind the
// root-difference criteria.  Requires all three dominant.
bool verify_inclusion(const RankedContext& ctx, const Weight& nu, const Weight& mu,
                      const Weight& la);

}  // namespace orthocompact
