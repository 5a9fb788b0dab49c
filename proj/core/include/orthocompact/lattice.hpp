// Weight and root lattices of the odd orthogonal root system B_r.
//
// Simple roots are numbered 1..r in the Bourbaki order, alpha_r being the
// unique short simple root.  Two coordinate systems are used throughout:
//
//   - fundamental coordinates: a weight is the integer vector
//     (n_1,...,n_r) with lambda = sum n_k omega_k, omega_k the fundamental
//     weights of Spin(2r+1);
//   - simple-root coordinates: a vector sum a_i alpha_i.  On the weight
//     lattice the a_i are half-integers (the spin coset has a_r half-odd),
//     so RootVec stores the doubled values 2*a_i exactly.
//
// The character lattice of SO(2r+1) is the root lattice Z-Delta; weights of
// the special orthogonal group are exactly those with integral simple-root
// coordinates.  All arithmetic here is exact integer arithmetic.

#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "orthocompact/errors.hpp"

namespace orthocompact {

// Simple-root indices, 1-based, sorted ascending.
using IndexSet = std::vector<int>;

bool index_subset(const IndexSet& a, const IndexSet& b);

// A weight in fundamental coordinates.
struct Weight {
  std::vector<int> coeffs;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coeffs(std::move(c)) {}

  int rank() const { return static_cast<int>(coeffs.size()); }
  bool is_zero() const;
  bool dominant() const;  // all coefficients >= 0

  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);
  Weight operator-() const;
  Weight& operator+=(const Weight& b);

  bool operator==(const Weight&) const = default;
  // Lexicographic; used for canonical storage only, not for dominance.
  auto operator<=>(const Weight&) const = default;
};

Weight zero_weight(int r);

// A vector in simple-root coordinates with entries in (1/2)Z, stored doubled.
struct RootVec {
  std::vector<int> twice;  // twice[i] = 2 * a_{i+1}

  RootVec() = default;
  explicit RootVec(std::vector<int> t) : twice(std::move(t)) {}

  int rank() const { return static_cast<int>(twice.size()); }
  bool is_zero() const;
  bool integral() const;     // all entries even
  bool nonnegative() const;  // all entries >= 0

  // Integer coordinates a_i; requires integral().
  std::vector<int> alpha() const;

  friend RootVec operator+(const RootVec& a, const RootVec& b);
  friend RootVec operator-(const RootVec& a, const RootVec& b);
  RootVec& operator+=(const RootVec& b);
  RootVec& operator-=(const RootVec& b);

  bool operator==(const RootVec&) const = default;
  auto operator<=>(const RootVec&) const = default;
};

RootVec zero_rootvec(int r);
// Convenience: build from integer simple-root coordinates.
RootVec rootvec_from_alpha(std::vector<int> a);

enum class RootLength { Short, Long };

// A root of B_r in simple-root coordinates.  A positive root is short
// exactly when its alpha_r-coefficient is odd (the r short positive roots
// are eps_i = alpha_i + ... + alpha_r).
struct Root {
  RootVec vec;
  RootLength length = RootLength::Long;

  bool operator==(const Root&) const = default;
};

enum class LengthFilter { All, ShortOnly, LongOnly };

// Rank, Cartan pairings and the positive-root table of B_r.  Immutable;
// everything else in the library is a pure function of a context and its
// arguments.
class RankedContext {
public:
  // Supported ranks are 2..16; anything else is OutOfRange.
  explicit RankedContext(int rank);

  int rank() const { return d_rank; }

  // <alpha_j, alpha_i^vee>: 2 on the diagonal, -1 for adjacent nodes,
  // except <alpha_{r-1}, alpha_r^vee> = -2 (the arrow of the Dynkin
  // diagram points at the short root).  Indices are 1-based.
  int pairing(int i, int j) const;

  // All r^2 positive roots in canonical order: increasing coefficient sum,
  // lexicographic within a sum.
  const std::vector<Root>& positive_roots() const { return d_roots; }

private:
  int d_rank;
  std::vector<Root> d_roots;
};

// --- coordinate changes ----------------------------------------------------

// Simple-root coordinates of a weight; exact, denominators divide 2.
RootVec omega_to_alpha(const RankedContext& ctx, const Weight& w);

// Pairings <v, alpha_j^vee> of a simple-root vector, returned doubled so
// half-integral inputs stay exact.  Never fails.
std::vector<int> alpha_to_omega_twice(const RankedContext& ctx, const RootVec& v);

// Fundamental coordinates of v; the image is integral whenever v is
// integral.  NotIntegral if a half-integral v pairs to a half-integer.
Weight alpha_to_omega(const RankedContext& ctx, const RootVec& v);

// The weight varpi_k = sum_{j<k} j alpha_j + k sum_{j>=k} alpha_j of
// SO(2r+1), k in 0..r.  varpi_k = omega_k for 0 < k < r, varpi_0 = 0 and
// varpi_r = 2 omega_r.
RootVec varpi(const RankedContext& ctx, int k);

// --- supports and dominance ------------------------------------------------

// Supp(lambda): indices of nonzero fundamental coefficients.
IndexSet support(const Weight& w);

// Supp_Delta(theta): indices of nonzero simple-root coefficients.
// Requires integral input.
IndexSet support_delta(const RootVec& v);

// mu <= lambda: lambda - mu a non-negative integer combination of simple
// roots.  The rational variant only requires non-negative rational
// coefficients, so it also relates weights in different Z-Delta cosets.
bool dominance_leq(const RankedContext& ctx, const Weight& mu, const Weight& la);
bool rational_dominance_leq(const RankedContext& ctx, const Weight& mu, const Weight& la);

// Positive roots whose simple-root support meets Supp(lambda), optionally
// restricted by length.
std::vector<Root> phi_plus_of(const RankedContext& ctx, const Weight& la,
                              LengthFilter filter = LengthFilter::All);

// All dominant mu <= lambda (the dominant weights of the irreducible
// representation with highest weight lambda).  Requires lambda dominant.
// Sorted lexicographically.
std::vector<Weight> dominant_below(const RankedContext& ctx, const Weight& la);

// B_r representations are self-dual: dualization is the identity on
// weights.  Kept as a named operation so call sites stay legible where the
// general theory would dualize.
Weight dual(const RankedContext& ctx, const Weight& w);

// --- Euclidean structure ---------------------------------------------------

// Coordinates of a weight in the standard orthonormal basis (eps_1..eps_r),
// doubled: the spin coset has half-integral eps-coordinates.
std::vector<int> eps_twice(const RankedContext& ctx, const Weight& w);

// Scalar product of doubled eps-vectors, i.e. 4 * (u, v).
std::int64_t ddot(const std::vector<int>& a, const std::vector<int>& b);

// Dominant representative of the Weyl orbit of w.
Weight canonical_dominant(const RankedContext& ctx, const Weight& w);

// Weyl orbit of a dominant weight.
std::vector<Weight> weyl_orbit(const RankedContext& ctx, const Weight& w);

}  // namespace orthocompact
