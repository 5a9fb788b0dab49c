#include "orthocompact/triviality.hpp"

#include <algorithm>

namespace orthocompact {

namespace {

// Doubled alpha-coordinates of la - mu, checked to lie in N-Delta.
std::vector<int> difference_alpha(const RankedContext& ctx, const Weight& la,
                                  const Weight& mu) {
  RootVec d = omega_to_alpha(ctx, la) - omega_to_alpha(ctx, mu);
  if (!d.integral())
    fail(Errc::NotBelow, "difference lies in the spin coset, not the root lattice");
  if (!d.nonnegative())
    fail(Errc::NotBelow, "difference is not a non-negative root combination");
  return d.alpha();
}

void check_dominant(const Weight& w, const char* who) {
  if (!w.dominant()) fail(Errc::NotDominant, std::string(who) + " is not dominant");
}

}  // namespace

int q_index(const RankedContext& ctx, const Weight& la) {
  check_dominant(la, "weight");
  int q = 0;
  for (int i = 1; i <= ctx.rank(); ++i)
    if (la.coeffs[i - 1] != 0) q = i;
  return q;
}

int l_index(const RankedContext& ctx, const RootVec& theta) {
  if (!theta.integral()) fail(Errc::NotIntegral, "l_index of a half-integral vector");
  if (!theta.nonnegative()) fail(Errc::NotNonNegative, "l_index of a vector outside N-Delta");
  const int r = ctx.rank();
  const std::vector<int> a = theta.alpha();
  int l = r;
  while (l > 1 && a[l - 2] == a[r - 1]) --l;
  return l;
}

bool is_trivial(const RankedContext& ctx, const Weight& la, const Weight& mu) {
  check_dominant(la, "lambda");
  check_dominant(mu, "mu");
  const std::vector<int> a = difference_alpha(ctx, la, mu);
  const int r = ctx.rank();
  const int ar = a[r - 1];
  if (ar % 2 == 0) return true;
  return ar > 2 * std::min(r - q_index(ctx, la), r - q_index(ctx, mu));
}

bool in_neg_omega(const RankedContext& ctx, const Weight& la, const RootVec& theta) {
  check_dominant(la, "lambda");
  if (!theta.integral()) fail(Errc::NotIntegral, "theta has half-integral coordinates");
  if (!theta.nonnegative()) fail(Errc::NotNonNegative, "theta lies outside N-Delta");
  const int r = ctx.rank();

  // Supp(theta^+) inside Supp(lambda): theta^+ collects the positive
  // fundamental coefficients of the weight of theta.
  const Weight w = alpha_to_omega(ctx, theta);
  for (int i = 0; i < r; ++i)
    if (w.coeffs[i] > 0 && la.coeffs[i] == 0) return false;

  const int ar = theta.twice[r - 1] / 2;
  if (ar % 2 == 0) return true;
  return ar > 2 * std::min(r - l_index(ctx, theta), r - q_index(ctx, la));
}

bool satisfies_star(const RankedContext& ctx, const Weight& la) {
  const int r = ctx.rank();
  if (la.coeffs[r - 1] != 0) return true;
  for (int i = 1; i < r; ++i)
    if (la.coeffs[i - 1] != 0) return false;
  return true;  // Supp(lambda) is empty or {alpha_r}
}

std::vector<Weight> little_brothers(const RankedContext& ctx, const Weight& la) {
  check_dominant(la, "lambda");
  if (satisfies_star(ctx, la)) return {};
  // (*) fails: alpha_r is not in the support and some long simple root is;
  // p = q(lambda) < r picks the last of them.  The little brother is
  // lambda - (alpha_p + ... + alpha_r) = lambda - omega_p + omega_{p-1}.
  const int p = q_index(ctx, la);
  Weight lb = la;
  lb.coeffs[p - 1] -= 1;
  if (p > 1) lb.coeffs[p - 2] += 1;
  return {lb};
}

bool sw_contains_criterion(const RankedContext& ctx, int n, const Weight& mu) {
  if (n < 0) fail(Errc::OutOfRange, "tensor exponent must be non-negative");
  check_dominant(mu, "mu");
  Weight top = zero_weight(ctx.rank());
  top.coeffs[0] = n;
  const std::vector<int> a = difference_alpha(ctx, top, mu);
  const int r = ctx.rank();
  const int ar = a[r - 1];
  if (ar % 2 == 0) return true;
  return ar > 2 * (r - q_index(ctx, mu));
}

bool sw_contains_partition(const RankedContext& ctx, int n, const Weight& mu) {
  if (n < 0) fail(Errc::OutOfRange, "tensor exponent must be non-negative");
  check_dominant(mu, "mu");
  Weight top = zero_weight(ctx.rank());
  top.coeffs[0] = n;
  difference_alpha(ctx, top, mu);  // precondition mu <= n omega_1 only

  // mu <= n omega_1 lies in the root lattice, so its eps-coordinates form
  // an honest partition (mu_1 >= ... >= mu_r >= 0).
  const int r = ctx.rank();
  const std::vector<int> d = eps_twice(ctx, mu);
  std::vector<int> parts(r);
  for (int i = 0; i < r; ++i) parts[i] = d[i] / 2;

  int size = 0, rows = 0;
  for (int p : parts) {
    size += p;
    if (p > 0) ++rows;
  }

  // V_mu occurs in the n-th power of the vector representation iff mu or
  // its associate (first column complemented to 2r+1-rows boxes) is an
  // orthogonal label of a degree-n constituent: size at most n and of the
  // same parity as n.
  if (size <= n && (n - size) % 2 == 0) return true;
  const int padded = size + (2 * r + 1 - 2 * rows);
  return padded <= n && (n - padded) % 2 == 0;
}

}  // namespace orthocompact
