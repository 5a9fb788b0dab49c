#include "orthocompact/orders.hpp"

#include <algorithm>
#include <unordered_set>

namespace orthocompact {

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Depth-first multiset search for rem as an N-combination of gens[lo..].
// Failures are memoized per call on (rem, lo); successes short-circuit.
// out, when non-null, receives the chosen roots.
bool decompose_rec(const std::vector<Root>& gens, std::vector<int>& rem, std::size_t lo,
                   std::unordered_set<std::vector<int>, KeyHash>& failed,
                   std::vector<Root>* out) {
  if (std::all_of(rem.begin(), rem.end(), [](int t) { return t == 0; })) return true;
  if (lo == gens.size()) return false;

  std::vector<int> key = rem;
  key.push_back(static_cast<int>(lo));
  if (failed.count(key)) return false;

  const std::vector<int>& g = gens[lo].vec.twice;
  bool fits = true;
  for (std::size_t i = 0; i < rem.size() && fits; ++i) fits = rem[i] >= g[i];
  if (fits) {
    for (std::size_t i = 0; i < rem.size(); ++i) rem[i] -= g[i];
    if (decompose_rec(gens, rem, lo, failed, out)) {
      if (out) out->push_back(gens[lo]);
      return true;
    }
    for (std::size_t i = 0; i < rem.size(); ++i) rem[i] += g[i];
  }
  if (decompose_rec(gens, rem, lo + 1, failed, out)) return true;

  failed.insert(std::move(key));
  return false;
}

void check_lambda(const Weight& la) {
  if (!la.dominant()) fail(Errc::NotDominant, "lambda is not dominant");
}

}  // namespace

bool nphi_membership(const RankedContext& ctx, const Weight& la, const RootVec& theta,
                     LengthFilter filter) {
  return nphi_decompose(ctx, la, theta, filter).has_value();
}

std::optional<std::vector<Root>> nphi_decompose(const RankedContext& ctx, const Weight& la,
                                                const RootVec& theta, LengthFilter filter) {
  check_lambda(la);
  if (!theta.integral()) fail(Errc::NotIntegral, "vector outside the root lattice");
  if (!theta.nonnegative()) return std::nullopt;

  const std::vector<Root> gens = phi_plus_of(ctx, la, filter);
  std::vector<int> rem = theta.twice;
  std::unordered_set<std::vector<int>, KeyHash> failed;
  std::vector<Root> witness;
  if (!decompose_rec(gens, rem, 0, failed, &witness)) return std::nullopt;
  std::sort(witness.begin(), witness.end(), [](const Root& x, const Root& y) {
    return x.vec.twice < y.vec.twice;
  });
  return witness;
}

bool lambda_leq(const RankedContext& ctx, const Weight& la, const Weight& nu,
                const Weight& mu) {
  check_lambda(la);
  RootVec d = omega_to_alpha(ctx, mu) - omega_to_alpha(ctx, nu);
  if (!d.integral())
    fail(Errc::NotInRootCoset, "weights differ by a spin-coset vector");
  return nphi_membership(ctx, la, d, LengthFilter::All);
}

bool xi_membership(const RankedContext& ctx, const Weight& la, const RootVec& tau) {
  check_lambda(la);
  if (la.is_zero()) fail(Errc::OutOfRange, "Xi(lambda) needs a nonzero lambda");
  if (!tau.integral()) fail(Errc::NotIntegral, "vector outside the root lattice");
  if (!tau.nonnegative()) return false;

  const int r = ctx.rank();
  const std::vector<int> a = tau.alpha();
  const IndexSet supp = support(la);
  const int p = supp.front();
  const int q = supp.back();

  for (int i = 1; i < p; ++i)                        // (C1)
    if (a[i - 1] > a[i]) return false;

  for (std::size_t t = 1; t < supp.size(); ++t) {    // (C2)
    const int s0 = supp[t - 1], t0 = supp[t];
    int var = 0;
    for (int i = s0; i < t0; ++i) var += std::abs(a[i] - a[i - 1]);
    if (var > a[s0 - 1] + a[t0 - 1]) return false;
  }

  if (q < r) {                                       // (C3)
    if (a[r - 1] % 2 != 0) return false;
    int ascent = 0;
    for (int i = q; i < r; ++i) ascent += std::max(0, a[i] - a[i - 1]);
    if (2 * ascent > a[r - 1]) return false;
  }
  return true;
}

Root xi_step(const RankedContext& ctx, const Weight& la, const RootVec& tau) {
  if (!xi_membership(ctx, la, tau) || tau.is_zero())
    fail(Errc::NotInXi, "xi_step needs a nonzero member of Xi(lambda)");

  const int r = ctx.rank();
  const std::vector<int> a = tau.alpha();
  const IndexSet supp = support(la);
  const int q = supp.back();

  // s0: first support index of lambda that tau touches (one always exists
  // for a nonzero member); j: the zero prefix of tau ends at index j.
  int s0 = 0;
  for (int s : supp)
    if (a[s - 1] != 0) { s0 = s; break; }
  int j = 0;
  while (a[j] == 0) ++j;  // j+1 = min Supp_Delta(tau), and j < s0

  int k = 0;
  bool doubled_tail = false;
  if (s0 < q) {
    int t0 = 0;
    for (int s : supp)
      if (s > s0) { t0 = s; break; }
    bool monotone = true;
    for (int i = s0; i < t0 && monotone; ++i) monotone = a[i - 1] <= a[i];
    if (monotone) {
      k = t0 - 1;
      // Stopping at k = r-1 subtracts 2 from the last coordinate of
      // lambda + tau^- (the double bond), and here tau^- vanishes there
      // since a_{r-1} <= a_r.  When <lambda, alpha_r^vee> = 1 that breaks
      // dominance, so take the short string through alpha_r instead: it is
      // allowed (alpha_r = alpha_{t0} lies in the support) and only lowers
      // the j-th coordinate, which tau^- covers.
      if (k == r - 1 && la.coeffs[r - 1] == 1) k = r;
    } else {
      for (int i = s0; i < t0; ++i)
        if (a[i - 1] > a[i]) k = i;  // last descent before t0
    }
  } else if (s0 == q && q == r) {
    k = r;
  } else if (s0 == q && a[r - 1] == 0) {
    for (int i = q; i <= r; ++i)
      if (a[i - 1] > 0) k = i;       // last nonzero entry past q
  } else {  // s0 == q < r, a_r != 0
    k = q;
    for (int i = q; i < r; ++i)
      if (a[i - 1] < a[i]) { k = i; break; }  // first ascent past q, if any
    doubled_tail = true;
  }

  std::vector<int> th(r, 0);
  for (int i = j + 1; i <= k; ++i) th[i - 1] = 1;
  if (doubled_tail)
    for (int i = k + 1; i <= r; ++i) th[i - 1] = 2;

  Root theta{rootvec_from_alpha(th), k == r ? RootLength::Short : RootLength::Long};
  // Internal invariant: the constructed vector is a positive root.
  const std::vector<Root>& table = ctx.positive_roots();
  if (std::find(table.begin(), table.end(), theta) == table.end())
    throw std::logic_error("xi_step produced a non-root");
  return theta;
}

std::vector<Root> xi_decompose(const RankedContext& ctx, const Weight& la,
                               const RootVec& tau) {
  if (!xi_membership(ctx, la, tau))
    fail(Errc::NotInXi, "vector is not a member of Xi(lambda)");
  std::vector<Root> parts;
  RootVec rest = tau;
  while (!rest.is_zero()) {
    Root theta = xi_step(ctx, la, rest);
    rest -= theta.vec;
    parts.push_back(std::move(theta));
  }
  return parts;
}

bool section4_leq(const RankedContext& ctx, const IndexSet& I, const RootVec& th1,
                  const RootVec& th2) {
  for (int i : I)
    if (i < 1 || i > ctx.rank()) fail(Errc::OutOfRange, "support index outside 1..r");
  RootVec d = th2 - th1;
  if (!d.integral()) fail(Errc::NotIntegral, "difference outside the root lattice");
  if (!d.nonnegative()) return false;
  for (int i : I)
    if (d.twice[i - 1] != 0) return true;
  return false;
}

}  // namespace orthocompact
