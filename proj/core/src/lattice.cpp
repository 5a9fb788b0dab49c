#include "orthocompact/lattice.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_set>

namespace orthocompact {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotDominant:     return "NotDominant";
    case Errc::NotBelow:        return "NotBelow";
    case Errc::NotInRootCoset:  return "NotInRootCoset";
    case Errc::NotIntegral:     return "NotIntegral";
    case Errc::NotNonNegative:  return "NotNonNegative";
    case Errc::NotAdjoint:      return "NotAdjoint";
    case Errc::NoUniqueMax:     return "NoUniqueMax";
    case Errc::SupportMismatch: return "SupportMismatch";
    case Errc::NotInXi:         return "NotInXi";
    case Errc::OutOfRange:      return "OutOfRange";
    case Errc::BadFormat:       return "BadFormat";
  }
  return "DomainError";
}

namespace {

void check_same_rank(int a, int b) {
  if (a != b) fail(Errc::OutOfRange, "rank mismatch between operands");
}

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

bool index_subset(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// --- Weight ------------------------------------------------------------

bool Weight::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int n) { return n == 0; });
}

bool Weight::dominant() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int n) { return n >= 0; });
}

Weight operator+(const Weight& a, const Weight& b) {
  check_same_rank(a.rank(), b.rank());
  Weight w = a;
  for (int i = 0; i < w.rank(); ++i) w.coeffs[i] += b.coeffs[i];
  return w;
}

Weight operator-(const Weight& a, const Weight& b) {
  check_same_rank(a.rank(), b.rank());
  Weight w = a;
  for (int i = 0; i < w.rank(); ++i) w.coeffs[i] -= b.coeffs[i];
  return w;
}

Weight Weight::operator-() const {
  Weight w = *this;
  for (int& n : w.coeffs) n = -n;
  return w;
}

Weight& Weight::operator+=(const Weight& b) {
  check_same_rank(rank(), b.rank());
  for (int i = 0; i < rank(); ++i) coeffs[i] += b.coeffs[i];
  return *this;
}

Weight zero_weight(int r) { return Weight(std::vector<int>(r, 0)); }

// --- RootVec -----------------------------------------------------------

bool RootVec::is_zero() const {
  return std::all_of(twice.begin(), twice.end(), [](int t) { return t == 0; });
}

bool RootVec::integral() const {
  return std::all_of(twice.begin(), twice.end(), [](int t) { return t % 2 == 0; });
}

bool RootVec::nonnegative() const {
  return std::all_of(twice.begin(), twice.end(), [](int t) { return t >= 0; });
}

std::vector<int> RootVec::alpha() const {
  if (!integral()) fail(Errc::NotIntegral, "vector has a half-integral simple-root coordinate");
  std::vector<int> a(twice.size());
  for (std::size_t i = 0; i < twice.size(); ++i) a[i] = twice[i] / 2;
  return a;
}

RootVec operator+(const RootVec& a, const RootVec& b) {
  check_same_rank(a.rank(), b.rank());
  RootVec v = a;
  for (int i = 0; i < v.rank(); ++i) v.twice[i] += b.twice[i];
  return v;
}

RootVec operator-(const RootVec& a, const RootVec& b) {
  check_same_rank(a.rank(), b.rank());
  RootVec v = a;
  for (int i = 0; i < v.rank(); ++i) v.twice[i] -= b.twice[i];
  return v;
}

RootVec& RootVec::operator+=(const RootVec& b) {
  check_same_rank(rank(), b.rank());
  for (int i = 0; i < rank(); ++i) twice[i] += b.twice[i];
  return *this;
}

RootVec& RootVec::operator-=(const RootVec& b) {
  check_same_rank(rank(), b.rank());
  for (int i = 0; i < rank(); ++i) twice[i] -= b.twice[i];
  return *this;
}

RootVec zero_rootvec(int r) { return RootVec(std::vector<int>(r, 0)); }

RootVec rootvec_from_alpha(std::vector<int> a) {
  for (int& x : a) x *= 2;
  return RootVec(std::move(a));
}

// --- RankedContext -----------------------------------------------------

RankedContext::RankedContext(int rank) : d_rank(rank) {
  if (rank < 2 || rank > 16)
    fail(Errc::OutOfRange, "rank must be between 2 and 16, got " + std::to_string(rank));

  // Build the r^2 positive roots: eps_i - eps_j and eps_i + eps_j for
  // i < j <= r (long), eps_i for i <= r (short).
  const int r = d_rank;
  for (int i = 1; i <= r; ++i) {           // eps_i = alpha_i + ... + alpha_r
    std::vector<int> a(r, 0);
    for (int t = i; t <= r; ++t) a[t - 1] = 1;
    d_roots.push_back(Root{rootvec_from_alpha(a), RootLength::Short});
  }
  for (int i = 1; i <= r; ++i) {
    for (int j = i + 1; j <= r; ++j) {
      std::vector<int> a(r, 0);            // eps_i - eps_j = alpha_i + ... + alpha_{j-1}
      for (int t = i; t < j; ++t) a[t - 1] = 1;
      d_roots.push_back(Root{rootvec_from_alpha(a), RootLength::Long});
      for (int t = j; t <= r; ++t) a[t - 1] = 2;  // eps_i + eps_j adds 2(alpha_j + ... + alpha_r)
      d_roots.push_back(Root{rootvec_from_alpha(a), RootLength::Long});
    }
  }
  std::sort(d_roots.begin(), d_roots.end(), [](const Root& x, const Root& y) {
    int sx = 0, sy = 0;
    for (int t : x.vec.twice) sx += t;
    for (int t : y.vec.twice) sy += t;
    if (sx != sy) return sx < sy;
    return x.vec.twice < y.vec.twice;
  });
}

int RankedContext::pairing(int i, int j) const {
  if (i < 1 || i > d_rank || j < 1 || j > d_rank)
    fail(Errc::OutOfRange, "simple-root index outside 1..r");
  if (i == j) return 2;
  if (i == d_rank && j == d_rank - 1) return -2;  // <alpha_{r-1}, alpha_r^vee>
  if (i == j + 1 || j == i + 1) return -1;
  return 0;
}

// --- coordinate changes --------------------------------------------------

RootVec omega_to_alpha(const RankedContext& ctx, const Weight& w) {
  check_same_rank(ctx.rank(), w.rank());
  const int r = ctx.rank();
  // Doubled simple-root coordinates of omega_k: 2*min(j,k) for k < r and
  // j for k = r (omega_r = varpi_r / 2).
  RootVec v = zero_rootvec(r);
  for (int j = 1; j <= r; ++j) {
    int d = 0;
    for (int k = 1; k < r; ++k) d += 2 * std::min(j, k) * w.coeffs[k - 1];
    d += j * w.coeffs[r - 1];
    v.twice[j - 1] = d;
  }
  return v;
}

std::vector<int> alpha_to_omega_twice(const RankedContext& ctx, const RootVec& v) {
  check_same_rank(ctx.rank(), v.rank());
  const int r = ctx.rank();
  std::vector<int> out(r, 0);
  for (int j = 1; j <= r; ++j) {
    int d = 0;
    for (int i = 1; i <= r; ++i) d += ctx.pairing(j, i) * v.twice[i - 1];
    out[j - 1] = d;
  }
  return out;
}

Weight alpha_to_omega(const RankedContext& ctx, const RootVec& v) {
  std::vector<int> d = alpha_to_omega_twice(ctx, v);
  for (int& x : d) {
    if (x % 2 != 0)
      fail(Errc::NotIntegral, "simple-root vector pairs to a half-integral weight");
    x /= 2;
  }
  return Weight(std::move(d));
}

RootVec varpi(const RankedContext& ctx, int k) {
  const int r = ctx.rank();
  if (k < 0 || k > r) fail(Errc::OutOfRange, "varpi index outside 0..r");
  RootVec v = zero_rootvec(r);
  if (k == 0) return v;
  for (int j = 1; j <= r; ++j) v.twice[j - 1] = 2 * (k == r ? j : std::min(j, k));
  return v;
}

// --- supports and dominance ----------------------------------------------

IndexSet support(const Weight& w) {
  IndexSet s;
  for (int i = 0; i < w.rank(); ++i)
    if (w.coeffs[i] != 0) s.push_back(i + 1);
  return s;
}

IndexSet support_delta(const RootVec& v) {
  if (!v.integral()) fail(Errc::NotIntegral, "support of a half-integral vector");
  IndexSet s;
  for (int i = 0; i < v.rank(); ++i)
    if (v.twice[i] != 0) s.push_back(i + 1);
  return s;
}

bool dominance_leq(const RankedContext& ctx, const Weight& mu, const Weight& la) {
  RootVec d = omega_to_alpha(ctx, la) - omega_to_alpha(ctx, mu);
  return d.integral() && d.nonnegative();
}

bool rational_dominance_leq(const RankedContext& ctx, const Weight& mu, const Weight& la) {
  return (omega_to_alpha(ctx, la) - omega_to_alpha(ctx, mu)).nonnegative();
}

std::vector<Root> phi_plus_of(const RankedContext& ctx, const Weight& la,
                              LengthFilter filter) {
  check_same_rank(ctx.rank(), la.rank());
  std::vector<Root> out;
  for (const Root& root : ctx.positive_roots()) {
    if (filter == LengthFilter::ShortOnly && root.length != RootLength::Short) continue;
    if (filter == LengthFilter::LongOnly && root.length != RootLength::Long) continue;
    bool meets = false;
    for (int i = 0; i < ctx.rank() && !meets; ++i)
      meets = root.vec.twice[i] != 0 && la.coeffs[i] != 0;
    if (meets) out.push_back(root);
  }
  return out;
}

std::vector<Weight> dominant_below(const RankedContext& ctx, const Weight& la) {
  if (!la.dominant()) fail(Errc::NotDominant, "dominant_below needs a dominant weight");
  const int r = ctx.rank();
  const std::vector<int> box = omega_to_alpha(ctx, la).twice;  // 2 * alpha-coords of la

  // Breadth-first subtraction of simple roots.  Every dominant weight has
  // non-negative rational simple-root coordinates, so a dominant mu <= la
  // satisfies alpha(la - mu) <= alpha(la) componentwise; the walk never
  // needs to leave that box.
  std::vector<Weight> found;
  std::queue<std::vector<int>> queue;
  std::unordered_set<std::vector<int>, VecHash> seen;
  queue.push(std::vector<int>(r, 0));
  seen.insert(queue.front());
  while (!queue.empty()) {
    std::vector<int> a = queue.front();  // alpha-coords of la - mu
    queue.pop();
    Weight mu = la;
    for (int j = 1; j <= r; ++j)
      for (int i = 1; i <= r; ++i) mu.coeffs[j - 1] -= ctx.pairing(j, i) * a[i - 1];
    if (mu.dominant()) found.push_back(mu);
    for (int i = 0; i < r; ++i) {
      if (2 * (a[i] + 1) > box[i]) continue;
      ++a[i];
      if (seen.insert(a).second) queue.push(a);
      --a[i];
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

Weight dual(const RankedContext& ctx, const Weight& w) {
  check_same_rank(ctx.rank(), w.rank());
  return w;  // -w_0 = id for B_r
}

// --- Euclidean structure ---------------------------------------------------

std::vector<int> eps_twice(const RankedContext& ctx, const Weight& w) {
  check_same_rank(ctx.rank(), w.rank());
  const int r = ctx.rank();
  // omega_k = eps_1 + ... + eps_k for k < r, omega_r = (eps_1+...+eps_r)/2,
  // so 2*eps_j(w) = 2*sum_{k>=j, k<r} n_k + n_r.
  std::vector<int> d(r, 0);
  for (int j = r; j >= 1; --j) {
    d[j - 1] = w.coeffs[r - 1];
    for (int k = j; k < r; ++k) d[j - 1] += 2 * w.coeffs[k - 1];
  }
  return d;
}

std::int64_t ddot(const std::vector<int>& a, const std::vector<int>& b) {
  check_same_rank(static_cast<int>(a.size()), static_cast<int>(b.size()));
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += static_cast<std::int64_t>(a[i]) * b[i];
  return s;
}

Weight canonical_dominant(const RankedContext& ctx, const Weight& w) {
  check_same_rank(ctx.rank(), w.rank());
  const int r = ctx.rank();
  Weight x = w;
  for (;;) {
    int i = 0;
    while (i < r && x.coeffs[i] >= 0) ++i;
    if (i == r) return x;
    // s_i(x) = x - <x, alpha_i^vee> alpha_i; each step raises x in the
    // dominance order, which is bounded by the dominant representative.
    const int n = x.coeffs[i];
    for (int j = 1; j <= r; ++j) x.coeffs[j - 1] -= n * ctx.pairing(j, i + 1);
  }
}

std::vector<Weight> weyl_orbit(const RankedContext& ctx, const Weight& w) {
  check_same_rank(ctx.rank(), w.rank());
  const int r = ctx.rank();
  std::set<Weight> orbit;
  std::queue<Weight> queue;
  orbit.insert(w);
  queue.push(w);
  while (!queue.empty()) {
    Weight x = queue.front();
    queue.pop();
    for (int i = 0; i < r; ++i) {
      const int n = x.coeffs[i];
      if (n == 0) continue;
      Weight y = x;
      for (int j = 1; j <= r; ++j) y.coeffs[j - 1] -= n * ctx.pairing(j, i + 1);
      if (orbit.insert(y).second) queue.push(y);
    }
  }
  return std::vector<Weight>(orbit.begin(), orbit.end());
}

}  // namespace orthocompact
