#include "orthocompact/compactify.hpp"

#include <algorithm>

namespace orthocompact {

SimpleSubset make_simple_subset(const RankedContext& ctx, std::vector<Weight> weights) {
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
  if (weights.empty())
    fail(Errc::NoUniqueMax, "an empty set has no dominance-maximal element");

  for (const Weight& w : weights) {
    if (ctx.rank() != w.rank()) fail(Errc::OutOfRange, "weight rank mismatch");
    if (!w.dominant()) fail(Errc::NotDominant, "simple subsets contain dominant weights only");
  }
  for (std::size_t i = 1; i < weights.size(); ++i) {
    if (!(omega_to_alpha(ctx, weights[i]) - omega_to_alpha(ctx, weights[0])).integral())
      fail(Errc::NotAdjoint, "weights lie in different root-lattice cosets");
  }

  // A finite poset has a unique maximal element iff that element dominates
  // everything, so the subset is simple and adjoint exactly when one
  // weight survives the maximality filter.
  std::vector<Weight> maxima;
  for (const Weight& w : weights) {
    bool is_max = true;
    for (const Weight& v : weights)
      if (v != w && dominance_leq(ctx, w, v)) { is_max = false; break; }
    if (is_max) maxima.push_back(w);
  }
  if (maxima.size() != 1)
    fail(Errc::NoUniqueMax, std::to_string(maxima.size()) + " dominance-maximal elements");

  SimpleSubset pi;
  pi.weights = std::move(weights);
  pi.max = maxima.front();
  return pi;
}

std::vector<Weight> trivial_members(const RankedContext& ctx, const SimpleSubset& pi) {
  std::vector<Weight> out;
  for (const Weight& mu : pi.weights)
    if (is_trivial(ctx, pi.max, mu)) out.push_back(mu);
  return out;
}

SimpleSubset reduce(const RankedContext& ctx, const SimpleSubset& pi) {
  std::vector<Weight> nontrivial;
  for (const Weight& mu : pi.weights)
    if (!is_trivial(ctx, pi.max, mu)) nontrivial.push_back(mu);

  std::vector<Weight> kept;
  kept.push_back(pi.max);
  for (const Weight& mu : nontrivial) {
    bool maximal = true;
    for (const Weight& nu : nontrivial)
      if (nu != mu && lambda_leq(ctx, pi.max, mu, nu)) { maximal = false; break; }
    if (maximal) kept.push_back(mu);
  }
  return make_simple_subset(ctx, std::move(kept));
}

bool equivalent(const RankedContext& ctx, const SimpleSubset& a, const SimpleSubset& b) {
  if (ctx.rank() != a.max.rank() || ctx.rank() != b.max.rank())
    fail(Errc::OutOfRange, "weight rank mismatch");
  if (support(a.max) != support(b.max)) return false;
  if (a.weights.size() != b.weights.size()) return false;
  std::vector<Weight> da, db;
  for (const Weight& w : a.weights) da.push_back(w - a.max);
  for (const Weight& w : b.weights) db.push_back(w - b.max);
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  return da == db;
}

bool morphism_exists(const RankedContext& ctx, const SimpleSubset& a,
                     const SimpleSubset& b) {
  if (support(a.max) != support(b.max))
    fail(Errc::SupportMismatch, "morphism criterion needs equal supports");

  // The criterion must be witnessed by non-trivial members: the maximum
  // itself always satisfies mu' - max_b <= 0 vacuously and would otherwise
  // let any subset dominate any other with the same support.
  const SimpleSubset ra = reduce(ctx, a);
  const SimpleSubset rb = reduce(ctx, b);
  for (const Weight& mup : rb.weights) {
    if (mup == rb.max) continue;
    bool witnessed = false;
    for (const Weight& mu : ra.weights) {
      if (mu == ra.max) continue;
      // mu' - max_b <=_lambda mu - max_a, evaluated on translate vectors.
      if (lambda_leq(ctx, a.max, mup - b.max + a.max, mu)) { witnessed = true; break; }
    }
    if (!witnessed) return false;
  }
  return true;
}

bool isomorphic(const RankedContext& ctx, const SimpleSubset& a, const SimpleSubset& b) {
  return equivalent(ctx, reduce(ctx, a), reduce(ctx, b));
}

bool is_normal(const RankedContext& ctx, const SimpleSubset& pi) {
  for (const Weight& lb : little_brothers(ctx, pi.max))
    if (!std::binary_search(pi.weights.begin(), pi.weights.end(), lb)) return false;
  return true;
}

}  // namespace orthocompact
