// Verification sweeps.  Each check recomputes one of the frozen
// classification statements by an independent route and compares; on the
// first mismatch it stops and reports the offending instance, so a
// failure is always a concrete counterexample.

#include "orthocompact/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <utility>

#include "orthocompact/charring.hpp"
#include "orthocompact/compactify.hpp"
#include "orthocompact/lattice.hpp"
#include "orthocompact/orders.hpp"
#include "orthocompact/posets.hpp"
#include "orthocompact/textio.hpp"
#include "orthocompact/triviality.hpp"

namespace orthocompact {

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
CheckResult run_check(std::string name, F body) {
  CheckResult res;
  res.name = std::move(name);
  const auto t0 = Clock::now();
  try {
    res.pass = body(res.notes);
  } catch (const std::exception& e) {
    res.pass = false;
    res.notes = std::string("exception: ") + e.what();
  }
  res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return res;
}

using Tuple = std::vector<int>;

std::string tuple_str(const Tuple& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string subset_str(const SimpleSubset& pi) {
  std::string s = "{";
  for (std::size_t i = 0; i < pi.weights.size(); ++i) {
    if (i) s += ", ";
    s += format_weight(pi.weights[i]);
  }
  return s + "}";
}

std::set<Tuple> vertex_tuples(const HassePoset& p) {
  std::set<Tuple> out;
  for (const RootVec& v : p.vertices) out.insert(v.alpha());
  return out;
}

std::set<std::pair<Tuple, Tuple>> edge_tuples(const HassePoset& p) {
  std::set<std::pair<Tuple, Tuple>> out;
  for (const auto& [from, to] : p.edges)
    out.insert({p.vertices[from].alpha(), p.vertices[to].alpha()});
  return out;
}

bool same_poset(const HassePoset& got, const std::set<Tuple>& want_vs,
                const std::set<std::pair<Tuple, Tuple>>& want_es, std::string& notes) {
  const auto vs = vertex_tuples(got);
  if (vs != want_vs) {
    for (const Tuple& v : vs)
      if (!want_vs.count(v)) {
        notes = "unexpected vertex " + tuple_str(v);
        return false;
      }
    for (const Tuple& v : want_vs)
      if (!vs.count(v)) {
        notes = "missing vertex " + tuple_str(v);
        return false;
      }
  }
  const auto es = edge_tuples(got);
  if (es != want_es) {
    for (const auto& e : es)
      if (!want_es.count(e)) {
        notes = "unexpected edge " + tuple_str(e.first) + " -> " + tuple_str(e.second);
        return false;
      }
    for (const auto& e : want_es)
      if (!es.count(e)) {
        notes = "missing edge " + tuple_str(e.first) + " -> " + tuple_str(e.second);
        return false;
      }
  }
  notes = std::to_string(vs.size()) + " vertices, " + std::to_string(es.size()) + " edges";
  return true;
}

// All weights with coefficients in {0..bound}; every one is dominant.
std::vector<Weight> coefficient_box(int r, int bound) {
  std::vector<Weight> out;
  Weight w = zero_weight(r);
  for (;;) {
    out.push_back(w);
    int i = 0;
    while (i < r && w.coeffs[i] == bound) w.coeffs[i++] = 0;
    if (i == r) break;
    ++w.coeffs[i];
  }
  return out;
}

void sum_capped_rec(std::vector<int>& a, std::size_t pos, int left,
                    const std::function<void(const std::vector<int>&)>& f) {
  if (pos == a.size()) {
    f(a);
    return;
  }
  for (int v = 0; v <= left; ++v) {
    a[pos] = v;
    sum_capped_rec(a, pos + 1, left - v, f);
  }
}

// All vectors in N^r with coefficient sum <= cap.
void for_each_sum_capped(int r, int cap, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> a(static_cast<std::size_t>(r), 0);
  sum_capped_rec(a, 0, cap, f);
}

}  // namespace

std::vector<CheckResult> verify_tables() {
  std::vector<CheckResult> out;

  out.push_back(run_check("chain-poset-r3", [](std::string& notes) {
    const RankedContext ctx(3);
    const HassePoset p = poset_T2(ctx, {1, 2}, 4);
    std::set<Tuple> vs;
    std::set<std::pair<Tuple, Tuple>> es;
    for (int k = 0; k <= 4; ++k) vs.insert({k, 1, 1});
    for (int k = 0; k < 4; ++k) es.insert({{k, 1, 1}, {k + 1, 1, 1}});
    return same_poset(p, vs, es, notes);
  }));

  out.push_back(run_check("branch-poset-r3", [](std::string& notes) {
    const RankedContext ctx(3);
    const HassePoset p = poset_T2(ctx, {1}, 3);
    const std::set<Tuple> vs = {{1, 1, 1}, {2, 1, 1}, {3, 1, 1}, {3, 3, 3}};
    const std::set<std::pair<Tuple, Tuple>> es = {{{1, 1, 1}, {2, 1, 1}},
                                                  {{2, 1, 1}, {3, 1, 1}},
                                                  {{2, 1, 1}, {3, 3, 3}}};
    return same_poset(p, vs, es, notes);
  }));

  out.push_back(run_check("grid-poset-r4", [](std::string& notes) {
    const RankedContext ctx(4);
    const HassePoset p = poset_T2(ctx, {1, 2, 3}, 3);
    std::set<Tuple> vs;
    std::set<std::pair<Tuple, Tuple>> es;
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; j <= 3; ++j) {
        vs.insert({i, j, 1, 1});
        if (i < 3) es.insert({{i, j, 1, 1}, {i + 1, j, 1, 1}});
        if (j < 3) es.insert({{i, j, 1, 1}, {i, j + 1, 1, 1}});
      }
    return same_poset(p, vs, es, notes);
  }));

  out.push_back(run_check("penultimate-support", [](std::string& notes) {
    for (int r = 3; r <= 5; ++r) {
      const RankedContext ctx(r);
      const auto got = enum_T2(ctx, {r - 1}, 6);
      Tuple expect(static_cast<std::size_t>(r), 0);
      expect[r - 2] = expect[r - 1] = 1;
      if (got.size() != 1 || got.front().alpha() != expect) {
        notes = "r=" + std::to_string(r) + ": expected the single vector " + tuple_str(expect) +
                ", got " + std::to_string(got.size()) + " members";
        return false;
      }
    }
    notes = "r=3,4,5: single member each";
    return true;
  }));

  return out;
}

std::vector<CheckResult> verify_theorem_vs_oracle(int r_max, int coeff_bound, int n_max) {
  std::vector<CheckResult> out;
  for (int r = 2; r <= r_max; ++r) {
    out.push_back(run_check("triviality-oracle-r" + std::to_string(r), [=](std::string& notes) {
      const RankedContext ctx(r);
      long pairs = 0;
      int max_witness = 0;
      for (const Weight& la : coefficient_box(r, coeff_bound)) {
        for (const Weight& mu : dominant_below(ctx, la)) {
          const bool predicted = is_trivial(ctx, la, mu);
          const TrivialityWitness got = oracle_trivial(ctx, la, mu, n_max);
          ++pairs;
          if (predicted && !got.witness) {
            notes = "lambda=" + format_weight(la) + " mu=" + format_weight(mu) +
                    ": predicted trivial but no witness up to n=" + std::to_string(n_max);
            return false;
          }
          if (!predicted && got.witness) {
            notes = "lambda=" + format_weight(la) + " mu=" + format_weight(mu) +
                    ": predicted non-trivial but witness n=" + std::to_string(*got.witness);
            return false;
          }
          if (got.witness) max_witness = std::max(max_witness, *got.witness);
        }
      }
      notes = std::to_string(pairs) + " pairs, max witness " + std::to_string(max_witness);
      return true;
    }));
  }
  return out;
}

std::vector<CheckResult> verify_schur_weyl(int r_max, int n_max) {
  std::vector<CheckResult> out;
  for (int r = 2; r <= r_max; ++r) {
    out.push_back(
        run_check("standard-power-constituents-r" + std::to_string(r), [=](std::string& notes) {
          const RankedContext ctx(r);
          Weight omega1 = zero_weight(r);
          omega1.coeffs[0] = 1;
          long checked = 0;
          for (int n = 1; n <= n_max; ++n) {
            const TensorDecomposition ladder = tensor_power_constituents(ctx, omega1, n);
            Weight top = zero_weight(r);
            top.coeffs[0] = n;
            const auto below = dominant_below(ctx, top);
            const std::set<Weight> universe(below.begin(), below.end());
            for (const auto& [nu, mult] : ladder)
              if (!universe.count(nu)) {
                notes = "n=" + std::to_string(n) + ": constituent " + format_weight(nu) +
                        " is not a dominant weight below the power's highest weight";
                return false;
              }
            for (const Weight& nu : below) {
              const bool in_power = ladder.count(nu) > 0;
              const bool by_criterion = sw_contains_criterion(ctx, n, nu);
              const bool by_partition = sw_contains_partition(ctx, n, nu);
              ++checked;
              if (in_power != by_criterion || in_power != by_partition) {
                notes = "n=" + std::to_string(n) + " mu=" + format_weight(nu) + ": tensor=" +
                        (in_power ? "yes" : "no") + " criterion=" + (by_criterion ? "yes" : "no") +
                        " partition=" + (by_partition ? "yes" : "no");
                return false;
              }
            }
          }
          notes = std::to_string(checked) + " (n, weight) instances";
          return true;
        }));
  }
  return out;
}

std::vector<CheckResult> verify_xi_equivalence(int r_max, int sum_bound) {
  std::vector<CheckResult> out;
  for (int r = 2; r <= r_max; ++r) {
    out.push_back(run_check("xi-cone-r" + std::to_string(r), [=](std::string& notes) {
      const RankedContext ctx(r);

      // One representative per support of size <= 2, plus a scaled copy:
      // the cone of (long) roots non-orthogonal to lambda only sees the
      // support, so equal answers for both copies are part of the check.
      std::vector<Weight> lambdas;
      for (int i = 1; i <= r; ++i)
        for (int j = i; j <= r; ++j) {
          Weight la = zero_weight(r);
          la.coeffs[i - 1] = 1;
          la.coeffs[j - 1] = 1;  // i == j gives a single-index support
          lambdas.push_back(la);
          la.coeffs[i - 1] += 1;
          lambdas.push_back(la);
        }

      long checked = 0;
      for (const Weight& la : lambdas) {
        const bool short_simple_in_support = la.coeffs[r - 1] != 0;
        const LengthFilter filter =
            short_simple_in_support ? LengthFilter::All : LengthFilter::LongOnly;
        const std::vector<Root> phi = phi_plus_of(ctx, la, LengthFilter::All);

        bool ok = true;
        for_each_sum_capped(r, sum_bound, [&](const std::vector<int>& a) {
          if (!ok) return;
          ++checked;
          const RootVec tau = rootvec_from_alpha(a);
          const bool by_conditions = xi_membership(ctx, la, tau);
          const bool by_cone = nphi_membership(ctx, la, tau, filter);
          if (by_conditions != by_cone) {
            notes = "lambda=" + format_weight(la) + " tau=" + tuple_str(a) + ": conditions say " +
                    (by_conditions ? "yes" : "no") + ", cone says " + (by_cone ? "yes" : "no");
            ok = false;
            return;
          }
          if (!by_conditions || tau == zero_rootvec(r)) return;

          const Root step = xi_step(ctx, la, tau);
          const bool in_phi =
              std::any_of(phi.begin(), phi.end(), [&](const Root& t) { return t.vec == step.vec; });
          bool tail_nonneg = true;
          for (int i = 0; i < r; ++i)
            if (tau.twice[i] < step.vec.twice[i]) tail_nonneg = false;
          const bool tail_in = tail_nonneg && xi_membership(ctx, la, tau - step.vec);
          const Weight tau_omega = alpha_to_omega(ctx, tau);
          Weight corrected = la + alpha_to_omega(ctx, step.vec);
          for (int i = 0; i < r; ++i) corrected.coeffs[i] += std::max(0, -tau_omega.coeffs[i]);
          const bool stays_dominant = corrected.dominant();
          const bool length_ok = short_simple_in_support || step.length == RootLength::Long;
          if (!(in_phi && tail_in && stays_dominant && length_ok)) {
            notes = "lambda=" + format_weight(la) + " tau=" + tuple_str(a) + " step=" +
                    tuple_str(step.vec.alpha()) + ": root=" + (in_phi ? "ok" : "BAD") + " tail=" +
                    (tail_in ? "ok" : "BAD") + " dominant=" + (stays_dominant ? "ok" : "BAD") +
                    " length=" + (length_ok ? "ok" : "BAD");
            ok = false;
          }
        });
        if (!ok) return false;
      }
      notes = std::to_string(checked) + " (lambda, tau) instances";
      return true;
    }));
  }
  return out;
}

std::vector<CheckResult> verify_root_difference_inclusions(int coeff_bound) {
  std::vector<CheckResult> out;
  out.push_back(run_check("root-difference-inclusions", [=](std::string& notes) {
    const RankedContext ctx(3);
    const int r = ctx.rank();

    std::map<std::vector<int>, RootLength> root_table;
    for (const Root& th : ctx.positive_roots()) root_table[th.vec.twice] = th.length;

    const auto box = coefficient_box(r, coeff_bound);
    long checked = 0;
    for (const Weight& la : box) {
      const IndexSet supp_la = support(la);
      if (supp_la.empty()) continue;
      for (const Weight& mu : box) {
        for (const Weight& nu : dominant_below(ctx, mu)) {
          const RootVec th = omega_to_alpha(ctx, mu - nu);
          if (th == zero_rootvec(r)) continue;

          const IndexSet window = support_delta(th);
          bool meets = false;
          for (int i : window)
            if (std::binary_search(supp_la.begin(), supp_la.end(), i)) meets = true;
          if (!meets) continue;

          const auto entry = root_table.find(th.twice);
          const bool is_root = entry != root_table.end();
          const bool is_long_root = is_root && entry->second == RootLength::Long;
          bool doubled_short = false;
          {
            std::vector<int> half = th.twice;
            bool halvable = true;
            for (int& x : half) {
              if (x % 2 != 0) {
                halvable = false;
                break;
              }
              x /= 2;
            }
            if (halvable) {
              const auto it = root_table.find(half);
              doubled_short = it != root_table.end() && it->second == RootLength::Short;
            }
          }

          const bool long_case = is_long_root;
          const bool short_simple_case = is_root && (la + nu).coeffs[r - 1] != 0;
          // The doubled-short case needs a support index of lambda strictly
          // inside the difference's index window [p+1, r-1]: the reduction to
          // that window discards any support of lambda outside it, and with
          // support only at the window's short end the inclusion can fail
          // (e.g. r=3, lambda=(1,0,1), mu=(0,2,0), nu=(2,0,0)).
          bool interior = false;
          for (int i : supp_la)
            if (i >= window.front() && i < r) interior = true;
          const bool doubled_case = doubled_short && interior;
          if (!(long_case || short_simple_case || doubled_case)) continue;

          ++checked;
          if (!verify_inclusion(ctx, nu, mu, la)) {
            notes = "lambda=" + format_weight(la) + " mu=" + format_weight(mu) + " nu=" +
                    format_weight(nu) + " (difference " + tuple_str(th.alpha()) +
                    "): inclusion fails";
            return false;
          }
        }
      }
    }
    notes = std::to_string(checked) + " inclusion instances";
    return true;
  }));
  return out;
}

std::vector<CheckResult> verify_character_sanity(int samples, unsigned seed) {
  std::vector<CheckResult> out;
  out.push_back(run_check("tensor-sanity", [=](std::string& notes) {
    std::mt19937 gen(seed);
    const RankedContext ctx2(2), ctx3(3);
    for (int s = 0; s < samples; ++s) {
      const int r = 2 + static_cast<int>(gen() % 2u);
      const RankedContext& ctx = r == 2 ? ctx2 : ctx3;
      Weight la = zero_weight(r), mu = zero_weight(r);
      for (int i = 0; i < r; ++i) la.coeffs[i] = static_cast<int>(gen() % 4u);
      for (int i = 0; i < r; ++i) mu.coeffs[i] = static_cast<int>(gen() % 4u);

      const std::string label = "sample " + std::to_string(s) + " (r=" + std::to_string(r) +
                                ", lambda=" + format_weight(la) + ", mu=" + format_weight(mu) + ")";
      const TensorDecomposition dec = tensor(ctx, la, mu);
      BigInt total = 0;
      for (const auto& [nu, mult] : dec) total += mult * weyl_dim(ctx, nu);
      if (total != weyl_dim(ctx, la) * weyl_dim(ctx, mu)) {
        notes = label + ": dimensions do not add up";
        return false;
      }
      if (tensor(ctx, mu, la) != dec) {
        notes = label + ": decomposition is not symmetric";
        return false;
      }
      const auto top = dec.find(la + mu);
      if (top == dec.end() || top->second != 1) {
        notes = label + ": highest weight multiplicity is not one";
        return false;
      }
    }
    notes = std::to_string(samples) + " random decompositions";
    return true;
  }));
  return out;
}

std::vector<CheckResult> verify_classification_coherence(int r_max, int coeff_bound) {
  std::vector<CheckResult> out;
  for (int r = 2; r <= r_max; ++r) {
    out.push_back(
        run_check("classification-coherence-r" + std::to_string(r), [=](std::string& notes) {
          const RankedContext ctx(r);
          long subsets = 0, morphism_pairs = 0;
          for (const Weight& la : coefficient_box(r, coeff_bound)) {
            const auto below = dominant_below(ctx, la);
            const SimpleSubset full = make_simple_subset(ctx, below);
            if (!is_normal(ctx, full)) {
              notes = "lambda=" + format_weight(la) +
                      ": the full weight-system subset reports non-normal";
              return false;
            }

            // A deterministic spread of subsets with maximum la: the full
            // set, its reduction, the bare maximum, all pairs {la, mu},
            // and consecutive triples.
            std::vector<SimpleSubset> family;
            family.push_back(full);
            family.push_back(reduce(ctx, full));
            family.push_back(make_simple_subset(ctx, {la}));
            std::vector<Weight> rest;
            for (const Weight& w : below)
              if (w != la) rest.push_back(w);
            for (const Weight& w : rest)
              family.push_back(make_simple_subset(ctx, {la, w}));
            for (std::size_t i = 0; i + 1 < rest.size(); i += 2)
              family.push_back(make_simple_subset(ctx, {la, rest[i], rest[i + 1]}));

            for (const SimpleSubset& pi : family) {
              ++subsets;
              const SimpleSubset red = reduce(ctx, pi);
              if (!(reduce(ctx, red) == red)) {
                notes = "reduce not idempotent on " + subset_str(pi);
                return false;
              }
            }
            for (const SimpleSubset& a : family) {
              for (const SimpleSubset& b : family) {
                ++morphism_pairs;
                const bool both = morphism_exists(ctx, a, b) && morphism_exists(ctx, b, a);
                const bool iso = isomorphic(ctx, a, b);
                if (both != iso) {
                  notes = "a=" + subset_str(a) + " b=" + subset_str(b) + ": morphisms both ways " +
                          (both ? "exist" : "missing") + " but isomorphic=" + (iso ? "yes" : "no");
                  return false;
                }
              }
            }
          }
          notes = std::to_string(subsets) + " subsets, " + std::to_string(morphism_pairs) +
                  " ordered pairs";
          return true;
        }));
  }
  return out;
}

}  // namespace orthocompact
