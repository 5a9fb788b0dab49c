// Self-contained verification sweeps: each one replays a classification
// statement against an independent computation (bounded brute force,
// character arithmetic, or a frozen table) and reports pass/fail with a
// counterexample dump on mismatch.  The CLI `verify` subcommand and the
// acceptance runner are thin wrappers around these.

#pragma once

#include <string>
#include <vector>

namespace orthocompact {

struct CheckResult {
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string notes;   // stats on success, counterexample on failure
};

// Frozen small posets: the rank-3 chain over {alpha_1,alpha_2}, the
// rank-3 branching poset over {alpha_1}, the rank-4 grid over
// {alpha_1,alpha_2,alpha_3}, and the singleton T({alpha_{r-1}},2) for
// r = 3,4,5.  Four results.
std::vector<CheckResult> verify_tables();

// Triviality criterion vs. the tensor-power witness search: every
// dominant lambda with coefficients <= coeff_bound, every mu below it;
// predicted-trivial pairs must produce a witness n <= n_max, predicted
// non-trivial pairs must exhaust the search.  One result per rank
// 2..r_max.
std::vector<CheckResult> verify_theorem_vs_oracle(int r_max = 3, int coeff_bound = 2,
                                                  int n_max = 8);

// Constituents of the n-th tensor power of the standard representation
// against both closed-form predicates, n = 1..n_max.  One result per
// rank 2..r_max.
std::vector<CheckResult> verify_schur_weyl(int r_max = 3, int n_max = 6);

// Xi(lambda) membership vs. cone membership over the (long) roots
// non-orthogonal to lambda, plus the three step postconditions, for all
// supports of size <= 2 and tau with coefficient sum <= sum_bound.  One
// result per rank 2..r_max.
std::vector<CheckResult> verify_xi_equivalence(int r_max = 4, int sum_bound = 8);

// Tensor inclusions V(lambda+nu) in V(mu) (x) V(lambda) whenever mu - nu
// is a suitable (long / arbitrary / doubled-short) root non-orthogonal
// to lambda; exhaustive at rank 3 with coefficients <= coeff_bound.
// One result.
std::vector<CheckResult> verify_root_difference_inclusions(int coeff_bound = 2);

// Random tensor decompositions: exact dimension conservation,
// commutativity, and highest-weight multiplicity one.  One result.
std::vector<CheckResult> verify_character_sanity(int samples = 200,
                                                 unsigned seed = 20260816u);

// reduce idempotence, morphism-both-ways vs. isomorphism, and normality
// of the full weight-system subset, for all lambda with coefficients
// <= coeff_bound.  One result per rank 2..r_max.
std::vector<CheckResult> verify_classification_coherence(int r_max = 3,
                                                         int coeff_bound = 2);

} // namespace orthocompact
