// Command-line surface.  Every subcommand is a thin shell around one
// library call: parse, compute, print deterministically.
//
// Exit codes: 0 success, 1 domain error (typed message on stderr),
// 2 malformed invocation or input file, 3 verification mismatch.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "orthocompact/charring.hpp"
#include "orthocompact/compactify.hpp"
#include "orthocompact/errors.hpp"
#include "orthocompact/lattice.hpp"
#include "orthocompact/orders.hpp"
#include "orthocompact/posets.hpp"
#include "orthocompact/textio.hpp"
#include "orthocompact/triviality.hpp"
#include "orthocompact/verify.hpp"

namespace oc = orthocompact;

namespace {

const char* yn(bool b) { return b ? "yes" : "no"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) oc::fail(oc::Errc::BadFormat, "cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Loads a subset file, cross-checking an optional --r value.
oc::ParsedSubset load_subset(const std::string& path, int expected_r) {
  oc::ParsedSubset ps = oc::subset_from_json_text(read_file(path));
  if (expected_r > 0 && expected_r != ps.r)
    oc::fail(oc::Errc::BadFormat,
             path + " has rank " + std::to_string(ps.r) + " but --r says " +
                 std::to_string(expected_r));
  return ps;
}

struct Options {
  int r = 0;
  std::string lambda, mu, nu, theta, tau, support, pi, pi2;
  std::string format = "text";
  std::string suite;
  int bound = 0;
  int nmax = 8;
  int verify_r = -1;
  int verify_bound = -1;
  bool decompose = false;
};

int run_trivial(const Options& opt) {
  const oc::RankedContext ctx(opt.r);
  const oc::Weight la = oc::parse_weight(opt.lambda);
  const oc::Weight mu = oc::parse_weight(opt.mu);
  const bool t = oc::is_trivial(ctx, la, mu);
  const oc::RootVec a = oc::omega_to_alpha(ctx, la - mu);
  const int r = ctx.rank();
  const int ar = a.twice[r - 1] / 2;
  const int qla = oc::q_index(ctx, la);
  const int qmu = oc::q_index(ctx, mu);
  std::cout << "difference = " << oc::format_rootvec(a) << "\n";
  std::cout << "q(lambda) = " << qla << ", q(mu) = " << qmu << "\n";
  std::cout << "a_r = " << ar << ", 2*min(r - q(lambda), r - q(mu)) = "
            << 2 * std::min(r - qla, r - qmu) << "\n";
  std::cout << "trivial: " << yn(t) << "\n";
  return 0;
}

int run_omega(const Options& opt) {
  const oc::RankedContext ctx(opt.r);
  const oc::Weight la = oc::parse_weight(opt.lambda);
  const oc::RootVec theta = oc::parse_rootvec(opt.theta);
  std::cout << "in -Omega(lambda): " << yn(oc::in_neg_omega(ctx, la, theta)) << "\n";
  return 0;
}

int run_leq(const Options& opt) {
  const oc::RankedContext ctx(opt.r);
  const oc::Weight la = oc::parse_weight(opt.lambda);
  const oc::Weight nu = oc::parse_weight(opt.nu);
  const oc::Weight mu = oc::parse_weight(opt.mu);
  const bool leq = oc::lambda_leq(ctx, la, nu, mu);
  std::cout << "nu <=^lambda mu: " << yn(leq) << "\n";
  if (leq) {
    const auto witness =
        oc::nphi_decompose(ctx, la, oc::omega_to_alpha(ctx, mu - nu), oc::LengthFilter::All);
    std::cout << "witness:";
    if (witness->empty()) std::cout << " empty sum";
    for (const oc::Root& th : *witness) std::cout << ' ' << oc::format_rootvec(th.vec);
    std::cout << "\n";
  }
  return 0;
}

int run_xi(const Options& opt) {
  const oc::RankedContext ctx(opt.r);
  const oc::Weight la = oc::parse_weight(opt.lambda);
  const oc::RootVec tau = oc::parse_rootvec(opt.tau);
  const bool member = oc::xi_membership(ctx, la, tau);
  std::cout << "in Xi(lambda): " << yn(member) << "\n";
  if (member && opt.decompose) {
    std::cout << "decomposition:";
    const auto roots = oc::xi_decompose(ctx, la, tau);
    if (roots.empty()) std::cout << " empty sum";
    for (const oc::Root& th : roots) std::cout << ' ' << oc::format_rootvec(th.vec);
    std::cout << "\n";
  }
  return 0;
}

int run_reduce(const Options& opt) {
  const oc::ParsedSubset ps = load_subset(opt.pi, opt.r);
  const oc::RankedContext ctx(ps.r);
  std::cout << oc::subset_to_json_text(ctx, oc::reduce(ctx, ps.pi));
  return 0;
}

int run_normal(const Options& opt) {
  const oc::ParsedSubset ps = load_subset(opt.pi, opt.r);
  const oc::RankedContext ctx(ps.r);
  std::cout << "normal: " << yn(oc::is_normal(ctx, ps.pi)) << "\n";
  return 0;
}

int run_morphism(const Options& opt) {
  const oc::ParsedSubset a = load_subset(opt.pi, opt.r);
  const oc::ParsedSubset b = load_subset(opt.pi2, opt.r);
  if (a.r != b.r) oc::fail(oc::Errc::BadFormat, "the two subset files have different ranks");
  const oc::RankedContext ctx(a.r);
  std::cout << "morphism pi -> pi2: " << yn(oc::morphism_exists(ctx, a.pi, b.pi)) << "\n";
  return 0;
}

int run_iso(const Options& opt) {
  const oc::ParsedSubset a = load_subset(opt.pi, opt.r);
  const oc::ParsedSubset b = load_subset(opt.pi2, opt.r);
  if (a.r != b.r) oc::fail(oc::Errc::BadFormat, "the two subset files have different ranks");
  const oc::RankedContext ctx(a.r);
  std::cout << "isomorphic: " << yn(oc::isomorphic(ctx, a.pi, b.pi)) << "\n";
  return 0;
}

int run_poset(const Options& opt) {
  const oc::RankedContext ctx(opt.r);
  const oc::IndexSet I = oc::parse_index_list(opt.support);
  for (int i : I)
    if (i == ctx.rank())
      std::cerr << "note: the short simple root lies in the support, so every"
                   " difference class is trivial and the poset is empty\n";
  const oc::HassePoset poset = oc::poset_T2(ctx, I, opt.bound);
  const oc::RenderFormat fmt = opt.format == "dot"    ? oc::RenderFormat::Dot
                               : opt.format == "json" ? oc::RenderFormat::Json
                                                      : oc::RenderFormat::Text;
  std::cout << oc::render(poset, fmt);
  return 0;
}

int run_tensor(const Options& opt) {
  const oc::RankedContext ctx(opt.r);
  const oc::Weight la = oc::parse_weight(opt.lambda);
  const oc::Weight mu = oc::parse_weight(opt.mu);
  for (const auto& [nu, mult] : oc::tensor(ctx, la, mu))
    std::cout << mult << " " << oc::format_weight(nu) << "\n";
  return 0;
}

int run_oracle_trivial(const Options& opt) {
  const oc::RankedContext ctx(opt.r);
  const oc::Weight la = oc::parse_weight(opt.lambda);
  const oc::Weight mu = oc::parse_weight(opt.mu);
  const oc::TrivialityWitness w = oc::oracle_trivial(ctx, la, mu, opt.nmax);
  if (w.witness)
    std::cout << "witness: n = " << *w.witness << "\n";
  else
    std::cout << "no witness up to n = " << w.searched_up_to << "\n";
  return 0;
}

int run_verify(const Options& opt) {
  const int r = opt.verify_r;
  const int b = opt.verify_bound;
  std::vector<oc::CheckResult> results;
  if (opt.suite == "tables")
    results = oc::verify_tables();
  else if (opt.suite == "theorem")
    results = oc::verify_theorem_vs_oracle(r > 0 ? r : 3, b >= 0 ? b : 2);
  else if (opt.suite == "schurweyl")
    results = oc::verify_schur_weyl(r > 0 ? r : 3, b >= 0 ? b : 6);
  else
    results = oc::verify_xi_equivalence(r > 0 ? r : 4, b >= 0 ? b : 8);

  bool all_pass = true;
  for (const oc::CheckResult& res : results) {
    std::cout << (res.pass ? "PASS" : "FAIL") << " " << res.name << " (";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", res.seconds);
    std::cout << buf << "s): " << res.notes << "\n";
    all_pass = all_pass && res.pass;
  }
  return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classification combinatorics for simple linear"
               " compactifications of odd orthogonal groups"};
  app.require_subcommand(1);
  Options opt;

  auto* trivial = app.add_subcommand("trivial", "decide whether mu is a trivial weight of lambda");
  trivial->add_option("--r", opt.r, "rank")->required();
  trivial->add_option("--lambda", opt.lambda, "dominant weight w:[...]")->required();
  trivial->add_option("--mu", opt.mu, "dominant weight below lambda, w:[...]")->required();

  auto* omega = app.add_subcommand("omega", "decide membership of a vector in -Omega(lambda)");
  omega->add_option("--r", opt.r, "rank")->required();
  omega->add_option("--lambda", opt.lambda, "dominant weight w:[...]")->required();
  omega->add_option("--theta", opt.theta, "root-coordinate vector a:[...]")->required();

  auto* leq = app.add_subcommand("leq", "decide nu <=^lambda mu with a root-sum witness");
  leq->add_option("--r", opt.r, "rank")->required();
  leq->add_option("--lambda", opt.lambda, "dominant weight w:[...]")->required();
  leq->add_option("--nu", opt.nu, "weight w:[...]")->required();
  leq->add_option("--mu", opt.mu, "weight w:[...]")->required();

  auto* xi = app.add_subcommand("xi", "decide membership of tau in Xi(lambda)");
  xi->add_option("--r", opt.r, "rank")->required();
  xi->add_option("--lambda", opt.lambda, "dominant weight w:[...]")->required();
  xi->add_option("--tau", opt.tau, "root-coordinate vector a:[...]")->required();
  xi->add_flag("--decompose", opt.decompose, "also print a decomposition into roots");

  auto* reduce = app.add_subcommand("reduce", "reduce a simple subset to its classifying form");
  reduce->add_option("--r", opt.r, "rank (cross-checked against the file)");
  reduce->add_option("--pi", opt.pi, "subset JSON file")->required();

  auto* normal = app.add_subcommand("normal", "decide normality of the compactification of a subset");
  normal->add_option("--r", opt.r, "rank (cross-checked against the file)");
  normal->add_option("--pi", opt.pi, "subset JSON file")->required();

  auto* morphism = app.add_subcommand("morphism", "decide whether X_pi dominates X_pi2");
  morphism->add_option("--r", opt.r, "rank (cross-checked against the files)");
  morphism->add_option("--pi", opt.pi, "subset JSON file")->required();
  morphism->add_option("--pi2", opt.pi2, "subset JSON file")->required();

  auto* iso = app.add_subcommand("iso", "decide isomorphism of two subsets' compactifications");
  iso->add_option("--r", opt.r, "rank (cross-checked against the files)");
  iso->add_option("--pi", opt.pi, "subset JSON file")->required();
  iso->add_option("--pi2", opt.pi2, "subset JSON file")->required();

  auto* poset = app.add_subcommand("poset", "bounded Hasse diagram of the difference classes over a support");
  poset->add_option("--r", opt.r, "rank")->required();
  poset->add_option("--support", opt.support, "comma-separated simple-root indices")->required();
  poset->add_option("--bound", opt.bound, "largest coefficient kept")->required();
  poset->add_option("--format", opt.format, "text|dot|json")
      ->check(CLI::IsMember({"text", "dot", "json"}));

  auto* tensor = app.add_subcommand("tensor", "decompose V(lambda) (x) V(mu) into irreducibles");
  tensor->add_option("--r", opt.r, "rank")->required();
  tensor->add_option("--lambda", opt.lambda, "dominant weight w:[...]")->required();
  tensor->add_option("--mu", opt.mu, "dominant weight w:[...]")->required();

  auto* oracle = app.add_subcommand("oracle-trivial", "bounded tensor-power witness search for triviality");
  oracle->add_option("--r", opt.r, "rank")->required();
  oracle->add_option("--lambda", opt.lambda, "dominant weight w:[...]")->required();
  oracle->add_option("--mu", opt.mu, "dominant weight below lambda, w:[...]")->required();
  oracle->add_option("--nmax", opt.nmax, "largest tensor power searched (default 8)");

  auto* verify = app.add_subcommand("verify", "run a verification sweep");
  verify->add_option("--suite", opt.suite, "tables|theorem|schurweyl|xi")
      ->required()
      ->check(CLI::IsMember({"tables", "theorem", "schurweyl", "xi"}));
  verify->add_option("--r", opt.verify_r, "largest rank swept (suite default otherwise)");
  verify->add_option("--bound", opt.verify_bound, "sweep bound (suite default otherwise)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (trivial->parsed()) return run_trivial(opt);
    if (omega->parsed()) return run_omega(opt);
    if (leq->parsed()) return run_leq(opt);
    if (xi->parsed()) return run_xi(opt);
    if (reduce->parsed()) return run_reduce(opt);
    if (normal->parsed()) return run_normal(opt);
    if (morphism->parsed()) return run_morphism(opt);
    if (iso->parsed()) return run_iso(opt);
    if (poset->parsed()) return run_poset(opt);
    if (tensor->parsed()) return run_tensor(opt);
    if (oracle->parsed()) return run_oracle_trivial(opt);
    if (verify->parsed()) return run_verify(opt);
  } catch (const oc::DomainError& e) {
    std::cerr << "error [" << oc::errc_name(e.code()) << "]: " << e.what() << "\n";
    return e.code() == oc::Errc::BadFormat ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
