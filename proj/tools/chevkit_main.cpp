// chevkit command line: build the engines, run the verification suite, and
// query individual facts.
//
// Exit codes: 0 all requested checks pass, 1 a check failed, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "chevkit/chevkit.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  long long prime = 17;
  std::vector<long long> qs;
  std::string json_path;
  std::string format = "plain";
  bool quiet = false;
  bool dump_roots = false;
  long long theorem_q = 0;
};

int cmd_info(const Options& opt) {
  chevkit::RootSystem rs = chevkit::RootSystem::build("E7");
  std::cout << rs.num_roots() << " roots, " << rs.num_positive() << " positive\n";
  const chevkit::ZVec fg = chevkit::fundamental_group(chevkit::TypeLabel{'E', 7});
  std::cout << "fundamental group: ";
  if (fg.empty()) std::cout << "trivial";
  for (std::size_t i = 0; i < fg.size(); ++i) std::cout << (i ? " x " : "") << "Z/" << fg[i];
  std::cout << "\n";
  std::cout << "involution classes (fixed space on the adjoint module):\n";
  std::cout << "  D6A1  69\n  E6T1  79\n  A7    63\n";
  if (opt.dump_roots) rs.write_roots(std::cout);
  return kExitPass;
}

int cmd_verify(const Options& opt) {
  if (opt.prime < 3 || opt.prime % 2 == 0) {
    std::cerr << "error: --prime must be an odd prime\n";
    return kExitUsage;
  }
  std::vector<long long> qs = opt.qs.empty() ? std::vector<long long>{3, 5, 7, 9, 17, 25} : opt.qs;
  chevkit::CheckReport report;
  try {
    report = chevkit::run_report(opt.prime, qs);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const nlohmann::json j = report.to_json();
  if (!opt.json_path.empty()) {
    std::ofstream out(opt.json_path);
    if (!out) {
      std::cerr << "error: cannot write " << opt.json_path << "\n";
      return kExitUsage;
    }
    out << j.dump(2) << "\n";
  }
  if (opt.format == "json") {
    if (!opt.quiet) std::cout << j.dump(2) << "\n";
  } else if (!opt.quiet) {
    for (const chevkit::CheckResult& c : report.checks)
      std::cout << (c.passed() ? "pass" : c.status) << "  " << c.name << "\n";
    std::cout << report.count("pass") << "/" << report.checks.size() << " checks passed (p = "
              << report.p << ", k = " << report.k << ")\n";
  }
  if (!report.all_passed()) {
    if (!opt.quiet)
      for (const chevkit::CheckResult& c : report.checks)
        if (!c.passed()) std::cerr << "failed: " << c.name << "\n";
    return kExitCheckFailure;
  }
  return kExitPass;
}

int cmd_theorem(const Options& opt) {
  const long long q = opt.theorem_q;
  if (q % 2 == 0 || q < 3) {
    std::cerr << "error: q must be an odd prime power\n";
    return kExitUsage;
  }
  if (!chevkit::checkdetail::is_odd_prime_power(q)) {
    std::cerr << "error: q must be an odd prime power\n";
    return kExitUsage;
  }
  chevkit::VerifyContext ctx(17);
  const chevkit::TheoremDecision d = chevkit::theorem_decision(ctx, q);
  std::cout << "q = " << q << ": N_{G'}(E) = C." << d.outer_part << "   (q = "
            << chevkit::TorsionLattice::mod(q, 8) << " mod 8, epsilon = "
            << (d.epsilon > 0 ? "+1" : "-1") << ", full Sym3 iff q = +-1 mod 8)\n";
  return kExitPass;
}

int cmd_h1(const Options&) {
  const chevkit::FiniteGroupModel g = chevkit::build_sym4_model();
  const auto classes = chevkit::h1_classes(g, chevkit::trivial_automorphism(g));
  for (const chevkit::H1Class& cls : classes) {
    const std::string label = chevkit::cycle_type_label(g, cls.representative);
    std::cout << label << std::string(16 - label.size(), ' ')
              << chevkit::structure_descriptor(g, cls) << "\n";
  }
  return kExitPass;
}

int cmd_census(const Options& opt) {
  if (opt.prime < 3 || opt.prime % 2 == 0) {
    std::cerr << "error: --prime must be an odd prime\n";
    return kExitUsage;
  }
  chevkit::VerifyContext ctx(opt.prime);
  const chevkit::CensusResult res = chevkit::torus_involution_census(ctx.rep());
  std::cout << "fixed-dim  classes\n";
  for (auto [dim, n] : res.dim_counts) std::cout << "  " << dim << "       " << n << "\n";
  std::cout << "total " << res.total << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for the adjoint Chevalley group of type E7"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* info = app.add_subcommand("info", "root counts, fundamental group, involution table");
  info->add_flag("--roots", opt.dump_roots, "also dump the root list");

  CLI::App* verify = app.add_subcommand("verify", "run the full verification suite");
  verify->add_option("--prime", opt.prime, "field characteristic (odd prime)")
      ->capture_default_str();
  verify->add_option("--q", opt.qs, "prime powers for the dichotomy rows (repeatable)");
  verify->add_option("--json", opt.json_path, "write the JSON report to a file");
  verify->add_option("--format", opt.format, "plain or json")
      ->check(CLI::IsMember({"plain", "json"}));
  verify->add_flag("--quiet", opt.quiet, "suppress per-check output");

  CLI::App* theorem = app.add_subcommand("theorem", "the normalizer dichotomy for one q");
  theorem->add_option("--q", opt.theorem_q, "odd prime power")->required();

  CLI::App* h1 = app.add_subcommand("h1", "twisted classes and the structure table");
  CLI::App* census = app.add_subcommand("census", "torus involution census");
  census->add_option("--prime", opt.prime, "field characteristic (odd prime)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (info->parsed()) return cmd_info(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (theorem->parsed()) return cmd_theorem(opt);
    if (h1->parsed()) return cmd_h1(opt);
    if (census->parsed()) return cmd_census(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitUsage;
}
