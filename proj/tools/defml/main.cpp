#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "defml/errors.hpp"
#include "defml/version.hpp"

namespace {

using namespace defml;
using namespace defml::cli;

// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 numeric non-convergence.
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

int emit(const OutputDocument& doc, const std::string& format_token,
         const std::string& out_path) {
  const OutputFormat format = parse_format(format_token);
  const std::string text = doc.render(format);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "defml: cannot open '" << out_path << "' for writing\n";
      return kExitUsage;
    }
    out << text;
  }
  return doc.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deformed Mittag-Leffler polynomial toolkit"};
  app.set_help_flag("--help", "Print help");  // --h is an option, keep -h free
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string format_arg = "json";
  std::string out_arg;
  const auto add_common = [&](CLI::App* sub) {
    sub->set_help_flag("--help", "Print help");
    sub->add_option("--format", format_arg, "Output format: json or csv (default json)");
    sub->add_option("--out", out_arg, "Write output to a file instead of stdout");
  };

  CLI::App* coeffs = app.add_subcommand(
      "coeffs", "Print family members as exact coefficient tables");
  std::string coeffs_family = "g";
  unsigned coeffs_n = 20;
  std::string coeffs_h = "sym";
  add_common(coeffs);
  coeffs->add_option("--family", coeffs_family,
                     "Family: g, g-monic, phi, phi-monic (default g)");
  coeffs->add_option("--n", coeffs_n, "Highest member index (default 20)");
  coeffs->add_option(
      "--h", coeffs_h,
      "Deformation parameter: 'sym' or an exact rational like 3/2 (default sym)");

  CLI::App* verify = app.add_subcommand(
      "verify", "Run identity verification suites against the oracles");
  std::string verify_suite = "all";
  unsigned verify_n = 20;
  std::vector<std::string> verify_h;
  double verify_tol = 1e-8;
  add_common(verify);
  verify->add_option(
      "--suite", verify_suite,
      "recurrences, genfun, hyper, hdiff, orthogonality, or all (default all)");
  verify->add_option("--n", verify_n, "Index/order bound (default 20)");
  verify->add_option(
      "--h", verify_h,
      "h values for the numeric suites (repeatable; default 1/2 1 2)");
  verify->add_option("--tol", verify_tol, "Numeric tolerance (default 1e-8)");

  CLI::App* zeros = app.add_subcommand("zeros", "Zeros of a family member");
  std::string zeros_family = "phi-monic";
  unsigned zeros_n = 20;
  std::string zeros_h = "1";
  double zeros_tol = 1e-8;
  add_common(zeros);
  zeros->add_option("--family", zeros_family, "phi-monic or g (default phi-monic)");
  zeros->add_option("--n", zeros_n, "Member index >= 1 (default 20)");
  zeros->add_option("--h", zeros_h, "Positive deformation parameter (default 1)");
  zeros->add_option("--tol", zeros_tol, "Residual threshold (default 1e-8)");

  CLI::App* quad = app.add_subcommand(
      "quad", "Gauss rule for the weight y/sinh(pi y/h), with moment checks");
  unsigned quad_n = 20;
  std::string quad_h = "1";
  unsigned quad_degree = 0;
  bool quad_degree_set = false;
  double quad_tol = 1e-8;
  add_common(quad);
  quad->add_option("--n", quad_n, "Number of quadrature points >= 1 (default 20)");
  quad->add_option("--h", quad_h, "Positive deformation parameter (default 1)");
  quad->add_option("--check-degree", quad_degree,
                   "Highest moment degree to verify (default 2n-1)")
      ->each([&](const std::string&) { quad_degree_set = true; });
  quad->add_option("--tol", quad_tol, "Moment comparison tolerance (default 1e-8)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    OutputDocument doc;
    if (coeffs->parsed()) {
      doc = cmd_coeffs(family_from_token(coeffs_family), coeffs_n,
                       HParam::parse(coeffs_h, /*allow_decimal=*/false));
    } else if (verify->parsed()) {
      std::vector<HParam> hs;
      for (const auto& token : verify_h)
        hs.push_back(HParam::parse(token, /*allow_decimal=*/true));
      doc = cmd_verify(verify_suite, verify_n, hs, verify_tol);
    } else if (zeros->parsed()) {
      doc = cmd_zeros(family_from_token(zeros_family), zeros_n,
                      HParam::parse(zeros_h, /*allow_decimal=*/true), zeros_tol);
    } else {
      if (!quad_degree_set) quad_degree = 2 * quad_n - 1;
      doc = cmd_quad(quad_n, HParam::parse(quad_h, /*allow_decimal=*/true),
                     quad_degree, quad_tol);
    }
    const int code = emit(doc, format_arg, out_arg);
    if (code == 1) {
      std::cerr << "defml: verification failed";
      if (doc.json.contains("first_failure"))
        std::cerr << ": " << doc.json["first_failure"].get<std::string>();
      std::cerr << "\n";
    }
    return code;
  } catch (const NumericError& e) {
    std::cerr << "defml: numeric non-convergence: " << e.what()
              << " (best estimate " << e.achieved_estimate() << ")\n";
    return kExitNumeric;
  } catch (const InternalConsistencyError& e) {
    std::cerr << "defml: internal consistency failure: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "defml: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "defml: " << e.what() << "\n";
    return kExitUsage;
  }
}
