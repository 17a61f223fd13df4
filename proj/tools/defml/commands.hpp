#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "defml/analysis.hpp"
#include "defml/families.hpp"
#include "output_document.hpp"

namespace defml::cli {

/// The --h argument: the symbolic token "sym" or an exact rational
/// value. Decimal literals are converted exactly, but are only accepted
/// by the numeric commands.
struct HParam {
  bool symbolic = true;
  Rational value;
  std::string text = "sym";

  static HParam sym() { return HParam{}; }
  static HParam parse(const std::string& token, bool allow_decimal);
};

FamilyKind family_from_token(const std::string& token);
std::string family_token(FamilyKind kind);

OutputDocument cmd_coeffs(FamilyKind family, unsigned n_max, const HParam& h);

/// Zeros with scaled residuals; only phi-monic and g are meaningful
/// (monic rescaling does not move zeros). Residuals above `tol` make
/// the command report failure.
OutputDocument cmd_zeros(FamilyKind family, unsigned n, const HParam& h, double tol);

OutputDocument cmd_quad(unsigned n, const HParam& h, unsigned check_degree, double tol);

/// Runs one of {recurrences, genfun, hyper, hdiff, orthogonality, all}.
/// Exact suites run symbolically and ignore the h list; the
/// orthogonality suite runs once per numeric h (defaulting to
/// {1/2, 1, 2}). Under "all", exact suites run first and a failure
/// short-circuits the numeric part.
OutputDocument cmd_verify(const std::string& suite, unsigned n_max,
                          const std::vector<HParam>& h_list, double tol);

// The individual suites, also used by the acceptance tests.
std::vector<VerificationReport> suite_recurrences(unsigned n_max);
std::vector<VerificationReport> suite_genfun(unsigned n_max);
std::vector<VerificationReport> suite_hyper(unsigned n_cap, unsigned trials,
                                            std::uint64_t seed);
std::vector<VerificationReport> suite_hdiff(unsigned order);
std::vector<VerificationReport> suite_orthogonality(unsigned n_max,
                                                    const std::vector<Rational>& hs,
                                                    double tol);

}  // namespace defml::cli
