#pragma once

#include "uhsl2/polymatrix.hpp"
#include "uhsl2/represent.hpp"
#include "uhsl2/rmatrix.hpp"
#include "uhsl2/verify.hpp"
#include "uhsl2/verma.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace uhsl2 {

using json = nlohmann::json;

// Rationals serialize as canonical strings "p" or "p/q"; polynomials as the
// ascending coefficient array (zero polynomial = []); matrices as
// {"rows", "cols", "entries"} with entries a row-major array of rows.
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json hpoly_to_json(const HPoly& p);
HPoly hpoly_from_json(const json& j);

json polymatrix_to_json(const PolyMatrix& m);
PolyMatrix polymatrix_from_json(const json& j);

json irrep_to_json(const Irrep& r);
json quotient_to_json(const QuotientRep& q);
json singular_to_json(const SingularVector& sv, int lambda, int epsilon);
json rmatrix_to_json(const RMatrix& r);
json ybe_to_json(const YbeReport& rep);
json report_to_json(const VerificationReport& rep);
json numeric_irrep_to_json(const NumericIrrep& r);
json cmatrix_to_json(const CMatrix& m);

// LaTeX emitters (pmatrix bodies, \frac for non-integer rationals).
std::string hpoly_to_latex(const HPoly& p);
std::string polymatrix_to_latex(const PolyMatrix& m);
std::string irrep_to_latex(const Irrep& r);
std::string quotient_to_latex(const QuotientRep& q);
std::string rmatrix_to_latex(const RMatrix& r);

// Fixed-width plain-text rendering for terminal output.
std::string polymatrix_to_pretty(const PolyMatrix& m);
std::string cmatrix_to_pretty(const CMatrix& m);

}  // namespace uhsl2
