#pragma once

#include "uhsl2/represent.hpp"

#include <string>
#include <vector>

namespace uhsl2 {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string witness;  // empty on success, first offending entry otherwise
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_pass() const;
    std::string summary() const;
};

// Central element in the T-form,
//   C = (Y T - Y T^-1 + T Y - T^-1 Y) / (4h) + H^2 / 4 + (T^2 + T^-2 - 2) / 16.
// The bracket term is divisible by h entry by entry; the division is exact.
PolyMatrix casimir(const Irrep& r);

// Classical cross-check (J+ J- + J- J+) / 2 + J3^2 from the stored triple.
PolyMatrix casimir_classical(const Irrep& r);

// Defining relations for every j <= jmax and both eps branches. The T-form
// relations hold exactly in Q[h] for both branches; the X-form relations hold
// exactly for eps = +1 and are checked numerically for eps = -1 at complex h
// samples, where X = i pi / h + Xreg leaves Q[h].
VerificationReport run_relation_suite(HalfInt jmax);

// Casimir value j(j+1), agreement of the two forms, centrality, and
// invariance under both automorphisms.
VerificationReport run_casimir_suite(HalfInt jmax);

// Verma quotient against the deformation map for every lambda <= lambda_max
// and both eps, singular-vector fixtures, and the symmetric-basis oracle.
VerificationReport run_equivalence_suite(int lambda_max);

}  // namespace uhsl2
