#include "uhsl2/verify.hpp"

#include "uhsl2/analytic.hpp"
#include "uhsl2/verma.hpp"

#include <complex>
#include <numbers>
#include <sstream>

namespace uhsl2 {

namespace {

std::string branch_tag(const HalfInt& j, int eps) {
    return "j=" + j.str() + ",eps=" + (eps > 0 ? "+1" : "-1");
}

// First nonzero entry of a residual matrix, as a witness string.
std::string first_nonzero(const PolyMatrix& m) {
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero()) {
                std::ostringstream os;
                os << "residual (" << r << ", " << c << ") = " << m.at(r, c).str();
                return os.str();
            }
    return "";
}

void expect_zero(VerificationReport& rep, const std::string& id, const PolyMatrix& residual) {
    rep.checks.push_back({id, residual.is_zero(), residual.is_zero() ? "" : first_nonzero(residual)});
}

void expect_equal(VerificationReport& rep, const std::string& id, const PolyMatrix& a,
                  const PolyMatrix& b) {
    expect_zero(rep, id, a - b);
}

void expect_small(VerificationReport& rep, const std::string& id, const CMatrix& residual,
                  double tol) {
    double m = cmax_abs(residual);
    std::ostringstream os;
    if (m >= tol) os << "max-abs residual " << m << " (tolerance " << tol << ")";
    rep.checks.push_back({id, m < tol, os.str()});
}

CMatrix ccommutator(const CMatrix& a, const CMatrix& b) { return csub(cmul(a, b), cmul(b, a)); }

}  // namespace

bool VerificationReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string VerificationReport::summary() const {
    int passed = 0;
    for (const auto& c : checks) passed += c.pass ? 1 : 0;
    std::ostringstream os;
    os << suite << ": " << passed << "/" << checks.size() << " checks passed";
    for (const auto& c : checks)
        if (!c.pass) os << "\n  FAIL " << c.id << (c.witness.empty() ? "" : ": " + c.witness);
    return os.str();
}

PolyMatrix casimir(const Irrep& r) {
    PolyMatrix bracket =
        mul(r.Y, r.T) - mul(r.Y, r.Tinv) + mul(r.T, r.Y) - mul(r.Tinv, r.Y);
    // Exact by construction; divided_by_h throws if any entry has a constant
    // term, which would falsify the h | bracket claim.
    PolyMatrix c = bracket.divided_by_h(1).scaled(Rational(1, 4));
    c = c + mul(r.H, r.H).scaled(Rational(1, 4));
    PolyMatrix twos = PolyMatrix::identity(r.dimension).scaled(Rational(2));
    c = c + (mul(r.T, r.T) + mul(r.Tinv, r.Tinv) - twos).scaled(Rational(1, 16));
    return c;
}

PolyMatrix casimir_classical(const Irrep& r) {
    return anticommutator(r.Jplus, r.Jminus).scaled(Rational(1, 2)) + mul(r.J3, r.J3);
}

VerificationReport run_relation_suite(HalfInt jmax) {
    VerificationReport rep{"relations", {}};
    const double tol = 1e-9;
    for (int tj = 0; tj <= jmax.twice(); ++tj) {
        for (int eps : {1, -1}) {
            const Irrep r = build_irrep(HalfInt::from_twice(tj), eps);
            const std::string tag = branch_tag(r.j, eps) + ":";
            const int n = r.dimension;
            const PolyMatrix I = PolyMatrix::identity(n);
            const Rational e(eps);
            const HPoly half_h = HPoly::monomial(Rational(1, 2), 1);

            expect_zero(rep, tag + "T Tinv = 1", mul(r.T, r.Tinv) - I);
            expect_zero(rep, tag + "Tinv T = 1", mul(r.Tinv, r.T) - I);
            expect_zero(rep, tag + "[H,T] = T^2 - 1", commutator(r.H, r.T) - (mul(r.T, r.T) - I));
            expect_zero(rep, tag + "[H,Tinv] = Tinv^2 - 1",
                        commutator(r.H, r.Tinv) - (mul(r.Tinv, r.Tinv) - I));
            expect_zero(rep, tag + "[H,Y] = -(YT+TY+YTinv+TinvY)/2",
                        commutator(r.H, r.Y) +
                            (mul(r.Y, r.T) + mul(r.T, r.Y) + mul(r.Y, r.Tinv) + mul(r.Tinv, r.Y))
                                .scaled(Rational(1, 2)));
            expect_zero(rep, tag + "[Y,T] = -h(HT+TH)/2",
                        commutator(r.Y, r.T) + anticommutator(r.H, r.T).scaled(half_h));
            expect_zero(rep, tag + "[Y,Tinv] = h(HTinv+TinvH)/2",
                        commutator(r.Y, r.Tinv) - anticommutator(r.H, r.Tinv).scaled(half_h));

            const PolyMatrix hX = r.Xreg.scaled(HPoly::h());
            expect_equal(rep, tag + "T = eps exp(h Xreg)", r.T,
                         analytic_series(hX, AnalyticFn::exp).scaled(e));

            if (eps == 1) {
                PolyMatrix sh = analytic_series(hX, AnalyticFn::sinh);
                sh = sh.is_zero() ? PolyMatrix(n, n) : sh.divided_by_h(1).scaled(Rational(2));
                expect_zero(rep, tag + "[H,X] = 2 sinh(hX)/h", commutator(r.H, r.Xreg) - sh);
                expect_zero(rep, tag + "[H,Y] = -{Y, cosh(hX)}",
                            commutator(r.H, r.Y) +
                                anticommutator(r.Y, analytic_series(hX, AnalyticFn::cosh)));
                expect_zero(rep, tag + "[X,Y] = H", commutator(r.Xreg, r.Y) - r.H);
            } else {
                // X = (i pi / h) + Xreg leaves Q[h]; sample numerically.
                using namespace std::complex_literals;
                for (const std::complex<double> h0 : {std::complex<double>(0.1, 0.0),
                                                      std::complex<double>(0.3, 0.2)}) {
                    std::ostringstream htag;
                    htag << tag << "h=(" << h0.real() << "," << h0.imag() << "):";
                    const CMatrix X =
                        cadd(cscale(cidentity(n), 1i * std::numbers::pi / h0),
                             specialize(r.Xreg, h0));
                    const CMatrix H = specialize(r.H, h0);
                    const CMatrix Y = specialize(r.Y, h0);
                    const CMatrix T = specialize(r.T, h0);
                    const CMatrix ehX = cexp(cscale(X, h0));
                    const CMatrix emhX = cexp(cscale(X, -h0));
                    const CMatrix sh = cscale(csub(ehX, emhX), 0.5);
                    const CMatrix ch = cscale(cadd(ehX, emhX), 0.5);

                    expect_small(rep, htag.str() + "[H,X] = 2 sinh(hX)/h",
                                 csub(ccommutator(H, X), cscale(sh, 2.0 / h0)), tol);
                    expect_small(rep, htag.str() + "[H,Y] = -{Y, cosh(hX)}",
                                 cadd(ccommutator(H, Y), cadd(cmul(Y, ch), cmul(ch, Y))), tol);
                    expect_small(rep, htag.str() + "[X,Y] = H", csub(ccommutator(X, Y), H), tol);
                    // The branch sign is already inside X: exp(i pi) = -1 = eps.
                    expect_small(rep, htag.str() + "T = exp(hX)", csub(T, ehX), tol);
                }
            }
        }
    }
    return rep;
}

VerificationReport run_casimir_suite(HalfInt jmax) {
    VerificationReport rep{"casimir", {}};
    for (int tj = 0; tj <= jmax.twice(); ++tj) {
        for (int eps : {1, -1}) {
            const Irrep r = build_irrep(HalfInt::from_twice(tj), eps);
            const std::string tag = branch_tag(r.j, eps) + ":";
            const PolyMatrix expected =
                PolyMatrix::identity(r.dimension).scaled(Rational(static_cast<long>(tj) * (tj + 2), 4));
            const PolyMatrix c = casimir(r);

            expect_equal(rep, tag + "C = j(j+1)", c, expected);
            expect_equal(rep, tag + "classical form agrees", casimir_classical(r), expected);
            expect_zero(rep, tag + "[C,T] = 0", commutator(c, r.T));
            expect_zero(rep, tag + "[C,Tinv] = 0", commutator(c, r.Tinv));
            expect_zero(rep, tag + "[C,Y] = 0", commutator(c, r.Y));
            expect_zero(rep, tag + "[C,H] = 0", commutator(c, r.H));
            expect_zero(rep, tag + "[C,Xreg] = 0", commutator(c, r.Xreg));
            expect_equal(rep, tag + "omega invariance", casimir(apply_automorphism(r, Automorphism::omega)), c);
            expect_equal(rep, tag + "varpi invariance", casimir(apply_automorphism(r, Automorphism::varpi)), c);
        }
    }
    return rep;
}

VerificationReport run_equivalence_suite(int lambda_max) {
    VerificationReport rep{"equivalence", {}};
    for (int lam = 0; lam <= lambda_max; ++lam) {
        for (int eps : {1, -1}) {
            const std::string tag = branch_tag(HalfInt::from_twice(lam), eps) + ":";
            const VermaModule vm = build_verma(lam, eps);
            SingularVector sv;
            bool solved = true;
            std::string err;
            try {
                sv = find_singular(vm);
            } catch (const std::exception& ex) {
                solved = false;
                err = ex.what();
            }
            rep.checks.push_back({tag + "singular vector at level lambda+1", solved, err});
            if (!solved) continue;

            // Parity: only even steps down from the top survive.
            bool parity = true;
            for (int k = 0; k <= sv.level; ++k)
                if ((sv.level - k) % 2 == 1 && !sv.coefficients[static_cast<size_t>(k)].is_zero())
                    parity = false;
            rep.checks.push_back({tag + "singular coefficients parity", parity, ""});

            const Irrep viaq = quotient_irrep(vm, sv);
            const Irrep built = build_irrep(HalfInt::from_twice(lam), eps);
            expect_equal(rep, tag + "quotient H = map H", viaq.H, built.H);
            expect_equal(rep, tag + "quotient T = map T", viaq.T, built.T);
            expect_equal(rep, tag + "quotient Tinv = map Tinv", viaq.Tinv, built.Tinv);
            expect_equal(rep, tag + "quotient Y = map Y", viaq.Y, built.Y);
            expect_equal(rep, tag + "quotient Xreg = map Xreg", viaq.Xreg, built.Xreg);
            expect_equal(rep, tag + "quotient J+ = map J+", viaq.Jplus, built.Jplus);
            expect_equal(rep, tag + "quotient J- = map J-", viaq.Jminus, built.Jminus);
            expect_equal(rep, tag + "quotient J3 = map J3", viaq.J3, built.J3);
        }
    }

    // Symmetric-basis oracle, eps = +1, at a generic real sample point.
    const double h0 = 0.37;
    const double tol = 1e-10;
    for (int lam = 0; lam <= lambda_max; ++lam) {
        const HalfInt j = HalfInt::from_twice(lam);
        const NumericIrrep sym = to_symmetric_basis(build_irrep(j, 1), h0);
        const int n = j.dimension();
        const struct {
            SymGen g;
            const CMatrix& m;
            const char* name;
        } gens[] = {{SymGen::X, sym.X, "X"}, {SymGen::T, sym.T, "T"}, {SymGen::Y, sym.Y, "Y"}};
        for (const auto& gen : gens) {
            CMatrix expected(n, n);
            for (int col = 0; col < n; ++col) {
                const int tm = lam - 2 * col;
                for (const SymmetricTerm& t : symmetric_oracle(j, tm, gen.g))
                    expected.at((lam - t.twice_m_target) / 2, col) = t.eval(h0);
            }
            expect_small(rep,
                         "j=" + j.str() + ":symmetric-basis " + gen.name + " matches oracle",
                         csub(gen.m, expected), tol);
        }
    }
    return rep;
}

}  // namespace uhsl2
