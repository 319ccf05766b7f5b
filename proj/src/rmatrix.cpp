#include "uhsl2/rmatrix.hpp"

#include "uhsl2/analytic.hpp"

#include <sstream>
#include <stdexcept>

namespace uhsl2 {

namespace {

std::string spin_str(const HalfInt& j, int eps) {
    return "(j=" + j.str() + ", eps=" + (eps > 0 ? "+1" : "-1") + ")";
}

}  // namespace

RMatrix universal_r(const Irrep& r1, const Irrep& r2) {
    const int d1 = r1.dimension, d2 = r2.dimension;
    const PolyMatrix TH1 = mul(r1.T, r1.H);
    const PolyMatrix TH2 = mul(r2.T, r2.H);

    // First factor: exp(-h X1 (x) TH2). For eps1 = -1, X1 = i pi/h + Xreg1;
    // the two pieces of the exponent must commute for the split into
    // exp_ipi_triangular(TH2) * exp(-h Xreg1 (x) TH2) to be valid.
    PolyMatrix arg1 = kron(r1.Xreg, TH2).scaled(HPoly::monomial(Rational(-1), 1));
    PolyMatrix f1 = analytic_series(arg1, AnalyticFn::exp);
    if (r1.epsilon == -1) {
        PolyMatrix parity_part = kron(PolyMatrix::identity(d1), TH2);
        if (!commutator(parity_part, arg1).is_zero())
            throw std::logic_error("universal_r: exponent pieces of slot 1 do not commute");
        f1 = mul(kron(PolyMatrix::identity(d1), exp_ipi_triangular(TH2, -1)), f1);
    }

    // Second factor: exp(h TH1 (x) X2), mirrored.
    PolyMatrix arg2 = kron(TH1, r2.Xreg).scaled(HPoly::h());
    PolyMatrix f2 = analytic_series(arg2, AnalyticFn::exp);
    if (r2.epsilon == -1) {
        PolyMatrix parity_part = kron(TH1, PolyMatrix::identity(d2));
        if (!commutator(parity_part, arg2).is_zero())
            throw std::logic_error("universal_r: exponent pieces of slot 2 do not commute");
        f2 = mul(kron(exp_ipi_triangular(TH1, 1), PolyMatrix::identity(d2)), f2);
    }

    RMatrix out;
    out.j1 = r1.j;
    out.j2 = r2.j;
    out.eps1 = r1.epsilon;
    out.eps2 = r2.epsilon;
    out.matrix = mul(f1, f2);

    if (!out.matrix.is_upper_triangular() || !out.matrix.has_constant_diagonal())
        throw std::logic_error("universal_r: result is not triangular with constant diagonal");
    for (int i = 0; i < d1 * d2; ++i) {
        const Rational& d = out.matrix.at(i, i).coeff(0);
        if (d != Rational(1) && d != Rational(-1))
            throw std::logic_error("universal_r: diagonal entry is not a unit");
    }
    return out;
}

std::string YbeReport::describe() const {
    std::ostringstream os;
    os << "YBE " << spin_str(s1.j, s1.epsilon) << " x " << spin_str(s2.j, s2.epsilon) << " x "
       << spin_str(s3.j, s3.epsilon) << ", dim " << dim << ": ";
    if (pass) {
        os << "exact";
    } else {
        os << "FAILED";
        if (witness)
            os << " at (" << witness->row << ", " << witness->col
               << "), difference " << witness->difference.str();
    }
    return os.str();
}

YbeReport check_ybe(const YbeSpin& s1, const YbeSpin& s2, const YbeSpin& s3) {
    const Irrep r1 = build_irrep(s1.j, s1.epsilon);
    const Irrep r2 = build_irrep(s2.j, s2.epsilon);
    const Irrep r3 = build_irrep(s3.j, s3.epsilon);
    const int d1 = r1.dimension, d2 = r2.dimension, d3 = r3.dimension;

    const RMatrix R12 = universal_r(r1, r2);
    const RMatrix R13 = universal_r(r1, r3);
    const RMatrix R23 = universal_r(r2, r3);

    const PolyMatrix E12 = kron(R12.matrix, PolyMatrix::identity(d3));
    const PolyMatrix E23 = kron(PolyMatrix::identity(d1), R23.matrix);

    // R13 acts on slots 1 and 3 with slot 2 passing through; the composite
    // index is (i1 d2 + i2) d3 + i3.
    PolyMatrix E13(d1 * d2 * d3, d1 * d2 * d3);
    for (int i1 = 0; i1 < d1; ++i1)
        for (int k1 = 0; k1 < d1; ++k1)
            for (int i3 = 0; i3 < d3; ++i3)
                for (int k3 = 0; k3 < d3; ++k3) {
                    const HPoly& v = R13.matrix.at(i1 * d3 + i3, k1 * d3 + k3);
                    if (v.is_zero()) continue;
                    for (int i2 = 0; i2 < d2; ++i2)
                        E13.at((i1 * d2 + i2) * d3 + i3, (k1 * d2 + i2) * d3 + k3) = v;
                }

    const PolyMatrix lhs = mul(mul(E12, E13), E23);
    const PolyMatrix rhs = mul(mul(E23, E13), E12);

    YbeReport rep;
    rep.s1 = s1;
    rep.s2 = s2;
    rep.s3 = s3;
    rep.dim = d1 * d2 * d3;
    rep.pass = true;
    for (int r = 0; r < rep.dim && rep.pass; ++r)
        for (int c = 0; c < rep.dim; ++c) {
            HPoly diff = lhs.at(r, c) - rhs.at(r, c);
            if (!diff.is_zero()) {
                rep.pass = false;
                rep.witness = YbeWitness{r, c, std::move(diff)};
                break;
            }
        }
    return rep;
}

}  // namespace uhsl2
