#include "uhsl2/represent.hpp"

#include "uhsl2/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace uhsl2 {

namespace {

int checked_stoi(const std::string& s) {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
}

// Conjugation by diag((-1)^k): negates entries with odd r + c.
PolyMatrix conj_alternating(const PolyMatrix& m) {
    PolyMatrix out = m;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if ((r + c) % 2 != 0) out.at(r, c) = -out.at(r, c);
    return out;
}

// a_m^2 = (j - m)(j + m + 1) in twice-indices; exact integer.
long a_squared(int tj, int tm) {
    return static_cast<long>((tj - tm) / 2) * ((tj + tm + 2) / 2);
}

double a_value(int tj, int tm) {
    long s = a_squared(tj, tm);
    if (s < 0) throw std::logic_error("weight index outside the module");
    return std::sqrt(static_cast<double>(s));
}

}  // namespace

HalfInt::HalfInt(int twice) : twice_(twice) {
    if (twice < 0) throw std::invalid_argument("spin must be non-negative");
}

HalfInt HalfInt::parse(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return HalfInt(2 * checked_stoi(s));
        int num = checked_stoi(s.substr(0, slash));
        int den = checked_stoi(s.substr(slash + 1));
        if (den == 1) return HalfInt(2 * num);
        if (den == 2) return HalfInt(num);
        throw std::invalid_argument("denominator");
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse spin '" + s +
                                    "' (expected a non-negative integer or half-integer like 3/2)");
    }
}

std::string HalfInt::str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

ClassicalTriple classical_generators(HalfInt j) {
    int n = j.dimension();
    int lam = j.twice();
    ClassicalTriple t{PolyMatrix(n, n), PolyMatrix(n, n), PolyMatrix(n, n)};
    for (int k = 0; k < n; ++k) t.J3.at(k, k) = HPoly(Rational(lam - 2 * k, 2));
    for (int k = 1; k < n; ++k) {
        t.Jminus.at(k, k - 1) = HPoly(1);
        t.Jplus.at(k - 1, k) = HPoly(Rational(static_cast<long>(k) * (lam + 1 - k)));
    }
    return t;
}

Irrep build_irrep(HalfInt j, int epsilon) {
    if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon must be +1 or -1");
    ClassicalTriple cl = classical_generators(j);
    int n = j.dimension();
    Rational e(epsilon);

    PolyMatrix I = PolyMatrix::identity(n);
    PolyMatrix A = cl.Jplus.scaled(HPoly::monomial(Rational(epsilon, 2), 1));

    Irrep r;
    r.j = j;
    r.epsilon = epsilon;
    r.basis = Basis::verma_diagonal;
    r.dimension = n;
    r.T = mul(I + A, analytic_series(-A, AnalyticFn::geom_inv)).scaled(e);
    r.Tinv = invert_upper_triangular(r.T);
    r.H = cl.J3.scaled(Rational(2 * epsilon));
    PolyMatrix S = analytic_series(
        mul(cl.Jplus, cl.Jplus).scaled(HPoly::monomial(Rational(-1, 4), 2)), AnalyticFn::sqrt1p);
    r.Y = mul(mul(S, cl.Jminus), S);
    r.Xreg = n == 1 ? PolyMatrix(1, 1)
                    : analytic_series(A, AnalyticFn::arctanh).divided_by_h(1).scaled(Rational(2));
    r.Jplus = cl.Jplus.scaled(e);
    r.Jminus = cl.Jminus.scaled(e);
    r.J3 = cl.J3;
    return r;
}

std::vector<std::string> inverse_map_check(const Irrep& r) {
    std::vector<std::string> bad;
    int n = r.dimension;
    Rational e(r.epsilon);
    PolyMatrix I = PolyMatrix::identity(n);

    PolyMatrix half_hX = r.Xreg.scaled(HPoly::monomial(Rational(1, 2), 1));
    PolyMatrix jp_tanh = analytic_series(half_hX, AnalyticFn::tanh);
    if (!jp_tanh.is_zero()) jp_tanh = jp_tanh.divided_by_h(1).scaled(Rational(2));
    else jp_tanh = PolyMatrix(n, n);
    if (jp_tanh != r.Jplus) bad.push_back("J+ via (2/h) tanh(h Xreg / 2)");

    PolyMatrix N = r.T.scaled(e) - I;
    PolyMatrix jp_cayley = mul(N, analytic_series(N.scaled(Rational(1, 2)), AnalyticFn::geom_inv));
    jp_cayley = jp_cayley.is_zero() ? PolyMatrix(n, n) : jp_cayley.divided_by_h(1);
    if (jp_cayley != r.Jplus) bad.push_back("J+ via (2/h)(T - eps)(T + eps)^{-1}");

    if (r.H.scaled(e * Rational(1, 2)) != r.J3) bad.push_back("J3 via eps H / 2");

    PolyMatrix S = analytic_series(
        mul(r.Jplus, r.Jplus).scaled(HPoly::monomial(Rational(-1, 4), 2)), AnalyticFn::sqrt1p);
    PolyMatrix Sinv = invert_upper_triangular(S);
    if (mul(mul(Sinv, r.Y), Sinv).scaled(e) != r.Jminus)
        bad.push_back("J- via eps S^{-1} Y S^{-1}");

    if (r.epsilon == 1) {
        PolyMatrix C = analytic_series(half_hX, AnalyticFn::cosh);
        if (mul(mul(C, r.Y), C) != r.Jminus) bad.push_back("J- via cosh(h Xreg/2) Y cosh(h Xreg/2)");

        PolyMatrix B = analytic_series(r.T - I, AnalyticFn::sqrt1p) +
                       analytic_series(r.Tinv - I, AnalyticFn::sqrt1p);
        if (mul(mul(B, r.Y), B).scaled(Rational(1, 4)) != r.Jminus)
            bad.push_back("J- via (T^1/2 + T^-1/2) Y (T^1/2 + T^-1/2) / 4");
    }
    return bad;
}

Irrep apply_automorphism(const Irrep& r, Automorphism a) {
    Irrep out = r;
    if (a == Automorphism::omega) {
        out.T = r.Tinv;
        out.Tinv = r.T;
        out.Y = -r.Y;
        out.Xreg = -r.Xreg;
        out.Jplus = -r.Jplus;
        out.Jminus = -r.Jminus;
        return out;
    }
    out.epsilon = -r.epsilon;
    out.T = conj_alternating(-r.T);
    out.Tinv = conj_alternating(-r.Tinv);
    out.Y = conj_alternating(-r.Y);
    out.H = -r.H;
    out.Xreg = conj_alternating(r.Xreg);
    out.Jplus = conj_alternating(r.Jplus);
    out.Jminus = conj_alternating(r.Jminus);
    return out;
}

double SymmetricTerm::eval(double h0) const {
    double acc = 0.0;
    for (size_t p = coeff.size(); p-- > 0;) acc = acc * h0 + coeff[p];
    return acc;
}

std::vector<SymmetricTerm> symmetric_oracle(HalfInt j, int twice_m, SymGen g) {
    int tj = j.twice();
    if (std::abs(twice_m) > tj || (twice_m - tj) % 2 != 0)
        throw std::invalid_argument("m is not a weight of the spin-j module");

    std::vector<SymmetricTerm> terms;
    auto emit = [&terms](int tm_target, int power, double value) {
        if (value == 0.0) return;
        SymmetricTerm t;
        t.twice_m_target = tm_target;
        t.coeff.assign(static_cast<size_t>(power) + 1, 0.0);
        t.coeff.back() = value;
        terms.push_back(std::move(t));
    };

    if (g == SymGen::X) {
        // X w_m = sum_k f_k h^{2k} (prod_{s=0}^{2k} a_{m+s}) w_{m+2k+1}
        for (int k = 0; twice_m + 4 * k + 2 <= tj; ++k) {
            double v = 1.0 / ((2.0 * k + 1.0) * std::pow(4.0, k));
            for (int s = 0; s <= 2 * k; ++s) v *= a_value(tj, twice_m + 2 * s);
            emit(twice_m + 4 * k + 2, 2 * k, v);
        }
    } else if (g == SymGen::T) {
        // T w_m = w_m + sum_{k>=1} h^k 2^{1-k} (prod_{s=0}^{k-1} a_{m+s}) w_{m+k}
        emit(twice_m, 0, 1.0);
        for (int k = 1; twice_m + 2 * k <= tj; ++k) {
            double v = std::pow(2.0, 1 - k);
            for (int s = 0; s < k; ++s) v *= a_value(tj, twice_m + 2 * s);
            emit(twice_m + 2 * k, k, v);
        }
    } else {
        // Y w_m = sum_k (-1)^k h^{2k} 4^{-k}
        //         sum_{s=0}^{k} z_s z_{k-s} [J+^{2s} J- J+^{2(k-s)}]_m w_{m+2k-1}
        for (int k = 0; twice_m + 4 * k - 2 <= tj; ++k) {
            double total = 0.0;
            for (int s = 0; s <= k; ++s) {
                int u = k - s;
                double v = sqrt_binomial(static_cast<unsigned>(s)).to_double() *
                           sqrt_binomial(static_cast<unsigned>(u)).to_double();
                for (int i = 0; i < 2 * u; ++i) v *= a_value(tj, twice_m + 2 * i);
                int tmid = twice_m + 4 * u - 2;  // J- steps down from m + 2u
                v *= a_value(tj, tmid);
                for (int i = 0; i < 2 * s; ++i) v *= a_value(tj, tmid + 2 * i);
                total += v;
            }
            double sign = (k % 2 == 0) ? 1.0 : -1.0;
            emit(twice_m + 4 * k - 2, 2 * k, sign * total / std::pow(4.0, k));
        }
    }
    return terms;
}

NumericIrrep to_symmetric_basis(const Irrep& r, double h0) {
    int n = r.dimension;
    int tj = r.j.twice();
    std::vector<double> d(static_cast<size_t>(n), 1.0);
    for (int k = 1; k < n; ++k) d[k] = d[k - 1] * a_value(tj, tj - 2 * k);

    auto transform = [&](const PolyMatrix& m) {
        CMatrix out = specialize(m, {h0, 0.0});
        for (int row = 0; row < n; ++row)
            for (int col = 0; col < n; ++col) out.at(row, col) *= d[row] / d[col];
        return out;
    };

    NumericIrrep out;
    out.j = r.j;
    out.h0 = h0;
    out.H = transform(r.H);
    out.T = transform(r.T);
    out.X = transform(r.Xreg);
    out.Y = transform(r.Y);
    return out;
}

}  // namespace uhsl2
