#include "uhsl2/analytic.hpp"

#include <set>
#include <stdexcept>

namespace uhsl2 {

namespace {

std::vector<Rational> sinh_coeffs(int n) {
    std::vector<Rational> c(n + 1, Rational(0));
    for (int k = 1; k <= n; k += 2) c[k] = Rational(1) / factorial(k);
    return c;
}

std::vector<Rational> cosh_coeffs(int n) {
    std::vector<Rational> c(n + 1, Rational(0));
    for (int k = 0; k <= n; k += 2) c[k] = Rational(1) / factorial(k);
    return c;
}

// Power-series reciprocal of a series with unit constant term.
std::vector<Rational> series_reciprocal(const std::vector<Rational>& a) {
    std::vector<Rational> inv(a.size(), Rational(0));
    inv[0] = Rational(1);
    for (size_t k = 1; k < a.size(); ++k) {
        Rational s(0);
        for (size_t i = 1; i <= k; ++i) s += a[i] * inv[k - i];
        inv[k] = -s;
    }
    return inv;
}

}  // namespace

std::vector<Rational> series_coefficients(AnalyticFn fn, int n) {
    if (n < 0) n = 0;
    std::vector<Rational> c(n + 1, Rational(0));
    switch (fn) {
        case AnalyticFn::exp:
            for (int k = 0; k <= n; ++k) c[k] = Rational(1) / factorial(k);
            break;
        case AnalyticFn::sqrt1p:
            for (int k = 0; k <= n; ++k) c[k] = sqrt_binomial(k);
            break;
        case AnalyticFn::arctanh:
            for (int k = 1; k <= n; k += 2) c[k] = Rational(1, k);
            break;
        case AnalyticFn::tanh: {
            auto s = sinh_coeffs(n);
            auto ci = series_reciprocal(cosh_coeffs(n));
            for (int k = 0; k <= n; ++k) {
                Rational acc(0);
                for (int i = 0; i <= k; ++i) acc += s[i] * ci[k - i];
                c[k] = acc;
            }
            break;
        }
        case AnalyticFn::cosh:
            c = cosh_coeffs(n);
            break;
        case AnalyticFn::sinh:
            c = sinh_coeffs(n);
            break;
        case AnalyticFn::log1p:
            for (int k = 1; k <= n; ++k) c[k] = Rational(k % 2 == 1 ? 1 : -1, k);
            break;
        case AnalyticFn::geom_inv:
            for (int k = 0; k <= n; ++k) c[k] = Rational(k % 2 == 0 ? 1 : -1);
            break;
    }
    return c;
}

PolyMatrix analytic_series(const PolyMatrix& m, AnalyticFn fn) {
    if (m.rows() != m.cols()) throw std::invalid_argument("analytic_series: not square");
    auto idx = nilpotency_index(m);
    if (!idx)
        throw std::domain_error(
            "analytic_series: non-nilpotent argument where nilpotency is required");
    const auto coeffs = series_coefficients(fn, *idx - 1);
    PolyMatrix acc = PolyMatrix::identity(m.rows()).scaled(coeffs[0]);
    PolyMatrix power = PolyMatrix::identity(m.rows());
    for (int k = 1; k < *idx; ++k) {
        power = mul(power, m);
        if (!coeffs[k].is_zero()) acc = acc + power.scaled(coeffs[k]);
    }
    return acc;
}

PolyMatrix exp_ipi_triangular(const PolyMatrix& m, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("exp_ipi_triangular: sign must be +-1");
    if (m.rows() != m.cols()) throw std::invalid_argument("exp_ipi_triangular: not square");
    if (!m.is_upper_triangular())
        throw std::domain_error("exp_ipi_triangular: matrix is not upper triangular");
    const int n = m.rows();
    std::vector<long> d(n);
    std::set<long> seen;
    for (int i = 0; i < n; ++i) {
        const HPoly& p = m.at(i, i);
        if (!p.is_constant() || !p.coeff(0).is_integer())
            throw std::domain_error("exp_ipi_triangular: diagonal entry is not a constant integer");
        d[i] = p.coeff(0).numerator().get_si();
        if (!seen.insert(d[i]).second)
            throw std::domain_error("exp_ipi_triangular: repeated diagonal entry " +
                                    std::to_string(d[i]));
    }
    PolyMatrix f(n, n);
    for (int i = 0; i < n; ++i) f.at(i, i) = HPoly(Rational((d[i] % 2 == 0) ? 1 : -1));
    // Sylvester/Parlett recurrence from F m = m F, one superdiagonal at a time.
    for (int len = 1; len < n; ++len) {
        for (int i = 0; i + len < n; ++i) {
            int j = i + len;
            HPoly rhs = m.at(i, j) * (f.at(j, j) - f.at(i, i));
            for (int k = i + 1; k < j; ++k) rhs += m.at(i, k) * f.at(k, j) - f.at(i, k) * m.at(k, j);
            f.at(i, j) = rhs.scaled(Rational(1, d[j] - d[i]));
        }
    }
    return f;
}

Diagonalization diagonalize_distinct(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("diagonalize_distinct: not square");
    if (!m.is_upper_triangular())
        throw std::domain_error("diagonalize_distinct: matrix is not upper triangular");
    const int n = m.rows();
    std::vector<Rational> d(n);
    for (int i = 0; i < n; ++i) {
        if (!m.at(i, i).is_constant())
            throw std::domain_error("diagonalize_distinct: diagonal entry is not constant");
        d[i] = m.at(i, i).coeff(0);
        for (int k = 0; k < i; ++k)
            if (d[k] == d[i])
                throw std::domain_error("diagonalize_distinct: repeated eigenvalue " + d[i].str());
    }
    Diagonalization out{PolyMatrix::identity(n), PolyMatrix(n, n), PolyMatrix(n, n)};
    // Column c of P is the eigenvector for d_c, normalized to 1 in row c.
    for (int c = 0; c < n; ++c) {
        out.D.at(c, c) = HPoly(d[c]);
        for (int r = c - 1; r >= 0; --r) {
            HPoly s;
            for (int k = r + 1; k <= c; ++k) s += m.at(r, k) * out.P.at(k, c);
            out.P.at(r, c) = s.scaled(Rational(1) / (d[c] - d[r]));
        }
    }
    out.Pinv = invert_upper_triangular(out.P);
    return out;
}

}  // namespace uhsl2
