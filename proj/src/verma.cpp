#include "uhsl2/verma.hpp"

#include "uhsl2/analytic.hpp"

#include <stdexcept>
#include <string>

namespace uhsl2 {

namespace {

// w += M * v restricted to the rows/columns 0..upto that are already built.
void accumulate_matvec(const PolyMatrix& m, const PolyMatrix& v, int col, int upto,
                       std::vector<HPoly>& w) {
    for (int k = 0; k <= upto; ++k) {
        const HPoly& vk = v.at(k, col);
        if (vk.is_zero()) continue;
        for (int r = 0; r <= upto; ++r) {
            const HPoly& mv = m.at(r, k);
            if (!mv.is_zero()) w[r] += mv * vk;
        }
    }
}

// Zeroes column `col`; the Y action is truncated there, so residuals that
// involve Y of that column are not meaningful.
PolyMatrix drop_column(PolyMatrix m, int col) {
    for (int r = 0; r < m.rows(); ++r) m.at(r, col) = HPoly();
    return m;
}

}  // namespace

VermaModule build_verma(int lambda, int epsilon, int depth) {
    if (lambda < 0) throw std::invalid_argument("build_verma: lambda must be non-negative");
    if (epsilon != 1 && epsilon != -1)
        throw std::invalid_argument("build_verma: epsilon must be +1 or -1");
    if (depth < 0) depth = lambda + 2;
    if (depth < 1) throw std::invalid_argument("build_verma: depth must be at least 1");
    const int n = depth + 1;
    const Rational e(epsilon);

    VermaModule vm;
    vm.lambda = lambda;
    vm.epsilon = epsilon;
    vm.depth = depth;
    vm.T = PolyMatrix(n, n);
    vm.Tinv = PolyMatrix(n, n);
    vm.H = PolyMatrix(n, n);
    vm.Y = PolyMatrix(n, n);

    vm.T.at(0, 0) = HPoly(e);
    vm.Tinv.at(0, 0) = HPoly(e);
    vm.H.at(0, 0) = HPoly(e * Rational(lambda));
    for (int m = 0; m < depth; ++m) vm.Y.at(m + 1, m) = HPoly(1);

    const HPoly half_h = HPoly::monomial(Rational(1, 2), 1);

    for (int m = 0; m < depth; ++m) {
        // T w_{m+1} = Y T w_m + (h/2)(H T w_m + T H w_m), from the [Y, T]
        // relation applied to w_m.
        std::vector<HPoly> acc(static_cast<size_t>(n));
        accumulate_matvec(vm.H, vm.T, m, m, acc);
        accumulate_matvec(vm.T, vm.H, m, m, acc);
        for (int r = m + 1; r >= 0; --r) {
            HPoly v = acc[r] * half_h;
            if (r >= 1) v += vm.T.at(r - 1, m);
            vm.T.at(r, m + 1) = v;
        }

        // Tinv w_{m+1} by back substitution against the triangular T.
        vm.Tinv.at(m + 1, m + 1) = HPoly(e);
        for (int r = m; r >= 0; --r) {
            HPoly s;
            for (int k = r + 1; k <= m + 1; ++k) s += vm.T.at(r, k) * vm.Tinv.at(k, m + 1);
            vm.Tinv.at(r, m + 1) = (-s).scaled(e);
        }

        // H w_{m+1} = Y H w_m - (Y T w_m + T w_{m+1} + Y Tinv w_m + Tinv w_{m+1}) / 2.
        for (int r = 0; r <= m + 1; ++r) {
            HPoly v;
            if (r >= 1) v += vm.H.at(r - 1, m) - (vm.T.at(r - 1, m) + vm.Tinv.at(r - 1, m))
                                                    .scaled(Rational(1, 2));
            v -= (vm.T.at(r, m + 1) + vm.Tinv.at(r, m + 1)).scaled(Rational(1, 2));
            vm.H.at(r, m + 1) = v;
        }
    }
    return vm;
}

std::vector<PolyMatrix> verma_relation_residuals(const VermaModule& vm) {
    const int n = vm.depth + 1;
    const PolyMatrix I = PolyMatrix::identity(n);
    const HPoly half_h = HPoly::monomial(Rational(1, 2), 1);

    std::vector<PolyMatrix> res;
    res.push_back(mul(vm.T, vm.Tinv) - I);
    res.push_back(mul(vm.Tinv, vm.T) - I);
    res.push_back(commutator(vm.H, vm.T) - (mul(vm.T, vm.T) - I));
    res.push_back(commutator(vm.H, vm.Tinv) - (mul(vm.Tinv, vm.Tinv) - I));
    // Relations involving Y are only meaningful where Y w_m is stored, i.e.
    // away from the last column.
    res.push_back(drop_column(
        commutator(vm.H, vm.Y) + (mul(vm.Y, vm.T) + mul(vm.T, vm.Y) + mul(vm.Y, vm.Tinv) +
                                  mul(vm.Tinv, vm.Y)).scaled(Rational(1, 2)),
        vm.depth));
    res.push_back(
        drop_column(commutator(vm.Y, vm.T) + anticommutator(vm.H, vm.T).scaled(half_h), vm.depth));
    res.push_back(drop_column(
        commutator(vm.Y, vm.Tinv) - anticommutator(vm.H, vm.Tinv).scaled(half_h), vm.depth));
    return res;
}

SingularVector find_singular(const VermaModule& vm) {
    const int lam = vm.lambda;
    if (vm.depth < lam + 2)
        throw std::invalid_argument("find_singular: needs depth >= lambda + 2");
    const int level = lam + 1;
    const Rational e(vm.epsilon);

    // Solve (T - eps) v = 0 for v = w_{lambda+1} + sum_{k=1}^{lambda} c_k w_k.
    // Row lam contains no unknown, so it must vanish identically; rows above
    // determine the c_k bottom-up, and every division must be exact in Q[h].
    std::vector<HPoly> c(static_cast<size_t>(level) + 1);
    c[level] = HPoly(1);
    if (!vm.T.at(lam, level).is_zero())
        throw std::domain_error("find_singular: no solution at level lambda + 1 (row " +
                                std::to_string(lam) + " of T does not close)");
    for (int r = lam - 1; r >= 0; --r) {
        HPoly s;
        for (int k = r + 2; k <= level; ++k) s += vm.T.at(r, k) * c[k];
        const HPoly& pivot = vm.T.at(r, r + 1);
        if (pivot.is_zero()) {
            if (!s.is_zero())
                throw std::domain_error("find_singular: no solution at level lambda + 1 (row " +
                                        std::to_string(r) + " has no pivot)");
            c[r + 1] = HPoly();
            continue;
        }
        c[r + 1] = div_exact(-s, pivot);
    }

    // Full re-check of (T - eps) v = 0 (every row, not just the pivots) plus
    // the H-weight of v.
    for (int r = 0; r <= level; ++r) {
        HPoly s = c[r].scaled(-e);
        for (int k = r; k <= level; ++k) s += vm.T.at(r, k) * c[k];
        if (!s.is_zero())
            throw std::domain_error("find_singular: candidate fails (T - eps) v = 0 at row " +
                                    std::to_string(r));
    }
    const Rational weight = e * Rational(lam - 2 * level);
    for (int r = 0; r <= level; ++r) {
        HPoly s = c[r].scaled(-weight);
        for (int k = r; k <= level; ++k) s += vm.H.at(r, k) * c[k];
        if (!s.is_zero())
            throw std::domain_error("find_singular: candidate is not an H weight vector");
    }

    SingularVector sv;
    sv.level = level;
    sv.coefficients = std::move(c);
    return sv;
}

QuotientRep quotient_raw(const VermaModule& vm, const SingularVector& sv) {
    const int n = vm.lambda + 1;
    const Rational e(vm.epsilon);

    QuotientRep q;
    q.lambda = vm.lambda;
    q.epsilon = vm.epsilon;
    q.T = PolyMatrix(n, n);
    q.Tinv = PolyMatrix(n, n);
    q.H = PolyMatrix(n, n);
    q.Y = PolyMatrix(n, n);
    // T, Tinv and H preserve levels <= lambda, so the quotient action is the
    // leading block unchanged.
    for (int r = 0; r < n; ++r)
        for (int col = r; col < n; ++col) {
            q.T.at(r, col) = vm.T.at(r, col);
            q.Tinv.at(r, col) = vm.Tinv.at(r, col);
            q.H.at(r, col) = vm.H.at(r, col);
        }
    // Y sends w_lambda to w_{lambda+1} = -sum c_k w_k in the quotient.
    for (int m = 0; m + 1 < n; ++m) q.Y.at(m + 1, m) = HPoly(1);
    for (int k = 0; k < n; ++k) q.Y.at(k, n - 1) = -sv.coefficients[static_cast<size_t>(k)];

    PolyMatrix u = q.T.scaled(e) - PolyMatrix::identity(n);
    q.Xreg = u.is_zero() ? PolyMatrix(n, n)
                         : analytic_series(u, AnalyticFn::log1p).divided_by_h(1);
    return q;
}

Irrep quotient_irrep(const VermaModule& vm, const SingularVector& sv) {
    QuotientRep q = quotient_raw(vm, sv);
    const int n = q.lambda + 1;
    const Rational e(q.epsilon);
    Diagonalization dg = diagonalize_distinct(q.H);
    auto change = [&dg](const PolyMatrix& m) { return mul(mul(dg.Pinv, m), dg.P); };

    Irrep r;
    r.j = HalfInt::from_twice(q.lambda);
    r.epsilon = q.epsilon;
    r.basis = Basis::verma_diagonal;
    r.dimension = n;
    r.H = dg.D;
    r.T = change(q.T);
    r.Tinv = change(q.Tinv);
    r.Y = change(q.Y);
    r.Xreg = change(q.Xreg);

    // Classical triple through the inverse map, entirely from the quotient
    // data (never from build_irrep, which this is an oracle for).
    PolyMatrix N = r.T.scaled(e) - PolyMatrix::identity(n);
    r.Jplus = N.is_zero() ? PolyMatrix(n, n)
                          : mul(N, analytic_series(N.scaled(Rational(1, 2)), AnalyticFn::geom_inv))
                                .divided_by_h(1);
    r.J3 = r.H.scaled(e * Rational(1, 2));
    PolyMatrix S = analytic_series(
        mul(r.Jplus, r.Jplus).scaled(HPoly::monomial(Rational(-1, 4), 2)), AnalyticFn::sqrt1p);
    PolyMatrix Sinv = invert_upper_triangular(S);
    r.Jminus = mul(mul(Sinv, r.Y), Sinv).scaled(e);
    return r;
}

}  // namespace uhsl2
