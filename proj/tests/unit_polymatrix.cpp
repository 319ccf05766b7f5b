#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uhsl2/analytic.hpp"
#include "uhsl2/polymatrix.hpp"

#include <random>
#include <stdexcept>

using namespace uhsl2;

namespace {

Rational rnd_rational(std::mt19937& g) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    return Rational(num(g)) / Rational(den(g));
}

HPoly rnd_poly(std::mt19937& g, int max_deg = 3) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    const int d = deg(g);
    std::vector<Rational> c(static_cast<size_t>(d) + 1);
    for (auto& x : c) x = rnd_rational(g);
    return HPoly(std::move(c));
}

PolyMatrix rnd_matrix(std::mt19937& g, int rows, int cols) {
    PolyMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = rnd_poly(g);
    return m;
}

// Strictly upper triangular, so nilpotent by construction.
PolyMatrix rnd_nilpotent(std::mt19937& g, int n) {
    PolyMatrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c) m.at(r, c) = rnd_poly(g);
    return m;
}

}  // namespace

TEST_CASE("identity and predicates") {
    const PolyMatrix I = PolyMatrix::identity(3);
    CHECK(I.is_identity());
    CHECK(I.is_upper_triangular());
    CHECK(!I.is_strictly_upper_triangular());
    CHECK(I.has_constant_diagonal());
    CHECK(PolyMatrix(2, 2).is_zero());

    PolyMatrix n(2, 2);
    n.at(0, 1) = HPoly::h();
    CHECK(n.is_strictly_upper_triangular());
    CHECK(!n.is_identity());
}

TEST_CASE("ring operations, randomized") {
    std::mt19937 g(314159);
    for (int i = 0; i < 110; ++i) {
        const PolyMatrix a = rnd_matrix(g, 3, 3), b = rnd_matrix(g, 3, 3),
                         c = rnd_matrix(g, 3, 3);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a, b + c) == mul(a, b) + mul(a, c));
        CHECK(mul(a + b, c) == mul(a, c) + mul(b, c));
        CHECK(mul(a, PolyMatrix::identity(3)) == a);
        CHECK((a - a).is_zero());
        CHECK(commutator(a, b) == -commutator(b, a));
        CHECK(anticommutator(a, b) == anticommutator(b, a));
    }
}

TEST_CASE("parallel kernels match serial reference") {
    std::mt19937 g(6021023);
    for (const int n : {2, 5, 16, 24}) {
        const PolyMatrix a = rnd_matrix(g, n, n), b = rnd_matrix(g, n, n);
        CHECK(mul(a, b) == mul_serial(a, b));
    }
    const PolyMatrix a = rnd_matrix(g, 6, 6), b = rnd_matrix(g, 7, 7);
    CHECK(kron(a, b) == kron_serial(a, b));  // 42 rows: parallel path
    const PolyMatrix s = rnd_matrix(g, 3, 3), t = rnd_matrix(g, 4, 4);
    CHECK(kron(s, t) == kron_serial(s, t));
}

TEST_CASE("kronecker mixed product, randomized") {
    std::mt19937 g(42);
    for (int i = 0; i < 110; ++i) {
        const PolyMatrix a = rnd_matrix(g, 2, 2), b = rnd_matrix(g, 3, 3),
                         c = rnd_matrix(g, 2, 2), d = rnd_matrix(g, 3, 3);
        CHECK(mul(kron(a, b), kron(c, d)) == kron(mul(a, c), mul(b, d)));
    }
    CHECK(kron(PolyMatrix::identity(2), PolyMatrix::identity(5)).is_identity());
}

TEST_CASE("triangular inverse") {
    std::mt19937 g(1001);
    for (int i = 0; i < 60; ++i) {
        PolyMatrix m = rnd_nilpotent(g, 4);
        for (int k = 0; k < 4; ++k) m.at(k, k) = HPoly::monomial(Rational(k % 2 ? -1 : 3), 0);
        const PolyMatrix inv = invert_upper_triangular(m);
        CHECK(mul(m, inv).is_identity());
        CHECK(mul(inv, m).is_identity());
    }
}

TEST_CASE("nilpotency index") {
    std::mt19937 g(555);
    PolyMatrix n(3, 3);
    n.at(0, 1) = HPoly::h();
    n.at(1, 2) = HPoly::h();
    CHECK(nilpotency_index(n) == 3);
    CHECK(nilpotency_index(PolyMatrix(4, 4)) == 1);
    CHECK(!nilpotency_index(PolyMatrix::identity(2)).has_value());
}

TEST_CASE("analytic series round trips on nilpotents") {
    std::mt19937 g(20202);
    for (int i = 0; i < 110; ++i) {
        const int n = 3 + static_cast<int>(g() % 3);
        const PolyMatrix N = rnd_nilpotent(g, n);
        const PolyMatrix I = PolyMatrix::identity(n);

        const PolyMatrix S = analytic_series(N, AnalyticFn::sqrt1p);
        CHECK(mul(S, S) == I + N);

        CHECK(analytic_series(analytic_series(N, AnalyticFn::arctanh), AnalyticFn::tanh) == N);

        const PolyMatrix E = analytic_series(N, AnalyticFn::exp);
        CHECK(analytic_series(E - I, AnalyticFn::log1p) == N);

        CHECK(mul(I + N, analytic_series(N, AnalyticFn::geom_inv)).is_identity());

        const PolyMatrix C = analytic_series(N, AnalyticFn::cosh);
        const PolyMatrix Sh = analytic_series(N, AnalyticFn::sinh);
        CHECK(C + Sh == E);
        CHECK(mul(C, C) - mul(Sh, Sh) == I);
    }
}

TEST_CASE("analytic series rejects non-nilpotent input") {
    CHECK_THROWS_AS(analytic_series(PolyMatrix::identity(2), AnalyticFn::exp),
                    std::domain_error);
}

TEST_CASE("series coefficients") {
    const auto exp5 = series_coefficients(AnalyticFn::exp, 5);
    CHECK(exp5[0] == Rational(1));
    CHECK(exp5[3] == Rational(1, 6));
    CHECK(exp5[5] == Rational(1, 120));
    const auto at5 = series_coefficients(AnalyticFn::arctanh, 5);
    CHECK(at5[1] == Rational(1));
    CHECK(at5[2] == Rational(0));
    CHECK(at5[3] == Rational(1, 3));
    CHECK(at5[5] == Rational(1, 5));
    const auto sq4 = series_coefficients(AnalyticFn::sqrt1p, 4);
    CHECK(sq4[1] == Rational(1, 2));
    CHECK(sq4[2] == Rational(-1, 8));
}

TEST_CASE("parity exponential of triangular integer-diagonal matrices") {
    std::mt19937 g(777);
    for (int i = 0; i < 110; ++i) {
        PolyMatrix m = rnd_nilpotent(g, 4);
        const int d0 = 3 - static_cast<int>(g() % 2);
        for (int k = 0; k < 4; ++k)
            m.at(k, k) = HPoly::monomial(Rational(d0 - 2 * k), 0);  // distinct integers
        const PolyMatrix F = exp_ipi_triangular(m, +1);
        CHECK(F == exp_ipi_triangular(m, -1));
        CHECK(mul(F, F).is_identity());
        CHECK(commutator(F, m).is_zero());
        for (int k = 0; k < 4; ++k)
            CHECK(F.at(k, k) == HPoly::monomial(Rational((d0 - 2 * k) % 2 ? -1 : 1), 0));
    }

    PolyMatrix bad = PolyMatrix::identity(2);  // repeated diagonal
    bad.at(0, 1) = HPoly::h();
    CHECK_THROWS_AS(exp_ipi_triangular(bad, +1), std::domain_error);
}

TEST_CASE("diagonalization with distinct constant diagonal") {
    std::mt19937 g(888);
    for (int i = 0; i < 110; ++i) {
        PolyMatrix m = rnd_nilpotent(g, 4);
        for (int k = 0; k < 4; ++k) m.at(k, k) = HPoly::monomial(Rational(5 - 3 * k), 0);
        const Diagonalization dg = diagonalize_distinct(m);
        CHECK(mul(dg.Pinv, dg.P).is_identity());
        CHECK(mul(mul(dg.Pinv, m), dg.P) == dg.D);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                if (r != c) CHECK(dg.D.at(r, c).is_zero());
    }
}

TEST_CASE("numeric specialization") {
    PolyMatrix m(2, 2);
    m.at(0, 0) = HPoly::monomial(Rational(1), 0) + HPoly::monomial(Rational(2), 1);
    m.at(1, 1) = HPoly::monomial(Rational(-1), 2);
    const CMatrix c = specialize(m, {0.5, 0.0});
    CHECK(c.at(0, 0).real() == doctest::Approx(2.0));
    CHECK(c.at(1, 1).real() == doctest::Approx(-0.25));
    CHECK(cmax_abs(csub(c, c)) == 0.0);

    // exp of a diagonal matrix
    CMatrix d = cidentity(2);
    d.at(0, 0) = {1.0, 0.0};
    d.at(1, 1) = {0.0, 0.5};
    const CMatrix e = cexp(d);
    CHECK(e.at(0, 0).real() == doctest::Approx(std::exp(1.0)));
    CHECK(e.at(1, 1).real() == doctest::Approx(std::cos(0.5)));
    CHECK(e.at(1, 1).imag() == doctest::Approx(std::sin(0.5)));
    CHECK(std::abs(e.at(0, 1)) == 0.0);
}
