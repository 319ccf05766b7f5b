#include "uhsl2/fcoeff.hpp"

#include "uhsl2/hpoly.hpp"

#include <stdexcept>

namespace uhsl2 {

namespace {

// Convolution entry sum_{i} a[i] * b[m-i] over the valid range.
Rational conv_at(const std::vector<Rational>& a, const std::vector<Rational>& b, int m) {
    Rational s(0);
    int lo = std::max(0, m - static_cast<int>(b.size()) + 1);
    int hi = std::min(m, static_cast<int>(a.size()) - 1);
    for (int i = lo; i <= hi; ++i) s += a[i] * b[m - i];
    return s;
}

}  // namespace

FSequence f_recurrence(int K) {
    if (K < 0) throw std::invalid_argument("f_recurrence: negative index");
    std::vector<Rational> f{Rational(1)};
    // Low coefficients of F^2 and of the odd powers F^{2s+1} are final as soon
    // as the f_i they involve are final, so the tables only ever grow.
    std::vector<Rational> f2;                 // F^2
    std::vector<std::vector<Rational>> pw;    // pw[s-1] = F^{2s+1}
    for (int k = 1; k <= K; ++k) {
        for (int m = static_cast<int>(f2.size()); m <= k - 1; ++m) f2.push_back(conv_at(f, f, m));
        if (static_cast<int>(pw.size()) < k) pw.emplace_back();
        for (int s = 1; s <= k; ++s) {
            auto& p = pw[s - 1];
            const auto& prev = (s == 1) ? f : pw[s - 2];
            for (int m = static_cast<int>(p.size()); m <= k - s; ++m)
                p.push_back(conv_at(prev, f2, m));
        }
        Rational sum(0);
        for (int s = 1; s <= k; ++s) sum += pw[s - 1][k - s] / factorial(2 * s + 1);
        f.push_back(sum / Rational(2 * k));
    }
    return FSequence{std::move(f)};
}

FSequence f_closed(int K) {
    if (K < 0) throw std::invalid_argument("f_closed: negative index");
    std::vector<Rational> f;
    Rational pow4(1);
    for (int k = 0; k <= K; ++k) {
        f.push_back(Rational(1) / (Rational(2 * k + 1) * pow4));
        pow4 *= Rational(4);
    }
    return FSequence{std::move(f)};
}

std::vector<Rational> ode_residual(const FSequence& f) {
    const int K = f.max_index();
    const int top = 2 * K + 1;  // work through degree of x^{2K+1} in G = xF
    std::vector<Rational> gc(top + 1, Rational(0));
    for (int k = 0; k <= K; ++k) gc[2 * k + 1] = f.at(k);
    HPoly g{std::vector<Rational>(gc)};

    // sinh(G) with G = xF(x), truncated; G^n enters only for odd n <= top.
    HPoly g2 = mul_truncated(g, g, top);
    HPoly gpow = g;
    HPoly sinh_g;
    for (int n = 1; n <= top; n += 2) {
        sinh_g += gpow.scaled(Rational(1) / factorial(n));
        gpow = mul_truncated(gpow, g2, top);
    }

    // residual = dG/dx - sinh(G)/x, reported through degree 2K.
    std::vector<Rational> res(2 * K + 1, Rational(0));
    for (int k = 0; k <= K; ++k) res[2 * k] = Rational(2 * k + 1) * f.at(k);
    HPoly quot = sinh_g.divided_by_h(1);
    for (int m = 0; m <= 2 * K; ++m) res[m] -= quot.coeff(m);
    return res;
}

std::vector<Rational> ode_residual(int K) { return ode_residual(f_closed(K)); }

}  // namespace uhsl2
