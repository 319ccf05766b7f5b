#pragma once

// Frozen matrices shared by several test binaries, written out entry by entry
// on purpose: these are the values the library must reproduce, so they are
// not computed with it.

#include "uhsl2/polymatrix.hpp"

#include <vector>

namespace fixtures {

using uhsl2::HPoly;
using uhsl2::PolyMatrix;
using uhsl2::Rational;

inline HPoly mono(long c, int p = 0) { return HPoly::monomial(Rational(c), p); }
inline HPoly monoq(long n, long d, int p) { return HPoly::monomial(Rational(n, d), p); }

inline PolyMatrix from_rows(const std::vector<std::vector<HPoly>>& rows) {
    PolyMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c)
            m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
    return m;
}

struct GeneratorTriple {
    PolyMatrix H, X, Y;
};

inline const HPoly o = HPoly();  // zero entry

// spin 1/2, diagonal gauge
inline GeneratorTriple spin_half() {
    return {from_rows({{mono(1), o}, {o, mono(-1)}}),
            from_rows({{o, mono(1)}, {o, o}}),
            from_rows({{o, o}, {mono(1), o}})};
}

// spin 1, diagonal gauge
inline GeneratorTriple spin_one() {
    return {from_rows({{mono(2), o, o}, {o, o, o}, {o, o, mono(-2)}}),
            from_rows({{o, mono(2), o}, {o, o, mono(2)}, {o, o, o}}),
            from_rows({{o, monoq(-1, 2, 2), o},
                       {mono(1), o, monoq(-1, 2, 2)},
                       {o, mono(1), o}})};
}

// spin 3/2, diagonal gauge
inline GeneratorTriple spin_three_half() {
    return {from_rows({{mono(3), o, o, o},
                       {o, mono(1), o, o},
                       {o, o, mono(-1), o},
                       {o, o, o, mono(-3)}}),
            from_rows({{o, mono(3), o, mono(3, 2)},
                       {o, o, mono(4), o},
                       {o, o, o, mono(3)},
                       {o, o, o, o}}),
            from_rows({{o, monoq(-3, 2, 2), o, monoq(9, 4, 4)},
                       {mono(1), o, mono(-3, 2), o},
                       {o, mono(1), o, monoq(-3, 2, 2)},
                       {o, o, mono(1), o}})};
}

// lambda = 2 quotient before diagonalizing H
inline GeneratorTriple quotient_two_raw() {
    return {from_rows({{mono(2), o, mono(-2, 2)}, {o, o, o}, {o, o, mono(-2)}}),
            from_rows({{o, mono(2), o}, {o, o, mono(2)}, {o, o, o}}),
            from_rows({{o, o, o}, {mono(1), o, mono(-1, 2)}, {o, mono(1), o}})};
}

// lambda = 3 quotient before diagonalizing H
inline GeneratorTriple quotient_three_raw() {
    return {from_rows({{mono(3), o, mono(-6, 2), o},
                       {o, mono(1), o, mono(-18, 2)},
                       {o, o, mono(-1), o},
                       {o, o, o, mono(-3)}}),
            from_rows({{o, mono(3), o, mono(-6, 2)},
                       {o, o, mono(4), o},
                       {o, o, o, mono(3)},
                       {o, o, o, o}}),
            from_rows({{o, o, o, o},
                       {mono(1), o, o, o},
                       {o, mono(1), o, mono(-6, 2)},
                       {o, o, mono(1), o}})};
}

// R on (1/2,+1) x (1,+1)
inline PolyMatrix rmatrix_half_one() {
    return from_rows({
        {mono(1), mono(2, 1), mono(2, 2), mono(-2, 1), mono(2, 2), o},
        {o, mono(1), mono(2, 1), o, o, mono(2, 2)},
        {o, o, mono(1), o, o, mono(2, 1)},
        {o, o, o, mono(1), mono(-2, 1), mono(2, 2)},
        {o, o, o, o, mono(1), mono(-2, 1)},
        {o, o, o, o, o, mono(1)},
    });
}

// R on (1/2,+1) x (3/2,+1)
inline PolyMatrix rmatrix_half_threehalf() {
    return from_rows({
        {mono(1), mono(3, 1), mono(6, 2), mono(9, 3), mono(-3, 1), mono(3, 2), o, mono(9, 4)},
        {o, mono(1), mono(4, 1), mono(6, 2), o, mono(-1, 1), mono(4, 2), o},
        {o, o, mono(1), mono(3, 1), o, o, mono(1, 1), mono(3, 2)},
        {o, o, o, mono(1), o, o, o, mono(3, 1)},
        {o, o, o, o, mono(1), mono(-3, 1), mono(6, 2), mono(-9, 3)},
        {o, o, o, o, o, mono(1), mono(-4, 1), mono(6, 2)},
        {o, o, o, o, o, o, mono(1), mono(-3, 1)},
        {o, o, o, o, o, o, o, mono(1)},
    });
}

// R on (1/2,+1) x (1/2,-1)
inline PolyMatrix rmatrix_half_half_mixed() {
    return from_rows({
        {mono(-1), mono(1, 1), mono(1, 1), mono(1, 2)},
        {o, mono(-1), o, mono(-1, 1)},
        {o, o, mono(-1), mono(-1, 1)},
        {o, o, o, mono(-1)},
    });
}

}  // namespace fixtures
