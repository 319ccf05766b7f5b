#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uhsl2/verify.hpp"

#include <random>

using namespace uhsl2;

namespace {

// A mutated representation must violate at least one defining relation; this
// is what makes the relation battery a meaningful gate.
bool relations_hold(const Irrep& r) {
    const PolyMatrix I = PolyMatrix::identity(r.dimension);
    const HPoly half_h = HPoly::monomial(Rational(1, 2), 1);
    if (!mul(r.T, r.Tinv).is_identity()) return false;
    if (!mul(r.Tinv, r.T).is_identity()) return false;
    if (!(commutator(r.H, r.T) == mul(r.T, r.T) - I)) return false;
    if (!(commutator(r.H, r.Tinv) == mul(r.Tinv, r.Tinv) - I)) return false;
    if (!(commutator(r.H, r.Y).scaled(Rational(-2)) ==
          anticommutator(r.Y, r.T) + anticommutator(r.Y, r.Tinv)))
        return false;
    if (!(commutator(r.Y, r.T) == -anticommutator(r.H, r.T).scaled(half_h))) return false;
    if (!(commutator(r.Y, r.Tinv) == anticommutator(r.H, r.Tinv).scaled(half_h))) return false;
    if (!(commutator(r.Xreg, r.Y) == r.H)) return false;
    return true;
}

int flip_every_nonzero_entry(const Irrep& base, PolyMatrix Irrep::*field) {
    int cases = 0;
    for (int r = 0; r < base.dimension; ++r)
        for (int c = 0; c < base.dimension; ++c) {
            if ((base.*field).at(r, c).is_zero()) continue;
            Irrep bad = base;
            (bad.*field).at(r, c) = -(bad.*field).at(r, c);
            CHECK_MESSAGE(!relations_hold(bad), "sign flip at (", r, ",", c,
                          ") slipped through");
            ++cases;
        }
    return cases;
}

}  // namespace

TEST_CASE("casimir value and classical agreement") {
    for (int tj = 0; tj <= 5; ++tj)
        for (const int eps : {+1, -1}) {
            const Irrep r = build_irrep(HalfInt::from_twice(tj), eps);
            const PolyMatrix C = casimir(r);
            const PolyMatrix want =
                PolyMatrix::identity(r.dimension).scaled(Rational(tj * (tj + 2), 4));
            CHECK(C == want);
            CHECK(casimir_classical(r) == want);
            for (const PolyMatrix* g : {&r.H, &r.T, &r.Tinv, &r.Y, &r.Xreg})
                CHECK(commutator(C, *g).is_zero());
        }
}

TEST_CASE("relation suite") {
    const VerificationReport rep = run_relation_suite(HalfInt::parse("2"));
    CHECK(rep.all_pass());
    CHECK(rep.suite == "relations");
    CHECK(!rep.checks.empty());
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.pass, c.id, ": ", c.witness);
}

TEST_CASE("casimir suite") {
    const VerificationReport rep = run_casimir_suite(HalfInt::parse("2"));
    CHECK(rep.all_pass());
    CHECK(rep.suite == "casimir");
}

TEST_CASE("equivalence suite") {
    const VerificationReport rep = run_equivalence_suite(4);
    CHECK(rep.all_pass());
    CHECK(rep.suite == "equivalence");
}

TEST_CASE("report summary counts") {
    const VerificationReport rep = run_casimir_suite(HalfInt::parse("1"));
    const std::string s = rep.summary();
    CHECK(s.find("casimir") != std::string::npos);
    CHECK(s.find("passed") != std::string::npos);
}

TEST_CASE("single sign flips never pass the relation battery") {
    int cases = 0;
    for (const char* js : {"1/2", "1", "3/2", "2"})
        for (const int eps : {+1, -1}) {
            const Irrep base = build_irrep(HalfInt::parse(js), eps);
            REQUIRE(relations_hold(base));
            cases += flip_every_nonzero_entry(base, &Irrep::T);
            cases += flip_every_nonzero_entry(base, &Irrep::Y);
        }
    CHECK(cases >= 100);  // battery size, not a tautology: every case asserted above
}

TEST_CASE("random single-entry perturbations never pass") {
    std::mt19937 g(13);
    const Irrep base = build_irrep(HalfInt::parse("3/2"), +1);
    REQUIRE(relations_hold(base));
    std::uniform_int_distribution<int> idx(0, base.dimension - 1);
    std::uniform_int_distribution<int> pick(0, 2), power(0, 3), cval(1, 6);
    for (int i = 0; i < 120; ++i) {
        Irrep bad = base;
        PolyMatrix& target = pick(g) == 0 ? bad.T : (pick(g) % 2 ? bad.Y : bad.H);
        const HPoly delta = HPoly::monomial(Rational(cval(g)), power(g));
        target.at(idx(g), idx(g)) += delta;
        CHECK(!relations_hold(bad));
    }
}
