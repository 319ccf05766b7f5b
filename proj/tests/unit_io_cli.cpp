#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uhsl2/io.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <random>
#include <string>
#include <sys/wait.h>

using namespace uhsl2;

namespace {

Rational rnd_rational(std::mt19937& g) {
    std::uniform_int_distribution<long> num(-999, 999);
    std::uniform_int_distribution<long> den(1, 60);
    return Rational(num(g)) / Rational(den(g));
}

HPoly rnd_poly(std::mt19937& g) {
    std::uniform_int_distribution<int> deg(0, 6);
    std::vector<Rational> c(static_cast<size_t>(deg(g)) + 1);
    for (auto& x : c) x = rnd_rational(g);
    return HPoly(std::move(c));
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(UHSL2_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult res;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) res.out.append(buf, n);
    const int status = pclose(p);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

}  // namespace

TEST_CASE("rational json round trip") {
    std::mt19937 g(2024);
    for (int i = 0; i < 120; ++i) {
        const Rational r = rnd_rational(g);
        CHECK(rational_from_json(rational_to_json(r)) == r);
    }
    CHECK(rational_to_json(Rational(-3, 4)).get<std::string>() == "-3/4");
    CHECK(rational_to_json(Rational(5)).get<std::string>() == "5");
}

TEST_CASE("polynomial json round trip") {
    std::mt19937 g(2025);
    for (int i = 0; i < 120; ++i) {
        const HPoly p = rnd_poly(g);
        CHECK(hpoly_from_json(hpoly_to_json(p)) == p);
    }
    CHECK(hpoly_to_json(HPoly()).empty());
}

TEST_CASE("matrix json round trip") {
    std::mt19937 g(2026);
    for (int i = 0; i < 100; ++i) {
        PolyMatrix m(3, 4);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 4; ++c) m.at(r, c) = rnd_poly(g);
        const json j = polymatrix_to_json(m);
        CHECK(j["rows"] == 3);
        CHECK(j["cols"] == 4);
        CHECK(polymatrix_from_json(j) == m);
    }
}

TEST_CASE("json serialization survives text round trip") {
    const Irrep r = build_irrep(HalfInt::parse("3/2"), -1);
    const json j = irrep_to_json(r);
    const json back = json::parse(j.dump());
    CHECK(back == j);
    CHECK(back["dimension"] == 4);
    CHECK(back["epsilon"] == -1);
    CHECK(polymatrix_from_json(back["generators"]["Y"]) == r.Y);
}

TEST_CASE("latex emitters") {
    const HPoly p = HPoly::monomial(Rational(1), 0) + HPoly::monomial(Rational(-3, 2), 2);
    const std::string s = hpoly_to_latex(p);
    CHECK(s.find("\\frac{3}{2}") != std::string::npos);
    CHECK(s.find("h^{2}") != std::string::npos);

    PolyMatrix m(2, 2);
    m.at(0, 1) = HPoly::h();
    const std::string t = polymatrix_to_latex(m);
    CHECK(t.find("\\begin{pmatrix}") != std::string::npos);
    CHECK(t.find("0 & h") != std::string::npos);
    CHECK(t.find("\\end{pmatrix}") != std::string::npos);
}

TEST_CASE("cli: coefficient table") {
    const RunResult r = run_cli("fk --max 6 --method both --check-ode");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1/12") != std::string::npos);
    CHECK(r.out.find("1/53248") != std::string::npos);
    CHECK(r.out.find("agree") != std::string::npos);
}

TEST_CASE("cli: determinism") {
    const std::string a = run_cli("rmatrix --j1 1 --j2 3/2 --format json").out;
    const std::string b = run_cli("rmatrix --j1 1 --j2 3/2 --format json").out;
    CHECK(a == b);
    CHECK(!a.empty());
}

TEST_CASE("cli: verification suites pass") {
    const RunResult r = run_cli("verify --suite all --jmax 3/2 --json");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    REQUIRE(j.is_array());
    for (const auto& suite : j) CHECK(suite["pass"] == true);
}

TEST_CASE("cli: yang-baxter triple") {
    const RunResult r = run_cli("ybe --triple 1/2:+1,1:-1,1:+1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("exact") != std::string::npos);
}

TEST_CASE("cli: singular vector json") {
    const RunResult r = run_cli("singular --lambda 2 --format json");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["level"] == 3);
    CHECK(hpoly_from_json(j["coefficients"][1]) == HPoly::monomial(Rational(1), 2));
    CHECK(hpoly_from_json(j["coefficients"][3]) == HPoly::monomial(Rational(1), 0));
}

TEST_CASE("cli: usage errors exit with 2") {
    CHECK(run_cli("irrep --j -1").exit_code == 2);
    CHECK(run_cli("irrep --j 1/3").exit_code == 2);
    CHECK(run_cli("irrep").exit_code == 2);           // missing required option
    CHECK(run_cli("nonsense").exit_code == 2);        // unknown subcommand
    CHECK(run_cli("").exit_code == 2);                // subcommand required
    CHECK(run_cli("singular --lambda 2 --eps 7").exit_code == 2);
}

TEST_CASE("cli: degree limit exits with 3") {
    CHECK(run_cli("--degree-limit 3 rmatrix --j1 3/2 --j2 3/2").exit_code == 3);
}

TEST_CASE("cli: numeric specialization output") {
    const RunResult r = run_cli("rmatrix --j1 1/2 --j2 1/2 --h 0.5 --format json");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["rows"] == 4);
    CHECK(j["entries"][0][1] == doctest::Approx(0.5));  // the h entry at h = 0.5
    CHECK(j["entries"][3][3] == doctest::Approx(1.0));
}
