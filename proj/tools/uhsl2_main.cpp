#include "uhsl2/fcoeff.hpp"
#include "uhsl2/io.hpp"
#include "uhsl2/represent.hpp"
#include "uhsl2/rmatrix.hpp"
#include "uhsl2/verify.hpp"
#include "uhsl2/verma.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <iostream>
#include <string>
#include <vector>

namespace {

using uhsl2::HalfInt;
using uhsl2::Irrep;
using json = nlohmann::json;

int parse_eps(const std::string& s) {
    if (s == "+1" || s == "1") return 1;
    if (s == "-1") return -1;
    throw std::invalid_argument("epsilon must be +1 or -1, got '" + s + "'");
}

struct FkArgs {
    int max = 10;
    std::string method = "both";
    bool check_ode = false;
    std::string format = "pretty";
};

int run_fk(const FkArgs& a) {
    bool want_rec = a.method == "recurrence" || a.method == "both";
    bool want_closed = a.method == "closed" || a.method == "both";
    uhsl2::FSequence rec, closed;
    if (want_rec) rec = uhsl2::f_recurrence(a.max);
    if (want_closed) closed = uhsl2::f_closed(a.max);
    const uhsl2::FSequence& shown = want_rec ? rec : closed;

    int exit_code = 0;
    if (a.method == "both" && !(rec.values == closed.values)) {
        std::cout << "MISMATCH between recurrence and closed form\n";
        exit_code = 1;
    }

    std::vector<uhsl2::Rational> residual;
    bool ode_ok = true;
    if (a.check_ode) {
        residual = uhsl2::ode_residual(shown);
        for (const auto& r : residual) ode_ok = ode_ok && r.is_zero();
        if (!ode_ok) exit_code = 1;
    }

    if (a.format == "json") {
        json out{{"max", a.max}, {"method", a.method}};
        json vals = json::array();
        for (const auto& v : shown.values) vals.push_back(v.str());
        out["f"] = std::move(vals);
        if (a.method == "both") out["methods_agree"] = rec.values == closed.values;
        if (a.check_ode) out["ode_residual_zero"] = ode_ok;
        std::cout << out.dump(2) << "\n";
        return exit_code;
    }
    const char* sep = a.format == "csv" ? "," : "  ";
    if (a.format == "csv") std::cout << "k,f_k\n";
    for (int k = 0; k <= shown.max_index(); ++k)
        std::cout << k << sep << shown.at(k).str() << "\n";
    if (a.method == "both" && exit_code == 0)
        std::cout << "recurrence and closed form agree through k = " << a.max << "\n";
    if (a.check_ode)
        std::cout << (ode_ok ? "generating-function ODE residual vanishes through degree "
                             : "ODE RESIDUAL NONZERO through degree ")
                  << 2 * a.max << "\n";
    return exit_code;
}

void print_irrep_pretty(const Irrep& r) {
    std::cout << "j = " << r.j.str() << ", eps = " << (r.epsilon > 0 ? "+1" : "-1")
              << ", dim = " << r.dimension << "\n";
    if (r.epsilon < 0)
        std::cout << "(X = (i*pi/h) I + Xreg; only the regular part is printed)\n";
    const struct {
        const char* name;
        const uhsl2::PolyMatrix& m;
    } gens[] = {{"H", r.H}, {"T", r.T}, {"Tinv", r.Tinv}, {"Xreg", r.Xreg}, {"Y", r.Y}};
    for (const auto& g : gens)
        std::cout << "\n" << g.name << " =\n" << uhsl2::polymatrix_to_pretty(g.m);
}

struct IrrepArgs {
    std::string j;
    std::string eps = "+1";
    std::string basis = "verma";
    double h0 = 0.3;
    std::string format = "pretty";
};

int run_irrep(const IrrepArgs& a) {
    Irrep r = uhsl2::build_irrep(HalfInt::parse(a.j), parse_eps(a.eps));
    if (a.basis == "symmetric") {
        if (r.epsilon != 1)
            throw std::invalid_argument("symmetric basis output is defined for eps = +1");
        uhsl2::NumericIrrep sym = uhsl2::to_symmetric_basis(r, a.h0);
        if (a.format == "json") {
            std::cout << uhsl2::numeric_irrep_to_json(sym).dump(2) << "\n";
        } else if (a.format == "latex") {
            throw std::invalid_argument("latex output is for the exact verma basis");
        } else {
            std::cout << "j = " << sym.j.str() << ", symmetric basis at h = " << sym.h0 << "\n";
            std::cout << "\nH =\n" << uhsl2::cmatrix_to_pretty(sym.H);
            std::cout << "\nT =\n" << uhsl2::cmatrix_to_pretty(sym.T);
            std::cout << "\nX =\n" << uhsl2::cmatrix_to_pretty(sym.X);
            std::cout << "\nY =\n" << uhsl2::cmatrix_to_pretty(sym.Y);
        }
        return 0;
    }
    if (a.format == "json") std::cout << uhsl2::irrep_to_json(r).dump(2) << "\n";
    else if (a.format == "latex") std::cout << uhsl2::irrep_to_latex(r);
    else print_irrep_pretty(r);
    return 0;
}

struct SingularArgs {
    int lambda = 0;
    std::string eps = "+1";
    int depth = -1;
    std::string format = "pretty";
};

int run_singular(const SingularArgs& a) {
    uhsl2::VermaModule vm = uhsl2::build_verma(a.lambda, parse_eps(a.eps), a.depth);
    uhsl2::SingularVector sv = uhsl2::find_singular(vm);
    if (a.format == "json") {
        std::cout << uhsl2::singular_to_json(sv, vm.lambda, vm.epsilon).dump(2) << "\n";
        return 0;
    }
    std::cout << "lambda = " << vm.lambda << ", eps = " << (vm.epsilon > 0 ? "+1" : "-1")
              << ": singular vector at level " << sv.level << "\n";
    std::cout << "v = w_" << sv.level;
    for (int k = sv.level - 1; k >= 0; --k) {
        const uhsl2::HPoly& c = sv.coefficients[static_cast<size_t>(k)];
        if (!c.is_zero()) std::cout << " + (" << c.str() << ") w_" << k;
    }
    std::cout << "\n";
    return 0;
}

struct QuotientArgs {
    int lambda = 0;
    std::string eps = "+1";
    bool raw = false;
    std::string format = "pretty";
};

int run_quotient(const QuotientArgs& a) {
    uhsl2::VermaModule vm = uhsl2::build_verma(a.lambda, parse_eps(a.eps));
    uhsl2::SingularVector sv = uhsl2::find_singular(vm);
    if (a.raw) {
        uhsl2::QuotientRep q = uhsl2::quotient_raw(vm, sv);
        if (a.format == "json") std::cout << uhsl2::quotient_to_json(q).dump(2) << "\n";
        else if (a.format == "latex") std::cout << uhsl2::quotient_to_latex(q);
        else {
            std::cout << "lambda = " << q.lambda << ", eps = " << (q.epsilon > 0 ? "+1" : "-1")
                      << " (pre-diagonal gauge)\n";
            std::cout << "\nH =\n" << uhsl2::polymatrix_to_pretty(q.H);
            std::cout << "\nT =\n" << uhsl2::polymatrix_to_pretty(q.T);
            std::cout << "\nXreg =\n" << uhsl2::polymatrix_to_pretty(q.Xreg);
            std::cout << "\nY =\n" << uhsl2::polymatrix_to_pretty(q.Y);
        }
        return 0;
    }
    Irrep r = uhsl2::quotient_irrep(vm, sv);
    if (a.format == "json") std::cout << uhsl2::irrep_to_json(r).dump(2) << "\n";
    else if (a.format == "latex") std::cout << uhsl2::irrep_to_latex(r);
    else print_irrep_pretty(r);
    return 0;
}

struct RmatrixArgs {
    std::string j1, j2;
    std::string eps1 = "+1", eps2 = "+1";
    double h0 = 0.0;
    bool numeric = false;
    std::string format = "pretty";
};

int run_rmatrix(const RmatrixArgs& a) {
    Irrep r1 = uhsl2::build_irrep(HalfInt::parse(a.j1), parse_eps(a.eps1));
    Irrep r2 = uhsl2::build_irrep(HalfInt::parse(a.j2), parse_eps(a.eps2));
    uhsl2::RMatrix R = uhsl2::universal_r(r1, r2);
    if (a.numeric) {
        uhsl2::CMatrix num = uhsl2::specialize(R.matrix, {a.h0, 0.0});
        if (a.format == "json") std::cout << uhsl2::cmatrix_to_json(num).dump(2) << "\n";
        else std::cout << uhsl2::cmatrix_to_pretty(num);
        return 0;
    }
    if (a.format == "json") std::cout << uhsl2::rmatrix_to_json(R).dump(2) << "\n";
    else if (a.format == "latex") std::cout << uhsl2::rmatrix_to_latex(R);
    else {
        std::cout << "R on (j1=" << R.j1.str() << ",eps1=" << R.eps1 << ") x (j2=" << R.j2.str()
                  << ",eps2=" << R.eps2 << "), dim " << R.matrix.rows() << "\n";
        std::cout << uhsl2::polymatrix_to_pretty(R.matrix);
    }
    return 0;
}

uhsl2::YbeSpin parse_spin(const std::string& tok) {
    auto colon = tok.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("spin token '" + tok + "' is not of the form j:eps");
    return {HalfInt::parse(tok.substr(0, colon)), parse_eps(tok.substr(colon + 1))};
}

int run_ybe(const std::string& triple, bool as_json) {
    std::vector<uhsl2::YbeSpin> spins;
    size_t start = 0;
    while (start <= triple.size()) {
        size_t comma = triple.find(',', start);
        std::string tok = triple.substr(start, comma == std::string::npos ? std::string::npos
                                                                          : comma - start);
        if (!tok.empty()) spins.push_back(parse_spin(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (spins.size() != 3)
        throw std::invalid_argument("--triple needs exactly three j:eps entries");
    uhsl2::YbeReport rep = uhsl2::check_ybe(spins[0], spins[1], spins[2]);
    if (as_json) std::cout << uhsl2::ybe_to_json(rep).dump(2) << "\n";
    else {
        std::cout << rep.describe() << "\n";
        if (!rep.pass) std::cout << uhsl2::ybe_to_json(rep).dump(2) << "\n";
    }
    return rep.pass ? 0 : 1;
}

struct VerifyArgs {
    std::string suite = "all";
    std::string jmax = "7/2";
    int lambda_max = -1;
    bool as_json = false;
};

int run_verify(const VerifyArgs& a) {
    HalfInt jmax = HalfInt::parse(a.jmax);
    int lambda_max = a.lambda_max >= 0 ? a.lambda_max : jmax.twice();
    std::vector<uhsl2::VerificationReport> reports;
    if (a.suite == "relations" || a.suite == "all")
        reports.push_back(uhsl2::run_relation_suite(jmax));
    if (a.suite == "casimir" || a.suite == "all")
        reports.push_back(uhsl2::run_casimir_suite(jmax));
    if (a.suite == "equivalence" || a.suite == "all")
        reports.push_back(uhsl2::run_equivalence_suite(lambda_max));
    if (reports.empty()) throw std::invalid_argument("unknown suite '" + a.suite + "'");

    bool ok = true;
    if (a.as_json) {
        json out = json::array();
        for (const auto& r : reports) {
            out.push_back(uhsl2::report_to_json(r));
            ok = ok && r.all_pass();
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << r.summary() << "\n";
            ok = ok && r.all_pass();
        }
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact irreps, R-matrices and Yang-Baxter checks for the h-deformed sl(2)"};
    app.require_subcommand(1);
    // "--h" is a real option below, so help must not claim the short "-h".
    app.set_help_flag("--help", "print help and exit");

    int degree_limit = uhsl2::degree_limit();
    app.add_option("--degree-limit", degree_limit,
                   "abort if any intermediate polynomial exceeds this h-degree")
        ->envname("UHSL2_DEGREE_LIMIT");
    int threads = 0;
    app.add_option("--threads", threads, "OpenMP thread count (0 = runtime default)");

    FkArgs fk;
    CLI::App* fk_cmd = app.add_subcommand("fk", "table of the series coefficients f_k");
    fk_cmd->add_option("--max", fk.max, "highest k")->required()->check(CLI::NonNegativeNumber);
    fk_cmd->add_option("--method", fk.method)->check(CLI::IsMember({"recurrence", "closed", "both"}));
    fk_cmd->add_flag("--check-ode", fk.check_ode, "verify the generating-function ODE residual");
    fk_cmd->add_option("--format", fk.format)->check(CLI::IsMember({"pretty", "csv", "json"}));

    IrrepArgs ir;
    CLI::App* ir_cmd = app.add_subcommand("irrep", "spin-j irreducible representation");
    ir_cmd->set_help_flag("--help", "print help and exit");
    ir_cmd->add_option("--j", ir.j, "spin, e.g. 2 or 3/2")->required();
    ir_cmd->add_option("--eps", ir.eps, "branch sign, +1 or -1");
    ir_cmd->add_option("--basis", ir.basis)->check(CLI::IsMember({"verma", "symmetric"}));
    ir_cmd->add_option("--h", ir.h0, "numeric h for the symmetric basis");
    ir_cmd->add_option("--format", ir.format)->check(CLI::IsMember({"pretty", "json", "latex"}));

    SingularArgs sg;
    CLI::App* sg_cmd = app.add_subcommand("singular", "Verma-module singular vector");
    sg_cmd->add_option("--lambda", sg.lambda, "highest weight")->required()
        ->check(CLI::NonNegativeNumber);
    sg_cmd->add_option("--eps", sg.eps);
    sg_cmd->add_option("--depth", sg.depth, "truncation depth (default lambda + 2)");
    sg_cmd->add_option("--format", sg.format)->check(CLI::IsMember({"pretty", "json"}));

    QuotientArgs qt;
    CLI::App* qt_cmd = app.add_subcommand("quotient", "irrep as a Verma-module quotient");
    qt_cmd->add_option("--lambda", qt.lambda)->required()->check(CLI::NonNegativeNumber);
    qt_cmd->add_option("--eps", qt.eps);
    qt_cmd->add_flag("--raw", qt.raw, "pre-diagonalization gauge");
    qt_cmd->add_option("--format", qt.format)->check(CLI::IsMember({"pretty", "json", "latex"}));

    RmatrixArgs rm;
    CLI::App* rm_cmd = app.add_subcommand("rmatrix", "R-matrix on a pair of irreps");
    rm_cmd->set_help_flag("--help", "print help and exit");
    rm_cmd->add_option("--j1", rm.j1)->required();
    rm_cmd->add_option("--eps1", rm.eps1);
    rm_cmd->add_option("--j2", rm.j2)->required();
    rm_cmd->add_option("--eps2", rm.eps2);
    CLI::Option* h_opt = rm_cmd->add_option("--h", rm.h0, "specialize numerically at this h");
    rm_cmd->add_option("--format", rm.format)->check(CLI::IsMember({"pretty", "json", "latex"}));

    std::string triple;
    bool ybe_json = false;
    CLI::App* ybe_cmd = app.add_subcommand("ybe", "Yang-Baxter check on a triple of irreps");
    ybe_cmd->add_option("--triple", triple, "three spins, e.g. \"1/2:+1,1:+1,3/2:-1\"")->required();
    ybe_cmd->add_flag("--json", ybe_json);

    VerifyArgs vf;
    CLI::App* vf_cmd = app.add_subcommand("verify", "run verification suites");
    vf_cmd->add_option("--suite", vf.suite)
        ->check(CLI::IsMember({"relations", "casimir", "equivalence", "all"}));
    vf_cmd->add_option("--jmax", vf.jmax, "largest spin (relations, casimir)");
    vf_cmd->add_option("--lambda-max", vf.lambda_max, "largest weight (equivalence; default 2*jmax)");
    vf_cmd->add_flag("--json", vf.as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        uhsl2::set_degree_limit(degree_limit);
        if (threads > 0) {
#ifdef _OPENMP
            omp_set_num_threads(threads);
#endif
        }
        rm.numeric = h_opt->count() > 0;
        if (*fk_cmd) return run_fk(fk);
        if (*ir_cmd) return run_irrep(ir);
        if (*sg_cmd) return run_singular(sg);
        if (*qt_cmd) return run_quotient(qt);
        if (*rm_cmd) return run_rmatrix(rm);
        if (*ybe_cmd) return run_ybe(triple, ybe_json);
        if (*vf_cmd) return run_verify(vf);
        return 2;
    } catch (const uhsl2::degree_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    }
}
