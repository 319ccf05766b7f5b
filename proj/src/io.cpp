#include "uhsl2/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace uhsl2 {

json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) { return Rational::from_string(j.get<std::string>()); }

json hpoly_to_json(const HPoly& p) {
    json arr = json::array();
    for (const Rational& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

HPoly hpoly_from_json(const json& j) {
    std::vector<Rational> c;
    c.reserve(j.size());
    for (const auto& v : j) c.push_back(Rational::from_string(v.get<std::string>()));
    return HPoly(std::move(c));
}

json polymatrix_to_json(const PolyMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(hpoly_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

PolyMatrix polymatrix_from_json(const json& j) {
    PolyMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
    const json& entries = j.at("entries");
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) m.at(r, c) = hpoly_from_json(entries.at(r).at(c));
    return m;
}

namespace {

const char* basis_name(Basis b) {
    return b == Basis::verma_diagonal ? "verma_diagonal" : "symmetric_numeric";
}

json generator_block(const Irrep& r) {
    return json{{"H", polymatrix_to_json(r.H)},       {"T", polymatrix_to_json(r.T)},
                {"Tinv", polymatrix_to_json(r.Tinv)}, {"Y", polymatrix_to_json(r.Y)},
                {"Xreg", polymatrix_to_json(r.Xreg)}, {"Jplus", polymatrix_to_json(r.Jplus)},
                {"Jminus", polymatrix_to_json(r.Jminus)}, {"J3", polymatrix_to_json(r.J3)}};
}

}  // namespace

json irrep_to_json(const Irrep& r) {
    return json{{"j", r.j.str()},
                {"epsilon", r.epsilon},
                {"dimension", r.dimension},
                {"basis", basis_name(r.basis)},
                {"generators", generator_block(r)}};
}

json quotient_to_json(const QuotientRep& q) {
    return json{{"lambda", q.lambda},
                {"epsilon", q.epsilon},
                {"generators",
                 json{{"H", polymatrix_to_json(q.H)},
                      {"T", polymatrix_to_json(q.T)},
                      {"Tinv", polymatrix_to_json(q.Tinv)},
                      {"Y", polymatrix_to_json(q.Y)},
                      {"Xreg", polymatrix_to_json(q.Xreg)}}}};
}

json singular_to_json(const SingularVector& sv, int lambda, int epsilon) {
    json coeffs = json::array();
    for (const HPoly& c : sv.coefficients) coeffs.push_back(hpoly_to_json(c));
    return json{{"lambda", lambda}, {"epsilon", epsilon}, {"level", sv.level},
                {"coefficients", std::move(coeffs)}};
}

json rmatrix_to_json(const RMatrix& r) {
    return json{{"j1", r.j1.str()},   {"eps1", r.eps1},
                {"j2", r.j2.str()},   {"eps2", r.eps2},
                {"dim", r.matrix.rows()}, {"matrix", polymatrix_to_json(r.matrix)}};
}

json ybe_to_json(const YbeReport& rep) {
    json j{{"spins",
            json::array({json{{"j", rep.s1.j.str()}, {"epsilon", rep.s1.epsilon}},
                         json{{"j", rep.s2.j.str()}, {"epsilon", rep.s2.epsilon}},
                         json{{"j", rep.s3.j.str()}, {"epsilon", rep.s3.epsilon}}})},
           {"dim", rep.dim},
           {"pass", rep.pass}};
    if (rep.witness)
        j["witness"] = json{{"row", rep.witness->row},
                            {"col", rep.witness->col},
                            {"difference", hpoly_to_json(rep.witness->difference)}};
    return j;
}

json report_to_json(const VerificationReport& rep) {
    json checks = json::array();
    for (const CheckResult& c : rep.checks) {
        json e{{"id", c.id}, {"pass", c.pass}};
        if (!c.witness.empty()) e["witness"] = c.witness;
        checks.push_back(std::move(e));
    }
    return json{{"suite", rep.suite}, {"pass", rep.all_pass()}, {"checks", std::move(checks)}};
}

json cmatrix_to_json(const CMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols; ++c) {
            const auto& v = m.at(r, c);
            if (v.imag() == 0.0) row.push_back(v.real());
            else row.push_back(json::array({v.real(), v.imag()}));
        }
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows}, {"cols", m.cols}, {"entries", std::move(rows)}};
}

json numeric_irrep_to_json(const NumericIrrep& r) {
    return json{{"j", r.j.str()},
                {"h", r.h0},
                {"basis", "symmetric_numeric"},
                {"generators",
                 json{{"H", cmatrix_to_json(r.H)},
                      {"T", cmatrix_to_json(r.T)},
                      {"X", cmatrix_to_json(r.X)},
                      {"Y", cmatrix_to_json(r.Y)}}}};
}

namespace {

std::string rational_latex(const Rational& r, bool strip_unit_for_monomial) {
    if (r.is_integer()) {
        if (strip_unit_for_monomial && (r == Rational(1) || r == Rational(-1)))
            return r.sgn() < 0 ? "-" : "";
        return r.str();
    }
    Rational mag = r.sgn() < 0 ? -r : r;
    return std::string(r.sgn() < 0 ? "-" : "") + "\\frac{" + mag.numerator().get_str() + "}{" +
           mag.denominator().get_str() + "}";
}

}  // namespace

std::string hpoly_to_latex(const HPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= p.degree(); ++k) {
        const Rational& c = p.coeff(static_cast<size_t>(k));
        if (c.is_zero()) continue;
        std::string body = rational_latex(c, k > 0);
        if (k >= 1) {
            if (!body.empty() && body != "-") body += " ";
            body += k == 1 ? "h" : "h^{" + std::to_string(k) + "}";
        }
        if (!first && body.rfind('-', 0) != 0) os << "+";
        os << body;
        first = false;
    }
    return os.str();
}

std::string polymatrix_to_latex(const PolyMatrix& m) {
    std::ostringstream os;
    os << "\\begin{pmatrix}\n";
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            os << hpoly_to_latex(m.at(r, c));
            if (c + 1 < m.cols()) os << " & ";
        }
        if (r + 1 < m.rows()) os << " \\\\";
        os << "\n";
    }
    os << "\\end{pmatrix}";
    return os.str();
}

std::string irrep_to_latex(const Irrep& r) {
    std::ostringstream os;
    os << "% j = " << r.j.str() << ", epsilon = " << r.epsilon << "\n";
    os << "H = " << polymatrix_to_latex(r.H) << "\n\n";
    os << "T = " << polymatrix_to_latex(r.T) << "\n\n";
    os << "T^{-1} = " << polymatrix_to_latex(r.Tinv) << "\n\n";
    os << "X_{reg} = " << polymatrix_to_latex(r.Xreg) << "\n\n";
    os << "Y = " << polymatrix_to_latex(r.Y) << "\n";
    return os.str();
}

std::string quotient_to_latex(const QuotientRep& q) {
    std::ostringstream os;
    os << "% lambda = " << q.lambda << ", epsilon = " << q.epsilon << " (pre-diagonal gauge)\n";
    os << "H = " << polymatrix_to_latex(q.H) << "\n\n";
    os << "T = " << polymatrix_to_latex(q.T) << "\n\n";
    os << "X = " << polymatrix_to_latex(q.Xreg) << "\n\n";
    os << "Y = " << polymatrix_to_latex(q.Y) << "\n";
    return os.str();
}

std::string rmatrix_to_latex(const RMatrix& r) {
    std::ostringstream os;
    os << "% R on (j1 = " << r.j1.str() << ", eps1 = " << r.eps1 << ") x (j2 = " << r.j2.str()
       << ", eps2 = " << r.eps2 << ")\n";
    os << "R = " << polymatrix_to_latex(r.matrix) << "\n";
    return os.str();
}

std::string polymatrix_to_pretty(const PolyMatrix& m) {
    std::vector<std::string> cells(static_cast<size_t>(m.rows()) * m.cols());
    std::vector<size_t> width(static_cast<size_t>(m.cols()), 0);
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            std::string s = m.at(r, c).str();
            width[c] = std::max(width[c], s.size());
            cells[static_cast<size_t>(r) * m.cols() + c] = std::move(s);
        }
    std::ostringstream os;
    for (int r = 0; r < m.rows(); ++r) {
        os << "[ ";
        for (int c = 0; c < m.cols(); ++c) {
            os << std::setw(static_cast<int>(width[c]))
               << cells[static_cast<size_t>(r) * m.cols() + c];
            if (c + 1 < m.cols()) os << "  ";
        }
        os << " ]\n";
    }
    return os.str();
}

std::string cmatrix_to_pretty(const CMatrix& m) {
    std::ostringstream os;
    os << std::setprecision(10);
    for (int r = 0; r < m.rows; ++r) {
        os << "[ ";
        for (int c = 0; c < m.cols; ++c) {
            const auto& v = m.at(r, c);
            if (v.imag() == 0.0) os << v.real();
            else os << v.real() << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i";
            if (c + 1 < m.cols) os << "  ";
        }
        os << " ]\n";
    }
    return os.str();
}

}  // namespace uhsl2
