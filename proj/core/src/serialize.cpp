#include "kzsolve/serialize.hpp"

#include <json.hpp>

namespace kz {

namespace {

using nlohmann::json;

json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string");
    return Rational::from_string(j.get<std::string>());
}

json poly_to_json(const MultiPoly& p) {
    json terms = json::array();
    for (const auto& t : p.terms()) {
        json exp = json::array();
        for (unsigned e : t.mono.exponents(p.nvars())) exp.push_back(e);
        terms.push_back(json{{"coef", t.coef.str()}, {"exp", exp}});
    }
    return json{{"terms", terms}, {"vars", p.nvars()}};
}

MultiPoly poly_from_json(const json& j) {
    const int nvars = j.at("vars").get<int>();
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
        std::vector<unsigned> exp = t.at("exp").get<std::vector<unsigned>>();
        if (static_cast<int>(exp.size()) != nvars)
            throw ParseError("exponent vector length does not match vars");
        terms.push_back({Monomial::from_exponents(exp),
                         Rational::from_string(t.at("coef").get<std::string>())});
    }
    return MultiPoly::from_terms(nvars, std::move(terms));
}

json ratfunc_to_json(const RatFunc& f) {
    return json{{"den", poly_to_json(f.den())}, {"num", poly_to_json(f.num())}};
}

RatFunc ratfunc_from_json(const json& j) {
    return RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

json matrix_to_json(const RFMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(ratfunc_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"cols", m.cols()}, {"entries", rows}, {"rows", m.rows()}};
}

RFMatrix matrix_from_json(const json& j) {
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    const auto& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != rows) throw ParseError("row count mismatch");
    RFMatrix m(rows, cols, RatFunc());
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(entries[static_cast<size_t>(i)].size()) != cols)
            throw ParseError("column count mismatch in row " + std::to_string(i));
        for (int c = 0; c < cols; ++c)
            m.at(i, c) = ratfunc_from_json(entries[static_cast<size_t>(i)][static_cast<size_t>(c)]);
    }
    return m;
}

json parse_or_throw(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
}

} // namespace

std::string to_document(const AssembledSolution& sol) {
    json base = json::array();
    for (const auto& b : sol.base.points) base.push_back(b.str());
    json factors = json::array();
    for (const auto& f : sol.factors) factors.push_back(matrix_to_json(f));
    const json doc{{"base", base},
                   {"factors", factors},
                   {"kind", "kz-rational-solution"},
                   {"n", sol.n},
                   {"product", matrix_to_json(sol.product)},
                   {"rho", sol.rho}};
    return doc.dump(1);
}

AssembledSolution solution_from_document(const std::string& text) {
    const json doc = parse_or_throw(text);
    try {
        AssembledSolution sol;
        if (doc.value("kind", "") != "kz-rational-solution")
            throw ParseError("document is not a kz-rational-solution");
        sol.n = doc.at("n").get<int>();
        sol.rho = doc.at("rho").get<long>();
        for (const auto& b : doc.at("base"))
            sol.base.points.push_back(Rational::from_string(b.get<std::string>()));
        for (const auto& f : doc.at("factors")) sol.factors.push_back(matrix_from_json(f));
        sol.product = matrix_from_json(doc.at("product"));
        return sol;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed solution document: ") + e.what());
    }
}

std::string to_document(const RFMatrix& m) {
    return json{{"kind", "kz-matrix"}, {"matrix", matrix_to_json(m)}}.dump(1);
}

RFMatrix matrix_from_document(const std::string& text) {
    const json doc = parse_or_throw(text);
    try {
        return matrix_from_json(doc.at("matrix"));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed matrix document: ") + e.what());
    }
}

std::string report_to_json(const Report& rep, const std::string& command_echo) {
    json entries = json::array();
    for (const auto& e : rep.entries) {
        json item{{"name", e.name}, {"status", to_string(e.status)}, {"seconds", e.seconds}};
        if (!e.witness.empty()) item["witness"] = e.witness;
        entries.push_back(std::move(item));
    }
    return json{{"checks", entries}, {"command", command_echo}, {"ok", rep.all_passed()}}.dump(1);
}

namespace {

template <class M, class ToStr>
std::string latex_impl(const M& m, ToStr to_str) {
    std::string out = "\\begin{pmatrix}\n";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            out += to_str(m.at(i, j));
            if (j + 1 < m.cols()) out += " & ";
        }
        if (i + 1 < m.rows()) out += " \\\\";
        out += "\n";
    }
    out += "\\end{pmatrix}\n";
    return out;
}

} // namespace

std::string latex_matrix(const RatMatrix& m) {
    return latex_impl(m, [](const Rational& r) {
        if (r.is_integer()) return r.str();
        return "\\tfrac{" + r.num().get_str() + "}{" + r.den().get_str() + "}";
    });
}

std::string latex_matrix(const RFMatrix& m, const std::string& var_prefix) {
    return latex_impl(m, [&](const RatFunc& f) {
        if (f.is_polynomial()) return f.num().str(var_prefix);
        return "\\frac{" + f.num().str(var_prefix) + "}{" + f.den().str(var_prefix) + "}";
    });
}

} // namespace kz
