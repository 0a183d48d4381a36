#ifndef LINTERM_IO_HPP
#define LINTERM_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vendor/json.hpp"

#include "decision.hpp"
#include "errors.hpp"
#include "frontend.hpp"
#include "program.hpp"
#include "simulate.hpp"
#include "witness.hpp"

// Input loading and result serialization. Machine output is JSON; every
// numeric value rides as an exact rational string, and algebraic numbers as
// minimal-polynomial coefficient lists plus isolating-interval endpoints.
// Decimals never appear.

namespace linterm {

// Version stamp on every emitted certificate and witness document.
inline constexpr int format_version = 1;

inline std::vector<Rational> parse_rational_vector(std::string_view text) {
    std::vector<Rational> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view item = text.substr(pos, comma - pos);
        size_t a = item.find_first_not_of(" \t");
        if (a == std::string_view::npos)
            throw degenerate_input("empty entry in vector '" + std::string(text) + "'");
        size_t b = item.find_last_not_of(" \t");
        out.push_back(Rational::parse(item.substr(a, b - a + 1)));
        pos = comma + 1;
    }
    return out;
}

inline std::string format_rational_vector(const std::vector<Rational>& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ", ";
        out += v[i].to_string();
    }
    return out + ")";
}

namespace detail {

inline Rational rational_from_json(const nlohmann::json& v, const char* where) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<std::int64_t>()));
    throw degenerate_input(std::string(where) +
                           " entries must be integers or rational strings like \"-3/2\"");
}

inline std::vector<Rational> rational_array(const nlohmann::json& v, size_t expected,
                                            const char* where) {
    if (!v.is_array() || v.size() != expected)
        throw degenerate_input(std::string(where) + " must be an array of " +
                               std::to_string(expected) + " entries");
    std::vector<Rational> out;
    out.reserve(expected);
    for (const auto& item : v) out.push_back(rational_from_json(item, where));
    return out;
}

inline nlohmann::json coeff_strings(const Polynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Rational& c : p.coefficients()) arr.push_back(c.to_string());
    if (arr.empty()) arr.push_back("0");
    return arr;
}

inline nlohmann::json eigen_json(const EigenRecord& rec) {
    return {{"minpoly", coeff_strings(rec.value.minpoly())},
            {"interval", {rec.value.interval().low.to_string(),
                          rec.value.interval().high.to_string()}},
            {"multiplicity", rec.multiplicity}};
}

// Rationals print as themselves; genuine irrationals keep the root-and-
// interval description.
inline std::string describe_eigenvalue(const AlgebraicNumber& a) {
    if (a.is_rational()) return a.rational_value().to_string();
    return a.to_string("t");
}

}  // namespace detail

// Matrix-direct program document:
//   {"n": 2, "A": ["0","1","1","-2"], "f": ["1","0"]}
// A is row-major, length n*n. Optional fields: "c" (update constant,
// length n), "b" (guard constant, scalar), "vars" (n names). A nonzero b or
// c routes through homogenization, so the result may have dimension n+1.
inline HomogeneousProgram load_matrix_program(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw degenerate_input(std::string("invalid program document: ") + e.what());
    }
    if (!doc.is_object()) throw degenerate_input("program document must be a JSON object");
    if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<long>() < 1)
        throw degenerate_input("field 'n' must be a positive integer");
    const size_t n = doc["n"].get<size_t>();
    if (!doc.contains("A")) throw degenerate_input("missing field 'A'");
    if (!doc.contains("f")) throw degenerate_input("missing field 'f'");
    std::vector<Rational> a_flat = detail::rational_array(doc["A"], n * n, "'A'");
    std::vector<Rational> f = detail::rational_array(doc["f"], n, "'f'");

    std::vector<Rational> c(n, Rational(0));
    if (doc.contains("c")) c = detail::rational_array(doc["c"], n, "'c'");
    Rational b(0);
    if (doc.contains("b")) b = detail::rational_from_json(doc["b"], "'b'");

    std::vector<std::string> vars;
    if (doc.contains("vars")) {
        if (!doc["vars"].is_array() || doc["vars"].size() != n)
            throw degenerate_input("'vars' must list " + std::to_string(n) + " names");
        for (const auto& v : doc["vars"]) {
            if (!v.is_string()) throw degenerate_input("'vars' entries must be strings");
            vars.push_back(v.get<std::string>());
        }
    }

    Matrix<Rational> update(n, n, Rational(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) update.at(i, j) = a_flat[i * n + j];

    bool affine = !b.is_zero();
    for (const Rational& ci : c) affine = affine || !ci.is_zero();
    if (!affine) return make_program(std::move(update), std::move(f), std::move(vars));

    Matrix<Rational> guard_matrix(1, n, Rational(0));
    for (size_t j = 0; j < n; ++j) guard_matrix.at(0, j) = f[j];
    if (vars.empty())
        for (size_t j = 0; j < n; ++j) vars.push_back("x" + std::to_string(j + 1));
    AffineSystem sys{std::move(update), std::move(c),      std::move(guard_matrix),
                     {Comparator::Greater}, {std::move(b)}, std::move(vars)};
    return homogenize(sys);
}

inline nlohmann::json certificate_json(const Certificate& cert, const HomogeneousProgram& p) {
    nlohmann::json doc;
    doc["format_version"] = format_version;
    doc["kind"] = "certificate";
    doc["verdict"] = to_string(cert.verdict);
    doc["dimension"] = p.dimension();
    doc["variables"] = p.variables;

    nlohmann::json rows = nlohmann::json::array();
    for (size_t i = 0; i < p.update.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t j = 0; j < p.update.cols(); ++j) row.push_back(p.update.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    doc["update"] = std::move(rows);
    nlohmann::json guard = nlohmann::json::array();
    for (const Rational& q : p.guard) guard.push_back(q.to_string());
    doc["guard"] = std::move(guard);

    doc["char_poly"] = detail::coeff_strings(cert.char_polynomial);

    nlohmann::json eigs = nlohmann::json::array();
    for (const EigenRecord& rec : cert.positive_eigenvalues)
        eigs.push_back(detail::eigen_json(rec));
    doc["positive_eigenvalues"] = std::move(eigs);

    auto index_of = [&](const AlgebraicNumber& a) -> size_t {
        for (size_t i = 0; i < cert.positive_eigenvalues.size(); ++i)
            if (cert.positive_eigenvalues[i].value == a) return i;
        throw error("internal error: certificate references an unlisted eigenvalue");
    };

    nlohmann::json mems = nlohmann::json::array();
    for (const MembershipResult& m : cert.memberships) {
        nlohmann::json entry;
        entry["eigenvalue"] = index_of(m.eigenvalue.value);
        entry["member"] = m.member;
        entry["pivot_entry"] = detail::coeff_strings(m.pivot_entry.rep());
        mems.push_back(std::move(entry));
    }
    doc["memberships"] = std::move(mems);

    if (cert.failing_eigenvalue)
        doc["failing_eigenvalue"] = index_of(cert.failing_eigenvalue->value);
    else
        doc["failing_eigenvalue"] = nullptr;
    return doc;
}

inline std::string certificate_text(const Certificate& cert, const HomogeneousProgram& p) {
    std::string out;
    out += "verdict: " + to_string(cert.verdict) + "\n";
    out += "guard: " + format_rational_vector(p.guard) + "\n";
    out += "characteristic polynomial: " + cert.char_polynomial.to_string("t") + "\n";
    if (cert.positive_eigenvalues.empty()) {
        out += "no positive eigenvalues\n";
        return out;
    }
    out += "positive eigenvalues:\n";
    for (const EigenRecord& rec : cert.positive_eigenvalues)
        out += "  " + detail::describe_eigenvalue(rec.value) + "  (multiplicity " +
               std::to_string(rec.multiplicity) + ")\n";
    out += "guard membership in Row((A - lambda I)^n):\n";
    for (const MembershipResult& m : cert.memberships)
        out += "  lambda = " + detail::describe_eigenvalue(m.eigenvalue.value) +
               (m.member ? ": member" : ": NOT a member") +
               " (pivot " + m.pivot_entry.rep().to_string("t") + ")\n";
    if (cert.failing_eigenvalue)
        out += "failing eigenvalue: " +
               detail::describe_eigenvalue(cert.failing_eigenvalue->value) + "\n";
    return out;
}

inline nlohmann::json witness_json(const Witness& w, const RunOutcome& evidence,
                                   long evidence_bound) {
    nlohmann::json doc;
    doc["format_version"] = format_version;
    doc["kind"] = "witness";
    doc["eigenvalue"] = {
        {"minpoly", detail::coeff_strings(w.eigenvalue.minpoly())},
        {"interval",
         {w.eigenvalue.interval().low.to_string(), w.eigenvalue.interval().high.to_string()}}};
    doc["rank"] = w.rank;
    auto coords = [](const std::vector<NumberFieldElement>& v) {
        nlohmann::json arr = nlohmann::json::array();
        for (const NumberFieldElement& c : v) arr.push_back(detail::coeff_strings(c.rep()));
        return arr;
    };
    doc["vector"] = coords(w.vector);
    doc["scale"] = w.scale.get_str();
    doc["scaled_vector"] = coords(w.scaled_vector);
    doc["simulation"] = {{"bound", evidence_bound},
                         {"terminated", evidence.terminated()},
                         {"step", evidence.step}};
    return doc;
}

inline std::string witness_text(const Witness& w, const RunOutcome& evidence,
                                long evidence_bound) {
    std::string out;
    out += "eigenvalue: " + detail::describe_eigenvalue(w.eigenvalue) + "\n";
    out += "kernel depth r: " + std::to_string(w.rank) + "\n";
    out += "witness (coordinates in Q(lambda)):\n";
    for (size_t i = 0; i < w.vector.size(); ++i)
        out += "  [" + std::to_string(i) + "] " + w.vector[i].rep().to_string("lambda") + "\n";
    out += "scale: " + w.scale.get_str() + "\n";
    out += "scaled witness (integer coordinates in Z[lambda]):\n";
    for (size_t i = 0; i < w.scaled_vector.size(); ++i)
        out += "  [" + std::to_string(i) + "] " + w.scaled_vector[i].rep().to_string("lambda") +
               "\n";
    if (evidence.terminated())
        out += "simulation: guard failed at step " + std::to_string(evidence.step) +
               " (unexpected)\n";
    else
        out += "simulation: guard positive for " + std::to_string(evidence_bound) +
               " exact steps\n";
    return out;
}

}  // namespace linterm

#endif
