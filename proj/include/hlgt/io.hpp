#pragma once

// Text rendering and the canonical JSON encoding of polynomials:
//   {"n_vars": n, "terms": [{"c": "<decimal>", "x": [e1,...,en], "q": eq, "t": et}, ...]}
// Terms appear in canonical order; coefficients are decimal strings.

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hlgt/polynomial.hpp"

namespace hlgt {

namespace detail {

inline void append_factor(std::string& out, const std::string& name, Exponent e) {
    if (e == 0)
        return;
    if (!out.empty())
        out += '*';
    out += name;
    if (e > 1)
        out += '^' + std::to_string(e);
}

inline std::string monomial_text(const Monomial& m) {
    std::string out;
    append_factor(out, "q", m.q());
    append_factor(out, "t", m.t());
    for (std::size_t i = 0; i < m.num_vars(); ++i)
        append_factor(out, "x" + std::to_string(i + 1), m.x(i));
    return out;
}

}  // namespace detail

/// Human-readable form, e.g. "x1 - q*x2" or "x1*x2 + t*x1*x2".
inline std::string to_string(const Polynomial& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p) {
        const bool negative = c < 0;
        const Integer mag = negative ? Integer(-c) : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        const std::string mono = detail::monomial_text(m);
        if (mono.empty())
            out += mag.str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.str() + "*" + mono;
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

inline nlohmann::json to_json(const Polynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p) {
        terms.push_back({{"c", c.str()},
                         {"x", std::vector<Exponent>(m.x().begin(), m.x().end())},
                         {"q", m.q()},
                         {"t", m.t()}});
    }
    return {{"n_vars", p.n_vars()}, {"terms", std::move(terms)}};
}

/// Parses the canonical encoding. Term order in the input is not trusted;
/// duplicate monomials accumulate and zero coefficients vanish.
inline Polynomial polynomial_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n_vars") || !j.contains("terms"))
        throw std::invalid_argument("polynomial JSON: expected object with n_vars and terms");
    if (!j["n_vars"].is_number_unsigned() || !j["terms"].is_array())
        throw std::invalid_argument("polynomial JSON: bad n_vars or terms");
    const auto n = j["n_vars"].get<std::size_t>();
    Polynomial p(n);
    for (const auto& term : j["terms"]) {
        if (!term.is_object() || !term.contains("c") || !term.contains("x") || !term["c"].is_string() ||
            !term["x"].is_array())
            throw std::invalid_argument("polynomial JSON: malformed term");
        auto exponent = [](const nlohmann::json& e) {
            if (!e.is_number_unsigned())
                throw std::invalid_argument("polynomial JSON: exponents must be nonnegative integers");
            return e.get<Exponent>();
        };
        std::vector<Exponent> x;
        for (const auto& e : term["x"])
            x.push_back(exponent(e));
        const Exponent qe = term.contains("q") ? exponent(term["q"]) : 0;
        const Exponent te = term.contains("t") ? exponent(term["t"]) : 0;
        if (x.size() != n)
            throw std::invalid_argument("polynomial JSON: exponent vector length mismatch");
        Integer c;
        try {
            c = Integer(term["c"].get<std::string>());
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("polynomial JSON: bad coefficient");
        }
        p.add_term(Monomial(x, qe, te), c);
    }
    return p;
}

}  // namespace hlgt
