#pragma once

// Exact sparse polynomials over the integers in x_1..x_n and the two
// deformation parameters q and t.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hlgt {

using Integer = boost::multiprecision::cpp_int;
using Exponent = std::uint32_t;

enum class Param { q, t };

/// Exponent vector of a monomial x^a q^b t^c. The x part has one slot per
/// ring variable; slot i is the exponent of x_{i+1}.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(std::vector<Exponent> x, Exponent q = 0, Exponent t = 0)
        : x_(std::move(x)), q_(q), t_(t) {}

    static Monomial one(std::size_t n_vars) { return Monomial(std::vector<Exponent>(n_vars, 0)); }

    std::size_t num_vars() const noexcept { return x_.size(); }
    std::span<const Exponent> x() const noexcept { return x_; }
    Exponent x(std::size_t i) const { return x_.at(i); }
    Exponent q() const noexcept { return q_; }
    Exponent t() const noexcept { return t_; }

    Exponent x_degree() const noexcept { return std::accumulate(x_.begin(), x_.end(), Exponent{0}); }
    Exponent param_degree() const noexcept { return q_ + t_; }
    bool is_constant() const noexcept { return q_ == 0 && t_ == 0 && x_degree() == 0; }

    Monomial with_x(std::vector<Exponent> x) const { return Monomial(std::move(x), q_, t_); }
    Monomial with_params(Exponent q, Exponent t) const { return Monomial(x_, q, t); }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        if (a.num_vars() != b.num_vars())
            throw std::invalid_argument("monomial variable count mismatch");
        std::vector<Exponent> x(a.x_);
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] += b.x_[i];
        return Monomial(std::move(x), a.q_ + b.q_, a.t_ + b.t_);
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Exponent> x_;
    Exponent q_ = 0;
    Exponent t_ = 0;
};

/// Canonical term order: "a comes before b".
///
/// The x part decides first (graded, then lexicographic, both descending), so
/// terms sharing an x-monomial are adjacent and a polynomial reads as a sum of
/// x-monomials with coefficients in Z[q,t]. Within one x-monomial the (q,t)
/// part is ordered by ascending total degree, q before t at equal degree:
/// 1, q, t, q^2, q*t, t^2, ...
struct TermOrder {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept {
        if (auto c = compare(a, b); c != 0)
            return c < 0;
        return false;
    }

    static std::strong_ordering compare(const Monomial& a, const Monomial& b) noexcept {
        if (auto c = b.x_degree() <=> a.x_degree(); c != 0)
            return c;
        auto ax = a.x();
        auto bx = b.x();
        for (std::size_t i = 0; i < std::min(ax.size(), bx.size()); ++i)
            if (auto c = bx[i] <=> ax[i]; c != 0)
                return c;
        if (auto c = ax.size() <=> bx.size(); c != 0)
            return c;
        if (auto c = a.param_degree() <=> b.param_degree(); c != 0)
            return c;
        return b.q() <=> a.q();
    }
};

/// Immutable-by-convention polynomial value. Zero coefficients are never
/// stored; iteration follows TermOrder.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Integer, TermOrder>;
    using const_iterator = TermMap::const_iterator;

    Polynomial() = default;
    explicit Polynomial(std::size_t n_vars) : n_vars_(n_vars) {}

    static Polynomial constant(std::size_t n_vars, const Integer& c) {
        Polynomial p(n_vars);
        p.add_term(Monomial::one(n_vars), c);
        return p;
    }

    static Polynomial one(std::size_t n_vars) { return constant(n_vars, 1); }

    static Polynomial term(const Monomial& m, const Integer& c = 1) {
        Polynomial p(m.num_vars());
        p.add_term(m, c);
        return p;
    }

    /// x_{i+1}
    static Polynomial variable(std::size_t n_vars, std::size_t i) {
        if (i >= n_vars)
            throw std::out_of_range("variable index out of range");
        std::vector<Exponent> x(n_vars, 0);
        x[i] = 1;
        return term(Monomial(std::move(x)));
    }

    static Polynomial param(std::size_t n_vars, Param which) {
        std::vector<Exponent> x(n_vars, 0);
        return which == Param::q ? term(Monomial(std::move(x), 1, 0)) : term(Monomial(std::move(x), 0, 1));
    }

    static Polynomial q(std::size_t n_vars = 0) { return param(n_vars, Param::q); }
    static Polynomial t(std::size_t n_vars = 0) { return param(n_vars, Param::t); }

    static Polynomial x_power(std::span<const Exponent> x, const Integer& c = 1) {
        return term(Monomial(std::vector<Exponent>(x.begin(), x.end())), c);
    }

    std::size_t n_vars() const noexcept { return n_vars_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const_iterator begin() const noexcept { return terms_.begin(); }
    const_iterator end() const noexcept { return terms_.end(); }
    const TermMap& terms() const noexcept { return terms_; }

    Integer coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    /// Constant term as an integer; throws unless the polynomial is constant.
    Integer to_integer() const {
        if (terms_.empty())
            return 0;
        if (terms_.size() != 1 || !terms_.begin()->first.is_constant())
            throw std::domain_error("polynomial is not a constant");
        return terms_.begin()->second;
    }

    /// Accumulates c*m in place. Only for building fresh values.
    void add_term(const Monomial& m, const Integer& c) {
        if (m.num_vars() != n_vars_)
            throw std::invalid_argument("variable count mismatch");
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.n_vars_ == b.n_vars_ && a.terms_ == b.terms_;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        check_same_ring(a, b);
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_)
            r.add_term(m, c);
        return r;
    }

    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r = a;
        for (auto& [m, c] : r.terms_)
            c = -c;
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        check_same_ring(a, b);
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_)
            r.add_term(m, -c);
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_same_ring(a, b);
        Polynomial r(a.n_vars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(ma * mb, ca * cb);
        return r;
    }

    friend Polynomial operator*(const Integer& s, const Polynomial& a) {
        Polynomial r(a.n_vars_);
        if (s == 0)
            return r;
        for (const auto& [m, c] : a.terms_)
            r.terms_.emplace_hint(r.terms_.end(), m, c * s);
        return r;
    }

    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

private:
    static void check_same_ring(const Polynomial& a, const Polynomial& b) {
        if (a.n_vars_ != b.n_vars_)
            throw std::invalid_argument("variable count mismatch: " + std::to_string(a.n_vars_) + " vs " +
                                        std::to_string(b.n_vars_));
    }

    std::size_t n_vars_ = 0;
    TermMap terms_;
};

inline Polynomial pow(const Polynomial& base, unsigned e) {
    Polynomial r = Polynomial::one(base.n_vars());
    Polynomial b = base;
    while (e > 0) {
        if (e & 1u)
            r = r * b;
        e >>= 1;
        if (e > 0)
            b = b * b;
    }
    return r;
}

/// Rebuilds p with every monomial passed through f (which must preserve the
/// target ring size given by n_vars).
template <class MonomialMap>
Polynomial map_monomials(const Polynomial& p, std::size_t n_vars, MonomialMap&& f) {
    Polynomial r(n_vars);
    for (const auto& [m, c] : p)
        r.add_term(f(m), c);
    return r;
}

/// Lifts p into a ring with more variables; the new slots are appended with
/// exponent zero.
inline Polynomial embed(const Polynomial& p, std::size_t new_n) {
    if (new_n < p.n_vars())
        throw std::invalid_argument("embed: target ring is smaller");
    return map_monomials(p, new_n, [&](const Monomial& m) {
        std::vector<Exponent> x(m.x().begin(), m.x().end());
        x.resize(new_n, 0);
        return m.with_x(std::move(x));
    });
}

/// sigma[i] is the image of slot i: x_{i+1} becomes x_{sigma[i]+1}.
inline Polynomial permute_variables(const Polynomial& p, std::span<const std::size_t> sigma) {
    const std::size_t n = p.n_vars();
    if (sigma.size() != n)
        throw std::invalid_argument("permutation size does not match variable count");
    std::vector<bool> seen(n, false);
    for (auto s : sigma) {
        if (s >= n || seen[s])
            throw std::invalid_argument("permutation is not a bijection");
        seen[s] = true;
    }
    return map_monomials(p, n, [&](const Monomial& m) {
        std::vector<Exponent> x(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            x[sigma[i]] = m.x(i);
        return m.with_x(std::move(x));
    });
}

/// The shift operator that moves every x_k with k >= i+1 up to x_{k+1}
/// (0-based: slot j >= i goes to j+1). The result lives in new_n variables and
/// slot i is unused.
inline Polynomial shift_variables(const Polynomial& p, std::size_t i, std::size_t new_n) {
    if (new_n < p.n_vars() + 1)
        throw std::invalid_argument("shift_variables: target ring too small");
    if (i > p.n_vars())
        throw std::out_of_range("shift_variables: index out of range");
    return map_monomials(p, new_n, [&](const Monomial& m) {
        std::vector<Exponent> x(new_n, 0);
        for (std::size_t j = 0; j < m.num_vars(); ++j)
            x[j < i ? j : j + 1] = m.x(j);
        return m.with_x(std::move(x));
    });
}

/// Quotient of p by (x_{i+1} - x_{j+1}), by synthetic division in x_{i+1} at
/// x_{i+1} = x_{j+1}. A nonzero remainder means the caller's divisibility
/// invariant is broken and is reported as std::logic_error.
inline Polynomial divide_exact_binomial(const Polynomial& p, std::size_t i, std::size_t j) {
    const std::size_t n = p.n_vars();
    if (i >= n || j >= n || i == j)
        throw std::out_of_range("divide_exact_binomial: bad variable pair");
    // x_i^a = (x_i^a - x_j^a) + x_j^a, and the first part contributes
    // sum_{k<a} x_i^{a-1-k} x_j^k to the quotient.
    Polynomial quotient(n);
    Polynomial remainder(n);
    for (const auto& [m, c] : p) {
        const Exponent a = m.x(i);
        std::vector<Exponent> x(m.x().begin(), m.x().end());
        const Exponent b = x[j];
        for (Exponent k = 0; k < a; ++k) {
            x[i] = a - 1 - k;
            x[j] = b + k;
            quotient.add_term(m.with_x(x), c);
        }
        x[i] = 0;
        x[j] = a + b;
        remainder.add_term(m.with_x(std::move(x)), c);
    }
    if (!remainder.is_zero())
        throw std::logic_error("divide_exact_binomial: nonzero remainder");
    return quotient;
}

/// Replaces q or t by an integer constant.
inline Polynomial substitute(const Polynomial& p, Param which, const Integer& value) {
    Polynomial r(p.n_vars());
    for (const auto& [m, c] : p) {
        const Exponent e = which == Param::q ? m.q() : m.t();
        Integer factor = boost::multiprecision::pow(value, e);
        Monomial stripped = which == Param::q ? m.with_params(0, m.t()) : m.with_params(m.q(), 0);
        r.add_term(stripped, c * factor);
    }
    return r;
}

/// The Z[q,t] coefficient of x^{x_exps} in p, as a 0-variable polynomial.
inline Polynomial coefficient_of(const Polynomial& p, std::span<const Exponent> x_exps) {
    if (x_exps.size() != p.n_vars())
        throw std::invalid_argument("coefficient_of: exponent vector length mismatch");
    Polynomial r(0);
    for (const auto& [m, c] : p)
        if (std::equal(x_exps.begin(), x_exps.end(), m.x().begin()))
            r.add_term(Monomial({}, m.q(), m.t()), c);
    return r;
}

inline Integer evaluate(const Polynomial& p, std::span<const Integer> x, const Integer& q, const Integer& t) {
    if (x.size() != p.n_vars())
        throw std::invalid_argument("evaluate: point has wrong dimension");
    Integer sum = 0;
    for (const auto& [m, c] : p) {
        Integer v = c * boost::multiprecision::pow(q, m.q()) * boost::multiprecision::pow(t, m.t());
        for (std::size_t i = 0; i < x.size() && v != 0; ++i)
            v *= boost::multiprecision::pow(x[i], m.x(i));
        sum += v;
    }
    return sum;
}

}  // namespace hlgt
