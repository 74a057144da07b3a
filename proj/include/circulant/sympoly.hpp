#pragma once

/// Sparse multivariate polynomials with exact rational coefficients over the
/// two indexed variable families x_1, x_2, ... and y_1, y_2, ...
///
/// Used to state both sides of the cycle-index lemmas formally and to build
/// the bivariate prime-squared index before substituting valency polynomials.

#include "circulant/bigint.hpp"
#include "circulant/cycle_index.hpp"
#include "circulant/error.hpp"
#include "circulant/unipoly.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace circulant {

enum class Family : std::uint8_t { x = 0, y = 1 };

struct Var {
    Family family = Family::x;
    std::uint64_t index = 1;

    friend auto operator<=>(const Var&, const Var&) = default;

    std::string name() const { return (family == Family::x ? "x" : "y") + std::to_string(index); }
};

/// Product of variables with positive exponents, sorted by variable.
using Monomial = std::vector<std::pair<Var, std::uint64_t>>;

class SymPoly {
public:
    using Terms = std::map<Monomial, BigRational>;

    SymPoly() = default;

    static SymPoly constant(const BigRational& c) {
        SymPoly p;
        if (c != 0) p.terms_[{}] = c;
        return p;
    }

    static SymPoly variable(Var v, std::uint64_t exponent = 1) {
        SymPoly p;
        if (exponent == 0) p.terms_[{}] = 1;
        else p.terms_[{{v, exponent}}] = 1;
        return p;
    }

    static SymPoly x(std::uint64_t index, std::uint64_t exponent = 1) { return variable({Family::x, index}, exponent); }
    static SymPoly y(std::uint64_t index, std::uint64_t exponent = 1) { return variable({Family::y, index}, exponent); }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    SymPoly& operator+=(const SymPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    SymPoly& operator-=(const SymPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    SymPoly& operator*=(const BigRational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }

    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator*(SymPoly a, const BigRational& c) { return a *= c; }
    friend SymPoly operator*(const BigRational& c, SymPoly a) { return a *= c; }

    friend SymPoly operator*(const SymPoly& a, const SymPoly& b) {
        SymPoly out;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) out.add_term(multiply(ma, mb), ca * cb);
        }
        return out;
    }

    SymPoly& operator*=(const SymPoly& o) { return *this = *this * o; }

    SymPoly pow(std::uint64_t e) const {
        SymPoly result = constant(1);
        SymPoly base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e > 0) base *= base;
        }
        return result;
    }

    friend bool operator==(const SymPoly&, const SymPoly&) = default;

    std::string to_string() const {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const SymPoly& p) {
        if (p.is_zero()) return os << "0";
        bool first = true;
        for (const auto& [m, c] : p.terms_) {
            if (!first) os << " + ";
            first = false;
            bool unit = (c == 1) && !m.empty();
            if (!unit) os << "(" << c << ")";
            for (const auto& [v, e] : m) {
                os << v.name();
                if (e != 1) os << "^" << e;
            }
        }
        return os;
    }

private:
    static Monomial multiply(const Monomial& a, const Monomial& b) {
        Monomial out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                out.push_back(b[j++]);
            } else {
                out.emplace_back(a[i].first, a[i].second + b[j].second);
                ++i;
                ++j;
            }
        }
        return out;
    }

    void add_term(const Monomial& m, const BigRational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (inserted) return;
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    Terms terms_;
};

/// (1/n) * sum over terms of phi(r) * f(r, n/r), for arbitrary per-term images.
inline SymPoly cycle_sum(const CycleIndex& ci, const std::function<SymPoly(std::uint64_t r, std::uint64_t e)>& f) {
    SymPoly acc;
    for (const auto& t : ci.terms) acc += f(t.var_index, t.exponent) * BigRational(t.weight);
    return acc * BigRational(1, ci.order);
}

/// How one variable x_r of a cycle index is rewritten by `to_sym`.
struct TermRewrite {
    std::optional<std::uint64_t> index; ///< empty: the variable is set to 0
    std::uint64_t exp_mul = 1;          ///< exponent e becomes e * exp_mul / exp_div
    std::uint64_t exp_div = 1;
};

using TermRewriter = std::function<TermRewrite(std::uint64_t r)>;

inline TermRewriter identity_rewrite() {
    return [](std::uint64_t r) { return TermRewrite{r, 1, 1}; };
}

/// The cycle index as a formal polynomial in one family, with variables
/// renamed (or zeroed) and exponents rescaled per `rewrite`. A rescaled
/// exponent that is not an integer raises ParityError.
inline SymPoly to_sym(const CycleIndex& ci, Family family, const TermRewriter& rewrite = identity_rewrite()) {
    return cycle_sum(ci, [&](std::uint64_t r, std::uint64_t e) {
        TermRewrite tr = rewrite(r);
        if (tr.exp_div == 0) throw DomainError("to_sym: zero exponent divisor");
        std::uint64_t scaled = e * tr.exp_mul;
        if (scaled % tr.exp_div != 0) {
            throw ParityError("to_sym: exponent " + std::to_string(e) + " of x_" + std::to_string(r) +
                              " does not scale to an integer");
        }
        scaled /= tr.exp_div;
        if (!tr.index) return scaled == 0 ? SymPoly::constant(1) : SymPoly();
        return SymPoly::variable({family, *tr.index}, scaled);
    });
}

/// Substitutes univariate polynomials for both families and returns an
/// integer polynomial. Rational coefficients are cleared over their common
/// denominator, which must then divide the result exactly.
inline UniPoly evaluate(const SymPoly& p, const SubstitutionRule& x_rule, const SubstitutionRule& y_rule) {
    BigInt denom = 1;
    for (const auto& [m, c] : p.terms()) denom = boost::multiprecision::lcm(denom, BigInt(denominator(c)));
    UniPoly acc;
    for (const auto& [m, c] : p.terms()) {
        UniPoly term = UniPoly::constant(BigInt(numerator(c)) * (denom / BigInt(denominator(c))));
        for (const auto& [v, e] : m) {
            const auto& rule = v.family == Family::x ? x_rule : y_rule;
            term *= rule.power_of(v.index, e);
        }
        acc += term;
    }
    return acc.divide_exact(denom);
}

inline UniPoly evaluate(const SymPoly& p, const SubstitutionRule& x_rule) {
    return evaluate(p, x_rule, SubstitutionRule{});
}

} // namespace circulant
