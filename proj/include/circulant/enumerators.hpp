#pragma once

/// Closed-form counts of circulant graphs of odd prime order p, twice-prime
/// order 2p and prime-squared order p^2, obtained by substituting valency
/// polynomials into cycle indices of cyclic groups; plus the derived
/// quantities built from them (alternating sums, even/odd splits, mixed and
/// non-CI self-complementary counts, log-concavity of undirected series).

#include "circulant/bigint.hpp"
#include "circulant/cycle_index.hpp"
#include "circulant/error.hpp"
#include "circulant/number_theory.hpp"
#include "circulant/sympoly.hpp"
#include "circulant/unipoly.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace circulant {

enum class CirculantClass { d, u, o, sd, su, t };

inline constexpr std::array<CirculantClass, 6> kAllClasses{
    CirculantClass::d, CirculantClass::u, CirculantClass::o,
    CirculantClass::sd, CirculantClass::su, CirculantClass::t};

inline std::string_view class_tag(CirculantClass c) {
    switch (c) {
    case CirculantClass::d: return "d";
    case CirculantClass::u: return "u";
    case CirculantClass::o: return "o";
    case CirculantClass::sd: return "sd";
    case CirculantClass::su: return "su";
    case CirculantClass::t: return "t";
    }
    return "?";
}

inline std::optional<CirculantClass> parse_class(std::string_view s) {
    for (auto c : kAllClasses) {
        if (class_tag(c) == s) return c;
    }
    return std::nullopt;
}

/// d, u and o are graded by valency; the self-complementary classes and
/// tournaments are single totals.
inline bool has_valency_series(CirculantClass c) {
    return c == CirculantClass::d || c == CirculantClass::u || c == CirculantClass::o;
}

enum class Provenance { formula, formal, oracle };

inline std::string_view provenance_tag(Provenance p) {
    switch (p) {
    case Provenance::formula: return "formula";
    case Provenance::formal: return "formal";
    case Provenance::oracle: return "oracle";
    }
    return "?";
}

struct CountResult {
    std::uint64_t order = 1;
    CirculantClass cls = CirculantClass::d;
    BigInt total = 0;
    std::optional<UniPoly> by_valency; ///< present exactly for d, u, o
    Provenance provenance = Provenance::formula;

    /// Number of circulants of valency r (only meaningful with a series).
    BigInt at_valency(std::size_t r) const { return by_valency ? by_valency->coeff(r) : BigInt(0); }

    friend bool operator==(const CountResult&, const CountResult&) = default;
};

/// Wraps a substitution result. For series classes the total is the value at
/// z = 1; otherwise the result must be a constant.
inline CountResult make_count(std::uint64_t order, CirculantClass cls, const UniPoly& poly,
                              Provenance prov = Provenance::formula) {
    CountResult r{order, cls, 0, std::nullopt, prov};
    if (has_valency_series(cls)) {
        r.total = poly.sum();
        r.by_valency = poly;
    } else {
        if (poly.degree() > 0) throw ConsistencyError("total-only class produced a non-constant polynomial");
        r.total = poly.coeff(0);
    }
    return r;
}

namespace detail {

// Rules shared by the prime and prime-squared formulas. `scale` stretches the
// valency variable: 1 for the x family, p for the y family.

inline SubstitutionRule directed_rule(std::uint64_t scale) {
    return SubstitutionRule{}.values(Selector::all(), [scale](std::uint64_t r) {
        return UniPoly::one_plus(1, r * scale);
    });
}

inline SubstitutionRule undirected_rule(std::uint64_t scale) {
    return SubstitutionRule{}.values(Selector::all(), [scale](std::uint64_t r) {
        return UniPoly::one_plus(1, 2 * r * scale);
    });
}

inline SubstitutionRule oriented_rule(std::uint64_t scale) {
    return SubstitutionRule{}
        .constant(Selector::even(), 1)
        .square_values(Selector::odd(), [scale](std::uint64_t r) { return UniPoly::one_plus(2, r * scale); });
}

inline SubstitutionRule self_complementary_rule() {
    return SubstitutionRule{}.constant(Selector::even(), 2).constant(Selector::odd(), 0);
}

inline SubstitutionRule tournament_rule() {
    return SubstitutionRule{}.constant(Selector::even(), 0).square_constant(Selector::odd(), 2);
}

inline void require_odd_prime(std::uint64_t p, const char* who) {
    if (!nt::is_odd_prime(p)) {
        throw DomainError(std::string(who) + ": " + std::to_string(p) + " is not an odd prime");
    }
}

} // namespace detail

/// Counts at odd prime order p.
inline CountResult prime_enumerator(std::uint64_t p, CirculantClass cls) {
    detail::require_odd_prime(p, "prime_enumerator");
    const auto full = cycle_index(p - 1);
    const auto half = cycle_index((p - 1) / 2);
    UniPoly poly;
    switch (cls) {
    case CirculantClass::d: poly = substitute(full, detail::directed_rule(1)); break;
    case CirculantClass::u: poly = substitute(half, detail::undirected_rule(1)); break;
    case CirculantClass::o: poly = substitute(full, detail::oriented_rule(1)); break;
    case CirculantClass::sd: poly = substitute(full, detail::self_complementary_rule()); break;
    case CirculantClass::su: poly = substitute(half, detail::self_complementary_rule()); break;
    case CirculantClass::t: poly = substitute(full, detail::tournament_rule()); break;
    }
    return make_count(p, cls, poly);
}

/// Counts at order 2p for an odd prime p; only d, u and o have formulas.
inline CountResult twice_prime_enumerator(std::uint64_t p, CirculantClass cls) {
    detail::require_odd_prime(p, "twice_prime_enumerator");
    const UniPoly one_plus_z = UniPoly::one_plus(1, 1);
    UniPoly poly;
    switch (cls) {
    case CirculantClass::d: {
        auto rule = SubstitutionRule{}.values(Selector::all(), [](std::uint64_t r) {
            return UniPoly::one_plus(1, r).pow(2);
        });
        poly = substitute(cycle_index(p - 1), rule) * one_plus_z;
        break;
    }
    case CirculantClass::u: {
        auto rule = SubstitutionRule{}.values(Selector::all(), [](std::uint64_t r) {
            return UniPoly::one_plus(1, 2 * r).pow(2);
        });
        poly = substitute(cycle_index((p - 1) / 2), rule) * one_plus_z;
        break;
    }
    case CirculantClass::o: {
        auto rule = SubstitutionRule{}
                        .constant(Selector::even(), 1)
                        .values(Selector::odd(), [](std::uint64_t r) { return UniPoly::one_plus(2, r); });
        poly = substitute(cycle_index(p - 1), rule);
        break;
    }
    default:
        throw UnsupportedError("no twice-prime formula for class " + std::string(class_tag(cls)));
    }
    return make_count(2 * p, cls, poly);
}

/// The bivariate index used at order p^2:
///   (1/p) I(x^(p+1)) - (1/p) I(xy) + I(x) I(y)
/// with I = I_{p-1}, or I_{(p-1)/2} for the starred (undirected) variant.
inline SymPoly prime_squared_index(std::uint64_t p, bool starred) {
    detail::require_odd_prime(p, "prime_squared_index");
    const auto ci = cycle_index(starred ? (p - 1) / 2 : p - 1);
    SymPoly raised = to_sym(ci, Family::x, [p](std::uint64_t r) { return TermRewrite{r, p + 1, 1}; });
    SymPoly paired = cycle_sum(ci, [](std::uint64_t r, std::uint64_t e) {
        return SymPoly::x(r, e) * SymPoly::y(r, e);
    });
    SymPoly product = to_sym(ci, Family::x) * to_sym(ci, Family::y);
    const BigRational inv_p(1, p);
    return raised * inv_p - paired * inv_p + product;
}

/// Counts at order p^2 for an odd prime p.
inline CountResult prime_squared_enumerator(std::uint64_t p, CirculantClass cls) {
    if (p == 2) throw DomainError("prime_squared_enumerator: p must be odd");
    detail::require_odd_prime(p, "prime_squared_enumerator");
    const bool starred = cls == CirculantClass::u || cls == CirculantClass::su;
    const SymPoly index = prime_squared_index(p, starred);
    UniPoly poly;
    switch (cls) {
    case CirculantClass::d: poly = evaluate(index, detail::directed_rule(1), detail::directed_rule(p)); break;
    case CirculantClass::u: poly = evaluate(index, detail::undirected_rule(1), detail::undirected_rule(p)); break;
    case CirculantClass::o: poly = evaluate(index, detail::oriented_rule(1), detail::oriented_rule(p)); break;
    case CirculantClass::sd:
    case CirculantClass::su:
        poly = evaluate(index, detail::self_complementary_rule(), detail::self_complementary_rule());
        break;
    case CirculantClass::t: poly = evaluate(index, detail::tournament_rule(), detail::tournament_rule()); break;
    }
    return make_count(p * p, cls, poly);
}

/// The prime-order undirected formula applied to any odd n >= 3. For
/// composite n the value counts nothing and is tagged `formal`.
inline CountResult formal_undirected(std::uint64_t n) {
    if (n < 3 || n % 2 == 0) throw DomainError("formal_undirected: n must be odd and at least 3");
    UniPoly poly = substitute(cycle_index((n - 1) / 2), detail::undirected_rule(1));
    return make_count(n, CirculantClass::u, poly, nt::is_prime(n) ? Provenance::formula : Provenance::formal);
}

enum class OrderKind { odd_prime, twice_odd_prime, odd_prime_squared, unsupported };

struct OrderShape {
    OrderKind kind = OrderKind::unsupported;
    std::uint64_t p = 0; ///< the underlying odd prime
};

inline OrderShape order_shape(std::uint64_t n) {
    if (nt::is_odd_prime(n)) return {OrderKind::odd_prime, n};
    if (auto p = nt::twice_odd_prime_half(n)) return {OrderKind::twice_odd_prime, p};
    if (auto p = nt::odd_prime_square_root(n)) return {OrderKind::odd_prime_squared, p};
    return {};
}

inline bool formula_supports(std::uint64_t n, CirculantClass cls) {
    switch (order_shape(n).kind) {
    case OrderKind::odd_prime:
    case OrderKind::odd_prime_squared: return true;
    case OrderKind::twice_odd_prime: return has_valency_series(cls);
    case OrderKind::unsupported: return false;
    }
    return false;
}

/// Dispatches to the formula covering order n; UnsupportedError otherwise.
inline CountResult formula_count(std::uint64_t n, CirculantClass cls) {
    const auto shape = order_shape(n);
    switch (shape.kind) {
    case OrderKind::odd_prime: return prime_enumerator(shape.p, cls);
    case OrderKind::twice_odd_prime:
        if (has_valency_series(cls)) return twice_prime_enumerator(shape.p, cls);
        break;
    case OrderKind::odd_prime_squared: return prime_squared_enumerator(shape.p, cls);
    case OrderKind::unsupported: break;
    }
    throw UnsupportedError("no formula for class " + std::string(class_tag(cls)) + " at order " +
                           std::to_string(n));
}

/// c(n, -1) for d and o; c(n, t) at t^2 = -1 for u (odd n only).
inline BigInt alternating_sum(std::uint64_t n, CirculantClass cls) {
    if (!has_valency_series(cls)) throw DomainError("alternating_sum: class must be d, u or o");
    if (cls == CirculantClass::u && n % 2 == 0) {
        throw UnsupportedError("alternating_sum: the undirected evaluation is defined for odd orders only");
    }
    const CountResult c = formula_count(n, cls);
    if (cls == CirculantClass::u) return eval_poly(*c.by_valency, GaussianUnit{});
    return eval_poly(*c.by_valency, BigInt(-1));
}

struct EvenOddSplit {
    BigInt even;
    BigInt odd;

    friend bool operator==(const EvenOddSplit&, const EvenOddSplit&) = default;
};

/// Splits by valency parity (d), or by semi-valency parity (u, odd n:
/// valency 0 or 2 mod 4), summing coefficients directly.
inline EvenOddSplit even_odd_split(const UniPoly& series, CirculantClass cls) {
    EvenOddSplit s;
    auto coeffs = series.coefficients();
    for (std::size_t r = 0; r < coeffs.size(); ++r) {
        if (cls == CirculantClass::d) {
            (r % 2 == 0 ? s.even : s.odd) += coeffs[r];
        } else {
            if (r % 2 == 1) {
                if (coeffs[r] != 0) throw ConsistencyError("undirected odd-order series has an odd power");
                continue;
            }
            (r % 4 == 0 ? s.even : s.odd) += coeffs[r];
        }
    }
    return s;
}

inline EvenOddSplit even_odd_split(std::uint64_t n, CirculantClass cls) {
    if (cls != CirculantClass::d && cls != CirculantClass::u) {
        throw DomainError("even_odd_split: class must be d or u");
    }
    if (cls == CirculantClass::u && n % 2 == 0) {
        throw UnsupportedError("even_odd_split: undirected splits are defined for odd orders only");
    }
    return even_odd_split(*formula_count(n, cls).by_valency, cls);
}

/// Mixed self-complementary circulants of order p^2 (neither undirected nor
/// tournaments), by subtraction. Two other expressions are checked against it.
inline BigInt mixed_sd(std::uint64_t p) {
    detail::require_odd_prime(p, "mixed_sd");
    const BigInt sd2 = prime_squared_enumerator(p, CirculantClass::sd).total;
    const BigInt su2 = prime_squared_enumerator(p, CirculantClass::su).total;
    const BigInt t2 = prime_squared_enumerator(p, CirculantClass::t).total;
    const BigInt sd = prime_enumerator(p, CirculantClass::sd).total;
    const BigInt su = prime_enumerator(p, CirculantClass::su).total;
    const BigInt t = prime_enumerator(p, CirculantClass::t).total;
    const BigInt mixed = sd2 - su2 - t2;
    if (mixed != 2 * su * t) {
        throw ConsistencyError("mixed_sd(" + std::to_string(p) + "): subtraction form " + mixed.str() +
                               " != 2*C_su(p)*C_t(p) = " + BigInt(2 * su * t).str());
    }
    if (mixed != sd * sd - su * su - t * t) {
        throw ConsistencyError("mixed_sd(" + std::to_string(p) + "): subtraction form disagrees with squares");
    }
    return mixed;
}

struct NonCiCounts {
    BigInt sd;
    BigInt su;
    BigInt t;

    friend bool operator==(const NonCiCounts&, const NonCiCounts&) = default;
};

/// Non-CI self-complementary circulants of order p^2: squares of the order-p counts.
inline NonCiCounts non_ci_counts(std::uint64_t p) {
    detail::require_odd_prime(p, "non_ci_counts");
    const BigInt sd = prime_enumerator(p, CirculantClass::sd).total;
    const BigInt su = prime_enumerator(p, CirculantClass::su).total;
    const BigInt t = prime_enumerator(p, CirculantClass::t).total;
    return {sd * sd, su * su, t * t};
}

/// Indices r with a_r^2 < a_{r-1} a_{r+1}, where a_r = C_u(n, 2r), for
/// 2 <= r <= R - 2 and R = floor((n - 1) / 2). The outermost interior
/// positions at both ends are skipped: the series is palindromic and
/// starts 1, 1, so they fail for every order.
inline std::vector<std::uint64_t> log_concavity_violations(const UniPoly& undirected, std::uint64_t n) {
    std::vector<std::uint64_t> out;
    const std::uint64_t top = (n - 1) / 2;
    for (std::uint64_t r = 2; r + 2 <= top; ++r) {
        const BigInt mid = undirected.coeff(2 * r);
        if (mid * mid < undirected.coeff(2 * r - 2) * undirected.coeff(2 * r + 2)) out.push_back(r);
    }
    return out;
}

inline std::vector<std::uint64_t> log_concavity_probe(std::uint64_t n) {
    return log_concavity_violations(*formula_count(n, CirculantClass::u).by_valency, n);
}

} // namespace circulant
