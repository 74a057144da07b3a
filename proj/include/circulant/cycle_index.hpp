#pragma once

/// Cycle index of the regular cyclic group of degree n,
///
///     I_n(x) = (1/n) * sum over r | n of phi(r) * x_r^(n/r),
///
/// and substitution of univariate polynomials for its variables.

#include "circulant/bigint.hpp"
#include "circulant/error.hpp"
#include "circulant/number_theory.hpp"
#include "circulant/unipoly.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace circulant {

/// One summand phi(r) * x_r^(n/r).
struct CycleTerm {
    std::uint64_t var_index = 1; ///< r, a divisor of the order
    std::uint64_t weight = 1;    ///< phi(r)
    std::uint64_t exponent = 1;  ///< n / r

    friend bool operator==(const CycleTerm&, const CycleTerm&) = default;
};

/// The cycle index as its divisor-indexed terms over the common denominator `order`.
struct CycleIndex {
    std::uint64_t order = 1;
    std::vector<CycleTerm> terms; ///< ascending in var_index

    friend bool operator==(const CycleIndex&, const CycleIndex&) = default;
};

inline CycleIndex cycle_index(std::uint64_t n) {
    if (n == 0) throw DomainError("cycle_index: order must be positive");
    CycleIndex ci{n, {}};
    for (auto r : nt::divisors(n)) ci.terms.push_back({r, nt::euler_phi(r), n / r});
    return ci;
}

/// Which variable indices a substitution clause covers.
struct Selector {
    enum class Kind { all, even, odd, explicit_list };

    Kind kind = Kind::all;
    std::vector<std::uint64_t> indices;

    static Selector all() { return {Kind::all, {}}; }
    static Selector even() { return {Kind::even, {}}; }
    static Selector odd() { return {Kind::odd, {}}; }
    static Selector only(std::vector<std::uint64_t> idx) { return {Kind::explicit_list, std::move(idx)}; }

    bool matches(std::uint64_t r) const {
        switch (kind) {
        case Kind::all: return true;
        case Kind::even: return r % 2 == 0;
        case Kind::odd: return r % 2 == 1;
        case Kind::explicit_list:
            for (auto i : indices) {
                if (i == r) return true;
            }
            return false;
        }
        return false;
    }
};

enum class TargetKind {
    value,        ///< x_r := Q(z)
    square_value, ///< x_r^2 := Q(z); legal only against even exponents
};

struct Assignment {
    TargetKind kind = TargetKind::value;
    UniPoly value;
};

/// Per-index assignment of polynomials to x_r (or to x_r^2). Each index
/// reached during substitution must be matched by exactly one clause.
class SubstitutionRule {
public:
    using Producer = std::function<UniPoly(std::uint64_t r)>;

    SubstitutionRule& values(Selector sel, Producer f) {
        clauses_.push_back({std::move(sel), TargetKind::value, std::move(f)});
        return *this;
    }

    SubstitutionRule& square_values(Selector sel, Producer f) {
        clauses_.push_back({std::move(sel), TargetKind::square_value, std::move(f)});
        return *this;
    }

    /// Same constant for every index in the selector.
    SubstitutionRule& constant(Selector sel, long long c) {
        return values(std::move(sel), [c](std::uint64_t) { return UniPoly::constant(c); });
    }

    SubstitutionRule& square_constant(Selector sel, long long c) {
        return square_values(std::move(sel), [c](std::uint64_t) { return UniPoly::constant(c); });
    }

    Assignment resolve(std::uint64_t r) const {
        const Clause* hit = nullptr;
        for (const auto& c : clauses_) {
            if (!c.selector.matches(r)) continue;
            if (hit != nullptr) {
                throw DomainError("substitution rule assigns x_" + std::to_string(r) + " more than once");
            }
            hit = &c;
        }
        if (hit == nullptr) throw DomainError("substitution rule does not cover x_" + std::to_string(r));
        return {hit->kind, hit->producer(r)};
    }

    /// Q_r(z)^e for the variable x_r raised to e, honoring square targets.
    UniPoly power_of(std::uint64_t r, std::uint64_t e) const {
        Assignment a = resolve(r);
        if (a.kind == TargetKind::square_value) {
            if (e % 2 != 0) {
                throw ParityError("x_" + std::to_string(r) + "^2 substitution met odd exponent " +
                                  std::to_string(e));
            }
            e /= 2;
        }
        return a.value.pow(e);
    }

private:
    struct Clause {
        Selector selector;
        TargetKind kind;
        Producer producer;
    };

    std::vector<Clause> clauses_;
};

/// The numerator sum of phi(r) * Q_r^(n/r) before division by n.
inline UniPoly substitute_numerator(const CycleIndex& ci, const SubstitutionRule& rule) {
    UniPoly acc;
    for (const auto& t : ci.terms) acc += rule.power_of(t.var_index, t.exponent) * BigInt(t.weight);
    return acc;
}

/// (1/n) * sum phi(r) * Q_r(z)^(n/r). The division must be exact.
inline UniPoly substitute(const CycleIndex& ci, const SubstitutionRule& rule) {
    return substitute_numerator(ci, rule).divide_exact(BigInt(ci.order));
}

} // namespace circulant
