#pragma once

#include "circulant/bigint.hpp"
#include "circulant/error.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace circulant {

/// Polynomial in z with arbitrary-precision integer coefficients.
/// Coefficient i multiplies z^i. Trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients and equality is structural.
class UniPoly {
public:
    UniPoly() = default;

    explicit UniPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    UniPoly(std::initializer_list<long long> coeffs) {
        coeffs_.reserve(coeffs.size());
        for (auto c : coeffs) coeffs_.emplace_back(c);
        trim();
    }

    static UniPoly constant(const BigInt& c) { return UniPoly(std::vector<BigInt>{c}); }

    /// c * z^power
    static UniPoly monomial(const BigInt& c, std::size_t power) {
        std::vector<BigInt> v(power + 1);
        v[power] = c;
        return UniPoly(std::move(v));
    }

    /// 1 + c z^power, the building block of every valency substitution.
    static UniPoly one_plus(const BigInt& c, std::size_t power) {
        return constant(1) + monomial(c, power);
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree of the zero polynomial is reported as -1.
    long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }

    std::span<const BigInt> coefficients() const { return coeffs_; }

    /// Coefficient of z^power; zero beyond the degree.
    BigInt coeff(std::size_t power) const { return power < coeffs_.size() ? coeffs_[power] : BigInt(0); }

    /// Value at z = 1.
    BigInt sum() const {
        BigInt s = 0;
        for (const auto& c : coeffs_) s += c;
        return s;
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    UniPoly& operator-=(const UniPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    UniPoly& operator*=(const BigInt& c) {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& x : coeffs_) x *= c;
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const BigInt& c) { return a *= c; }
    friend UniPoly operator*(const BigInt& c, UniPoly a) { return a *= c; }

    // Schoolbook product; degrees here stay in the low thousands.
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j] != 0) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return UniPoly(std::move(out));
    }

    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    UniPoly pow(std::uint64_t e) const {
        UniPoly result = constant(1);
        UniPoly base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e > 0) base *= base;
        }
        return result;
    }

    /// p(z^factor)
    UniPoly stretch(std::size_t factor) const {
        if (factor == 0) throw DomainError("UniPoly::stretch: factor must be positive");
        if (is_zero()) return {};
        std::vector<BigInt> out((coeffs_.size() - 1) * factor + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * factor] = coeffs_[i];
        return UniPoly(std::move(out));
    }

    /// Coefficient-wise exact division; a remainder anywhere is a ConsistencyError.
    UniPoly divide_exact(const BigInt& d) const {
        if (d == 0) throw DomainError("UniPoly::divide_exact: division by zero");
        std::vector<BigInt> out(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            BigInt q, r;
            boost::multiprecision::divide_qr(coeffs_[i], d, q, r);
            if (r != 0) {
                throw ConsistencyError("inexact division by " + d.str() + " at z^" + std::to_string(i));
            }
            out[i] = std::move(q);
        }
        return UniPoly(std::move(out));
    }

    /// Exact quotient by (1 + z); throws ConsistencyError if (1 + z) does not divide.
    UniPoly divide_by_one_plus_z() const {
        if (is_zero()) return {};
        // synthetic division by root -1
        std::vector<BigInt> q(coeffs_.size() - 1);
        BigInt carry = 0;
        for (std::size_t i = coeffs_.size(); i-- > 1;) {
            carry = coeffs_[i] - carry;
            q[i - 1] = carry;
        }
        if (coeffs_[0] != carry) throw ConsistencyError("polynomial is not divisible by (1 + z)");
        return UniPoly(std::move(q));
    }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    friend std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
        if (p.is_zero()) return os << "0";
        bool first = true;
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
            const BigInt& c = p.coeffs_[i];
            if (c == 0) continue;
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << "-";
            BigInt a = c < 0 ? BigInt(-c) : c;
            if (i == 0 || a != 1) os << a;
            if (i > 0) os << "z";
            if (i > 1) os << "^" << i;
            first = false;
        }
        return os;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

/// Marker for evaluation at z = sqrt(-1) on even-power series.
struct GaussianUnit {};

using EvalPoint = std::variant<BigInt, GaussianUnit>;

/// Evaluates p at an integer, or at the gaussian unit. The gaussian mode
/// requires every odd-power coefficient to vanish and returns
/// sum over even r of (-1)^(r/2) c_r.
inline BigInt eval_poly(const UniPoly& p, const EvalPoint& at) {
    auto coeffs = p.coefficients();
    if (const auto* x = std::get_if<BigInt>(&at)) {
        BigInt acc = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * *x + coeffs[i];
        return acc;
    }
    BigInt acc = 0;
    for (std::size_t r = 0; r < coeffs.size(); ++r) {
        if (r % 2 == 1) {
            if (coeffs[r] != 0) {
                throw DomainError("eval_poly: gaussian-unit evaluation needs an even-power series (z^" +
                                  std::to_string(r) + " is nonzero)");
            }
            continue;
        }
        if (r % 4 == 0) acc += coeffs[r];
        else acc -= coeffs[r];
    }
    return acc;
}

} // namespace circulant
