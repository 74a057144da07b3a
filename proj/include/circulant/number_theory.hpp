#pragma once

/// Elementary number theory used by the enumerators and the identity
/// registry: totient, divisors, primality, 2-adic splitting, and the
/// nearly-doubled-prime / Cunningham-chain searches.
///
/// Every function is pure. Arguments that feed cycle indices stay far
/// below 2^32, so plain trial division is used for factoring.

#include "circulant/bigint.hpp"
#include "circulant/error.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <array>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace circulant::nt {

/// n = odd_part * 2^two_exponent with odd_part odd.
struct OddPartDecomposition {
    std::uint64_t n = 1;
    std::uint64_t odd_part = 1;
    unsigned two_exponent = 0;

    friend bool operator==(const OddPartDecomposition&, const OddPartDecomposition&) = default;
};

/// A nearly doubled prime pair: both prime and p = 2q - 1.
struct PrimePair {
    std::uint64_t q = 0;
    std::uint64_t p = 0;

    friend bool operator==(const PrimePair&, const PrimePair&) = default;
};

inline constexpr unsigned kDefaultMillerRabinRounds = 40;

/// Prime factorization as ascending (prime, multiplicity) pairs.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    if (n == 0) throw DomainError("factorize: n must be positive");
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d != 0) continue;
        unsigned k = 0;
        while (n % d == 0) {
            n /= d;
            ++k;
        }
        out.emplace_back(d, k);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) throw DomainError("euler_phi: n must be positive");
    std::uint64_t result = n;
    for (auto [prime, mult] : factorize(n)) {
        (void)mult;
        result = result / prime * (prime - 1);
    }
    return result;
}

/// Ascending list of the positive divisors of n.
inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n == 0) throw DomainError("divisors: n must be positive");
    std::vector<std::uint64_t> low, high;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

inline OddPartDecomposition odd_part_decomposition(std::uint64_t n) {
    if (n == 0) throw DomainError("odd_part_decomposition: n must be positive");
    OddPartDecomposition d{n, n, 0};
    while (d.odd_part % 2 == 0) {
        d.odd_part /= 2;
        ++d.two_exponent;
    }
    return d;
}

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Strong probable-prime test to base a; n odd, n > a.
inline bool strong_probable_prime(std::uint64_t n, std::uint64_t a) {
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace detail

/// Deterministic for every 64-bit n (the first twelve primes are a
/// sufficient witness set below 3.3 * 10^24).
inline bool is_prime(std::uint64_t n) {
    static constexpr std::array<std::uint64_t, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2) return false;
    for (auto p : witnesses) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (auto a : witnesses) {
        if (!detail::strong_probable_prime(n, a)) return false;
    }
    return true;
}

/// Exact below 2^64; above, Miller-Rabin with `rounds` pseudo-random bases
/// (error probability at most 4^-rounds). The base generator has a fixed
/// seed so repeated runs agree.
inline bool is_prime(const BigInt& n, unsigned rounds = kDefaultMillerRabinRounds) {
    if (n < 2) return false;
    if (n <= std::numeric_limits<std::uint64_t>::max()) return is_prime(static_cast<std::uint64_t>(n));
    std::mt19937_64 gen(0x5eedULL);
    return boost::multiprecision::miller_rabin_test(n, rounds == 0 ? 1 : rounds, gen);
}

/// All pairs (q, 2q - 1) of primes with p = 2q - 1 <= limit, ascending in p.
inline std::vector<PrimePair> nearly_doubled_primes(std::uint64_t limit) {
    std::vector<PrimePair> out;
    for (std::uint64_t q = 2; 2 * q - 1 <= limit; ++q) {
        if (is_prime(q) && is_prime(2 * q - 1)) out.push_back({q, 2 * q - 1});
    }
    return out;
}

/// Every k in [0, k_max] for which ptilde*2^k + 1 and ptilde*2^(k+1) + 1 are
/// both prime. The smaller index of each pair is reported.
inline std::vector<unsigned> cunningham_pairs(std::uint64_t ptilde, unsigned k_max,
                                              unsigned rounds = kDefaultMillerRabinRounds) {
    if (ptilde % 2 == 0) throw DomainError("cunningham_pairs: ptilde must be odd");
    std::vector<unsigned> out;
    BigInt q = BigInt(ptilde) + 1; // k = 0
    bool q_prime = is_prime(q, rounds);
    for (unsigned k = 0; k <= k_max; ++k) {
        BigInt p = 2 * q - 1;
        bool p_prime = is_prime(p, rounds);
        if (q_prime && p_prime) out.push_back(k);
        q = std::move(p);
        q_prime = p_prime;
    }
    return out;
}

inline bool is_odd_prime(std::uint64_t n) { return n > 2 && is_prime(n); }

/// If n = p^2 for an odd prime p returns p, otherwise 0.
inline std::uint64_t odd_prime_square_root(std::uint64_t n) {
    auto f = factorize(n == 0 ? 1 : n);
    if (f.size() == 1 && f[0].second == 2 && f[0].first > 2) return f[0].first;
    return 0;
}

/// If n = 2p for an odd prime p returns p, otherwise 0.
inline std::uint64_t twice_odd_prime_half(std::uint64_t n) {
    if (n % 2 != 0) return 0;
    return is_odd_prime(n / 2) ? n / 2 : 0;
}

/// True if some prime divisor of n is congruent to 3 mod 4.
inline bool has_prime_divisor_3_mod_4(std::uint64_t n) {
    for (auto [prime, mult] : factorize(n)) {
        (void)mult;
        if (prime % 4 == 3) return true;
    }
    return false;
}

} // namespace circulant::nt
