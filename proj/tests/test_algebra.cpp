#include "circulant/cycle_index.hpp"
#include "circulant/serialize.hpp"
#include "circulant/sympoly.hpp"
#include "circulant/unipoly.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>
#include <sstream>

using namespace circulant;

namespace {

// Binary strings of length n up to rotation, by explicit orbit collection.
std::uint64_t necklaces_brute(unsigned n) {
    std::set<std::uint64_t> seen;
    std::uint64_t orbits = 0;
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t w = 0; w <= mask; ++w) {
        if (seen.count(w)) continue;
        ++orbits;
        std::uint64_t v = w;
        for (unsigned i = 0; i < n; ++i) {
            seen.insert(v);
            v = ((v << 1) | (v >> (n - 1))) & mask;
        }
    }
    return orbits;
}

BigInt necklaces_gcd(std::uint64_t n) {
    BigInt s = 0;
    for (std::uint64_t k = 0; k < n; ++k) s += BigInt(1) << std::gcd(k, n);
    return s / n;
}

SubstitutionRule all_equal(long long c) { return SubstitutionRule{}.constant(Selector::all(), c); }

} // namespace

TEST(UniPoly, ArithmeticAndTrim) {
    UniPoly a{1, 2, 1};
    UniPoly b{1, 1};
    EXPECT_EQ(b * b, a);
    EXPECT_EQ(a - a, UniPoly{});
    EXPECT_EQ(UniPoly({3, 0, 0}).degree(), 0);
    EXPECT_EQ(UniPoly{}.degree(), -1);
    EXPECT_EQ(b.pow(5), (UniPoly{1, 5, 10, 10, 5, 1}));
    EXPECT_EQ(a.sum(), 4);
    EXPECT_EQ(UniPoly::one_plus(2, 3), (UniPoly{1, 0, 0, 2}));
    EXPECT_EQ(a.stretch(2), (UniPoly{1, 0, 2, 0, 1}));
    EXPECT_THROW(a.stretch(0), DomainError);
}

TEST(UniPoly, ExactDivision) {
    EXPECT_EQ(UniPoly({4, 6}).divide_exact(2), (UniPoly{2, 3}));
    EXPECT_THROW(UniPoly({4, 5}).divide_exact(2), ConsistencyError);
    EXPECT_THROW(UniPoly({4}).divide_exact(0), DomainError);
    EXPECT_EQ(UniPoly({1, 3, 3, 1}).divide_by_one_plus_z(), (UniPoly{1, 2, 1}));
    EXPECT_THROW(UniPoly({1, 2}).divide_by_one_plus_z(), ConsistencyError);
}

TEST(UniPoly, DivisionByOnePlusZInvertsProduct) {
    for (int seed = 1; seed < 40; ++seed) {
        std::vector<BigInt> c;
        for (int i = 0; i < seed % 9 + 1; ++i) c.emplace_back((seed * 7 + i * 13) % 23 - 11);
        UniPoly p(c);
        EXPECT_EQ((p * UniPoly::one_plus(1, 1)).divide_by_one_plus_z(), p);
    }
}

TEST(UniPoly, Evaluation) {
    UniPoly p{1, 1, 6, 19};
    EXPECT_EQ(eval_poly(p, BigInt(1)), 27);
    EXPECT_EQ(eval_poly(p, BigInt(-1)), 1 - 1 + 6 - 19);
    EXPECT_EQ(eval_poly(UniPoly{1, 0, 3, 0, 5}, GaussianUnit{}), 1 - 3 + 5);
    EXPECT_THROW(eval_poly(p, GaussianUnit{}), DomainError);
}

TEST(UniPoly, Printing) {
    std::ostringstream os;
    os << UniPoly{1, -1, 0, 2};
    EXPECT_EQ(os.str(), "1 - z + 2z^3");
}

TEST(CycleIndex, Terms) {
    auto ci = cycle_index(6);
    ASSERT_EQ(ci.terms.size(), 4u);
    EXPECT_EQ(ci.terms[0], (CycleTerm{1, 1, 6}));
    EXPECT_EQ(ci.terms[1], (CycleTerm{2, 1, 3}));
    EXPECT_EQ(ci.terms[2], (CycleTerm{3, 2, 2}));
    EXPECT_EQ(ci.terms[3], (CycleTerm{6, 2, 1}));
    EXPECT_THROW(cycle_index(0), DomainError);
}

TEST(CycleIndex, WeightsSumToOrder) {
    for (std::uint64_t n = 1; n <= 500; ++n) EXPECT_EQ(substitute(cycle_index(n), all_equal(1)), UniPoly{1}) << n;
}

TEST(CycleIndex, NecklacesAgainstBruteForce) {
    for (unsigned n = 1; n <= 20; ++n) {
        EXPECT_EQ(substitute(cycle_index(n), all_equal(2)), UniPoly::constant(necklaces_brute(n))) << n;
    }
}

TEST(CycleIndex, NecklacesAgainstGcdFormula) {
    for (std::uint64_t n = 1; n <= 200; ++n) {
        EXPECT_EQ(substitute(cycle_index(n), all_equal(2)), UniPoly::constant(necklaces_gcd(n))) << n;
    }
}

TEST(CycleIndex, WeightedNecklacesCountByOnes) {
    // necklaces of length 6 with k black beads: 1,1,3,4,3,1,1
    auto rule = SubstitutionRule{}.values(Selector::all(), [](std::uint64_t r) { return UniPoly::one_plus(1, r); });
    EXPECT_EQ(substitute(cycle_index(6), rule), (UniPoly{1, 1, 3, 4, 3, 1, 1}));
}

TEST(Substitution, RuleCoverage) {
    auto rule = SubstitutionRule{}.constant(Selector::even(), 1);
    EXPECT_THROW(rule.resolve(3), DomainError);
    auto twice = SubstitutionRule{}.constant(Selector::all(), 1).constant(Selector::only({2}), 5);
    EXPECT_THROW(twice.resolve(2), DomainError);
    EXPECT_EQ(twice.resolve(3).value, UniPoly{1});
}

TEST(Substitution, SquareTargetsNeedEvenExponents) {
    auto rule = SubstitutionRule{}.square_constant(Selector::all(), 2);
    EXPECT_EQ(rule.power_of(1, 4), UniPoly{4});
    EXPECT_THROW(rule.power_of(1, 3), ParityError);
    // x_r^2 := 2 over I_3: exponent 3 on x_1 is odd
    EXPECT_THROW(substitute(cycle_index(3), rule), ParityError);
}

TEST(Substitution, InexactQuotientIsReported) {
    auto rule = SubstitutionRule{}.constant(Selector::only({1}), 1).constant(Selector::only({2}), 0);
    EXPECT_THROW(substitute(cycle_index(2), rule), ConsistencyError);
}

TEST(SymPoly, RingBasics) {
    SymPoly a = SymPoly::x(1) + SymPoly::y(2);
    SymPoly sq = a * a;
    SymPoly expect = SymPoly::x(1, 2) + SymPoly::x(1) * SymPoly::y(2) * BigRational(2) + SymPoly::y(2, 2);
    EXPECT_EQ(sq, expect);
    EXPECT_EQ(a.pow(3), sq * a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ((SymPoly::x(3) * BigRational(0)), SymPoly{});
    EXPECT_EQ(SymPoly::variable({Family::x, 4}, 0), SymPoly::constant(1));
}

TEST(SymPoly, MonomialsAreCanonical) {
    EXPECT_EQ(SymPoly::y(1) * SymPoly::x(2), SymPoly::x(2) * SymPoly::y(1));
    EXPECT_EQ((SymPoly::x(2) * SymPoly::x(2)), SymPoly::x(2, 2));
}

TEST(SymPoly, CycleIndexAsPolynomial) {
    SymPoly i4 = to_sym(cycle_index(4), Family::x);
    SymPoly expect = (SymPoly::x(1, 4) + SymPoly::x(2, 2) + SymPoly::x(4) * BigRational(2)) * BigRational(1, 4);
    EXPECT_EQ(i4, expect);
    EXPECT_EQ(i4.to_string(), "(1/4)x1^4 + (1/4)x2^2 + (1/2)x4");
}

TEST(SymPoly, RewriteHalvesExponents) {
    auto half = [](std::uint64_t r) { return r == 1 ? TermRewrite{r, 1, 2} : TermRewrite{r, 1, 1}; };
    SymPoly h = to_sym(cycle_index(4), Family::x, half);
    EXPECT_EQ(h.to_string(), "(1/4)x1^2 + (1/4)x2^2 + (1/2)x4");
    EXPECT_THROW(to_sym(cycle_index(3), Family::x, half), ParityError);
}

TEST(SymPoly, EvaluateMatchesDirectSubstitution) {
    auto rule = SubstitutionRule{}.values(Selector::all(), [](std::uint64_t r) { return UniPoly::one_plus(1, r); });
    for (std::uint64_t n = 1; n <= 30; ++n) {
        EXPECT_EQ(evaluate(to_sym(cycle_index(n), Family::x), rule), substitute(cycle_index(n), rule)) << n;
    }
}

TEST(Serialize, UniPolyRoundTrip) {
    UniPoly p{1, 0, -7, 12};
    auto j = io::to_json(p);
    EXPECT_EQ(j.dump(), R"(["1","0","-7","12"])");
    EXPECT_EQ(io::unipoly_from_json(j), p);
    EXPECT_EQ(io::to_json(UniPoly{}).dump(), "[]");
}

TEST(Serialize, SymPolyRoundTrip) {
    SymPoly p = to_sym(cycle_index(6), Family::x) * SymPoly::y(3, 2) - SymPoly::constant(BigRational(5, 3));
    auto j = io::to_json(p);
    EXPECT_EQ(io::sympoly_from_json(j), p);
    EXPECT_EQ(io::to_json(io::sympoly_from_json(j)).dump(), j.dump());
    EXPECT_EQ(io::to_json(SymPoly::x(2) * BigRational(1, 2)).dump(),
              R"([{"monomial":[["x2",1]],"num":"1","den":"2"}])");
}
