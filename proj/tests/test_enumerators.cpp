#include "circulant/enumerators.hpp"
#include "circulant/serialize.hpp"
#include "golden.hpp"

#include <gtest/gtest.h>

using namespace circulant;
using C = CirculantClass;

namespace {

UniPoly series(std::initializer_list<long long> c) { return UniPoly(c); }

std::vector<std::uint64_t> formula_orders(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 1; n <= bound; ++n) {
        if (order_shape(n).kind != OrderKind::unsupported) out.push_back(n);
    }
    return out;
}

C class_at(std::size_t i) { return kAllClasses[i]; }

} // namespace

TEST(Prime, PublishedExamples) {
    auto d13 = prime_enumerator(13, C::d);
    EXPECT_EQ(*d13.by_valency, series({1, 1, 6, 19, 43, 66, 80, 66, 43, 19, 6, 1, 1}));
    EXPECT_EQ(d13.total, 352);
    EXPECT_EQ(d13.provenance, Provenance::formula);
    auto u7 = prime_enumerator(7, C::u);
    EXPECT_EQ(*u7.by_valency, series({1, 0, 1, 0, 1, 0, 1}));
    EXPECT_EQ(u7.total, 4);
    EXPECT_EQ(prime_enumerator(13, C::sd).total, 8);
    EXPECT_EQ(prime_enumerator(13, C::su).total, 2);
    EXPECT_EQ(prime_enumerator(13, C::t).total, 6);
    EXPECT_FALSE(prime_enumerator(13, C::t).by_valency.has_value());
    auto o37 = prime_enumerator(37, C::o);
    EXPECT_EQ(o37.at_valency(4), 1360);
    EXPECT_EQ(o37.total, 10761723);
}

TEST(Prime, RejectsNonPrimes) {
    EXPECT_THROW(prime_enumerator(15, C::d), DomainError);
    EXPECT_THROW(prime_enumerator(2, C::d), DomainError);
    EXPECT_THROW(prime_enumerator(1, C::u), DomainError);
}

TEST(TwicePrime, PublishedExamples) {
    auto d14 = twice_prime_enumerator(7, C::d);
    EXPECT_EQ(d14.order, 14u);
    EXPECT_EQ(*d14.by_valency, series({1, 3, 14, 50, 123, 217, 292, 292, 217, 123, 50, 14, 3, 1}));
    EXPECT_EQ(d14.total, 1400);
    auto u14 = twice_prime_enumerator(7, C::u);
    EXPECT_EQ(u14.total, 48);
    const std::vector<long long> even{1, 2, 5, 8, 5, 2, 1};
    for (std::size_t i = 0; i < even.size(); ++i) EXPECT_EQ(u14.at_valency(2 * i), even[i]);
    auto o38 = twice_prime_enumerator(19, C::o);
    EXPECT_EQ(o38.order, 38u);
    EXPECT_EQ(o38.at_valency(4), 2720);
    EXPECT_EQ(o38.total, 21523445);
}

TEST(TwicePrime, SelfComplementaryClassesUnsupported) {
    EXPECT_THROW(twice_prime_enumerator(7, C::sd), UnsupportedError);
    EXPECT_THROW(twice_prime_enumerator(7, C::su), UnsupportedError);
    EXPECT_THROW(twice_prime_enumerator(7, C::t), UnsupportedError);
    EXPECT_THROW(formula_count(14, C::t), UnsupportedError);
}

TEST(PrimeSquared, PublishedExamples) {
    EXPECT_EQ(prime_squared_enumerator(13, C::sd).total, BigInt("123992391755402970674764"));
    EXPECT_EQ(prime_squared_enumerator(13, C::su).total, BigInt("56385212104"));
    EXPECT_EQ(prime_squared_enumerator(13, C::t).total, BigInt("123992391755346585462636"));
    EXPECT_EQ(prime_squared_enumerator(3, C::d).total, 51);
    EXPECT_EQ(prime_squared_enumerator(5, C::u).total, 423);
    EXPECT_EQ(prime_squared_enumerator(7, C::t).total, 399472);
    EXPECT_EQ(prime_squared_enumerator(3, C::d).order, 9u);
    EXPECT_THROW(prime_squared_enumerator(2, C::d), DomainError);
}

TEST(Dispatch, OrderShapes) {
    EXPECT_EQ(order_shape(13).kind, OrderKind::odd_prime);
    EXPECT_EQ(order_shape(26).kind, OrderKind::twice_odd_prime);
    EXPECT_EQ(order_shape(26).p, 13u);
    EXPECT_EQ(order_shape(49).kind, OrderKind::odd_prime_squared);
    EXPECT_EQ(order_shape(50).kind, OrderKind::unsupported);
    EXPECT_EQ(order_shape(2).kind, OrderKind::unsupported);
    EXPECT_EQ(order_shape(4).kind, OrderKind::unsupported);
    EXPECT_THROW(formula_count(15, C::d), UnsupportedError);
    EXPECT_THROW(formula_count(50, C::u), UnsupportedError);
}

TEST(Golden, Table1FormulaCells) {
    for (const auto& row : golden::table1()) {
        for (std::size_t i = 0; i < 6; ++i) {
            if (!formula_supports(row.n, class_at(i))) continue;
            EXPECT_EQ(formula_count(row.n, class_at(i)).total.str(), row.counts[i])
                << "n=" << row.n << " class=" << class_tag(class_at(i));
        }
    }
}

TEST(Golden, Table2Columns) {
    for (const auto& col : golden::table2()) {
        auto cls = *parse_class(std::string(1, col.cls));
        auto r = formula_count(col.n, cls);
        for (const auto& [v, count] : col.cells) {
            EXPECT_EQ(r.at_valency(v).str(), count) << col.cls << " n=" << col.n << " r=" << v;
        }
    }
}

TEST(FormalUndirected, PrimeAndComposite) {
    EXPECT_EQ(*formal_undirected(7).by_valency, series({1, 0, 1, 0, 1, 0, 1}));
    auto f19 = formal_undirected(19);
    EXPECT_EQ(f19.total, 60);
    const std::vector<long long> even{1, 1, 4, 10, 14, 14, 10, 4, 1, 1};
    for (std::size_t i = 0; i < even.size(); ++i) EXPECT_EQ(f19.at_valency(2 * i), even[i]);
    EXPECT_EQ(f19.provenance, Provenance::formula);
    EXPECT_EQ(*formal_undirected(13).by_valency, *prime_enumerator(13, C::u).by_valency);
    EXPECT_THROW(formal_undirected(8), DomainError);
    EXPECT_THROW(formal_undirected(1), DomainError);
}

TEST(FormalUndirected, CompositeFiftyFiveIsFrozen) {
    auto f = formal_undirected(55);
    EXPECT_EQ(f.provenance, Provenance::formal);
    EXPECT_EQ(f.total, 4971068);
    const std::vector<long long> even{1,      1,      13,     109,    650,    2990,   10966,  32890,  82225, 173593,
                                      312455, 482885, 643856, 742900, 742900, 643856, 482885, 312455, 173593,
                                      82225,  32890,  10966,  2990,   650,    109,    13,     1,      1};
    for (std::size_t i = 0; i < even.size(); ++i) EXPECT_EQ(f.at_valency(2 * i), even[i]) << 2 * i;
    EXPECT_EQ(f.by_valency->degree(), 54);
}

TEST(AlternatingSum, Examples) {
    EXPECT_EQ(alternating_sum(13, C::d), 8);
    EXPECT_EQ(alternating_sum(29, C::u), 10);
    EXPECT_EQ(alternating_sum(37, C::o), 1);
    EXPECT_EQ(alternating_sum(19, C::o), 0);
    EXPECT_THROW(alternating_sum(14, C::u), UnsupportedError);
    EXPECT_THROW(alternating_sum(15, C::d), UnsupportedError);
    EXPECT_THROW(alternating_sum(13, C::sd), DomainError);
}

TEST(EvenOddSplit, Examples) {
    EXPECT_EQ(even_odd_split(13, C::d), (EvenOddSplit{180, 172}));
    EXPECT_EQ(even_odd_split(13, C::u), (EvenOddSplit{8, 6}));
    EXPECT_EQ(even_odd_split(7, C::u), (EvenOddSplit{2, 2}));
    EXPECT_THROW(even_odd_split(14, C::u), UnsupportedError);
    EXPECT_THROW(even_odd_split(13, C::o), DomainError);
}

TEST(EvenOddSplit, ReconcilesWithAlternatingSum) {
    for (auto n : formula_orders(200)) {
        auto d = even_odd_split(n, C::d);
        EXPECT_EQ(d.even + d.odd, formula_count(n, C::d).total) << n;
        EXPECT_EQ(d.even - d.odd, alternating_sum(n, C::d)) << n;
        if (n % 2 == 1) {
            auto u = even_odd_split(n, C::u);
            EXPECT_EQ(u.even + u.odd, formula_count(n, C::u).total) << n;
            EXPECT_EQ(u.even - u.odd, alternating_sum(n, C::u)) << n;
        }
    }
}

TEST(MixedSd, Examples) {
    EXPECT_EQ(mixed_sd(13), 24);
    EXPECT_EQ(mixed_sd(7), 0);
    EXPECT_EQ(mixed_sd(5), 2);
    EXPECT_THROW(mixed_sd(9), DomainError);
}

TEST(MixedSd, ThreeFormsAgreeBelowHundred) {
    for (std::uint64_t p = 3; p <= 100; ++p) {
        if (!nt::is_odd_prime(p)) continue;
        BigInt m;
        ASSERT_NO_THROW(m = mixed_sd(p)) << p;
        EXPECT_GE(m, 0);
    }
}

TEST(NonCi, Examples) {
    EXPECT_EQ(non_ci_counts(13), (NonCiCounts{64, 4, 36}));
    EXPECT_EQ(non_ci_counts(3), (NonCiCounts{1, 0, 1}));
    EXPECT_EQ(non_ci_counts(5), (NonCiCounts{4, 1, 1}));
}

TEST(LogConcavity, Examples) {
    EXPECT_TRUE(log_concavity_probe(37).empty());
    EXPECT_TRUE(log_concavity_probe(61).empty());
    auto v121 = log_concavity_probe(121);
    ASSERT_FALSE(v121.empty());
    EXPECT_EQ(v121.front(), 2u);
    auto v169 = log_concavity_probe(169);
    ASSERT_FALSE(v169.empty());
    EXPECT_EQ(v169.front(), 2u);
}

TEST(LogConcavity, PrimesUpTo199) {
    for (std::uint64_t p = 3; p <= 199; ++p) {
        if (nt::is_odd_prime(p)) {
            EXPECT_TRUE(log_concavity_probe(p).empty()) << p;
        }
    }
}

TEST(LogConcavity, HandMadeSequence) {
    // a_r = 1, 1, 3, 10, 3, 1, 1 at even valencies; r = 2 fails (9 < 10), r = 3 holds
    UniPoly s = series({1, 0, 1, 0, 3, 0, 10, 0, 3, 0, 1, 0, 1});
    EXPECT_EQ(log_concavity_violations(s, 13), (std::vector<std::uint64_t>{2, 4}));
}

TEST(Properties, PalindromicPrimeSeries) {
    for (std::uint64_t p = 3; p <= 199; ++p) {
        if (!nt::is_odd_prime(p)) continue;
        auto d = *prime_enumerator(p, C::d).by_valency;
        auto u = *prime_enumerator(p, C::u).by_valency;
        ASSERT_EQ(d.degree(), static_cast<long long>(p - 1));
        for (std::uint64_t r = 0; r < p; ++r) {
            ASSERT_EQ(d.coeff(r), d.coeff(p - 1 - r)) << p << " " << r;
            ASSERT_EQ(u.coeff(r), u.coeff(p - 1 - r)) << p << " " << r;
            if (r % 2 == 1) {
                ASSERT_EQ(u.coeff(r), 0) << p << " " << r;
            }
        }
    }
}

TEST(Properties, TotalsAreValuesAtOne) {
    for (auto n : formula_orders(200)) {
        for (auto cls : {C::d, C::u, C::o}) {
            auto r = formula_count(n, cls);
            ASSERT_EQ(r.total, eval_poly(*r.by_valency, BigInt(1))) << n;
            for (const auto& c : r.by_valency->coefficients()) ASSERT_GE(c, 0) << n;
        }
    }
}

TEST(Properties, SelfComplementaryClassesAreOddOrderOnly) {
    for (auto n : formula_orders(200)) {
        if (n % 2 == 0) continue;
        for (auto cls : {C::sd, C::su, C::t}) EXPECT_GE(formula_count(n, cls).total, 0) << n;
    }
}

TEST(Serialize, CountResultRoundTrip) {
    auto r = formula_count(73, C::d);
    auto j = io::to_json(r);
    EXPECT_EQ(j["total"], "65588423374144427520");
    EXPECT_EQ(io::count_from_json(j), r);
    const std::string line = j.dump();
    EXPECT_EQ(io::to_json(io::count_from_json(io::Json::parse(line))).dump(), line);

    auto t = formula_count(13, C::t);
    EXPECT_EQ(io::to_json(t).dump(),
              R"({"order":13,"class":"t","total":"6","by_valency":null,"provenance":"formula"})");
    EXPECT_EQ(io::count_from_json(io::to_json(t)), t);
    EXPECT_EQ(io::to_json(formal_undirected(55))["provenance"], "formal");
}
