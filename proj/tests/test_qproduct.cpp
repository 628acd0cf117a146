#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "partfreq/partition.hpp"
#include "partfreq/qproduct.hpp"

using namespace partfreq;

TEST_CASE("Euler's pentagonal expansion of (q;q)") {
    Series s = euler_factor(1, 12);
    std::vector<int> expected = {1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1};
    for (std::uint64_t e = 0; e <= 12; ++e) CHECK(s.coeff(e) == expected[e]);
}

TEST_CASE("empty spec expands to 1") {
    Series s = ProductSpec{}.expand(8);
    CHECK(s == Series::one(8));
    CHECK(ProductSpec{}.str() == "1");
}

TEST_CASE("odd-distinct counts from (q^2;q^2)^2 / ((q;q) (q^4;q^4))") {
    ProductSpec spec = ProductSpec::parse("(q^2;q^2)^2 / ((q;q) (q^4;q^4))");
    Series s = spec.expand(10);
    // Brute-forced counts of partitions into odd distinct parts.
    std::vector<std::uint64_t> expected = {1, 1, 0, 1, 1, 1, 1, 1, 2, 2, 2};
    for (std::uint64_t n = 0; n <= 10; ++n) CHECK(s.coeff(n) == expected[n]);

    std::uint64_t checked = 0;
    for (std::uint64_t n = 0; n <= 10; ++n) {
        std::uint64_t count = 0;
        for_each_partition(n, [&](const std::vector<std::uint64_t>& parts) {
            if (is_upper_left_filling(Partition(parts), 2)) ++count;
        });
        CHECK(s.coeff(n) == count);
        ++checked;
    }
    CHECK(checked == 11);
}

TEST_CASE("upper-left-filling eta quotients at larger moduli") {
    // All partitions of 4 survive the mod-5 filter, none is excluded yet.
    Series m5 = ProductSpec::parse("(q^5;q^5)^2 / ((q;q) (q^25;q^25))").expand(10);
    std::vector<std::uint64_t> expected5 = {1, 1, 2, 3, 5, 5, 9, 11, 16, 20, 27};
    for (std::uint64_t n = 0; n <= 10; ++n) CHECK(m5.coeff(n) == expected5[n]);

    Series m3 = ProductSpec::parse("(q^3;q^3)^2 / ((q;q) (q^9;q^9))").expand(12);
    std::vector<std::uint64_t> expected3 = {1, 1, 2, 1, 3, 3, 4, 4, 6, 8, 10, 11, 14};
    for (std::uint64_t n = 0; n <= 12; ++n) CHECK(m3.coeff(n) == expected3[n]);
}

TEST_CASE("finite Pochhammer basics") {
    CHECK(pochhammer_finite(1, 1, 0, 6) == Series::one(6));
    Series qq2 = pochhammer_finite(1, 1, 2, 5);  // (q;q)_2 = (1-q)(1-q^2)
    CHECK(qq2.coeff(0) == 1);
    CHECK(qq2.coeff(1) == -1);
    CHECK(qq2.coeff(2) == -1);
    CHECK(qq2.coeff(3) == 1);
    CHECK(qq2.coeff(4) == 0);
    CHECK(qq2.coeff(5) == 0);

    // (q^(n+1);q)_((m-1)n) against naive term-by-term multiplication.
    for (std::uint64_t m : {2, 3}) {
        for (std::uint64_t n = 1; n <= 5; ++n) {
            Series lhs = pochhammer_finite(n + 1, 1, (m - 1) * n, 30);
            Series rhs = Series::one(30);
            for (std::uint64_t t = 0; t < (m - 1) * n; ++t) {
                Series factor = Series::one(30);
                if (n + 1 + t <= 30) factor.set_coeff(n + 1 + t, -1);
                rhs *= factor;
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("geometric blocks") {
    Series b = geometric_block(3, 3, 10);  // 1 + q^3 + q^6
    CHECK(b.coeff(0) == 1);
    CHECK(b.coeff(3) == 1);
    CHECK(b.coeff(6) == 1);
    CHECK(b.coeff(9) == 0);
    CHECK_THROWS_AS(geometric_block(0, 2, 5), std::invalid_argument);
}

TEST_CASE("a spec times its reciprocal is 1") {
    ProductSpec spec = ProductSpec::parse("(q^2;q^2)^2 / ((q;q) (q^4;q^4))");
    CHECK(spec.expand(20) * spec.reciprocal().expand(20) == Series::one(20));
}

TEST_CASE("truncation coherence") {
    ProductSpec spec = ProductSpec::parse("(q^3;q^3) / (q;q)");
    CHECK(spec.expand(40).truncated(15) == spec.expand(15));
    Series inf = pochhammer_infinite(2, 3, 33);
    CHECK(inf.truncated(9) == pochhammer_infinite(2, 3, 9));
}

TEST_CASE("1/(q;q) carries the partition numbers") {
    Series p = ProductSpec::parse("/ (q;q)").expand(200);
    std::vector<Int> reference = partition_counts_up_to(200);
    for (std::uint64_t n = 0; n <= 200; ++n) CHECK(p.coeff(n) == reference[n]);
    CHECK(p.coeff(200) == Int("3972999029388"));
}

TEST_CASE("parser round-trips and accepts the documented grammar") {
    ProductSpec spec = ProductSpec::parse("(q^2;q^2)^2 / ((q;q) (q^4;q^4))");
    REQUIRE(spec.factors.size() == 3);
    CHECK(spec.factors[0].power == 2);
    CHECK(spec.factors[1].power == -1);
    CHECK(spec.factors[2].base_exp == 4);
    CHECK(spec.str() == "(q^2;q^2)^2 / ((q;q) (q^4;q^4))");
    CHECK(ProductSpec::parse(spec.str()) == spec);

    ProductSpec finite = ProductSpec::parse("(q^3;q)_5 [q^2]_3");
    REQUIRE(finite.factors.size() == 2);
    CHECK(finite.factors[0].kind == FactorKind::PochhammerFinite);
    CHECK(finite.factors[0].count == 5);
    CHECK(finite.factors[1].kind == FactorKind::GeometricBlock);
    CHECK(ProductSpec::parse(finite.str()) == finite);

    // Nested group powers multiply through.
    ProductSpec nested = ProductSpec::parse("((q;q)^2 (q^2;q^2))^3");
    CHECK(nested.factors[0].power == 6);
    CHECK(nested.factors[1].power == 3);

    // Dividing by a group negates every factor inside it.
    ProductSpec negated = ProductSpec::parse("/ ((q;q) / (q^2;q^2))");
    CHECK(negated.factors[0].power == -1);
    CHECK(negated.factors[1].power == 1);
    CHECK(negated.expand(12) ==
          ProductSpec::parse("(q^2;q^2) / (q;q)").expand(12));
}

TEST_CASE("parser rejects malformed specs") {
    CHECK_THROWS_AS(ProductSpec::parse("(q;q"), std::invalid_argument);
    CHECK_THROWS_AS(ProductSpec::parse("(p;q)"), std::invalid_argument);
    CHECK_THROWS_AS(ProductSpec::parse("(q;q)^"), std::invalid_argument);
    CHECK_THROWS_AS(ProductSpec::parse("(q;q) junk"), std::invalid_argument);
    CHECK_THROWS_AS(ProductSpec::parse("(q^0;q)"), std::invalid_argument);
    CHECK_THROWS_AS(ProductSpec::parse("[q^2]"), std::invalid_argument);
    CHECK_THROWS_AS(ProductSpec::parse("(q;q)^0"), std::invalid_argument);
}
