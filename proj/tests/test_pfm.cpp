#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <set>

#include "partfreq/partition.hpp"
#include "partfreq/pfm.hpp"

using namespace partfreq;

namespace {

const Partition kIntroPartition({20, 5, 5, 4, 2, 2, 1, 1, 1, 1, 1});  // weight 43

PartFrequencyMatrices iterate(PartFrequencyMatrices family, std::uint64_t steps) {
    for (std::uint64_t i = 0; i < steps; ++i) family = family.rotated();
    return family;
}

std::uint64_t orbit_size_by_iteration(const Partition& p, std::uint64_t m) {
    PartFrequencyMatrices start(p, m);
    PartFrequencyMatrices current = start.rotated();
    std::uint64_t t = 1;
    while (!(current == start)) {
        current = current.rotated();
        ++t;
    }
    return t;
}

}  // namespace

TEST_CASE("encoding the introduction example at m=2") {
    PartFrequencyMatrices family(kIntroPartition, 2);
    REQUIRE(family.matrix(1) != nullptr);
    REQUIRE(family.matrix(5) != nullptr);
    CHECK(family.matrix(3) == nullptr);
    CHECK(family.matrices().size() == 2);

    DigitMatrix m1 = {{{0, 0}, 1}, {{0, 2}, 1}, {{1, 1}, 1}, {{2, 0}, 1}};
    DigitMatrix m5 = {{{0, 1}, 1}, {{2, 0}, 1}};
    CHECK(*family.matrix(1) == m1);
    CHECK(*family.matrix(5) == m5);

    CHECK(family.weight() == 43);
    CHECK(family.to_partition() == kIntroPartition);
}

TEST_CASE("encoding the smallest-part example at m=2") {
    PartFrequencyMatrices family(Partition({15, 15, 15, 10, 10, 8, 6}), 2);
    CHECK(*family.matrix(1) == DigitMatrix{{{3, 0}, 1}});
    CHECK(*family.matrix(3) == DigitMatrix{{{1, 0}, 1}});
    CHECK(*family.matrix(5) == DigitMatrix{{{1, 1}, 1}});
    CHECK(*family.matrix(15) == DigitMatrix{{{0, 0}, 1}, {{0, 1}, 1}});
}

TEST_CASE("empty partition encodes to an empty family") {
    PartFrequencyMatrices family(Partition(), 7);
    CHECK(family.matrices().empty());
    CHECK(family.to_partition() == Partition());
    CHECK(family.weight() == 0);
    CHECK(family.orbit_size() == 1);
}

TEST_CASE("assembling a family from raw digits") {
    PartFrequencyMatrices family(2, {{5, {{{1, 1}, 1}}}});
    CHECK(family.to_partition() == Partition({10, 10}));

    CHECK_THROWS_AS(PartFrequencyMatrices(2, {{4, {{{0, 0}, 1}}}}), std::invalid_argument);
    CHECK_THROWS_AS(PartFrequencyMatrices(3, {{1, {{{0, 0}, 3}}}}), std::invalid_argument);
    CHECK_THROWS_AS(PartFrequencyMatrices(1, {}), std::invalid_argument);

    // Explicit zeros are dropped, so they do not affect equality.
    PartFrequencyMatrices padded(2, {{1, {{{0, 0}, 1}, {{4, 7}, 0}}}, {3, {}}});
    CHECK(padded == PartFrequencyMatrices(Partition({1}), 2));
}

TEST_CASE("round-trip through matrices for small weights") {
    for (std::uint64_t m : {2, 3, 5, 7, 11}) {
        for (std::uint64_t n = 0; n <= 25; ++n) {
            for_each_partition(n, [&](const std::vector<std::uint64_t>& parts) {
                Partition p(parts);
                CHECK(PartFrequencyMatrices(p, m).to_partition() == p);
            });
        }
    }
}

TEST_CASE("glaisher transposition examples") {
    CHECK(glaisher(Partition({3, 3, 3}), 2) == Partition({6, 3}));
    CHECK(glaisher(Partition({1, 1, 1, 1}), 2) == Partition({4}));
    // A symmetric family is a fixed point.
    CHECK(glaisher(Partition({2, 1, 1, 1}), 2) == Partition({2, 1, 1, 1}));
}

TEST_CASE("glaisher is a weight-preserving involution") {
    for (std::uint64_t m : {2, 3}) {
        for (std::uint64_t n = 0; n <= 18; ++n) {
            for_each_partition(n, [&](const std::vector<std::uint64_t>& parts) {
                Partition p(parts);
                Partition image = glaisher(p, m);
                CHECK(image.weight() == n);
                CHECK(glaisher(image, m) == p);
            });
        }
    }
}

TEST_CASE("glaisher restricts to the classical odd/distinct bijection") {
    for (std::uint64_t n = 0; n <= 40; ++n) {
        std::set<Partition> images;
        std::uint64_t distinct_total = 0;
        for_each_partition(n, [&](const std::vector<std::uint64_t>& parts) {
            Partition p(parts);
            if (is_distinct_parts(p)) ++distinct_total;
            if (!is_odd_parts(p)) return;
            Partition image = glaisher(p, 2);
            CHECK(is_distinct_parts(image));
            CHECK(images.insert(image).second);
        });
        CHECK(images.size() == distinct_total);
    }
}

TEST_CASE("rotation walks the published six-step orbit of M_5") {
    PartFrequencyMatrices family(kIntroPartition, 2);
    const DigitMatrix m1_start = *family.matrix(1);
    std::vector<DigitMatrix> expected_m5 = {
        {{{1, 0}, 1}, {{0, 2}, 1}},  // after one application
        {{{0, 1}, 1}, {{1, 1}, 1}},
        {{{1, 0}, 1}, {{2, 0}, 1}},
        {{{0, 1}, 1}, {{0, 2}, 1}},
        {{{1, 0}, 1}, {{1, 1}, 1}},
        {{{0, 1}, 1}, {{2, 0}, 1}},  // back to the start
    };
    PartFrequencyMatrices current = family;
    for (std::size_t step = 0; step < expected_m5.size(); ++step) {
        current = current.rotated();
        CHECK(*current.matrix(5) == expected_m5[step]);
        CHECK(*current.matrix(1) == m1_start);  // full antidiagonals stay put
    }
    CHECK(current == family);
    CHECK(family.orbit_size() == 6);
    CHECK(orbit_size(kIntroPartition, 2) == 6);
}

TEST_CASE("rotation preserves weight") {
    for (std::uint64_t m : {2, 3}) {
        for (std::uint64_t n = 0; n <= 18; ++n) {
            for_each_partition(n, [&](const std::vector<std::uint64_t>& parts) {
                CHECK(rotate(Partition(parts), m).weight() == n);
            });
        }
    }
}

TEST_CASE("partition-level rotation helpers") {
    CHECK(rotate(Partition({1}), 2, 7) == Partition({1}));
    CHECK(rotate(Partition({2, 1, 1, 1}), 2) == Partition({2, 1, 1, 1}));
    CHECK(rotate(kIntroPartition, 2, 6) == kIntroPartition);
    CHECK(rotate(kIntroPartition, 2, 601) == rotate(kIntroPartition, 2, 1));

    std::vector<Partition> cycle = orbit_cycle(kIntroPartition, 2);
    REQUIRE(cycle.size() == 6);
    CHECK(cycle.front() == kIntroPartition);
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
        CHECK(rotate(cycle[i], 2) == cycle[i + 1]);
    }
    CHECK(rotate(cycle.back(), 2) == kIntroPartition);
}

TEST_CASE("orbit size: fixed points and the lcm rule") {
    CHECK(orbit_size(Partition(), 5) == 1);
    for (std::uint64_t m : {2, 3}) {
        for (std::uint64_t n = 0; n <= 14; ++n) {
            for_each_partition(n, [&](const std::vector<std::uint64_t>& parts) {
                Partition p(parts);
                if (is_upper_left_filling(p, m)) CHECK(orbit_size(p, m) == 1);
            });
        }
    }
}

TEST_CASE("orbit size by periods equals orbit size by iteration") {
    for (std::uint64_t m : {2, 3}) {
        for (std::uint64_t n = 0; n <= 20; ++n) {
            for_each_partition(n, [&](const std::vector<std::uint64_t>& parts) {
                Partition p(parts);
                CHECK(orbit_size(p, m) == orbit_size_by_iteration(p, m));
            });
        }
    }
}

TEST_CASE("orbit size overflow is reported, not wrapped") {
    // One lone digit on an antidiagonal of length t has period exactly t;
    // these lengths force an lcm beyond 64 bits.
    std::map<std::uint64_t, DigitMatrix> data;
    DigitMatrix& matrix = data[1];
    for (std::uint32_t t : {64, 27, 25, 49, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43}) {
        matrix[Cell{0, t - 1}] = 1;
    }
    PartFrequencyMatrices family(2, std::move(data));
    CHECK_THROWS_AS(family.orbit_size(), std::overflow_error);
}

TEST_CASE("orbit tables: published rows and internal consistency") {
    OrbitTable t4 = orbit_table(4, 5);
    REQUIRE(t4.rows.size() == 1);
    CHECK(t4.rows[0].orbit_size == 1);
    CHECK(t4.rows[0].p_count == 5);
    CHECK(t4.rows[0].o_count == 5);

    OrbitTable t9 = orbit_table(9, 5);
    REQUIRE(t9.rows.size() == 2);
    CHECK(t9.find(1)->o_count == 20);
    CHECK(t9.find(2)->o_count == 5);
    std::uint64_t weighted = 0;
    for (const auto& row : t9.rows) weighted += row.orbit_size * row.o_count;
    CHECK(weighted == 30);  // p(9)

    OrbitTable t29 = orbit_table(29, 5);
    CHECK(t29.find(1)->o_count == 1480);
    CHECK(t29.find(2)->o_count == 1535);
    CHECK(t29.find(3)->o_count == 5);
    CHECK(t29.find(6) == nullptr);

    OrbitTable t0 = orbit_table(0, 2);
    REQUIRE(t0.rows.size() == 1);
    CHECK(t0.rows[0].p_count == 1);

    for (std::uint64_t m : {2, 5}) {
        for (std::uint64_t n = 0; n <= 14; ++n) {
            OrbitTable table = orbit_table(n, m);
            Int total = 0;
            for (const auto& row : table.rows) {
                CHECK(row.p_count == row.orbit_size * row.o_count);
                total += row.p_count;
            }
            CHECK(total == partition_count(n));
        }
    }
}

TEST_CASE("orbit table is independent of the worker count") {
    OrbitTable reference = orbit_table(18, 2);
    setenv("PARTFREQ_THREADS", "1", 1);
    OrbitTable serial = orbit_table(18, 2);
    setenv("PARTFREQ_THREADS", "3", 1);
    OrbitTable three = orbit_table(18, 2);
    unsetenv("PARTFREQ_THREADS");
    REQUIRE(serial.rows.size() == reference.rows.size());
    REQUIRE(three.rows.size() == reference.rows.size());
    for (std::size_t i = 0; i < reference.rows.size(); ++i) {
        CHECK(serial.rows[i].orbit_size == reference.rows[i].orbit_size);
        CHECK(serial.rows[i].p_count == reference.rows[i].p_count);
        CHECK(three.rows[i].p_count == reference.rows[i].p_count);
    }
}

TEST_CASE("orbit weight decomposition") {
    CHECK(orbit_weight_decomposition(kIntroPartition, 2) ==
          std::pair<std::uint64_t, std::uint64_t>{1, 42});
    CHECK(orbit_weight_decomposition(Partition({5, 3, 1}), 2) ==
          std::pair<std::uint64_t, std::uint64_t>{9, 0});
    CHECK(orbit_weight_decomposition(Partition({2, 2}), 2) ==
          std::pair<std::uint64_t, std::uint64_t>{0, 4});

    for (std::uint64_t m : {2, 3}) {
        for (std::uint64_t n = 0; n <= 16; ++n) {
            for_each_partition(n, [&](const std::vector<std::uint64_t>& parts) {
                auto [corner, outer] = orbit_weight_decomposition(Partition(parts), m);
                CHECK(corner + outer == n);
                CHECK(outer % m == 0);
            });
        }
    }
}

TEST_CASE("modulus validation") {
    CHECK_THROWS_AS(PartFrequencyMatrices(Partition({1}), 1), std::invalid_argument);
    CHECK_THROWS_AS(PartFrequencyMatrices(Partition({1}), 65537), std::invalid_argument);
    CHECK_THROWS_AS(orbit_table(3, 0), std::invalid_argument);
}
