#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "partfreq/partition.hpp"

namespace partfreq {

/// Cell coordinates inside one digit matrix: row = part exponent of m,
/// column = frequency digit position. Both 0-based.
struct Cell {
    std::uint32_t row = 0;
    std::uint32_t col = 0;
    auto operator<=>(const Cell&) const = default;
};

/// One sparse digit matrix M_j; only nonzero digits (range 1..m-1) are stored,
/// so map equality is matrix equality.
using DigitMatrix = std::map<Cell, std::uint32_t>;

/// The part-frequency matrix family of a partition for a modulus m >= 2:
/// a sparse map index j (with m not dividing j) -> digit matrix M_j, where
/// row k of M_j holds the base-m digits of the multiplicity of the part j*m^k.
/// Values are immutable; transformations return new families.
class PartFrequencyMatrices {
public:
    /// Encode a partition. Modulus must satisfy 2 <= m <= 65536.
    PartFrequencyMatrices(const Partition& p, std::uint64_t modulus);

    /// Assemble from raw digit data (validated: m not dividing j, digits in
    /// 1..m-1). Mainly for decoding external data and tests.
    PartFrequencyMatrices(std::uint64_t modulus,
                          std::map<std::uint64_t, DigitMatrix> matrices);

    std::uint64_t modulus() const { return modulus_; }
    const std::map<std::uint64_t, DigitMatrix>& matrices() const { return matrices_; }
    const DigitMatrix* matrix(std::uint64_t j) const;

    /// Decode back to the partition; inverse of the encoding constructor.
    Partition to_partition() const;

    /// Total weight sum_j sum_{k,l} j * a_{k,l} * m^(k+l); throws
    /// std::overflow_error if it exceeds uint64_t.
    std::uint64_t weight() const;

    /// Glaisher's map: transpose every M_j. An involution.
    PartFrequencyMatrices transposed() const;

    /// One application of the antidiagonal rotation: within each
    /// antidiagonal {(i,l) : i+l = d}, every entry moves down-left one cell
    /// and the bottom entry (d,0) wraps to the top (0,d).
    PartFrequencyMatrices rotated() const;

    /// Least t >= 1 with rotated^t == identity on this family: the lcm over
    /// all nonempty antidiagonals of the cyclic period of the antidiagonal
    /// digit word. Throws std::overflow_error if the lcm exceeds uint64_t.
    std::uint64_t orbit_size() const;

    /// (corner, outer): corner = sum_j j * a_{0,0}(M_j), outer = weight - corner.
    /// The outer weight is always a multiple of m (every non-corner cell
    /// carries a factor m^(k+l) with k+l >= 1).
    std::pair<std::uint64_t, std::uint64_t> weight_decomposition() const;

    bool operator==(const PartFrequencyMatrices&) const = default;

private:
    std::uint64_t modulus_ = 2;
    std::map<std::uint64_t, DigitMatrix> matrices_;
};

// Partition-level convenience wrappers.
Partition glaisher(const Partition& p, std::uint64_t m);
Partition rotate(const Partition& p, std::uint64_t m, std::uint64_t steps = 1);
std::uint64_t orbit_size(const Partition& p, std::uint64_t m);
/// The full rotation cycle starting at p: p, rho(p), ..., rho^(size-1)(p).
std::vector<Partition> orbit_cycle(const Partition& p, std::uint64_t m);
std::pair<std::uint64_t, std::uint64_t> orbit_weight_decomposition(const Partition& p,
                                                                   std::uint64_t m);

/// Orbit-size statistics over all partitions of n: for each occurring orbit
/// size k, the number of partitions lying in size-k orbits (p_count) and the
/// number of such orbits (o_count = p_count / k, exact by construction).
struct OrbitTable {
    struct Row {
        std::uint64_t orbit_size = 0;
        std::uint64_t p_count = 0;
        std::uint64_t o_count = 0;
    };
    std::uint64_t n = 0;
    std::uint64_t modulus = 0;
    std::vector<Row> rows;  // ascending by orbit_size; only nonzero p_count

    const Row* find(std::uint64_t k) const;
};

/// Exhaustive over all partitions of n. Parallelized over ranges of the
/// largest part with a commutative merge, so the result is independent of
/// the worker count. Throws std::runtime_error if some k fails to divide
/// its p_count (impossible unless the rotation action is broken).
OrbitTable orbit_table(std::uint64_t n, std::uint64_t m);

/// Worker cap for internal parallelism: hardware concurrency, capped by the
/// PARTFREQ_THREADS environment variable when set.
unsigned worker_limit();

}  // namespace partfreq
