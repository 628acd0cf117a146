#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "partfreq/identities.hpp"
#include "partfreq/partition.hpp"
#include "partfreq/pfm.hpp"

namespace partfreq {

/// A part-frequency matrix family with, per matrix index i, the marked row
/// exchanged by the smallest-part bijection. With the smallest part written
/// j*m^k (m not dividing j):
///   i == j            -> row k+1 (the smallest part's own row never moves),
///   i  > j*m^k        -> row 0,
///   otherwise         -> the unique k1 with j*m^k < i*m^k1 < j*m^(k+1).
struct MarkedMatrices {
    PartFrequencyMatrices matrices;
    std::uint64_t smallest_index = 1;     // j
    std::uint32_t smallest_exponent = 0;  // k
    std::map<std::uint64_t, std::uint32_t> marked_rows;  // per occupied index

    static MarkedMatrices build(const Partition& p, std::uint64_t m);
};

/// Maps a partition whose smallest part appears fewer than m times and whose
/// parts divisible by m are at most m times the smallest part, to a partition
/// of the same weight and smallest part with every multiplicity < m, by
/// transposing each matrix's marked row into its leading column.
/// Throws std::domain_error unless is_ady_class(p, m).
Partition ady_forward(const Partition& p, std::uint64_t m);

/// Inverse map: leading-column entries at and below the marked row fold back
/// into the marked row. Requires a nonempty partition with all
/// multiplicities < m; throws std::domain_error otherwise.
Partition ady_inverse(const Partition& p, std::uint64_t m);

/// Cardinalities (|A|, |B|) of the two classes among partitions of n by
/// exhaustive enumeration: A = is_ady_class, B = multiplicities < m.
std::pair<std::uint64_t, std::uint64_t> ady_counts(std::uint64_t n, std::uint64_t m);

/// Full bijection certification for 1 <= n <= n_max: equal cardinalities,
/// forward image contained in class B with weight and smallest part
/// preserved, and both roundtrips the identity.
CheckResult check_ady(std::uint64_t m, std::uint64_t n_max);

}  // namespace partfreq
