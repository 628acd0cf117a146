#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace partfreq {

using Int = boost::multiprecision::cpp_int;

/// A partition: a nonincreasing sequence of positive integer parts.
/// Immutable after construction; the empty partition (weight 0) is valid.
class Partition {
public:
    Partition() = default;

    /// Requires `parts` nonincreasing with every part >= 1 and a total
    /// weight that fits in uint64_t; throws std::invalid_argument otherwise.
    explicit Partition(std::vector<std::uint64_t> parts);

    /// Sorts the input into nonincreasing order first.
    static Partition from_unsorted(std::vector<std::uint64_t> parts);

    /// Part-size -> multiplicity view, largest part first.
    static Partition from_multiplicities(
        const std::map<std::uint64_t, std::uint64_t, std::greater<>>& mult);
    std::map<std::uint64_t, std::uint64_t, std::greater<>> multiplicities() const;

    const std::vector<std::uint64_t>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }
    std::uint64_t weight() const { return weight_; }
    std::uint64_t smallest_part() const;  // throws std::domain_error if empty

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    /// Comma-separated part list, e.g. "5,3,1"; "" for the empty partition.
    std::string str() const;

private:
    std::vector<std::uint64_t> parts_;
    std::uint64_t weight_ = 0;
};

/// Streams the partitions of n with all parts <= max_part in
/// lexicographically decreasing part-sequence order, e.g. for n = 4:
/// (4), (3,1), (2,2), (2,1,1), (1,1,1,1). Restartable via reset().
class PartitionEnumerator {
public:
    explicit PartitionEnumerator(std::uint64_t n);
    PartitionEnumerator(std::uint64_t n, std::uint64_t max_part);

    /// Copies the next partition into `out`; false once exhausted.
    bool next(std::vector<std::uint64_t>& out);
    void reset();

private:
    std::uint64_t n_;
    std::uint64_t max_part_;
    std::vector<std::uint64_t> current_;
    bool done_ = false;
    bool fresh_ = true;

    bool advance();
};

/// Calls fn once per partition of n, in enumeration order.
void for_each_partition(std::uint64_t n,
                        const std::function<void(const std::vector<std::uint64_t>&)>& fn);
void for_each_partition(std::uint64_t n, std::uint64_t max_part,
                        const std::function<void(const std::vector<std::uint64_t>&)>& fn);

/// p(n) by Euler's pentagonal-number recurrence. Exact; deliberately
/// independent of the enumerator so each can check the other.
Int partition_count(std::uint64_t n);

/// p(0), p(1), ..., p(n) in one pass.
std::vector<Int> partition_counts_up_to(std::uint64_t n);

// Membership predicates. All take the modulus m >= 2 where applicable and
// throw std::invalid_argument on m < 2.
bool is_odd_parts(const Partition& p);
bool is_distinct_parts(const Partition& p);
bool is_parts_not_div_by(const Partition& p, std::uint64_t m);
bool is_parts_appear_fewer_than(const Partition& p, std::uint64_t m);
/// Parts not divisible by m and every multiplicity < m.
bool is_upper_left_filling(const Partition& p, std::uint64_t m);
/// Nonempty, smallest part appearing fewer than m times, and every part
/// divisible by m at most m times the smallest part.
bool is_ady_class(const Partition& p, std::uint64_t m);

}  // namespace partfreq
