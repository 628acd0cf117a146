#include "partfreq/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace partfreq {

namespace {

std::uint64_t checked_weight(const std::vector<std::uint64_t>& parts) {
    std::uint64_t w = 0;
    for (std::uint64_t part : parts) {
        if (__builtin_add_overflow(w, part, &w)) {
            throw std::invalid_argument("partition weight exceeds uint64_t");
        }
    }
    return w;
}

void require_modulus(std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("modulus must be at least 2");
}

}  // namespace

Partition::Partition(std::vector<std::uint64_t> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be nonincreasing");
        }
    }
    weight_ = checked_weight(parts_);
}

Partition Partition::from_unsorted(std::vector<std::uint64_t> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::from_multiplicities(
    const std::map<std::uint64_t, std::uint64_t, std::greater<>>& mult) {
    std::vector<std::uint64_t> parts;
    for (const auto& [part, count] : mult) {
        if (count == 0) throw std::invalid_argument("multiplicities must be positive");
        for (std::uint64_t i = 0; i < count; ++i) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

std::map<std::uint64_t, std::uint64_t, std::greater<>> Partition::multiplicities() const {
    std::map<std::uint64_t, std::uint64_t, std::greater<>> mult;
    for (std::uint64_t part : parts_) ++mult[part];
    return mult;
}

std::uint64_t Partition::smallest_part() const {
    if (parts_.empty()) throw std::domain_error("empty partition has no smallest part");
    return parts_.back();
}

std::string Partition::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    return out.str();
}

PartitionEnumerator::PartitionEnumerator(std::uint64_t n) : PartitionEnumerator(n, n) {}

PartitionEnumerator::PartitionEnumerator(std::uint64_t n, std::uint64_t max_part)
    : n_(n), max_part_(max_part) {
    reset();
}

void PartitionEnumerator::reset() {
    current_.clear();
    fresh_ = true;
    done_ = false;
    if (n_ == 0) return;  // single empty-prefix case handled in next()
    if (max_part_ == 0) {
        done_ = true;  // no partition of n >= 1 with parts <= 0
        return;
    }
    // Lexicographically largest: as many copies of max_part as fit, then the
    // remainder (strictly smaller, so the sequence stays nonincreasing).
    current_.assign(n_ / max_part_, max_part_);
    if (n_ % max_part_) current_.push_back(n_ % max_part_);
}

bool PartitionEnumerator::advance() {
    // Strip trailing 1s, decrement the last part >= 2, and redistribute the
    // freed units greedily below the new value.
    std::size_t i = current_.size();
    while (i > 0 && current_[i - 1] == 1) --i;
    if (i == 0) return false;
    std::uint64_t freed = (current_.size() - i) + 1;
    std::uint64_t value = current_[i - 1] - 1;
    current_.resize(i);
    current_[i - 1] = value;
    current_.insert(current_.end(), freed / value, value);
    if (freed % value) current_.push_back(freed % value);
    return true;
}

bool PartitionEnumerator::next(std::vector<std::uint64_t>& out) {
    if (done_) return false;
    if (fresh_) {
        fresh_ = false;
        out = current_;
        return true;
    }
    if (!advance()) {
        done_ = true;
        return false;
    }
    out = current_;
    return true;
}

void for_each_partition(std::uint64_t n,
                        const std::function<void(const std::vector<std::uint64_t>&)>& fn) {
    for_each_partition(n, n, fn);
}

void for_each_partition(std::uint64_t n, std::uint64_t max_part,
                        const std::function<void(const std::vector<std::uint64_t>&)>& fn) {
    PartitionEnumerator stream(n, max_part);
    std::vector<std::uint64_t> parts;
    while (stream.next(parts)) fn(parts);
}

std::vector<Int> partition_counts_up_to(std::uint64_t n) {
    std::vector<Int> p(n + 1);
    p[0] = 1;
    for (std::uint64_t i = 1; i <= n; ++i) {
        Int total = 0;
        for (std::uint64_t k = 1;; ++k) {
            std::uint64_t g1 = k * (3 * k - 1) / 2;
            std::uint64_t g2 = k * (3 * k + 1) / 2;
            if (g1 > i && g2 > i) break;
            if (k % 2 == 1) {
                if (g1 <= i) total += p[i - g1];
                if (g2 <= i) total += p[i - g2];
            } else {
                if (g1 <= i) total -= p[i - g1];
                if (g2 <= i) total -= p[i - g2];
            }
        }
        p[i] = total;
    }
    return p;
}

Int partition_count(std::uint64_t n) { return partition_counts_up_to(n)[n]; }

bool is_odd_parts(const Partition& p) {
    for (std::uint64_t part : p.parts()) {
        if (part % 2 == 0) return false;
    }
    return true;
}

bool is_distinct_parts(const Partition& p) {
    const auto& parts = p.parts();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i] == parts[i - 1]) return false;
    }
    return true;
}

bool is_parts_not_div_by(const Partition& p, std::uint64_t m) {
    require_modulus(m);
    for (std::uint64_t part : p.parts()) {
        if (part % m == 0) return false;
    }
    return true;
}

bool is_parts_appear_fewer_than(const Partition& p, std::uint64_t m) {
    require_modulus(m);
    const auto& parts = p.parts();
    std::uint64_t run = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        run = (i > 0 && parts[i] == parts[i - 1]) ? run + 1 : 1;
        if (run >= m) return false;
    }
    return true;
}

bool is_upper_left_filling(const Partition& p, std::uint64_t m) {
    return is_parts_not_div_by(p, m) && is_parts_appear_fewer_than(p, m);
}

bool is_ady_class(const Partition& p, std::uint64_t m) {
    require_modulus(m);
    if (p.empty()) return false;
    std::uint64_t smallest = p.smallest_part();
    const auto& parts = p.parts();
    std::uint64_t smallest_count = 0;
    for (auto it = parts.rbegin(); it != parts.rend() && *it == smallest; ++it) {
        ++smallest_count;
    }
    if (smallest_count >= m) return false;
    // Parts divisible by m may not exceed m times the smallest part; other
    // parts are unrestricted.
    for (std::uint64_t part : parts) {
        if (part % m == 0 && part / m > smallest) return false;
    }
    return true;
}

}  // namespace partfreq
