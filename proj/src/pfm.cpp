#include "partfreq/pfm.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace partfreq {

namespace {

constexpr std::uint64_t kMaxModulus = 65536;  // digits stay comfortably in uint32_t
constexpr std::uint32_t kMaxIndex = 1u << 20;  // sane bound for raw matrix data
constexpr std::uint64_t kMaxMaterializedParts = 1u << 26;

void require_modulus(std::uint64_t m) {
    if (m < 2 || m > kMaxModulus) {
        throw std::invalid_argument("modulus must be in [2, 65536]");
    }
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("value exceeds uint64_t");
    }
    return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("value exceeds uint64_t");
    }
    return r;
}

/// part = j * m^k with m not dividing j.
std::pair<std::uint64_t, std::uint32_t> split_part(std::uint64_t part, std::uint64_t m) {
    std::uint32_t k = 0;
    while (part % m == 0) {
        part /= m;
        ++k;
    }
    return {part, k};
}

/// Cyclic period of the digit word along antidiagonal d: the least divisor
/// t of d+1 such that shifting the word by t fixes it.
std::uint64_t antidiagonal_period(const std::vector<std::uint32_t>& word) {
    std::uint64_t len = word.size();
    for (std::uint64_t t = 1; t <= len; ++t) {
        if (len % t != 0) continue;
        bool fixed = true;
        for (std::uint64_t i = 0; i + t < len && fixed; ++i) {
            fixed = word[i] == word[i + t];
        }
        if (fixed) return t;
    }
    return len;
}

}  // namespace

PartFrequencyMatrices::PartFrequencyMatrices(const Partition& p, std::uint64_t modulus)
    : modulus_(modulus) {
    require_modulus(modulus);
    for (const auto& [part, count] : p.multiplicities()) {
        auto [j, k] = split_part(part, modulus);
        DigitMatrix& matrix = matrices_[j];
        std::uint64_t rest = count;
        for (std::uint32_t l = 0; rest != 0; ++l, rest /= modulus) {
            auto digit = static_cast<std::uint32_t>(rest % modulus);
            if (digit) matrix[Cell{k, l}] = digit;
        }
    }
}

PartFrequencyMatrices::PartFrequencyMatrices(std::uint64_t modulus,
                                             std::map<std::uint64_t, DigitMatrix> matrices)
    : modulus_(modulus), matrices_(std::move(matrices)) {
    require_modulus(modulus);
    for (auto it = matrices_.begin(); it != matrices_.end();) {
        auto& [j, matrix] = *it;
        if (j == 0 || j % modulus == 0) {
            throw std::invalid_argument("matrix index must be positive and not divisible by m");
        }
        for (auto cell = matrix.begin(); cell != matrix.end();) {
            if (cell->second >= modulus) throw std::invalid_argument("digit out of range");
            if (cell->first.row > kMaxIndex || cell->first.col > kMaxIndex) {
                throw std::invalid_argument("matrix cell index out of range");
            }
            cell = cell->second == 0 ? matrix.erase(cell) : std::next(cell);
        }
        it = matrix.empty() ? matrices_.erase(it) : std::next(it);
    }
}

const DigitMatrix* PartFrequencyMatrices::matrix(std::uint64_t j) const {
    auto it = matrices_.find(j);
    return it == matrices_.end() ? nullptr : &it->second;
}

Partition PartFrequencyMatrices::to_partition() const {
    std::map<std::uint64_t, std::uint64_t, std::greater<>> mult;
    std::uint64_t total_parts = 0;
    for (const auto& [j, matrix] : matrices_) {
        for (const auto& [cell, digit] : matrix) {
            std::uint64_t part = j;
            for (std::uint32_t i = 0; i < cell.row; ++i) part = checked_mul(part, modulus_);
            std::uint64_t count = digit;
            for (std::uint32_t i = 0; i < cell.col; ++i) count = checked_mul(count, modulus_);
            mult[part] = checked_add(mult[part], count);
            total_parts = checked_add(total_parts, count);
        }
    }
    if (total_parts > kMaxMaterializedParts) {
        throw std::overflow_error("partition has too many parts to materialize");
    }
    return Partition::from_multiplicities(mult);
}

std::uint64_t PartFrequencyMatrices::weight() const {
    std::uint64_t total = 0;
    for (const auto& [j, matrix] : matrices_) {
        for (const auto& [cell, digit] : matrix) {
            std::uint64_t contribution = checked_mul(j, digit);
            for (std::uint32_t i = 0; i < cell.row + cell.col; ++i) {
                contribution = checked_mul(contribution, modulus_);
            }
            total = checked_add(total, contribution);
        }
    }
    return total;
}

PartFrequencyMatrices PartFrequencyMatrices::transposed() const {
    PartFrequencyMatrices out = *this;
    out.matrices_.clear();
    for (const auto& [j, matrix] : matrices_) {
        DigitMatrix& t = out.matrices_[j];
        for (const auto& [cell, digit] : matrix) t[Cell{cell.col, cell.row}] = digit;
    }
    return out;
}

PartFrequencyMatrices PartFrequencyMatrices::rotated() const {
    PartFrequencyMatrices out = *this;
    out.matrices_.clear();
    for (const auto& [j, matrix] : matrices_) {
        DigitMatrix& r = out.matrices_[j];
        for (const auto& [cell, digit] : matrix) {
            std::uint32_t d = cell.row + cell.col;
            std::uint32_t row = cell.row + 1 <= d ? cell.row + 1 : 0;
            r[Cell{row, static_cast<std::uint32_t>(d - row)}] = digit;
        }
    }
    return out;
}

std::uint64_t PartFrequencyMatrices::orbit_size() const {
    std::uint64_t size = 1;
    for (const auto& [j, matrix] : matrices_) {
        // Group digits by antidiagonal.
        std::map<std::uint32_t, std::vector<std::pair<std::uint32_t, std::uint32_t>>> diagonals;
        for (const auto& [cell, digit] : matrix) {
            diagonals[cell.row + cell.col].emplace_back(cell.row, digit);
        }
        for (const auto& [d, entries] : diagonals) {
            std::vector<std::uint32_t> word(d + 1, 0);
            for (auto [row, digit] : entries) word[row] = digit;
            std::uint64_t period = antidiagonal_period(word);
            std::uint64_t g = std::gcd(size, period);
            size = checked_mul(size / g, period);
        }
    }
    return size;
}

std::pair<std::uint64_t, std::uint64_t> PartFrequencyMatrices::weight_decomposition() const {
    std::uint64_t corner = 0;
    for (const auto& [j, matrix] : matrices_) {
        auto it = matrix.find(Cell{0, 0});
        if (it != matrix.end()) corner = checked_add(corner, checked_mul(j, it->second));
    }
    std::uint64_t outer = weight() - corner;
    if (outer % modulus_ != 0) {
        throw std::runtime_error("outer weight not divisible by the modulus");
    }
    return {corner, outer};
}

Partition glaisher(const Partition& p, std::uint64_t m) {
    return PartFrequencyMatrices(p, m).transposed().to_partition();
}

Partition rotate(const Partition& p, std::uint64_t m, std::uint64_t steps) {
    PartFrequencyMatrices family(p, m);
    // The action is periodic with period orbit_size; reduce the step count
    // when that period is representable, otherwise step literally.
    std::uint64_t reduced = steps;
    try {
        reduced = steps % family.orbit_size();
    } catch (const std::overflow_error&) {
    }
    for (std::uint64_t i = 0; i < reduced; ++i) family = family.rotated();
    return family.to_partition();
}

std::uint64_t orbit_size(const Partition& p, std::uint64_t m) {
    return PartFrequencyMatrices(p, m).orbit_size();
}

std::vector<Partition> orbit_cycle(const Partition& p, std::uint64_t m) {
    std::vector<Partition> cycle;
    PartFrequencyMatrices family(p, m);
    std::uint64_t size = family.orbit_size();
    cycle.reserve(size);
    for (std::uint64_t i = 0; i < size; ++i) {
        cycle.push_back(family.to_partition());
        if (i + 1 < size) family = family.rotated();
    }
    return cycle;
}

std::pair<std::uint64_t, std::uint64_t> orbit_weight_decomposition(const Partition& p,
                                                                   std::uint64_t m) {
    return PartFrequencyMatrices(p, m).weight_decomposition();
}

const OrbitTable::Row* OrbitTable::find(std::uint64_t k) const {
    for (const Row& row : rows) {
        if (row.orbit_size == k) return &row;
    }
    return nullptr;
}

unsigned worker_limit() {
    unsigned limit = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("PARTFREQ_THREADS")) {
        char* end = nullptr;
        unsigned long requested = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && requested >= 1) {
            limit = std::min<unsigned long>(limit, requested);
        }
    }
    return limit;
}

namespace {

/// Orbit sizes of all partitions of n with largest part exactly `first`,
/// accumulated into counts[orbit size].
void tally_orbits_with_first(std::uint64_t n, std::uint64_t first, std::uint64_t m,
                             std::map<std::uint64_t, std::uint64_t>& counts) {
    PartitionEnumerator stream(n - first, std::min(first, n - first));
    std::vector<std::uint64_t> parts;
    std::vector<std::uint64_t> full;
    while (stream.next(parts)) {
        full.clear();
        full.push_back(first);
        full.insert(full.end(), parts.begin(), parts.end());
        ++counts[PartFrequencyMatrices(Partition(full), m).orbit_size()];
    }
}

}  // namespace

OrbitTable orbit_table(std::uint64_t n, std::uint64_t m) {
    require_modulus(m);
    OrbitTable table;
    table.n = n;
    table.modulus = m;

    std::map<std::uint64_t, std::uint64_t> counts;
    if (n == 0) {
        counts[1] = 1;  // the empty partition is fixed
    } else {
        unsigned workers = static_cast<unsigned>(
            std::min<std::uint64_t>(worker_limit(), n));
        if (workers <= 1) {
            for (std::uint64_t first = 1; first <= n; ++first) {
                tally_orbits_with_first(n, first, m, counts);
            }
        } else {
            // Largest parts are dealt round-robin; integer addition commutes,
            // so the merged result is independent of the worker count.
            std::vector<std::map<std::uint64_t, std::uint64_t>> partial(workers);
            std::vector<std::exception_ptr> errors(workers);
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (unsigned w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    try {
                        for (std::uint64_t first = w + 1; first <= n; first += workers) {
                            tally_orbits_with_first(n, first, m, partial[w]);
                        }
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
            for (auto& t : pool) t.join();
            for (const auto& error : errors) {
                if (error) std::rethrow_exception(error);
            }
            for (const auto& local : partial) {
                for (const auto& [k, c] : local) counts[k] += c;
            }
        }
    }

    for (const auto& [k, p_count] : counts) {
        if (p_count % k != 0) {
            throw std::runtime_error("orbit table integrity failure: size " + std::to_string(k) +
                                     " does not divide its partition count " +
                                     std::to_string(p_count));
        }
        table.rows.push_back({k, p_count, p_count / k});
    }
    return table;
}

}  // namespace partfreq
