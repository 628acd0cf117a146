#include "partfreq/ady.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace partfreq {

namespace {

std::pair<std::uint64_t, std::uint32_t> split_part(std::uint64_t part, std::uint64_t m) {
    std::uint32_t k = 0;
    while (part % m == 0) {
        part /= m;
        ++k;
    }
    return {part, k};
}

/// Least t >= 0 with i*m^t strictly above the smallest part. For i == j this
/// is k+1 (the row directly below the smallest part's row); for i > j*m^k it
/// is 0; otherwise the unique t with j*m^k < i*m^t < j*m^(k+1).
std::uint32_t marked_row_for(std::uint64_t i, std::uint64_t smallest, std::uint64_t m) {
    std::uint32_t t = 0;
    unsigned __int128 v = i;
    while (v <= smallest) {
        v *= m;
        ++t;
    }
    return t;
}

[[noreturn]] void integrity_failure(const std::string& what) {
    throw std::runtime_error("ady integrity failure: " + what);
}

}  // namespace

MarkedMatrices MarkedMatrices::build(const Partition& p, std::uint64_t m) {
    if (p.empty()) throw std::domain_error("marked matrices need a nonempty partition");
    MarkedMatrices marked{PartFrequencyMatrices(p, m), 1, 0, {}};
    std::uint64_t smallest = p.smallest_part();
    auto [j, k] = split_part(smallest, m);
    marked.smallest_index = j;
    marked.smallest_exponent = k;
    for (const auto& [i, matrix] : marked.matrices.matrices()) {
        marked.marked_rows[i] = marked_row_for(i, smallest, m);
    }
    return marked;
}

Partition ady_forward(const Partition& p, std::uint64_t m) {
    if (!is_ady_class(p, m)) {
        throw std::domain_error(
            "ady_forward needs a nonempty partition whose smallest part appears fewer than m "
            "times and whose parts divisible by m are at most m times the smallest part");
    }
    MarkedMatrices marked = MarkedMatrices::build(p, m);
    std::uint64_t j = marked.smallest_index;
    std::uint32_t k = marked.smallest_exponent;

    std::map<std::uint64_t, DigitMatrix> out;
    for (const auto& [i, matrix] : marked.matrices.matrices()) {
        std::uint32_t r = marked.marked_rows.at(i);
        DigitMatrix image;
        for (const auto& [cell, digit] : matrix) {
            if (i == j && cell.row == k) {
                // The smallest part's own row never moves; on the domain its
                // only digit sits in column 0.
                if (cell.col != 0) integrity_failure("smallest part row spills past column 0");
                image[cell] = digit;
            } else if (cell.row == r) {
                image[Cell{r + cell.col, 0}] = digit;  // row -> leading column
            } else {
                integrity_failure("digit outside the marked row");
            }
        }
        out[i] = std::move(image);
    }
    return PartFrequencyMatrices(m, std::move(out)).to_partition();
}

Partition ady_inverse(const Partition& p, std::uint64_t m) {
    if (p.empty() || !is_parts_appear_fewer_than(p, m)) {
        throw std::domain_error(
            "ady_inverse needs a nonempty partition with every part appearing fewer than m "
            "times");
    }
    MarkedMatrices marked = MarkedMatrices::build(p, m);
    std::uint64_t j = marked.smallest_index;
    std::uint32_t k = marked.smallest_exponent;

    std::map<std::uint64_t, DigitMatrix> out;
    for (const auto& [i, matrix] : marked.matrices.matrices()) {
        std::uint32_t r = marked.marked_rows.at(i);
        DigitMatrix image;
        for (const auto& [cell, digit] : matrix) {
            if (cell.col != 0) integrity_failure("multiplicity at least m");
            if (i == j && cell.row == k) {
                image[cell] = digit;
            } else if (cell.row >= r) {
                image[Cell{r, cell.row - r}] = digit;  // leading column -> row
            } else {
                integrity_failure("part below the smallest part");
            }
        }
        out[i] = std::move(image);
    }
    return PartFrequencyMatrices(m, std::move(out)).to_partition();
}

std::pair<std::uint64_t, std::uint64_t> ady_counts(std::uint64_t n, std::uint64_t m) {
    if (n == 0) throw std::invalid_argument("ady classes concern positive n");
    std::uint64_t in_a = 0;
    std::uint64_t in_b = 0;
    for_each_partition(n, [&](const std::vector<std::uint64_t>& parts) {
        Partition p(parts);
        if (is_ady_class(p, m)) ++in_a;
        if (is_parts_appear_fewer_than(p, m)) ++in_b;
    });
    return {in_a, in_b};
}

CheckResult check_ady(std::uint64_t m, std::uint64_t n_max) {
    if (m < 2) throw std::invalid_argument("m must be at least 2");
    if (n_max == 0) throw std::invalid_argument("nmax must be at least 1");
    CheckResult result;
    result.name = "ady";
    result.params = {{"m", std::to_string(m)}, {"nmax", std::to_string(n_max)}};

    std::uint64_t total_a = 0;
    std::uint64_t total_b = 0;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        std::vector<Partition> class_a;
        std::set<Partition> class_b;
        for_each_partition(n, [&](const std::vector<std::uint64_t>& parts) {
            Partition p(parts);
            if (is_ady_class(p, m)) class_a.push_back(p);
            if (is_parts_appear_fewer_than(p, m)) class_b.insert(p);
        });
        total_a += class_a.size();
        total_b += class_b.size();
        if (class_a.size() != class_b.size()) {
            result.record("n=" + std::to_string(n) + " cardinality",
                          std::to_string(class_a.size()), std::to_string(class_b.size()));
        }
        std::set<Partition> images;
        for (const Partition& p : class_a) {
            Partition image = ady_forward(p, m);
            std::string where = "n=" + std::to_string(n) + " forward(" + p.str() + ")";
            if (image.weight() != p.weight()) {
                result.record(where + " weight", std::to_string(image.weight()),
                              std::to_string(p.weight()));
            } else if (image.smallest_part() != p.smallest_part()) {
                result.record(where + " smallest part", std::to_string(image.smallest_part()),
                              std::to_string(p.smallest_part()));
            } else if (!class_b.contains(image)) {
                result.record(where + " image", image.str(), "a class-B partition");
            } else if (ady_inverse(image, m) != p) {
                result.record(where + " roundtrip", ady_inverse(image, m).str(), p.str());
            } else if (!images.insert(image).second) {
                result.record(where + " image", image.str(), "distinct images");
            }
        }
        for (const Partition& p : class_b) {
            Partition pre = ady_inverse(p, m);
            std::string where = "n=" + std::to_string(n) + " inverse(" + p.str() + ")";
            if (!is_ady_class(pre, m)) {
                result.record(where + " image", pre.str(), "a class-A partition");
            } else if (ady_forward(pre, m) != p) {
                result.record(where + " roundtrip", ady_forward(pre, m).str(), p.str());
            }
        }
    }
    result.summary = {{"class_a_total", std::to_string(total_a)},
                      {"class_b_total", std::to_string(total_b)}};
    return result;
}

}  // namespace partfreq
