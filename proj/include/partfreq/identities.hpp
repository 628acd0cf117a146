#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "partfreq/series.hpp"

namespace partfreq {

/// One disagreement between the two sides of a check.
struct Mismatch {
    std::string where;  // e.g. "q^17" or "n=19 k=2 p_count"
    std::string lhs;    // formula / stated side
    std::string rhs;    // oracle side
};

/// Outcome of one executable identity or congruence check. Both sides are
/// produced by independent code paths (symbolic expansion vs. enumeration);
/// `mismatches` lists every disagreement, so empty means the check passed.
struct CheckResult {
    using Cells = std::vector<std::pair<std::string, std::string>>;

    std::string name;
    Cells params;                       // echoed parameters, insertion order
    bool pass = true;
    std::vector<Mismatch> mismatches;   // complete list, not just the first
    Cells summary;                      // extra facts, e.g. formula agreement
    std::vector<Cells> rows;            // per-coefficient table where the
                                        // check is a comparison report

    std::string witness() const;        // "" when pass

    void record(std::string where, std::string lhs, std::string rhs);
};

/// Upper-left fillings (parts not divisible by m, multiplicities < m):
/// eta-quotient (q^m;q^m)^2 / ((q;q)(q^{m^2};q^{m^2})) against the
/// enumeration filter, coefficientwise for n <= order.
CheckResult check_pmm(std::uint64_t m, std::uint64_t order);

/// For every n ≡ B (mod A), n <= n_max: all entries of the orbit table of n
/// at modulus m satisfy p_count ≡ 0 and o_count ≡ 0 (mod C).
/// Requires B < A, A | m, C >= 2 (std::invalid_argument otherwise).
CheckResult check_congruence_statistics(std::uint64_t A, std::uint64_t B, std::uint64_t C,
                                        std::uint64_t m, std::uint64_t n_max);

/// Partitions fixed by the rotation: three-way comparison of the enumeration
/// count, the closing eta-quotient form, and the direct product over pairs
/// (j, k) with m not dividing j.
CheckResult check_orbit1_gf(std::uint64_t m, std::uint64_t order);

/// Orbit-size-2 comparison report. The enumeration count (cross-validated
/// against the orbit table) is ground truth; the stated product formula is
/// expanded and compared, and disagreement is reported in the summary and
/// mismatch list rather than treated as a failure of the check itself.
CheckResult check_orbit2_gf(std::uint64_t m, std::uint64_t order);

/// Coefficientwise mod-b comparison of p(n) with the product over part sizes
/// s of (1 + q^s + ... + q^((b-1)s))^(r+1), b^r exactly dividing s.
CheckResult check_theorem4(std::uint64_t b, std::uint64_t order);

/// (a) Exact: 1/(q;q)_inf = prod (1+q^n)^(r+1) with 2^r exactly dividing n.
/// (b) Mod 3: exponents reduced by the base-3 carry rule (1+x)^3 ≡ 1+x^3,
///     verified against p(n) mod 3, with the literal iteration prose checked
///     against the carry reduction for n <= min(order, 50).
CheckResult check_remark4(std::uint64_t order);

/// The smallest-part q-series identity family: the refined identity for each
/// n <= order, the summed identity against -1 + (q^m;q^m)/(q;q), the
/// enumeration count of partitions with multiplicities < m, and for m = 2
/// the classical -1 + (-q;q)_inf form.
CheckResult check_corollary8(std::uint64_t m, std::uint64_t order);

}  // namespace partfreq
