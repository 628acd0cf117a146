#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "partfreq/series.hpp"

namespace partfreq {

enum class FactorKind {
    PochhammerInfinite,  // (q^a; q^b)_inf
    PochhammerFinite,    // (q^a; q^b)_n
    GeometricBlock,      // 1 + q^a + q^(2a) + ... + q^((count-1)a)
};

struct ProductFactor {
    FactorKind kind = FactorKind::PochhammerInfinite;
    std::uint64_t base_exp = 1;  // a
    std::uint64_t step_exp = 1;  // b (ignored for blocks)
    std::uint64_t count = 0;     // finite length n / block term count
    std::int64_t power = 1;      // nonzero; negative means exact division

    bool operator==(const ProductFactor&) const = default;
};

/// A symbolic finite/infinite q-product. Expansion at order N multiplies in
/// exactly the factor terms whose exponent is <= N, so truncated results are
/// complete to the requested order; negative powers divide exactly (all
/// factor kinds have unit constant term).
struct ProductSpec {
    std::vector<ProductFactor> factors;

    /// Text form, for example "(q^2;q^2)^2 / ((q;q) (q^4;q^4))".
    /// Factors are whitespace-separated, '^e' raises to a power, '/' inverts
    /// the group that follows, '(q^a;q^b)_n' is a finite Pochhammer and
    /// '[q^a]_m' the block 1 + q^a + ... + q^((m-1)a).
    /// Throws std::invalid_argument on malformed input.
    static ProductSpec parse(std::string_view text);
    std::string str() const;

    /// The reciprocal spec (all powers negated).
    ProductSpec reciprocal() const;

    Series expand(std::uint64_t order) const;

    bool operator==(const ProductSpec&) const = default;
};

// Direct expansions of the individual building blocks.
Series pochhammer_infinite(std::uint64_t a_exp, std::uint64_t step_exp, std::uint64_t order);
Series pochhammer_finite(std::uint64_t a_exp, std::uint64_t step_exp, std::uint64_t n,
                         std::uint64_t order);
Series geometric_block(std::uint64_t a_exp, std::uint64_t terms, std::uint64_t order);

/// (q^t; q^t)_inf, the building block of eta quotients.
Series euler_factor(std::uint64_t t, std::uint64_t order);

}  // namespace partfreq
