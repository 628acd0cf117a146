#pragma once

#include <cstdint>
#include <vector>

#include "partfreq/partition.hpp"  // Int

namespace partfreq {

/// Truncated formal power series over the integers: exact coefficients for
/// exponents 0..order inclusive, everything above discarded. Binary
/// operations on mismatched truncation orders work at the minimum order.
class Series {
public:
    Series() : coeffs_(1) {}
    /// Zero series tracking exponents 0..order; rejects absurd orders.
    explicit Series(std::uint64_t order);

    static Series constant(Int value, std::uint64_t order);
    static Series one(std::uint64_t order) { return constant(1, order); }
    /// c * q^exponent (zero series if exponent > order).
    static Series monomial(Int c, std::uint64_t exponent, std::uint64_t order);

    std::uint64_t order() const { return coeffs_.size() - 1; }
    const Int& coeff(std::uint64_t exponent) const;  // throws std::out_of_range
    void set_coeff(std::uint64_t exponent, Int value);
    const std::vector<Int>& coeffs() const { return coeffs_; }

    Series operator+(const Series& rhs) const;
    Series operator-(const Series& rhs) const;
    Series operator*(const Series& rhs) const;
    Series& operator+=(const Series& rhs) { return *this = *this + rhs; }
    Series& operator-=(const Series& rhs) { return *this = *this - rhs; }
    Series& operator*=(const Series& rhs) { return *this = *this * rhs; }

    /// Multiply by the sparse binomial 1 + c*q^e in place (O(order) and no
    /// temporary, the workhorse of product expansion).
    void mul_binomial(Int c, std::uint64_t e);

    /// Multiplicative inverse to the same order. The constant term must be
    /// 1 or -1; anything else throws std::domain_error.
    Series inverse() const;

    /// Every coefficient reduced into [0, b-1]. b >= 1 required.
    Series reduced_mod(std::uint64_t b) const;

    Series truncated(std::uint64_t new_order) const;
    /// Multiply by q^t, dropping whatever falls past the order.
    Series shifted(std::uint64_t t) const;

    /// Equal order and equal coefficients.
    bool operator==(const Series&) const = default;

private:
    std::vector<Int> coeffs_;  // index = exponent; size = order + 1
};

}  // namespace partfreq
