#include "partfreq/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace partfreq {

namespace {
// Dense storage; quadratic multiplication makes anything near this cap
// unusable long before memory does.
constexpr std::uint64_t kMaxOrder = 1u << 22;
}  // namespace

Series::Series(std::uint64_t order) {
    if (order > kMaxOrder) {
        throw std::invalid_argument("truncation order too large");
    }
    coeffs_.resize(order + 1);
}

Series Series::constant(Int value, std::uint64_t order) {
    Series s(order);
    s.coeffs_[0] = std::move(value);
    return s;
}

Series Series::monomial(Int c, std::uint64_t exponent, std::uint64_t order) {
    Series s(order);
    if (exponent <= order) s.coeffs_[exponent] = std::move(c);
    return s;
}

const Int& Series::coeff(std::uint64_t exponent) const {
    if (exponent >= coeffs_.size()) {
        throw std::out_of_range("coefficient index beyond truncation order");
    }
    return coeffs_[exponent];
}

void Series::set_coeff(std::uint64_t exponent, Int value) {
    if (exponent >= coeffs_.size()) {
        throw std::out_of_range("coefficient index beyond truncation order");
    }
    coeffs_[exponent] = std::move(value);
}

Series Series::operator+(const Series& rhs) const {
    Series out(std::min(order(), rhs.order()));
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
        out.coeffs_[i] = coeffs_[i] + rhs.coeffs_[i];
    }
    return out;
}

Series Series::operator-(const Series& rhs) const {
    Series out(std::min(order(), rhs.order()));
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
        out.coeffs_[i] = coeffs_[i] - rhs.coeffs_[i];
    }
    return out;
}

Series Series::operator*(const Series& rhs) const {
    Series out(std::min(order(), rhs.order()));
    std::size_t size = out.coeffs_.size();
    for (std::size_t i = 0; i < size; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t k = 0; k + i < size; ++k) {
            if (rhs.coeffs_[k] != 0) out.coeffs_[i + k] += coeffs_[i] * rhs.coeffs_[k];
        }
    }
    return out;
}

void Series::mul_binomial(Int c, std::uint64_t e) {
    if (e == 0) throw std::invalid_argument("binomial exponent must be positive");
    if (e > order()) return;
    // In-place from the top so each source coefficient is still unscaled.
    for (std::size_t i = coeffs_.size(); i-- > e;) {
        if (coeffs_[i - e] != 0) coeffs_[i] += c * coeffs_[i - e];
    }
}

Series Series::inverse() const {
    if (coeffs_[0] != 1 && coeffs_[0] != -1) {
        throw std::domain_error("series inverse requires constant term +1 or -1");
    }
    Series out(order());
    out.coeffs_[0] = coeffs_[0];
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
        Int acc = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            if (coeffs_[i] != 0) acc += coeffs_[i] * out.coeffs_[n - i];
        }
        out.coeffs_[n] = -coeffs_[0] * acc;
    }
    return out;
}

Series Series::reduced_mod(std::uint64_t b) const {
    if (b == 0) throw std::invalid_argument("modulus must be positive");
    Series out(order());
    Int modulus = b;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        Int r = coeffs_[i] % modulus;
        if (r < 0) r += modulus;
        out.coeffs_[i] = r;
    }
    return out;
}

Series Series::truncated(std::uint64_t new_order) const {
    if (new_order > order()) {
        throw std::invalid_argument("cannot extend a truncated series");
    }
    Series out(new_order);
    std::copy(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(new_order) + 1,
              out.coeffs_.begin());
    return out;
}

Series Series::shifted(std::uint64_t t) const {
    Series out(order());
    for (std::size_t i = 0; i + t < coeffs_.size(); ++i) {
        out.coeffs_[i + t] = coeffs_[i];
    }
    return out;
}

}  // namespace partfreq
