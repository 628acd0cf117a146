#include "partfreq/qproduct.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace partfreq {

Series pochhammer_infinite(std::uint64_t a_exp, std::uint64_t step_exp, std::uint64_t order) {
    if (a_exp == 0 || step_exp == 0) {
        throw std::invalid_argument("Pochhammer exponents must be positive");
    }
    Series s = Series::one(order);
    for (std::uint64_t e = a_exp; e <= order; e += step_exp) s.mul_binomial(-1, e);
    return s;
}

Series pochhammer_finite(std::uint64_t a_exp, std::uint64_t step_exp, std::uint64_t n,
                         std::uint64_t order) {
    if (a_exp == 0 || step_exp == 0) {
        throw std::invalid_argument("Pochhammer exponents must be positive");
    }
    Series s = Series::one(order);
    for (std::uint64_t t = 0; t < n; ++t) {
        std::uint64_t e = a_exp + t * step_exp;
        if (e > order) break;  // remaining factors are 1 + O(q^{order+1})
        s.mul_binomial(-1, e);
    }
    return s;
}

Series geometric_block(std::uint64_t a_exp, std::uint64_t terms, std::uint64_t order) {
    if (a_exp == 0) throw std::invalid_argument("block exponent must be positive");
    Series s(order);
    for (std::uint64_t i = 0; i < terms; ++i) {
        std::uint64_t e = i * a_exp;
        if (e > order) break;
        s.set_coeff(e, 1);
    }
    return s;
}

Series euler_factor(std::uint64_t t, std::uint64_t order) {
    return pochhammer_infinite(t, t, order);
}

ProductSpec ProductSpec::reciprocal() const {
    ProductSpec out = *this;
    for (ProductFactor& f : out.factors) f.power = -f.power;
    return out;
}

Series ProductSpec::expand(std::uint64_t order) const {
    Series result = Series::one(order);
    for (const ProductFactor& f : factors) {
        if (f.power == 0) throw std::invalid_argument("factor power must be nonzero");
        Series base(0);
        switch (f.kind) {
            case FactorKind::PochhammerInfinite:
                base = pochhammer_infinite(f.base_exp, f.step_exp, order);
                break;
            case FactorKind::PochhammerFinite:
                base = pochhammer_finite(f.base_exp, f.step_exp, f.count, order);
                break;
            case FactorKind::GeometricBlock:
                base = geometric_block(f.base_exp, f.count, order);
                break;
        }
        if (f.power < 0) base = base.inverse();
        std::uint64_t reps = f.power < 0 ? static_cast<std::uint64_t>(-f.power)
                                         : static_cast<std::uint64_t>(f.power);
        for (std::uint64_t i = 0; i < reps; ++i) result *= base;
    }
    return result;
}

namespace {

class SpecParser {
public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    ProductSpec parse() {
        ProductSpec spec;
        parse_items(spec, /*sign=*/1, /*top_level=*/true);
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return spec;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("product spec: " + what + " at offset " +
                                    std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool eat(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    std::uint64_t parse_nat() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        std::uint64_t value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::uint64_t digit = static_cast<std::uint64_t>(peek() - '0');
            if (value > (UINT64_MAX - digit) / 10) fail("number too large");
            value = value * 10 + digit;
            ++pos_;
        }
        return value;
    }

    std::int64_t parse_int() {
        bool negative = eat('-');
        std::uint64_t nat = parse_nat();
        if (nat > static_cast<std::uint64_t>(INT64_MAX)) fail("exponent too large");
        auto v = static_cast<std::int64_t>(nat);
        return negative ? -v : v;
    }

    /// q or q^a
    std::uint64_t parse_q_power() {
        if (!eat('q')) fail("expected 'q'");
        std::uint64_t e = 1;
        if (eat('^')) e = parse_nat();
        if (e == 0) fail("q^0 is not a valid factor exponent");
        return e;
    }

    // items := { ['/'] group }
    void parse_items(ProductSpec& spec, int sign, bool top_level) {
        for (;;) {
            skip_ws();
            if (pos_ == text_.size()) return;
            if (!top_level && peek() == ')') return;
            int item_sign = sign;
            if (eat('/')) {
                item_sign = -sign;
                skip_ws();
            }
            parse_group(spec, item_sign);
        }
    }

    // group := primary ['^' int]; '(' starts a Pochhammer iff followed by 'q'.
    void parse_group(ProductSpec& spec, int sign) {
        std::size_t first_factor = spec.factors.size();
        if (peek() == '[') {
            parse_block(spec);
        } else if (peek() == '(') {
            std::size_t look = pos_ + 1;
            while (look < text_.size() &&
                   std::isspace(static_cast<unsigned char>(text_[look]))) {
                ++look;
            }
            if (look < text_.size() && text_[look] == 'q') {
                parse_pochhammer(spec);
            } else {
                ++pos_;  // '('
                parse_items(spec, 1, /*top_level=*/false);
                skip_ws();
                if (!eat(')')) fail("expected ')'");
            }
        } else {
            fail("expected a factor");
        }
        std::int64_t power = 1;
        if (eat('^')) power = parse_int();
        if (power == 0) fail("zero power");
        for (std::size_t i = first_factor; i < spec.factors.size(); ++i) {
            spec.factors[i].power *= power * sign;
        }
    }

    // (q^a;q^b) or (q^a;q^b)_n
    void parse_pochhammer(ProductSpec& spec) {
        if (!eat('(')) fail("expected '('");
        skip_ws();
        ProductFactor f;
        f.base_exp = parse_q_power();
        skip_ws();
        if (!eat(';')) fail("expected ';'");
        skip_ws();
        f.step_exp = parse_q_power();
        skip_ws();
        if (!eat(')')) fail("expected ')'");
        if (eat('_')) {
            f.kind = FactorKind::PochhammerFinite;
            f.count = parse_nat();
        } else {
            f.kind = FactorKind::PochhammerInfinite;
        }
        spec.factors.push_back(f);
    }

    // [q^a]_m
    void parse_block(ProductSpec& spec) {
        if (!eat('[')) fail("expected '['");
        skip_ws();
        ProductFactor f;
        f.kind = FactorKind::GeometricBlock;
        f.base_exp = parse_q_power();
        f.step_exp = f.base_exp;
        skip_ws();
        if (!eat(']')) fail("expected ']'");
        if (!eat('_')) fail("expected '_' after block");
        f.count = parse_nat();
        if (f.count == 0) fail("block needs at least one term");
        spec.factors.push_back(f);
    }
};

void append_q_power(std::ostream& out, std::uint64_t e) {
    out << 'q';
    if (e != 1) out << '^' << e;
}

void append_factor(std::ostream& out, const ProductFactor& f, std::uint64_t shown_power) {
    switch (f.kind) {
        case FactorKind::PochhammerInfinite:
        case FactorKind::PochhammerFinite:
            out << '(';
            append_q_power(out, f.base_exp);
            out << ';';
            append_q_power(out, f.step_exp);
            out << ')';
            if (f.kind == FactorKind::PochhammerFinite) out << '_' << f.count;
            break;
        case FactorKind::GeometricBlock:
            out << '[';
            append_q_power(out, f.base_exp);
            out << "]_" << f.count;
            break;
    }
    if (shown_power != 1) out << '^' << shown_power;
}

}  // namespace

ProductSpec ProductSpec::parse(std::string_view text) { return SpecParser(text).parse(); }

std::string ProductSpec::str() const {
    std::ostringstream numerator;
    std::ostringstream denominator;
    std::size_t num_count = 0;
    std::size_t den_count = 0;
    for (const ProductFactor& f : factors) {
        bool inverted = f.power < 0;
        std::uint64_t magnitude = inverted ? static_cast<std::uint64_t>(-f.power)
                                           : static_cast<std::uint64_t>(f.power);
        auto& out = inverted ? denominator : numerator;
        auto& count = inverted ? den_count : num_count;
        if (count) out << ' ';
        append_factor(out, f, magnitude);
        ++count;
    }
    if (num_count == 0 && den_count == 0) return "1";
    std::string result = num_count ? numerator.str() : "1";
    if (den_count == 1) {
        result += " / " + denominator.str();
    } else if (den_count > 1) {
        result += " / (" + denominator.str() + ")";
    }
    return result;
}

}  // namespace partfreq
