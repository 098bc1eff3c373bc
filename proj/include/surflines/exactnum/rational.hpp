#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "surflines/errors.hpp"

namespace surflines {

using BigInt = boost::multiprecision::cpp_int;

enum class RoundingMode {
    truncate, ///< toward zero; reproduces the published decimal renderings
    nearest,  ///< half away from zero
};

/// Exact rational number, always stored reduced with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : value_(value) {} // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(value) {}          // NOLINT(google-explicit-constructor)
    explicit Rational(const BigInt& value) : value_(value) {}

    Rational(const BigInt& numerator, const BigInt& denominator) {
        if (denominator == 0) throw DivisionByZero("rational with zero denominator");
        // boost's rational adaptor rejects negative denominators, so move the sign first.
        value_ = denominator < 0 ? Backend(BigInt(-numerator), BigInt(-denominator)) : Backend(numerator, denominator);
    }

    [[nodiscard]] BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    [[nodiscard]] BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    [[nodiscard]] bool is_zero() const { return value_.is_zero(); }
    [[nodiscard]] bool is_integer() const { return denominator() == 1; }
    [[nodiscard]] int sign() const { return value_.sign(); }

    [[nodiscard]] Rational inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero rational");
        return Rational(Backend(1) / value_);
    }

    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    Rational& operator/=(const Rational& rhs) {
        if (rhs.is_zero()) throw DivisionByZero("rational division by zero");
        value_ /= rhs.value_;
        return *this;
    }

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& x) { return Rational(Backend(-x.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (b.value_ < a.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "p/q", or just "p" when the value is an integer.
    [[nodiscard]] std::string str() const {
        if (is_integer()) return numerator().str();
        return numerator().str() + "/" + denominator().str();
    }

    /// Parses "p" or "p/q" with an optional leading sign on p.
    static Rational parse(std::string_view text) {
        auto parse_int = [&](std::string_view digits, bool allow_sign) {
            std::size_t i = 0;
            if (allow_sign && !digits.empty() && (digits[0] == '-' || digits[0] == '+')) i = 1;
            if (i == digits.size()) throw InvalidInput("malformed rational: '" + std::string(text) + "'");
            for (std::size_t j = i; j < digits.size(); ++j) {
                if (digits[j] < '0' || digits[j] > '9')
                    throw InvalidInput("malformed rational: '" + std::string(text) + "'");
            }
            std::string s(digits);
            if (s[0] == '+') s.erase(0, 1);
            return BigInt(s);
        };
        const auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(parse_int(text, true));
        const BigInt num = parse_int(text.substr(0, slash), true);
        const BigInt den = parse_int(text.substr(slash + 1), false);
        if (den == 0) throw DivisionByZero("rational with zero denominator: '" + std::string(text) + "'");
        return {num, den};
    }

    /// Fixed-point rendering with `places` digits after the point.
    [[nodiscard]] std::string to_decimal(int places, RoundingMode mode = RoundingMode::truncate) const {
        if (places < 0) throw InvalidInput("negative number of decimal places");
        BigInt scale = 1;
        for (int i = 0; i < places; ++i) scale *= 10;
        const BigInt num = abs(numerator());
        const BigInt den = denominator();
        const BigInt scaled = mode == RoundingMode::truncate ? BigInt((num * scale) / den)
                                                             : BigInt((2 * num * scale + den) / (2 * den));
        std::string digits = scaled.str();
        if (places > 0) {
            if (digits.size() <= static_cast<std::size_t>(places))
                digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
            digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
        }
        if (sign() < 0 && scaled != 0) digits.insert(0, "-");
        return digits;
    }

    [[nodiscard]] double to_double() const { return value_.convert_to<double>(); }

    [[nodiscard]] std::size_t hash() const {
        return std::hash<std::string>{}(str());
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    using Backend = boost::multiprecision::cpp_rational;
    explicit Rational(Backend value) : value_(std::move(value)) {}
    Backend value_{0};
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

// Field customization points used by the generic linear algebra.
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline Rational inverse(const Rational& x) { return x.inverse(); }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }

} // namespace surflines
