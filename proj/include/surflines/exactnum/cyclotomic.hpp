#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>
#include <vector>

#include "surflines/errors.hpp"
#include "surflines/exactnum/polynomial.hpp"
#include "surflines/exactnum/rational.hpp"

namespace surflines {

/// The field Q(zeta_m), presented as Q[x] / Phi_m(x).
/// Instances are interned: there is exactly one object per conductor.
class CyclotomicField {
public:
    static const CyclotomicField& of(std::uint32_t conductor) {
        if (conductor == 0) throw InvalidInput("cyclotomic field needs conductor m >= 1");
        static std::mutex mutex;
        static std::map<std::uint32_t, std::unique_ptr<CyclotomicField>> registry;
        std::lock_guard lock(mutex);
        auto& slot = registry[conductor];
        if (!slot) slot.reset(new CyclotomicField(conductor));
        return *slot;
    }

    [[nodiscard]] std::uint32_t conductor() const { return conductor_; }
    /// phi(m), the dimension over Q.
    [[nodiscard]] std::size_t degree() const { return degree_; }
    [[nodiscard]] const IntPolynomial& modulus() const { return modulus_; }

    /// Reduces a coefficient vector of any length modulo Phi_m; result has length phi(m).
    [[nodiscard]] std::vector<Rational> reduce(std::vector<Rational> coeffs) const {
        const auto& phi = modulus_.coeffs();
        for (std::size_t k = coeffs.size(); k-- > degree_;) {
            if (coeffs[k].is_zero()) continue;
            const Rational top = coeffs[k];
            for (std::size_t j = 0; j < degree_; ++j) {
                if (phi[j] != 0) coeffs[k - degree_ + j] -= top * Rational(phi[j]);
            }
        }
        coeffs.resize(degree_);
        return coeffs;
    }

    CyclotomicField(const CyclotomicField&) = delete;
    CyclotomicField& operator=(const CyclotomicField&) = delete;

private:
    explicit CyclotomicField(std::uint32_t conductor)
        : conductor_(conductor), modulus_(cyclotomic_polynomial(conductor)),
          degree_(static_cast<std::size_t>(modulus_.degree())) {}

    std::uint32_t conductor_;
    IntPolynomial modulus_;
    std::size_t degree_;
};

/// Element of Q(zeta_m) in canonical form: the unique representative of
/// degree < phi(m). Equality is coefficient-wise.
class CycloNum {
public:
    CycloNum(const CyclotomicField& field, std::vector<Rational> coeffs)
        : field_(&field), coeffs_(field.reduce(std::move(coeffs))) {}

    static CycloNum zero(std::uint32_t m) { return {CyclotomicField::of(m), {}}; }
    static CycloNum one(std::uint32_t m) { return from_rational(m, Rational(1)); }
    static CycloNum from_rational(std::uint32_t m, const Rational& r) {
        return {CyclotomicField::of(m), {r}};
    }
    /// zeta_m^k for any integer k (negative exponents wrap modulo m).
    static CycloNum zeta_power(std::uint32_t m, std::int64_t k) {
        auto e = static_cast<std::size_t>(((k % m) + m) % m);
        std::vector<Rational> c(e + 1, Rational(0));
        c[e] = Rational(1);
        return {CyclotomicField::of(m), std::move(c)};
    }
    static CycloNum zeta(std::uint32_t m) { return zeta_power(m, 1); }

    [[nodiscard]] const CyclotomicField& field() const { return *field_; }
    [[nodiscard]] std::uint32_t conductor() const { return field_->conductor(); }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }

    [[nodiscard]] bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }
    [[nodiscard]] bool is_one() const {
        if (coeffs_.empty() || coeffs_[0] != Rational(1)) return false;
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) return false;
        return true;
    }

    CycloNum& operator+=(const CycloNum& rhs) {
        check_same_field(rhs);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        return *this;
    }
    CycloNum& operator-=(const CycloNum& rhs) {
        check_same_field(rhs);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        return *this;
    }
    CycloNum& operator*=(const CycloNum& rhs) { return *this = *this * rhs; }
    CycloNum& operator/=(const CycloNum& rhs) { return *this = *this * rhs.inverse(); }

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
    friend CycloNum operator-(CycloNum a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b) {
        a.check_same_field(b);
        const std::size_t n = a.coeffs_.size();
        if (n == 0) return a;
        std::vector<Rational> prod(2 * n - 1, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (!b.coeffs_[j].is_zero()) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return {*a.field_, std::move(prod)};
    }
    friend CycloNum operator*(CycloNum a, const Rational& r) {
        for (auto& c : a.coeffs_) c *= r;
        return a;
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on
    /// (representative, Phi_m) over Q.
    [[nodiscard]] CycloNum inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(conductor()) + ")");
        RationalPolynomial r0 = to_rational(field_->modulus());
        RationalPolynomial r1(coeffs_);
        RationalPolynomial s0;
        RationalPolynomial s1(std::vector<Rational>{Rational(1)});
        while (r1.degree() > 0) {
            auto [q, r] = divmod(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(r);
            RationalPolynomial s = s0 - q * s1;
            s0 = std::move(s1);
            s1 = std::move(s);
        }
        if (r1.is_zero()) throw Error("cyclotomic modulus is not irreducible");
        const Rational scale = r1.leading().inverse();
        std::vector<Rational> c = s1.coeffs();
        for (auto& v : c) v *= scale;
        return {*field_, std::move(c)};
    }

    [[nodiscard]] CycloNum pow(std::uint64_t e) const {
        CycloNum result = one(conductor());
        CycloNum base = *this;
        while (e != 0) {
            if (e & 1U) result *= base;
            e >>= 1U;
            if (e != 0) base *= base;
        }
        return result;
    }

    friend bool operator==(const CycloNum& a, const CycloNum& b) {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }
    friend std::strong_ordering operator<=>(const CycloNum& a, const CycloNum& b) {
        if (auto c = a.conductor() <=> b.conductor(); c != 0) return c;
        return a.coeffs_ <=> b.coeffs_;
    }

    /// Human-readable form in the generator z = zeta_m, e.g. "z^2 - 1".
    [[nodiscard]] std::string str() const {
        std::string out;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const Rational& c = coeffs_[i];
            if (c.is_zero()) continue;
            const bool negative = c.sign() < 0;
            const Rational mag = negative ? -c : c;
            if (out.empty()) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            const bool unit = mag == Rational(1);
            if (i == 0) {
                out += mag.str();
            } else {
                if (!unit) out += mag.str() + "*";
                out += i == 1 ? "z" : "z^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }

    friend std::ostream& operator<<(std::ostream& os, const CycloNum& x) { return os << x.str(); }

private:
    void check_same_field(const CycloNum& other) const {
        if (field_ != other.field_) {
            throw FieldMismatch("conductor mismatch: Q(zeta_" + std::to_string(conductor()) + ") vs Q(zeta_" +
                                std::to_string(other.conductor()) + ")");
        }
    }

    const CyclotomicField* field_;
    std::vector<Rational> coeffs_;
};

inline bool is_zero(const CycloNum& x) { return x.is_zero(); }
inline CycloNum inverse(const CycloNum& x) { return x.inverse(); }
inline CycloNum zero_like(const CycloNum& x) { return CycloNum::zero(x.conductor()); }
inline CycloNum one_like(const CycloNum& x) { return CycloNum::one(x.conductor()); }

/// The n elements zeta_{2n}^{2j+1}, j = 0..n-1: every zeta with zeta^n = -1.
inline std::vector<CycloNum> nth_roots_of_minus_one(std::uint32_t n) {
    if (n == 0) throw InvalidInput("nth_roots_of_minus_one needs n >= 1");
    std::vector<CycloNum> roots;
    roots.reserve(n);
    for (std::uint32_t j = 0; j < n; ++j) roots.push_back(CycloNum::zeta_power(2 * n, 2 * j + 1));
    return roots;
}

} // namespace surflines
