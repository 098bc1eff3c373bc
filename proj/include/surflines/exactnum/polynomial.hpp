#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "surflines/errors.hpp"
#include "surflines/exactnum/rational.hpp"

namespace surflines {

/// Dense univariate polynomial, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(std::size_t degree, T coeff = T(1)) {
        std::vector<T> c(degree + 1, T(0));
        c[degree] = std::move(coeff);
        return Polynomial(std::move(c));
    }

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    /// Degree, with -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const std::vector<T>& coeffs() const { return coeffs_; }
    [[nodiscard]] const T& leading() const { return coeffs_.back(); }

    [[nodiscard]] T operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(c));
    }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Euclidean division. For integer coefficients the division must be exact
    /// at every step (e.g. a monic divisor), otherwise InvalidInput is thrown.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
        std::vector<T> rem = a.coeffs_;
        const int db = b.degree();
        if (a.degree() < db) return {Polynomial(), a};
        std::vector<T> quot(static_cast<std::size_t>(a.degree() - db + 1), T(0));
        for (int k = a.degree(); k >= db; --k) {
            const T& top = rem[static_cast<std::size_t>(k)];
            if (top == T(0)) continue;
            T q = top / b.leading();
            if (q * b.leading() != top) throw InvalidInput("inexact polynomial division over the integers");
            for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= q * b.coeffs_[static_cast<std::size_t>(j)];
            quot[static_cast<std::size_t>(k - db)] = std::move(q);
        }
        rem.resize(static_cast<std::size_t>(db));
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    /// Value at x, by Horner's rule. U only needs ring operations with T.
    template <class U>
    [[nodiscard]] U evaluate(const U& x, U acc) const {
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + U(*it);
        return acc;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
    }
    std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<std::int64_t>;
using RationalPolynomial = Polynomial<Rational>;

inline RationalPolynomial to_rational(const IntPolynomial& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (auto v : p.coeffs()) c.emplace_back(v);
    return RationalPolynomial(std::move(c));
}

/// The m-th cyclotomic polynomial: x^m - 1 divided by every Phi_d with d a proper divisor of m.
inline IntPolynomial cyclotomic_polynomial(std::uint32_t m) {
    if (m == 0) throw InvalidInput("cyclotomic polynomial needs m >= 1");
    static std::mutex mutex;
    static std::map<std::uint32_t, IntPolynomial> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(m); it != cache.end()) return it->second;
    }
    IntPolynomial result = IntPolynomial::monomial(m) - IntPolynomial::monomial(0);
    for (std::uint32_t d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        auto [q, r] = divmod(result, cyclotomic_polynomial(d));
        if (!r.is_zero()) throw Error("cyclotomic division left a remainder");
        result = std::move(q);
    }
    std::lock_guard lock(mutex);
    cache.emplace(m, result);
    return result;
}

} // namespace surflines
