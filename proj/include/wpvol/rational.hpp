/**
 * @file rational.hpp
 * @brief Exact rational arithmetic for the volume engine, backed by GMP.
 *
 * Canonical form is maintained at all times: gcd(num, den) = 1 and den > 0.
 * The text form is "p/q" for non-integers and "p" for integers, matching the
 * wire grammar used by the scalar and polynomial serializers.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <iostream>
#include <stdexcept>
#include <string>

namespace wpvol {

class Rational {
public:
    // ---- constructors ----
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p" or "p/q" (optional leading '-', decimal digits only).
    static Rational from_string(const std::string& s);

    // ---- observers ----
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string to_string() const { return v_.get_str(); }

    // ---- arithmetic ----
    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

    /// r^e for e >= 0 (0^0 = 1).
    Rational pow(unsigned e) const {
        Rational acc(1), base = *this;
        for (; e; e >>= 1) {
            if (e & 1) acc *= base;
            if (e > 1) base *= base;
        }
        return acc;
    }

private:
    mpq_class v_;
};

inline Rational Rational::from_string(const std::string& raw) {
    auto first = raw.find_first_not_of(" \t");
    auto last = raw.find_last_not_of(" \t");
    std::string s = first == std::string::npos ? "" : raw.substr(first, last - first + 1);
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("Rational: cannot parse \"" + raw + "\"");
    };
    if (s.empty()) return fail();
    std::size_t i = 0, slash = std::string::npos;
    if (s[i] == '-') ++i;
    if (i == s.size()) return fail();
    for (; i < s.size(); ++i) {
        if (s[i] == '/') {
            if (slash != std::string::npos || i + 1 == s.size()) return fail();
            slash = i;
        } else if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return fail();
        }
    }
    if (slash != std::string::npos) {
        mpz_class den(s.substr(slash + 1), 10);
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        return Rational(mpz_class(s.substr(0, slash), 10), den);
    }
    return Rational(mpz_class(s, 10));
}

// ---- small combinatorial helpers ----

inline mpz_class factorial_z(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline mpz_class binomial_z(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace wpvol

template <>
struct std::hash<wpvol::Rational> {
    std::size_t operator()(const wpvol::Rational& r) const {
        return std::hash<std::string>()(r.to_string());
    }
};
