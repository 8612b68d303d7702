/**
 * @file pi_scalar.hpp
 * @brief Elements of Q[pi^2]: finite sums  sum_k  q_k * pi^(2k),  q_k in Q.
 *
 * pi^2 is a formal generator; odd powers of pi are unrepresentable on purpose.
 * The term map never stores a zero rational, so structural equality is
 * semantic equality.  Text form: " + "-joined terms, ascending pi power,
 * each term "p", "p/q", or "<rational>*pi^<even>", e.g. "1/8 + 1/12*pi^2".
 */
#pragma once

#include <map>
#include <string>

#include "wpvol/rational.hpp"

namespace wpvol {

class PiScalar {
public:
    // ---- constructors ----
    PiScalar() = default;
    PiScalar(long n) { if (n != 0) terms_[0] = Rational(n); }
    PiScalar(const Rational& r) { if (!r.is_zero()) terms_[0] = r; }

    /// c * pi^(2k), k >= 0.
    static PiScalar pi_power(int k, const Rational& c = Rational(1)) {
        if (k < 0) throw std::domain_error("PiScalar: negative pi power");
        PiScalar p;
        if (!c.is_zero()) p.terms_[k] = c;
        return p;
    }

    /// Parses the canonical text form (also accepts "pi^2" for "1*pi^2").
    static PiScalar from_string(const std::string& s);

    // ---- observers ----
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }
    /// Coefficient of pi^(2k); zero if absent.
    Rational coeff(int k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    const std::map<int, Rational>& terms() const { return terms_; }

    std::string to_string() const;

    /// Fixed-point decimal rendering with `digits` places after the point,
    /// correct to within one unit in the last digit.  Exact zero prints "0".
    std::string eval_decimal(int digits) const;

    // ---- arithmetic ----
    PiScalar& operator+=(const PiScalar& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    PiScalar& operator-=(const PiScalar& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    PiScalar operator-() const {
        PiScalar r;
        for (const auto& [k, c] : terms_) r.terms_[k] = -c;
        return r;
    }
    PiScalar& operator*=(const PiScalar& o) { return *this = *this * o; }

    friend PiScalar operator+(PiScalar a, const PiScalar& b) { return a += b; }
    friend PiScalar operator-(PiScalar a, const PiScalar& b) { return a -= b; }
    friend PiScalar operator*(const PiScalar& a, const PiScalar& b) {
        PiScalar r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
        return r;
    }

    PiScalar& scale(const Rational& r) {
        if (r.is_zero()) { terms_.clear(); return *this; }
        for (auto& [k, c] : terms_) c *= r;
        return *this;
    }
    friend PiScalar operator*(const Rational& r, PiScalar p) { return p.scale(r); }

    PiScalar pow(unsigned e) const {
        PiScalar acc(1), base = *this;
        for (; e; e >>= 1) {
            if (e & 1) acc *= base;
            if (e > 1) base *= base;
        }
        return acc;
    }

    /// Multiplication by pi^(2*delta).  A negative resulting power means the
    /// value left Q[pi^2], which is always an internal arithmetic bug here.
    PiScalar shift_pi(int delta) const {
        PiScalar r;
        for (const auto& [k, c] : terms_) {
            if (k + delta < 0)
                throw std::domain_error("PiScalar: shift would produce a negative pi power");
            r.terms_[k + delta] = c;
        }
        return r;
    }

    friend bool operator==(const PiScalar& a, const PiScalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const PiScalar& a, const PiScalar& b) { return !(a == b); }
    friend bool operator<(const PiScalar& a, const PiScalar& b) { return a.terms_ < b.terms_; }

    friend std::ostream& operator<<(std::ostream& os, const PiScalar& p) {
        return os << p.to_string();
    }

private:
    void add_term(int k, const Rational& c) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[k] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<int, Rational> terms_;
};

}  // namespace wpvol
