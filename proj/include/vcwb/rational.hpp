#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers, the coefficient ring for cyclotomic scalars.
 *
 * Thin value wrapper around GMP's mpq_class. Kept canonical at all times:
 * gcd(num, den) = 1 and den >= 1. Serialized as the string "p/q" (or "p"
 * when q = 1).
 */

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vcwb {

class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(static_cast<signed long>(n)) {}
    Rational(long num, long den) : q_(static_cast<signed long>(num), static_cast<signed long>(den)) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_.canonicalize();
    }

    /// Parse "p/q" or "p".
    static Rational parse(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("Rational: empty string");
        Rational r;
        if (r.q_.set_str(s, 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        if (r.q_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
        r.q_.canonicalize();
        return r;
    }

    std::string str() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    std::string numerator_str() const { return q_.get_num().get_str(); }
    std::string denominator_str() const { return q_.get_den().get_str(); }

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(-q_); }
    Rational operator+(const Rational& o) const { return Rational(q_ + o.q_); }
    Rational operator-(const Rational& o) const { return Rational(q_ - o.q_); }
    Rational operator*(const Rational& o) const { return Rational(q_ * o.q_); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(q_ / o.q_);
    }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(1 / q_);
    }

    double to_double() const { return q_.get_d(); }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    mpq_class q_;
};

} // namespace vcwb
