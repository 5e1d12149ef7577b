#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in cyclotomic fields Q(zeta_m).
 *
 * Elements are stored in the power basis of Z[x]/Phi_m(x), i.e. as rational
 * coefficient vectors of degree < phi(m), always reduced modulo the m-th
 * cyclotomic polynomial. Reduction makes equality canonical: two elements are
 * equal iff their orders and reduced coefficient vectors coincide.
 *
 * Division is implemented by the extended Euclidean algorithm in Q[x]; since
 * Phi_m is irreducible over Q every nonzero element is invertible.
 */

#include "vcwb/errors.hpp"
#include "vcwb/rational.hpp"

#include <algorithm>
#include <complex>
#include <functional>
#include <map>
#include <mutex>
#include <vector>

namespace vcwb {

namespace detail {

using Poly = std::vector<Rational>; // coefficient list, index = exponent

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    poly_trim(c);
    return c;
}

/// Remainder of a modulo the monic polynomial d.
inline Poly poly_rem(Poly a, const Poly& d) {
    poly_trim(a);
    const size_t dd = d.size() - 1; // deg d
    while (a.size() > dd) {
        Rational lead = a.back();
        size_t shift = a.size() - 1 - dd;
        if (!lead.is_zero())
            for (size_t i = 0; i < d.size(); ++i) a[shift + i] -= lead * d[i];
        a.pop_back();
        poly_trim(a);
        if (a.size() <= dd) break;
    }
    poly_trim(a);
    return a;
}

/// Quotient of a by the monic polynomial d (exact when used for Phi).
inline Poly poly_div(Poly a, const Poly& d) {
    poly_trim(a);
    const size_t dd = d.size() - 1;
    if (a.size() <= dd) return {};
    Poly q(a.size() - dd);
    while (a.size() > dd) {
        Rational lead = a.back();
        size_t shift = a.size() - 1 - dd;
        q[shift] = lead;
        for (size_t i = 0; i < d.size(); ++i) a[shift + i] -= lead * d[i];
        poly_trim(a);
    }
    poly_trim(q);
    return q;
}

/// m-th cyclotomic polynomial, computed as (x^m - 1) / prod_{d|m, d<m} Phi_d.
inline const Poly& cyclotomic_poly(long m) {
    static std::map<long, Poly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    std::function<const Poly&(long)> get = [&](long n) -> const Poly& {
        auto i2 = cache.find(n);
        if (i2 != cache.end()) return i2->second;
        Poly xn_minus_1(n + 1);
        xn_minus_1[0] = Rational(-1);
        xn_minus_1[n] = Rational(1);
        Poly denom{Rational(1)};
        for (long d = 1; d < n; ++d)
            if (n % d == 0) denom = poly_mul(denom, get(d));
        Poly phi = poly_div(xn_minus_1, denom);
        return cache.emplace(n, std::move(phi)).first->second;
    };
    return get(m);
}

inline long euler_phi(long m) {
    long result = m, n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

} // namespace detail

class Cyclotomic {
public:
    /// Zero of Q(zeta_m).
    explicit Cyclotomic(long m = 1) : m_(check_order(m)) {}

    /// Rational constant inside Q(zeta_m).
    Cyclotomic(long m, const Rational& c) : m_(check_order(m)) {
        if (!c.is_zero()) coeffs_.assign(1, c);
    }

    /// From a raw coefficient vector (will be reduced mod Phi_m).
    static Cyclotomic from_coeffs(long m, detail::Poly coeffs) {
        Cyclotomic z(m);
        z.coeffs_ = detail::poly_rem(std::move(coeffs), detail::cyclotomic_poly(m));
        return z;
    }

    /// zeta_m^(k mod m), reduced.
    static Cyclotomic root_of_unity(long m, long k) {
        k %= m;
        if (k < 0) k += m;
        detail::Poly p(k + 1);
        p[k] = Rational(1);
        return from_coeffs(m, std::move(p));
    }

    static Cyclotomic zero(long m) { return Cyclotomic(m); }
    static Cyclotomic one(long m) { return Cyclotomic(m, Rational(1)); }

    long order() const { return m_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_rational() const { return coeffs_.size() <= 1; }
    Rational rational_part() const { return coeffs_.empty() ? Rational(0) : coeffs_[0]; }

    /// Reduced coefficients; index k holds the coefficient of zeta_m^k.
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Cyclotomic operator+(const Cyclotomic& o) const {
        require_same_order(o);
        detail::Poly c = coeffs_;
        if (c.size() < o.coeffs_.size()) c.resize(o.coeffs_.size());
        for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
        detail::poly_trim(c);
        Cyclotomic r(m_);
        r.coeffs_ = std::move(c);
        return r;
    }
    Cyclotomic operator-(const Cyclotomic& o) const { return *this + (-o); }
    Cyclotomic operator-() const {
        Cyclotomic r(m_);
        r.coeffs_ = coeffs_;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    Cyclotomic operator*(const Cyclotomic& o) const {
        require_same_order(o);
        if (is_zero() || o.is_one()) return *this;
        if (o.is_zero() || is_one()) return o;
        return from_coeffs(m_, detail::poly_mul(coeffs_, o.coeffs_));
    }
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    /// Multiplicative inverse via extended Euclid on (this, Phi_m) in Q[x].
    Cyclotomic inverse() const {
        if (is_zero()) throw std::domain_error("Cyclotomic: division by zero");
        const detail::Poly& phi = detail::cyclotomic_poly(m_);
        // r0 = phi, r1 = this; track s only for r1 side: s with s*this = r (mod phi)
        detail::Poly r0 = phi, r1 = coeffs_;
        detail::Poly s0 = {}, s1 = {Rational(1)};
        while (true) {
            detail::poly_trim(r1);
            if (r1.empty()) throw std::domain_error("Cyclotomic: non-invertible element");
            if (r1.size() == 1) {
                // unit: scale s1 by 1/r1[0]
                Rational inv = r1[0].inverse();
                detail::Poly res = s1;
                for (auto& c : res) c *= inv;
                return from_coeffs(m_, std::move(res));
            }
            // r0 = q*r1 + r2 ; s2 = s0 - q*s1
            detail::Poly q, r = r0;
            {
                const size_t dd = r1.size() - 1;
                detail::poly_trim(r);
                if (r.size() > dd) q.assign(r.size() - dd, Rational(0));
                Rational lead_inv = r1.back().inverse();
                while (r.size() > dd) {
                    Rational c = r.back() * lead_inv;
                    size_t shift = r.size() - 1 - dd;
                    q[shift] = c;
                    for (size_t i = 0; i < r1.size(); ++i) r[shift + i] -= c * r1[i];
                    detail::poly_trim(r);
                }
            }
            detail::Poly qs = detail::poly_mul(q, s1);
            detail::Poly s2 = s0;
            if (s2.size() < qs.size()) s2.resize(qs.size());
            for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
            detail::poly_trim(s2);
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
    }
    Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

    bool operator==(const Cyclotomic& o) const { return m_ == o.m_ && coeffs_ == o.coeffs_; }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    /// Same field element expressed in Q(zeta_m_new); m_new must be a multiple of m.
    Cyclotomic embed(long m_new) const {
        if (m_new % m_ != 0)
            throw NotAMultipleError("cyc_embed: " + std::to_string(m_new) +
                                    " is not a multiple of " + std::to_string(m_));
        long k = m_new / m_;
        detail::Poly p;
        if (!coeffs_.empty()) {
            p.assign((coeffs_.size() - 1) * k + 1, Rational(0));
            for (size_t i = 0; i < coeffs_.size(); ++i) p[i * k] = coeffs_[i];
        }
        return from_coeffs(m_new, std::move(p));
    }

    /// Numerical value at zeta_m = exp(2*pi*i/m); test oracle only.
    std::complex<double> to_complex() const {
        std::complex<double> z(0.0, 0.0);
        const double two_pi = 6.283185307179586476925286766559;
        for (size_t k = 0; k < coeffs_.size(); ++k) {
            double ang = two_pi * double(k) / double(m_);
            z += coeffs_[k].to_double() * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        return z;
    }

private:
    static long check_order(long m) {
        if (m < 1) throw std::domain_error("Cyclotomic: order must be positive");
        return m;
    }
    void require_same_order(const Cyclotomic& o) const {
        if (m_ != o.m_)
            throw MixedOrderError("cyc_arith: mixed orders " + std::to_string(m_) + " and " +
                                  std::to_string(o.m_));
    }

    long m_;
    detail::Poly coeffs_; // reduced mod Phi_m, trailing zeros trimmed
};

enum class CycOp { add, sub, mul };

/// Dispatch wrapper used by the CLI layer; both operands must share an order.
inline Cyclotomic cyc_arith(const Cyclotomic& a, const Cyclotomic& b, CycOp op) {
    switch (op) {
        case CycOp::add: return a + b;
        case CycOp::sub: return a - b;
        default: return a * b;
    }
}

inline Cyclotomic cyc_embed(const Cyclotomic& a, long m_new) { return a.embed(m_new); }

inline Cyclotomic root_of_unity(long m, long k) { return Cyclotomic::root_of_unity(m, k); }

} // namespace vcwb
