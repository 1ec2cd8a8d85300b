#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "twodist/errors.hpp"

namespace twodist {

/// Exact rational number. Always stored in lowest terms with positive
/// denominator; zero is 0/1. Backed by GMP so 176x176 eliminations cannot
/// overflow.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(long n, long d) {
        if (d == 0) throw DivisionByZero();
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw DivisionByZero();
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    static Rational from_mpq(mpq_class q) {
        q.canonicalize();
        Rational r;
        r.v_ = std::move(q);
        return r;
    }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_nonneg_integer() const { return is_integer() && sign() >= 0; }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    Rational abs() const { return from_mpq(::abs(v_)); }
    Rational squared() const { return from_mpq(v_ * v_); }
    Rational inv() const {
        if (is_zero()) throw DivisionByZero();
        return from_mpq(1 / v_);
    }

    double to_double() const { return v_.get_d(); }
    std::string str() const { return v_.get_str(); }

    Rational operator-() const { return from_mpq(-v_); }

    friend Rational operator+(const Rational& a, const Rational& b) { return from_mpq(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return from_mpq(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return from_mpq(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionByZero();
        return from_mpq(a.v_ / b.v_);
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

private:
    mpq_class v_;
};

}  // namespace twodist
