#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "twodist/errors.hpp"
#include "twodist/rational.hpp"

namespace twodist {

/// Decomposes n > 0 as root^2 * squarefree. Trial division, with a
/// perfect-square fallback for cofactors beyond the trial bound.
std::pair<mpz_class, mpz_class> squarefree_decompose(mpz_class n);

/// Exact element a + b*sqrt(d) of the quadratic field Q(sqrt(d)).
///
/// Canonical form: d is square-free and never 1; rationals carry d = 0.
/// All comparisons are exact; no floating point is involved anywhere.
class Quad {
public:
    Quad() = default;                                  // 0
    Quad(long n) : a_(n) {}                            // NOLINT: implicit by design
    Quad(Rational r) : a_(std::move(r)) {}             // NOLINT: implicit by design

    /// Builds a + b*sqrt(d) from raw parts, canonicalizing the radicand.
    static Quad with_radical(Rational a, Rational b, mpz_class d);

    /// Exact square root of a non-negative rational, as p/q * sqrt(d).
    static Quad sqrt_of(const Rational& r);

    const Rational& rat_part() const { return a_; }
    const Rational& rad_coeff() const { return b_; }
    const mpz_class& radicand() const { return d_; }

    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return d_ == 0 && a_.is_zero(); }

    /// The value as a Rational; only valid for rational elements.
    const Rational& rational() const {
        if (!is_rational()) throw Error("quadratic scalar " + str() + " is not rational");
        return a_;
    }

    /// Exact sign of a + b*sqrt(d): case analysis on the signs of a and b,
    /// resolving the mixed case by comparing a^2 with b^2 d.
    int sign() const;

    double to_double() const;

    Quad operator-() const { return raw(-a_, -b_, d_); }
    friend Quad operator+(const Quad& x, const Quad& y);
    friend Quad operator-(const Quad& x, const Quad& y);
    friend Quad operator*(const Quad& x, const Quad& y);
    friend Quad operator/(const Quad& x, const Quad& y);

    Quad squared() const { return *this * *this; }
    Quad abs() const { return sign() < 0 ? -*this : *this; }

    friend bool operator==(const Quad& x, const Quad& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }

    /// Sign of x - y; requires compatible radicands.
    static int compare(const Quad& x, const Quad& y) { return (x - y).sign(); }

    friend bool operator<(const Quad& x, const Quad& y) { return compare(x, y) < 0; }
    friend bool operator<=(const Quad& x, const Quad& y) { return compare(x, y) <= 0; }
    friend bool operator>(const Quad& x, const Quad& y) { return compare(x, y) > 0; }
    friend bool operator>=(const Quad& x, const Quad& y) { return compare(x, y) >= 0; }

    /// Canonical text form: "a", "b*sqrt(d)" or "a+b*sqrt(d)" with
    /// rationals written as n or n/d.
    std::string str() const;

    /// Inverse of str(); accepts the grammar  rat | [rat +/-] rat*sqrt(uint).
    static Quad parse(const std::string& text);

private:
    Rational a_, b_;
    mpz_class d_{0};

    // Trusted constructor: d already square-free, only b==0 renormalized.
    static Quad raw(Rational a, Rational b, const mpz_class& d) {
        Quad q;
        q.a_ = std::move(a);
        if (!b.is_zero() && d != 0) {
            q.b_ = std::move(b);
            q.d_ = d;
        }
        return q;
    }

    // Shared radicand of two operands, or throws MixedRadicands.
    static const mpz_class& common_radicand(const Quad& x, const Quad& y);
};

}  // namespace twodist
