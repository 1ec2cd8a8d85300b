#include "twodist/quad.hpp"

#include <cctype>
#include <cmath>
#include <cstddef>

namespace twodist {

namespace {

// Primes above this bound are not searched for; a remaining cofactor is
// either a perfect square (extracted) or treated as square-free. Radicands
// in this library come from small discriminants, so the bound is generous.
constexpr unsigned long kTrialBound = 1u << 20;

}  // namespace

std::pair<mpz_class, mpz_class> squarefree_decompose(mpz_class n) {
    mpz_class root = 1, sf = 1;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_class s;
        mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
        return {s, mpz_class(1)};
    }
    unsigned long p = 2;
    while (p <= kTrialBound) {
        mpz_class pp;
        mpz_ui_pow_ui(pp.get_mpz_t(), p, 2);
        if (pp > n) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            unsigned long e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
                ++e;
            }
            mpz_class pk;
            mpz_ui_pow_ui(pk.get_mpz_t(), p, e / 2);
            root *= pk;
            if (e % 2 == 1) sf *= p;
        }
        p = (p == 2) ? 3 : p + 2;
    }
    if (n > 1) {
        if (mpz_perfect_square_p(n.get_mpz_t())) {
            mpz_class s;
            mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
            root *= s;
        } else {
            sf *= n;
        }
    }
    return {root, sf};
}

Quad Quad::with_radical(Rational a, Rational b, mpz_class d) {
    if (sgn(d) < 0) throw NegativeRadicand();
    if (b.is_zero() || d == 0) return Quad(std::move(a));
    auto [root, sf] = squarefree_decompose(std::move(d));
    b = b * Rational(root);
    if (sf == 1) return Quad(a + b);
    return raw(std::move(a), std::move(b), sf);
}

Quad Quad::sqrt_of(const Rational& r) {
    if (r.sign() < 0) throw NegativeRadicand();
    if (r.is_zero()) return Quad();
    auto [root, sf] = squarefree_decompose(r.num() * r.den());
    Rational coeff(root, r.den());
    if (sf == 1) return Quad(coeff);
    return raw(Rational(), coeff, sf);
}

int Quad::sign() const {
    if (d_ == 0) return a_.sign();
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with b^2 d. Equality cannot occur for a
    // square-free d > 1 with a, b nonzero.
    const Rational lhs = a_.squared();
    const Rational rhs = b_.squared() * Rational(d_);
    if (lhs == rhs) return 0;
    const int dominant = (lhs > rhs) ? sa : sb;
    return dominant;
}

double Quad::to_double() const {
    double v = a_.to_double();
    if (d_ != 0) v += b_.to_double() * std::sqrt(mpz_class(d_).get_d());
    return v;
}

const mpz_class& Quad::common_radicand(const Quad& x, const Quad& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
    throw MixedRadicands(x.d_.get_str(), y.d_.get_str());
}

Quad operator+(const Quad& x, const Quad& y) {
    const mpz_class& d = Quad::common_radicand(x, y);
    return Quad::raw(x.a_ + y.a_, x.b_ + y.b_, d);
}

Quad operator-(const Quad& x, const Quad& y) {
    const mpz_class& d = Quad::common_radicand(x, y);
    return Quad::raw(x.a_ - y.a_, x.b_ - y.b_, d);
}

Quad operator*(const Quad& x, const Quad& y) {
    const mpz_class& d = Quad::common_radicand(x, y);
    // (a + b sqrt(d))(a' + b' sqrt(d)) = aa' + bb'd + (ab' + a'b) sqrt(d)
    Rational rat = x.a_ * y.a_;
    if (!x.b_.is_zero() && !y.b_.is_zero()) rat += x.b_ * y.b_ * Rational(d);
    Rational rad = x.a_ * y.b_ + y.a_ * x.b_;
    return Quad::raw(std::move(rat), std::move(rad), d);
}

Quad operator/(const Quad& x, const Quad& y) {
    if (y.is_zero()) throw DivisionByZero();
    if (y.is_rational()) return Quad::raw(x.a_ / y.a_, x.b_ / y.a_, x.d_);
    const mpz_class& d = Quad::common_radicand(x, y);
    // Rationalize by the conjugate; the norm a'^2 - b'^2 d is a nonzero
    // rational whenever y != 0.
    const Rational norm = y.a_.squared() - y.b_.squared() * Rational(d);
    const Quad conj = Quad::raw(y.a_, -y.b_, d);
    Quad num = x * conj;
    return Quad::raw(num.a_ / norm, num.b_ / norm, num.d_);
}

std::string Quad::str() const {
    if (d_ == 0) return a_.str();
    std::string radpart = b_.abs().str() + "*sqrt(" + d_.get_str() + ")";
    if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + radpart;
    return a_.str() + (b_.sign() < 0 ? "-" : "+") + radpart;
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "' " + what, pos);
    }

    mpz_class digits() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected digits", pos);
        return mpz_class(s.substr(start, pos - start), 10);
    }

    // rat := ['+'|'-'] digits ['/' digits]
    Rational rat() {
        skip_ws();
        int sig = 1;
        if (accept('-')) sig = -1;
        else accept('+');
        mpz_class n = digits();
        if (sig < 0) n = -n;
        if (accept('/')) {
            mpz_class d = digits();
            if (d == 0) throw ParseError("zero denominator", pos);
            return Rational(n, d);
        }
        return Rational(n);
    }

    bool accept_word(const char* w) {
        skip_ws();
        std::size_t i = 0;
        while (w[i] != '\0') {
            if (pos + i >= s.size() || s[pos + i] != w[i]) return false;
            ++i;
        }
        pos += i;
        return true;
    }
};

}  // namespace

Quad Quad::parse(const std::string& text) {
    Cursor c{text};
    const Rational first = c.rat();

    // Optional "*sqrt(d)" attached to the first rational.
    if (c.accept('*')) {
        if (!c.accept_word("sqrt")) throw ParseError("expected sqrt", c.pos);
        c.expect('(', "after sqrt");
        mpz_class d = c.digits();
        c.expect(')', "closing sqrt");
        if (!c.eof()) throw ParseError("trailing input", c.pos);
        return with_radical(Rational(), first, d);
    }

    // Optional "+/- rat*sqrt(d)" tail.
    c.skip_ws();
    if (c.pos < c.s.size() && (c.s[c.pos] == '+' || c.s[c.pos] == '-')) {
        const int sig = (c.s[c.pos] == '-') ? -1 : 1;
        ++c.pos;
        Rational coeff = c.rat();
        if (sig < 0) coeff = -coeff;
        c.expect('*', "between coefficient and sqrt");
        if (!c.accept_word("sqrt")) throw ParseError("expected sqrt", c.pos);
        c.expect('(', "after sqrt");
        mpz_class d = c.digits();
        c.expect(')', "closing sqrt");
        if (!c.eof()) throw ParseError("trailing input", c.pos);
        return with_radical(first, coeff, d);
    }

    if (!c.eof()) throw ParseError("trailing input", c.pos);
    return Quad(first);
}

}  // namespace twodist
