#include "twodist/construct.hpp"

#include <stdexcept>
#include <utility>

#include "twodist/design.hpp"
#include "twodist/errors.hpp"

namespace twodist {

namespace {

Rational rat(std::size_t v) { return Rational(static_cast<long>(v)); }

const TwoDistanceProfile& require_regular_two_distance(const Certificate& cert) {
    if (!cert.is_two_distance || !cert.is_regular || !cert.profile)
        throw Error("operation requires a regular two-distance Gram matrix");
    return *cert.profile;
}

// Common ETF entry check: tight, values exactly {+a, -a}, m > n+1, and the
// angle matches the Welch bound sqrt((m-n)/(n(m-1))).
Quad require_etf(const GramMatrix& g, const Certificate& cert) {
    if (!cert.is_tight) throw NotETF("not tight");
    if (!cert.is_two_distance) throw NotETF("off-diagonal does not take exactly two values");
    const std::size_t m = cert.m, n = cert.rank;
    Quad alpha;
    for (std::size_t j = 1; j < m && alpha.is_zero(); ++j) alpha = g.at(0, j).abs();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (g.at(i, j) != alpha && g.at(i, j) != -alpha)
                throw NotETF("angles are not +/-" + alpha.str());
    if (m <= n + 1) throw NotETF("needs m > n+1");
    if (alpha != Quad::sqrt_of((rat(m) - rat(n)) / (rat(n) * rat(m - 1))))
        throw NotETF("angle " + alpha.str() + " is not the Welch bound");
    return alpha;
}

// +1/-1 conjugation making row `pivot` all +alpha.
std::vector<int> normalize_signs(const GramMatrix& g, std::size_t pivot, const Quad& alpha) {
    std::vector<int> eps(g.m(), 1);
    for (std::size_t i = 0; i < g.m(); ++i) {
        if (i == pivot) continue;
        if (g.at(pivot, i) == alpha) eps[i] = 1;
        else if (g.at(pivot, i) == -alpha) eps[i] = -1;
        else throw std::logic_error("sign normalization hit a non +/-alpha entry");
    }
    return eps;
}

}  // namespace

UnnormalizedGram UnnormalizedGram::certify(Matrix entries) {
    const std::size_t n = entries.size();
    if (n == 0) throw Error("empty matrix");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (entries.at(i, j) != entries.at(j, i)) throw NotSymmetric(i, j);
    PsdReport psd = psd_rank(entries);
    if (!psd.is_psd)
        throw NotPSD(psd.fail_i, psd.fail_j,
                     psd.fail_i == psd.fail_j ? "negative pivot"
                                              : "zero diagonal with nonzero residual");
    return UnnormalizedGram(std::move(entries), psd.rank);
}

GramMatrix project_to_balanced(const GramMatrix& g) {
    const Certificate cert = analyze(g);
    const TwoDistanceProfile& p = require_regular_two_distance(cert);
    const Quad& c = p.grammian_constant;
    if (c.is_zero()) throw AlreadyBalanced();

    const std::size_t m = g.m();
    const Quad scale = Quad(rat(m)) / (Quad(rat(m)) - c);
    const Quad shift = c / Quad(rat(m));

    Matrix out(m);
    for (std::size_t i = 0; i < m; ++i) {
        out.at(i, i) = Quad(1);
        for (std::size_t j = i + 1; j < m; ++j) {
            Quad e = scale * (g.at(i, j) - shift);
            if (e == Quad(1)) throw VectorsCollide(i, j);
            out.at(i, j) = e;
            out.at(j, i) = std::move(e);
        }
    }
    return GramMatrix::certify(std::move(out));
}

GramMatrix naimark(const GramMatrix& g) {
    const Certificate cert = analyze(g);
    if (!cert.is_tight) throw NotTight();
    const std::size_t m = g.m(), n = cert.rank;
    if (n == m) throw FullRank();

    const Quad scale = Quad(-(rat(n) / rat(m - n)));
    Matrix out(m);
    for (std::size_t i = 0; i < m; ++i) {
        out.at(i, i) = Quad(1);
        for (std::size_t j = i + 1; j < m; ++j) {
            out.at(i, j) = scale * g.at(i, j);
            out.at(j, i) = out.at(i, j);
        }
    }
    return GramMatrix::certify(std::move(out));
}

ComplementResult complement_transform(const GramMatrix& g) {
    const Certificate cert = analyze(g);
    if (!cert.is_tight) throw NotTight();
    const TwoDistanceProfile& p = require_regular_two_distance(cert);
    const std::size_t m = cert.m, n = cert.rank;
    const Quad& c = p.grammian_constant;
    const Rational bound = rat(m) / rat(n);

    const bool balanced = c.is_zero();
    if (!balanced && c != Quad(bound)) throw BadGrammianConstant(c.str());

    const Quad gamma = balanced ? Quad(Rational(-2) / rat(m - 1))
                                : Quad((Rational(2) * (rat(m) - rat(n))) / (rat(n) * rat(m - 1)));

    Matrix out(m);
    for (std::size_t i = 0; i < m; ++i) {
        out.at(i, i) = Quad(1);
        for (std::size_t j = i + 1; j < m; ++j) {
            out.at(i, j) = gamma - g.at(i, j);
            out.at(j, i) = out.at(i, j);
        }
    }

    // The three algebraic identities the companion matrix must satisfy.
    const Quad ka = Quad(rat(p.k_alpha)), kb = Quad(rat(p.k_beta));
    const Quad ga = gamma - p.alpha, gb = gamma - p.beta;
    const Quad row = Quad(1) + ka * ga + kb * gb;
    if (row != (balanced ? Quad(0) : Quad(bound)))
        throw std::logic_error("companion row-sum identity failed");
    if (Quad(1) + ka * ga.squared() + kb * gb.squared() != Quad(bound))
        throw std::logic_error("companion sum-of-squares identity failed");

    const bool tight_result = balanced ? (m == 2 * n + 1) : (m + 1 == 2 * n);
    return ComplementResult{std::move(out), gamma, tight_result};
}

GramMatrix translate(const GramMatrix& g, const Quad& t) {
    const Certificate cert = analyze(g);
    const TwoDistanceProfile& p = require_regular_two_distance(cert);
    const Quad& c = p.grammian_constant;
    if (c.sign() <= 0) throw BalancedInput();

    const std::size_t m = g.m();
    const Quad shift = Quad(2) * t * c + t.squared() * Quad(rat(m)) * c;
    const Quad denom = Quad(1) + shift;
    if (denom.sign() <= 0) throw DegenerateDenominator(denom.str());

    Matrix out(m);
    for (std::size_t i = 0; i < m; ++i) {
        out.at(i, i) = Quad(1);
        for (std::size_t j = i + 1; j < m; ++j) {
            out.at(i, j) = (g.at(i, j) + shift) / denom;
            out.at(j, i) = out.at(i, j);
        }
    }
    return GramMatrix::certify(std::move(out));
}

namespace {

GramMatrix lift_impl(const GramMatrix& g, const Quad& t2) {
    if (t2.sign() <= 0 || Quad::compare(t2, Quad(1)) > 0)
        throw TargetOutOfRange("t^2 = " + t2.str() + " outside (0, 1]");
    const std::size_t m = g.m();
    const Quad rest = Quad(1) - t2;
    Matrix out(m);
    for (std::size_t i = 0; i < m; ++i) {
        out.at(i, i) = Quad(1);
        for (std::size_t j = i + 1; j < m; ++j) {
            out.at(i, j) = t2 * g.at(i, j) + rest;
            out.at(j, i) = out.at(i, j);
        }
    }
    return GramMatrix::certify(std::move(out));
}

}  // namespace

GramMatrix lift(const GramMatrix& g, const Rational& t_squared) {
    return lift_impl(g, Quad(t_squared));
}

GramMatrix lift_to_angle(const GramMatrix& g, const Quad& alpha_target) {
    const Certificate cert = analyze(g);
    const TwoDistanceProfile& p = require_regular_two_distance(cert);
    const Quad& src = p.beta;  // smaller angle; f(t) sweeps [src, 1]
    if (Quad::compare(alpha_target, src) < 0 || Quad::compare(alpha_target, Quad(1)) >= 0)
        throw TargetOutOfRange("target angle " + alpha_target.str() + " outside [" + src.str() +
                               ", 1)");
    // Solve t^2 src + 1 - t^2 = target.
    const Quad t2 = (Quad(1) - alpha_target) / (Quad(1) - src);
    return lift_impl(g, t2);
}

GramMatrix lift_to_constant(const GramMatrix& g, const Rational& c_target) {
    const Certificate cert = analyze(g);
    if (!cert.is_regular || !cert.row_sum)
        throw Error("lift_to_constant requires a regular Gram matrix");
    const Quad& c = *cert.row_sum;
    const std::size_t m = g.m();
    const Quad target(c_target);
    if (Quad::compare(target, c) < 0 || c_target >= rat(m))
        throw TargetOutOfRange("target constant " + c_target.str() + " outside [" + c.str() +
                               ", " + rat(m).str() + ")");
    const Quad t2 = (Quad(rat(m)) - target) / (Quad(rat(m)) - c);
    return lift_impl(g, t2);
}

NeighborSubsetResult etf_neighbor_subset(const GramMatrix& g, std::size_t pivot) {
    const Certificate cert = analyze(g);
    const Quad alpha = require_etf(g, cert);
    const std::size_t m = g.m(), n = cert.rank;
    if (pivot >= m) throw Error("pivot index out of range");

    const std::vector<int> eps = normalize_signs(g, pivot, alpha);

    std::vector<std::size_t> keep;
    keep.reserve(m - 1);
    for (std::size_t i = 0; i < m; ++i)
        if (i != pivot) keep.push_back(i);

    Matrix out(m - 1);
    for (std::size_t i = 0; i < m - 1; ++i) {
        out.at(i, i) = Quad(1);
        for (std::size_t j = i + 1; j < m - 1; ++j) {
            Quad e = g.at(keep[i], keep[j]);
            if (eps[keep[i]] * eps[keep[j]] < 0) e = -e;
            out.at(i, j) = e;
            out.at(j, i) = std::move(e);
        }
    }

    GramMatrix sub = GramMatrix::certify(std::move(out));
    const Certificate sub_cert = analyze(sub);
    if (!sub_cert.is_two_distance || !sub_cert.is_regular || !sub_cert.profile)
        throw std::logic_error("ETF neighbor subset failed to be regular two-distance");

    // k_alpha = m/2 + (m-2n)/(2n alpha); the counted multiplicity must match.
    const Quad ka_formula = Quad(rat(m) / Rational(2)) +
                            Quad(rat(m) - Rational(2) * rat(n)) /
                                (Quad(Rational(2) * rat(n)) * alpha);
    if (!ka_formula.is_rational() || Quad(rat(sub_cert.profile->k_alpha + 1)) != ka_formula)
        throw std::logic_error("ETF neighbor multiplicity disagrees with closed form");
    if (sub_cert.is_balanced)
        throw std::logic_error("ETF neighbor subset is balanced, contradicting theory");

    return NeighborSubsetResult{std::move(sub), *sub_cert.profile};
}

GramMatrix etf_projection(const GramMatrix& g, std::size_t pivot) {
    const Certificate cert = analyze(g);
    const Quad alpha = require_etf(g, cert);
    const std::size_t m = g.m();
    if (pivot >= m) throw Error("pivot index out of range");

    const std::vector<int> eps = normalize_signs(g, pivot, alpha);
    const Quad a2 = alpha.squared();
    const Quad denom = Quad(1) - a2;

    std::vector<std::size_t> keep;
    keep.reserve(m - 1);
    for (std::size_t i = 0; i < m; ++i)
        if (i != pivot) keep.push_back(i);

    Matrix out(m - 1);
    for (std::size_t i = 0; i < m - 1; ++i) {
        out.at(i, i) = Quad(1);
        for (std::size_t j = i + 1; j < m - 1; ++j) {
            Quad e = g.at(keep[i], keep[j]);
            if (eps[keep[i]] * eps[keep[j]] < 0) e = -e;
            out.at(i, j) = (e - a2) / denom;
            out.at(j, i) = out.at(i, j);
        }
    }
    return GramMatrix::certify(std::move(out));
}

EquiangularLiftResult equiangular_lift(const GramMatrix& g) {
    const Certificate cert = analyze(g);
    if (!cert.is_two_distance) throw Error("equiangular lift requires a two-distance Gram matrix");

    // The two distinct off-diagonal values, larger first.
    Quad alpha, beta;
    bool have_first = false, have_second = false;
    for (std::size_t i = 0; i < g.m() && !have_second; ++i)
        for (std::size_t j = i + 1; j < g.m() && !have_second; ++j) {
            const Quad& v = g.at(i, j);
            if (!have_first) {
                alpha = v;
                have_first = true;
            } else if (v != alpha) {
                beta = v;
                have_second = true;
            }
        }
    if (Quad::compare(alpha, beta) < 0) std::swap(alpha, beta);

    const Quad sum = alpha + beta;
    if (sum.sign() >= 0) throw AngleSumNotNegative();

    const Quad t2 = Quad(2) / (Quad(2) - sum);
    const Quad rest = Quad(1) - t2;
    const std::size_t m = g.m();
    Matrix out(m);
    for (std::size_t i = 0; i < m; ++i) {
        out.at(i, i) = Quad(1);
        for (std::size_t j = i + 1; j < m; ++j) {
            out.at(i, j) = t2 * g.at(i, j) + rest;
            out.at(j, i) = out.at(i, j);
        }
    }

    const Quad gamma = (alpha - beta) / (Quad(2) - sum);
    GramMatrix lifted = GramMatrix::certify(std::move(out));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (lifted.at(i, j) != gamma && lifted.at(i, j) != -gamma)
                throw std::logic_error("equiangular lift produced a non +/-gamma value");
    return EquiangularLiftResult{std::move(lifted), gamma.abs(), t2};
}

EquiangularTranslateResult equiangular_translate(const GramMatrix& g, RootChoice root) {
    const Certificate cert = analyze(g);
    const TwoDistanceProfile& p = require_regular_two_distance(cert);
    const Quad& c = p.grammian_constant;
    if (c.sign() <= 0) throw BalancedInput();

    const std::size_t m = g.m();
    const Quad sum = p.alpha + p.beta;
    if (Quad::compare(sum, Quad(2) * c / Quad(rat(m))) > 0) throw ConditionViolated();

    // Equal translated angles with opposite signs: 2mc t^2 + 4c t + (a+b) = 0.
    const Quad a2 = Quad(2) * Quad(rat(m)) * c;
    const Quad a1 = Quad(4) * c;
    const Quad disc = a1.squared() - Quad(4) * a2 * sum;
    if (!disc.is_rational())
        throw Error("translation discriminant " + disc.str() + " is not rational");
    const Quad sq = Quad::sqrt_of(disc.rational());

    const Quad t_plus = (-a1 + sq) / (Quad(2) * a2);
    const Quad t_minus = (-a1 - sq) / (Quad(2) * a2);
    const bool plus_smaller = Quad::compare(t_plus.abs(), t_minus.abs()) <= 0;
    const Quad t = ((root == RootChoice::SmallerAbs) == plus_smaller) ? t_plus : t_minus;

    GramMatrix translated = translate(g, t);
    const Quad gamma = (p.alpha - p.beta) / (Quad(2) - sum);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (translated.at(i, j) != gamma && translated.at(i, j) != -gamma)
                throw std::logic_error("equiangular translate produced a non +/-gamma value");
    return EquiangularTranslateResult{std::move(translated), gamma.abs(), t};
}

UnnormalizedGram bibd_sum_gram(const GramMatrix& g, const BlockDesign& design) {
    if (design.v != g.m()) throw SizeMismatch(g.m(), design.v);
    const std::size_t b = design.b;

    Matrix out(b);
    for (std::size_t bi = 0; bi < b; ++bi)
        for (std::size_t bj = bi; bj < b; ++bj) {
            Quad s;
            for (std::size_t i : design.blocks[bi])
                for (std::size_t j : design.blocks[bj]) s = s + g.at(i, j);
            out.at(bi, bj) = s;
            out.at(bj, bi) = std::move(s);
        }

    UnnormalizedGram y = UnnormalizedGram::certify(std::move(out));

    const Certificate cert = analyze(g);
    if (cert.is_tight && cert.is_balanced) {
        // Frame operator scales by (r - lambda): Y^2 = (r-lambda) A Y exactly.
        const Quad scale =
            Quad((rat(design.r) - rat(design.lambda)) * (rat(g.m()) / rat(cert.rank)));
        for (std::size_t i = 0; i < b; ++i) {
            const std::vector<Quad> row = y.entries().square_row(i);
            for (std::size_t j = 0; j < b; ++j)
                if (row[j] != scale * y.at(i, j))
                    throw std::logic_error("block-sum Gram violates (r-lambda)A scaling");
        }
    }
    return y;
}

}  // namespace twodist
