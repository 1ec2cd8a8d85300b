#include "twodist/gram.hpp"

#include <algorithm>
#include <stdexcept>

#include "twodist/errors.hpp"

namespace twodist {

namespace {

Rational rat(std::size_t v) { return Rational(static_cast<long>(v)); }

bool is_odd_square(std::size_t v) {
    std::size_t r = 0;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r * r == v && r % 2 == 1;
}

}  // namespace

GramMatrix GramMatrix::certify(Matrix entries) {
    const std::size_t n = entries.size();
    if (n == 0) throw Error("empty Gram matrix");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (entries.at(i, j) != entries.at(j, i)) throw NotSymmetric(i, j);
    for (std::size_t i = 0; i < n; ++i)
        if (entries.at(i, i) != Quad(1)) throw NotUnitDiagonal(i);
    mpz_class d = entries.shared_radicand();
    PsdReport psd = psd_rank(entries);
    if (!psd.is_psd) {
        const bool neg_pivot = psd.fail_i == psd.fail_j;
        throw NotPSD(psd.fail_i, psd.fail_j,
                     neg_pivot ? "negative pivot" : "zero diagonal with nonzero residual");
    }
    return GramMatrix(std::move(entries), std::move(psd), std::move(d));
}

const BoundFlag* Certificate::flag(const std::string& name) const {
    for (const BoundFlag& f : bound_flags)
        if (f.name == name) return &f;
    return nullptr;
}

bool Certificate::all_bounds_hold() const {
    for (const BoundFlag& f : bound_flags)
        if (f.applicable && !f.pass) return false;
    return true;
}

Certificate analyze(const GramMatrix& g) {
    const std::size_t m = g.m();
    Certificate cert;
    cert.m = m;
    cert.rank = g.rank();

    // Distinct off-diagonal values (capped; only 0, 1 or 2 matter).
    std::vector<Quad> values;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const Quad& v = g.at(i, j);
            if (v == Quad(1)) cert.has_duplicate_vectors = true;
            if (std::find(values.begin(), values.end(), v) == values.end() && values.size() < 9)
                values.push_back(v);
        }
    cert.is_two_distance = values.size() == 2;

    // Row sums; balanced iff every row sums to zero.
    std::vector<Quad> sums(m);
    bool constant_sum = true;
    bool all_zero = true;
    for (std::size_t i = 0; i < m; ++i) {
        sums[i] = g.entries().row_sum(i);
        if (sums[i] != sums[0]) constant_sum = false;
        if (!sums[i].is_zero()) all_zero = false;
    }
    cert.is_balanced = all_zero;
    if (constant_sum) cert.row_sum = sums[0];

    // Regularity, counted two independent ways when two-distance.
    bool regular = false;
    std::size_t k_alpha = 0, k_beta = 0;
    if (values.size() <= 1) {
        regular = constant_sum;
    } else if (values.size() == 2) {
        // Order: alpha is the larger value.
        Quad alpha = values[0], beta = values[1];
        if (Quad::compare(alpha, beta) < 0) std::swap(alpha, beta);

        bool count_regular = true;
        std::size_t first_count = 0;
        for (std::size_t i = 0; i < m && count_regular; ++i) {
            std::size_t cnt = 0;
            for (std::size_t j = 0; j < m; ++j)
                if (j != i && g.at(i, j) == alpha) ++cnt;
            if (i == 0) first_count = cnt;
            else if (cnt != first_count) count_regular = false;
        }
        if (count_regular != constant_sum)
            throw std::logic_error("regularity checks disagree: per-row counts vs row sums");
        regular = count_regular;
        if (regular) {
            k_alpha = first_count;
            k_beta = m - 1 - k_alpha;
            TwoDistanceProfile p;
            p.alpha = alpha;
            p.beta = beta;
            p.k_alpha = k_alpha;
            p.k_beta = k_beta;
            p.grammian_constant = sums[0];
            cert.profile = p;
        }
    }
    cert.is_regular = regular;

    // Frame potential, exact.
    Quad fp = Quad(rat(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) fp = fp + Quad(2) * g.at(i, j).squared();
    cert.frame_potential = fp;

    // Tightness two ways: FP = m^2/rank and G^2 = (m/rank) G entrywise.
    const Rational bound = rat(m) / rat(cert.rank);
    const bool tight_fp = fp == Quad(rat(m) * rat(m) / rat(cert.rank));
    bool tight_sq = true;
    for (std::size_t i = 0; i < m && tight_sq; ++i) {
        std::vector<Quad> row = g.entries().square_row(i);
        for (std::size_t j = 0; j < m; ++j)
            if (row[j] != Quad(bound) * g.at(i, j)) {
                tight_sq = false;
                break;
            }
    }
    if (tight_fp != tight_sq)
        throw std::logic_error("tightness checks disagree: frame potential vs G^2 identity");
    cert.is_tight = tight_sq;
    if (cert.is_tight) cert.tight_bound = bound;

    if (cert.has_duplicate_vectors)
        cert.classification_notes.push_back("duplicate vectors present (inner product 1)");

    // ---- structural bounds; violations are reported, never rejected ----
    const std::size_t n = cert.rank;
    const bool two = cert.is_two_distance;
    const bool distinct = !cert.has_duplicate_vectors;

    auto add_flag = [&cert](std::string name, bool applicable, bool pass) {
        cert.bound_flags.push_back({std::move(name), applicable, applicable ? pass : true});
    };

    bool all_neg = !values.empty(), all_nonpos = !values.empty(), all_nonneg = !values.empty();
    for (const Quad& v : values) {
        const int s = v.sign();
        if (s >= 0) all_neg = false;
        if (s > 0) all_nonpos = false;
        if (s < 0) all_nonneg = false;
    }

    add_flag("negative_angles_cardinality", values.size() <= 2 && all_neg, m <= n + 1);
    add_flag("nonpositive_angles_cardinality", values.size() <= 2 && all_nonpos, m <= 2 * n);
    add_flag("harmonic_bound", two && distinct, 2 * m <= n * (n + 3));
    add_flag("known_two_distance_maximum", two && distinct && n >= 2,
             n < 2 || m <= two_distance_max_bound(n).second);

    {
        const bool applicable = two && regular && distinct && all_nonneg && n >= 7;
        const bool exceptional = is_odd_square(n + 2);
        const bool pass = exceptional ? (2 * m <= (n - 1) * (n + 2)) : (2 * m <= (n - 1) * n);
        add_flag("nonnegative_angles_bound", applicable, pass);
    }

    {
        // Large non-balanced sets cannot exist: beyond (n-1)n/2 vectors
        // (or (n-1)(n+2)/2 at the exceptional dimensions) the set must be
        // balanced.
        const bool exceptional = is_odd_square(n + 2);
        const std::size_t threshold = exceptional ? (n - 1) * (n + 2) / 2 : (n - 1) * n / 2;
        add_flag("large_cardinality_balanced", two && regular && distinct && n >= 7 && m > threshold,
                 cert.is_balanced);
    }

    if (cert.profile) {
        const TwoDistanceProfile& p = *cert.profile;
        const Quad c = p.grammian_constant;
        const bool c_dichotomy = c.is_zero() || c == Quad(bound);

        add_flag("tight_angle_sign", (cert.is_tight || c_dichotomy) && m > n + 1,
                 (p.alpha * p.beta).sign() <= 0);
        add_flag("odd_multiplicity_parity", m % 2 == 1,
                 p.k_alpha % 2 == 0 && p.k_beta % 2 == 0);
        add_flag("tight_grammian_dichotomy", cert.is_tight && p.alpha != -p.beta, c_dichotomy);

        const bool has_zero = p.alpha.is_zero() || p.beta.is_zero();
        if (cert.is_tight && has_zero) {
            const Quad other = p.alpha.is_zero() ? p.beta : p.alpha;
            const std::size_t k_other = p.alpha.is_zero() ? p.k_beta : p.k_alpha;
            const bool onb_copies = other == Quad(1);
            const bool naimark_onb = m > n && other == Quad(-(rat(m - n) / rat(n)));
            add_flag("zero_angle_classification", true, onb_copies || naimark_onb);
            if (onb_copies)
                cert.classification_notes.push_back(
                    std::to_string(k_other + 1) + " copies of an orthonormal basis of rank " +
                    std::to_string(n));
            else if (naimark_onb)
                cert.classification_notes.push_back(
                    "Naimark complement is " + std::to_string(k_other + 1) +
                    " copies of an orthonormal basis of rank " + std::to_string(m - n));
        } else {
            add_flag("zero_angle_classification", false, true);
        }
    } else {
        add_flag("tight_angle_sign", false, true);
        add_flag("odd_multiplicity_parity", false, true);
        add_flag("tight_grammian_dichotomy", false, true);
        add_flag("zero_angle_classification", false, true);
    }

    return cert;
}

std::array<std::pair<Quad, Quad>, 2> solve_angle_systems(std::size_t m, std::size_t n,
                                                         std::size_t k_alpha, bool balanced) {
    if (m < 3 || k_alpha < 1 || k_alpha > m - 2)
        throw Error("k_alpha must lie in [1, m-2]");
    if (n == 0 || n >= m) throw Error("rank n must satisfy 0 < n < m");

    const std::size_t k_beta = m - k_alpha - 1;
    const Rational c0 = balanced ? Rational(0) : rat(m) / rat(n);
    const Rational ka = rat(k_alpha), kb = rat(k_beta);
    const Rational tightness = rat(m) / rat(n) - Rational(1);

    // Eliminating y from the linear equation leaves
    //   k_a (m-1) x^2 - 2 (c0-1) k_a x + (c0-1)^2 - k_b (m/n - 1) = 0.
    const Rational A = ka * rat(m - 1);
    const Rational B = Rational(-2) * (c0 - Rational(1)) * ka;
    const Rational C = (c0 - Rational(1)).squared() - kb * tightness;

    const Rational disc = B.squared() - Rational(4) * A * C;
    if (disc.sign() < 0) throw NoRealSolution();
    if (disc.is_zero()) throw DegenerateSystem();

    const Quad root = Quad::sqrt_of(disc);
    const Quad twoA = Quad(Rational(2) * A);
    const Quad x1 = (Quad(-B) + root) / twoA;
    const Quad x2 = (Quad(-B) - root) / twoA;
    auto y_of = [&](const Quad& x) { return (Quad(c0 - Rational(1)) - Quad(ka) * x) / Quad(kb); };
    return {std::make_pair(x1, y_of(x1)), std::make_pair(x2, y_of(x2))};
}

std::pair<std::size_t, std::size_t> two_distance_max_bound(std::size_t n) {
    if (n < 2) throw Error("two-distance bounds start at rank 2");
    switch (n) {
        case 2: return {5, 5};
        case 3: return {6, 6};
        case 4: return {10, 10};
        case 5: return {16, 16};
        case 6: return {27, 27};
        default: break;
    }
    const std::size_t base = n * (n + 1) / 2;
    if (is_odd_square(n + 3)) return {base, n * (n + 3) / 2};
    return {base, base};
}

std::size_t multiplicity_from_angles(std::size_t m, std::size_t n, const Quad& alpha,
                                     const Quad& beta) {
    const Quad denom = alpha.squared() - beta.squared();
    if (denom.is_zero()) throw Error("alpha^2 must differ from beta^2");
    const Quad num = Quad(rat(m) / rat(n) - Rational(1)) + Quad(Rational(1) - rat(m)) * beta.squared();
    const Quad k = num / denom;
    if (!k.is_rational() || !k.rational().is_integer())
        throw NonIntegralMultiplicity(k.str());
    const Rational kr = k.rational();
    if (kr.sign() < 0 || kr > rat(m - 1)) throw NonIntegralMultiplicity(k.str());
    return static_cast<std::size_t>(kr.num().get_si());
}

}  // namespace twodist
