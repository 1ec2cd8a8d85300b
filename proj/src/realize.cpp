#include "twodist/realize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "twodist/errors.hpp"

namespace twodist {

namespace {

// Cyclic Jacobi on a symmetric matrix (row-major, destroyed). Eigenvectors
// come back as columns of v. Converges when the off-diagonal norm falls
// below 1e-14 of the matrix norm.
void jacobi_eigen(std::vector<double>& a, std::size_t n, std::vector<double>& eig,
                  std::vector<double>& v) {
    v.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
    eig.assign(n, 0.0);
    if (n == 0) return;

    double norm = 0.0;
    for (double x : a) norm += x * x;
    norm = std::sqrt(norm);
    const double stop = 1e-14 * norm;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * a[p * n + q] * a[p * n + q];
        if (std::sqrt(off) <= stop) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (std::fabs(apq) <= 1e-300) continue;
                const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = a[p * n + p], aqq = a[q * n + q];
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = a[q * n + p] = 0.0;

                for (std::size_t r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        const double arp = a[r * n + p], arq = a[r * n + q];
                        a[r * n + p] = a[p * n + r] = arp - s * (arq + tau * arp);
                        a[r * n + q] = a[q * n + r] = arq + s * (arp - tau * arq);
                    }
                    const double vrp = v[r * n + p], vrq = v[r * n + q];
                    v[r * n + p] = vrp - s * (vrq + tau * vrp);
                    v[r * n + q] = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
}

std::vector<double> to_float(const GramMatrix& g) {
    const std::size_t m = g.m();
    std::vector<double> a(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) a[i * m + j] = g.at(i, j).to_double();
    return a;
}

}  // namespace

double gram_deviation(const VectorFrame& f, const GramMatrix& g) {
    double worst = 0.0;
    for (std::size_t i = 0; i < f.m; ++i)
        for (std::size_t j = 0; j < f.m; ++j) {
            double dot = 0.0;
            for (std::size_t k = 0; k < f.n; ++k) dot += f.columns[i][k] * f.columns[j][k];
            worst = std::max(worst, std::fabs(dot - g.at(i, j).to_double()));
        }
    return worst;
}

VectorFrame realize(const GramMatrix& g, double tol) {
    const std::size_t m = g.m();
    const std::size_t n = g.rank();

    std::vector<double> a = to_float(g);
    std::vector<double> eig, vecs;
    jacobi_eigen(a, m, eig, vecs);

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return eig[x] > eig[y]; });

    VectorFrame f;
    f.n = n;
    f.m = m;
    f.tolerance = tol;
    f.columns.assign(m, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t e = order[i];
        const double scale = std::sqrt(std::max(eig[e], 0.0));
        for (std::size_t j = 0; j < m; ++j) f.columns[j][i] = scale * vecs[j * m + e];
    }

    const double dev = gram_deviation(f, g);
    if (dev > tol) throw ToleranceExceeded(dev, tol);
    return f;
}

FrameOperatorReport frame_operator_check(const VectorFrame& f, std::optional<double> expected) {
    const std::size_t n = f.n, m = f.m;
    std::vector<double> s(n * n, 0.0);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            double acc = 0.0;
            for (std::size_t j = 0; j < m; ++j) acc += f.columns[j][p] * f.columns[j][q];
            s[p * n + q] = acc;
        }

    FrameOperatorReport rep;
    rep.frame_potential = 0.0;
    for (double x : s) rep.frame_potential += x * x;  // tr((XX^T)^2) = FP
    rep.tight_target = static_cast<double>(m) * static_cast<double>(m) / static_cast<double>(n);

    std::vector<double> eig, vecs;
    jacobi_eigen(s, n, eig, vecs);
    rep.lower_bound = *std::min_element(eig.begin(), eig.end());
    rep.upper_bound = *std::max_element(eig.begin(), eig.end());

    rep.expected = expected;
    if (expected)
        rep.matches_expected =
            std::fabs(rep.lower_bound - *expected) <= 1e-8 * (1.0 + *expected) &&
            std::fabs(rep.upper_bound - *expected) <= 1e-8 * (1.0 + *expected);
    return rep;
}

GramMatrix simplex_gram(std::size_t n) {
    if (n == 0) throw Error("simplex needs n >= 1");
    Matrix out(n + 1);
    const Quad off(Rational(-1L, static_cast<long>(n)));
    for (std::size_t i = 0; i <= n; ++i) {
        out.at(i, i) = Quad(1);
        for (std::size_t j = i + 1; j <= n; ++j) {
            out.at(i, j) = off;
            out.at(j, i) = off;
        }
    }
    return GramMatrix::certify(std::move(out));
}

VectorFrame simplex_vectors(std::size_t n) {
    if (n == 0) throw Error("simplex needs n >= 1");
    // S(1) = [-1, 1]; S(l) embeds t * S(l-1) above a constant row -1/l and
    // appends the last basis vector.
    std::vector<std::vector<double>> cols = {{-1.0}, {1.0}};
    for (std::size_t level = 2; level <= n; ++level) {
        const double l = static_cast<double>(level);
        const double t = std::sqrt(l * l - 1.0) / l;
        std::vector<std::vector<double>> next;
        next.reserve(level + 1);
        for (const auto& c : cols) {
            std::vector<double> col;
            col.reserve(level);
            for (double x : c) col.push_back(t * x);
            col.push_back(-1.0 / l);
            next.push_back(std::move(col));
        }
        std::vector<double> last(level, 0.0);
        last.back() = 1.0;
        next.push_back(std::move(last));
        cols = std::move(next);
    }
    VectorFrame f;
    f.n = n;
    f.m = n + 1;
    f.columns = std::move(cols);
    return f;
}

GramMatrix conference_etf_gram(std::size_t order) {
    if (order < 2 || order % 2 != 0) throw UnsupportedOrder(order);
    const std::size_t q = order - 1;
    if (q % 4 != 1) throw UnsupportedOrder(order);
    for (std::size_t p = 2; p * p <= q; ++p)
        if (q % p == 0) throw UnsupportedOrder(order);

    // Paley: quadratic-character core bordered by ones.
    std::vector<int> chi(q, -1);
    for (std::size_t i = 1; i < q; ++i) chi[(i * i) % q] = 1;

    std::vector<std::vector<int>> c(order, std::vector<int>(order, 0));
    for (std::size_t j = 1; j < order; ++j) c[0][j] = c[j][0] = 1;
    for (std::size_t i = 1; i < order; ++i)
        for (std::size_t j = 1; j < order; ++j) {
            if (i == j) continue;
            c[i][j] = chi[((i - 1) + q - (j - 1)) % q];
        }

    // C^2 = (order-1) I guards the character table.
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j) {
            long acc = 0;
            for (std::size_t k = 0; k < order; ++k) acc += c[i][k] * c[k][j];
            if (acc != (i == j ? static_cast<long>(q) : 0))
                throw std::logic_error("conference matrix identity C^2=(n-1)I failed");
        }

    const Quad invsq = Quad::sqrt_of(Rational(1L, static_cast<long>(q)));
    Matrix out(order);
    for (std::size_t i = 0; i < order; ++i) {
        out.at(i, i) = Quad(1);
        for (std::size_t j = i + 1; j < order; ++j) {
            out.at(i, j) = Quad(static_cast<long>(c[i][j])) * invsq;
            out.at(j, i) = out.at(i, j);
        }
    }
    return GramMatrix::certify(std::move(out));
}

namespace {

GramMatrix two_value_gram(std::size_t m, const Quad& other, const Quad& marked,
                          const std::vector<std::vector<std::size_t>>& marked_cols_1based) {
    Matrix out(m);
    for (std::size_t i = 0; i < m; ++i) {
        out.at(i, i) = Quad(1);
        for (std::size_t j = 0; j < m; ++j)
            if (j != i) out.at(i, j) = other;
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t col : marked_cols_1based[i]) {
            out.at(i, col - 1) = marked;
            out.at(col - 1, i) = marked;
        }
    return GramMatrix::certify(std::move(out));
}

GramMatrix tight10_r4_gram() {
    // The 10x10 Gram of the pairs design on five points: 1/6
    // off-diagonal except -2/3 at these columns.
    const std::vector<std::vector<std::size_t>> neg = {
        {8, 9, 10}, {6, 7, 10}, {5, 7, 9}, {5, 6, 8}, {3, 4, 10},
        {2, 4, 9},  {2, 3, 8},  {1, 4, 7}, {1, 3, 6}, {1, 2, 5},
    };
    return two_value_gram(10, Quad(Rational(1, 6)), Quad(Rational(-2, 3)), neg);
}

GramMatrix eight_vector_gram() {
    // 8 vectors in R^5 at angles +/-1/3; +1/3 at these columns.
    const std::vector<std::vector<std::size_t>> pos = {
        {5, 7}, {6, 8}, {5, 7}, {6, 8}, {1, 3}, {2, 4}, {1, 3}, {2, 4},
    };
    return two_value_gram(8, Quad(Rational(-1, 3)), Quad(Rational(1, 3)), pos);
}

GramMatrix r3_nontight_gram(const GramMatrix& tight10) {
    // Projection of vectors 2..7 of the 10-vector tight frame away from vector 1:
    // y_ij = 36/35 (g_ij - 1/36), giving angles 1/7 and -5/7.
    const Quad scale(Rational(36, 35));
    const Quad shift(Rational(1, 36));
    Matrix out(6);
    for (std::size_t i = 0; i < 6; ++i) {
        out.at(i, i) = Quad(1);
        for (std::size_t j = i + 1; j < 6; ++j) {
            out.at(i, j) = scale * (tight10.at(i + 1, j + 1) - shift);
            out.at(j, i) = out.at(i, j);
        }
    }
    return GramMatrix::certify(std::move(out));
}

GramMatrix r4_grammian_one_gram() {
    // Four vectors in R^4 with Grammian constant 1 = 4/4 but not tight;
    // angles -5/16 (twice per row) and 5/8.
    const std::vector<std::vector<std::size_t>> pos = {{3}, {4}, {1}, {2}};
    return two_value_gram(4, Quad(Rational(-5, 16)), Quad(Rational(5, 8)), pos);
}

GramMatrix neg_angles_r3_gram() {
    // The (a, b) family with a^2 + b^2 = 1, instantiated at a^2 = 3/4:
    // angle b^2 - a^2 = -1/2 across the two reflections, -b^2 = -1/4 else.
    const std::vector<std::vector<std::size_t>> far = {{3}, {4}, {1}, {2}};
    return two_value_gram(4, Quad(Rational(-1, 4)), Quad(Rational(-1, 2)), far);
}

GramMatrix pentagon_gram() {
    // C5 cycle: adjacent vertices at (sqrt(5)-1)/4, the rest at -(sqrt(5)+1)/4.
    const Quad adj = (Quad::sqrt_of(Rational(5)) - Quad(1)) / Quad(4);
    const Quad rest = -(Quad::sqrt_of(Rational(5)) + Quad(1)) / Quad(4);
    Matrix out(5);
    for (std::size_t i = 0; i < 5; ++i) {
        out.at(i, i) = Quad(1);
        for (std::size_t j = i + 1; j < 5; ++j) {
            const std::size_t d = j - i;
            out.at(i, j) = (d == 1 || d == 4) ? adj : rest;
            out.at(j, i) = out.at(i, j);
        }
    }
    return GramMatrix::certify(std::move(out));
}

}  // namespace

std::map<std::string, GramMatrix> reference_fixtures() {
    std::map<std::string, GramMatrix> out;
    GramMatrix tight10 = tight10_r4_gram();
    out.insert({"r3_nontight", r3_nontight_gram(tight10)});
    out.insert({"tight10_r4", std::move(tight10)});
    out.insert({"eight_vector_r5", eight_vector_gram()});
    out.insert({"r4_grammian_one", r4_grammian_one_gram()});
    out.insert({"neg_angles_r3", neg_angles_r3_gram()});
    out.insert({"pentagon", pentagon_gram()});
    return out;
}

std::map<std::string, VectorFrame> reference_vector_fixtures() {
    std::map<std::string, VectorFrame> out;

    out.insert({"simplex4", simplex_vectors(4)});

    // Coordinates of the maximal non-tight 6-vector frame,
    // written in R^4 (the columns lie in the hyperplane orthogonal to
    // (0, -sqrt(30), -sqrt(15), -3)).
    const double s21 = std::sqrt(21.0), s7 = std::sqrt(7.0);
    const double s14 = std::sqrt(14.0), s210 = std::sqrt(210.0);
    VectorFrame y;
    y.n = 4;
    y.m = 6;
    y.columns = {
        {-s21 / 7, 4 * s7 / 21, -5 * s14 / 42, -s210 / 42},
        {-s21 / 7, -2 * s7 / 21, s14 / 6, -s210 / 42},
        {-s21 / 7, -2 * s7 / 21, -s14 / 21, s210 / 21},
        {s21 / 7, 4 * s7 / 21, -5 * s14 / 42, -s210 / 42},
        {s21 / 7, -2 * s7 / 21, s14 / 6, -s210 / 42},
        {s21 / 7, -2 * s7 / 21, -s14 / 21, s210 / 21},
    };
    out.insert({"y_r3_in_r4", std::move(y)});
    return out;
}

}  // namespace twodist
