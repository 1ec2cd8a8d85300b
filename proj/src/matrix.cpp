#include "twodist/matrix.hpp"

#include <utility>

#include "twodist/errors.hpp"

namespace twodist {

bool Matrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

Quad Matrix::row_sum(std::size_t i) const {
    Quad s;
    for (std::size_t j = 0; j < n_; ++j) s = s + at(i, j);
    return s;
}

Matrix Matrix::mul(const Matrix& o) const {
    Matrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            Quad s;
            for (std::size_t k = 0; k < n_; ++k) s = s + at(i, k) * o.at(k, j);
            r.at(i, j) = std::move(s);
        }
    return r;
}

std::vector<Quad> Matrix::square_row(std::size_t i) const {
    std::vector<Quad> row(n_);
    for (std::size_t j = 0; j < n_; ++j) {
        Quad s;
        for (std::size_t k = 0; k < n_; ++k) s = s + at(i, k) * at(k, j);
        row[j] = std::move(s);
    }
    return row;
}

mpz_class Matrix::shared_radicand() const {
    mpz_class d = 0;
    for (const Quad& q : e_) {
        if (q.radicand() == 0) continue;
        if (d == 0) d = q.radicand();
        else if (d != q.radicand()) throw MixedRadicands(d.get_str(), q.radicand().get_str());
    }
    return d;
}

namespace {

// Rank of the trailing block a[k.., k..] by plain row echelon; used only
// after the symmetric scheme has already decided the matrix is indefinite.
std::size_t residual_rank(Matrix a, std::size_t k) {
    const std::size_t n = a.size();
    std::size_t rank = 0;
    std::size_t row = k;
    for (std::size_t col = k; col < n && row < n; ++col) {
        std::size_t p = n;
        for (std::size_t i = row; i < n; ++i)
            if (a.at(i, col).sign() != 0) {
                p = i;
                break;
            }
        if (p == n) continue;
        if (p != row)
            for (std::size_t j = k; j < n; ++j) std::swap(a.at(p, j), a.at(row, j));
        for (std::size_t i = row + 1; i < n; ++i) {
            if (a.at(i, col).sign() == 0) continue;
            Quad f = a.at(i, col) / a.at(row, col);
            for (std::size_t j = col; j < n; ++j) a.at(i, j) = a.at(i, j) - f * a.at(row, j);
        }
        ++rank;
        ++row;
    }
    return rank;
}

}  // namespace

PsdReport psd_rank(const Matrix& g) {
    const std::size_t n = g.size();
    Matrix a = g;
    std::vector<std::size_t> orig(n);
    for (std::size_t i = 0; i < n; ++i) orig[i] = i;

    PsdReport rep;
    bool fail_recorded = false;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = n;
        for (std::size_t j = k; j < n; ++j)
            if (a.at(j, j).sign() != 0) {
                p = j;
                break;
            }

        if (p == n) {
            // All remaining diagonals vanish; a PSD matrix must have an
            // all-zero residual here.
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = i; j < n; ++j)
                    if (a.at(i, j).sign() != 0) {
                        rep.is_psd = false;
                        if (!fail_recorded) {
                            rep.fail_i = orig[i];
                            rep.fail_j = orig[j];
                            fail_recorded = true;
                        }
                        rep.rank = rep.pivot_signs.size() + residual_rank(a, k);
                        return rep;
                    }
            break;
        }

        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(k, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(a.at(i, p), a.at(i, k));
            std::swap(orig[p], orig[k]);
        }

        const Quad piv = a.at(k, k);
        const int s = piv.sign();
        rep.pivot_signs.push_back(s);
        if (s < 0) {
            rep.is_psd = false;
            if (!fail_recorded) {
                rep.fail_i = orig[k];
                rep.fail_j = orig[k];
                fail_recorded = true;
            }
        }

        for (std::size_t i = k + 1; i < n; ++i) {
            if (a.at(i, k).sign() == 0) continue;
            Quad f = a.at(i, k) / piv;
            for (std::size_t j = k; j < n; ++j) a.at(i, j) = a.at(i, j) - f * a.at(k, j);
        }
    }

    rep.rank = rep.pivot_signs.size();
    return rep;
}

}  // namespace twodist
