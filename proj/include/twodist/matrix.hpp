#pragma once

#include <cstddef>
#include <vector>

#include "twodist/quad.hpp"

namespace twodist {

/// Dense square matrix over Q(sqrt(d)).
class Matrix {
public:
    explicit Matrix(std::size_t n) : n_(n), e_(n * n) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Quad(1);
        return m;
    }

    std::size_t size() const { return n_; }

    Quad& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const Quad& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    bool is_symmetric() const;

    Quad row_sum(std::size_t i) const;

    Matrix mul(const Matrix& o) const;

    /// Row i of (*this * *this); used for early-exit identity checks.
    std::vector<Quad> square_row(std::size_t i) const;

    /// The single nonzero radicand shared by all entries, or 0 if all
    /// entries are rational. Throws MixedRadicands on two distinct fields.
    mpz_class shared_radicand() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t n_;
    std::vector<Quad> e_;
};

struct PsdReport {
    std::size_t rank = 0;
    bool is_psd = true;
    std::vector<int> pivot_signs;
    // Offending position when is_psd is false (original indices).
    std::size_t fail_i = 0, fail_j = 0;
};

/// Exact symmetric Gaussian elimination with diagonal pivoting.
/// rank = number of nonzero pivots; PSD iff no negative pivot and the
/// elimination never strands a nonzero residual with an all-zero diagonal.
PsdReport psd_rank(const Matrix& g);

}  // namespace twodist
