#pragma once

#include <cstddef>
#include <vector>

#include "twodist/gram.hpp"
#include "twodist/matrix.hpp"

namespace twodist {

struct BlockDesign;  // designs module

/// Symmetric PSD matrix without the unit-diagonal constraint; the Gram
/// matrix of block-sum vectors, which are not unit norm.
class UnnormalizedGram {
public:
    static UnnormalizedGram certify(Matrix entries);

    std::size_t m() const { return entries_.size(); }
    std::size_t rank() const { return rank_; }
    const Quad& at(std::size_t i, std::size_t j) const { return entries_.at(i, j); }
    const Matrix& entries() const { return entries_; }

private:
    UnnormalizedGram(Matrix e, std::size_t r) : entries_(std::move(e)), rank_(r) {}
    Matrix entries_;
    std::size_t rank_;
};

/// Projects a non-balanced regular two-distance set away from its vector
/// sum: off-diagonal (m/(m-c)) (G_ij - c/m). Output is balanced with the
/// same multiplicities and rank one lower.
GramMatrix project_to_balanced(const GramMatrix& g);

/// Naimark complement of a tight Gram: (m I - n G)/(m - n). Tight of rank
/// m - n, angles scaled by -n/(m-n), multiplicities preserved.
GramMatrix naimark(const GramMatrix& g);

struct ComplementResult {
    Matrix candidate;  // unit diagonal, off-diagonal gamma - G_ij; may fail PSD
    Quad gamma;
    bool is_tight_result;  // m = 2n+1 (balanced case) or m = 2n-1
};

/// The angle-swapped companion matrix G' = (2-gamma) I + gamma J - G of a
/// tight regular two-distance Gram. The result is a Gram matrix of a tight
/// frame precisely when is_tight_result.
ComplementResult complement_transform(const GramMatrix& g);

/// Translation y_i ~ x_i + t x_bar of a non-balanced regular set:
/// off-diagonal (G_ij + 2tc + t^2 m c)/(1 + 2tc + t^2 m c).
GramMatrix translate(const GramMatrix& g, const Quad& t);

/// One-dimension lift y_i = (t x_i, sqrt(1-t^2)):
/// off-diagonal t^2 G_ij + (1 - t^2), 0 < t^2 <= 1.
GramMatrix lift(const GramMatrix& g, const Rational& t_squared);

/// Lift choosing t so the smaller angle moves to alpha_target.
GramMatrix lift_to_angle(const GramMatrix& g, const Quad& alpha_target);

/// Lift choosing t so the Grammian constant moves to c_target.
GramMatrix lift_to_constant(const GramMatrix& g, const Rational& c_target);

struct NeighborSubsetResult {
    GramMatrix gram;
    TwoDistanceProfile profile;
};

/// Deletes one vector of an ETF after sign-normalizing its row to +alpha;
/// the remaining m-1 vectors form a regular two-distance set at angles
/// +/-alpha with multiplicities k_alpha - 1 and m - k_alpha - 1.
NeighborSubsetResult etf_neighbor_subset(const GramMatrix& g, std::size_t pivot);

/// Projects an ETF onto the hyperplane of one vector (after sign
/// normalization): H_ij = (G_ij - alpha^2)/(1 - alpha^2). Balanced,
/// two-distance, tight of rank n-1.
GramMatrix etf_projection(const GramMatrix& g, std::size_t pivot);

struct EquiangularLiftResult {
    GramMatrix gram;
    Quad common_angle;  // |gamma|
    Quad t_squared;
};

/// Lift with t^2 = 2/(2-(alpha+beta)) turning a two-distance set with
/// alpha+beta < 0 into m equiangular lines in one higher dimension.
EquiangularLiftResult equiangular_lift(const GramMatrix& g);

enum class RootChoice { SmallerAbs, LargerAbs };

struct EquiangularTranslateResult {
    GramMatrix gram;
    Quad common_angle;  // |gamma|
    Quad t;
};

/// Solves 2mc t^2 + 4c t + (alpha+beta) = 0 and translates at the root,
/// producing m equiangular lines in the same dimension. Requires c > 0 and
/// alpha + beta <= 2c/m.
EquiangularTranslateResult equiangular_translate(const GramMatrix& g,
                                                 RootChoice root = RootChoice::SmallerAbs);

/// Gram matrix N^T G N of the block-sum vectors y_J = sum_{i in J} x_i of a
/// BIBD on the index set of G. For tight balanced input with bound A the
/// output satisfies Y^2 = (r - lambda) A Y exactly (asserted).
UnnormalizedGram bibd_sum_gram(const GramMatrix& g, const BlockDesign& design);

}  // namespace twodist
