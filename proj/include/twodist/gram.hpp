#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twodist/matrix.hpp"
#include "twodist/quad.hpp"
#include "twodist/rational.hpp"

namespace twodist {

/// Symmetric, unit-diagonal, positive semidefinite matrix over a single
/// quadratic field. Certified on construction; immutable afterwards.
class GramMatrix {
public:
    /// Verifies symmetry, unit diagonal, a shared radicand and positive
    /// semidefiniteness (exact LDL^T). Throws NotSymmetric, NotUnitDiagonal,
    /// MixedRadicands or NotPSD naming the offending position.
    static GramMatrix certify(Matrix entries);

    std::size_t m() const { return entries_.size(); }
    std::size_t rank() const { return psd_.rank; }
    const std::vector<int>& pivot_signs() const { return psd_.pivot_signs; }
    const Quad& at(std::size_t i, std::size_t j) const { return entries_.at(i, j); }
    const Matrix& entries() const { return entries_; }
    const mpz_class& radicand() const { return d_; }

    friend bool operator==(const GramMatrix& a, const GramMatrix& b) {
        return a.entries_ == b.entries_;
    }

private:
    GramMatrix(Matrix e, PsdReport psd, mpz_class d)
        : entries_(std::move(e)), psd_(std::move(psd)), d_(std::move(d)) {}

    Matrix entries_;
    PsdReport psd_;
    mpz_class d_;
};

/// Angles with per-row multiplicities and the common row sum. By convention
/// alpha is the larger angle.
struct TwoDistanceProfile {
    Quad alpha, beta;
    std::size_t k_alpha = 0, k_beta = 0;
    Quad grammian_constant;
};

struct BoundFlag {
    std::string name;
    bool applicable = false;
    bool pass = true;
};

/// Structured verification report for one Gram matrix.
struct Certificate {
    std::size_t m = 0;
    std::size_t rank = 0;
    bool is_two_distance = false;
    bool is_regular = false;
    bool is_balanced = false;
    bool is_tight = false;
    bool has_duplicate_vectors = false;
    std::optional<TwoDistanceProfile> profile;
    std::optional<Quad> row_sum;  // present when all row sums coincide
    Quad frame_potential;
    std::optional<Rational> tight_bound;  // m/rank when tight
    std::vector<BoundFlag> bound_flags;
    std::vector<std::string> classification_notes;

    const BoundFlag* flag(const std::string& name) const;
    bool all_bounds_hold() const;
};

/// Full verification: distinct values, regularity (counted two independent
/// ways), balancedness, exact rank, tightness via G^2 = (m/rank) G, frame
/// potential, and every structural bound the theory imposes.
Certificate analyze(const GramMatrix& g);

/// Both exact solutions (alpha, beta) of
///   1 + k_a x + k_b y = c0   and   1 + k_a x^2 + k_b y^2 = m/n,
/// with c0 = 0 (balanced) or m/n, k_b = m - k_a - 1. The first component of
/// each pair carries multiplicity k_alpha.
std::array<std::pair<Quad, Quad>, 2> solve_angle_systems(std::size_t m, std::size_t n,
                                                         std::size_t k_alpha, bool balanced);

/// Multiplicity of alpha in a tight frame of m vectors in rank n:
///   (m/n - 1 + (1-m) beta^2) / (alpha^2 - beta^2).
/// Throws NonIntegralMultiplicity unless the value is an integer in [0, m-1].
std::size_t multiplicity_from_angles(std::size_t m, std::size_t n, const Quad& alpha,
                                     const Quad& beta);

/// Known [lower, upper] bounds on the maximum size of a two-distance set of
/// distinct unit vectors in rank n: exact small values 5, 6, 10, 16, 27 for
/// n = 2..6, then n(n+1)/2, except that dimensions of the form (2k+1)^2 - 3
/// only carry the interval [n(n+1)/2, n(n+3)/2]. Requires n >= 2.
std::pair<std::size_t, std::size_t> two_distance_max_bound(std::size_t n);

}  // namespace twodist
