#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twodist/gram.hpp"

namespace twodist {

/// Explicit frame vectors as columns of an n x m floating matrix.
struct VectorFrame {
    std::size_t n = 0;  // ambient dimension
    std::size_t m = 0;  // vector count
    std::vector<std::vector<double>> columns;  // m columns of length n
    double tolerance = 1e-10;
};

/// max_ij | (X^T X)_ij - G_ij | in floating point.
double gram_deviation(const VectorFrame& f, const GramMatrix& g);

/// Recovers vectors from a certified Gram matrix through a floating
/// eigendecomposition: columns scaled by sqrt(eigenvalue) over the top
/// rank(G) eigenvectors. Throws ToleranceExceeded when the round trip
/// misses the source Gram by more than tol.
VectorFrame realize(const GramMatrix& g, double tol = 1e-10);

struct FrameOperatorReport {
    double lower_bound = 0;   // min eigenvalue of XX^T
    double upper_bound = 0;   // max eigenvalue of XX^T
    double frame_potential = 0;
    double tight_target = 0;  // m^2/n
    std::optional<double> expected;
    bool matches_expected = true;
};

/// Frame bounds and floating frame potential of a realized frame.
FrameOperatorReport frame_operator_check(const VectorFrame& f,
                                         std::optional<double> expected = std::nullopt);

/// Gram of the regular simplex: n+1 unit vectors in rank n, off-diagonal
/// exactly -1/n.
GramMatrix simplex_gram(std::size_t n);

/// Simplex coordinates by the recursive construction: each level appends a
/// constant last coordinate -1/l and a final standard basis column.
VectorFrame simplex_vectors(std::size_t n);

/// ETF Gram I + C/sqrt(order-1) from a symmetric Paley conference matrix;
/// order-1 must be a prime congruent to 1 mod 4 (order 6, 14, 18, ...).
GramMatrix conference_etf_gram(std::size_t order);

/// Reference Gram matrices of known configurations, entered explicitly and
/// certified:
///   tight10_r4       10 vectors, angles 1/6 and -2/3, tight of rank 4
///   r3_nontight       6 vectors, angles 1/7 and -5/7, balanced, not tight
///   r4_grammian_one   4 vectors, angles 5/8 and -5/16, c = 1, not tight
///   eight_vector_r5   8 vectors, angles +/-1/3, rank 5
///   neg_angles_r3     4 vectors with a^2 = 3/4: angles -1/4 and -1/2
///   pentagon          5 vectors at angles (sqrt(5)-1)/4, -(sqrt(5)+1)/4
std::map<std::string, GramMatrix> reference_fixtures();

/// Reference coordinate fixtures: "simplex4" (4x5) and "y_r3_in_r4" (the
/// 6-vector maximal non-tight frame, written in R^4 coordinates).
std::map<std::string, VectorFrame> reference_vector_fixtures();

}  // namespace twodist
