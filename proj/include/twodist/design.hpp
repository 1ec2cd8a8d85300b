#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twodist/gram.hpp"
#include "twodist/rational.hpp"

namespace twodist {

/// 2-design with explicit blocks. Points are 0-based internally; the JSON
/// interface is 1-based.
struct BlockDesign {
    std::size_t v = 0;
    std::size_t b = 0;
    std::size_t r = 0;
    std::size_t k = 0;
    std::size_t lambda = 0;
    std::vector<std::vector<std::size_t>> blocks;  // each sorted ascending
};

/// Derives (b, r, k, lambda) by direct counting and checks vr = bk and
/// r(k-1) = lambda(v-1). Throws UnequalBlockSizes, NotPairBalanced (naming a
/// violating pair) or IdentityViolation.
BlockDesign validate_design(std::size_t v, std::vector<std::vector<std::size_t>> blocks);

/// Quasi-symmetric design parameters; any two blocks meet in x or y points.
struct QSDParams {
    std::size_t v = 0, b = 0, r = 0, k = 0, lambda = 0;
    std::size_t x = 0, y = 0;  // x < y
};

/// Checks the BIBD identities plus x < y <= k on bare parameters.
void check_admissible(const QSDParams& q);

/// Computes all pairwise block intersection sizes; succeeds iff exactly two
/// distinct values occur. Throws NotQuasiSymmetric listing the sizes found.
QSDParams detect_intersection_numbers(const BlockDesign& d);

/// Strongly regular graph parameters of the block graph.
struct SRGParams {
    std::size_t n_vertices = 0;
    std::size_t s = 0;
    std::size_t mu1 = 0, mu2 = 0;
    Rational theta1, theta2;
};

/// Block-graph parameters: s = (k(r-1) - x(b-1))/(y-x), theta_1, theta_2,
/// mu_1 = s + theta_1 + theta_2 + theta_1 theta_2, mu_2 = s + theta_1 theta_2.
/// Throws NonIntegralS when a count comes out non-integral or out of range.
SRGParams srg_params(const QSDParams& q);

/// Basis construction: vectors (1/sqrt(k)) sum_{i in J} e_i, i.e.
/// G = N^T N / k. Angles x/k and y/k, Grammian constant r, never tight.
GramMatrix qsd_to_frame_basis(const BlockDesign& d);

/// Simplex construction: block sums over a simplex, i.e.
/// G = (v N^T N - k^2 J)/(k(v-k)). Balanced and tight of rank v-1.
GramMatrix qsd_to_frame_simplex(const BlockDesign& d);

enum class PartKind { Empty, Singleton, Constant, RegularTwoDistance, Irregular };

struct NeighborPart {
    Quad value;                        // inner product with the pivot row
    std::vector<std::size_t> indices;  // members of the part
    PartKind kind = PartKind::Empty;
    std::optional<Quad> constant_value;
    std::optional<TwoDistanceProfile> profile;
};

/// Partitions the other indices by their inner product with row i and
/// classifies each part's induced sub-Gram.
std::vector<NeighborPart> neighbor_substructure(const GramMatrix& g, std::size_t i);

struct ConditionCheck {
    std::string name;
    bool applicable = false;
    bool pass = true;
    std::string detail;
};

/// Necessary conditions for existence of a QSD with these parameters:
/// x <= k^2/v <= y (not both tight), the block-count divisibility in the
/// equality cases, and the parity law s even when b is odd. The k^2/v < lambda
/// comparison is reported as informational only.
std::vector<ConditionCheck> qsd_necessary_conditions(const QSDParams& q);

/// Known bounds on the maximum number of equiangular lines per dimension.
class LinesBoundsTable {
public:
    static LinesBoundsTable builtin();
    static LinesBoundsTable load(const std::string& path);

    std::optional<std::pair<std::size_t, std::size_t>> lookup(std::size_t dimension) const;
    const std::string& version() const { return version_; }

private:
    std::map<std::size_t, std::pair<std::size_t, std::size_t>> bounds_;
    std::string version_;
};

struct LinesClaim {
    std::size_t lines = 0;
    std::size_t dimension = 0;
};

struct NonexistenceCertificate {
    QSDParams params;
    std::string reason;   // "lines_bound_conflict" or a necessary-condition name
    std::string witness;  // human-readable evidence
    std::string bounds_version;
};

struct PipelineResult {
    std::optional<LinesClaim> lines_claim;
    std::optional<NonexistenceCertificate> nonexistence;
};

/// If x + y <= 2kr/b, claims b equiangular lines in dimension v; a claim
/// exceeding the table's proven upper bound yields a nonexistence
/// certificate for the design.
PipelineResult equiangular_pipeline(const QSDParams& q, const LinesBoundsTable& table);

/// Table lookup; nullopt for dimensions with no recorded bounds.
std::optional<std::pair<std::size_t, std::size_t>> lines_bound(const LinesBoundsTable& table,
                                                               std::size_t dimension);

/// Failed hard necessary conditions as nonexistence certificates.
std::vector<NonexistenceCertificate> nonexistence_from_conditions(const QSDParams& q);

// ---- named design instances ----

/// All 2-subsets of [n]: the quasi-symmetric (n, n(n-1)/2, n-1, 2, 1)
/// design with intersection numbers 0, 1.
BlockDesign pairs_design(std::size_t n);

/// The (7,7,3,3,1) projective plane; every two blocks meet in one point.
BlockDesign fano_plane();

/// The quasi-symmetric 3-(22,7,4) design: the 176 weight-7 Golay codewords
/// avoiding one coordinate. Parameters (22,176,56,7,16), x = 1, y = 3.
BlockDesign witt_qsd_22();

}  // namespace twodist
