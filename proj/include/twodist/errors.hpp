#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twodist {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- scalar errors ----

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct MixedRadicands : Error {
    MixedRadicands(const std::string& d1, const std::string& d2)
        : Error("mixed radicands: sqrt(" + d1 + ") vs sqrt(" + d2 + ")") {}
};

struct NegativeRadicand : Error {
    NegativeRadicand() : Error("square root of a negative rational") {}
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error("parse error at position " + std::to_string(pos) + ": " + what),
          position(pos) {}
};

// ---- matrix / certification errors ----

struct NotSymmetric : Error {
    std::size_t i, j;
    NotSymmetric(std::size_t i_, std::size_t j_)
        : Error("matrix not symmetric at (" + std::to_string(i_) + "," +
                std::to_string(j_) + ")"),
          i(i_), j(j_) {}
};

struct NotUnitDiagonal : Error {
    std::size_t i;
    explicit NotUnitDiagonal(std::size_t i_)
        : Error("diagonal entry " + std::to_string(i_) + " is not 1"), i(i_) {}
};

struct NotPSD : Error {
    std::size_t i, j;
    NotPSD(std::size_t i_, std::size_t j_, const std::string& why)
        : Error("matrix not positive semidefinite at (" + std::to_string(i_) +
                "," + std::to_string(j_) + "): " + why),
          i(i_), j(j_) {}
};

// ---- angle-system errors ----

struct NoRealSolution : Error {
    NoRealSolution() : Error("angle system has no real solution (negative discriminant)") {}
};

struct DegenerateSystem : Error {
    DegenerateSystem() : Error("angle system is degenerate (coincident solutions)") {}
};

struct NonIntegralMultiplicity : Error {
    explicit NonIntegralMultiplicity(const std::string& value)
        : Error("multiplicity formula gives non-integral or out-of-range value " + value) {}
};

// ---- construction errors ----

struct AlreadyBalanced : Error {
    AlreadyBalanced() : Error("input is already balanced (Grammian constant 0)") {}
};

struct VectorsCollide : Error {
    VectorsCollide(std::size_t i, std::size_t j)
        : Error("transform makes vectors " + std::to_string(i) + " and " +
                std::to_string(j) + " collide (inner product 1)") {}
};

struct NotTight : Error {
    NotTight() : Error("input Gram matrix is not tight") {}
};

struct FullRank : Error {
    FullRank() : Error("Naimark complement undefined: rank equals vector count") {}
};

struct BadGrammianConstant : Error {
    explicit BadGrammianConstant(const std::string& c)
        : Error("Grammian constant " + c + " is neither 0 nor m/n") {}
};

struct DegenerateDenominator : Error {
    explicit DegenerateDenominator(const std::string& value)
        : Error("translation denominator 1+2tc+t^2mc = " + value + " is not positive") {}
};

struct BalancedInput : Error {
    BalancedInput() : Error("operation requires a non-balanced input (c > 0)") {}
};

struct TargetOutOfRange : Error {
    explicit TargetOutOfRange(const std::string& why) : Error("lift target out of range: " + why) {}
};

struct NotETF : Error {
    explicit NotETF(const std::string& why) : Error("input is not an equiangular tight frame: " + why) {}
};

struct AngleSumNotNegative : Error {
    AngleSumNotNegative() : Error("angle sum alpha+beta is not negative") {}
};

struct ConditionViolated : Error {
    ConditionViolated() : Error("equiangular translation requires alpha+beta <= 2c/m") {}
};

struct SizeMismatch : Error {
    SizeMismatch(std::size_t got, std::size_t want)
        : Error("size mismatch: design has " + std::to_string(want) +
                " points but Gram matrix has " + std::to_string(got) + " vectors") {}
};

// ---- design errors ----

struct UnequalBlockSizes : Error {
    UnequalBlockSizes(std::size_t b1, std::size_t b2)
        : Error("blocks " + std::to_string(b1) + " and " + std::to_string(b2) +
                " have different sizes") {}
};

struct NotPairBalanced : Error {
    NotPairBalanced(std::size_t p, std::size_t q, std::size_t got, std::size_t want)
        : Error("pair {" + std::to_string(p + 1) + "," + std::to_string(q + 1) +
                "} lies in " + std::to_string(got) + " blocks, expected " +
                std::to_string(want)) {}
};

struct IdentityViolation : Error {
    explicit IdentityViolation(const std::string& which)
        : Error("design parameter identity violated: " + which) {}
};

struct NotQuasiSymmetric : Error {
    explicit NotQuasiSymmetric(const std::string& sizes)
        : Error("design is not quasi-symmetric: block intersection sizes {" + sizes + "}") {}
};

struct NonIntegralS : Error {
    explicit NonIntegralS(const std::string& what)
        : Error("strongly regular graph parameter is not an admissible integer: " + what) {}
};

// ---- realization errors ----

struct UnsupportedOrder : Error {
    explicit UnsupportedOrder(std::size_t order)
        : Error("no conference matrix construction for order " + std::to_string(order)) {}
};

struct ToleranceExceeded : Error {
    double deviation;
    ToleranceExceeded(double dev, double tol)
        : Error("realization round-trip deviation " + std::to_string(dev) +
                " exceeds tolerance " + std::to_string(tol)),
          deviation(dev) {}
};

}  // namespace twodist
