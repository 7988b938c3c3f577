#pragma once

#include <stdexcept>
#include <string>

namespace cusp {

// Base for all recoverable numeric/domain failures thrown by the library.
// Callers that need to distinguish causes catch the derived types below.
struct MapError : std::runtime_error {
    explicit MapError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroArgument : MapError {
    explicit ZeroArgument(const std::string& msg = "argument is zero") : MapError(msg) {}
};

struct OutOfDomain : MapError {
    explicit OutOfDomain(const std::string& msg = "point outside the closed upper half-plane") : MapError(msg) {}
};

struct PoleArgument : MapError {
    explicit PoleArgument(const std::string& msg = "evaluation at a pole") : MapError(msg) {}
};

struct OutsideTrustRadius : MapError {
    explicit OutsideTrustRadius(const std::string& msg = "point outside the series trust radius") : MapError(msg) {}
};

struct EmptyGrid : MapError {
    explicit EmptyGrid(const std::string& msg = "sampling grid is empty") : MapError(msg) {}
};

struct NonpositiveRadius : MapError {
    explicit NonpositiveRadius(const std::string& msg = "radius must be positive") : MapError(msg) {}
};

struct MixedSigns : MapError {
    explicit MixedSigns(const std::string& msg = "sample abscissae must share one sign") : MapError(msg) {}
};

struct InsufficientSamples : MapError {
    explicit InsufficientSamples(const std::string& msg = "not enough samples for the fit") : MapError(msg) {}
};

struct NonpositiveCoordinates : MapError {
    explicit NonpositiveCoordinates(const std::string& msg = "fit window contains nonpositive u or v") : MapError(msg) {}
};

struct SingularFit : MapError {
    explicit SingularFit(const std::string& msg = "design matrix is rank-deficient") : MapError(msg) {}
};

struct EvaluatorFailure : MapError {
    explicit EvaluatorFailure(const std::string& msg = "map evaluator failed") : MapError(msg) {}
};

struct PathOutsideSector : MapError {
    explicit PathOutsideSector(const std::string& msg = "path leaves the admissible sector") : MapError(msg) {}
};

struct SelfIntersectingInput : MapError {
    explicit SelfIntersectingInput(const std::string& msg = "polyline intersects itself") : MapError(msg) {}
};

struct DegenerateSegment : MapError {
    explicit DegenerateSegment(const std::string& msg = "zero-length polyline segment") : MapError(msg) {}
};

struct SingularPoint : MapError {
    explicit SingularPoint(const std::string& msg = "evaluation at a stage prevertex") : MapError(msg) {}
};

struct BranchAmbiguity : MapError {
    explicit BranchAmbiguity(const std::string& msg = "branch undefined at this point") : MapError(msg) {}
};

struct IndexOutOfRange : MapError {
    explicit IndexOutOfRange(const std::string& msg = "index outside the stored range") : MapError(msg) {}
};

}  // namespace cusp
