#pragma once

#include <stdexcept>
#include <string>

namespace ernstlax {

// One exception type per contract violation; all carry a plain message.
struct AxisViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateGrid : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct GridMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PathOffGrid : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EmptyInterior : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonPositiveF : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BadParametrization : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnknownSolution : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BadParameters : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SingularityOnGrid : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SingularMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnknownCharacteristic : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BackgroundMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotClosed : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Inconsistent : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ZeroLambda : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TooFewNodes : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ernstlax
