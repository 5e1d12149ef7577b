#pragma once

#include <stdexcept>
#include <string>

namespace vcwb {

struct MixedOrderError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotAMultipleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ShapeMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CoverageGapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RepresentabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TriangleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ClosednessDataMissingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AdjointMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace vcwb
