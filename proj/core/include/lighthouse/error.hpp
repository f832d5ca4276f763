#pragma once

#include <stdexcept>
#include <string>

namespace lighthouse {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PointInsideCircle : Error { using Error::Error; };
struct NoTangents : Error { using Error::Error; };
struct DegenerateInput : Error { using Error::Error; };
struct InvalidN : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct NoIlluminator : Error { using Error::Error; };
struct UnsupportedN : Error { using Error::Error; };
struct NoRootInBracket : Error { using Error::Error; };
struct UnboundedRegion : Error { using Error::Error; };
struct PointInsideBody : Error { using Error::Error; };

}  // namespace lighthouse
