#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mpart {

enum class Errc {
    NotSquare,
    NotSymmetric,
    BadCharacter,
    DiagonalStar,
    BadParameters,
    SelfLoop,
    VertexOutOfRange,
    MalformedGraph6,
    MalformedEdgeList,
    TooLarge,
    PartOutOfRange,
    ListPartOutOfRange,
    NotSplit,
    PartNotUniform,
};

std::string_view to_string(Errc code) noexcept;

/// Every recoverable failure in the library is reported as an Error; the
/// code identifies the failed precondition.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace mpart
