#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace odiam {

enum class ErrorKind {
    EmptyParts,
    ZeroPart,
    TooLarge,
    VertexOutOfRange,
    MissingEdge,
    DoubleOrientation,
    IntraPartArc,
    SelfLoop,
    EmptyKeep,
    QOutOfRange,
    ThresholdExceeded,
    NTooSmall,
    AnchorNotSize3,
    NotTripartite,
    DiameterNotTwo,
    FirstPartNotSize3,
    NotBipartite,
    PTooLarge,
    TooManyEdges,
    IoError,
    ParseError,
    BadFamily,
    ConstructionFailed,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; callers switch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace odiam
