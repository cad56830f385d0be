#include "odiam/error.hpp"

namespace odiam {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::EmptyParts: return "EmptyParts";
    case ErrorKind::ZeroPart: return "ZeroPart";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::MissingEdge: return "MissingEdge";
    case ErrorKind::DoubleOrientation: return "DoubleOrientation";
    case ErrorKind::IntraPartArc: return "IntraPartArc";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::EmptyKeep: return "EmptyKeep";
    case ErrorKind::QOutOfRange: return "QOutOfRange";
    case ErrorKind::ThresholdExceeded: return "ThresholdExceeded";
    case ErrorKind::NTooSmall: return "NTooSmall";
    case ErrorKind::AnchorNotSize3: return "AnchorNotSize3";
    case ErrorKind::NotTripartite: return "NotTripartite";
    case ErrorKind::DiameterNotTwo: return "DiameterNotTwo";
    case ErrorKind::FirstPartNotSize3: return "FirstPartNotSize3";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::PTooLarge: return "PTooLarge";
    case ErrorKind::TooManyEdges: return "TooManyEdges";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::BadFamily: return "BadFamily";
    case ErrorKind::ConstructionFailed: return "ConstructionFailed";
    }
    return "Unknown";
}

} // namespace odiam
