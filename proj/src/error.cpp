#include "curvlab/error.hpp"

namespace curvlab {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SelfLoop: return "SelfLoop";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::NotRegular: return "NotRegular";
        case ErrorKind::NotAnEdge: return "NotAnEdge";
        case ErrorKind::WrongDistance: return "WrongDistance";
        case ErrorKind::EmptySphere: return "EmptySphere";
        case ErrorKind::BadParam: return "BadParam";
        case ErrorKind::BadIdleness: return "BadIdleness";
        case ErrorKind::SamePair: return "SamePair";
        case ErrorKind::NotLipschitz: return "NotLipschitz";
        case ErrorKind::NotPerfectMatching: return "NotPerfectMatching";
        case ErrorKind::NotFullLength: return "NotFullLength";
        case ErrorKind::NotBMSharp: return "NotBMSharp";
        case ErrorKind::AmbiguousTransportMap: return "AmbiguousTransportMap";
        case ErrorKind::NoAntipole: return "NoAntipole";
        case ErrorKind::MuGraphNotCP: return "MuGraphNotCP";
        case ErrorKind::IsolatedVertex: return "IsolatedVertex";
        case ErrorKind::NotAPole: return "NotAPole";
        case ErrorKind::DisconnectedSubset: return "DisconnectedSubset";
        case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

}  // namespace curvlab
