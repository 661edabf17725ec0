#pragma once

#include <stdexcept>
#include <string>

namespace pldig {

enum class ErrorKind {
    LoopArc,
    DuplicateArc,
    VertexOutOfRange,
    MinInDegreeZero,
    HeadsNotCovering,
    PhiNotFixing,
    PhiWrongHead,
    PhiImageNotInAPrime,
    NotAcyclic,
    NotAGrundyFunction,
    PreconditionLViolation,
    IllDefinedProjection,
    UnknownFixture,
    ParseError,
    OptionConflict,
    InvalidArgument,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::LoopArc: return "LoopArc";
        case ErrorKind::DuplicateArc: return "DuplicateArc";
        case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorKind::MinInDegreeZero: return "MinInDegreeZero";
        case ErrorKind::HeadsNotCovering: return "HeadsNotCovering";
        case ErrorKind::PhiNotFixing: return "PhiNotFixing";
        case ErrorKind::PhiWrongHead: return "PhiWrongHead";
        case ErrorKind::PhiImageNotInAPrime: return "PhiImageNotInAPrime";
        case ErrorKind::NotAcyclic: return "NotAcyclic";
        case ErrorKind::NotAGrundyFunction: return "NotAGrundyFunction";
        case ErrorKind::PreconditionLViolation: return "PreconditionLViolation";
        case ErrorKind::IllDefinedProjection: return "IllDefinedProjection";
        case ErrorKind::UnknownFixture: return "UnknownFixture";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::OptionConflict: return "OptionConflict";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

// single exception type for the whole library; kind() is stable API,
// what() is a human-readable diagnostic
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace pldig
