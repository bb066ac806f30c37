#pragma once

#include <stdexcept>
#include <string>

namespace clutterkit {

enum class ErrorKind {
    DuplicateLabel,
    UnknownLabel,
    EmptyEdge,
    AntichainViolation,
    NotAPermutation,
    NoEdges,
    IndexOutOfRange,
    EmptyTarget,
    EdgeTooLarge,
    OutputCapExceeded,
    NoGraphEdges,
    RetriesExhausted,
    NTooSmall,
    KTooSmall,
    SizeTooSmall,
    PreconditionFailed,
    TheoremViolated,
    TraceAssertionFailed,
    ParseError,
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::DuplicateLabel: return "DuplicateLabel";
        case ErrorKind::UnknownLabel: return "UnknownLabel";
        case ErrorKind::EmptyEdge: return "EmptyEdge";
        case ErrorKind::AntichainViolation: return "AntichainViolation";
        case ErrorKind::NotAPermutation: return "NotAPermutation";
        case ErrorKind::NoEdges: return "NoEdges";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::EmptyTarget: return "EmptyTarget";
        case ErrorKind::EdgeTooLarge: return "EdgeTooLarge";
        case ErrorKind::OutputCapExceeded: return "OutputCapExceeded";
        case ErrorKind::NoGraphEdges: return "NoGraphEdges";
        case ErrorKind::RetriesExhausted: return "RetriesExhausted";
        case ErrorKind::NTooSmall: return "NTooSmall";
        case ErrorKind::KTooSmall: return "KTooSmall";
        case ErrorKind::SizeTooSmall: return "SizeTooSmall";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::TheoremViolated: return "TheoremViolated";
        case ErrorKind::TraceAssertionFailed: return "TraceAssertionFailed";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

// Domain error with a machine-checkable kind. index_a/index_b carry the
// offending indices when the kind names one or a pair (AntichainViolation),
// -1 otherwise.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, long long a = -1, long long b = -1)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          kind_(kind),
          a_(a),
          b_(b) {}

    ErrorKind kind() const { return kind_; }
    long long index_a() const { return a_; }
    long long index_b() const { return b_; }

private:
    ErrorKind kind_;
    long long a_;
    long long b_;
};

}  // namespace clutterkit
