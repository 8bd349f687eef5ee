#pragma once

#include <stdexcept>
#include <string>

namespace trax {

// Canonical error names. The CLI prints err.name() verbatim, so these
// strings are part of the external interface and must stay stable.
enum class Err {
    // number fields
    NoRootInInterval,
    MultipleRootsSuspected,
    FieldMismatch,
    DivisionByZero,
    FieldRequired,
    // surfaces and spines
    FixedPointInOpposite,
    NonPermutation,
    NonTriangularFace,
    NotTrivalent,
    NotOneVertex,
    LoopEdge,
    BadPartition,
    ComplementNotDisc,
    SameFaceBothSides,
    SameTriangleBothSides,
    NotValence3,
    NotCellular,
    // train tracks
    NotMixed,
    NotLarge,
    NotFilling,
    InvalidMeasure,
    InvalidTrack,
    // orbits
    Exhausted,
    CentralSplitPresent,
    // 3-manifolds
    BoundaryMismatch,
    NotClosed,
    // lens spaces
    NotCoprime,
    OutOfRange,
    // i/o
    ParseError,
};

inline const char* err_name(Err e) {
    switch (e) {
    case Err::NoRootInInterval: return "NoRootInInterval";
    case Err::MultipleRootsSuspected: return "MultipleRootsSuspected";
    case Err::FieldMismatch: return "FieldMismatch";
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::FieldRequired: return "FieldRequired";
    case Err::FixedPointInOpposite: return "FixedPointInOpposite";
    case Err::NonPermutation: return "NonPermutation";
    case Err::NonTriangularFace: return "NonTriangularFace";
    case Err::NotTrivalent: return "NotTrivalent";
    case Err::NotOneVertex: return "NotOneVertex";
    case Err::LoopEdge: return "LoopEdge";
    case Err::BadPartition: return "BadPartition";
    case Err::ComplementNotDisc: return "ComplementNotDisc";
    case Err::SameFaceBothSides: return "SameFaceBothSides";
    case Err::SameTriangleBothSides: return "SameTriangleBothSides";
    case Err::NotValence3: return "NotValence3";
    case Err::NotCellular: return "NotCellular";
    case Err::NotMixed: return "NotMixed";
    case Err::NotLarge: return "NotLarge";
    case Err::NotFilling: return "NotFilling";
    case Err::InvalidMeasure: return "InvalidMeasure";
    case Err::InvalidTrack: return "InvalidTrack";
    case Err::Exhausted: return "Exhausted";
    case Err::CentralSplitPresent: return "CentralSplitPresent";
    case Err::BoundaryMismatch: return "BoundaryMismatch";
    case Err::NotClosed: return "NotClosed";
    case Err::NotCoprime: return "NotCoprime";
    case Err::OutOfRange: return "OutOfRange";
    case Err::ParseError: return "ParseError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& detail)
        : std::runtime_error(std::string(err_name(code)) + ": " + detail), code_(code) {}

    Err code() const { return code_; }
    const char* name() const { return err_name(code_); }

private:
    Err code_;
};

} // namespace trax
