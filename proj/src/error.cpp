#include "pgc/error.hpp"

namespace pgc {

const char* err_name(Err e) {
    switch (e) {
        case Err::MalformedSpec: return "MalformedSpec";
        case Err::NonPlanarRotation: return "NonPlanarRotation";
        case Err::NotOnOuterFace: return "NotOnOuterFace";
        case Err::Disconnected: return "Disconnected";
        case Err::NotACycle: return "NotACycle";
        case Err::LengthMismatch: return "LengthMismatch";
        case Err::TooLargeForCanonical: return "TooLargeForCanonical";
        case Err::LoopsPresent: return "LoopsPresent";
        case Err::TruncatedInput: return "TruncatedInput";
        case Err::CorruptDirectory: return "CorruptDirectory";
        case Err::NoCycle: return "NoCycle";
        case Err::ContractUnmet: return "ContractUnmet";
        case Err::CapExceeded: return "CapExceeded";
        case Err::NotInTable: return "NotInTable";
        case Err::TableUnavailable: return "TableUnavailable";
        case Err::TooSmall: return "TooSmall";
        case Err::SplitNotShrinking: return "SplitNotShrinking";
        case Err::AmbiguousLowDegree: return "AmbiguousLowDegree";
        case Err::DfsOutOfRange: return "DfsOutOfRange";
        case Err::BoundaryMismatch: return "BoundaryMismatch";
        case Err::WheelNotFound: return "WheelNotFound";
        case Err::AmbiguousRim: return "AmbiguousRim";
        case Err::BitmapLengthMismatch: return "BitmapLengthMismatch";
        case Err::ValidationFailed: return "ValidationFailed";
        case Err::CorruptBlob: return "CorruptBlob";
        case Err::UnknownVersion: return "UnknownVersion";
        case Err::BadFormat: return "BadFormat";
        case Err::IoError: return "IoError";
    }
    return "UnknownError";
}

}  // namespace pgc
