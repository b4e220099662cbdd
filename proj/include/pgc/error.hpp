#ifndef PGC_ERROR_HPP
#define PGC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pgc {

// Every failure the library can signal.  Codes group into three families:
// malformed caller input, corrupt encoded data, and internal contract
// violations (which indicate a bug or an out-of-contract input).
enum class Err {
    // graph construction / queries
    MalformedSpec,
    NonPlanarRotation,
    NotOnOuterFace,
    Disconnected,
    NotACycle,
    LengthMismatch,
    TooLargeForCanonical,
    LoopsPresent,
    // bitstream
    TruncatedInput,
    CorruptDirectory,
    // separator
    NoCycle,
    ContractUnmet,
    // base tables
    CapExceeded,
    NotInTable,
    TableUnavailable,
    // codecs
    TooSmall,
    SplitNotShrinking,
    AmbiguousLowDegree,
    DfsOutOfRange,
    BoundaryMismatch,
    WheelNotFound,
    AmbiguousRim,
    BitmapLengthMismatch,
    // driver
    ValidationFailed,
    CorruptBlob,
    UnknownVersion,
    // cli / formats
    BadFormat,
    IoError,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
  public:
    Error(Err code, std::string message)
        : std::runtime_error(std::string(err_name(code)) + ": " + message),
          code_(code) {}

    Err code() const { return code_; }

  private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& message) {
    throw Error(code, message);
}

// Contract checks that stay on in release builds.  These guard invariants
// whose violation means corrupt input or an internal bug, never a normal
// error path.
inline void require(bool cond, Err code, const char* message) {
    if (!cond) fail(code, message);
}

}  // namespace pgc

#endif  // PGC_ERROR_HPP
