#pragma once

#include <stdexcept>
#include <string>

namespace glc {

enum class ErrorCode {
    InvalidInput,
    ParseError,
    PrecisionOverflow,
    InsufficientPrecision,
    NonSimpleRoot,
    InseparableConfiguration,
    BadReduction,
    EvenDegree,
    PrimeTwo,
    UnsupportedGenus,
    CapExceeded,
    DistinctDisks,
    NotInKernel,
    RamifiedConfiguration,
    NoFunctionFound,
    NotOnCurve,
    Unsaturated,
    Internal,
};

const char* error_code_name(ErrorCode code);

/// All library failures are reported through this exception; `code()` is
/// stable and is what the CLI emits in structured diagnostics.
class GlcError : public std::runtime_error {
  public:
    GlcError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw GlcError(code, what);
}

}  // namespace glc
