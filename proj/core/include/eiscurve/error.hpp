#pragma once

#include <stdexcept>
#include <string>

namespace eiscurve {

// Machine-greppable error codes. `argument` and `decode` are caller mistakes
// (CLI exit 2); the rest are domain failures (CLI exit 1).
enum class ErrorCode {
    argument,
    decode,
    parity,
    precision,
    domain_mismatch,
    no_anchor,
    not_stable,
    degenerate,
    use_e2,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::argument: return "argument";
        case ErrorCode::decode: return "decode";
        case ErrorCode::parity: return "parity";
        case ErrorCode::precision: return "precision";
        case ErrorCode::domain_mismatch: return "domain-mismatch";
        case ErrorCode::no_anchor: return "no-anchor";
        case ErrorCode::not_stable: return "not-stable";
        case ErrorCode::degenerate: return "degenerate";
        case ErrorCode::use_e2: return "use-e2";
    }
    return "unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }
    const char* code_name() const { return error_code_name(code_); }

    // Argument and decode problems map to exit status 2, domain problems to 1.
    int exit_status() const {
        return (code_ == ErrorCode::argument || code_ == ErrorCode::decode) ? 2 : 1;
    }

  private:
    ErrorCode code_;
};

}  // namespace eiscurve
