#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace romanus {

// Error taxonomy shared by every module.  Each failure carries a code that the
// C boundary maps onto rmn_status, plus optional location data: a byte offset
// with expected-token hints for parsers, or a node path ("/1/0" = second
// child, then first child) for evaluation failures inside an expression tree.
enum class ErrorCode {
    Syntax,              // malformed input text
    Domain,              // sqrt of a certainly negative quantity
    DivisionByZero,      // denominator certainly zero
    UndecidableSign,     // sign of a radicand/denominator straddles zero at the precision cap
    Range,               // numeric argument outside the mathematical domain
    Recognition,         // right-hand side not recognized as a supported angle value
    Unsupported,         // angle/polygon outside the {2^a * 3^b * 5^c} family
    UnsupportedDialect,  // polynomial cannot be written in the requested notation
    Invalid,             // precondition violation (bad argument shape)
    Internal,            // certification failed after all refinement rounds
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const { return code_; }

    // Byte offset into the offending source text; -1 when not applicable.
    long long offset() const { return offset_; }
    Error& with_offset(long long off) {
        offset_ = off;
        return *this;
    }

    // Tokens that would have been accepted at `offset` (syntax errors only).
    const std::vector<std::string>& expected() const { return expected_; }
    Error& with_expected(std::vector<std::string> exp) {
        expected_ = std::move(exp);
        return *this;
    }

    // Path of child indices from the root of the expression the failure
    // occurred in, e.g. "/1/0".  Empty when not applicable.
    const std::string& node_path() const { return path_; }
    Error& with_path(std::string path) {
        path_ = std::move(path);
        return *this;
    }

  private:
    ErrorCode code_;
    long long offset_ = -1;
    std::vector<std::string> expected_;
    std::string path_;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::Syntax: return "syntax";
        case ErrorCode::Domain: return "domain";
        case ErrorCode::DivisionByZero: return "division-by-zero";
        case ErrorCode::UndecidableSign: return "undecidable-sign";
        case ErrorCode::Range: return "range";
        case ErrorCode::Recognition: return "recognition";
        case ErrorCode::Unsupported: return "unsupported";
        case ErrorCode::UnsupportedDialect: return "unsupported-dialect";
        case ErrorCode::Invalid: return "invalid";
        case ErrorCode::Internal: return "internal";
    }
    return "unknown";
}

}  // namespace romanus
