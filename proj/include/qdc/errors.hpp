#pragma once

#include <stdexcept>
#include <string>

namespace qdc {

// Base for all domain errors. `code()` is a stable machine-readable tag
// (the CLI prints it and maps it to exit status 2).
class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string &msg) : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string &code() const noexcept { return code_; }

  private:
    std::string code_;
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string &msg) : Error("dimension", msg) {}
};
struct NotHermitian : Error {
    explicit NotHermitian(const std::string &msg) : Error("not_hermitian", msg) {}
};
struct NoConvergence : Error {
    explicit NoConvergence(const std::string &msg) : Error("no_convergence", msg) {}
};
struct NotPSD : Error {
    explicit NotPSD(const std::string &msg) : Error("not_psd", msg) {}
};
struct BadTrace : Error {
    explicit BadTrace(const std::string &msg) : Error("bad_trace", msg) {}
};
struct OutsideBlochBall : Error {
    explicit OutsideBlochBall(const std::string &msg) : Error("bloch_ball", msg) {}
};
struct BadDistribution : Error {
    explicit BadDistribution(const std::string &msg) : Error("distribution", msg) {}
};
struct ModelSupportViolation : Error {
    explicit ModelSupportViolation(const std::string &msg) : Error("model_support", msg) {}
};
struct BlockTooLarge : Error {
    explicit BlockTooLarge(const std::string &msg) : Error("block_too_large", msg) {}
};
struct EmptyInput : Error {
    explicit EmptyInput(const std::string &msg) : Error("empty_input", msg) {}
};
struct SampleTooShort : Error {
    explicit SampleTooShort(const std::string &msg) : Error("sample_too_short", msg) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string &msg) : Error("parse", msg) {}
};
struct ValidationError : Error {
    explicit ValidationError(const std::string &msg) : Error("validate", msg) {}
};

} // namespace qdc
