#pragma once

#include <stdexcept>
#include <string>

namespace cogmap {

/// Domain error categories.  Every category maps to a stable one-token
/// prefix used in CLI diagnostics, so downstream scripts can match on it.
enum class Errc {
  Parse,
  UnknownLabel,
  DuplicateEdge,
  SelfLoop,
  KindMismatch,
  ShapeMismatch,
  Overlap,
  Validation,
  NonConvergence,
  Overflow,
  Io,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Errc code() const noexcept { return code_; }

  const char* category() const noexcept {
    switch (code_) {
      case Errc::Parse: return "parse";
      case Errc::UnknownLabel: return "unknown-label";
      case Errc::DuplicateEdge: return "duplicate-edge";
      case Errc::SelfLoop: return "self-loop";
      case Errc::KindMismatch: return "kind-mismatch";
      case Errc::ShapeMismatch: return "shape-mismatch";
      case Errc::Overlap: return "overlap";
      case Errc::Validation: return "validation";
      case Errc::NonConvergence: return "non-convergence";
      case Errc::Overflow: return "overflow";
      case Errc::Io: return "io";
    }
    return "error";
  }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace cogmap
