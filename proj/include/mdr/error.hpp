#pragma once

#include <stdexcept>
#include <string>

namespace mdr {

// Error taxonomy shared by all modules. `kind` is the stable tag surfaced
// by the CLI; `user_fault` distinguishes bad input (exit 2) from broken
// internal invariants (exit 3).
enum class ErrKind {
    DegenerateInput,
    InvalidMorphism,
    CompositionMismatch,
    UnsupportedInput,
    UnsupportedPresentation,
    UnsupportedPoint,
    Effectivity,
    Separability,
    Precondition,
    WindowExhausted,
    InvariantViolation,
    Parse,
};

inline const char* err_kind_name(ErrKind k) {
    switch (k) {
        case ErrKind::DegenerateInput: return "degenerate-input";
        case ErrKind::InvalidMorphism: return "invalid-morphism";
        case ErrKind::CompositionMismatch: return "composition-mismatch";
        case ErrKind::UnsupportedInput: return "unsupported-input";
        case ErrKind::UnsupportedPresentation: return "unsupported-presentation";
        case ErrKind::UnsupportedPoint: return "unsupported-point";
        case ErrKind::Effectivity: return "effectivity";
        case ErrKind::Separability: return "separability";
        case ErrKind::Precondition: return "precondition";
        case ErrKind::WindowExhausted: return "window-exhausted";
        case ErrKind::InvariantViolation: return "invariant-violation";
        case ErrKind::Parse: return "parse";
    }
    return "unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrKind kind, const std::string& msg)
        : std::runtime_error(std::string(err_kind_name(kind)) + ": " + msg), kind_(kind) {}

    ErrKind kind() const { return kind_; }

    bool user_fault() const { return kind_ != ErrKind::InvariantViolation; }

  private:
    ErrKind kind_;
};

[[noreturn]] inline void fail(ErrKind kind, const std::string& msg) { throw Error(kind, msg); }

// Internal invariant check that must hold for all valid inputs.
inline void require_invariant(bool ok, const std::string& what) {
    if (!ok) fail(ErrKind::InvariantViolation, what);
}

}  // namespace mdr
