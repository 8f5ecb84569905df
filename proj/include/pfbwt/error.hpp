#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pfbwt {

enum class Errc {
  WindowNotFull,
  InvalidConfig,
  EmptyInput,
  InputAlphabet,
  FingerprintCollision,
  Overflow,
  MalformedParse,
  BadTerminator,
  LengthMismatch,
  PositionOutOfRange,
  CycleError,
  BadMagic,
  VersionMismatch,
  TruncatedFile,
  Io,
  CheckFailed,
};

constexpr std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::WindowNotFull: return "WindowNotFull";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::InputAlphabet: return "InputAlphabetError";
    case Errc::FingerprintCollision: return "FingerprintCollision";
    case Errc::Overflow: return "Overflow";
    case Errc::MalformedParse: return "MalformedParse";
    case Errc::BadTerminator: return "BadTerminator";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::PositionOutOfRange: return "PositionOutOfRange";
    case Errc::CycleError: return "CycleError";
    case Errc::BadMagic: return "BadMagic";
    case Errc::VersionMismatch: return "VersionMismatch";
    case Errc::TruncatedFile: return "TruncatedFile";
    case Errc::Io: return "IoError";
    case Errc::CheckFailed: return "CheckFailed";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this exception; `code()`
/// tells callers (and the CLI exit-code mapping) what went wrong.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// True for errors that signal a bug or corrupted in-memory state rather than
// bad input.
inline bool is_internal(Errc code) noexcept {
  return code == Errc::LengthMismatch || code == Errc::CycleError || code == Errc::CheckFailed;
}

}  // namespace pfbwt
