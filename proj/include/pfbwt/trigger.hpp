#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

namespace pfbwt {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

// Karp-Rabin polynomial hash used to decide phrase boundaries.
inline constexpr std::uint64_t kKrBase = 256;
inline constexpr std::uint64_t kKrModulus = 1999999973;  // prime, < 2^31

// Identity fingerprint of whole phrases, modulo 2^61 - 1. The base must not be
// a power of two: 2^k only rotates bits under this modulus.
inline constexpr std::uint64_t kIdentityBase = 0x1d8e4e27c47d124fULL % ((std::uint64_t{1} << 61) - 1);
inline constexpr std::uint64_t kIdentityModulus = (std::uint64_t{1} << 61) - 1;

/// (sum_i s[i] * 256^(|s|-1-i)) mod kKrModulus.
std::uint64_t kr_hash(ByteView s) noexcept;

/// Same polynomial as kr_hash but modulo 2^61 - 1; used for dictionary lookup.
std::uint64_t identity_hash(ByteView s) noexcept;

/// Trigger strings given explicitly. Every member must have length w.
struct ExplicitSet {
  std::unordered_set<std::string> members;
};

/// A window is a trigger when its Karp-Rabin hash is 0 modulo `p`.
struct HashMod {
  std::uint64_t p = 1;
};

struct WindowConfig {
  std::size_t w = 1;
  std::variant<ExplicitSet, HashMod> mode = HashMod{};

  static WindowConfig hash_mod(std::size_t w, std::uint64_t p);
  static WindowConfig explicit_set(std::size_t w, const std::vector<std::string>& triggers);

  /// Throws Error(InvalidConfig) when w == 0, p == 0, or a trigger has the wrong length.
  void validate() const;
};

/// Circular buffer over the last w bytes with an incrementally maintained
/// Karp-Rabin fingerprint.
class RollingWindow {
 public:
  explicit RollingWindow(std::size_t w);

  void roll(std::uint8_t incoming) noexcept;
  void reset() noexcept;

  std::size_t width() const noexcept { return buf_.size(); }
  std::size_t filled() const noexcept { return filled_; }
  bool full() const noexcept { return filled_ == buf_.size(); }
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

  /// Buffer contents, oldest byte first.
  std::string contents() const;

 private:
  Bytes buf_;
  std::size_t head_ = 0;  // slot of the oldest byte once full
  std::size_t filled_ = 0;
  std::uint64_t fingerprint_ = 0;
  std::uint64_t top_power_ = 1;  // 256^(w-1) mod kKrModulus
};

/// Whether the (full) window ends a phrase. Throws Error(WindowNotFull)
/// before w bytes have been rolled in.
bool is_trigger(const WindowConfig& cfg, const RollingWindow& win);

}  // namespace pfbwt
