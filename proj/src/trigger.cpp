#include "pfbwt/trigger.hpp"

#include "pfbwt/error.hpp"

namespace pfbwt {

namespace {

std::uint64_t mulmod61(std::uint64_t a, std::uint64_t b) noexcept {
  const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(prod & kIdentityModulus) +
                    static_cast<std::uint64_t>(prod >> 61);
  if (r >= kIdentityModulus) r -= kIdentityModulus;
  return r;
}

}  // namespace

std::uint64_t kr_hash(ByteView s) noexcept {
  std::uint64_t h = 0;
  for (std::uint8_t c : s) h = (h * kKrBase + c) % kKrModulus;
  return h;
}

std::uint64_t identity_hash(ByteView s) noexcept {
  std::uint64_t h = 0;
  for (std::uint8_t c : s) {
    h = mulmod61(h, kIdentityBase) + c;
    if (h >= kIdentityModulus) h -= kIdentityModulus;
  }
  return h;
}

WindowConfig WindowConfig::hash_mod(std::size_t w, std::uint64_t p) {
  WindowConfig cfg{w, HashMod{p}};
  cfg.validate();
  return cfg;
}

WindowConfig WindowConfig::explicit_set(std::size_t w, const std::vector<std::string>& triggers) {
  ExplicitSet set;
  set.members.insert(triggers.begin(), triggers.end());
  WindowConfig cfg{w, std::move(set)};
  cfg.validate();
  return cfg;
}

void WindowConfig::validate() const {
  if (w == 0) throw Error(Errc::InvalidConfig, "window length must be at least 1");
  if (const auto* hm = std::get_if<HashMod>(&mode)) {
    if (hm->p == 0) throw Error(Errc::InvalidConfig, "modulus p must be at least 1");
    return;
  }
  for (const auto& t : std::get<ExplicitSet>(mode).members) {
    if (t.size() != w) {
      throw Error(Errc::InvalidConfig, "trigger string of length " + std::to_string(t.size()) +
                                           " does not match window length " + std::to_string(w));
    }
  }
}

RollingWindow::RollingWindow(std::size_t w) : buf_(w) {
  if (w == 0) throw Error(Errc::InvalidConfig, "window length must be at least 1");
  for (std::size_t i = 1; i < w; ++i) top_power_ = top_power_ * kKrBase % kKrModulus;
}

void RollingWindow::roll(std::uint8_t incoming) noexcept {
  const std::size_t w = buf_.size();
  if (filled_ < w) {
    buf_[(head_ + filled_) % w] = incoming;
    ++filled_;
    fingerprint_ = (fingerprint_ * kKrBase + incoming) % kKrModulus;
    return;
  }
  const std::uint64_t outgoing = buf_[head_] * top_power_ % kKrModulus;
  fingerprint_ = (fingerprint_ + kKrModulus - outgoing) % kKrModulus;
  fingerprint_ = (fingerprint_ * kKrBase + incoming) % kKrModulus;
  buf_[head_] = incoming;
  head_ = (head_ + 1) % w;
}

void RollingWindow::reset() noexcept {
  head_ = 0;
  filled_ = 0;
  fingerprint_ = 0;
}

std::string RollingWindow::contents() const {
  std::string out;
  out.reserve(filled_);
  for (std::size_t i = 0; i < filled_; ++i) {
    out.push_back(static_cast<char>(buf_[(head_ + i) % buf_.size()]));
  }
  return out;
}

bool is_trigger(const WindowConfig& cfg, const RollingWindow& win) {
  if (!win.full() || win.width() != cfg.w) {
    throw Error(Errc::WindowNotFull, "window holds " + std::to_string(win.filled()) + " of " +
                                         std::to_string(cfg.w) + " bytes");
  }
  if (const auto* hm = std::get_if<HashMod>(&cfg.mode)) return win.fingerprint() % hm->p == 0;
  return std::get<ExplicitSet>(cfg.mode).members.contains(win.contents());
}

}  // namespace pfbwt
