#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "osptri/exact/errors.hpp"

namespace osptri {

/// The closed variable universe, in increasing monomial-order rank.
enum class Var : std::uint8_t { psi = 0, psi1, psi2, n, m, r, s };

inline constexpr int kNumVars = 7;
inline constexpr std::array<Var, kNumVars> kAllVars = {Var::psi, Var::psi1, Var::psi2, Var::n,
                                                       Var::m,   Var::r,    Var::s};

/// Canonical ASCII spelling used in all text output.
inline std::string_view var_name(Var v) {
  static constexpr std::array<std::string_view, kNumVars> names = {"psi", "psi1", "psi2", "n",
                                                                   "m",   "r",    "s"};
  return names[static_cast<int>(v)];
}

/// Accepts the canonical spelling plus the primed and Greek aliases.
inline std::optional<Var> var_from_name(std::string_view s) {
  if (s == "psi" || s == "ψ") return Var::psi;
  if (s == "psi1" || s == "psi'" || s == "ψ'" || s == "ψ₁") return Var::psi1;
  if (s == "psi2" || s == "psi''" || s == "ψ''" || s == "ψ₂") return Var::psi2;
  if (s == "n") return Var::n;
  if (s == "m") return Var::m;
  if (s == "r") return Var::r;
  if (s == "s") return Var::s;
  return std::nullopt;
}

/// Packed monomial: seven 16-bit exponents (psi in the lowest field, s in
/// the highest) topped by the 16-bit total degree. Integer comparison of
/// keys is therefore graded-lex with s the most significant variable.
using Key = unsigned __int128;

namespace keys {

inline constexpr int kBits = 16;
inline constexpr unsigned kMaxExp = 0xFFFF;

inline constexpr int shift(Var v) { return kBits * static_cast<int>(v); }

inline unsigned exponent(Key k, Var v) {
  return static_cast<unsigned>((k >> shift(v)) & kMaxExp);
}

inline unsigned total(Key k) { return static_cast<unsigned>(k >> (kBits * kNumVars)); }

inline Key single(Var v, unsigned e) {
  if (e > kMaxExp) throw DomainError("exponent overflow");
  return (static_cast<Key>(e) << shift(v)) | (static_cast<Key>(e) << (kBits * kNumVars));
}

inline Key mul(Key a, Key b) {
  if (total(a) + total(b) > kMaxExp) throw DomainError("monomial degree overflow");
  return a + b;
}

inline bool divides(Key a, Key b) {
  for (Var v : kAllVars)
    if (exponent(a, v) > exponent(b, v)) return false;
  return true;
}

/// b / a, assuming divides(a, b).
inline Key quotient(Key b, Key a) { return b - a; }

/// Removes variable v from the key.
inline Key drop(Key k, Var v) {
  unsigned e = exponent(k, v);
  return k - single(v, e);
}

struct Hash {
  std::size_t operator()(Key k) const noexcept {
    auto lo = static_cast<std::uint64_t>(k);
    auto hi = static_cast<std::uint64_t>(k >> 64);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL ^ (hi + 0x7F4A7C159E3779B9ULL + (lo << 6) + (lo >> 2));
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// Text of a monomial: variables in universe order joined by '*', powers as '^'.
inline std::string to_string(Key k) {
  std::string out;
  for (Var v : kAllVars) {
    unsigned e = exponent(k, v);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace keys
}  // namespace osptri
