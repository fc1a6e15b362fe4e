#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "cogmap/errors.hpp"

namespace cogmap {

/// A value a + bI over the integers, where I is the indeterminate with
/// I*I = I.  Stored exactly as computed; no collapse happens here.
struct NeutroValue {
  std::int32_t real = 0;   // a
  std::int32_t indet = 0;  // b

  constexpr NeutroValue() = default;
  constexpr NeutroValue(std::int32_t a, std::int32_t b) : real(a), indet(b) {}

  constexpr bool is_zero() const { return real == 0 && indet == 0; }
  constexpr bool is_pure_real() const { return indet == 0; }

  friend constexpr bool operator==(NeutroValue, NeutroValue) = default;
};

inline constexpr NeutroValue kZero{0, 0};
inline constexpr NeutroValue kOne{1, 0};
inline constexpr NeutroValue kIndeterminate{0, 1};

/// Componentwise sum.  Overflow is a hard error: all paper matrices are
/// tiny and a wrapped sum can only mean corrupt input.
NeutroValue neutro_add(NeutroValue x, NeutroValue y);

/// (a1 + b1*I)(a2 + b2*I) = a1*a2 + (a1*b2 + b1*a2 + b1*b2) I, encoding I*I = I.
NeutroValue neutro_mul(NeutroValue x, NeutroValue y);

inline NeutroValue operator+(NeutroValue x, NeutroValue y) { return neutro_add(x, y); }
inline NeutroValue operator*(NeutroValue x, NeutroValue y) { return neutro_mul(x, y); }

/// On / off / indeterminate activation of one concept.
enum class TriState : std::uint8_t { Off = 0, On = 1, Indet = 2 };

/// The embedding used by every dot product: OFF -> 0, ON -> 1, INDET -> I.
constexpr NeutroValue lift(TriState s) {
  switch (s) {
    case TriState::On: return {1, 0};
    case TriState::Indet: return {0, 1};
    case TriState::Off: break;
  }
  return {0, 0};
}

enum class NegativeMode { ClipToOff, Bipolar };

/// The tie a = b != 0 defaults to OFF (1 + I = 0, extended to every
/// magnitude); TieMode::Indet lets indeterminacy win instead.
enum class TieMode { Off, Indet };

/// Thresholds applied when an accumulated value is collapsed back to a
/// tri-state.  Simple maps use k = 1; combined maps conventionally k = 2,
/// with larger constants (e.g. 3 for five experts) set per scenario.
struct ThresholdPolicy {
  std::int32_t k_on = 1;
  std::int32_t k_indet = 1;
  NegativeMode negative_mode = NegativeMode::ClipToOff;
  TieMode tie_mode = TieMode::Off;

  static constexpr ThresholdPolicy simple() { return {1, 1, NegativeMode::ClipToOff, TieMode::Off}; }
  static constexpr ThresholdPolicy combined() { return {2, 2, NegativeMode::ClipToOff, TieMode::Off}; }
};

/// Collapse a + bI to a tri-state:
///   a = b = 0        -> OFF
///   a > b            -> ON when a >= k_on, else OFF
///   b > a            -> INDET when b >= k_indet, else OFF
///   a = b != 0       -> OFF by default; INDET under TieMode::Indet when
///                       b >= k_indet
TriState collapse(NeutroValue v, const ThresholdPolicy& p);

/// Collapse keeping the bipolar-off marker: returns -1 when the policy is
/// bipolar and a <= -k_on dominates; otherwise 0/1/2 mirroring TriState.
/// The marker only matters inside the engine (it feeds -1 into the next
/// product); the vector layer maps it to OFF.
int collapse_signed(NeutroValue v, const ThresholdPolicy& p);

/// Sum over i of row[i] * lift(state[i]); no collapse applied.
NeutroValue neutro_dot(std::span<const NeutroValue> row, std::span<const TriState> state);

/// Canonical token forms: 0, 1, -1, <int>, I, -I, <int>I, <int>+<int>I,
/// <int>-<int>I.
std::string to_token(NeutroValue v);

/// Parse a token of the grammar above; the I coefficient may be implicit
/// ("I", "-I", "2+I").  Anything else is a parse error.
NeutroValue parse_token(std::string_view token);

char to_char(TriState s);
TriState state_from_char(char c);

}  // namespace cogmap
