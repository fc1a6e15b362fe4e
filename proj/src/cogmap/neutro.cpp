#include "cogmap/neutro.hpp"

#include <cctype>
#include <charconv>

namespace cogmap {

namespace {

std::int32_t checked_add(std::int32_t a, std::int32_t b) {
  std::int32_t out;
  if (__builtin_add_overflow(a, b, &out))
    fail(Errc::Overflow, "integer overflow in neutrosophic addition");
  return out;
}

std::int32_t checked_mul(std::int32_t a, std::int32_t b) {
  std::int32_t out;
  if (__builtin_mul_overflow(a, b, &out))
    fail(Errc::Overflow, "integer overflow in neutrosophic multiplication");
  return out;
}

}  // namespace

NeutroValue neutro_add(NeutroValue x, NeutroValue y) {
  return {checked_add(x.real, y.real), checked_add(x.indet, y.indet)};
}

NeutroValue neutro_mul(NeutroValue x, NeutroValue y) {
  std::int32_t a = checked_mul(x.real, y.real);
  std::int32_t b = checked_add(checked_add(checked_mul(x.real, y.indet), checked_mul(x.indet, y.real)),
                               checked_mul(x.indet, y.indet));
  return {a, b};
}

TriState collapse(NeutroValue v, const ThresholdPolicy& p) {
  int s = collapse_signed(v, p);
  if (s == 1) return TriState::On;
  if (s == 2) return TriState::Indet;
  return TriState::Off;
}

int collapse_signed(NeutroValue v, const ThresholdPolicy& p) {
  if (p.k_on < 1 || p.k_indet < 1)
    fail(Errc::Validation, "threshold policy constants must be positive");
  const auto a = v.real;
  const auto b = v.indet;
  const bool marker = p.negative_mode == NegativeMode::Bipolar && a <= -p.k_on;
  if (a == 0 && b == 0) return 0;
  if (a > b) {
    if (a >= p.k_on) return 1;
    return marker ? -1 : 0;
  }
  if (b > a) {
    if (b >= p.k_indet) return 2;
    return marker ? -1 : 0;
  }
  if (p.tie_mode == TieMode::Indet && b >= p.k_indet) return 2;
  return 0;  // tie a == b != 0
}

NeutroValue neutro_dot(std::span<const NeutroValue> row, std::span<const TriState> state) {
  if (row.size() != state.size())
    fail(Errc::ShapeMismatch, "dot product over sequences of unequal length");
  NeutroValue acc;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (state[i] == TriState::Off) continue;
    acc = neutro_add(acc, neutro_mul(row[i], lift(state[i])));
  }
  return acc;
}

std::string to_token(NeutroValue v) {
  if (v.indet == 0) return std::to_string(v.real);
  std::string it;
  if (v.indet == 1) it = "I";
  else if (v.indet == -1) it = "-I";
  else it = std::to_string(v.indet) + "I";
  if (v.real == 0) return it;
  if (v.indet > 0) return std::to_string(v.real) + "+" + (v.indet == 1 ? "I" : std::to_string(v.indet) + "I");
  return std::to_string(v.real) + "-" + (v.indet == -1 ? "I" : std::to_string(-v.indet) + "I");
}

namespace {

// Reads [sign]digits starting at pos; digits may be absent when
// `allow_bare` (the implicit coefficient of I).  Returns false on malformed.
bool read_int(std::string_view s, std::size_t& pos, bool allow_bare, std::int64_t& out) {
  std::int64_t sign = 1;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    if (s[pos] == '-') sign = -1;
    ++pos;
  }
  std::size_t dstart = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == dstart) {
    // no digits: only valid as the implicit coefficient of I
    if (!allow_bare) return false;
    out = sign;
    return true;
  }
  std::int64_t mag = 0;
  auto res = std::from_chars(s.data() + dstart, s.data() + pos, mag);
  if (res.ec != std::errc() || res.ptr != s.data() + pos) return false;
  out = sign * mag;
  return true;
}

}  // namespace

NeutroValue parse_token(std::string_view token) {
  auto bad = [&]() -> NeutroValue {
    fail(Errc::Parse, "bad value token '" + std::string(token) + "'");
  };
  if (token.empty()) return bad();

  std::size_t pos = 0;
  std::int64_t first = 0;
  if (!read_int(token, pos, /*allow_bare=*/true, first)) return bad();

  if (pos == token.size()) {
    // plain integer; a bare sign alone is malformed
    if (!std::isdigit(static_cast<unsigned char>(token.back()))) return bad();
    if (first < INT32_MIN || first > INT32_MAX) return bad();
    return {static_cast<std::int32_t>(first), 0};
  }
  if (token[pos] == 'I') {
    if (pos + 1 != token.size()) return bad();
    if (first < INT32_MIN || first > INT32_MAX) return bad();
    return {0, static_cast<std::int32_t>(first)};
  }
  // mixed form: <int> then signed coefficient then 'I'
  if (token[pos] != '+' && token[pos] != '-') return bad();
  if (!std::isdigit(static_cast<unsigned char>(token[pos - 1]))) return bad();
  std::int64_t second = 0;
  if (!read_int(token, pos, /*allow_bare=*/true, second)) return bad();
  if (pos >= token.size() || token[pos] != 'I' || pos + 1 != token.size()) return bad();
  if (first < INT32_MIN || first > INT32_MAX || second < INT32_MIN || second > INT32_MAX) return bad();
  return {static_cast<std::int32_t>(first), static_cast<std::int32_t>(second)};
}

char to_char(TriState s) {
  switch (s) {
    case TriState::On: return '1';
    case TriState::Indet: return 'I';
    case TriState::Off: break;
  }
  return '0';
}

TriState state_from_char(char c) {
  switch (c) {
    case '0': return TriState::Off;
    case '1': return TriState::On;
    case 'I': return TriState::Indet;
    default: fail(Errc::Parse, std::string("bad state character '") + c + "'");
  }
}

}  // namespace cogmap
