#include <doctest.h>

#include <vector>

#include "cogmap/neutro.hpp"

using namespace cogmap;

namespace {

// Independent symbolic oracle for products: expand over the {1, I} basis
// with the table 1*1 = 1, 1*I = I*1 = I*I = I, then collect coefficients.
NeutroValue symbolic_mul(NeutroValue x, NeutroValue y) {
  long one = 0, ind = 0;
  // (x.real * 1 + x.indet * I)(y.real * 1 + y.indet * I)
  one += static_cast<long>(x.real) * y.real;           // 1 * 1
  ind += static_cast<long>(x.real) * y.indet;          // 1 * I
  ind += static_cast<long>(x.indet) * y.real;          // I * 1
  ind += static_cast<long>(x.indet) * y.indet;         // I * I
  return {static_cast<std::int32_t>(one), static_cast<std::int32_t>(ind)};
}

}  // namespace

TEST_CASE("addition is componentwise and never collapses") {
  CHECK(neutro_add({1, 0}, {0, 1}) == NeutroValue{1, 1});
  CHECK(neutro_add({0, 0}, {3, 2}) == NeutroValue{3, 2});
  // 2 + I collapses to ON only later, under the simple policy
  NeutroValue v = neutro_add({2, 0}, {0, 1});
  CHECK(v == NeutroValue{2, 1});
  CHECK(collapse(v, ThresholdPolicy::simple()) == TriState::On);
}

TEST_CASE("addition overflow is a hard error") {
  CHECK_THROWS_AS(neutro_add({INT32_MAX, 0}, {1, 0}), Error);
  CHECK_THROWS_AS(neutro_mul({INT32_MAX, 0}, {2, 0}), Error);
}

TEST_CASE("multiplication encodes I*I = I") {
  CHECK(neutro_mul(kIndeterminate, kIndeterminate) == kIndeterminate);
  CHECK(neutro_mul(kOne, kIndeterminate) == kIndeterminate);
  CHECK(neutro_mul({1, 1}, {0, 1}) == NeutroValue{0, 2});  // (1+I)(I) = I + I*I = 2I
}

TEST_CASE("multiplication matches the symbolic expansion oracle") {
  for (int a1 = -8; a1 <= 8; ++a1)
    for (int b1 = -8; b1 <= 8; ++b1)
      for (int a2 = -8; a2 <= 8; ++a2)
        for (int b2 = -8; b2 <= 8; ++b2) {
          NeutroValue x{a1, b1}, y{a2, b2};
          CHECK(neutro_mul(x, y) == symbolic_mul(x, y));
        }
}

TEST_CASE("collapse rules") {
  ThresholdPolicy simple = ThresholdPolicy::simple();
  CHECK(collapse({1, 1}, simple) == TriState::Off);   // 1 + I = 0
  CHECK(collapse({2, 1}, simple) == TriState::On);    // 2 + I = 1
  CHECK(collapse({1, 2}, simple) == TriState::Indet); // 2I + 1 = I
  CHECK(collapse({0, 0}, simple) == TriState::Off);
  ThresholdPolicy k3{3, 3, NegativeMode::ClipToOff};
  CHECK(collapse({1, 0}, k3) == TriState::Off);
  CHECK(collapse({3, 0}, k3) == TriState::On);
  CHECK(collapse({0, 2}, ThresholdPolicy::combined()) == TriState::Indet);
  CHECK(collapse({0, 1}, ThresholdPolicy::combined()) == TriState::Off);
  CHECK(collapse({2, 2}, simple) == TriState::Off);   // tie rule, any magnitude
  CHECK(collapse({-3, 0}, simple) == TriState::Off);  // clip mode
}

TEST_CASE("bipolar mode keeps the negative marker, vector layer maps it off") {
  ThresholdPolicy p{1, 1, NegativeMode::Bipolar};
  CHECK(collapse_signed({-1, 0}, p) == -1);
  CHECK(collapse({-1, 0}, p) == TriState::Off);
  CHECK(collapse_signed({-1, -2}, p) == -1);  // a > b branch with both negative
}

TEST_CASE("the tie rule can be overridden toward indeterminacy") {
  ThresholdPolicy p = ThresholdPolicy::simple();
  p.tie_mode = TieMode::Indet;
  CHECK(collapse({1, 1}, p) == TriState::Indet);
  CHECK(collapse({2, 2}, p) == TriState::Indet);
  p.k_indet = 3;
  CHECK(collapse({1, 1}, p) == TriState::Off);  // below the I threshold
}

TEST_CASE("addition group properties over [-8, 8]") {
  for (int a1 = -8; a1 <= 8; ++a1)
    for (int b1 = -8; b1 <= 8; ++b1)
      for (int a2 = -8; a2 <= 8; ++a2)
        for (int b2 = -8; b2 <= 8; ++b2) {
          NeutroValue x{a1, b1}, y{a2, b2};
          CHECK(neutro_add(x, y) == neutro_add(y, x));
          CHECK(neutro_mul(x, y) == neutro_mul(y, x));
          CHECK(neutro_add(x, kZero) == x);
          CHECK(neutro_mul(x, kOne) == x);
        }
  // associativity over a smaller window
  for (int a1 = -4; a1 <= 4; ++a1)
    for (int b1 = -4; b1 <= 4; ++b1)
      for (int a2 = -4; a2 <= 4; ++a2)
        for (int b2 = -4; b2 <= 4; ++b2) {
          NeutroValue x{a1, b1}, y{a2, b2}, z{1, -2};
          CHECK(neutro_add(neutro_add(x, y), z) == neutro_add(x, neutro_add(y, z)));
        }
}

TEST_CASE("collapse composed with lift is idempotent under the simple policy") {
  // For k >= 2 idempotence cannot hold: a single ON lifts to (1,0), which
  // the k-threshold sends back to OFF (exactly the combined-map examples).
  ThresholdPolicy simple = ThresholdPolicy::simple();
  for (int a = -8; a <= 8; ++a)
    for (int b = -8; b <= 8; ++b) {
      TriState once = collapse({a, b}, simple);
      CHECK(collapse(lift(once), simple) == once);
    }
  // OFF is stable under every policy
  for (int k = 1; k <= 4; ++k) {
    ThresholdPolicy p{k, k, NegativeMode::ClipToOff};
    CHECK(collapse(lift(TriState::Off), p) == TriState::Off);
  }
}

TEST_CASE("collapse over pure-real input with k_on = 1 is the sign threshold") {
  ThresholdPolicy p = ThresholdPolicy::simple();
  for (int a = -8; a <= 8; ++a)
    CHECK(collapse({a, 0}, p) == (a > 0 ? TriState::On : TriState::Off));
}

TEST_CASE("dot product follows the lift table") {
  // signal (1 1 0 0 0 1) against the first column of the 6x4 synaptic matrix
  std::vector<NeutroValue> col{{5, 0}, {4, 0}, {-1, 0}, {0, 0}, {2, 0}, {0, 0}};
  std::vector<TriState> sig{TriState::On, TriState::On, TriState::Off,
                            TriState::Off, TriState::Off, TriState::On};
  CHECK(neutro_dot(col, sig) == NeutroValue{9, 0});

  std::vector<NeutroValue> row{kIndeterminate, kOne};
  std::vector<TriState> st{TriState::On, TriState::Indet};
  CHECK(neutro_dot(row, st) == NeutroValue{0, 2});  // I + I

  std::vector<TriState> all_off(6, TriState::Off);
  CHECK(neutro_dot(col, all_off) == kZero);

  std::vector<TriState> too_short{TriState::On};
  CHECK_THROWS_AS(neutro_dot(col, too_short), Error);
}

TEST_CASE("token grammar") {
  CHECK(parse_token("0") == kZero);
  CHECK(parse_token("1") == kOne);
  CHECK(parse_token("-1") == NeutroValue{-1, 0});
  CHECK(parse_token("I") == kIndeterminate);
  CHECK(parse_token("-I") == NeutroValue{0, -1});
  CHECK(parse_token("7") == NeutroValue{7, 0});
  CHECK(parse_token("3I") == NeutroValue{0, 3});
  CHECK(parse_token("2+3I") == NeutroValue{2, 3});
  CHECK(parse_token("2+I") == NeutroValue{2, 1});
  CHECK(parse_token("2-I") == NeutroValue{2, -1});
  CHECK(parse_token("-1+2I") == NeutroValue{-1, 2});
  for (const char* bad : {"", "x", "1.5", "I2", "++1", "2+", "1+1", "2I+1", "1 I"})
    CHECK_THROWS_AS(parse_token(bad), Error);
}

TEST_CASE("canonical tokens round-trip") {
  for (int a = -9; a <= 9; ++a)
    for (int b = -9; b <= 9; ++b) {
      NeutroValue v{a, b};
      CHECK(parse_token(to_token(v)) == v);
    }
  CHECK(to_token(kZero) == "0");
  CHECK(to_token(kIndeterminate) == "I");
  CHECK(to_token({0, -1}) == "-I");
  CHECK(to_token({2, 1}) == "2+I");
  CHECK(to_token({2, -3}) == "2-3I");
}
