#include <doctest.h>

#include <fstream>
#include <functional>
#include <sstream>

#include "cogmap/dot.hpp"
#include "cogmap/matrix_io.hpp"
#include "cogmap/scenario.hpp"
#include "test_support.hpp"

using namespace cogmap;
using testsup::fixture;
using testsup::fixture_matrix;
using testsup::matrix_from;

namespace {

std::size_t count_sub(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++n;
  return n;
}

std::string msg_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("serialized matrices reparse byte-identically") {
  for (const char* name :
       {"fcm_s22_a7.mat", "fcm_s22_d12.mat", "fcm_s23_s7.mat", "ncm_s42_ne12.mat",
        "frm_s51_f.mat", "frm_s52_l.mat", "nrm_s54_na.mat", "nrm_s55_nl2.mat",
        "bam_s32_m1.mat", "bam_s32_m2.mat"}) {
    auto m = fixture_matrix(name);
    std::string canonical = serialize_matrix(m);
    std::istringstream in(canonical);
    auto reparsed = parse_matrix(in, name);
    CHECK(reparsed == m);
    CHECK(serialize_matrix(reparsed) == canonical);
  }
}

TEST_CASE("matrix parse errors carry a line number") {
  auto check_msg = [](const std::string& text, const std::string& fragment) {
    std::string msg = msg_of([&] { matrix_from(text); });
    INFO(msg);
    CHECK(msg.find(fragment) != std::string::npos);
  };
  check_msg("rows: A B\n0 0\n0 0\n", "<inline>:1: expected 'kind:");
  check_msg("kind: mystery\nrows: A\n0\n", "<inline>:1: unknown matrix kind");
  check_msg("kind: cognitive\nrows: A B\n0 0\n0 x 0\n", "<inline>:4: bad value token 'x'");
  check_msg("kind: cognitive\nrows: A B\n0 0 1\n", "<inline>:3: row has 3 entries");
  check_msg("kind: cognitive\nrows: A B\n0 0\n", "matrix has 1 rows, expected 2");
  check_msg("kind: relational\nrows: A\nrows: B\n0\n", "expected 'cols:");
}

TEST_CASE("comments and blank lines are ignored") {
  auto m = matrix_from("# heading\n\nkind: cognitive\n# spaces\nrows: A B\n0 1\n# row note\nI 0\n");
  CHECK(m.at(0, 1) == kOne);
  CHECK(m.at(1, 0) == kIndeterminate);
}

TEST_CASE("raw tables parse and validate") {
  auto t = load_raw_table(fixture("tables/age3.tbl"));
  CHECK(t.rows() == 3);
  CHECK(t.cols() == 6);
  CHECK(t.row_labels[1] == "31-35");
  CHECK(t.intervals[2] == 11.0);
  CHECK(t.counts[0][0] == 22);

  std::istringstream bad("c1 c2\nr1 5 1\n");
  CHECK_THROWS_AS(parse_raw_table(bad, "<bad>"), Error);
  std::istringstream neg("c1\nr1 5 -2\n");
  CHECK_THROWS_AS(parse_raw_table(neg, "<neg>"), Error);
  std::istringstream zero_iv("c1\nr1 0 2\n");
  CHECK_THROWS_AS(parse_raw_table(zero_iv, "<iv>"), Error);
}

TEST_CASE("block plans resolve their block files") {
  auto plan = load_block_plan(fixture("matrices/plans/cdb12.plan"));
  CHECK(plan.kind == MatrixKind::Cognitive);
  CHECK(plan.rows.size() == 12);
  CHECK(plan.blocks.size() == 3);
  CHECK(plan.blocks[0].row_class == std::vector<std::string>{"A1", "A6", "A7", "A12"});

  std::istringstream missing("kind: cognitive\nrows: A B\nclass: A B\n");
  CHECK_THROWS_AS(parse_block_plan(missing, "<p>", "."), Error);
}

TEST_CASE("scenario files load their referenced inputs") {
  auto s = load_scenario(fixture("scenarios/fcm_expert2.scn"));
  CHECK(s.kind == RunKind::Fcm);
  REQUIRE(s.matrix.has_value());
  CHECK(s.matrix->rows() == 7);
  CHECK(s.seed_labels == std::vector<std::string>{"B1"});
  CHECK(s.emit_summary);
}

TEST_CASE("scenario error paths are distinct") {
  auto parse = [&](const std::string& text) {
    std::istringstream in(text);
    return parse_scenario(in, "<scn>", fixture("scenarios"));
  };
  // syntax error with line number
  std::string msg = msg_of([&] { parse("kind=fcm\nnonsense\n"); });
  CHECK(msg.find("<scn>:2") != std::string::npos);
  // unknown key
  msg = msg_of([&] { parse("kind=fcm\nwibble=3\n"); });
  CHECK(msg.find("unknown key 'wibble'") != std::string::npos);
  // unknown seed label
  try {
    parse("kind=fcm\nmatrix=../matrices/fcm_s22_a7.mat\nseed=Zz\n");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownLabel);
    CHECK(std::string(e.what()).find("Zz") != std::string::npos);
  }
  // kind mismatch
  try {
    parse("kind=fcm\nmatrix=../matrices/frm_s51_f.mat\nseed=D1\n");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::KindMismatch);
  }
  // fcm over a neutrosophic matrix
  try {
    parse("kind=fcm\nmatrix=../matrices/ncm_s42_ne12.mat\nseed=A4\n");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::KindMismatch);
    CHECK(std::string(e.what()).find("I entries") != std::string::npos);
  }
  // empty alphas on a cetd run
  try {
    parse("kind=cetd\ntable=../tables/age3.tbl\n");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Validation);
  }
}

TEST_CASE("policy knobs parse from scenario keys") {
  auto parse = [&](const std::string& text) {
    std::istringstream in(text);
    return parse_scenario(in, "<scn>", fixture("scenarios"));
  };
  auto s = parse(
      "kind=fcm\nmatrix=../matrices/fcm_s22_a7.mat\nseed=B1\n"
      "k_on=2\nk_indet=3\nnegative_mode=bipolar\ntie_mode=indet\nmax_iters=50\n");
  CHECK(s.policy.k_on == 2);
  CHECK(s.policy.k_indet == 3);
  CHECK(s.policy.negative_mode == NegativeMode::Bipolar);
  CHECK(s.policy.tie_mode == TieMode::Indet);
  CHECK(s.max_iters == 50);
  CHECK_THROWS_AS(parse("kind=fcm\ntie_mode=sideways\n"), Error);
  CHECK_THROWS_AS(parse("kind=fcm\nk_on=0\n"), Error);
}

TEST_CASE("dot export styles indeterminate edges dashed") {
  auto m = matrix_from("kind: cognitive\nrows: A1 A2\n0 1\nI 0\n");
  std::string dot = export_dot(m, "pair");
  CHECK(count_sub(dot, "->") == 2);
  CHECK(count_sub(dot, "style=dashed") == 1);
  CHECK(dot.find("\"A1\" -> \"A2\"") != std::string::npos);

  auto zero = matrix_from("kind: cognitive\nrows: A1 A2\n0 0\n0 0\n");
  std::string none = export_dot(zero, "zero");
  CHECK(count_sub(none, "->") == 0);
  CHECK(none.find("\"A1\"") != std::string::npos);

  auto na = fixture_matrix("nrm_s54_na.mat");
  std::string bip = export_dot(na, "na");
  CHECK(count_sub(bip, "->") == 10);
  CHECK(count_sub(bip, "style=dashed") == 3);
  CHECK(count_sub(bip, "shape=box") == 5);
}

TEST_CASE("dot export is deterministic") {
  auto m = fixture_matrix("ncm_s42_ne12.mat");
  CHECK(export_dot(m, "x") == export_dot(m, "x"));
}

TEST_CASE("scenario execution emits the trace format") {
  auto s = load_scenario(fixture("scenarios/fcm_expert2.scn"));
  s.emit_trace = true;
  std::ostringstream out;
  execute_scenario(s, out);
  std::string text = out.str();
  CHECK(text.find("t=0 1 0 0 0 0 0 0\n") != std::string::npos);
  CHECK(text.find("terminal: 1 1 1 1 1 1 0\n") != std::string::npos);
  // the final line is the pattern line
  std::size_t last_nl = text.find_last_of('\n', text.size() - 2);
  CHECK(text.substr(last_nl + 1) == "pattern=fixed len=1\n");
}
