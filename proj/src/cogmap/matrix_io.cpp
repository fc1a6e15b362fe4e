#include "cogmap/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace cogmap {

namespace {

struct LineReader {
  std::istream& in;
  std::string name;
  std::size_t lineno = 0;

  // Next non-blank, non-comment line; false at end of input.
  bool next(std::string& out) {
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::size_t first = line.find_first_not_of(" \t");
      if (first == std::string::npos) continue;
      if (line[first] == '#') continue;
      out = line;
      return true;
    }
    return false;
  }

  [[noreturn]] void error(const std::string& msg) const {
    fail(Errc::Parse, name + ":" + std::to_string(lineno) + ": " + msg);
  }
};

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream ss(s);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

// Splits "key: rest"; returns false when the line carries no key marker.
bool key_line(const std::string& line, std::string& key, std::string& rest) {
  std::size_t colon = line.find(':');
  if (colon == std::string::npos) return false;
  key = line.substr(0, colon);
  std::size_t kb = key.find_first_not_of(" \t");
  std::size_t ke = key.find_last_not_of(" \t");
  if (kb == std::string::npos) return false;
  key = key.substr(kb, ke - kb + 1);
  if (key.find_first_of(" \t") != std::string::npos) return false;
  rest = line.substr(colon + 1);
  std::size_t rb = rest.find_first_not_of(" \t");
  rest = rb == std::string::npos ? std::string() : rest.substr(rb);
  std::size_t re = rest.find_last_not_of(" \t");
  if (re != std::string::npos) rest = rest.substr(0, re + 1);
  return true;
}

long parse_long(LineReader& r, const std::string& tok) {
  long v = 0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
    r.error("bad integer '" + tok + "'");
  return v;
}

double parse_double(LineReader& r, const std::string& tok) {
  try {
    std::size_t used = 0;
    double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    r.error("bad number '" + tok + "'");
  }
}

}  // namespace

ConnectionMatrix parse_matrix(std::istream& in, const std::string& name) {
  LineReader r{in, name};
  std::string line, key, rest;

  if (!r.next(line) || !key_line(line, key, rest) || key != "kind")
    r.error("expected 'kind: cognitive|relational|bam'");
  MatrixKind kind = [&] {
    try {
      return matrix_kind_from(rest);
    } catch (const Error&) {
      r.error("unknown matrix kind '" + rest + "'");
    }
  }();

  if (!r.next(line) || !key_line(line, key, rest) || key != "rows")
    r.error("expected 'rows: <labels>'");
  ConceptSpace rows{split_ws(rest)};

  ConceptSpace cols = rows;
  std::optional<std::int32_t> scale;
  bool want_cols = kind != MatrixKind::Cognitive;
  if (want_cols) {
    if (!r.next(line) || !key_line(line, key, rest) || key != "cols")
      r.error("expected 'cols: <labels>'");
    cols = ConceptSpace{split_ws(rest)};
  }

  ConnectionMatrix::Grid grid;
  while (r.next(line)) {
    if (key_line(line, key, rest)) {
      if (key == "scale" && kind == MatrixKind::Bam && grid.empty()) {
        scale = static_cast<std::int32_t>(parse_long(r, rest));
        continue;
      }
      r.error("unexpected '" + key + ":' line");
    }
    std::vector<NeutroValue> row;
    for (const auto& tok : split_ws(line)) {
      try {
        row.push_back(parse_token(tok));
      } catch (const Error&) {
        r.error("bad value token '" + tok + "'");
      }
    }
    if (row.size() != cols.size())
      r.error("row has " + std::to_string(row.size()) + " entries, expected " +
              std::to_string(cols.size()));
    grid.push_back(std::move(row));
  }
  if (grid.size() != rows.size())
    fail(Errc::Parse, name + ": matrix has " + std::to_string(grid.size()) + " rows, expected " +
                          std::to_string(rows.size()));

  switch (kind) {
    case MatrixKind::Cognitive: return ConnectionMatrix::cognitive(std::move(rows), std::move(grid));
    case MatrixKind::Relational:
      return ConnectionMatrix::relational(std::move(rows), std::move(cols), std::move(grid));
    case MatrixKind::Bam:
      return ConnectionMatrix::bam(std::move(rows), std::move(cols), std::move(grid), scale);
  }
  fail(Errc::Parse, name + ": unreachable");
}

ConnectionMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::Io, "cannot open matrix file '" + path.string() + "'");
  return parse_matrix(in, path.string());
}

std::string serialize_matrix(const ConnectionMatrix& m) {
  std::string out = "kind: " + std::string(to_string(m.kind())) + "\n";
  out += "rows:";
  for (const auto& l : m.row_space().labels()) out += " " + l;
  out += "\n";
  if (m.kind() != MatrixKind::Cognitive) {
    out += "cols:";
    for (const auto& l : m.col_space().labels()) out += " " + l;
    out += "\n";
  }
  if (m.kind() == MatrixKind::Bam && m.scale()) out += "scale: " + std::to_string(*m.scale()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += to_token(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

RawDataTable parse_raw_table(std::istream& in, const std::string& name) {
  LineReader r{in, name};
  std::string line;
  if (!r.next(line)) r.error("missing column header row");
  RawDataTable t;
  t.col_labels = split_ws(line);
  if (t.col_labels.empty()) r.error("empty column header row");

  while (r.next(line)) {
    auto toks = split_ws(line);
    if (toks.size() != t.cols() + 2)
      r.error("data row needs <label> <interval> and " + std::to_string(t.cols()) + " counts");
    t.row_labels.push_back(toks[0]);
    t.intervals.push_back(parse_double(r, toks[1]));
    std::vector<long> counts;
    for (std::size_t j = 2; j < toks.size(); ++j) counts.push_back(parse_long(r, toks[j]));
    t.counts.push_back(std::move(counts));
  }
  if (t.rows() == 0) fail(Errc::Parse, name + ": table has no data rows");
  check_table(t);
  return t;
}

RawDataTable load_raw_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::Io, "cannot open table file '" + path.string() + "'");
  return parse_raw_table(in, path.string());
}

BlockPlan parse_block_plan(std::istream& in, const std::string& name,
                           const std::filesystem::path& base_dir) {
  LineReader r{in, name};
  std::string line, key, rest;

  if (!r.next(line) || !key_line(line, key, rest) || key != "kind")
    r.error("expected 'kind: cognitive|relational'");
  BlockPlan plan;
  if (rest == "cognitive") plan.kind = MatrixKind::Cognitive;
  else if (rest == "relational") plan.kind = MatrixKind::Relational;
  else r.error("unknown plan kind '" + rest + "'");

  if (!r.next(line) || !key_line(line, key, rest) || key != "rows")
    r.error("expected 'rows: <labels>'");
  plan.rows = ConceptSpace{split_ws(rest)};
  if (plan.kind == MatrixKind::Relational) {
    if (!r.next(line) || !key_line(line, key, rest) || key != "cols")
      r.error("expected 'cols: <labels>'");
    plan.cols = ConceptSpace{split_ws(rest)};
  }

  std::vector<std::string> pending_rows, pending_cols;
  bool have_class = false;
  while (r.next(line)) {
    if (!key_line(line, key, rest)) r.error("expected 'class:' or 'block:' line");
    if (key == "class") {
      if (have_class) r.error("class without a following block");
      std::size_t arrow = rest.find("->");
      if (plan.kind == MatrixKind::Relational) {
        if (arrow == std::string::npos) r.error("relational class needs '<rows> -> <cols>'");
        pending_rows = split_ws(rest.substr(0, arrow));
        pending_cols = split_ws(rest.substr(arrow + 2));
      } else {
        if (arrow != std::string::npos) r.error("cognitive class takes a single label list");
        pending_rows = split_ws(rest);
        pending_cols.clear();
      }
      if (pending_rows.empty()) r.error("empty class");
      have_class = true;
    } else if (key == "block") {
      if (!have_class) r.error("block without a preceding class");
      std::filesystem::path p = rest;
      if (p.is_relative()) p = base_dir / p;
      plan.blocks.push_back({pending_rows, pending_cols, load_matrix(p)});
      have_class = false;
    } else {
      r.error("unexpected '" + key + ":' line");
    }
  }
  if (have_class) fail(Errc::Parse, name + ": class without a following block");
  if (plan.blocks.empty()) fail(Errc::Parse, name + ": plan has no blocks");
  return plan;
}

BlockPlan load_block_plan(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::Io, "cannot open plan file '" + path.string() + "'");
  return parse_block_plan(in, path.string(), path.parent_path());
}

}  // namespace cogmap
