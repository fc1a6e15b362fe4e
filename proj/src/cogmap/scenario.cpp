#include "cogmap/scenario.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cogmap/dot.hpp"
#include "cogmap/matrix_io.hpp"

namespace cogmap {

RunKind run_kind_from(std::string_view s) {
  if (s == "fcm") return RunKind::Fcm;
  if (s == "ncm") return RunKind::Ncm;
  if (s == "frm") return RunKind::Frm;
  if (s == "nrm") return RunKind::Nrm;
  if (s == "bam") return RunKind::Bam;
  if (s == "cetd") return RunKind::Cetd;
  if (s == "compose") return RunKind::Compose;
  fail(Errc::Parse, "unknown run kind '" + std::string(s) + "'");
}

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

bool matrix_has_indet(const ConnectionMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j).indet != 0) return true;
  return false;
}

struct ScenarioParser {
  std::string name;
  std::filesystem::path base;
  std::size_t lineno = 0;

  [[noreturn]] void error(const std::string& msg) const {
    fail(Errc::Parse, name + ":" + std::to_string(lineno) + ": " + msg);
  }

  long to_long(const std::string& v) const {
    long out = 0;
    auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size())
      error("bad integer '" + v + "'");
    return out;
  }

  double to_double(const std::string& v) const {
    try {
      std::size_t used = 0;
      double d = std::stod(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
      return d;
    } catch (const std::exception&) {
      error("bad number '" + v + "'");
    }
  }

  bool to_bool(const std::string& v) const {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    error("bad boolean '" + v + "'");
  }

  std::filesystem::path resolve(const std::string& p) const {
    std::filesystem::path path = p;
    return path.is_relative() ? base / path : path;
  }
};

void validate_scenario(const Scenario& s, const ScenarioParser& ctx) {
  auto kind_error = [&](const std::string& msg) { fail(Errc::KindMismatch, ctx.name + ": " + msg); };
  switch (s.kind) {
    case RunKind::Fcm:
    case RunKind::Ncm:
      if (!s.matrix) fail(Errc::Parse, ctx.name + ": missing matrix=");
      if (s.matrix->kind() != MatrixKind::Cognitive)
        kind_error("fcm/ncm runs need a cognitive matrix, got " +
                   std::string(to_string(s.matrix->kind())));
      if (s.kind == RunKind::Fcm && matrix_has_indet(*s.matrix))
        kind_error("fcm run over a matrix with I entries; use kind=ncm");
      if (s.seed_labels.empty()) fail(Errc::Parse, ctx.name + ": missing seed=");
      break;
    case RunKind::Frm:
    case RunKind::Nrm:
      if (!s.matrix) fail(Errc::Parse, ctx.name + ": missing matrix=");
      if (s.matrix->kind() != MatrixKind::Relational)
        kind_error("frm/nrm runs need a relational matrix, got " +
                   std::string(to_string(s.matrix->kind())));
      if (s.kind == RunKind::Frm && matrix_has_indet(*s.matrix))
        kind_error("frm run over a matrix with I entries; use kind=nrm");
      if (s.seed_labels.empty()) fail(Errc::Parse, ctx.name + ": missing seed=");
      break;
    case RunKind::Bam:
      if (!s.matrix) fail(Errc::Parse, ctx.name + ": missing matrix=");
      if (s.matrix->kind() != MatrixKind::Bam)
        kind_error("bam runs need a bam matrix, got " + std::string(to_string(s.matrix->kind())));
      if (s.bam_input.empty()) fail(Errc::Parse, ctx.name + ": missing seed= activation vector");
      break;
    case RunKind::Cetd:
      if (!s.table) fail(Errc::Parse, ctx.name + ": missing table=");
      if (s.alphas.empty()) fail(Errc::Validation, ctx.name + ": cetd run needs a non-empty alphas=");
      break;
    case RunKind::Compose:
      if (!s.op) fail(Errc::Parse, ctx.name + ": missing op=");
      if (*s.op == ComposeOp::Combine && s.inputs.empty())
        fail(Errc::Parse, ctx.name + ": combine needs inputs=");
      if (*s.op == ComposeOp::Link && s.inputs.size() != 2)
        fail(Errc::Parse, ctx.name + ": link needs exactly two inputs=");
      if ((*s.op == ComposeOp::Disjoint || *s.op == ComposeOp::Overlap) && !s.plan)
        fail(Errc::Parse, ctx.name + ": block assembly needs plan=");
      break;
  }
  // Resolve seed labels against the matrix spaces now, so unknown labels
  // surface at parse time.
  if (s.matrix && !s.seed_labels.empty()) {
    const auto& m = *s.matrix;
    for (const auto& l : s.seed_labels) {
      if (m.kind() == MatrixKind::Cognitive) {
        m.row_space().index_of(l);
      } else if (!m.row_space().find(l) && !m.col_space().find(l)) {
        fail(Errc::UnknownLabel, ctx.name + ": seed label '" + l + "' is in neither space");
      }
    }
  }
}

}  // namespace

Scenario parse_scenario(std::istream& in, const std::string& name,
                        const std::filesystem::path& base_dir) {
  ScenarioParser ctx{name, base_dir};
  Scenario s;
  s.source_name = name;
  bool have_kind = false;

  std::string line;
  while (std::getline(in, line)) {
    ++ctx.lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) ctx.error("expected key=value");
    std::string key = line.substr(first, eq - first);
    std::size_t ke = key.find_last_not_of(" \t");
    key = key.substr(0, ke == std::string::npos ? 0 : ke + 1);
    std::string value = line.substr(eq + 1);
    std::size_t vb = value.find_first_not_of(" \t");
    value = vb == std::string::npos ? std::string() : value.substr(vb);
    std::size_t ve = value.find_last_not_of(" \t");
    if (ve != std::string::npos) value = value.substr(0, ve + 1);

    if (key == "kind") {
      try {
        s.kind = run_kind_from(value);
      } catch (const Error&) {
        ctx.error("unknown run kind '" + value + "'");
      }
      have_kind = true;
    } else if (key == "matrix") {
      s.matrix = load_matrix(ctx.resolve(value));
      s.matrix_name = std::filesystem::path(value).stem().string();
    } else if (key == "seed") {
      if (s.kind == RunKind::Bam) {
        s.bam_input.clear();
        for (const auto& t : split_list(value)) s.bam_input.push_back(ctx.to_long(t));
      } else {
        s.seed_labels = split_list(value);
      }
    } else if (key == "k_on") {
      s.policy.k_on = static_cast<std::int32_t>(ctx.to_long(value));
      if (s.policy.k_on < 1) ctx.error("k_on must be a positive integer");
    } else if (key == "k_indet") {
      s.policy.k_indet = static_cast<std::int32_t>(ctx.to_long(value));
      if (s.policy.k_indet < 1) ctx.error("k_indet must be a positive integer");
    } else if (key == "negative_mode") {
      if (value == "clip") s.policy.negative_mode = NegativeMode::ClipToOff;
      else if (value == "bipolar") s.policy.negative_mode = NegativeMode::Bipolar;
      else ctx.error("negative_mode is clip or bipolar");
    } else if (key == "tie_mode") {
      if (value == "off") s.policy.tie_mode = TieMode::Off;
      else if (value == "indet") s.policy.tie_mode = TieMode::Indet;
      else ctx.error("tie_mode is off or indet");
    } else if (key == "max_iters") {
      long v = ctx.to_long(value);
      if (v < 1) ctx.error("max_iters must be at least 1");
      s.max_iters = static_cast<std::size_t>(v);
    } else if (key == "alphas") {
      s.alphas.clear();
      for (const auto& t : split_list(value)) s.alphas.push_back(ctx.to_double(t));
    } else if (key == "table") {
      s.table = load_raw_table(ctx.resolve(value));
    } else if (key == "exact") {
      s.cetd_options.published_precision = !ctx.to_bool(value);
    } else if (key == "thresholds_u") {
      for (const auto& t : split_list(value)) s.bam.thresholds_u.push_back(ctx.to_long(t));
    } else if (key == "thresholds_v") {
      for (const auto& t : split_list(value)) s.bam.thresholds_v.push_back(ctx.to_long(t));
    } else if (key == "mode") {
      if (value == "binary") s.bam.mode = BamConfig::Mode::Binary;
      else if (value == "bipolar") s.bam.mode = BamConfig::Mode::Bipolar;
      else ctx.error("mode is binary or bipolar");
    } else if (key == "initial_y") {
      s.bam.initial_y.clear();
      for (const auto& t : split_list(value)) {
        if (t.size() != 1) ctx.error("initial_y entries are single state characters");
        s.bam.initial_y.push_back(state_from_char(t[0]));
      }
    } else if (key == "op") {
      if (value == "combine") s.op = ComposeOp::Combine;
      else if (value == "disjoint") s.op = ComposeOp::Disjoint;
      else if (value == "overlap") s.op = ComposeOp::Overlap;
      else if (value == "link") s.op = ComposeOp::Link;
      else ctx.error("op is combine, disjoint, overlap or link");
    } else if (key == "inputs") {
      for (const auto& p : split_list(value)) s.inputs.push_back(load_matrix(ctx.resolve(p)));
    } else if (key == "plan") {
      s.plan = load_block_plan(ctx.resolve(value));
    } else if (key == "transpose_a") {
      s.transpose_a = ctx.to_bool(value);
    } else if (key == "transpose_b") {
      s.transpose_b = ctx.to_bool(value);
    } else if (key == "link_k") {
      s.link_rule.k = static_cast<std::int32_t>(ctx.to_long(value));
    } else if (key == "emit") {
      s.emit_trace = s.emit_dot = s.emit_summary = false;
      for (const auto& t : split_list(value)) {
        if (t == "trace") s.emit_trace = true;
        else if (t == "dot") s.emit_dot = true;
        else if (t == "summary") s.emit_summary = true;
        else ctx.error("emit entries are trace, dot or summary");
      }
    } else {
      ctx.error("unknown key '" + key + "'");
    }
  }
  if (!have_kind) fail(Errc::Parse, name + ": missing kind=");
  validate_scenario(s, ctx);
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::Io, "cannot open scenario file '" + path.string() + "'");
  return parse_scenario(in, path.string(), path.parent_path());
}

void emit_cognitive(const HiddenPattern& p, bool trace, bool summary, std::ostream& out) {
  if (trace)
    for (std::size_t k = 0; k < p.trace.size(); ++k)
      out << "t=" << k << ' ' << to_string(p.trace[k]) << '\n';
  if (summary) {
    if (p.kind == PatternKind::FixedPoint) {
      out << "terminal: " << to_string(p.terminal()) << '\n';
    } else {
      for (std::size_t k = 0; k < p.states.size(); ++k)
        out << "cycle[" << k << "]: " << to_string(p.states[k]) << '\n';
    }
    out << "iterations: " << p.iterations << '\n';
  }
  out << (p.kind == PatternKind::FixedPoint ? "pattern=fixed len=1" : "pattern=cycle len=")
      << (p.kind == PatternKind::FixedPoint ? "" : std::to_string(p.states.size())) << '\n';
}

void emit_relational(const RelationalPattern& p, bool trace, bool summary, std::ostream& out) {
  if (trace) {
    for (std::size_t k = 0; k < p.half_steps.size(); ++k) {
      const SideStep& h = p.half_steps[k];
      if (!h.activations.empty()) {
        out << "# t=" << k << ' ' << h.side << " act";
        for (long a : h.activations) out << ' ' << a;
        out << '\n';
      }
      out << "t=" << k << ' ' << h.side << ' ' << to_string(h.states) << '\n';
    }
  }
  if (summary) {
    if (p.kind == PatternKind::FixedPoint) {
      out << "terminal D: " << to_string(p.terminal().domain) << '\n';
      out << "terminal R: " << to_string(p.terminal().range) << '\n';
    } else {
      for (std::size_t k = 0; k < p.states.size(); ++k) {
        out << "cycle[" << k << "] D: " << to_string(p.states[k].domain) << '\n';
        out << "cycle[" << k << "] R: " << to_string(p.states[k].range) << '\n';
      }
    }
    out << "iterations: " << p.iterations << '\n';
  }
  out << (p.kind == PatternKind::FixedPoint ? "pattern=fixed len=1" : "pattern=cycle len=")
      << (p.kind == PatternKind::FixedPoint ? "" : std::to_string(p.states.size())) << '\n';
}

void emit_cetd(const CetdProfile& p, std::ostream& out) {
  auto print_int_matrix = [&](const std::vector<std::vector<int>>& m) {
    for (const auto& row : m) {
      for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
      out << '\n';
    }
  };
  out << "atd:\n";
  for (const auto& row : p.atd) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << fmt_double(row[j]);
    out << '\n';
  }
  out << "mean:";
  for (double v : p.stats.mean) out << ' ' << fmt_double(v);
  out << "\nstd:";
  for (double v : p.stats.stddev) out << ' ' << fmt_double(v);
  out << '\n';
  for (std::size_t a = 0; a < p.alphas.size(); ++a) {
    out << "rtd alpha=" << fmt_double(p.alphas[a]) << ":\n";
    print_int_matrix(p.rtds[a]);
  }
  out << "cetd:\n";
  print_int_matrix(p.cetd);
  out << "rowsums:";
  for (long v : p.row_sums) out << ' ' << v;
  out << "\npeak:";
  for (const auto& l : p.peak_labels) out << ' ' << l;
  out << '\n';
}

void execute_scenario(const Scenario& s, std::ostream& out) {
  switch (s.kind) {
    case RunKind::Fcm:
    case RunKind::Ncm: {
      if (s.emit_dot) out << export_dot(*s.matrix, s.matrix_name);
      StateVector x0 = zero_state(s.matrix->row_space(), s.seed_labels);
      HiddenPattern p = run_cognitive(*s.matrix, x0, s.policy, s.max_iters);
      emit_cognitive(p, s.emit_trace, s.emit_summary, out);
      break;
    }
    case RunKind::Frm:
    case RunKind::Nrm: {
      if (s.emit_dot) out << export_dot(*s.matrix, s.matrix_name);
      // Seed side: all labels must live in one space.
      const ConceptSpace& rows = s.matrix->row_space();
      bool on_rows = true;
      for (const auto& l : s.seed_labels)
        if (!rows.find(l)) on_rows = false;
      const ConceptSpace& side = on_rows ? rows : s.matrix->col_space();
      StateVector seed = zero_state(side, s.seed_labels);
      RelationalPattern p = run_relational(*s.matrix, seed, s.policy, s.max_iters);
      emit_relational(p, s.emit_trace, s.emit_summary, out);
      break;
    }
    case RunKind::Bam: {
      if (s.emit_dot) out << export_dot(*s.matrix, s.matrix_name);
      RelationalPattern p = run_bam(*s.matrix, s.bam_input, s.bam, s.max_iters);
      emit_relational(p, s.emit_trace, s.emit_summary, out);
      break;
    }
    case RunKind::Cetd: {
      CetdProfile p = cetd_profile(*s.table, s.alphas, s.cetd_options);
      emit_cetd(p, out);
      break;
    }
    case RunKind::Compose: {
      ConnectionMatrix result = [&]() {
        switch (*s.op) {
          case ComposeOp::Combine: return combine(s.inputs);
          case ComposeOp::Disjoint: return assemble_disjoint(*s.plan);
          case ComposeOp::Overlap: return assemble_overlap(*s.plan);
          case ComposeOp::Link: {
            ConnectionMatrix a = s.transpose_a ? s.inputs[0].transposed() : s.inputs[0];
            ConnectionMatrix b = s.transpose_b ? s.inputs[1].transposed() : s.inputs[1];
            return link(a, b, s.link_rule);
          }
        }
        fail(Errc::Validation, "unreachable compose op");
      }();
      out << serialize_matrix(result);
      if (s.emit_dot) out << export_dot(result, "composed");
      break;
    }
  }
}

}  // namespace cogmap
