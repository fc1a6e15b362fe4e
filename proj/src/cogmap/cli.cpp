#include "cogmap/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

#include "cogmap/dot.hpp"
#include "cogmap/matrix_io.hpp"
#include "cogmap/scenario.hpp"

namespace cogmap {

namespace {

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  std::replace(s.begin(), s.end(), '\r', ' ');
  return s;
}

std::vector<double> parse_alpha_list(const std::string& csv) {
  std::vector<double> out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    std::size_t used = 0;
    double v = std::stod(cur, &used);
    if (used != cur.size()) fail(Errc::Parse, "bad alpha '" + cur + "'");
    out.push_back(v);
    cur.clear();
  };
  for (char c : csv) {
    if (c == ',') flush();
    else if (!std::isspace(static_cast<unsigned char>(c))) cur += c;
  }
  flush();
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cognitive-map calculi: batch runs, composition and profiling", "cogmap"};
  app.require_subcommand(1);

  // run
  std::string scenario_path;
  bool flag_trace = false, flag_dot = false, flag_summary = false;
  auto* cmd_run = app.add_subcommand("run", "run a scenario file");
  cmd_run->add_option("scenario", scenario_path, "scenario file")->required();
  cmd_run->add_flag("--trace", flag_trace, "emit the iteration trace");
  cmd_run->add_flag("--dot", flag_dot, "emit the matrix as a digraph");
  cmd_run->add_flag("--summary", flag_summary, "emit the terminal summary");

  // cetd
  std::string table_path, alpha_csv;
  bool flag_exact = false;
  auto* cmd_cetd = app.add_subcommand("cetd", "profile a raw time-interval table");
  cmd_cetd->add_option("table", table_path, "raw table file")->required();
  cmd_cetd->add_option("--alpha", alpha_csv, "comma-separated alphas in [0,1]")->required();
  cmd_cetd->add_flag("--exact", flag_exact, "exact double arithmetic (skip 2-decimal quantization)");

  // compose
  auto* cmd_compose = app.add_subcommand("compose", "build larger maps from pieces");
  cmd_compose->require_subcommand(1);
  std::vector<std::string> combine_paths;
  auto* cmd_combine = cmd_compose->add_subcommand("combine", "entrywise sum of expert matrices");
  cmd_combine->add_option("matrices", combine_paths, "matrix files")->required()->expected(-1);
  std::string plan_path;
  auto* cmd_disjoint = cmd_compose->add_subcommand("disjoint", "assemble disjoint blocks");
  cmd_disjoint->add_option("plan", plan_path, "block-plan file")->required();
  auto* cmd_overlap = cmd_compose->add_subcommand("overlap", "assemble overlapping blocks");
  cmd_overlap->add_option("plan", plan_path, "block-plan file")->required();
  std::string link_a, link_b, link_rule = "standard";
  bool link_ta = false, link_tb = false;
  int link_k = 1;
  auto* cmd_link = cmd_compose->add_subcommand("link", "matrix-product link of two relational maps");
  cmd_link->add_option("a", link_a, "left matrix file")->required();
  cmd_link->add_option("b", link_b, "right matrix file")->required();
  cmd_link->add_flag("--transpose-a", link_ta, "transpose the left matrix first");
  cmd_link->add_flag("--transpose-b", link_tb, "transpose the right matrix first");
  cmd_link->add_option("--rule", link_rule, "collapse rule name (standard)");
  cmd_link->add_option("--k", link_k, "link collapse threshold (default 1)");

  // export
  auto* cmd_export = app.add_subcommand("export", "render a matrix");
  cmd_export->require_subcommand(1);
  std::string dot_matrix;
  auto* cmd_dot = cmd_export->add_subcommand("dot", "Graphviz digraph on stdout");
  cmd_dot->add_option("matrix", dot_matrix, "matrix file")->required();

  // validate
  std::string validate_path;
  auto* cmd_validate = app.add_subcommand("validate", "check a matrix file");
  cmd_validate->add_option("file", validate_path, "matrix file")->required();

  std::vector<std::string> argv(args.rbegin(), args.rend());  // CLI11 takes a reversed vector
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "cogmap: error: usage: " << one_line(e.what()) << '\n';
    return 2;
  }

  try {
    if (*cmd_run) {
      Scenario s = load_scenario(scenario_path);
      if (flag_trace) s.emit_trace = true;
      if (flag_dot) s.emit_dot = true;
      if (flag_summary) s.emit_summary = true;
      execute_scenario(s, out);
    } else if (*cmd_cetd) {
      RawDataTable table = load_raw_table(table_path);
      std::vector<double> alphas = parse_alpha_list(alpha_csv);
      if (alphas.empty()) fail(Errc::Validation, "cetd requires at least one alpha");
      CetdOptions opt;
      opt.published_precision = !flag_exact;
      emit_cetd(cetd_profile(table, alphas, opt), out);
    } else if (*cmd_compose) {
      if (*cmd_combine) {
        std::vector<ConnectionMatrix> ms;
        for (const auto& p : combine_paths) ms.push_back(load_matrix(p));
        out << serialize_matrix(combine(ms));
      } else if (*cmd_disjoint) {
        out << serialize_matrix(assemble_disjoint(load_block_plan(plan_path)));
      } else if (*cmd_overlap) {
        out << serialize_matrix(assemble_overlap(load_block_plan(plan_path)));
      } else if (*cmd_link) {
        if (link_rule != "standard")
          fail(Errc::Validation, "unknown link rule '" + link_rule + "'");
        ConnectionMatrix a = load_matrix(link_a);
        ConnectionMatrix b = load_matrix(link_b);
        if (link_ta) a = a.transposed();
        if (link_tb) b = b.transposed();
        out << serialize_matrix(link(a, b, LinkThreshold{link_k}));
      }
    } else if (*cmd_export) {
      ConnectionMatrix m = load_matrix(dot_matrix);
      out << export_dot(m, std::filesystem::path(dot_matrix).stem().string());
    } else if (*cmd_validate) {
      ConnectionMatrix m = load_matrix(validate_path);
      ValidationReport report = validate(m);
      if (!report.ok()) {
        std::string joined;
        for (std::size_t i = 0; i < report.violations.size(); ++i)
          joined += (i ? "; " : "") + report.violations[i];
        fail(Errc::Validation, joined);
      }
      out << "ok\n";
    }
  } catch (const Error& e) {
    err << "cogmap: error: " << e.category() << ": " << one_line(e.what()) << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "cogmap: error: internal: " << one_line(e.what()) << '\n';
    return 1;
  }
  return 0;
}

}  // namespace cogmap
