#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cogmap/cetd.hpp"
#include "cogmap/compose.hpp"
#include "cogmap/concepts.hpp"
#include "cogmap/dynamics.hpp"

namespace cogmap {

enum class RunKind { Fcm, Ncm, Frm, Nrm, Bam, Cetd, Compose };

RunKind run_kind_from(std::string_view s);

enum class ComposeOp { Combine, Disjoint, Overlap, Link };

/// One fully-resolved batch run: every referenced file is loaded and the
/// configuration validated against the matrix kind at parse time.
struct Scenario {
  RunKind kind = RunKind::Fcm;
  std::string source_name;

  std::optional<ConnectionMatrix> matrix;
  std::string matrix_name;  // digraph name for dot emission
  std::vector<std::string> seed_labels;
  std::vector<long> bam_input;
  ThresholdPolicy policy;
  BamConfig bam;
  std::size_t max_iters = kDefaultMaxIters;

  std::optional<RawDataTable> table;
  std::vector<double> alphas;
  CetdOptions cetd_options;

  std::optional<ComposeOp> op;
  std::vector<ConnectionMatrix> inputs;
  std::optional<BlockPlan> plan;
  bool transpose_a = false;
  bool transpose_b = false;
  LinkThreshold link_rule;

  bool emit_trace = false;
  bool emit_dot = false;
  bool emit_summary = true;
};

/// Parse the key=value scenario schema; relative paths resolve against
/// base_dir.  Syntax errors carry the source name and line number.
Scenario parse_scenario(std::istream& in, const std::string& name,
                        const std::filesystem::path& base_dir);
Scenario load_scenario(const std::filesystem::path& path);

/// Run the scenario and write its deterministic output.
void execute_scenario(const Scenario& s, std::ostream& out);

/// Emission helpers shared with the CLI.
void emit_cognitive(const HiddenPattern& p, bool trace, bool summary, std::ostream& out);
void emit_relational(const RelationalPattern& p, bool trace, bool summary, std::ostream& out);
void emit_cetd(const CetdProfile& p, std::ostream& out);

}  // namespace cogmap
