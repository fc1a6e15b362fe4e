#include "cogmap/compose.hpp"

namespace cogmap {

ConnectionMatrix combine(std::span<const ConnectionMatrix> ms) {
  if (ms.empty()) fail(Errc::Validation, "combine requires at least one matrix");
  const ConnectionMatrix& head = ms.front();
  ConnectionMatrix::Grid grid = head.entries();
  for (std::size_t k = 1; k < ms.size(); ++k) {
    const ConnectionMatrix& m = ms[k];
    if (m.kind() != head.kind())
      fail(Errc::KindMismatch, "combine over matrices of different kinds");
    if (m.row_space() != head.row_space() || m.col_space() != head.col_space())
      fail(Errc::ShapeMismatch, "combine over matrices with different spaces");
    for (std::size_t i = 0; i < grid.size(); ++i)
      for (std::size_t j = 0; j < grid[i].size(); ++j)
        grid[i][j] = neutro_add(grid[i][j], m.at(i, j));
  }
  switch (head.kind()) {
    case MatrixKind::Cognitive:
      return ConnectionMatrix::cognitive(head.row_space(), std::move(grid));
    case MatrixKind::Relational:
      return ConnectionMatrix::relational(head.row_space(), head.col_space(), std::move(grid));
    case MatrixKind::Bam:
      return ConnectionMatrix::bam(head.row_space(), head.col_space(), std::move(grid),
                                   head.scale());
  }
  fail(Errc::Validation, "unreachable matrix kind");
}

namespace {

std::vector<std::size_t> resolve_class(const ConceptSpace& target,
                                       const std::vector<std::string>& labels) {
  std::vector<std::size_t> idx;
  idx.reserve(labels.size());
  for (const auto& l : labels) idx.push_back(target.index_of(l));
  return idx;
}

ConnectionMatrix assemble(const BlockPlan& plan, bool overlap_allowed) {
  const bool relational = plan.kind != MatrixKind::Cognitive;
  if (plan.kind == MatrixKind::Bam) fail(Errc::KindMismatch, "block plans cover cognitive and relational maps");
  if (relational && !plan.cols) fail(Errc::Validation, "relational block plan is missing its column space");
  const ConceptSpace& rows = plan.rows;
  const ConceptSpace& cols = relational ? *plan.cols : plan.rows;

  ConnectionMatrix::Grid grid(rows.size(), std::vector<NeutroValue>(cols.size()));
  std::set<std::size_t> used_rows, used_cols;

  for (const auto& blk : plan.blocks) {
    if (blk.row_class.empty()) fail(Errc::Validation, "empty block class");
    auto ri = resolve_class(rows, blk.row_class);
    auto ci = relational ? resolve_class(cols, blk.col_class) : ri;
    if (relational && blk.col_class.empty())
      fail(Errc::Validation, "relational block class is missing its range labels");
    if (blk.sub.rows() != ri.size() || blk.sub.cols() != ci.size())
      fail(Errc::ShapeMismatch, "block sub-matrix does not match its class size");
    if (!overlap_allowed) {
      for (std::size_t r : ri)
        if (!used_rows.insert(r).second)
          fail(Errc::Overlap, "label '" + rows.label(r) + "' appears in two disjoint classes");
      if (relational)
        for (std::size_t c : ci)
          if (!used_cols.insert(c).second)
            fail(Errc::Overlap, "label '" + cols.label(c) + "' appears in two disjoint classes");
    }
    for (std::size_t i = 0; i < ri.size(); ++i)
      for (std::size_t j = 0; j < ci.size(); ++j)
        grid[ri[i]][ci[j]] = neutro_add(grid[ri[i]][ci[j]], blk.sub.at(i, j));
  }

  if (relational) return ConnectionMatrix::relational(rows, cols, std::move(grid));
  return ConnectionMatrix::cognitive(rows, std::move(grid));
}

}  // namespace

ConnectionMatrix assemble_disjoint(const BlockPlan& plan) { return assemble(plan, false); }

ConnectionMatrix assemble_overlap(const BlockPlan& plan) { return assemble(plan, true); }

ConnectionMatrix link(const ConnectionMatrix& a, const ConnectionMatrix& b, LinkThreshold rule) {
  if (a.col_space() != b.row_space())
    fail(Errc::ShapeMismatch, "link: left column space does not match right row space");
  ConnectionMatrix::Grid grid(a.rows(), std::vector<NeutroValue>(b.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      NeutroValue acc;
      for (std::size_t s = 0; s < a.cols(); ++s)
        acc = neutro_add(acc, neutro_mul(a.at(i, s), b.at(s, j)));
      NeutroValue collapsed;
      if (acc.real >= rule.k) collapsed = kOne;
      else if (acc.real <= 0 && acc.indet >= rule.k) collapsed = kIndeterminate;
      grid[i][j] = collapsed;
    }
  }
  return ConnectionMatrix::relational(a.row_space(), b.col_space(), std::move(grid));
}

}  // namespace cogmap
