#include "cogmap/concepts.hpp"

#include <algorithm>
#include <unordered_set>

namespace cogmap {

ConceptSpace::ConceptSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) fail(Errc::Validation, "empty concept label");
    if (l.find_first_of(" \t\r\n#") != std::string::npos)
      fail(Errc::Validation, "concept label '" + l + "' contains whitespace or '#'");
    if (!seen.insert(l).second) fail(Errc::Validation, "duplicate concept label '" + l + "'");
  }
}

std::optional<std::size_t> ConceptSpace::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::size_t ConceptSpace::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  fail(Errc::UnknownLabel, "unknown concept label '" + std::string(label) + "'");
}

bool ConceptSpace::disjoint_from(const ConceptSpace& other) const {
  for (const auto& l : labels_)
    if (other.find(l)) return false;
  return true;
}

std::string_view to_string(MatrixKind k) {
  switch (k) {
    case MatrixKind::Cognitive: return "cognitive";
    case MatrixKind::Relational: return "relational";
    case MatrixKind::Bam: return "bam";
  }
  return "?";
}

MatrixKind matrix_kind_from(std::string_view s) {
  if (s == "cognitive") return MatrixKind::Cognitive;
  if (s == "relational") return MatrixKind::Relational;
  if (s == "bam") return MatrixKind::Bam;
  fail(Errc::Parse, "unknown matrix kind '" + std::string(s) + "'");
}

ConnectionMatrix::ConnectionMatrix(MatrixKind kind, ConceptSpace rows, ConceptSpace cols,
                                   Grid entries, std::optional<std::int32_t> scale)
    : kind_(kind),
      row_space_(std::move(rows)),
      col_space_(std::move(cols)),
      entries_(std::move(entries)),
      scale_(scale) {
  if (entries_.size() != row_space_.size())
    fail(Errc::ShapeMismatch, "matrix has " + std::to_string(entries_.size()) + " rows, expected " +
                                  std::to_string(row_space_.size()));
  for (const auto& row : entries_)
    if (row.size() != col_space_.size())
      fail(Errc::ShapeMismatch, "matrix row has " + std::to_string(row.size()) +
                                    " entries, expected " + std::to_string(col_space_.size()));
}

ConnectionMatrix ConnectionMatrix::cognitive(ConceptSpace space, Grid entries) {
  ConceptSpace cols = space;
  return ConnectionMatrix(MatrixKind::Cognitive, std::move(space), std::move(cols),
                          std::move(entries), std::nullopt);
}

ConnectionMatrix ConnectionMatrix::relational(ConceptSpace rows, ConceptSpace cols, Grid entries) {
  return ConnectionMatrix(MatrixKind::Relational, std::move(rows), std::move(cols),
                          std::move(entries), std::nullopt);
}

ConnectionMatrix ConnectionMatrix::bam(ConceptSpace rows, ConceptSpace cols, Grid entries,
                                       std::optional<std::int32_t> scale) {
  return ConnectionMatrix(MatrixKind::Bam, std::move(rows), std::move(cols), std::move(entries),
                          scale);
}

ConnectionMatrix ConnectionMatrix::transposed() const {
  Grid t(cols(), std::vector<NeutroValue>(rows()));
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) t[j][i] = entries_[i][j];
  return ConnectionMatrix(kind_, col_space_, row_space_, std::move(t), scale_);
}

ValidationReport validate(const ConnectionMatrix& m) {
  ValidationReport report;
  switch (m.kind()) {
    case MatrixKind::Cognitive: {
      if (m.row_space() != m.col_space())
        report.violations.push_back("cognitive matrix row and column spaces differ");
      if (m.rows() != m.cols())
        report.violations.push_back("cognitive matrix is not square");
      for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
        if (!m.at(i, i).is_zero())
          report.violations.push_back("nonzero diagonal entry at " + m.row_space().label(i));
      break;
    }
    case MatrixKind::Relational: {
      for (const auto& l : m.row_space().labels())
        if (m.col_space().find(l))
          report.violations.push_back("label '" + l + "' appears in both relational spaces");
      break;
    }
    case MatrixKind::Bam: {
      for (const auto& l : m.row_space().labels())
        if (m.col_space().find(l))
          report.violations.push_back("label '" + l + "' appears in both BAM fields");
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
          NeutroValue v = m.at(i, j);
          if (!v.is_pure_real()) {
            report.violations.push_back("BAM entry at (" + m.row_space().label(i) + "," +
                                        m.col_space().label(j) + ") is not a plain integer");
          } else if (m.scale() && (v.real > *m.scale() || v.real < -*m.scale())) {
            report.violations.push_back("BAM entry " + std::to_string(v.real) + " at (" +
                                        m.row_space().label(i) + "," + m.col_space().label(j) +
                                        ") outside scale [-" + std::to_string(*m.scale()) + "," +
                                        std::to_string(*m.scale()) + "]");
          }
        }
      break;
    }
  }
  return report;
}

namespace {

ConnectionMatrix::Grid place_edges(const ConceptSpace& rows, const ConceptSpace& cols,
                                   std::span<const Edge> edges, bool reject_self_loops) {
  ConnectionMatrix::Grid grid(rows.size(), std::vector<NeutroValue>(cols.size()));
  std::set<std::pair<std::size_t, std::size_t>> placed;
  for (const auto& e : edges) {
    std::size_t i = rows.index_of(e.from);
    std::size_t j = cols.index_of(e.to);
    if (reject_self_loops && i == j)
      fail(Errc::SelfLoop, "self-loop on '" + e.from + "' in cognitive map");
    if (!placed.insert({i, j}).second)
      fail(Errc::DuplicateEdge, "duplicate edge " + e.from + " -> " + e.to);
    grid[i][j] = e.weight;
  }
  return grid;
}

}  // namespace

ConnectionMatrix from_edges(const ConceptSpace& space, std::span<const Edge> edges) {
  return ConnectionMatrix::cognitive(space, place_edges(space, space, edges, true));
}

ConnectionMatrix from_edges(const ConceptSpace& rows, const ConceptSpace& cols,
                            std::span<const Edge> edges) {
  return ConnectionMatrix::relational(rows, cols, place_edges(rows, cols, edges, false));
}

std::vector<Edge> to_edges(const ConnectionMatrix& m) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero())
        edges.push_back({m.row_space().label(i), m.col_space().label(j), m.at(i, j)});
  return edges;
}

StateVector::StateVector(ConceptSpace space, std::vector<TriState> states,
                         std::set<std::size_t> clamp)
    : space_(std::move(space)), states_(std::move(states)), clamp_(std::move(clamp)) {
  if (states_.size() != space_.size())
    fail(Errc::ShapeMismatch, "state vector length does not match its concept space");
  for (std::size_t c : clamp_) {
    if (c >= states_.size()) fail(Errc::ShapeMismatch, "clamp index out of range");
    if (states_[c] != TriState::On)
      fail(Errc::Validation, "clamped coordinate " + space_.label(c) + " is not ON");
  }
}

StateVector zero_state(const ConceptSpace& space, std::span<const std::string> on_labels) {
  std::vector<TriState> states(space.size(), TriState::Off);
  std::set<std::size_t> clamp;
  for (const auto& l : on_labels) {
    std::size_t i = space.index_of(l);
    states[i] = TriState::On;
    clamp.insert(i);
  }
  return StateVector(space, std::move(states), std::move(clamp));
}

std::string to_string(std::span<const TriState> states) {
  std::string out;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (i) out += ' ';
    out += to_char(states[i]);
  }
  return out;
}

}  // namespace cogmap
