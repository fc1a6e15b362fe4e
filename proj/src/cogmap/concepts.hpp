#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cogmap/neutro.hpp"

namespace cogmap {

/// Ordered list of concept labels.  Order is significant and stable;
/// labels are unique, non-empty and free of whitespace and '#'.
class ConceptSpace {
public:
  ConceptSpace() = default;
  explicit ConceptSpace(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  std::optional<std::size_t> find(std::string_view label) const;
  std::size_t index_of(std::string_view label) const;  // UnknownLabel on miss

  bool disjoint_from(const ConceptSpace& other) const;

  friend bool operator==(const ConceptSpace&, const ConceptSpace&) = default;

private:
  std::vector<std::string> labels_;
};

enum class MatrixKind { Cognitive, Relational, Bam };

std::string_view to_string(MatrixKind k);
MatrixKind matrix_kind_from(std::string_view s);

/// Labelled dense matrix of NeutroValue.  Cognitive matrices are square
/// over one space; relational and BAM matrices map a row space to a
/// distinct column space.  Structural rule violations (nonzero diagonal,
/// out-of-scale BAM entry, ...) are reported by validate(), not rejected
/// at construction, so malformed inputs can be diagnosed.
class ConnectionMatrix {
public:
  using Grid = std::vector<std::vector<NeutroValue>>;

  static ConnectionMatrix cognitive(ConceptSpace space, Grid entries);
  static ConnectionMatrix relational(ConceptSpace rows, ConceptSpace cols, Grid entries);
  static ConnectionMatrix bam(ConceptSpace rows, ConceptSpace cols, Grid entries,
                              std::optional<std::int32_t> scale);

  MatrixKind kind() const { return kind_; }
  std::size_t rows() const { return row_space_.size(); }
  std::size_t cols() const { return col_space_.size(); }
  const ConceptSpace& row_space() const { return row_space_; }
  const ConceptSpace& col_space() const { return col_space_; }
  std::optional<std::int32_t> scale() const { return scale_; }

  NeutroValue at(std::size_t i, std::size_t j) const { return entries_[i][j]; }
  const Grid& entries() const { return entries_; }

  ConnectionMatrix transposed() const;

  friend bool operator==(const ConnectionMatrix&, const ConnectionMatrix&) = default;

private:
  ConnectionMatrix(MatrixKind kind, ConceptSpace rows, ConceptSpace cols, Grid entries,
                   std::optional<std::int32_t> scale);

  MatrixKind kind_ = MatrixKind::Cognitive;
  ConceptSpace row_space_;
  ConceptSpace col_space_;
  Grid entries_;
  std::optional<std::int32_t> scale_;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Structural validation: square + zero diagonal for cognitive matrices,
/// disjoint label spaces for relational ones, pure-real in-scale entries
/// for BAM matrices.
ValidationReport validate(const ConnectionMatrix& m);

struct Edge {
  std::string from;
  std::string to;
  NeutroValue weight;
};

/// Build a cognitive matrix from a weighted edge list; zeros elsewhere.
/// Rejects unknown labels, duplicate edges and self-loops.
ConnectionMatrix from_edges(const ConceptSpace& space, std::span<const Edge> edges);

/// Relational counterpart over a (domain, range) pair of spaces.
ConnectionMatrix from_edges(const ConceptSpace& rows, const ConceptSpace& cols,
                            std::span<const Edge> edges);

/// Read the nonzero entries back as an edge list, row-major.
std::vector<Edge> to_edges(const ConnectionMatrix& m);

/// Tri-state activation vector aligned to a concept space, plus the set of
/// initially-on coordinates that every update forces back ON.
class StateVector {
public:
  StateVector(ConceptSpace space, std::vector<TriState> states, std::set<std::size_t> clamp);

  const ConceptSpace& space() const { return space_; }
  const std::vector<TriState>& states() const { return states_; }
  const std::set<std::size_t>& clamp() const { return clamp_; }
  std::size_t size() const { return states_.size(); }
  TriState at(std::size_t i) const { return states_.at(i); }

private:
  ConceptSpace space_;
  std::vector<TriState> states_;
  std::set<std::size_t> clamp_;
};

/// OFF everywhere except on_labels, which are ON and clamped.
StateVector zero_state(const ConceptSpace& space, std::span<const std::string> on_labels);

std::string to_string(std::span<const TriState> states);

}  // namespace cogmap
