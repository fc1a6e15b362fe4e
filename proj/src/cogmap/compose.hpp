#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cogmap/concepts.hpp"

namespace cogmap {

/// One expert block: a sub-matrix over a class of row labels (and, for
/// relational plans, a paired class of column labels).
struct BlockEntry {
  std::vector<std::string> row_class;
  std::vector<std::string> col_class;  // empty for cognitive plans
  ConnectionMatrix sub;
};

/// Placement plan for block assembly over a target space (pair).
struct BlockPlan {
  MatrixKind kind = MatrixKind::Cognitive;
  ConceptSpace rows;
  std::optional<ConceptSpace> cols;  // relational plans only
  std::vector<BlockEntry> blocks;
};

/// Entrywise sum of expert matrices sharing kind and spaces.
ConnectionMatrix combine(std::span<const ConnectionMatrix> ms);

/// Place each block on its class indices; classes must be pairwise
/// disjoint (an overlap is an error here).  Zeros elsewhere.
ConnectionMatrix assemble_disjoint(const BlockPlan& plan);

/// As assemble_disjoint but overlapping class pairs are permitted and
/// their contributions accumulate entrywise (never saturate).
ConnectionMatrix assemble_overlap(const BlockPlan& plan);

/// Per-entry collapse applied after a linked matrix product:
/// real >= k -> 1; real <= 0 with indet >= k -> I; else 0.
struct LinkThreshold {
  std::int32_t k = 1;
};

/// Matrix product of a (n x m) and b (m x t) under neutro arithmetic,
/// collapsed entrywise by the rule; relates a's rows to b's columns.
ConnectionMatrix link(const ConnectionMatrix& a, const ConnectionMatrix& b,
                      LinkThreshold rule = {});

}  // namespace cogmap
