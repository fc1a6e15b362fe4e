#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "cogmap/cetd.hpp"
#include "cogmap/compose.hpp"
#include "cogmap/concepts.hpp"

namespace cogmap {

/// Matrix file format (bit-exact on round trip):
///   # comment lines start with '#'
///   kind: cognitive|relational|bam
///   rows: <labels space-separated>
///   cols: <labels>            (relational/bam)
///   scale: <s>                (bam, optional)
///   one line of value tokens per row
ConnectionMatrix parse_matrix(std::istream& in, const std::string& name);
ConnectionMatrix load_matrix(const std::filesystem::path& path);
std::string serialize_matrix(const ConnectionMatrix& m);

/// Raw-table file: a header row of column labels, then one line per data
/// row: <row-label> <interval> <counts...>.
RawDataTable parse_raw_table(std::istream& in, const std::string& name);
RawDataTable load_raw_table(const std::filesystem::path& path);

/// Block-plan file:
///   kind: cognitive|relational
///   rows: <target row labels>
///   cols: <target column labels>     (relational)
///   class: <labels>                  (relational: <rows> -> <cols>)
///   block: <path to matrix file>     (relative to the plan file)
BlockPlan parse_block_plan(std::istream& in, const std::string& name,
                           const std::filesystem::path& base_dir);
BlockPlan load_block_plan(const std::filesystem::path& path);

}  // namespace cogmap
