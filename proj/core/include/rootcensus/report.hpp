#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rootcensus/cartan.hpp"
#include "rootcensus/counting.hpp"
#include "rootcensus/numeric.hpp"

namespace rootcensus {

/// Every admissible irreducible type of rank <= max_rank, in canonical order:
/// families A through G, rank ascending within a family. Shared by the table
/// and verify commands so their coverage cannot drift. max_rank must lie in
/// [1, 8].
std::vector<CartanType> admissible_types(int max_rank);

/// One fully evaluated census record. Field order is the serialization
/// contract: type, rank, h, weylOrder, exponents, nLong, nShort, bruteTotal,
/// bruteLong, bruteShort, formulaTotal, formulaLong, formulaShort,
/// sommersLong, sommersShort, agree.
struct CensusRow {
  std::string type;
  int rank = 0;
  int h = 0;
  BigInt weyl_order;
  std::vector<int> exponents;
  int n_long = 0;
  int n_short = 0;
  CensusReport report;
};

CensusRow census_row(CartanType type);

enum class OutputFormat { Markdown, Csv, Json };

/// Parses "markdown" | "csv" | "json" (case-insensitive); throws
/// InvalidTypeError otherwise.
OutputFormat parse_format(std::string_view s);

/// Renders rows in the requested format. Output is byte-deterministic for
/// fixed rows and format. Exponents render as space-separated integers in
/// csv/markdown and as an integer array in json; json output is an array of
/// flat records.
std::string render_table(std::span<const CensusRow> rows, OutputFormat format);

/// Multi-line human-readable rendering of a single row, for `info`.
std::string render_info(const CensusRow& row);

} // namespace rootcensus
