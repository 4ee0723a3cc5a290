#include "rootcensus/report.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rootcensus/errors.hpp"
#include "rootcensus/invariants.hpp"

namespace rootcensus {

std::vector<CartanType> admissible_types(int max_rank) {
  if (max_rank < 1 || max_rank > 8)
    throw std::invalid_argument("max_rank must be between 1 and 8");
  std::vector<CartanType> out;
  for (char f : {'A', 'B', 'C', 'D', 'E', 'F', 'G'})
    for (int n = 1; n <= max_rank; ++n)
      if (is_admissible(static_cast<Family>(f), n))
        out.push_back(CartanType{static_cast<Family>(f), n});
  return out;
}

CensusRow census_row(CartanType type) {
  const RootSystem rs = build_root_system(type);
  const ExponentVector ev = exponents(rs);
  const GroupInvariants gi = group_invariants(rs, ev);

  CensusRow row;
  row.type = type.name();
  row.rank = type.rank;
  row.h = gi.h;
  row.weyl_order = gi.weyl_order;
  row.exponents = ev.e;
  row.n_long = gi.n_long;
  row.n_short = gi.n_short;
  row.report = full_census(rs);
  return row;
}

OutputFormat parse_format(std::string_view s) {
  std::string lower;
  for (char c : s) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "markdown") return OutputFormat::Markdown;
  if (lower == "csv") return OutputFormat::Csv;
  if (lower == "json") return OutputFormat::Json;
  throw InvalidTypeError("unknown output format '" + std::string(s) +
                         "' (expected markdown, csv or json)");
}

namespace {

constexpr const char* kColumns[] = {
    "type",        "rank",        "h",            "weylOrder",    "exponents",
    "nLong",       "nShort",      "bruteTotal",   "bruteLong",    "bruteShort",
    "formulaTotal", "formulaLong", "formulaShort", "sommersLong", "sommersShort",
    "agree"};

std::string exponents_string(const std::vector<int>& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(e[i]);
  }
  return s;
}

std::vector<std::string> row_cells(const CensusRow& r) {
  const CensusReport& c = r.report;
  return {r.type,
          std::to_string(r.rank),
          std::to_string(r.h),
          r.weyl_order.str(),
          exponents_string(r.exponents),
          std::to_string(r.n_long),
          std::to_string(r.n_short),
          std::to_string(c.total),
          std::to_string(c.long_count),
          std::to_string(c.short_count),
          std::to_string(c.formula_total),
          std::to_string(c.formula_long),
          std::to_string(c.formula_short),
          std::to_string(c.sommers_long),
          std::to_string(c.sommers_short),
          c.agree ? "true" : "false"};
}

std::string render_csv(std::span<const CensusRow> rows) {
  std::string out;
  for (std::size_t i = 0; i < std::size(kColumns); ++i) {
    if (i) out += ',';
    out += kColumns[i];
  }
  out += '\n';
  for (const CensusRow& r : rows) {
    const auto cells = row_cells(r);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  }
  return out;
}

std::string render_markdown(std::span<const CensusRow> rows) {
  std::string out = "|";
  for (const char* c : kColumns) out += std::string(" ") + c + " |";
  out += "\n|";
  for (std::size_t i = 0; i < std::size(kColumns); ++i) out += " --- |";
  out += "\n";
  for (const CensusRow& r : rows) {
    out += "|";
    for (const std::string& cell : row_cells(r)) out += " " + cell + " |";
    out += "\n";
  }
  return out;
}

std::string render_json(std::span<const CensusRow> rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CensusRow& r : rows) {
    const CensusReport& c = r.report;
    nlohmann::ordered_json o;
    o["type"] = r.type;
    o["rank"] = r.rank;
    o["h"] = r.h;
    o["weylOrder"] = static_cast<std::uint64_t>(r.weyl_order);
    o["exponents"] = r.exponents;
    o["nLong"] = r.n_long;
    o["nShort"] = r.n_short;
    o["bruteTotal"] = c.total;
    o["bruteLong"] = c.long_count;
    o["bruteShort"] = c.short_count;
    o["formulaTotal"] = c.formula_total;
    o["formulaLong"] = c.formula_long;
    o["formulaShort"] = c.formula_short;
    o["sommersLong"] = c.sommers_long;
    o["sommersShort"] = c.sommers_short;
    o["agree"] = c.agree;
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

} // namespace

std::string render_table(std::span<const CensusRow> rows, OutputFormat format) {
  switch (format) {
    case OutputFormat::Csv: return render_csv(rows);
    case OutputFormat::Markdown: return render_markdown(rows);
    case OutputFormat::Json: return render_json(rows);
  }
  throw std::logic_error("unreachable");
}

std::string render_info(const CensusRow& row) {
  const CensusReport& c = row.report;
  std::ostringstream out;
  out << "type:            " << row.type << "\n"
      << "rank:            " << row.rank << "\n"
      << "coxeter number:  " << row.h << "\n"
      << "weyl order:      " << row.weyl_order.str() << "\n"
      << "exponents:       " << exponents_string(row.exponents) << "\n"
      << "simple roots:    " << row.n_long << " long, " << row.n_short << " short\n"
      << "full support (brute):    total=" << c.total << " long=" << c.long_count
      << " short=" << c.short_count << "\n"
      << "full support (formula):  total=" << c.formula_total << " long=" << c.formula_long
      << " short=" << c.formula_short << "\n"
      << "full support (sommers):  long=" << c.sommers_long << " short=" << c.sommers_short
      << "\n"
      << "agree:           " << (c.agree ? "true" : "false") << "\n";
  return out.str();
}

} // namespace rootcensus
