#include <doctest.h>

#include <stdexcept>

#include <json.hpp>

#include "rootcensus/errors.hpp"
#include "rootcensus/report.hpp"

using namespace rootcensus;

TEST_CASE("admissible type enumeration is canonical and complete") {
  const auto all = admissible_types(8);
  CHECK(all.size() == 31);

  std::vector<std::string> names;
  for (const CartanType& t : all) names.push_back(t.name());
  CHECK(names.front() == "A1");
  CHECK(names.back() == "G2");

  std::vector<std::string> rank2;
  for (const CartanType& t : admissible_types(2)) rank2.push_back(t.name());
  CHECK(rank2 == std::vector<std::string>{"A1", "A2", "B2", "G2"});

  CHECK_THROWS_AS(admissible_types(0), std::invalid_argument);
  CHECK_THROWS_AS(admissible_types(9), std::invalid_argument);
}

TEST_CASE("census rows carry the serialization fields") {
  const CensusRow row = census_row(CartanType::parse("E8"));
  CHECK(row.type == "E8");
  CHECK(row.rank == 8);
  CHECK(row.h == 30);
  CHECK(row.weyl_order.str() == "696729600");
  CHECK(row.report.total == 44);
  CHECK(row.report.agree);
}

TEST_CASE("format parsing") {
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK(parse_format("JSON") == OutputFormat::Json);
  CHECK(parse_format("Markdown") == OutputFormat::Markdown);
  CHECK_THROWS_AS(parse_format("yaml"), InvalidTypeError);
}

TEST_CASE("csv golden for rank <= 2") {
  std::vector<CensusRow> rows;
  for (CartanType t : admissible_types(2)) rows.push_back(census_row(t));
  const std::string expected =
      "type,rank,h,weylOrder,exponents,nLong,nShort,bruteTotal,bruteLong,bruteShort,"
      "formulaTotal,formulaLong,formulaShort,sommersLong,sommersShort,agree\n"
      "A1,1,2,2,1,1,0,1,1,0,1,1,0,1,0,true\n"
      "A2,2,3,6,1 2,2,0,1,1,0,1,1,0,1,0,true\n"
      "B2,2,4,8,1 3,1,1,2,1,1,2,1,1,1,1,true\n"
      "G2,2,6,12,1 5,1,1,4,2,2,4,2,2,2,2,true\n";
  CHECK(render_table(rows, OutputFormat::Csv) == expected);
}

TEST_CASE("rendering is deterministic and json is a flat array") {
  std::vector<CensusRow> rows;
  for (CartanType t : admissible_types(3)) rows.push_back(census_row(t));

  for (OutputFormat f : {OutputFormat::Markdown, OutputFormat::Csv, OutputFormat::Json})
    CHECK(render_table(rows, f) == render_table(rows, f));

  const std::string json_text = render_table(rows, OutputFormat::Json);
  const auto parsed = nlohmann::json::parse(json_text);
  REQUIRE(parsed.is_array());
  CHECK(parsed.size() == rows.size());
  for (const auto& record : parsed) {
    CHECK(record.is_object());
    CHECK(record.at("agree").get<bool>());
    CHECK(record.at("exponents").is_array());
    for (const auto& [key, value] : record.items()) {
      const bool flat = !value.is_structured() || key == "exponents";
      CHECK(flat);
    }
  }
  // key order is part of the contract
  CHECK(json_text.find("\"type\"") < json_text.find("\"rank\""));
  CHECK(json_text.find("\"rank\"") < json_text.find("\"h\""));
  CHECK(json_text.find("\"sommersShort\"") < json_text.find("\"agree\""));
}

TEST_CASE("markdown table has header, rule and one line per row") {
  std::vector<CensusRow> rows;
  for (CartanType t : admissible_types(2)) rows.push_back(census_row(t));
  const std::string md = render_table(rows, OutputFormat::Markdown);
  std::size_t lines = 0;
  for (char c : md) lines += c == '\n';
  CHECK(lines == 2 + rows.size());
  CHECK(md.find("| A1 |") != std::string::npos);
}

TEST_CASE("info rendering mentions every census column") {
  const std::string text = render_info(census_row(CartanType::parse("B2")));
  CHECK(text.find("total=2") != std::string::npos);
  CHECK(text.find("long=1") != std::string::npos);
  CHECK(text.find("agree:           true") != std::string::npos);
  CHECK(text.find("exponents:       1 3") != std::string::npos);
}
