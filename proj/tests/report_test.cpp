#include "bijlab/report.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>
#include <tuple>

namespace bijlab::report {
namespace {

using Triple = std::tuple<std::string, std::string, std::string>;  // identity, params, verdict

std::set<Triple> triples_from_json(const std::string& text) {
  const auto j = Json::parse(text);
  std::set<Triple> out;
  for (const auto& r : j["results"]) {
    std::string params;
    for (const auto& [k, v] : r["params"].items()) params += k + "=" + std::to_string(v.get<long>()) + " ";
    out.emplace(j["identity"].get<std::string>(), params, r["verdict"].get<std::string>());
  }
  return out;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::set<Triple> triples_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  const auto header = split(line, ',');
  std::set<Triple> out;
  while (std::getline(in, line)) {
    const auto fields = split(line, ',');
    std::string params;
    for (std::size_t i = 1; i < header.size() && header[i] != "lhs"; ++i) {
      params += header[i] + "=" + fields[i] + " ";
    }
    out.emplace(fields[0], params, fields.back());
  }
  return out;
}

std::set<Triple> triples_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::set<Triple> out;
  while (std::getline(in, line)) {
    if (line.rfind("summary:", 0) == 0) continue;
    const auto colon = line.find(':');
    const auto space = line.find(' ');
    std::string params;
    for (const auto& tok : split(line.substr(space + 1, colon - space - 1), ' ')) params += tok + " ";
    out.emplace(line.substr(0, space), params, line.substr(line.rfind(' ') + 1));
  }
  return out;
}

TEST(ReportTest, TextLine) {
  const auto r = verify("A8e", {{'n', 5}});
  EXPECT_EQ(text_line(r), "A8e n=5: lhs=252 rhs=252 oracle=252 PASS");
  const auto skipped = verify("A8e", {{'n', 12}});
  EXPECT_EQ(text_line(skipped), "A8e n=12: lhs=2704156 rhs=2704156 oracle=skipped ORACLE-SKIPPED");
}

TEST(ReportTest, JsonSchema) {
  const auto s = sweep("A8f", {{'n', {0, 3}}, {'m', {0, 3}}, {'p', {0, 3}}});
  const auto j = Json::parse(render(s, Format::json));
  EXPECT_EQ(j["identity"], "A8f");
  EXPECT_EQ(j["bounds"]["n"], Json::array({0, 3}));
  ASSERT_FALSE(j["results"].empty());
  const auto& first = j["results"][0];
  for (const char* key : {"params", "lhs", "rhs", "oracle", "verdict", "alternates"}) {
    EXPECT_TRUE(first.contains(key)) << key;
  }
  EXPECT_TRUE(first["lhs"].is_string());
  EXPECT_TRUE(first["oracle"].is_string());
  EXPECT_EQ(j["summary"]["pass"], s.summary.pass);
  EXPECT_EQ(j["summary"]["fail"], 0);
  EXPECT_EQ(j["summary"]["skipped"], 0);
}

TEST(ReportTest, JsonRendersHugeCountsAsStrings) {
  const auto r = verify("A8n", {{'n', 40}});
  const auto j = Json::parse(render(single_point(r), Format::json));
  EXPECT_EQ(j["results"][0]["rhs"], power(ExactInt(4), 40).str());
  EXPECT_TRUE(j["results"][0]["oracle"].is_null());
  EXPECT_EQ(j["summary"]["skipped"], 1);
}

TEST(ReportTest, CsvHeaderFollowsParameterList) {
  const auto s = sweep("A8h", {{'n', {0, 1}}, {'k', {0, 1}}, {'p', {2, 2}}, {'m', {0, 1}}});
  const auto csv = render(s, Format::csv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "identity,n,k,p,m,lhs,rhs,alternates,oracle,verdict");
}

TEST(ReportTest, FormatsCarryIdenticalVerdictSets) {
  for (const char* id : {"A8g", "A8m-printed", "P2"}) {
    const auto& d = find_identity(id);
    SweepBounds bounds;
    for (char c : d.parameter_names) bounds[c] = {0, 4};
    VerifyOptions options;
    options.limits.ternary_width = 3;  // force some oracle skips
    const auto s = sweep(d, bounds, options);
    const auto from_json = triples_from_json(render(s, Format::json));
    EXPECT_EQ(from_json.size(), s.results.size()) << id;
    EXPECT_EQ(from_json, triples_from_csv(render(s, Format::csv))) << id;
    EXPECT_EQ(from_json, triples_from_text(render(s, Format::text))) << id;
  }
}

TEST(ReportTest, RenderingIsDeterministic) {
  const SweepBounds bounds{{'n', {0, 6}}, {'m', {0, 6}}, {'p', {0, 6}}};
  for (auto f : {Format::text, Format::json, Format::csv}) {
    EXPECT_EQ(render(sweep("A8d", bounds), f), render(sweep("A8d", bounds), f));
  }
}

TEST(ReportTest, RegistryListing) {
  const auto text = render_registry(Format::text);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 19);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("A8i ", 0) == 0 || line.rfind("A8m ", 0) == 0) {
      EXPECT_NE(line.find("corrected from printed form"), std::string::npos) << line;
    }
    if (line.rfind("P7 ", 0) == 0) {
      EXPECT_NE(line.find("permutation enumeration"), std::string::npos);
    }
  }
  EXPECT_EQ(Json::parse(render_registry(Format::json)).size(), 19U);
  const auto csv = render_registry(Format::csv);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 20);
}

TEST(ReportTest, ParseFormat) {
  EXPECT_EQ(parse_format("csv"), Format::csv);
  EXPECT_THROW(parse_format("xml"), domain_error);
}

}  // namespace
}  // namespace bijlab::report
