#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bijlab/errors.hpp"
#include "bijlab/identities.hpp"

namespace bijlab::report {

enum class Format { text, json, csv };

inline Format parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw domain_error("unknown format '" + std::string(name) + "'; expected text, json or csv");
}

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string oracle_text(const VerificationReport& r) {
  if (r.oracle) return r.oracle->str();
  return r.verdict == Verdict::oracle_skipped ? "skipped" : "none";
}

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  return out + "\"";
}

inline std::string join_alternates(const VerificationReport& r, char sep) {
  std::string out;
  for (const auto& a : r.alternates) {
    if (!out.empty()) out.push_back(sep);
    out += a.str();
  }
  return out;
}

}  // namespace detail

/// "A8e n=5: lhs=252 rhs=252 oracle=252 PASS"
inline std::string text_line(const VerificationReport& r) {
  std::string out = r.identity + " " + r.params.to_string(r.parameter_names) + ": lhs=" +
                    r.lhs.str() + " rhs=" + r.rhs.str();
  for (const auto& a : r.alternates) out += " alt=" + a.str();
  out += " oracle=" + detail::oracle_text(r) + " " + std::string(to_string(r.verdict));
  return out;
}

inline Json to_json(const VerificationReport& r) {
  Json params = Json::object();
  for (char c : r.parameter_names) params[std::string(1, c)] = r.params[c];
  Json j;
  j["params"] = params;
  j["lhs"] = r.lhs.str();
  j["rhs"] = r.rhs.str();
  if (!r.alternates.empty()) {
    Json alts = Json::array();
    for (const auto& a : r.alternates) alts.push_back(a.str());
    j["alternates"] = alts;
  }
  j["oracle"] = r.oracle ? Json(r.oracle->str()) : Json(nullptr);
  j["verdict"] = std::string(to_string(r.verdict));
  return j;
}

inline Json to_json(const SweepReport& s) {
  Json j;
  j["identity"] = s.identity;
  Json bounds = Json::object();
  for (char c : s.parameter_names) {
    const auto& [lo, hi] = s.bounds.at(c);
    bounds[std::string(1, c)] = Json::array({lo, hi});
  }
  j["bounds"] = bounds;
  Json results = Json::array();
  for (const auto& r : s.results) results.push_back(to_json(r));
  j["results"] = results;
  j["summary"] = {{"pass", s.summary.pass}, {"fail", s.summary.fail}, {"skipped", s.summary.skipped}};
  return j;
}

/// Renders a sweep (a single verification is a one-point sweep).
inline std::string render(const SweepReport& s, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::text:
      for (const auto& r : s.results) out << text_line(r) << '\n';
      out << "summary: " << s.identity << " tuples=" << s.results.size()
          << " pass=" << s.summary.pass << " fail=" << s.summary.fail
          << " skipped=" << s.summary.skipped << '\n';
      break;
    case Format::json:
      out << to_json(s).dump(2) << '\n';
      break;
    case Format::csv:
      out << "identity";
      for (char c : s.parameter_names) out << ',' << c;
      out << ",lhs,rhs,alternates,oracle,verdict\n";
      for (const auto& r : s.results) {
        out << r.identity;
        for (char c : s.parameter_names) out << ',' << r.params[c];
        out << ',' << r.lhs << ',' << r.rhs << ',' << detail::join_alternates(r, ';') << ','
            << (r.oracle ? r.oracle->str() : std::string()) << ',' << to_string(r.verdict) << '\n';
      }
      break;
  }
  return out.str();
}

inline SweepReport single_point(const VerificationReport& r) {
  SweepReport s;
  s.identity = r.identity;
  s.parameter_names = r.parameter_names;
  for (char c : r.parameter_names) s.bounds[c] = {r.params[c], r.params[c]};
  switch (r.verdict) {
    case Verdict::pass: ++s.summary.pass; break;
    case Verdict::fail: ++s.summary.fail; break;
    case Verdict::oracle_skipped: ++s.summary.skipped; break;
  }
  s.results.push_back(r);
  return s;
}

inline std::string render_registry(Format format) {
  const auto& all = registry();
  std::ostringstream out;
  auto params_of = [](const IdentityDescriptor& d) {
    std::string s;
    for (char c : d.parameter_names) {
      if (!s.empty()) s.push_back(' ');
      s.push_back(c);
    }
    return s;
  };
  switch (format) {
    case Format::text:
      for (const auto& d : all) {
        out << d.id << "  " << d.statement << "  | params: " << params_of(d)
            << " | domain: " << d.domain_text() << " | oracle: "
            << (d.oracle ? d.oracle->kind + " [" + d.oracle->subdomain + "]" : std::string("none"));
        if (!d.note.empty()) out << " | note: " << d.note;
        out << '\n';
      }
      break;
    case Format::json: {
      Json arr = Json::array();
      for (const auto& d : all) {
        Json j;
        j["id"] = d.id;
        j["statement"] = d.statement;
        j["parameters"] = params_of(d);
        j["domain"] = d.domain_text();
        j["oracle"] = d.oracle ? Json(d.oracle->kind) : Json(nullptr);
        j["oracle_subdomain"] = d.oracle ? Json(d.oracle->subdomain) : Json(nullptr);
        j["note"] = d.note;
        arr.push_back(j);
      }
      out << arr.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "id,statement,parameters,domain,oracle,oracle_subdomain,note\n";
      for (const auto& d : all) {
        out << d.id << ',' << detail::csv_field(d.statement) << ',' << params_of(d) << ','
            << detail::csv_field(d.domain_text()) << ','
            << detail::csv_field(d.oracle ? d.oracle->kind : "") << ','
            << detail::csv_field(d.oracle ? d.oracle->subdomain : "") << ','
            << detail::csv_field(d.note) << '\n';
      }
      break;
  }
  return out.str();
}

}  // namespace bijlab::report
