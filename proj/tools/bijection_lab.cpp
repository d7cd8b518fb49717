// bijection_lab: verify counting identities by closed form and brute-force
// recount, enumerate the word codecs, and answer count queries.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bijlab/bijections.hpp"
#include "bijlab/identities.hpp"
#include "bijlab/radix_word.hpp"
#include "bijlab/report.hpp"

namespace {

using bijlab::ExactInt;
using bijlab::report::Format;
using bijlab::report::Json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::int64_t parse_int(const std::string& text, const std::string& what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError(what + ": expected a non-negative integer, got '" + text + "'");
  }
  try {
    return std::stoll(text);
  } catch (const std::out_of_range&) {
    throw UsageError(what + ": value too large: '" + text + "'");
  }
}

/// "a..b" (inclusive) or a single value "a".
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text, const std::string& what) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_int(text, what);
    return {v, v};
  }
  const auto lo = parse_int(text.substr(0, dots), what);
  const auto hi = parse_int(text.substr(dots + 2), what);
  if (lo > hi) throw UsageError(what + ": empty range '" + text + "'");
  return {lo, hi};
}

/// Per-parameter values given on the command line.
struct ParamFlags {
  std::map<char, std::string> raw;

  void add_to(CLI::App* cmd, const std::string& help) {
    for (char c : {'n', 'm', 'p', 'k'}) {
      cmd->add_option(std::string("--") + c, raw[c], help + " " + c);
    }
  }

  [[nodiscard]] std::optional<std::string> get(char c) const {
    auto it = raw.find(c);
    if (it == raw.end() || it->second.empty()) return std::nullopt;
    return it->second;
  }

  [[nodiscard]] std::int64_t value(char c) const {
    auto v = get(c);
    if (!v) throw UsageError(std::string("missing required option --") + c);
    return parse_int(*v, std::string("--") + c);
  }
};

std::string render_items(const std::string& codec, const Json& params,
                         const std::vector<std::vector<std::string>>& rows,
                         const std::vector<std::string>& columns, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::text:
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "  " : "") << row[i];
        out << '\n';
      }
      out << "total: " << rows.size() << '\n';
      break;
    case Format::json: {
      Json j;
      j["codec"] = codec;
      j["params"] = params;
      j["count"] = std::to_string(rows.size());
      Json items = Json::array();
      for (const auto& row : rows) {
        Json item;
        for (std::size_t i = 0; i < row.size(); ++i) item[columns[i]] = row[i];
        items.push_back(item);
      }
      j["items"] = items;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
      out << '\n';
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << '\n';
      }
      break;
  }
  return out.str();
}

std::string enumerate_codec(const std::string& codec, const ParamFlags& flags,
                            std::int64_t length, const bijlab::EnumBudget& budget, Format format,
                            bool& all_ok) {
  using namespace bijlab;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> columns{"rank", "word", "object", "round_trip"};
  Json params = Json::object();
  std::uint64_t rank = 0;
  auto emit = [&](const RadixWord& word, const std::string& object, bool ok) {
    all_ok = all_ok && ok;
    rows.push_back({std::to_string(rank++), word.to_string(), object, ok ? "ok" : "MISMATCH"});
  };

  if (codec == "subset") {
    const auto n = flags.value('n');
    params["n"] = n;
    for (const auto& w : iterate_all(2, static_cast<std::size_t>(n), budget)) {
      const auto s = subset_decode(w);
      emit(w, to_string(s), subset_encode(s) == w);
    }
  } else if (codec == "coloring") {
    const auto n = flags.value('n');
    const auto p = flags.value('p');
    params["n"] = n;
    params["p"] = p;
    for (const auto& w : iterate_all(static_cast<Digit>(p), static_cast<std::size_t>(n), budget)) {
      const auto c = coloring_decode(w, static_cast<Digit>(p));
      emit(w, to_string(c), coloring_encode(c) == w);
    }
  } else if (codec == "truthtable") {
    const auto n = flags.value('n');
    const auto k = flags.get('k') ? flags.value('k') : 2;
    params["n"] = n;
    params["k"] = k;
    const ExactInt width = word_count(static_cast<Digit>(k), static_cast<std::size_t>(n));
    require_budget(width, budget, "truth table width");
    for (const auto& w : iterate_all(static_cast<Digit>(k), width.to_u64(), budget)) {
      const auto t = truthtable_decode(w, static_cast<std::size_t>(n));
      emit(w, to_string(t), truthtable_encode(t) == w);
    }
  } else if (codec == "divisor") {
    const auto n = flags.value('n');
    const auto p = flags.value('p');
    params["n"] = n;
    params["p"] = p;
    const auto primes = first_primes(static_cast<std::size_t>(n));
    for (const auto& w :
         iterate_all(static_cast<Digit>(p + 1), static_cast<std::size_t>(n), budget)) {
      const auto d = divisor_decode(w, primes);
      emit(w, to_string(d), divisor_encode(d) == w && d.x() * d.y() == d.target());
    }
  } else if (codec == "walk") {
    if (length < 1) throw UsageError("walk enumeration needs --length >= 1");
    params["length"] = length;
    for (const auto& w : iterate_all(2, static_cast<std::size_t>(length - 1), budget)) {
      const auto g = walk_decode(w);
      emit(w, to_string(g), walk_encode(g) == w);
    }
  } else if (codec == "permutation") {
    const auto n = flags.value('n');
    params["n"] = n;
    columns = {"rank", "permutation", "fixed_point_mask", "fixed_points"};
    for_each_permutation(static_cast<std::size_t>(n), budget, [&](std::span<const std::uint32_t> images) {
      const Permutation perm({images.begin(), images.end()});
      rows.push_back({std::to_string(rank++), to_string(perm), fixed_point_mask(perm).to_string(),
                      std::to_string(perm.fixed_points())});
    });
  } else {
    throw UsageError("unknown codec '" + codec +
                     "'; known codecs: subset, coloring, truthtable, divisor, walk, permutation");
  }
  return render_items(codec, params, rows, columns, format);
}

std::string count_quantity(const std::string& what, const ParamFlags& flags, std::int64_t length,
                           std::optional<std::int64_t> colour, const bijlab::EnumBudget& budget,
                           Format format) {
  using namespace bijlab;
  Json params = Json::object();
  std::vector<ExactInt> values;
  auto u = [](std::int64_t v) { return static_cast<std::size_t>(v); };

  if (what == "walks") {
    if (length < 1) throw UsageError("count walks needs --length >= 1");
    params["length"] = length;
    values.push_back(count_walks(u(length)));
  } else if (what == "functions") {
    const auto n = flags.value('n');
    const auto k = flags.get('k') ? flags.value('k') : 2;
    params["n"] = n;
    params["k"] = k;
    values.push_back(count_functions(u(n), static_cast<Digit>(k)));
  } else if (what == "xy-solutions") {
    const auto n = flags.value('n');
    const auto p = flags.value('p');
    params["n"] = n;
    params["p"] = p;
    values.push_back(count_xy_solutions(u(n), static_cast<std::uint32_t>(p)));
  } else if (what == "subsets") {
    const auto n = flags.value('n');
    params["n"] = n;
    values.push_back(power(ExactInt(2), u(n)));
  } else if (what == "colorings") {
    const auto n = flags.value('n');
    const auto p = flags.value('p');
    params["n"] = n;
    params["p"] = p;
    if (flags.get('k')) {
      const auto k = flags.value('k');
      const auto i = colour.value_or(0);
      params["k"] = k;
      params["i"] = i;
      values.push_back(coloring_count(n, static_cast<Digit>(p), static_cast<Digit>(i), k));
    } else {
      values.push_back(power(ExactInt(p), u(n)));
    }
  } else if (what == "frequency") {
    const auto n = flags.value('n');
    const auto p = flags.value('p');
    const auto k = flags.value('k');
    const auto i = colour.value_or(0);
    params["n"] = n;
    params["p"] = p;
    params["k"] = k;
    params["i"] = i;
    values.push_back(count_by_frequency(static_cast<Digit>(p), u(n), static_cast<Digit>(i), u(k), budget));
  } else if (what == "binomial") {
    const auto n = flags.value('n');
    const auto k = flags.value('k');
    params["n"] = n;
    params["k"] = k;
    values.push_back(binomial(n, k));
  } else if (what == "factorial") {
    const auto n = flags.value('n');
    params["n"] = n;
    values.push_back(factorial(n));
  } else if (what == "fixed-points") {
    const auto n = flags.value('n');
    params["n"] = n;
    values = fixed_point_profile(u(n), budget);
  } else {
    throw UsageError("unknown quantity '" + what +
                     "'; known quantities: walks, functions, xy-solutions, subsets, colorings, "
                     "frequency, binomial, factorial, fixed-points");
  }

  std::ostringstream out;
  switch (format) {
    case Format::text:
      for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
      out << '\n';
      break;
    case Format::json: {
      Json j;
      j["quantity"] = what;
      j["params"] = params;
      if (what == "fixed-points") {
        Json arr = Json::array();
        for (const auto& v : values) arr.push_back(v.str());
        j["profile"] = arr;
      } else {
        j["count"] = values.front().str();
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "quantity,index,count\n";
      for (std::size_t i = 0; i < values.size(); ++i) out << what << ',' << i << ',' << values[i] << '\n';
      break;
  }
  return out.str();
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("BIJECTION_LAB_BUDGET"); env != nullptr && *env != '\0') {
    const auto v = parse_int(env, "BIJECTION_LAB_BUDGET");
    if (v <= 0) throw UsageError("BIJECTION_LAB_BUDGET must be positive");
    return static_cast<std::uint64_t>(v);
  }
  return bijlab::EnumBudget::kDefaultWords;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact bijective counting: verify identities, enumerate codecs, count objects"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format_name = "text";
  std::string output_path;
  std::uint64_t enum_budget = 0;
  bijlab::OracleLimits limits;
  app.add_option("--format", format_name, "Report format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--enum-budget", enum_budget,
                 "Maximum number of objects any enumeration may visit (default 10000000, "
                 "or $BIJECTION_LAB_BUDGET)")
      ->check(CLI::PositiveNumber);
  app.add_option("--output", output_path, "Write the report to this file instead of stdout");
  app.add_option("--binary-width", limits.binary_width, "Widest binary word an oracle may enumerate");
  app.add_option("--ternary-width", limits.ternary_width, "Widest ternary word an oracle may enumerate");
  app.add_option("--perm-limit", limits.permutation_n, "Largest n for permutation oracles");

  auto* list_cmd = app.add_subcommand("list", "List the identity registry");

  std::string identity;
  ParamFlags verify_flags;
  auto* verify_cmd = app.add_subcommand("verify", "Verify one identity at one parameter tuple");
  verify_cmd->add_option("identity", identity, "Identity id, e.g. A8e")->required();
  verify_flags.add_to(verify_cmd, "Value of parameter");

  ParamFlags sweep_flags;
  auto* sweep_cmd = app.add_subcommand("sweep", "Verify an identity over a parameter grid");
  sweep_cmd->add_option("identity", identity, "Identity id, e.g. A8d")->required();
  sweep_flags.add_to(sweep_cmd, "Value or inclusive range a..b (default 0..10) of parameter");

  std::string codec;
  ParamFlags enum_flags;
  std::int64_t length = 0;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List every object of a codec with its word");
  enumerate_cmd->add_option("codec", codec, "subset, coloring, truthtable, divisor, walk, permutation")
      ->required();
  enum_flags.add_to(enumerate_cmd, "Parameter");
  enumerate_cmd->add_option("--length", length, "Word length L for walks");

  std::string quantity;
  ParamFlags count_flags;
  std::optional<std::int64_t> colour;
  auto* count_cmd = app.add_subcommand("count", "Count objects by formula");
  count_cmd->add_option("quantity", quantity,
                        "walks, functions, xy-solutions, subsets, colorings, frequency, binomial, "
                        "factorial, fixed-points")
      ->required();
  count_flags.add_to(count_cmd, "Parameter");
  count_cmd->add_option("--length", length, "Word length L for walks");
  count_cmd->add_option("--i", colour, "Colour / digit index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Format format = bijlab::report::parse_format(format_name);
    bijlab::VerifyOptions options;
    options.limits = limits;
    options.budget.words = enum_budget != 0 ? enum_budget : default_budget();

    std::string body;
    int status = kExitOk;
    if (*list_cmd) {
      body = bijlab::report::render_registry(format);
    } else if (*verify_cmd) {
      const auto& d = bijlab::find_identity(identity);
      bijlab::Params params;
      for (char c : d.parameter_names) params.set(c, verify_flags.value(c));
      for (char c : {'n', 'm', 'p', 'k'}) {
        if (verify_flags.get(c) && !params.has(c)) {
          throw UsageError(d.id + " has no parameter " + std::string(1, c));
        }
      }
      const auto r = bijlab::verify(d, params, options);
      body = bijlab::report::render(bijlab::report::single_point(r), format);
      if (r.verdict == bijlab::Verdict::fail) status = kExitFailed;
    } else if (*sweep_cmd) {
      const auto& d = bijlab::find_identity(identity);
      bijlab::SweepBounds bounds;
      for (char c : d.parameter_names) {
        auto text = sweep_flags.get(c);
        bounds[c] = text ? parse_range(*text, std::string("--") + c) : std::pair<std::int64_t, std::int64_t>{0, 10};
      }
      const auto s = bijlab::sweep(d, bounds, options);
      body = bijlab::report::render(s, format);
      if (!s.all_passed()) status = kExitFailed;
    } else if (*enumerate_cmd) {
      bool all_ok = true;
      body = enumerate_codec(codec, enum_flags, length, options.budget, format, all_ok);
      if (!all_ok) status = kExitFailed;
    } else if (*count_cmd) {
      body = count_quantity(quantity, count_flags, length, colour, options.budget, format);
    }

    if (output_path.empty()) {
      std::cout << body;
    } else {
      std::ofstream file(output_path, std::ios::binary);
      if (!file) throw UsageError("cannot open output file '" + output_path + "'");
      file << body;
    }
    return status;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const bijlab::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
