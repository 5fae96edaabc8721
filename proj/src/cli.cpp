#include "partpos/cli.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "CLI11.hpp"

#include "partpos/errors.hpp"
#include "partpos/json_io.hpp"
#include "partpos/render.hpp"
#include "partpos/svalue.hpp"
#include "partpos/verify.hpp"

namespace partpos {

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParameterError("expected an integer for " + what + ", got '" + text + "'");
}

// "AI:n=5" or "AIII:p=2,q=3".
std::pair<FamilyTag, SpaceParams> parse_param_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ParameterError("--param expects FAMILY:key=value[,key=value], got '" + spec + "'");
  const FamilyTag family = parse_family(spec.substr(0, colon));
  SpaceParams params;
  std::string rest = spec.substr(colon + 1);
  std::size_t start = 0;
  while (start <= rest.size()) {
    const auto end = std::min(rest.find(',', start), rest.size());
    const std::string item = rest.substr(start, end - start);
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParameterError("malformed parameter '" + item + "' in '" + spec + "'");
    const std::string key = item.substr(0, eq);
    const int value = parse_int(item.substr(eq + 1), key);
    if (key == "n")
      params.n = value;
    else if (key == "p")
      params.p = value;
    else if (key == "q")
      params.q = value;
    else
      throw ParameterError("unknown parameter '" + key + "' in '" + spec + "'");
    start = end + 1;
  }
  return {family, params};
}

// "3..10" or a single value.
ParamRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(text, "--range");
    return {v, v};
  }
  return {parse_int(text.substr(0, dots), "--range"), parse_int(text.substr(dots + 2), "--range")};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate restricted root data of compact symmetric spaces", "partpos"};
  app.require_subcommand(1);
  std::string format_name = "text";
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "text, markdown, json or csv")
        ->check(CLI::IsMember({"text", "markdown", "md", "json", "csv"}));
  };

  auto* table = app.add_subcommand("table", "Rank, dimension and s for every family");
  std::vector<std::string> param_specs;
  table->add_option("--param", param_specs, "Sample parameters, e.g. AI:n=6 or CII:p=2,q=4");
  add_format(table);

  auto* compute = app.add_subcommand("compute", "Analyze one symmetric space");
  std::string family_name;
  std::optional<int> n, p, q;
  bool detail = false;
  compute->add_option("family", family_name, "Family, e.g. EII or AIII")->required();
  compute->add_option("--n", n, "Parameter n");
  compute->add_option("--p", p, "Parameter p");
  compute->add_option("--q", q, "Parameter q");
  compute->add_flag("--detail", detail, "Print s_k, subsystem counts and multiplicities");
  add_format(compute);

  auto* roots = app.add_subcommand("roots", "List positive roots in simple-root coordinates");
  std::string type_name;
  roots->add_option("type", type_name, "Lie type, e.g. E6 or B4")->required();
  add_format(roots);

  auto* verify = app.add_subcommand("verify", "Run the self-check suite");
  int max_rank = 8;
  verify->add_option("--max-rank", max_rank, "Extend parametric sweeps up to this ambient rank")
      ->check(CLI::Range(1, 40));
  add_format(verify);

  auto* discrepancies = app.add_subcommand("discrepancies", "Instances where enumeration and the table formula differ");
  std::string disc_family;
  std::string range_text;
  discrepancies->add_option("family", disc_family, "Restrict to one family");
  discrepancies->add_option("--range", range_text, "Parameter range a..b");
  add_format(discrepancies);

  app.add_subcommand("export", "Catalog as JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "partpos: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const Format format = parse_format(format_name);

    if (*table) {
      std::map<FamilyTag, SpaceParams> overrides;
      for (const auto& spec : param_specs) {
        const auto [family, params] = parse_param_spec(spec);
        overrides[family] = params;
      }
      const auto rows = build_table(overrides);
      out << render_table(rows, format);
      const bool ok = std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.corrected_match; });
      return ok ? kOk : kMismatch;
    }

    if (*compute) {
      const auto space = make_space(parse_family(family_name), SpaceParams{n, p, q});
      out << render_report(analyze(space), format, detail);
      return kOk;
    }

    if (*roots) {
      out << render_roots(positive_roots(LieType::parse(type_name)), format);
      return kOk;
    }

    if (*verify) {
      const auto results = run_verification({max_rank, make_space});
      out << render_checks(results, format);
      return all_passed(results) ? kOk : kMismatch;
    }

    if (*discrepancies) {
      std::vector<FamilyTag> families;
      if (!disc_family.empty()) {
        families.push_back(parse_family(disc_family));
      } else {
        for (FamilyTag f : kAllFamilies)
          if (param_shape(f) != ParamShape::none) families.push_back(f);
      }
      std::vector<DiscrepancyReport> reports;
      for (FamilyTag f : families) {
        ParamRange range = range_text.empty() ? sweep_range(f) : parse_range(range_text);
        if (param_shape(f) == ParamShape::none) range = {0, 0};
        reports.push_back(discrepancy_report(f, range));
      }
      out << render_discrepancies(reports, format);
      return kOk;
    }

    out << catalog_to_json().dump(2) << "\n";
    return kOk;
  } catch (const ParameterError& e) {
    err << "partpos: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "partpos: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace partpos
