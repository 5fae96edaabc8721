#include "partpos/render.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <variant>

#include "partpos/errors.hpp"
#include "partpos/json_io.hpp"

namespace partpos {

namespace {

using Cell = std::variant<std::string, int, bool>;

struct Grid {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

std::string cell_text(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* i = std::get_if<int>(&c)) return std::to_string(*i);
  return std::get<bool>(c) ? "yes" : "no";
}

// Display width: code points, which is right for the labels used here.
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char ch) {
    return (static_cast<unsigned char>(ch) & 0xC0) != 0x80;
  }));
}

std::string render_text(const Grid& g) {
  std::vector<std::size_t> w(g.header.size());
  for (std::size_t i = 0; i < g.header.size(); ++i) w[i] = width(g.header[i]);
  for (const auto& row : g.rows)
    for (std::size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], width(cell_text(row[i])));

  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += "  ";
      out += cells[i];
      if (i + 1 < cells.size()) out.append(w[i] - width(cells[i]), ' ');
    }
    os << out << '\n';
  };
  line(g.header);
  for (const auto& row : g.rows) {
    std::vector<std::string> cells;
    for (const auto& c : row) cells.push_back(cell_text(c));
    line(cells);
  }
  return os.str();
}

std::string render_markdown(const Grid& g) {
  std::ostringstream os;
  os << '|';
  for (const auto& h : g.header) os << ' ' << h << " |";
  os << "\n|";
  for (std::size_t i = 0; i < g.header.size(); ++i) os << "---|";
  os << '\n';
  for (const auto& row : g.rows) {
    os << '|';
    for (const auto& c : row) {
      std::string t = cell_text(c);
      for (std::size_t pos = 0; (pos = t.find('|', pos)) != std::string::npos; pos += 2) t.insert(pos, "\\");
      os << ' ' << t << " |";
    }
    os << '\n';
  }
  return os.str();
}

std::string csv_field(const Cell& c) {
  if (const auto* i = std::get_if<int>(&c)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  const auto& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

std::string render_csv(const Grid& g) {
  std::ostringstream os;
  for (std::size_t i = 0; i < g.header.size(); ++i) os << (i ? "," : "") << g.header[i];
  os << '\n';
  for (const auto& row : g.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << '\n';
  }
  return os.str();
}

Json grid_json(const Grid& g) {
  Json out = Json::array();
  for (const auto& row : g.rows) {
    Json obj;
    for (std::size_t i = 0; i < row.size(); ++i)
      std::visit([&](const auto& v) { obj[g.header[i]] = v; }, row[i]);
    out.push_back(std::move(obj));
  }
  return out;
}

std::string render_grid(const Grid& g, Format format) {
  switch (format) {
    case Format::text: return render_text(g);
    case Format::markdown: return render_markdown(g);
    case Format::csv: return render_csv(g);
    case Format::json: return grid_json(g).dump(2) + "\n";
  }
  return {};
}

std::string joined(const std::vector<int>& v, char sep = ' ') {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "markdown" || name == "md") return Format::markdown;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw ParameterError("unknown format '" + std::string(name) + "' (expected text, markdown, json or csv)");
}

SpaceParams default_table_params(FamilyTag family) {
  switch (family) {
    case FamilyTag::AI: return SpaceParams::of_n(5);
    case FamilyTag::AII: return SpaceParams::of_n(4);
    case FamilyTag::AIII: return SpaceParams::of_pq(3, 4);
    case FamilyTag::BDI: return SpaceParams::of_pq(3, 4);
    case FamilyTag::DIII: return SpaceParams::of_n(7);
    case FamilyTag::CI: return SpaceParams::of_n(4);
    case FamilyTag::CII: return SpaceParams::of_pq(2, 3);
    default: return SpaceParams::none();
  }
}

std::vector<TableRow> build_table(const std::map<FamilyTag, SpaceParams>& overrides) {
  std::vector<TableRow> rows;
  for (const auto& entry : catalog()) {
    const auto it = overrides.find(entry.family);
    const auto space = make_space(entry.family, it != overrides.end() ? it->second : default_table_params(entry.family));
    TableRow row{entry.family, space.label, space.params, space.rank, space.dimension, s_value(space),
                 closed_form_s(space, ClosedFormMode::table), closed_form_s(space, ClosedFormMode::corrected),
                 false, false};
    row.table_match = row.s == row.s_table;
    row.corrected_match = row.s == row.s_corrected;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_table(const std::vector<TableRow>& rows, Format format) {
  Grid g{{"family", "label", "params", "rank", "dimension", "s", "s_table", "s_corrected", "table_match",
          "corrected_match"},
         {}};
  for (const auto& r : rows)
    g.rows.push_back({std::string(to_string(r.family)), r.label, r.params.to_string(), r.rank, r.dimension, r.s,
                      r.s_table, r.s_corrected, r.table_match, r.corrected_match});
  return render_grid(g, format);
}

std::string render_report(const SValueReport& report, Format format, bool detail) {
  const auto& sp = report.space;
  if (format == Format::json) return report_to_json(report).dump(2) + "\n";

  std::vector<int> counts;
  for (const auto& [lambda, m] : report.multiplicities) counts.push_back(m);

  if (format == Format::csv) {
    Grid g{{"family", "params", "l", "r", "dimension", "s"}, {}};
    std::vector<Cell> row{std::string(to_string(sp.family)), sp.params.to_string(), sp.ambient.rank, sp.rank,
                          sp.dimension, report.s};
    if (detail) {
      for (const char* h : {"s_k", "argmax", "delta_counts", "zero_count"}) g.header.push_back(h);
      row.push_back(joined(report.s_k));
      row.push_back(joined(report.argmax));
      row.push_back(joined(report.delta_counts));
      row.push_back(report.zero_count);
    }
    g.rows.push_back(std::move(row));
    return render_grid(g, format);
  }

  std::ostringstream os;
  const bool md = format == Format::markdown;
  const char* bullet = md ? "- " : "";
  std::string title = std::string(to_string(sp.family));
  if (!sp.params.to_string().empty()) title += " " + sp.params.to_string();
  os << (md ? "### " : "") << title << "  " << sp.label << "\n";
  if (md) os << '\n';
  os << bullet << "ambient: " << sp.ambient.name() << "\n";
  os << bullet << "r: " << sp.rank << "\n";
  os << bullet << "dimension: " << sp.dimension << "\n";
  os << bullet << "s: " << report.s << "\n";
  if (!detail) return os.str();

  os << bullet << "s_k: " << joined(report.s_k) << "\n";
  os << bullet << "argmax: " << joined(report.argmax) << "\n";
  os << bullet << "|Delta_k+|: " << joined(report.delta_counts) << "\n";
  os << bullet << "zero_count: " << report.zero_count << "\n";
  os << bullet << "multiplicities:\n";
  if (md) os << '\n';
  Grid g{{"lambda", "count"}, {}};
  for (const auto& [lambda, m] : report.multiplicities) g.rows.push_back({to_string(lambda), m});
  if (md) {
    os << render_markdown(g);
  } else {
    std::istringstream body(render_text(g));
    for (std::string line; std::getline(body, line);) os << "  " << line << "\n";
  }
  return os.str();
}

std::string render_roots(const RootSystem& roots, Format format) {
  const auto list = roots.positive_roots();
  switch (format) {
    case Format::json: {
      Json j;
      j["type"] = roots.type().name();
      Json arr = Json::array();
      for (const auto& r : list) arr.push_back(r.values());
      j["roots"] = std::move(arr);
      j["count"] = list.size();
      return j.dump(2) + "\n";
    }
    case Format::csv: {
      Grid g{{"height", "root"}, {}};
      for (const auto& r : list) g.rows.push_back({r.height(), to_string(r)});
      return render_csv(g);
    }
    case Format::markdown: {
      std::ostringstream os;
      os << "### " << roots.type().name() << "\n\n";
      for (const auto& r : list) os << "- " << to_string(r) << "\n";
      os << "\ncount: " << list.size() << "\n";
      return os.str();
    }
    case Format::text: break;
  }
  std::ostringstream os;
  for (const auto& r : list) os << to_string(r) << "\n";
  os << "count: " << list.size() << "\n";
  return os.str();
}

std::string render_checks(const std::vector<CheckResult>& results, Format format) {
  if (format == Format::json) {
    Json j;
    j["passed"] = all_passed(results);
    Json checks = Json::array();
    for (const auto& r : results) checks.push_back(Json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    j["checks"] = std::move(checks);
    return j.dump(2) + "\n";
  }
  Grid g{{"status", "name", "detail"}, {}};
  for (const auto& r : results) g.rows.push_back({std::string(r.passed ? "PASS" : "FAIL"), r.name, r.detail});
  if (format == Format::csv) {
    Grid c{{"name", "passed", "detail"}, {}};
    for (const auto& r : results) c.rows.push_back({r.name, r.passed, r.detail});
    return render_csv(c);
  }
  const auto failed = std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.passed; });
  std::string summary = failed == 0 ? "all " + std::to_string(results.size()) + " checks passed\n"
                                    : std::to_string(failed) + " of " + std::to_string(results.size()) +
                                          " checks failed\n";
  return render_grid(g, format) + (format == Format::markdown ? "\n" : "") + summary;
}

std::string render_discrepancies(const std::vector<DiscrepancyReport>& reports, Format format) {
  if (format == Format::json) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(discrepancies_to_json(r));
    return arr.dump(2) + "\n";
  }
  Grid g{{"family", "params", "enumerated", "table", "corrected"}, {}};
  std::vector<std::string> notes;
  for (const auto& r : reports) {
    for (const auto& e : r.entries)
      g.rows.push_back({std::string(to_string(e.family)), e.params.to_string(), e.enumerated, e.table, e.corrected});
    notes.insert(notes.end(), r.notes.begin(), r.notes.end());
  }
  std::string out = render_grid(g, format);
  if (format == Format::csv) return out;
  if (!notes.empty()) {
    out += "\nnotes:\n";
    for (const auto& n : notes) out += (format == Format::markdown ? "- " : "  ") + n + "\n";
  }
  return out;
}

}  // namespace partpos
