#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "partpos/rootsys.hpp"
#include "partpos/svalue.hpp"
#include "partpos/symspace.hpp"
#include "partpos/verify.hpp"

namespace partpos {

enum class Format { text, markdown, json, csv };

Format parse_format(std::string_view name);

struct TableRow {
  FamilyTag family;
  std::string label;
  SpaceParams params;
  int rank = 0;
  int dimension = 0;
  int s = 0;
  int s_table = 0;
  int s_corrected = 0;
  bool table_match = false;
  bool corrected_match = false;
};

// Sample instance used for a family's table row. Chosen outside the
// exception ledger so the table column reproduces verbatim.
SpaceParams default_table_params(FamilyTag family);

// One row per family in catalog order; `overrides` replaces the sample
// parameters of the listed families.
std::vector<TableRow> build_table(const std::map<FamilyTag, SpaceParams>& overrides = {});

std::string render_table(const std::vector<TableRow>& rows, Format format);
std::string render_report(const SValueReport& report, Format format, bool detail);
std::string render_roots(const RootSystem& roots, Format format);
std::string render_checks(const std::vector<CheckResult>& results, Format format);
std::string render_discrepancies(const std::vector<DiscrepancyReport>& reports, Format format);

}  // namespace partpos
