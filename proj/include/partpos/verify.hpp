#pragma once

// Self-check suite behind `partpos verify`.

#include <functional>
#include <string>
#include <vector>

#include "partpos/svalue.hpp"
#include "partpos/symspace.hpp"

namespace partpos {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

using SpaceFactory = std::function<SymmetricSpace(FamilyTag, SpaceParams)>;

struct VerifyOptions {
  // Parametric sweeps are extended so every instance with ambient rank up to
  // this bound is covered.
  int max_rank = 8;
  // Swappable so tests can feed a deliberately broken catalog.
  SpaceFactory factory = make_space;
};

// Parameter box checked by default for a parametric family; {0, -1} for fixed ones.
ParamRange sweep_range(FamilyTag family);

// Parameter instances swept for a parametric family; empty for fixed ones.
std::vector<SpaceParams> sweep_instances(FamilyTag family, int max_rank);

std::vector<CheckResult> run_verification(const VerifyOptions& options = {});
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace partpos
