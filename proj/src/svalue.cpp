#include "partpos/svalue.hpp"

#include <algorithm>

#include "partpos/errors.hpp"

namespace partpos {

std::set<RootVector, HeightOrder> delta_k_positive(const SymmetricSpace& space, const RootSystem& roots, int k) {
  if (k < 1 || k > space.rank)
    throw ParameterError("k = " + std::to_string(k) + " outside 1.." + std::to_string(space.rank));
  std::set<RootVector, HeightOrder> out;
  for (const auto& alpha : roots.positive_roots()) {
    const auto image = space.map.apply(alpha);
    if (!image.is_zero() && image[static_cast<std::size_t>(k - 1)] == 0) out.insert(alpha);
  }
  return out;
}

std::set<RootVector, HeightOrder> delta_k_positive(const SymmetricSpace& space, int k) {
  return delta_k_positive(space, positive_roots(space.ambient), k);
}

std::map<RestrictedVector, int> restricted_multiplicities(const SymmetricSpace& space) {
  return analyze(space).multiplicities;
}

SValueReport analyze(const SymmetricSpace& space) {
  const RootSystem roots = positive_roots(space.ambient);
  const int r = space.rank;
  SValueReport report{space, {}, {}, 0, std::vector<int>(static_cast<std::size_t>(r), 0), 0, {}};

  for (const auto& alpha : roots.positive_roots()) {
    const auto image = space.map.apply(alpha);
    if (image.is_zero()) {
      ++report.zero_count;
      continue;
    }
    ++report.multiplicities[image];
    for (int k = 0; k < r; ++k)
      if (image[static_cast<std::size_t>(k)] == 0) ++report.delta_counts[static_cast<std::size_t>(k)];
  }

  for (int c : report.delta_counts) report.s_k.push_back(r + c);
  // A rank-one space has no proper subsystem to maximize over.
  report.s = r == 1 ? 1 : *std::max_element(report.s_k.begin(), report.s_k.end());
  const int top = *std::max_element(report.s_k.begin(), report.s_k.end());
  for (int k = 0; k < r; ++k)
    if (report.s_k[static_cast<std::size_t>(k)] == top) report.argmax.push_back(k + 1);
  return report;
}

std::vector<int> s_vector(const SymmetricSpace& space) { return analyze(space).s_k; }

int s_value(const SymmetricSpace& space) { return analyze(space).s; }

const std::vector<LedgerEntry>& exception_ledger() {
  static const std::vector<LedgerEntry> ledger = {
      {FamilyTag::AIII, SpaceParams::of_pq(2, 2), 4}, {FamilyTag::BDI, SpaceParams::of_pq(2, 2), 3},
      {FamilyTag::BDI, SpaceParams::of_pq(3, 3), 6},  {FamilyTag::DIII, SpaceParams::of_n(4), 6},
      {FamilyTag::DIII, SpaceParams::of_n(6), 15},    {FamilyTag::CII, SpaceParams::of_pq(2, 2), 6},
  };
  return ledger;
}

int closed_form_s(const SymmetricSpace& space, ClosedFormMode mode) {
  if (mode == ClosedFormMode::corrected) {
    if (space.rank == 1) return 1;
    for (const auto& e : exception_ledger())
      if (e.family == space.family && e.params == space.params) return e.s;
  }
  const auto& P = space.params;
  switch (space.family) {
    case FamilyTag::AI: return *P.n * (*P.n - 1) / 2;
    case FamilyTag::AII: return (*P.n - 1) * (2 * *P.n - 3);
    case FamilyTag::AIII: return 1 + 2 * (*P.p - 1) * (*P.q - 1);
    case FamilyTag::BDI: return 1 + (*P.p - 1) * (*P.q - 1);
    case FamilyTag::DIII: return 1 + (*P.n - 2) * (*P.n - 3);
    case FamilyTag::CI: return 1 + *P.n * (*P.n - 1);
    case FamilyTag::CII: return 1 + 4 * (*P.p - 1) * (*P.q - 1);
    case FamilyTag::EI: return 26;
    case FamilyTag::EII: return 19;
    case FamilyTag::EIII: return 11;
    case FamilyTag::EIV: return 10;
    case FamilyTag::EV: return 43;
    case FamilyTag::EVI: return 31;
    case FamilyTag::EVII: return 27;
    case FamilyTag::EVIII: return 71;
    case FamilyTag::EIX: return 55;
    case FamilyTag::FI: return 13;
    case FamilyTag::FII: return 1;
    case FamilyTag::G: return 3;
  }
  return 0;
}

namespace {

int lower_bound_for(FamilyTag family) {
  switch (family) {
    case FamilyTag::DIII: return 3;
    case FamilyTag::AI:
    case FamilyTag::AII:
    case FamilyTag::CI: return 2;
    default: return 1;
  }
}

}  // namespace

DiscrepancyReport discrepancy_report(FamilyTag family, ParamRange range) {
  const std::string name(to_string(family));
  if (range.lo > range.hi)
    throw ParameterError("empty range " + std::to_string(range.lo) + ".." + std::to_string(range.hi));
  const auto shape = param_shape(family);
  if (shape != ParamShape::none && range.lo < lower_bound_for(family))
    throw ParameterError(name + " range must start at " + std::to_string(lower_bound_for(family)) + " or above");

  std::vector<SpaceParams> instances;
  switch (shape) {
    case ParamShape::none: instances.push_back(SpaceParams::none()); break;
    case ParamShape::n:
      for (int n = range.lo; n <= range.hi; ++n) instances.push_back(SpaceParams::of_n(n));
      break;
    case ParamShape::pq:
      for (int p = range.lo; p <= range.hi; ++p)
        for (int q = p; q <= range.hi; ++q) {
          if (family == FamilyTag::BDI && p + q < 4) continue;
          instances.push_back(SpaceParams::of_pq(p, q));
        }
      break;
  }

  DiscrepancyReport report{family, range, {}, {}};
  for (const auto& params : instances) {
    const auto space = make_space(family, params);
    const int enumerated = s_value(space);
    const int table = closed_form_s(space, ClosedFormMode::table);
    if (enumerated != table)
      report.entries.push_back(
          {family, space.params, enumerated, table, closed_form_s(space, ClosedFormMode::corrected)});
  }

  if (family == FamilyTag::AIII && range.lo <= 2 && range.hi >= 3) {
    const auto v = s_vector(make_space(FamilyTag::AIII, SpaceParams::of_pq(2, 3)));
    report.notes.push_back("text inconsistency at AIII p=2,q=3 (A_4, r=2): the hand derivation claims s_1 > s_2 but concludes s = s_2; "
                           "enumeration gives s_1 = " +
                           std::to_string(v[0]) + ", s_2 = " + std::to_string(v[1]) +
                           ", so s = s_1 = 1+2(p-1)(q-1) and no ledger entry is needed");
  }
  return report;
}

std::set<int> l1_maximal_indices(const LieType& type) {
  const auto mu = highest_root(type);
  std::set<int> out;
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i] == 1) out.insert(static_cast<int>(i) + 1);
  return out;
}

bool minimizer_check(int T, int r) {
  if (T <= 0 || r < 1 || r > T || T - r < 1)
    throw ParameterError("minimizer_check requires T > 0, 1 <= r <= T and T - r >= 1 (got T = " + std::to_string(T) +
                         ", r = " + std::to_string(r) + ")");
  long long best = static_cast<long long>(T) - 1;
  for (int t = 1; t <= r; ++t) best = std::min(best, static_cast<long long>(t) * (T - t));
  return best == T - 1;
}

}  // namespace partpos
