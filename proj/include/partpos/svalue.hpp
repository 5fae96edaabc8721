#pragma once

// Counting the roots that survive restriction with a vanishing k-th
// coordinate, and the closed forms those counts are checked against.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "partpos/rootsys.hpp"
#include "partpos/symspace.hpp"

namespace partpos {

struct SValueReport {
  SymmetricSpace space;
  std::vector<int> s_k;
  std::vector<int> argmax;  // 1-based, every index attaining s
  int s = 0;
  std::vector<int> delta_counts;
  int zero_count = 0;
  std::map<RestrictedVector, int> multiplicities;  // nonzero restricted vectors only

  friend bool operator==(const SValueReport&, const SValueReport&) = default;
};

// {alpha in Delta+ : alpha' != 0, m'_k(alpha) = 0}, k is 1-based.
std::set<RootVector, HeightOrder> delta_k_positive(const SymmetricSpace& space, int k);
std::set<RootVector, HeightOrder> delta_k_positive(const SymmetricSpace& space, const RootSystem& roots, int k);

std::vector<int> s_vector(const SymmetricSpace& space);
int s_value(const SymmetricSpace& space);

std::map<RestrictedVector, int> restricted_multiplicities(const SymmetricSpace& space);

SValueReport analyze(const SymmetricSpace& space);

enum class ClosedFormMode { table, corrected };

int closed_form_s(const SymmetricSpace& space, ClosedFormMode mode);

struct LedgerEntry {
  FamilyTag family;
  SpaceParams params;
  int s;
};

// Low-rank instances where the table formula is overridden. The r = 1 rule is
// applied separately.
const std::vector<LedgerEntry>& exception_ledger();

struct ParamRange {
  int lo = 0;
  int hi = 0;
};

struct Discrepancy {
  FamilyTag family;
  SpaceParams params;
  int enumerated = 0;
  int table = 0;
  int corrected = 0;

  friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

struct DiscrepancyReport {
  FamilyTag family;
  ParamRange range;
  std::vector<Discrepancy> entries;
  std::vector<std::string> notes;
};

// Every instance in the range (p <= q for two-parameter families) whose
// enumerated s differs from the table formula. Throws ParameterError on an
// empty range or one reaching outside the family's constraints.
DiscrepancyReport discrepancy_report(FamilyTag family, ParamRange range);

// {k : mu_k = 1}, 1-based, mu the highest root.
std::set<int> l1_maximal_indices(const LieType& type);

// min over t in 1..r of t(T - t) equals T - 1. Requires T > 0, 1 <= r <= T,
// T - r >= 1.
bool minimizer_check(int T, int r);

}  // namespace partpos
