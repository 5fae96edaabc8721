#include "partpos/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "partpos/errors.hpp"
#include "partpos/svalue.hpp"

namespace partpos {

namespace {

}  // namespace

ParamRange sweep_range(FamilyTag family) {
  switch (family) {
    case FamilyTag::AI: return {2, 12};
    case FamilyTag::AII: return {2, 8};
    case FamilyTag::AIII: return {1, 8};
    case FamilyTag::BDI: return {2, 10};
    case FamilyTag::DIII: return {3, 10};
    case FamilyTag::CI: return {2, 10};
    case FamilyTag::CII: return {1, 6};
    default: return {0, -1};
  }
}

namespace {

struct Oracle {
  FamilyTag family;
  std::vector<int> s_k;
};

const std::vector<Oracle>& exceptional_oracles() {
  static const std::vector<Oracle> oracles = {
      {FamilyTag::EI, {26, 21, 17, 13, 17, 26}},
      {FamilyTag::EII, {16, 19, 9, 11}},
      {FamilyTag::EIII, {8, 11}},
      {FamilyTag::EIV, {10, 10}},
      {FamilyTag::EV, {37, 28, 23, 17, 20, 28, 43}},
      {FamilyTag::EVI, {31, 17, 11, 22}},
      {FamilyTag::EVII, {21, 12, 27}},
      {FamilyTag::EVIII, {50, 36, 30, 22, 24, 31, 45, 71}},
      {FamilyTag::EIX, {34, 15, 29, 55}},
      {FamilyTag::FI, {13, 8, 8, 13}},
      {FamilyTag::G, {3, 3}},
  };
  return oracles;
}

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string instance_name(FamilyTag family, const SpaceParams& params) {
  std::string out(to_string(family));
  if (const auto p = params.to_string(); !p.empty()) out += "(" + p + ")";
  return out;
}

// Collects failures; the result passes when there are none.
class Check {
 public:
  explicit Check(std::string name) : name_(std::move(name)) {}

  void fail(const std::string& what) {
    if (failures_++ < 3) detail_ += (detail_.empty() ? "" : "; ") + what;
  }
  void count() { ++checked_; }

  CheckResult result() const {
    if (failures_ == 0) return {name_, true, std::to_string(checked_) + " cases"};
    std::string d = detail_;
    if (failures_ > 3) d += "; +" + std::to_string(failures_ - 3) + " more";
    return {name_, false, d};
  }

 private:
  std::string name_;
  std::string detail_;
  int checked_ = 0;
  int failures_ = 0;
};

std::vector<LieType> classical_types(int max_rank) {
  std::vector<LieType> out;
  for (int l = 1; l <= max_rank; ++l) out.push_back(LieType::make(Family::A, l));
  for (Family f : {Family::B, Family::C, Family::D})
    for (int l = 2; l <= max_rank; ++l) out.push_back(LieType::make(f, l));
  return out;
}

std::vector<LieType> all_types(int max_rank) {
  auto out = classical_types(max_rank);
  for (int l : {6, 7, 8}) out.push_back(LieType::make(Family::E, l));
  out.push_back(LieType::make(Family::F, 4));
  out.push_back(LieType::make(Family::G, 2));
  return out;
}

void check_roots(std::vector<CheckResult>& out, int max_rank) {
  Check counts("root-counts"), strings("root-strings"), dominance("highest-root-dominance");
  for (const auto& type : all_types(std::max(12, max_rank))) {
    const auto sys = positive_roots(type);
    counts.count();
    if (static_cast<int>(sys.size()) != expected_positive_root_count(type))
      counts.fail(type.name() + ": " + std::to_string(sys.size()) + " roots");

    strings.count();
    for (const auto& beta : sys.positive_roots())
      for (int i = 0; i < sys.rank(); ++i)
        if (sys.string_through(beta, i).length() > 4) strings.fail(type.name() + " " + to_string(beta));

    if (type.family == Family::D && type.rank == 2) continue;
    dominance.count();
    const auto mu = highest_root(type);
    for (const auto& beta : sys.positive_roots())
      for (std::size_t i = 0; i < beta.size(); ++i)
        if (beta[i] > mu[i]) {
          dominance.fail(type.name() + " " + to_string(beta) + " exceeds " + to_string(mu));
          break;
        }
  }
  out.push_back(counts.result());
  out.push_back(strings.result());
  out.push_back(dominance.result());
}

void check_generators(std::vector<CheckResult>& out, int max_rank) {
  Check c("generator-equivalence");
  auto types = classical_types(std::max(8, max_rank));
  types.push_back(LieType::make(Family::E, 6));
  for (const auto& type : types) {
    c.count();
    const auto sys = positive_roots(type);
    const auto eps = epsilon_realization(type);
    if (!std::equal(eps.begin(), eps.end(), sys.positive_roots().begin(), sys.positive_roots().end()))
      c.fail(type.name());
  }
  out.push_back(c.result());
}

}  // namespace

std::vector<SpaceParams> sweep_instances(FamilyTag family, int max_rank) {
  const auto box = sweep_range(family);
  std::vector<SpaceParams> out;
  auto admissible = [&](const SpaceParams& params, bool in_box) {
    if (in_box) return true;
    try {
      return make_space(family, params).ambient.rank <= max_rank;
    } catch (const ParameterError&) {
      return false;
    }
  };
  const int bound = std::max(box.hi, 2 * max_rank + 2);
  switch (param_shape(family)) {
    case ParamShape::none: break;
    case ParamShape::n:
      for (int n = box.lo; n <= bound; ++n)
        if (admissible(SpaceParams::of_n(n), n <= box.hi)) out.push_back(SpaceParams::of_n(n));
      break;
    case ParamShape::pq:
      for (int p = box.lo; p <= bound; ++p)
        for (int q = p; q <= bound; ++q) {
          if (family == FamilyTag::BDI && p + q < 4) continue;
          if (admissible(SpaceParams::of_pq(p, q), q <= box.hi)) out.push_back(SpaceParams::of_pq(p, q));
        }
      break;
  }
  return out;
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  std::vector<CheckResult> out;
  check_roots(out, options.max_rank);
  check_generators(out, options.max_rank);

  const auto& make = options.factory;

  for (const auto& oracle : exceptional_oracles()) {
    const std::string name = "s_k " + std::string(to_string(oracle.family));
    try {
      const auto report = analyze(make(oracle.family, SpaceParams::none()));
      out.push_back({name, report.s_k == oracle.s_k, join(report.s_k)});
    } catch (const std::exception& e) {
      out.push_back({name, false, e.what()});
    }
  }
  try {
    const auto report = analyze(make(FamilyTag::FII, SpaceParams::none()));
    out.push_back({"s FII", report.s == 1, "s = " + std::to_string(report.s)});
  } catch (const std::exception& e) {
    out.push_back({"s FII", false, e.what()});
  }

  Check dimension("dimension-law"), agreement("closed-form-agreement"), scan("discrepancy-scan"),
      consistency("multiplicity-consistency");
  std::set<std::string> flagged, expected;
  for (const auto& e : exception_ledger()) expected.insert(instance_name(e.family, e.params));

  for (FamilyTag family : kAllFamilies) {
    std::vector<SpaceParams> instances = sweep_instances(family, options.max_rank);
    if (param_shape(family) == ParamShape::none) instances.push_back(SpaceParams::none());
    for (const auto& params : instances) {
      const std::string id = instance_name(family, params);
      try {
        const auto space = make(family, params);
        const auto report = analyze(space);
        const int roots = static_cast<int>(positive_roots(space.ambient).size());
        int nonzero = 0;
        for (const auto& [lambda, m] : report.multiplicities) nonzero += m;

        dimension.count();
        if (space.rank + nonzero != space.dimension)
          dimension.fail(id + ": " + std::to_string(space.rank) + "+" + std::to_string(nonzero) +
                         " != " + std::to_string(space.dimension));

        consistency.count();
        if (report.zero_count + nonzero != roots) consistency.fail(id + ": fibers do not cover the positive roots");
        for (int k = 1; k <= space.rank; ++k)
          if (report.s_k[static_cast<std::size_t>(k - 1)] != space.rank + report.delta_counts[static_cast<std::size_t>(k - 1)])
            consistency.fail(id + ": s_" + std::to_string(k));

        agreement.count();
        const int corrected = closed_form_s(space, ClosedFormMode::corrected);
        if (report.s != corrected)
          agreement.fail(id + ": enumerated " + std::to_string(report.s) + ", closed form " + std::to_string(corrected));

        scan.count();
        if (report.s != closed_form_s(space, ClosedFormMode::table)) flagged.insert(id);
      } catch (const std::exception& e) {
        dimension.fail(id + ": " + e.what());
      }
    }
  }
  for (const auto& id : flagged)
    if (!expected.count(id)) scan.fail("unexpected " + id);
  for (const auto& id : expected)
    if (!flagged.count(id)) scan.fail("missing " + id);

  out.push_back(dimension.result());
  out.push_back(consistency.result());
  out.push_back(agreement.result());
  out.push_back(scan.result());
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace partpos
