#include "partpos/symspace.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>

#include "partpos/errors.hpp"

namespace partpos {

namespace {

constexpr int kIdentity6[] = {1, 2, 3, 4, 5, 6};
constexpr int kIdentity7[] = {1, 2, 3, 4, 5, 6, 7};
constexpr int kIdentity8[] = {1, 2, 3, 4, 5, 6, 7, 8};
constexpr int kIdentity4[] = {1, 2, 3, 4};
constexpr int kIdentity2[] = {1, 2};
constexpr int kProjEII[] = {1, 2, 3, 4, 3, 1};
constexpr int kProjEIII[] = {1, 2, 0, 0, 0, 1};
constexpr int kProjEIV[] = {1, 0, 0, 0, 0, 2};
constexpr int kProjEVI[] = {1, 0, 2, 3, 0, 4, 0};
constexpr int kProjEVII[] = {1, 0, 0, 0, 0, 2, 3};
constexpr int kProjEIX[] = {1, 0, 0, 0, 0, 2, 3, 4};
// Only r = 1 matters for s. alpha_4' = lambda_1 with the B_3 part vanishing
// reproduces dim = 1 + 15.
constexpr int kProjFII[] = {0, 0, 0, 1};

const std::array<CatalogEntry, 19> kCatalog = {{
    {FamilyTag::AI, "n ≥ 2", "SU(n)/SO(n)", "n-1", "(n-1)(n+2)/2", "n(n-1)/2", "identity", {}},
    {FamilyTag::AII, "n ≥ 2", "SU(2n)/Sp(n)", "n-1", "(n-1)(2n+1)", "(n-1)(2n-3)",
     "A_{2n-1}: proj[2i] = i, odd indices 0", {}},
    {FamilyTag::AIII, "p, q ≥ 1", "SU(p+q)/S(U_p×U_q)", "min(p,q)", "2pq", "1+2(p-1)(q-1)",
     "A_{p+q-1}, p ≤ q: proj[i] = proj[l+1-i] = i for i ≤ p, middle 0", {}},
    {FamilyTag::BDI, "p, q ≥ 1, p + q ≥ 4", "SO(p+q)/SO(p)×SO(q)", "min(p,q)", "pq", "1+(p-1)(q-1)",
     "B_l (p+q odd) or D_l (p+q even), p ≤ q: proj[i] = i for i ≤ p, else 0; "
     "D_l with p = l-1: proj[l-1] = proj[l] = l-1; D_l with p = l: identity",
     {}},
    {FamilyTag::DIII, "n ≥ 3", "SO(2n)/U(n)", "[n/2]", "n(n-1)", "1+(n-2)(n-3)",
     "D_n even n: proj[2i] = i; odd n: proj[2i] = i for i ≤ (n-3)/2, proj[n-1] = proj[n] = r; "
     "odd indices 0",
     {}},
    {FamilyTag::CI, "n ≥ 2", "Sp(n)/U(n)", "n", "n(n+1)", "1+n(n-1)", "identity", {}},
    {FamilyTag::CII, "p, q ≥ 1", "Sp(p+q)/Sp(p)×Sp(q)", "min(p,q)", "4pq", "1+4(p-1)(q-1)",
     "C_{p+q}, p ≤ q: proj[2i] = i for i ≤ p, else 0", {}},
    {FamilyTag::EI, "fixed", "(e_6(-78), sp(4))", "6", "42", "26", "identity", kIdentity6},
    {FamilyTag::EII, "fixed", "(e_6(-78), su(6)+su(2))", "4", "40", "19", "fixed", kProjEII},
    {FamilyTag::EIII, "fixed", "(e_6(-78), so(10)+R)", "2", "32", "11", "fixed", kProjEIII},
    {FamilyTag::EIV, "fixed", "(e_6(-78), f_4)", "2", "26", "10", "fixed", kProjEIV},
    {FamilyTag::EV, "fixed", "(e_7(-133), su(8))", "7", "70", "43", "identity", kIdentity7},
    {FamilyTag::EVI, "fixed", "(e_7(-133), so(12)+su(2))", "4", "64", "31", "fixed", kProjEVI},
    {FamilyTag::EVII, "fixed", "(e_7(-133), e_6+R)", "3", "54", "27", "fixed", kProjEVII},
    {FamilyTag::EVIII, "fixed", "(e_8(-248), so(16))", "8", "128", "71", "identity", kIdentity8},
    {FamilyTag::EIX, "fixed", "(e_8(-248), e_7+su(2))", "4", "112", "55", "fixed", kProjEIX},
    {FamilyTag::FI, "fixed", "(f_4(-52), sp(3)+su(2))", "4", "28", "13", "identity", kIdentity4},
    {FamilyTag::FII, "fixed", "(f_4(-52), so(9))", "1", "16", "1", "rank one; only r enters s", kProjFII},
    {FamilyTag::G, "fixed", "(g_2(-14), su(2)+su(2))", "2", "8", "3", "identity", kIdentity2},
}};

void require(bool ok, FamilyTag family, std::string_view constraint) {
  if (!ok) throw ParameterError(std::string(to_string(family)) + " requires " + std::string(constraint));
}

std::vector<int> identity_proj(int l) {
  std::vector<int> proj(static_cast<std::size_t>(l));
  std::iota(proj.begin(), proj.end(), 1);
  return proj;
}

struct FixedSpace {
  Family family;
  int l;
  int r;
  int dimension;
};

FixedSpace fixed_data(FamilyTag family) {
  switch (family) {
    case FamilyTag::EI: return {Family::E, 6, 6, 42};
    case FamilyTag::EII: return {Family::E, 6, 4, 40};
    case FamilyTag::EIII: return {Family::E, 6, 2, 32};
    case FamilyTag::EIV: return {Family::E, 6, 2, 26};
    case FamilyTag::EV: return {Family::E, 7, 7, 70};
    case FamilyTag::EVI: return {Family::E, 7, 4, 64};
    case FamilyTag::EVII: return {Family::E, 7, 3, 54};
    case FamilyTag::EVIII: return {Family::E, 8, 8, 128};
    case FamilyTag::EIX: return {Family::E, 8, 4, 112};
    case FamilyTag::FI: return {Family::F, 4, 4, 28};
    case FamilyTag::FII: return {Family::F, 4, 1, 16};
    case FamilyTag::G: return {Family::G, 2, 2, 8};
    default: break;
  }
  throw ParameterError(std::string(to_string(family)) + " is not a fixed space");
}

void check_shape(FamilyTag family, const SpaceParams& params) {
  const auto name = std::string(to_string(family));
  switch (param_shape(family)) {
    case ParamShape::none:
      if (params.n || params.p || params.q) throw ParameterError(name + " takes no parameters");
      break;
    case ParamShape::n:
      if (!params.n) throw ParameterError(name + " requires parameter n");
      if (params.p || params.q) throw ParameterError(name + " takes only parameter n");
      break;
    case ParamShape::pq:
      if (!params.p || !params.q) throw ParameterError(name + " requires parameters p and q");
      if (params.n) throw ParameterError(name + " takes only parameters p and q");
      break;
  }
}

}  // namespace

std::string_view to_string(FamilyTag family) {
  switch (family) {
    case FamilyTag::AI: return "AI";
    case FamilyTag::AII: return "AII";
    case FamilyTag::AIII: return "AIII";
    case FamilyTag::BDI: return "BDI";
    case FamilyTag::DIII: return "DIII";
    case FamilyTag::CI: return "CI";
    case FamilyTag::CII: return "CII";
    case FamilyTag::EI: return "EI";
    case FamilyTag::EII: return "EII";
    case FamilyTag::EIII: return "EIII";
    case FamilyTag::EIV: return "EIV";
    case FamilyTag::EV: return "EV";
    case FamilyTag::EVI: return "EVI";
    case FamilyTag::EVII: return "EVII";
    case FamilyTag::EVIII: return "EVIII";
    case FamilyTag::EIX: return "EIX";
    case FamilyTag::FI: return "FI";
    case FamilyTag::FII: return "FII";
    case FamilyTag::G: return "G";
  }
  return "?";
}

FamilyTag parse_family(std::string_view name) {
  std::string upper(name);
  for (char& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (FamilyTag f : kAllFamilies)
    if (to_string(f) == upper) return f;
  throw ParameterError("unknown symmetric space family '" + std::string(name) + "'");
}

ParamShape param_shape(FamilyTag family) {
  switch (family) {
    case FamilyTag::AI:
    case FamilyTag::AII:
    case FamilyTag::DIII:
    case FamilyTag::CI: return ParamShape::n;
    case FamilyTag::AIII:
    case FamilyTag::BDI:
    case FamilyTag::CII: return ParamShape::pq;
    default: return ParamShape::none;
  }
}

std::string SpaceParams::to_string() const {
  std::string out;
  auto add = [&out](const char* key, const std::optional<int>& v) {
    if (!v) return;
    if (!out.empty()) out += ',';
    out += key;
    out += '=';
    out += std::to_string(*v);
  };
  add("n", n);
  add("p", p);
  add("q", q);
  return out;
}

RestrictionMap::RestrictionMap(int restricted_rank, std::vector<int> proj)
    : r_(restricted_rank), proj_(std::move(proj)) {
  const int l = ambient_rank();
  if (r_ < 1 || r_ > l)
    throw ParameterError("restricted rank " + std::to_string(r_) + " must lie in 1..l = " + std::to_string(l));
  std::vector<bool> hit(static_cast<std::size_t>(r_) + 1, false);
  for (int j : proj_) {
    if (j < 0 || j > r_) throw ParameterError("restriction target " + std::to_string(j) + " outside 0..r");
    hit[static_cast<std::size_t>(j)] = true;
  }
  for (int j = 1; j <= r_; ++j)
    if (!hit[static_cast<std::size_t>(j)])
      throw ParameterError("restricted index " + std::to_string(j) + " is not attained by any simple root");
}

RestrictedVector RestrictionMap::apply(const RootVector& root) const {
  if (root.size() != proj_.size())
    throw StructuralError("root of length " + std::to_string(root.size()) + " applied to a map on rank " +
                          std::to_string(proj_.size()));
  RestrictedVector out(static_cast<std::size_t>(r_));
  for (std::size_t i = 0; i < proj_.size(); ++i)
    if (proj_[i] != 0) out[static_cast<std::size_t>(proj_[i] - 1)] += root[i];
  return out;
}

RestrictionMap RestrictionMap::relabeled(std::span<const int> permutation) const {
  if (permutation.size() != static_cast<std::size_t>(r_)) throw StructuralError("permutation length must equal r");
  std::vector<int> sorted(permutation.begin(), permutation.end());
  std::sort(sorted.begin(), sorted.end());
  for (int j = 1; j <= r_; ++j)
    if (sorted[static_cast<std::size_t>(j - 1)] != j) throw ParameterError("not a permutation of 1..r");
  std::vector<int> proj = proj_;
  for (int& j : proj)
    if (j != 0) j = permutation[static_cast<std::size_t>(j - 1)];
  return RestrictionMap(r_, std::move(proj));
}

SymmetricSpace make_space(FamilyTag family, SpaceParams params) {
  check_shape(family, params);
  const auto& entry = catalog_entry(family);
  const std::string label(entry.label);

  if (param_shape(family) == ParamShape::pq && *params.p > *params.q) std::swap(params.p, params.q);

  switch (family) {
    case FamilyTag::AI: {
      const int n = *params.n;
      require(n >= 2, family, "n ≥ 2");
      const int l = n - 1;
      return {family, params, LieType::make(Family::A, l), l, (n - 1) * (n + 2) / 2, label,
              RestrictionMap(l, identity_proj(l))};
    }
    case FamilyTag::AII: {
      const int n = *params.n;
      require(n >= 2, family, "n ≥ 2");
      const int l = 2 * n - 1, r = n - 1;
      std::vector<int> proj(static_cast<std::size_t>(l), 0);
      for (int i = 1; i <= r; ++i) proj[static_cast<std::size_t>(2 * i - 1)] = i;
      return {family, params, LieType::make(Family::A, l), r, (n - 1) * (2 * n + 1), label,
              RestrictionMap(r, std::move(proj))};
    }
    case FamilyTag::AIII: {
      const int p = *params.p, q = *params.q;
      require(p >= 1, family, "p, q ≥ 1");
      const int l = p + q - 1, r = p;
      std::vector<int> proj(static_cast<std::size_t>(l), 0);
      for (int i = 1; i <= r; ++i) {
        proj[static_cast<std::size_t>(i - 1)] = i;
        proj[static_cast<std::size_t>(l - i)] = i;
      }
      return {family, params, LieType::make(Family::A, l), r, 2 * p * q, label, RestrictionMap(r, std::move(proj))};
    }
    case FamilyTag::BDI: {
      const int p = *params.p, q = *params.q;
      require(p >= 1, family, "p, q ≥ 1");
      require(p + q >= 4, family, "p + q ≥ 4");
      const int r = p;
      const bool odd = (p + q) % 2 == 1;
      const int l = odd ? (p + q - 1) / 2 : (p + q) / 2;
      std::vector<int> proj(static_cast<std::size_t>(l), 0);
      if (!odd && r == l) {
        proj = identity_proj(l);
      } else if (!odd && r == l - 1) {
        for (int i = 1; i <= l - 2; ++i) proj[static_cast<std::size_t>(i - 1)] = i;
        proj[static_cast<std::size_t>(l - 2)] = l - 1;
        proj[static_cast<std::size_t>(l - 1)] = l - 1;
      } else {
        for (int i = 1; i <= r; ++i) proj[static_cast<std::size_t>(i - 1)] = i;
      }
      return {family, params, LieType::make(odd ? Family::B : Family::D, l), r, p * q, label,
              RestrictionMap(r, std::move(proj))};
    }
    case FamilyTag::DIII: {
      const int n = *params.n;
      require(n >= 3, family, "n ≥ 3");
      const int l = n, r = n / 2;
      std::vector<int> proj(static_cast<std::size_t>(l), 0);
      if (n % 2 == 0) {
        for (int i = 1; i <= r; ++i) proj[static_cast<std::size_t>(2 * i - 1)] = i;
      } else {
        for (int i = 1; i <= (n - 3) / 2; ++i) proj[static_cast<std::size_t>(2 * i - 1)] = i;
        proj[static_cast<std::size_t>(n - 2)] = r;
        proj[static_cast<std::size_t>(n - 1)] = r;
      }
      return {family, params, LieType::make(Family::D, l), r, n * (n - 1), label, RestrictionMap(r, std::move(proj))};
    }
    case FamilyTag::CI: {
      const int n = *params.n;
      require(n >= 2, family, "n ≥ 2");
      return {family, params, LieType::make(Family::C, n), n, n * (n + 1), label, RestrictionMap(n, identity_proj(n))};
    }
    case FamilyTag::CII: {
      const int p = *params.p, q = *params.q;
      require(p >= 1, family, "p, q ≥ 1");
      const int l = p + q, r = p;
      std::vector<int> proj(static_cast<std::size_t>(l), 0);
      for (int i = 1; i <= r; ++i) proj[static_cast<std::size_t>(2 * i - 1)] = i;
      return {family, params, LieType::make(Family::C, l), r, 4 * p * q, label, RestrictionMap(r, std::move(proj))};
    }
    default: {
      const FixedSpace data = fixed_data(family);
      std::vector<int> proj(entry.fixed_proj.begin(), entry.fixed_proj.end());
      return {family, params, LieType::make(data.family, data.l), data.r, data.dimension, label,
              RestrictionMap(data.r, std::move(proj))};
    }
  }
}

RestrictedVector restrict_root(const SymmetricSpace& space, const RootVector& root) { return space.map.apply(root); }

bool is_zero_restriction(const SymmetricSpace& space, const RootVector& root) {
  return space.map.apply(root).is_zero();
}

std::span<const CatalogEntry> catalog() { return kCatalog; }

const CatalogEntry& catalog_entry(FamilyTag family) {
  for (const auto& e : kCatalog)
    if (e.family == family) return e;
  throw ParameterError("family missing from catalog");
}

}  // namespace partpos
