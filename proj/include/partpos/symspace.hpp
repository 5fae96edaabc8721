#pragma once

// Catalog of the irreducible Riemannian symmetric spaces of compact type and
// the linear map sending simple-root coefficients to restricted-root
// coefficients.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "partpos/rootsys.hpp"

namespace partpos {

enum class FamilyTag { AI, AII, AIII, BDI, DIII, CI, CII, EI, EII, EIII, EIV, EV, EVI, EVII, EVIII, EIX, FI, FII, G };

inline constexpr FamilyTag kAllFamilies[] = {
    FamilyTag::AI,  FamilyTag::AII,  FamilyTag::AIII,  FamilyTag::BDI,  FamilyTag::DIII,
    FamilyTag::CI,  FamilyTag::CII,  FamilyTag::EI,    FamilyTag::EII,  FamilyTag::EIII,
    FamilyTag::EIV, FamilyTag::EV,   FamilyTag::EVI,   FamilyTag::EVII, FamilyTag::EVIII,
    FamilyTag::EIX, FamilyTag::FI,   FamilyTag::FII,   FamilyTag::G};

std::string_view to_string(FamilyTag family);
// Case-insensitive; throws ParameterError on unknown names.
FamilyTag parse_family(std::string_view name);

enum class ParamShape { none, n, pq };
ParamShape param_shape(FamilyTag family);

struct SpaceParams {
  std::optional<int> n;
  std::optional<int> p;
  std::optional<int> q;

  static SpaceParams none() { return {}; }
  static SpaceParams of_n(int n) { return {n, std::nullopt, std::nullopt}; }
  static SpaceParams of_pq(int p, int q) { return {std::nullopt, p, q}; }

  // "n=5", "p=2,q=3" or "" for fixed spaces.
  std::string to_string() const;

  friend bool operator==(const SpaceParams&, const SpaceParams&) = default;
};

// proj[i] = j >= 1 means alpha_{i+1}' = lambda_j; proj[i] = 0 means alpha_{i+1}' = 0.
class RestrictionMap {
 public:
  // Throws ParameterError unless every entry lies in 0..r, r <= l, and every
  // restricted index 1..r is attained.
  RestrictionMap(int restricted_rank, std::vector<int> proj);

  int ambient_rank() const { return static_cast<int>(proj_.size()); }
  int restricted_rank() const { return r_; }
  std::span<const int> proj() const { return proj_; }

  // m'_j = sum of m_i over proj[i] = j. Throws StructuralError on length mismatch.
  RestrictedVector apply(const RootVector& root) const;

  // Renames restricted index j to permutation[j-1]; permutation is a
  // permutation of 1..r.
  RestrictionMap relabeled(std::span<const int> permutation) const;

  friend bool operator==(const RestrictionMap&, const RestrictionMap&) = default;

 private:
  int r_;
  std::vector<int> proj_;
};

struct SymmetricSpace {
  FamilyTag family;
  SpaceParams params;  // normalized: p <= q
  LieType ambient;
  int rank;            // restricted rank r
  int dimension;
  std::string label;
  RestrictionMap map;

  friend bool operator==(const SymmetricSpace&, const SymmetricSpace&) = default;
};

// Builds a catalog instance. (p, q) families are normalized so that p <= q.
// Throws ParameterError naming the violated constraint.
SymmetricSpace make_space(FamilyTag family, SpaceParams params);

RestrictedVector restrict_root(const SymmetricSpace& space, const RootVector& root);
bool is_zero_restriction(const SymmetricSpace& space, const RootVector& root);

struct CatalogEntry {
  FamilyTag family;
  std::string_view constraints;
  std::string_view label;
  std::string_view rank_rule;
  std::string_view dimension_rule;
  std::string_view s_rule;
  std::string_view proj_rule;
  // Restriction map of fixed (exceptional) spaces; empty for parametric ones.
  std::span<const int> fixed_proj;
};

// One entry per family, in table order.
std::span<const CatalogEntry> catalog();
const CatalogEntry& catalog_entry(FamilyTag family);

}  // namespace partpos
