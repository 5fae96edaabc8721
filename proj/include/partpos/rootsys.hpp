#pragma once

// Positive root systems of the simple complex Lie algebras, written in the
// simple-root coefficient basis.
//
// Node numbering follows the Dynkin diagrams used throughout the project:
//   A_l  chain 1-2-...-l
//   B_l  chain, alpha_l short
//   C_l  chain, alpha_l long
//   D_l  chain 1-...-(l-2), with l-1 and l both attached to l-2
//   E_l  chain 1-3-4-5-...-l, branch node 2 attached to 4
//   F_4  1-2=>3-4, alpha_1 and alpha_2 long
//   G_2  alpha_1 short, alpha_2 long
//
// All arithmetic is exact integer arithmetic.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace partpos {

enum class Family { A, B, C, D, E, F, G };

struct LieType {
  Family family = Family::A;
  int rank = 1;

  // Throws ParameterError when the rank is invalid for the family.
  static LieType make(Family family, int rank);
  // Accepts "A3", "e6", "G2", ...
  static LieType parse(std::string_view text);

  std::string name() const;

  friend bool operator==(const LieType&, const LieType&) = default;
};

void validate(const LieType& type);

// Integer coefficient vector over some basis. The tag keeps simple-root
// coordinates and restricted-root coordinates from mixing.
template <class Basis>
class CoefficientVector {
 public:
  CoefficientVector() = default;
  explicit CoefficientVector(std::size_t length) : c_(length, 0) {}
  explicit CoefficientVector(std::vector<int> coefficients) : c_(std::move(coefficients)) {}
  CoefficientVector(std::initializer_list<int> coefficients) : c_(coefficients) {}

  std::size_t size() const { return c_.size(); }
  int operator[](std::size_t i) const { return c_[i]; }
  int& operator[](std::size_t i) { return c_[i]; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }
  const std::vector<int>& values() const { return c_; }

  int height() const { return std::accumulate(c_.begin(), c_.end(), 0); }
  bool is_zero() const {
    for (int x : c_)
      if (x != 0) return false;
    return true;
  }

  CoefficientVector& operator+=(const CoefficientVector& other) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += other.c_[i];
    return *this;
  }
  friend CoefficientVector operator+(CoefficientVector a, const CoefficientVector& b) {
    return a += b;
  }
  friend CoefficientVector operator-(const CoefficientVector& a) {
    CoefficientVector out = a;
    for (int& x : out.c_) x = -x;
    return out;
  }

  friend auto operator<=>(const CoefficientVector&, const CoefficientVector&) = default;
  friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;

 private:
  std::vector<int> c_;
};

struct SimpleRootBasis;
struct RestrictedRootBasis;

// m_1(alpha), ..., m_l(alpha).
using RootVector = CoefficientVector<SimpleRootBasis>;
// m'_1(alpha), ..., m'_r(alpha).
using RestrictedVector = CoefficientVector<RestrictedRootBasis>;

template <class Basis>
std::string to_string(const CoefficientVector<Basis>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

// Height first, then lexicographic on coefficients.
struct HeightOrder {
  template <class Basis>
  bool operator()(const CoefficientVector<Basis>& a, const CoefficientVector<Basis>& b) const {
    const int ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a < b;
  }
};

// Cartan integers a(i, j) = <alpha_i, alpha_j^vee>; indices are 0-based.
class CartanMatrix {
 public:
  CartanMatrix(int rank, std::vector<int> entries);

  int rank() const { return rank_; }
  int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * rank_ + j)]; }
  // <beta, alpha_i^vee>.
  int pairing(const RootVector& beta, int i) const;

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

 private:
  int rank_;
  std::vector<int> a_;
};

// Length of the alpha_i-string through beta on either side:
// beta - down*alpha_i, ..., beta + up*alpha_i.
struct RootString {
  int down = 0;
  int up = 0;
  int length() const { return down + up + 1; }
};

class RootSystem {
 public:
  RootSystem(LieType type, CartanMatrix cartan, std::vector<RootVector> positive);

  const LieType& type() const { return type_; }
  const CartanMatrix& cartan() const { return cartan_; }
  int rank() const { return type_.rank; }
  // Sorted by HeightOrder.
  std::span<const RootVector> positive_roots() const { return positive_; }
  std::size_t size() const { return positive_.size(); }
  bool contains(const RootVector& v) const;
  RootString string_through(const RootVector& beta, int i) const;

 private:
  LieType type_;
  CartanMatrix cartan_;
  std::vector<RootVector> positive_;
};

CartanMatrix cartan_matrix(const LieType& type);

// Height-by-height closure: beta + alpha_i is admitted exactly when the
// alpha_i-string through beta continues upward.
RootSystem positive_roots(const LieType& type);

// The unique positive root of maximal height. Throws DomainError for D_2,
// which is reducible and has two.
RootVector highest_root(const LieType& type);

// Positive roots built from the explicit epsilon-coordinate formulas of the
// classical families and E_6, converted to simple-root coefficients. Sorted
// by HeightOrder. Throws DomainError for E_7, E_8, F_4, G_2.
std::vector<RootVector> epsilon_realization(const LieType& type);

// Classical count of positive roots for the type.
int expected_positive_root_count(const LieType& type);

}  // namespace partpos
