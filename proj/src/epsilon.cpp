#include <algorithm>

#include "partpos/errors.hpp"
#include "partpos/rootsys.hpp"

namespace partpos {

namespace {

// Adds mult to coefficients from..to (1-based, inclusive); empty when from > to.
void add_run(RootVector& v, int from, int to, int mult = 1) {
  for (int i = from; i <= to; ++i) v[static_cast<std::size_t>(i - 1)] += mult;
}

std::vector<RootVector> type_a(int l) {
  std::vector<RootVector> out;
  // e_i - e_j = alpha_i + ... + alpha_{j-1}, 1 <= i < j <= l+1
  for (int i = 1; i <= l + 1; ++i)
    for (int j = i + 1; j <= l + 1; ++j) {
      RootVector v(static_cast<std::size_t>(l));
      add_run(v, i, j - 1);
      out.push_back(v);
    }
  return out;
}

std::vector<RootVector> type_b(int l) {
  std::vector<RootVector> out;
  for (int i = 1; i <= l; ++i) {
    RootVector e(static_cast<std::size_t>(l));  // e_i = alpha_i + ... + alpha_l
    add_run(e, i, l);
    out.push_back(e);
    for (int j = i + 1; j <= l; ++j) {
      RootVector minus(static_cast<std::size_t>(l));  // e_i - e_j
      add_run(minus, i, j - 1);
      out.push_back(minus);
      RootVector plus = minus;  // e_i + e_j = ... + 2(alpha_j + ... + alpha_l)
      add_run(plus, j, l, 2);
      out.push_back(plus);
    }
  }
  return out;
}

std::vector<RootVector> type_c(int l) {
  std::vector<RootVector> out;
  for (int i = 1; i <= l; ++i) {
    RootVector twice(static_cast<std::size_t>(l));  // 2e_i = 2(alpha_i + ... + alpha_{l-1}) + alpha_l
    add_run(twice, i, l - 1, 2);
    add_run(twice, l, l);
    out.push_back(twice);
    for (int j = i + 1; j <= l; ++j) {
      RootVector minus(static_cast<std::size_t>(l));
      add_run(minus, i, j - 1);
      out.push_back(minus);
      RootVector plus = minus;  // e_i + e_j = ... + 2(alpha_j + ... + alpha_{l-1}) + alpha_l
      add_run(plus, j, l - 1, 2);
      add_run(plus, l, l);
      out.push_back(plus);
    }
  }
  return out;
}

std::vector<RootVector> type_d(int l) {
  std::vector<RootVector> out;
  for (int i = 1; i <= l; ++i)
    for (int j = i + 1; j <= l; ++j) {
      RootVector minus(static_cast<std::size_t>(l));
      add_run(minus, i, j - 1);
      out.push_back(minus);
      RootVector plus(static_cast<std::size_t>(l));  // alpha_i..alpha_{l-2} + alpha_j..alpha_l
      add_run(plus, i, l - 2);
      add_run(plus, j, l);
      out.push_back(plus);
    }
  return out;
}

// E_6 inside R^6 with simple roots a_i = e_i - e_{i+1} (i <= 5) and
// a_6 = e_4 + e_5 + e_6, i.e. chain a1-a2-a3-a4-a5 with a6 on a3.
// Every a_1..a_5 has coordinate sum 0 while a_6 has sum 3, so the a_6
// coefficient is sum(v)/3 and the rest are partial sums of the remainder.
RootVector e6_from_epsilon(const std::vector<int>& v) {
  int total = 0;
  for (int x : v) total += x;
  if (total % 3 != 0) throw DomainError("vector is not in the E6 root lattice");
  const int c6 = total / 3;
  std::vector<int> w = v;
  for (int i = 3; i < 6; ++i) w[static_cast<std::size_t>(i)] -= c6;

  std::vector<int> eps_coeffs(6, 0);
  int partial = 0;
  for (int i = 0; i < 5; ++i) {
    partial += w[static_cast<std::size_t>(i)];
    eps_coeffs[static_cast<std::size_t>(i)] = partial;
  }
  eps_coeffs[5] = c6;

  // Relabel onto the project's E-series numbering (branch node 2 on node 4).
  static constexpr int kTarget[6] = {1, 3, 4, 5, 6, 2};
  RootVector out(6);
  for (int i = 0; i < 6; ++i) out[static_cast<std::size_t>(kTarget[i] - 1)] = eps_coeffs[static_cast<std::size_t>(i)];
  return out;
}

std::vector<RootVector> type_e6() {
  std::vector<RootVector> out;
  auto eps = [](std::initializer_list<std::pair<int, int>> terms) {
    std::vector<int> v(6, 0);
    for (auto [index, sign] : terms) v[static_cast<std::size_t>(index - 1)] += sign;
    return v;
  };
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) out.push_back(e6_from_epsilon(eps({{i, 1}, {j, -1}})));
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j)
      for (int k = j + 1; k <= 6; ++k) out.push_back(e6_from_epsilon(eps({{i, 1}, {j, 1}, {k, 1}})));
  out.push_back(e6_from_epsilon(std::vector<int>(6, 1)));
  return out;
}

}  // namespace

std::vector<RootVector> epsilon_realization(const LieType& type) {
  validate(type);
  std::vector<RootVector> roots;
  switch (type.family) {
    case Family::A: roots = type_a(type.rank); break;
    case Family::B: roots = type_b(type.rank); break;
    case Family::C: roots = type_c(type.rank); break;
    case Family::D: roots = type_d(type.rank); break;
    case Family::E:
      if (type.rank != 6) throw DomainError("no epsilon realization for " + type.name());
      roots = type_e6();
      break;
    default: throw DomainError("no epsilon realization for " + type.name());
  }
  std::sort(roots.begin(), roots.end(), HeightOrder{});
  return roots;
}

}  // namespace partpos
