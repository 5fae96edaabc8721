#include "partpos/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "partpos/errors.hpp"

namespace partpos {

namespace {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
  }
  return '?';
}

void require_rank(bool ok, const LieType& type, const char* constraint) {
  if (!ok)
    throw ParameterError(std::string(1, family_letter(type.family)) + "_l requires " + constraint +
                         " (got l = " + std::to_string(type.rank) + ")");
}

// Generic upward closure. `known` must hold every positive root of height
// below that of beta.
template <class Lookup>
RootString string_in(const Lookup& known, const CartanMatrix& cartan, const RootVector& beta, int i) {
  RootString s;
  RootVector probe = beta;
  for (;;) {
    probe[static_cast<std::size_t>(i)] -= 1;
    if (!known(probe)) break;
    ++s.down;
  }
  s.up = s.down - cartan.pairing(beta, i);
  if (s.up < 0) s.up = 0;
  return s;
}

}  // namespace

void validate(const LieType& type) {
  const int l = type.rank;
  switch (type.family) {
    case Family::A: require_rank(l >= 1, type, "l ≥ 1"); break;
    case Family::B: require_rank(l >= 2, type, "l ≥ 2"); break;
    case Family::C: require_rank(l >= 2, type, "l ≥ 2"); break;
    case Family::D: require_rank(l >= 2, type, "l ≥ 2"); break;
    case Family::E: require_rank(l >= 6 && l <= 8, type, "l ∈ {6,7,8}"); break;
    case Family::F: require_rank(l == 4, type, "l = 4"); break;
    case Family::G: require_rank(l == 2, type, "l = 2"); break;
  }
}

LieType LieType::make(Family family, int rank) {
  LieType t{family, rank};
  validate(t);
  return t;
}

LieType LieType::parse(std::string_view text) {
  auto bad = [&] { return ParameterError("cannot parse Lie type '" + std::string(text) + "'"); };
  if (text.size() < 2) throw bad();
  Family family;
  switch (std::toupper(static_cast<unsigned char>(text.front()))) {
    case 'A': family = Family::A; break;
    case 'B': family = Family::B; break;
    case 'C': family = Family::C; break;
    case 'D': family = Family::D; break;
    case 'E': family = Family::E; break;
    case 'F': family = Family::F; break;
    case 'G': family = Family::G; break;
    default: throw bad();
  }
  int rank = 0;
  for (char ch : text.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(ch)) || rank > 100000) throw bad();
    rank = rank * 10 + (ch - '0');
  }
  return make(family, rank);
}

std::string LieType::name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

CartanMatrix::CartanMatrix(int rank, std::vector<int> entries) : rank_(rank), a_(std::move(entries)) {
  if (rank_ < 1 || a_.size() != static_cast<std::size_t>(rank_ * rank_))
    throw StructuralError("Cartan matrix must be rank x rank");
}

int CartanMatrix::pairing(const RootVector& beta, int i) const {
  if (beta.size() != static_cast<std::size_t>(rank_))
    throw StructuralError("root length " + std::to_string(beta.size()) + " does not match rank " +
                          std::to_string(rank_));
  int total = 0;
  for (int j = 0; j < rank_; ++j) total += beta[static_cast<std::size_t>(j)] * (*this)(j, i);
  return total;
}

RootSystem::RootSystem(LieType type, CartanMatrix cartan, std::vector<RootVector> positive)
    : type_(type), cartan_(std::move(cartan)), positive_(std::move(positive)) {
  std::sort(positive_.begin(), positive_.end(), HeightOrder{});
}

bool RootSystem::contains(const RootVector& v) const {
  if (v.size() != static_cast<std::size_t>(rank())) return false;
  return std::binary_search(positive_.begin(), positive_.end(), v, HeightOrder{});
}

RootString RootSystem::string_through(const RootVector& beta, int i) const {
  if (i < 0 || i >= rank()) throw ParameterError("simple root index out of range");
  return string_in([this](const RootVector& v) { return contains(v); }, cartan_, beta, i);
}

CartanMatrix cartan_matrix(const LieType& type) {
  validate(type);
  const int l = type.rank;
  std::vector<int> a(static_cast<std::size_t>(l * l), 0);
  for (int i = 0; i < l; ++i) a[static_cast<std::size_t>(i * l + i)] = 2;

  // Nodes are 1-based here to match the diagrams. For a double or triple
  // bond, a_ij = <alpha_i, alpha_j^vee> is the larger magnitude when alpha_i
  // is the long root.
  auto bond = [&](int i, int j, int aij = -1, int aji = -1) {
    a[static_cast<std::size_t>((i - 1) * l + (j - 1))] = aij;
    a[static_cast<std::size_t>((j - 1) * l + (i - 1))] = aji;
  };

  switch (type.family) {
    case Family::A:
      for (int i = 1; i < l; ++i) bond(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i + 1 < l; ++i) bond(i, i + 1);
      bond(l - 1, l, -2, -1);
      break;
    case Family::C:
      for (int i = 1; i + 1 < l; ++i) bond(i, i + 1);
      bond(l - 1, l, -1, -2);
      break;
    case Family::D:
      for (int i = 1; i <= l - 2; ++i) bond(i, i + 1);
      if (l >= 3) bond(l - 2, l);
      break;
    case Family::E:
      bond(1, 3);
      bond(3, 4);
      bond(2, 4);
      for (int i = 4; i < l; ++i) bond(i, i + 1);
      break;
    case Family::F:
      bond(1, 2);
      bond(2, 3, -2, -1);
      bond(3, 4);
      break;
    case Family::G:
      bond(1, 2, -1, -3);
      break;
  }
  return CartanMatrix(l, std::move(a));
}

RootSystem positive_roots(const LieType& type) {
  CartanMatrix cartan = cartan_matrix(type);
  const int l = type.rank;

  std::set<RootVector> found;
  std::vector<RootVector> layer;
  for (int i = 0; i < l; ++i) {
    RootVector e(static_cast<std::size_t>(l));
    e[static_cast<std::size_t>(i)] = 1;
    layer.push_back(e);
    found.insert(e);
  }
  std::vector<RootVector> all = layer;

  auto known = [&found](const RootVector& v) { return found.contains(v); };
  while (!layer.empty()) {
    std::set<RootVector> next;
    for (const RootVector& beta : layer) {
      for (int i = 0; i < l; ++i) {
        if (string_in(known, cartan, beta, i).up > 0) {
          RootVector raised = beta;
          raised[static_cast<std::size_t>(i)] += 1;
          next.insert(std::move(raised));
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const RootVector& v : layer) {
      found.insert(v);
      all.push_back(v);
    }
  }
  return RootSystem(type, std::move(cartan), std::move(all));
}

RootVector highest_root(const LieType& type) {
  RootSystem sys = positive_roots(type);
  auto roots = sys.positive_roots();
  const RootVector& top = roots.back();
  if (roots.size() > 1 && roots[roots.size() - 2].height() == top.height())
    throw DomainError(type.name() + " is reducible and has no unique highest root");
  return top;
}

int expected_positive_root_count(const LieType& type) {
  validate(type);
  const int l = type.rank;
  switch (type.family) {
    case Family::A: return l * (l + 1) / 2;
    case Family::B:
    case Family::C: return l * l;
    case Family::D: return l * (l - 1);
    case Family::E: return l == 6 ? 36 : l == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

}  // namespace partpos
