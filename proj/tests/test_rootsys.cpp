#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "partpos/errors.hpp"
#include "partpos/rootsys.hpp"
#include "reference_data.hpp"

using namespace partpos;

namespace {

std::set<RootVector> as_set(const RootSystem& sys) {
  return {sys.positive_roots().begin(), sys.positive_roots().end()};
}

}  // namespace

TEST_CASE("positive root counts follow the classical formulas") {
  for (int l = 1; l <= 12; ++l) CHECK(positive_roots(LieType::make(Family::A, l)).size() == std::size_t(l * (l + 1) / 2));
  for (int l = 2; l <= 12; ++l) {
    CHECK(positive_roots(LieType::make(Family::B, l)).size() == std::size_t(l * l));
    CHECK(positive_roots(LieType::make(Family::C, l)).size() == std::size_t(l * l));
    CHECK(positive_roots(LieType::make(Family::D, l)).size() == std::size_t(l * (l - 1)));
  }
  CHECK(positive_roots(LieType::make(Family::E, 6)).size() == 36);
  CHECK(positive_roots(LieType::make(Family::E, 7)).size() == 63);
  CHECK(positive_roots(LieType::make(Family::E, 8)).size() == 120);
  CHECK(positive_roots(LieType::make(Family::F, 4)).size() == 24);
  CHECK(positive_roots(LieType::make(Family::G, 2)).size() == 6);
}

TEST_CASE("generated exceptional roots match the hand-written lists") {
  CHECK(as_set(positive_roots(LieType::parse("E6"))) == reference::parse_set(reference::kE6, 6));
  CHECK(as_set(positive_roots(LieType::parse("F4"))) == reference::parse_set(reference::kF4, 4));
  CHECK(as_set(positive_roots(LieType::parse("G2"))) == reference::parse_set(reference::kG2, 2));
}

TEST_CASE("the misprinted F4 entry is not a root") {
  const auto f4 = positive_roots(LieType::parse("F4"));
  CHECK_FALSE(f4.contains(reference::parse_root(reference::kF4PrintedEntry, 4)));
  CHECK(f4.contains(reference::parse_root(reference::kF4CorrectedEntry, 4)));
  CHECK(reference::parse_root(reference::kF4PrintedEntry, 4) == RootVector{0, 2, 1, 0});
}

TEST_CASE("roots are listed by height then lexicographically") {
  const auto g2 = positive_roots(LieType::parse("G2"));
  const std::vector<RootVector> expected = {{0, 1}, {1, 0}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
  CHECK(std::vector<RootVector>(g2.positive_roots().begin(), g2.positive_roots().end()) == expected);
}

TEST_CASE("Cartan matrices encode the diagram conventions") {
  const auto b3 = cartan_matrix(LieType::parse("B3"));
  CHECK(b3(1, 2) == -2);
  CHECK(b3(2, 1) == -1);
  const auto c3 = cartan_matrix(LieType::parse("C3"));
  CHECK(c3(1, 2) == -1);
  CHECK(c3(2, 1) == -2);
  const auto g2 = cartan_matrix(LieType::parse("G2"));
  CHECK(g2(0, 1) == -1);
  CHECK(g2(1, 0) == -3);
  const auto f4 = cartan_matrix(LieType::parse("F4"));
  CHECK(f4(1, 2) == -2);
  CHECK(f4(2, 1) == -1);
  const auto e6 = cartan_matrix(LieType::parse("E6"));
  CHECK(e6(1, 3) == -1);
  CHECK(e6(0, 2) == -1);
  CHECK(e6(0, 1) == 0);
  const auto d4 = cartan_matrix(LieType::parse("D4"));
  CHECK(d4(1, 2) == -1);
  CHECK(d4(1, 3) == -1);
  CHECK(d4(2, 3) == 0);
  for (const char* name : {"A5", "B4", "C4", "D5", "E7", "E8", "F4", "G2"}) {
    const auto a = cartan_matrix(LieType::parse(name));
    for (int i = 0; i < a.rank(); ++i) {
      CHECK(a(i, i) == 2);
      for (int j = 0; j < a.rank(); ++j) CHECK((a(i, j) == 0) == (a(j, i) == 0));
    }
  }
}

TEST_CASE("root strings have length at most four and G2 realizes four") {
  const auto g2 = positive_roots(LieType::parse("G2"));
  const auto s = g2.string_through(RootVector{0, 1}, 0);
  CHECK(s.down == 0);
  CHECK(s.up == 3);
  CHECK(s.length() == 4);
  for (const char* name : {"B4", "C4", "D5", "E8", "F4"}) {
    const auto sys = positive_roots(LieType::parse(name));
    for (const auto& beta : sys.positive_roots())
      for (int i = 0; i < sys.rank(); ++i) CHECK(sys.string_through(beta, i).length() <= 4);
  }
}

TEST_CASE("epsilon realization agrees with closure generation") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int l = f == Family::A ? 1 : 2; l <= 8; ++l) {
      const auto type = LieType::make(f, l);
      const auto sys = positive_roots(type);
      const auto eps = epsilon_realization(type);
      CAPTURE(type.name());
      CHECK(std::vector<RootVector>(sys.positive_roots().begin(), sys.positive_roots().end()) == eps);
    }
  const auto e6 = epsilon_realization(LieType::parse("E6"));
  CHECK(as_set(positive_roots(LieType::parse("E6"))) == std::set<RootVector>(e6.begin(), e6.end()));
  CHECK_THROWS_AS(epsilon_realization(LieType::parse("E7")), DomainError);
  CHECK_THROWS_AS(epsilon_realization(LieType::parse("G2")), DomainError);
}

TEST_CASE("highest roots dominate coefficient-wise") {
  CHECK(highest_root(LieType::parse("E6")) == RootVector{1, 2, 2, 3, 2, 1});
  CHECK(highest_root(LieType::parse("G2")) == RootVector{3, 2});
  CHECK(highest_root(LieType::parse("F4")) == RootVector{2, 3, 4, 2});
  for (const char* name : {"A4", "B5", "C5", "D6", "E6", "E7", "E8", "F4", "G2"}) {
    const auto type = LieType::parse(name);
    CAPTURE(name);
    CHECK(highest_root(type) == oracle::coefficientwise_max(type));
  }
  CHECK_THROWS_AS(highest_root(LieType::parse("D2")), DomainError);
}

TEST_CASE("invalid types are rejected with the constraint") {
  CHECK_THROWS_AS(LieType::make(Family::E, 5), ParameterError);
  CHECK_THROWS_AS(LieType::make(Family::B, 1), ParameterError);
  CHECK_THROWS_AS(LieType::make(Family::A, 0), ParameterError);
  CHECK_THROWS_AS(LieType::parse("X3"), ParameterError);
  CHECK_THROWS_AS(LieType::parse("A"), ParameterError);
  CHECK_THROWS_WITH(LieType::make(Family::F, 3), doctest::Contains("l = 4"));
  CHECK(LieType::parse("e7") == LieType::make(Family::E, 7));
  CHECK(LieType::parse("B12").name() == "B12");
}

TEST_CASE("coefficient vectors") {
  const RootVector a{1, 0, 2}, b{0, 1, 1};
  CHECK((a + b) == RootVector{1, 1, 3});
  CHECK((-a) == RootVector{-1, 0, -2});
  CHECK(a.height() == 3);
  CHECK(to_string(a) == "(1,0,2)");
  CHECK(HeightOrder{}(b, a));
  CHECK_FALSE(HeightOrder{}(a, b));
  CHECK(RootVector(3).is_zero());
}

TEST_CASE("pairing is linear in the root") {
  const auto sys = positive_roots(LieType::parse("F4"));
  const auto& cartan = sys.cartan();
  for (const auto& x : sys.positive_roots())
    for (const auto& y : sys.positive_roots())
      for (int i = 0; i < 4; ++i) CHECK(cartan.pairing(x + y, i) == cartan.pairing(x, i) + cartan.pairing(y, i));
}
