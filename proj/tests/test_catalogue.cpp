#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "support.hpp"

using namespace torslab;

TEST_CASE("catalogue sizes at small bounds") {
  CHECK(Catalogue::enumerate(support::load("a2"), {1, 1}).size() == 5);
  CHECK(Catalogue::enumerate(support::load("loop"), {2}).size() == 4);
  // 0, S(1), S(2), S(1)+S(2) and three (1,1)-bricks
  CHECK(Catalogue::enumerate(support::load("kronecker"), {1, 1}).size() == 7);
  CHECK(Catalogue::enumerate(support::load("kronecker", 5), {1, 1}).size() == 4 + 6);
}

TEST_CASE("catalogue matches a brute-force enumeration") {
  struct Case {
    const char* name;
    int p;
    DimVector bound;
  };
  for (const auto& c : {Case{"a2", 2, {2, 2}}, Case{"a2", 3, {2, 1}}, Case{"loop", 2, {3}}, Case{"loop", 3, {2}},
                        Case{"kronecker", 2, {2, 2}}, Case{"kronecker", 3, {1, 2}}, Case{"kxk", 2, {2, 2}}}) {
    auto alg = support::load(c.name, c.p);
    const Catalogue cat = Catalogue::enumerate(alg, c.bound);
    const auto brute = enumerate_modules_bruteforce(*alg, c.bound);
    CHECK(static_cast<int>(brute.size()) == cat.size());
    std::set<int> hit;
    for (const auto& m : brute) {
      const auto i = cat.find(m);
      REQUIRE(i.has_value());
      hit.insert(*i);
    }
    CHECK(static_cast<int>(hit.size()) == cat.size());
  }
}

TEST_CASE("isomorphism") {
  auto k = support::load("kronecker");
  auto a2 = support::load("a2");
  CHECK(is_isomorphic(*a2, simple_module(*a2, 0), simple_module(*a2, 0)));
  CHECK_FALSE(is_isomorphic(*a2, simple_module(*a2, 0), simple_module(*a2, 1)));
  CHECK_FALSE(is_isomorphic(*k, support::kron11(1, 0), support::kron11(0, 1)));
  std::vector<Matrix> g = {Matrix::identity(1), Matrix::identity(1)};
  g[1](0, 0) = 1;
  CHECK(is_isomorphic(*k, support::kron11(1, 1), change_basis(*k, support::kron11(1, 1), g)));
}

TEST_CASE("submodule and quotient dimension vectors") {
  auto a2 = support::load("a2");
  auto k = support::load("kronecker");
  using DS = std::vector<DimVector>;
  auto sorted = [](DS v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(sorted(submodule_dimvectors(*a2, simple_module(*a2, 0))) == DS{{0, 0}, {1, 0}});
  CHECK(sorted(submodule_dimvectors(*a2, projective_module(*a2, 0))) == DS{{0, 0}, {0, 1}, {1, 1}});
  const auto ss = direct_sum(simple_module(*a2, 0), simple_module(*a2, 0));
  CHECK(sorted(submodule_dimvectors(*a2, ss)) == DS{{0, 0}, {1, 0}, {2, 0}});
  CHECK(sorted(quotient_dimvectors(*a2, projective_module(*a2, 0))) == DS{{0, 0}, {1, 0}, {1, 1}});
  CHECK(sorted(quotient_dimvectors(*a2, zero_module(*a2))) == DS{{0, 0}});
  CHECK(sorted(quotient_dimvectors(*k, support::kron11(1, 1))) == DS{{0, 0}, {1, 0}, {1, 1}});
}

TEST_CASE("bricks and semibricks") {
  auto a2 = support::load("a2");
  auto k = support::load("kronecker");
  CHECK(is_brick(*a2, simple_module(*a2, 0)));
  CHECK_FALSE(is_brick(*a2, direct_sum(simple_module(*a2, 0), simple_module(*a2, 0))));
  CHECK(is_brick(*k, support::kron11(1, 1)));
  const Catalogue cat = Catalogue::enumerate(a2, {1, 1});
  const int s1 = support::index_of(cat, simple_module(*a2, 0)), s2 = support::index_of(cat, simple_module(*a2, 1));
  const int p1 = support::index_of(cat, projective_module(*a2, 0));
  CHECK(is_semibrick(cat, {s1, s2}));
  CHECK_FALSE(is_semibrick(cat, {p1, s2}));
  CHECK_FALSE(is_semibrick(cat, {p1, s1}));
  CHECK(is_semibrick(cat, {}));
  CHECK(enumerate_bricks(cat).size() == 3);
  // empty, {S1}, {S2}, {P1}, {S1,S2}
  CHECK(enumerate_semibricks(cat).size() == 5);
}

TEST_CASE("extensions") {
  auto a2 = support::load("a2");
  auto loop = support::load("loop");
  const auto s1 = simple_module(*a2, 0), s2 = simple_module(*a2, 1), p1 = projective_module(*a2, 0);
  auto contains = [&](const Algebra& alg, const std::vector<Representation>& ms, const Representation& m) {
    return std::any_of(ms.begin(), ms.end(), [&](const Representation& x) { return is_isomorphic(alg, x, m); });
  };
  const auto e12 = extensions(*a2, s1, s2).middle;
  CHECK(e12.size() == 2);
  CHECK(contains(*a2, e12, direct_sum(s1, s2)));
  CHECK(contains(*a2, e12, p1));
  const auto e21 = extensions(*a2, s2, s1).middle;
  CHECK(e21.size() == 1);
  CHECK(contains(*a2, e21, direct_sum(s2, s1)));
  const auto s = simple_module(*loop, 0);
  const auto ell = extensions(*loop, s, s).middle;
  CHECK(ell.size() == 2);
  CHECK(contains(*loop, ell, projective_module(*loop, 0)));
  const DimVector tight = {1, 0};
  const auto cut = extensions(*a2, s1, s2, &tight);
  CHECK(cut.middle.empty());
  CHECK(cut.dropped > 0);
}

TEST_CASE("budget") {
  CHECK_THROWS_AS(Catalogue::enumerate(support::load("kronecker"), {4, 4}), BudgetExceeded);
}
