#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "support.hpp"
#include "torslab/silting.hpp"
#include "torslab/stability.hpp"

using namespace torslab;

namespace {

// P(2) -> P(1) over A_2 through the arrow.
TwoTermComplex arrow_complex(const Algebra& a2) {
  TwoTermComplex u;
  u.minus = {1};
  u.zero = {0};
  u.d = ProjMap::zero(a2, u.minus, u.zero);
  u.d.at(0, 0) = a2.unit_vector(a2.arrow_index(0));
  return u;
}

std::set<IntVector> rays_of(const MutationGraph& g) {
  std::set<IntVector> out;
  for (const auto& v : g.vertices) out.insert(v.g_vectors.begin(), v.g_vectors.end());
  return out;
}

}  // namespace

TEST_CASE("presilting examples") {
  auto a2 = support::load("a2");
  CHECK(is_presilting(*a2, TwoTermComplex::stalk0(*a2, 0)));
  CHECK(is_presilting(*a2, arrow_complex(*a2)));
  const auto both = direct_sum(*a2, {TwoTermComplex::stalk1(*a2, 0), TwoTermComplex::stalk0(*a2, 0)});
  CHECK_FALSE(is_presilting(*a2, both));
  CHECK(arrow_complex(*a2).g_vector(2) == IntVector{1, -1});
}

TEST_CASE("cohomology") {
  auto a2 = support::load("a2");
  const auto h = cohomology(*a2, TwoTermComplex::stalk0(*a2, 0));
  CHECK(is_isomorphic(*a2, h.h0, projective_module(*a2, 0)));
  CHECK(h.hminus1_nu.is_zero());
  CHECK(is_isomorphic(*a2, cohomology(*a2, arrow_complex(*a2)).h0, simple_module(*a2, 0)));
  const auto s = cohomology(*a2, TwoTermComplex::stalk1(*a2, 0));
  CHECK(s.h0.is_zero());
  CHECK(is_isomorphic(*a2, s.hminus1_nu, injective_module(*a2, 0)));
}

TEST_CASE("reduction cancels isomorphisms") {
  auto a2 = support::load("a2");
  TwoTermComplex u;
  u.minus = {0, 1};
  u.zero = {0};
  u.d = ProjMap::zero(*a2, u.minus, u.zero);
  u.d.at(0, 0) = a2->unit_vector(a2->idempotent(0));
  u.d.at(0, 1) = a2->unit_vector(a2->arrow_index(0));
  CHECK_FALSE(is_reduced(*a2, u));
  const auto r = reduce(*a2, u);
  CHECK(is_reduced(*a2, r));
  CHECK(r.g_vector(2) == u.g_vector(2));
  CHECK(r.minus == std::vector<int>{1});
  CHECK(r.zero.empty());
}

TEST_CASE("homotopy hom spaces") {
  auto a2 = support::load("a2");
  const auto p1 = TwoTermComplex::stalk0(*a2, 0), p2 = TwoTermComplex::stalk0(*a2, 1);
  CHECK(hom_k(*a2, p2, p1).dim() == 1);
  CHECK(hom_k(*a2, p1, p2).dim() == 0);
  CHECK(hom_k(*a2, arrow_complex(*a2), arrow_complex(*a2)).dim() == 1);
  CHECK(is_indecomposable(*a2, arrow_complex(*a2)));
}

TEST_CASE("mutation of A over A_2") {
  auto a2 = support::load("a2");
  const SiltingComplex a = initial_silting(*a2);
  REQUIRE(a.g_vectors == std::vector<IntVector>{{0, 1}, {1, 0}});
  const SiltingComplex m = mutate(*a2, a, 0);
  CHECK(m.g_vectors == std::vector<IntVector>{{1, -1}, {1, 0}});
  const SiltingComplex back = mutate(*a2, m, 0);
  CHECK(back.key() == a.key());
}

TEST_CASE("mutation graphs") {
  const auto a2 = enumerate_silting(*support::load("a2"), 5);
  CHECK(a2.complete);
  CHECK(a2.vertices.size() == 5);
  CHECK(rays_of(a2) == std::set<IntVector>{{1, 0}, {0, 1}, {1, -1}, {0, -1}, {-1, 0}});
  const auto loop = enumerate_silting(*support::load("loop"), 3);
  CHECK(loop.complete);
  CHECK(loop.vertices.size() == 2);
  const auto kxk = enumerate_silting(*support::load("kxk"), 4);
  CHECK(kxk.complete);
  CHECK(kxk.vertices.size() == 4);
  const auto k = enumerate_silting(*support::load("kronecker"), 6);
  CHECK_FALSE(k.complete);
  // A and A[1] plus six mutations along each of the two rays
  CHECK(k.vertices.size() == 13);
  for (const auto* g : {&a2, &loop, &kxk, &k}) CHECK(overlapping_chambers(*g).empty());
}

TEST_CASE("every edge re-mutates back") {
  for (const char* name : {"a2", "loop", "kxk", "kronecker"}) {
    auto alg = support::load(name);
    const auto g = enumerate_silting(*alg, 5);
    for (const auto& e : g.edges) {
      const SiltingComplex& to = g.vertices[e.to];
      const auto& gone = g.vertices[e.from].g_vectors[e.summand];
      bool found = false;
      for (size_t k = 0; k < to.g_vectors.size() && !found; ++k) {
        if (std::find(g.vertices[e.from].g_vectors.begin(), g.vertices[e.from].g_vectors.end(), to.g_vectors[k]) !=
            g.vertices[e.from].g_vectors.end())
          continue;
        CHECK(mutate(*alg, to, static_cast<int>(k)).key() == g.vertices[e.from].key());
        found = true;
      }
      CHECK(found);
      CHECK(std::find(to.g_vectors.begin(), to.g_vectors.end(), gone) == to.g_vectors.end());
    }
  }
}

TEST_CASE("fan rays match an exhaustive presilting search") {
  for (const char* name : {"a2", "loop", "kxk"}) {
    auto alg = support::load(name);
    CHECK(rays_of(enumerate_silting(*alg, 6)) == exhaustive_presilting_gvectors(*alg, 2));
  }
  auto k = support::load("kronecker");
  std::set<IntVector> small;
  for (const auto& g : rays_of(enumerate_silting(*k, 10)))
    if (std::abs(g[0]) <= 2 && std::abs(g[1]) <= 2) small.insert(g);
  CHECK(small == exhaustive_presilting_gvectors(*k, 2));
}

TEST_CASE("rigidity verdicts") {
  auto a2 = support::load("a2");
  const auto g = enumerate_silting(*a2, 5);
  const auto v = rigidity(StabilityVector::from_ints({1, 1}), g);
  CHECK(v.status == RigidityVerdict::Status::Rigid);
  CHECK(std::set<IntVector>(v.witness_rays.begin(), v.witness_rays.end()) == std::set<IntVector>{{1, 0}, {0, 1}});
  for (const auto& t : lattice_grid(2, -4, 4)) CHECK(rigidity(t, g).status == RigidityVerdict::Status::Rigid);
  const auto on_ray = rigidity(StabilityVector::from_ints({2, 0}), g);
  CHECK(on_ray.witness_rays == std::vector<IntVector>{{1, 0}});
  const auto k = enumerate_silting(*support::load("kronecker"), 10);
  const auto u = rigidity(StabilityVector::from_ints({1, -1}), k);
  CHECK(u.status == RigidityVerdict::Status::Unknown);
  CHECK(u.depth == 10);
  CHECK(to_string(u.status) == "unknown");
  CHECK(rigidity(StabilityVector::from_ints({2, -1}), k).status == RigidityVerdict::Status::Rigid);
  CHECK(rigidity(StabilityVector::from_ints({1, 0}), k).status == RigidityVerdict::Status::Rigid);
}

TEST_CASE("induced torsion pairs") {
  auto a2 = support::load("a2");
  const Catalogue cat = Catalogue::enumerate(a2, {1, 1});
  TorsionCalculus calc(cat);
  const int s1 = support::index_of(cat, simple_module(*a2, 0)), p1 = support::index_of(cat, projective_module(*a2, 0));
  const auto ip = induced_torsion_pairs(*a2, calc, arrow_complex(*a2));
  CHECK(ip.t == calc.make({s1}));
  CHECK(ip.tbar == calc.make({s1, p1}));
  const auto all = induced_torsion_pairs(*a2, calc, initial_silting(*a2).total(*a2));
  CHECK(all.t == calc.whole());
  CHECK(all.tbar == calc.whole());
  CHECK(induced_torsion_pairs(*a2, calc, shifted_silting(*a2).total(*a2)).t == calc.zero());
}

TEST_CASE("silting complexes give every torsion class once") {
  struct Case {
    const char* name;
    DimVector bound;
  };
  for (const auto& k : {Case{"a2", {2, 2}}, Case{"loop", {3}}, Case{"kxk", {2, 2}}}) {
    auto alg = support::load(k.name);
    const Catalogue cat = Catalogue::enumerate(alg, k.bound);
    TorsionCalculus calc(cat);
    const auto g = enumerate_silting(*alg, 6);
    REQUIRE(g.complete);
    std::set<boost::dynamic_bitset<>> images, classes;
    for (const auto& v : g.vertices) images.insert(induced_torsion_pairs(*alg, calc, v.total(*alg)).t.members);
    for (const auto& t : calc.enumerate_torsion_classes()) classes.insert(t.members);
    CHECK(images.size() == g.vertices.size());
    CHECK(images == classes);
  }
}

TEST_CASE("chambers carry the induced pairs") {
  for (const char* name : {"a2", "kronecker"}) {
    auto alg = support::load(name);
    const Catalogue cat = Catalogue::enumerate(alg, {2, 2});
    TorsionCalculus calc(cat);
    const auto g = enumerate_silting(*alg, 6);
    for (const auto& v : g.vertices) {
      IntVector sum(2, 0);
      for (const auto& r : v.g_vectors)
        for (int i = 0; i < 2; ++i) sum[i] += r[i];
      const auto q = semistable_quadruple(StabilityVector::from_ints(sum), cat);
      const auto ip = induced_torsion_pairs(*alg, calc, v.total(*alg));
      CHECK(q.T == ip.t);
      CHECK(q.Tbar == ip.tbar);
    }
  }
}
