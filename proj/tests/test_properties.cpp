#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "support.hpp"
#include "torslab/silting.hpp"
#include "torslab/stability.hpp"

using namespace torslab;

namespace {

struct Window {
  const char* name;
  DimVector bound;
};

const Window kWindows[] = {{"a2", {2, 2}}, {"kronecker", {2, 2}}, {"loop", {3}}, {"kxk", {2, 2}}};

SubcatSet random_set(std::mt19937& rng, const TorsionCalculus& c) {
  std::vector<int> idx;
  for (int i = 1; i < c.size(); ++i)
    if (rng() % 4 == 0) idx.push_back(i);
  return c.make(idx);
}

StabilityVector random_theta(std::mt19937& rng, int n) {
  StabilityVector t;
  for (int i = 0; i < n; ++i) t.coords.push_back(Rational(static_cast<long long>(rng() % 13) - 6, 1 + rng() % 3));
  return t;
}

}  // namespace

TEST_CASE("closures are idempotent and monotone") {
  std::mt19937 rng(101);
  for (const auto& w : kWindows) {
    const Catalogue cat = Catalogue::enumerate(support::load(w.name), w.bound);
    TorsionCalculus c(cat);
    for (int t = 0; t < 60; ++t) {
      const SubcatSet s = random_set(rng, c);
      SubcatSet bigger = s;
      bigger.members |= random_set(rng, c).members;
      for (auto op : {&TorsionCalculus::fac_closure, &TorsionCalculus::sub_closure, &TorsionCalculus::filt_closure,
                      &TorsionCalculus::t_of, &TorsionCalculus::f_of}) {
        const SubcatSet once = (c.*op)(s);
        CHECK((c.*op)(once) == once);
        CHECK(s.subset_of(once));
        CHECK(once.subset_of((c.*op)(bigger)));
      }
      CHECK(c.is_torsion_class(c.t_of(s)));
      CHECK(c.is_torsionfree_class(c.f_of(s)));
    }
  }
}

TEST_CASE("perpendicular operators form a Galois connection") {
  std::mt19937 rng(202);
  for (const auto& w : kWindows) {
    const Catalogue cat = Catalogue::enumerate(support::load(w.name), w.bound);
    TorsionCalculus c(cat);
    for (int t = 0; t < 60; ++t) {
      const SubcatSet s = random_set(rng, c);
      CHECK(c.left_perp(c.right_perp(c.left_perp(s))) == c.left_perp(s));
      CHECK(c.right_perp(c.left_perp(c.right_perp(s))) == c.right_perp(s));
      CHECK(s.subset_of(c.left_perp(c.right_perp(s))));
    }
    for (const auto& t : c.enumerate_torsion_classes()) CHECK(c.left_perp(c.right_perp(t)) == t);
  }
}

TEST_CASE("semistable sandwich, componentwise order and scaling") {
  std::mt19937 rng(303);
  for (const auto& w : kWindows) {
    auto alg = support::load(w.name);
    const Catalogue cat = Catalogue::enumerate(alg, w.bound);
    TorsionCalculus c(cat);
    const int n = alg->num_vertices();
    for (int t = 0; t < 200; ++t) {
      const StabilityVector eta = random_theta(rng, n);
      StabilityVector theta = eta;
      for (auto& x : theta.coords) x += Rational(1 + static_cast<long long>(rng() % 5), 1 + rng() % 4);
      REQUIRE(cw_less(eta, theta));
      const auto qe = semistable_quadruple(eta, cat), qt = semistable_quadruple(theta, cat);
      for (const auto* q : {&qe, &qt}) {
        CHECK(q->T.subset_of(q->Tbar));
        CHECK(q->F.subset_of(q->Fbar));
        CHECK((q->Tbar.members & q->F.members).count() == 1);
        CHECK((q->T.members & q->Fbar.members).count() == 1);
        CHECK(c.is_torsion_class(q->T));
        CHECK(c.is_torsion_class(q->Tbar));
      }
      CHECK(qe.Tbar.subset_of(qt.T));
      CHECK(qt.Fbar.subset_of(qe.F));
      const Rational scale(1 + static_cast<long long>(rng() % 7), 1 + rng() % 5);
      const auto qs = semistable_quadruple(theta.scaled(scale), cat);
      CHECK(qs.T == qt.T);
      CHECK(qs.Tbar == qt.Tbar);
      CHECK(qs.F == qt.F);
      CHECK(qs.Fbar == qt.Fbar);
    }
  }
}

TEST_CASE("mutation is an involution on every enumerated edge") {
  for (const char* name : {"a2", "loop", "kxk", "kronecker"}) {
    auto alg = support::load(name);
    const auto g = enumerate_silting(*alg, 6);
    int checked = 0;
    for (const auto& e : g.edges) {
      const auto& from = g.vertices[e.from];
      const auto& to = g.vertices[e.to];
      CHECK(mutate(*alg, from, e.summand).key() == to.key());
      for (size_t k = 0; k < to.g_vectors.size(); ++k)
        if (std::find(from.g_vectors.begin(), from.g_vectors.end(), to.g_vectors[k]) == from.g_vectors.end()) {
          CHECK(mutate(*alg, to, static_cast<int>(k)).key() == from.key());
          ++checked;
        }
    }
    CHECK(checked == static_cast<int>(g.edges.size()));
  }
}
