#include "torslab/presentation.hpp"

#include <stdexcept>

#include "torslab/catalogue.hpp"

namespace torslab {

PresentationPair presentation_pair(const StabilityVector& theta) {
  if (!theta.lattice()) throw std::invalid_argument("presentation_pair: theta must be integral");
  PresentationPair p;
  p.theta = theta;
  const auto c = theta.integer_coords();
  for (size_t i = 0; i < c.size(); ++i)
    for (long long k = 0; k < (c[i] < 0 ? -c[i] : c[i]); ++k) (c[i] > 0 ? p.p0 : p.p1).push_back(static_cast<int>(i));
  return p;
}

PresentationSpace presentation_space(const Algebra& alg, const StabilityVector& theta) {
  if (theta.size() != alg.num_vertices()) throw std::invalid_argument("presentation_space: theta length differs from vertex count");
  PresentationSpace s;
  s.pair = presentation_pair(theta);
  const int k = proj_hom_dim(alg, s.pair.p1, s.pair.p0);
  for (int j = 0; j < k; ++j) {
    std::vector<Elem> e(k, 0);
    e[j] = 1;
    s.basis.push_back(unflatten(alg, s.pair.p1, s.pair.p0, e));
  }
  return s;
}

ProjMap presentation_map(const Algebra& alg, const PresentationSpace& space, const std::vector<Elem>& coeffs) {
  if (coeffs.size() != space.basis.size()) throw std::invalid_argument("presentation_map: wrong coefficient count");
  std::vector<Elem> v(coeffs.begin(), coeffs.end());
  return unflatten(alg, space.pair.p1, space.pair.p0, v);
}

SubcatSet tbar_of_map(const Algebra& alg, const TorsionCalculus& calc, const ProjMap& f) {
  SubcatSet s = calc.left_perp_of_module(nakayama_kernel(alg, f));
  s.kind = SubcatKind::Torsion;
  return s;
}

namespace {

std::vector<Elem> flatten_morphism(const Morphism& m) {
  std::vector<Elem> v;
  for (const auto& mat : m) v.insert(v.end(), mat.data().begin(), mat.data().end());
  return v;
}

}  // namespace

std::optional<std::vector<boost::dynamic_bitset<>>> tbar_sweep(const Algebra& alg, const Catalogue& cat,
                                                               const PresentationSpace& space, Exec exec) {
  const Fp& fld = alg.field();
  const int k = static_cast<int>(space.basis.size());
  long long count = 1;
  for (int j = 0; j < k; ++j) {
    count *= fld.p();
    if (count > kExhaustiveCap) return std::nullopt;
  }
  const Representation nu1 = injective_sum(alg, space.pair.p1);
  const Representation nu0 = injective_sum(alg, space.pair.p0);
  std::vector<Morphism> nub;
  for (const auto& b : space.basis) nub.push_back(nakayama_map(alg, b));
  // X is in Tbar_f iff g -> nu(f) o g is injective on Hom(X, nu P1).
  const int n = cat.size();
  std::vector<LinearFamily> fams(n);
  for (int x = 0; x < n; ++x) {
    const auto& mx = cat.item(x);
    const auto gs = hom_space(alg, mx, nu1);
    LinearFamily& fam = fams[x];
    fam.cols = static_cast<int>(gs.size());
    for (size_t v = 0; v < mx.dims.size(); ++v) fam.rows += mx.dims[v] * nu0.dims[v];
    for (const auto& nb : nub) {
      Matrix w(fam.rows, fam.cols);
      for (int j = 0; j < fam.cols; ++j) {
        const auto col = flatten_morphism(compose(fld, nb, gs[j]));
        for (int r = 0; r < fam.rows; ++r) w(r, j) = col[r];
      }
      fam.w.push_back(std::move(w));
    }
  }
  return full_rank_sweep(fld, k, fams, exec);
}

FeiReport fei_union_check(const Algebra& alg, const TorsionCalculus& calc, const StabilityVector& theta, int l_max,
                          Exec exec) {
  const Catalogue& cat = calc.catalogue();
  const int n = cat.size();
  FeiReport rep;
  rep.theta = theta;
  rep.l_max = l_max;
  rep.tbar = semistable_quadruple(theta, cat, exec).Tbar;
  rep.union_set.members.resize(n);
  rep.union_set.kind = SubcatKind::Torsion;
  for (int l = 1; l <= l_max; ++l) {
    const PresentationSpace space = presentation_space(alg, theta.scaled(l));
    FeiLevel level;
    level.l = l;
    level.hom_dim = static_cast<int>(space.basis.size());
    const auto bits = tbar_sweep(alg, cat, space, exec);
    if (!bits) {
      rep.partial = true;
      level.coverage = rep.union_set.count();
      rep.levels.push_back(level);
      continue;
    }
    level.swept = true;
    level.maps = static_cast<long long>(bits->size());
    boost::dynamic_bitset<> bad(n);
    for (const auto& b : *bits) {
      rep.union_set.members |= b;
      bad |= b - rep.tbar.members;
    }
    level.violations = static_cast<int>(bad.count());
    if (level.violations) rep.containment = false;
    level.coverage = rep.union_set.count();
    if (!rep.equality_level && rep.union_set == rep.tbar) rep.equality_level = l;
    rep.levels.push_back(level);
  }
  rep.equality = rep.union_set == rep.tbar;
  return rep;
}

TorsionPair cocompact_witness(const TorsionCalculus& calc, const Representation& m) {
  TorsionPair p;
  p.t = calc.left_perp_of_module(m);
  p.f = calc.right_perp(p.t);
  p.t.kind = SubcatKind::Torsion;
  p.f.kind = SubcatKind::Torsionfree;
  if (!(calc.left_perp(p.f) == p.t)) throw ReflexivityError("cocompact_witness: perpendiculars do not close up in the window");
  return p;
}

}  // namespace torslab
