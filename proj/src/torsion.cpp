#include "torslab/torsion.hpp"

#include <algorithm>
#include <set>

namespace torslab {

std::vector<int> SubcatSet::indices() const {
  std::vector<int> out;
  for (auto i = members.find_first(); i != boost::dynamic_bitset<>::npos; i = members.find_next(i))
    out.push_back(static_cast<int>(i));
  return out;
}

TorsionCalculus::TorsionCalculus(const Catalogue& cat, Exec exec)
    : cat_(&cat), n_(cat.size()), hom_(hom_dim_table(cat, exec)), traces_(trace_tables(cat, exec)) {
  hom_nonzero_.assign(n_, boost::dynamic_bitset<>(n_));
  hom_nonzero_in_.assign(n_, boost::dynamic_bitset<>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (hom(i, j)) {
        hom_nonzero_[i].set(j);
        hom_nonzero_in_[j].set(i);
      }
  for (int i = 0; i < n_; ++i) {
    const SubcatSet gen = make({i});
    t_single_.push_back(t_of(gen));
    f_single_.push_back(f_of(gen));
    fac_single_.push_back(fac_closure(gen));
    sub_single_.push_back(sub_closure(gen));
  }
}

SubcatSet TorsionCalculus::zero() const {
  SubcatSet s;
  s.members.resize(n_);
  s.members.set(0);
  return s;
}

SubcatSet TorsionCalculus::whole() const {
  SubcatSet s;
  s.members.resize(n_);
  s.members.set();
  return s;
}

SubcatSet TorsionCalculus::make(const std::vector<int>& indices) const {
  SubcatSet s = zero();
  for (int i : indices) s.members.set(i);
  return s;
}

SubcatSet TorsionCalculus::fac_closure(const SubcatSet& gens) const {
  const Fp& f = cat_->algebra().field();
  SubcatSet out = zero();
  const auto g = gens.indices();
  for (int x = 1; x < n_; ++x) {
    bool in = false;
    for (int gi : g)
      if (traces_.fac[static_cast<size_t>(gi) * n_ + x]) {
        in = true;
        break;
      }
    if (!in && g.size() > 1) {
      Subspaces acc = zero_subspaces(cat_->dims(x));
      for (int gi : g) acc = sum(f, acc, traces_.trace[static_cast<size_t>(gi) * n_ + x]);
      in = acc.dims() == cat_->dims(x);
    }
    if (in) out.members.set(x);
  }
  return out;
}

SubcatSet TorsionCalculus::sub_closure(const SubcatSet& gens) const {
  const Fp& f = cat_->algebra().field();
  SubcatSet out = zero();
  const auto g = gens.indices();
  for (int x = 1; x < n_; ++x) {
    bool in = false;
    for (int gi : g)
      if (traces_.sub[static_cast<size_t>(gi) * n_ + x]) {
        in = true;
        break;
      }
    if (!in && g.size() > 1) {
      const auto& d = cat_->dims(x);
      Subspaces acc = full_subspaces(d);
      for (int gi : g) acc = intersection(f, acc, traces_.reject[static_cast<size_t>(gi) * n_ + x], d);
      in = acc.dims() == DimVector(d.size(), 0);
    }
    if (in) out.members.set(x);
  }
  return out;
}

SubcatSet TorsionCalculus::filt_closure(const SubcatSet& c) const {
  SubcatSet out = zero();
  for (int x : cat_->search_order()) {
    if (x == 0) continue;
    if (c.contains(x)) {
      out.members.set(x);
      continue;
    }
    for (const auto& [s, q] : cat_->filtration_pairs(x))
      if (c.contains(s) && out.contains(q)) {
        out.members.set(x);
        break;
      }
  }
  return out;
}

SubcatSet TorsionCalculus::filt_closure_by_extensions(const SubcatSet& c) const {
  const Algebra& alg = cat_->algebra();
  SubcatSet out = c;
  out.members.set(0);
  out.kind = SubcatKind::None;
  std::set<std::pair<int, int>> done;
  bool changed = true;
  while (changed) {
    changed = false;
    const auto idx = out.indices();
    for (int x : idx)
      for (int y : idx) {
        if (x == 0 || y == 0 || !done.insert({x, y}).second) continue;
        auto ext = extensions(alg, cat_->item(x), cat_->item(y), &cat_->bound());
        if (ext.truncated) out.truncated = true;
        for (const auto& e : ext.middle) {
          const int k = *cat_->find(e);
          if (!out.contains(k)) {
            out.members.set(k);
            changed = true;
          }
        }
      }
  }
  return out;
}

SubcatSet TorsionCalculus::left_perp(const SubcatSet& c) const {
  SubcatSet out;
  out.members.resize(n_);
  for (int x = 0; x < n_; ++x)
    if (!hom_nonzero_[x].intersects(c.members)) out.members.set(x);
  return out;
}

SubcatSet TorsionCalculus::right_perp(const SubcatSet& c) const {
  SubcatSet out;
  out.members.resize(n_);
  for (int y = 0; y < n_; ++y)
    if (!hom_nonzero_in_[y].intersects(c.members)) out.members.set(y);
  return out;
}

SubcatSet TorsionCalculus::t_of(const SubcatSet& gens) const {
  SubcatSet out = left_perp(right_perp(gens));
  out.kind = SubcatKind::Torsion;
  return out;
}

SubcatSet TorsionCalculus::f_of(const SubcatSet& gens) const {
  SubcatSet out = right_perp(left_perp(gens));
  out.kind = SubcatKind::Torsionfree;
  return out;
}

SubcatSet TorsionCalculus::fac_of_module(const Representation& m) const {
  const Algebra& alg = cat_->algebra();
  const Fp& f = alg.field();
  SubcatSet out = zero();
  for (int x = 1; x < n_; ++x) {
    const auto& mx = cat_->item(x);
    Subspaces tr = zero_subspaces(mx.dims);
    for (const auto& phi : hom_space(alg, m, mx)) tr = sum(f, tr, image(f, phi, mx.dims));
    if (tr.dims() == mx.dims) out.members.set(x);
  }
  return out;
}

SubcatSet TorsionCalculus::sub_of_module(const Representation& m) const {
  const Algebra& alg = cat_->algebra();
  const Fp& f = alg.field();
  SubcatSet out = zero();
  for (int x = 1; x < n_; ++x) {
    const auto& mx = cat_->item(x);
    Subspaces rj = full_subspaces(mx.dims);
    for (const auto& phi : hom_space(alg, mx, m)) rj = intersection(f, rj, kernel(f, phi, mx.dims), mx.dims);
    if (rj.dims() == DimVector(mx.dims.size(), 0)) out.members.set(x);
  }
  return out;
}

SubcatSet TorsionCalculus::left_perp_of_module(const Representation& m) const {
  SubcatSet out;
  out.members.resize(n_);
  for (int x = 0; x < n_; ++x)
    if (hom_dim(cat_->algebra(), cat_->item(x), m) == 0) out.members.set(x);
  return out;
}

SubcatSet TorsionCalculus::right_perp_of_module(const Representation& m) const {
  SubcatSet out;
  out.members.resize(n_);
  for (int x = 0; x < n_; ++x)
    if (hom_dim(cat_->algebra(), m, cat_->item(x)) == 0) out.members.set(x);
  return out;
}

bool TorsionCalculus::is_torsion_class(const SubcatSet& s) const {
  return s.contains(0) && fac_closure(s) == s && filt_closure(s) == s;
}

bool TorsionCalculus::is_torsionfree_class(const SubcatSet& s) const {
  return s.contains(0) && sub_closure(s) == s && filt_closure(s) == s;
}

TorsionPair TorsionCalculus::torsion_pair_of(const SubcatSet& t) const {
  if (t.truncated) throw std::invalid_argument("torsion_pair_of: truncated torsion class");
  TorsionPair pair{t, right_perp(t)};
  pair.t.kind = SubcatKind::Torsion;
  pair.f.kind = SubcatKind::Torsionfree;
  if (!(left_perp(pair.f) == t)) throw ReflexivityError("left_perp(right_perp(T)) differs from T in this window");
  return pair;
}

const std::vector<Semibrick>& TorsionCalculus::semibricks() const {
  if (!semibricks_) semibricks_ = enumerate_semibricks(*cat_);
  return *semibricks_;
}

std::vector<SubcatSet> TorsionCalculus::enumerate_torsion_classes(int max_semibrick) const {
  std::vector<SubcatSet> classes{t_of(zero())};
  std::set<boost::dynamic_bitset<>> seen{classes[0].members};
  std::vector<Semibrick> local;
  const std::vector<Semibrick>* sbs = &semibricks();
  if (max_semibrick != 8) {
    local = enumerate_semibricks(*cat_, max_semibrick);
    sbs = &local;
  }
  for (const auto& s : *sbs) {
    auto t = t_of(make(s.members));
    if (seen.insert(t.members).second) classes.push_back(std::move(t));
  }
  std::stable_sort(classes.begin(), classes.end(), [](const SubcatSet& a, const SubcatSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.members < b.members;
  });
  return classes;
}

std::optional<int> TorsionCalculus::compact_witness(const SubcatSet& t) const {
  for (int i : cat_->search_order())
    if (t_single_[i] == t) return i;
  return std::nullopt;
}

std::optional<int> TorsionCalculus::cocompact_witness(const SubcatSet& t) const {
  const SubcatSet f = right_perp(t);
  for (int i : cat_->search_order())
    if (f_single_[i] == f) return i;
  return std::nullopt;
}

std::optional<int> TorsionCalculus::fac_single_witness(const SubcatSet& t) const {
  for (int i : cat_->search_order())
    if (fac_single_[i] == t) return i;
  return std::nullopt;
}

std::optional<int> TorsionCalculus::sub_single_witness(const SubcatSet& f) const {
  for (int i : cat_->search_order())
    if (sub_single_[i] == f) return i;
  return std::nullopt;
}

std::optional<Semibrick> TorsionCalculus::widely_generated(const SubcatSet& t) const {
  for (const auto& s : semibricks())
    if (t_of(make(s.members)) == t) return s;
  return std::nullopt;
}

std::vector<std::pair<int, int>> hasse_edges(const std::vector<SubcatSet>& classes) {
  std::vector<std::pair<int, int>> edges;
  const int n = static_cast<int>(classes.size());
  auto strict = [&](int a, int b) { return classes[a].subset_of(classes[b]) && !(classes[a] == classes[b]); };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!strict(a, b)) continue;
      bool covered = true;
      for (int c = 0; c < n && covered; ++c)
        if (strict(a, c) && strict(c, b)) covered = false;
      if (covered) edges.emplace_back(a, b);
    }
  return edges;
}

SubcatSet restrict_to(const Catalogue& big, const SubcatSet& s, const Catalogue& small) {
  SubcatSet out;
  out.members.resize(small.size());
  out.members.set(0);
  out.kind = s.kind;
  for (int i : s.indices()) {
    if (!leq(big.dims(i), small.bound())) continue;
    out.members.set(*small.find(big.item(i)));
  }
  return out;
}

}  // namespace torslab
