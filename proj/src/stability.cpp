#include "torslab/stability.hpp"

#include <stdexcept>

#include "torslab/catalogue.hpp"

namespace torslab {

bool membership(const StabilityVector& theta, const Catalogue& cat, int index, Which which) {
  return membership(theta, cat.dims(index), cat.submodule_dims(index), cat.simple_end_dims(), which);
}

bool membership(const StabilityVector& theta, const Algebra& alg, const Representation& m, Which which) {
  return membership(theta, m.dims, submodule_dimvectors(alg, m), simple_endomorphism_dims(alg), which);
}

namespace {

SubcatSet from_row(const std::vector<char>& bits, size_t offset, int n, SubcatKind kind) {
  SubcatSet s;
  s.members.resize(n);
  s.kind = kind;
  for (int i = 0; i < n; ++i)
    if (bits[offset + i]) s.members.set(i);
  return s;
}

void check_invariants(const SemistableQuadruple& q) {
  auto only_zero = [](const SubcatSet& a, const SubcatSet& b) {
    boost::dynamic_bitset<> x = a.members & b.members;
    return x.count() == 1 && x.test(0);
  };
  if (!q.T.subset_of(q.Tbar) || !q.F.subset_of(q.Fbar) || !only_zero(q.T, q.Fbar) || !only_zero(q.Tbar, q.F))
    throw std::logic_error("semistable quadruple invariants violated at theta " + q.theta.to_string());
}

}  // namespace

std::vector<SemistableQuadruple> semistable_quadruples(const std::vector<StabilityVector>& thetas, const Catalogue& cat,
                                                       Exec exec) {
  const int n = cat.size();
  const auto t = membership_sweep(cat, thetas, Which::T, exec);
  const auto tb = membership_sweep(cat, thetas, Which::Tbar, exec);
  const auto f = membership_sweep(cat, thetas, Which::F, exec);
  const auto fb = membership_sweep(cat, thetas, Which::Fbar, exec);
  std::vector<SemistableQuadruple> out;
  out.reserve(thetas.size());
  for (size_t k = 0; k < thetas.size(); ++k) {
    const size_t off = k * n;
    SemistableQuadruple q{thetas[k], from_row(t, off, n, SubcatKind::Torsion), from_row(tb, off, n, SubcatKind::Torsion),
                          from_row(f, off, n, SubcatKind::Torsionfree), from_row(fb, off, n, SubcatKind::Torsionfree)};
    check_invariants(q);
    out.push_back(std::move(q));
  }
  return out;
}

SemistableQuadruple semistable_quadruple(const StabilityVector& theta, const Catalogue& cat, Exec exec) {
  return semistable_quadruples({theta}, cat, exec).front();
}

bool tf_equivalent(const StabilityVector& theta, const StabilityVector& eta, const Catalogue& cat) {
  const auto q = semistable_quadruples({theta, eta}, cat, Exec::Serial);
  return q[0].T == q[1].T && q[0].Tbar == q[1].Tbar;
}

bool cw_less(const StabilityVector& eta, const StabilityVector& theta) {
  if (eta.size() != theta.size()) throw std::invalid_argument("cw_less: length mismatch");
  for (int i = 0; i < theta.size(); ++i)
    if (theta.coords[i] - eta.coords[i] <= Rational(0)) return false;
  return true;
}

std::optional<Rational> openness_radius(const StabilityVector& theta, const Catalogue& cat, int index) {
  if (!membership(theta, cat, index, Which::T)) return std::nullopt;
  const auto& c = cat.simple_end_dims();
  std::optional<Rational> eps;
  for (const auto& q : cat.quotient_dims(index)) {
    long long weight = 0;
    for (size_t i = 0; i < q.size(); ++i) weight += static_cast<long long>(c[i]) * q[i];
    if (weight == 0) continue;
    // |eta(q) - theta(q)| <= |eta - theta|_max * sum_i c_i q_i
    const Rational r = euler_pairing(theta, q, c) / weight;
    if (!eps || r < *eps) eps = r;
  }
  if (!eps) eps = Rational(1);
  return eps;
}

SubcatSet semistable_subcategory(const SemistableQuadruple& q, const TorsionCalculus& calc) {
  SubcatSet w;
  w.members = q.Tbar.members & calc.right_perp(q.T).members;
  return w;
}

}  // namespace torslab
