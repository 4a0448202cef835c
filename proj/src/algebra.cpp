#include "torslab/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace torslab {

namespace {

constexpr size_t kPathCap = 200000;

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool label_less(const QuiverPresentation& q, const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.length() == 0) return a.source < b.source;
  for (int i = 0; i < a.length(); ++i) {
    const auto& la = q.arrows[a.arrows[i]].label;
    const auto& lb = q.arrows[b.arrows[i]].label;
    if (la != lb) return la < lb;
  }
  return false;
}

// All paths of length <= n, ordered by length then label-lexicographically.
std::vector<Path> enumerate_paths(const QuiverPresentation& q, int n) {
  std::vector<Path> all;
  std::vector<Path> level;
  for (int v = 0; v < q.num_vertices(); ++v) level.push_back({v, v, {}});
  all = level;
  for (int len = 1; len <= n; ++len) {
    std::vector<Path> next;
    for (const auto& p : level)
      for (int a = 0; a < q.num_arrows(); ++a)
        if (q.arrows[a].source == p.target) {
          Path e = p;
          e.arrows.push_back(a);
          e.target = q.arrows[a].target;
          next.push_back(std::move(e));
        }
    std::sort(next.begin(), next.end(), [&](const Path& x, const Path& y) { return label_less(q, x, y); });
    if (all.size() + next.size() > kPathCap)
      throw NonAdmissibleError("path enumeration exceeded cap while saturating the path basis");
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
    if (level.empty()) break;
  }
  return all;
}

}  // namespace

Algebra Algebra::build(const Fp& field, QuiverPresentation quiver, int basis_cap) {
  Algebra alg;
  alg.field_ = field;
  alg.quiver_ = std::move(quiver);
  const auto& q = alg.quiver_;
  const int nv = q.num_vertices();

  int max_rel_len = 0;
  for (const auto& r : q.relations)
    for (const auto& t : r.terms) max_rel_len = std::max(max_rel_len, static_cast<int>(t.arrows.size()));

  int n = std::max(1, max_rel_len);
  while (true) {
    std::vector<Path> paths = enumerate_paths(q, n);
    std::map<std::vector<int>, int> col_of;
    std::vector<int> trivial_col(nv);
    const int ncols = static_cast<int>(paths.size());
    // Column order is reversed so pivots land on the largest paths.
    auto column = [&](int path_idx) { return ncols - 1 - path_idx; };
    for (int i = 0; i < ncols; ++i) {
      if (paths[i].length() == 0)
        trivial_col[paths[i].source] = i;
      else
        col_of[paths[i].arrows] = i;
    }

    // Generators u * r * w of the ideal, truncated to length <= n.
    std::vector<std::vector<Elem>> gens;
    for (const auto& rel : q.relations) {
      int min_len = n + 1;
      for (const auto& t : rel.terms) min_len = std::min(min_len, static_cast<int>(t.arrows.size()));
      for (const auto& u : paths) {
        if (u.target != rel.source || u.length() + min_len > n) continue;
        for (const auto& w : paths) {
          if (w.source != rel.target || u.length() + min_len + w.length() > n) continue;
          std::vector<Elem> row(ncols, 0);
          bool nonzero = false;
          for (const auto& t : rel.terms) {
            std::vector<int> word = u.arrows;
            word.insert(word.end(), t.arrows.begin(), t.arrows.end());
            word.insert(word.end(), w.arrows.begin(), w.arrows.end());
            if (static_cast<int>(word.size()) > n) continue;
            const int c = column(col_of.at(word));
            row[c] = field.add(row[c], t.coeff);
            nonzero = true;
          }
          if (nonzero) gens.push_back(std::move(row));
        }
      }
    }

    Matrix w(static_cast<int>(gens.size()), ncols);
    for (size_t r = 0; r < gens.size(); ++r)
      for (int c = 0; c < ncols; ++c) w(static_cast<int>(r), c) = gens[r][c];
    linalg::Echelon e = linalg::rref(field, w);
    std::vector<int> pivot_row(ncols, -1);
    for (size_t r = 0; r < e.pivots.size(); ++r) pivot_row[e.pivots[r]] = static_cast<int>(r);

    std::vector<int> basis_paths;  // indices into paths
    for (int i = 0; i < ncols; ++i)
      if (pivot_row[column(i)] < 0) basis_paths.push_back(i);
    if (static_cast<int>(basis_paths.size()) > basis_cap)
      throw NonAdmissibleError("path basis exceeds cap of " + std::to_string(basis_cap) + " elements; ideal is not admissible");

    std::vector<int> basis_pos(ncols, -1);
    for (size_t k = 0; k < basis_paths.size(); ++k) basis_pos[basis_paths[k]] = static_cast<int>(k);
    const int dim = static_cast<int>(basis_paths.size());

    auto nf_of = [&](int path_idx) {
      AlgElem v(dim, 0);
      const int c = column(path_idx);
      if (pivot_row[c] < 0) {
        v[basis_pos[path_idx]] = 1;
        return v;
      }
      const int r = pivot_row[c];
      for (int k = 0; k < dim; ++k) {
        const Elem x = e.reduced(r, column(basis_paths[k]));
        if (x) v[k] = field.neg(x);
      }
      return v;
    };

    bool saturated = true;
    for (int i = 0; i < ncols && saturated; ++i)
      if (paths[i].length() == n) {
        AlgElem v = nf_of(i);
        saturated = std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
      }

    if (saturated) {
      alg.nilpotency_bound_ = n;
      for (int i : basis_paths) alg.basis_.push_back(paths[i]);
      alg.nf_.clear();
      for (int i = 0; i < ncols; ++i)
        if (paths[i].length() > 0 && paths[i].length() < n) alg.nf_[paths[i].arrows] = nf_of(i);
      break;
    }
    n = n < 16 ? n + 1 : 2 * n;
  }

  const int dim = alg.dim();
  alg.idempotent_index_.assign(nv, -1);
  alg.arrow_index_.assign(q.num_arrows(), -1);
  alg.between_.assign(static_cast<size_t>(nv) * nv, {});
  for (int i = 0; i < dim; ++i) {
    const Path& p = alg.basis_[i];
    if (p.length() == 0) alg.idempotent_index_[p.source] = i;
    if (p.length() == 1) alg.arrow_index_[p.arrows[0]] = i;
    alg.between_[p.source * nv + p.target].push_back(i);
  }
  for (int a = 0; a < q.num_arrows(); ++a)
    if (alg.arrow_index_[a] < 0) throw NonAdmissibleError("arrow " + q.arrows[a].label + " vanishes in the quotient; ideal is not admissible");

  alg.table_.assign(static_cast<size_t>(dim) * dim, {});
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const Path& a = alg.basis_[i];
      const Path& b = alg.basis_[j];
      if (a.target != b.source) continue;
      std::vector<int> word = a.arrows;
      word.insert(word.end(), b.arrows.begin(), b.arrows.end());
      AlgElem v = alg.normal_form(a.source, word);
      auto& slot = alg.table_[static_cast<size_t>(i) * dim + j];
      for (int k = 0; k < dim; ++k)
        if (v[k]) slot.emplace_back(k, v[k]);
    }
  return alg;
}

AlgElem Algebra::normal_form(int source, const std::vector<int>& arrows) const {
  if (arrows.empty()) return unit_vector(idempotent_index_[source]);
  if (static_cast<int>(arrows.size()) >= nilpotency_bound_) return zero();
  auto it = nf_.find(arrows);
  if (it == nf_.end()) return zero();
  return it->second;
}

const std::vector<std::pair<int, Elem>>& Algebra::product(int i, int j) const {
  return table_[static_cast<size_t>(i) * basis_.size() + j];
}

AlgElem Algebra::multiply(const AlgElem& a, const AlgElem& b) const {
  const int d = dim();
  AlgElem out(d, 0);
  const int p = field_.p();
  for (int i = 0; i < d; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < d; ++j) {
      if (!b[j]) continue;
      const int ab = a[i] * b[j];
      for (const auto& [k, c] : product(i, j)) out[k] = static_cast<Elem>((out[k] + ab * c) % p);
    }
  }
  return out;
}

AlgElem Algebra::unit_vector(int i) const {
  AlgElem v = zero();
  v[i] = 1;
  return v;
}

std::string Algebra::path_string(const Path& p) const {
  if (p.arrows.empty()) return "e" + quiver_.vertices[p.source];
  std::string s;
  for (size_t k = 0; k < p.arrows.size(); ++k) {
    if (k) s += ".";
    s += quiver_.arrows[p.arrows[k]].label;
  }
  return s;
}

Algebra load_algebra(std::string_view text, int field_override) {
  QuiverPresentation q;
  int p = 0;
  std::vector<std::string> relation_lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  auto fail = [&](const std::string& msg) { throw ParseError("line " + std::to_string(lineno) + ": " + msg); };
  auto vertex_of = [&](const std::string& label) {
    auto it = std::find(q.vertices.begin(), q.vertices.end(), label);
    if (it == q.vertices.end()) fail("unknown vertex '" + label + "'");
    return static_cast<int>(it - q.vertices.begin());
  };

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    auto words = split_ws(line);
    const std::string& kw = words[0];
    if (kw == "field") {
      if (words.size() != 2 || words[1].rfind("p=", 0) != 0) fail("expected 'field p=<prime>'");
      try {
        p = std::stoi(words[1].substr(2));
      } catch (const std::exception&) {
        fail("bad characteristic '" + words[1] + "'");
      }
      if (!is_prime(p) || p > 13) fail("characteristic must be a prime <= 13");
    } else if (kw == "vertices") {
      if (!q.vertices.empty()) fail("vertices declared twice");
      for (size_t i = 1; i < words.size(); ++i) {
        if (std::find(q.vertices.begin(), q.vertices.end(), words[i]) != q.vertices.end()) fail("duplicate vertex " + words[i]);
        q.vertices.push_back(words[i]);
      }
      if (q.vertices.empty()) fail("no vertices");
    } else if (kw == "arrow") {
      // arrow a: 1 -> 2
      std::string rest = trim(line.substr(5));
      auto colon = rest.find(':');
      auto arrow_pos = rest.find("->");
      if (colon == std::string::npos || arrow_pos == std::string::npos || arrow_pos < colon) fail("expected 'arrow <label>: <src> -> <tgt>'");
      Arrow a;
      a.label = trim(rest.substr(0, colon));
      std::string src = trim(rest.substr(colon + 1, arrow_pos - colon - 1));
      std::string tgt = trim(rest.substr(arrow_pos + 2));
      if (a.label.empty() || a.label.find_first_of(".*+- ") != std::string::npos) fail("bad arrow label '" + a.label + "'");
      for (const auto& other : q.arrows)
        if (other.label == a.label) fail("duplicate arrow " + a.label);
      a.source = vertex_of(src);
      a.target = vertex_of(tgt);
      q.arrows.push_back(a);
    } else if (kw == "relation") {
      relation_lines.push_back(trim(line.substr(8)));
    } else {
      fail("unknown directive '" + kw + "'");
    }
  }
  if (field_override) p = field_override;
  if (p == 0) throw ParseError("missing 'field p=' line");
  if (q.vertices.empty()) throw ParseError("missing 'vertices' line");
  Fp field(p);

  for (const auto& rl : relation_lines) {
    std::string s;
    for (char c : rl)
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    Relation rel;
    size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
      int sign = 1;
      if (s[pos] == '+' || s[pos] == '-') {
        sign = s[pos] == '-' ? -1 : 1;
        ++pos;
      } else if (!first) {
        throw ParseError("relation '" + rl + "': expected '+' or '-'");
      }
      size_t end = s.find_first_of("+-", pos);
      std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
      pos = end == std::string::npos ? s.size() : end;
      first = false;
      long long coeff = 1;
      auto star = term.find('*');
      if (star != std::string::npos) {
        try {
          coeff = std::stoll(term.substr(0, star));
        } catch (const std::exception&) {
          throw ParseError("relation '" + rl + "': bad coefficient");
        }
        term = term.substr(star + 1);
      }
      RelationTerm t;
      t.coeff = field.from_int(sign * coeff);
      std::stringstream ts(term);
      std::string lab;
      while (std::getline(ts, lab, '.')) {
        auto it = std::find_if(q.arrows.begin(), q.arrows.end(), [&](const Arrow& a) { return a.label == lab; });
        if (it == q.arrows.end()) throw ParseError("relation '" + rl + "': unknown arrow '" + lab + "'");
        t.arrows.push_back(static_cast<int>(it - q.arrows.begin()));
      }
      if (t.arrows.size() < 2) throw ParseError("relation '" + rl + "': paths must have length >= 2");
      for (size_t k = 1; k < t.arrows.size(); ++k)
        if (q.arrows[t.arrows[k - 1]].target != q.arrows[t.arrows[k]].source)
          throw ParseError("relation '" + rl + "': path '" + term + "' is not composable");
      const int src = q.arrows[t.arrows.front()].source;
      const int tgt = q.arrows[t.arrows.back()].target;
      if (rel.terms.empty()) {
        rel.source = src;
        rel.target = tgt;
      } else if (rel.source != src || rel.target != tgt) {
        throw ParseError("relation '" + rl + "': paths are not parallel");
      }
      if (t.coeff) rel.terms.push_back(std::move(t));
      else if (rel.terms.empty()) {
        rel.source = src;
        rel.target = tgt;
      }
    }
    if (!rel.terms.empty()) q.relations.push_back(std::move(rel));
  }
  return Algebra::build(field, std::move(q));
}

Algebra load_algebra_file(const std::string& path, int field_override) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open algebra file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_algebra(ss.str(), field_override);
}

}  // namespace torslab
