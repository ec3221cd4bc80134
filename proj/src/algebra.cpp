#include "silt/algebra.hpp"

#include <algorithm>

namespace silt {

namespace {
constexpr size_t kMaxWindowPaths = 100000;
}

int Quiver::vertex_index(const std::string& label) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == label) return int(i);
  return -1;
}

int Quiver::arrow_index(const std::string& name) const {
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return int(i);
  return -1;
}

bool PathWord::operator<(const PathWord& o) const {
  if (length() != o.length()) return length() < o.length();
  if (source != o.source) return source < o.source;
  return arrows < o.arrows;
}

PathWord reverse_word(const PathWord& w) {
  PathWord r;
  r.source = w.target;
  r.target = w.source;
  r.arrows.assign(w.arrows.rbegin(), w.arrows.rend());
  return r;
}

std::string Algebra::basis_name(int k) const {
  const PathWord& w = basis_[k];
  if (w.arrows.empty()) return "e_" + quiver_.vertices[w.source];
  std::string s;
  for (size_t i = 0; i < w.arrows.size(); ++i) {
    if (i) s += "*";
    s += quiver_.arrows[w.arrows[i]].name;
  }
  return s;
}

const std::vector<int>& Algebra::basis_at(int s, int t) const {
  static const std::vector<int> empty;
  auto it = basis_by_pair_.find({s, t});
  return it == basis_by_pair_.end() ? empty : it->second;
}

Vec Algebra::unit_elt() const {
  Vec v = zero_elt();
  for (int i = 0; i < n_vertices(); ++i) v[i] = 1;
  return v;
}

Vec Algebra::idempotent_elt(int v) const {
  Vec x = zero_elt();
  x[idempotent(v)] = 1;
  return x;
}

Vec Algebra::basis_elt(int k) const {
  Vec x = zero_elt();
  x[k] = 1;
  return x;
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
  if (int(x.size()) != dim() || int(y.size()) != dim())
    throw Error(ErrKind::Internal, "element size mismatch");
  Vec r = zero_elt();
  for (int i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y[j] == 0) continue;
      i64 c = field_.mul(field_.reduce(x[i]), field_.reduce(y[j]));
      const Vec& m = mult_[i][j];
      if (m.empty()) continue;
      for (int k = 0; k < dim(); ++k)
        if (m[k]) r[k] = field_.add(r[k], field_.mul(c, m[k]));
    }
  }
  return r;
}

Vec Algebra::path_normal_form(const PathWord& w) const {
  if (w.length() >= cap_) return zero_elt();
  auto it = normal_form_.find(w);
  if (it == normal_form_.end()) throw Error(ErrKind::Internal, "word outside path window");
  return it->second;
}

bool Algebra::is_nakayama() const {
  std::vector<int> outd(n_vertices(), 0), ind(n_vertices(), 0);
  for (const auto& a : quiver_.arrows) {
    ++outd[a.from];
    ++ind[a.to];
  }
  for (int v = 0; v < n_vertices(); ++v)
    if (outd[v] > 1 || ind[v] > 1) return false;
  return true;
}

std::shared_ptr<const Algebra> Algebra::opposite() const {
  std::lock_guard<std::mutex> lk(op_mu_);
  if (auto sp = op_cache_.lock()) return sp;
  Quiver q;
  q.vertices = quiver_.vertices;
  for (const auto& a : quiver_.arrows) q.arrows.push_back({a.name, a.to, a.from});
  std::vector<Relation> rels;
  for (const auto& r : relations_) {
    Relation rr;
    for (const auto& t : r) {
      RelTerm tt;
      tt.coeff = t.coeff;
      tt.arrows.assign(t.arrows.rbegin(), t.arrows.rend());
      rr.push_back(std::move(tt));
    }
    rels.push_back(std::move(rr));
  }
  auto op = build(std::move(q), std::move(rels), cap_, field_.p);
  {
    std::lock_guard<std::mutex> lk2(op->op_mu_);
    op->op_cache_ = shared_from_this();
  }
  op_cache_ = op;
  return op;
}

std::shared_ptr<const Algebra> Algebra::build(Quiver q, std::vector<Relation> rels,
                                              int length_cap, i64 p) {
  if (q.vertices.empty()) throw Error(ErrKind::Parse, "quiver needs at least one vertex");
  for (size_t i = 0; i < q.vertices.size(); ++i)
    for (size_t j = i + 1; j < q.vertices.size(); ++j)
      if (q.vertices[i] == q.vertices[j]) throw Error(ErrKind::Parse, "duplicate vertex label");
  for (size_t i = 0; i < q.arrows.size(); ++i) {
    const auto& a = q.arrows[i];
    if (a.from < 0 || a.from >= int(q.vertices.size()) || a.to < 0 || a.to >= int(q.vertices.size()))
      throw Error(ErrKind::Parse, "arrow endpoint out of range");
    for (size_t j = i + 1; j < q.arrows.size(); ++j)
      if (q.arrows[j].name == a.name) throw Error(ErrKind::Parse, "duplicate arrow name");
  }
  if (length_cap < 2) throw Error(ErrKind::CapTooSmall, "length_cap must be at least 2");

  std::shared_ptr<Algebra> alg(new Algebra(std::move(q), std::move(rels), length_cap, p));
  alg->construct();
  return alg;
}

void Algebra::construct() {
  const int n = n_vertices();
  const int cap = cap_;

  // validate relations; terms must be parallel composable words of length >= 2
  int max_term_len = 0;
  {
    std::vector<Relation> cleaned;
    for (const auto& r : relations_) {
      Relation cr;
      int rs = -1, rt = -1;
      for (const auto& t : r) {
        i64 c = field_.reduce(t.coeff);
        if (t.arrows.size() < 2)
          throw Error(ErrKind::NotAdmissible, "relation term of length < 2");
        int s = -1, e = -1;
        for (size_t i = 0; i < t.arrows.size(); ++i) {
          int a = t.arrows[i];
          if (a < 0 || a >= n_arrows()) throw Error(ErrKind::Parse, "relation uses unknown arrow");
          if (i == 0)
            s = quiver_.arrows[a].from;
          else if (quiver_.arrows[t.arrows[i - 1]].to != quiver_.arrows[a].from)
            throw Error(ErrKind::NotAdmissible, "relation term is not a composable path");
          e = quiver_.arrows[a].to;
        }
        if (rs < 0) {
          rs = s;
          rt = e;
        } else if (rs != s || rt != e) {
          throw Error(ErrKind::NotAdmissible, "relation terms are not parallel");
        }
        max_term_len = std::max(max_term_len, int(t.arrows.size()));
        if (c != 0) cr.push_back({c, t.arrows});
      }
      if (!cr.empty()) cleaned.push_back(std::move(cr));
    }
    relations_ = std::move(cleaned);
  }
  if (max_term_len > cap)
    throw Error(ErrKind::CapTooSmall,
                "length_cap smaller than a relation term; raise length_cap");

  // path window: all composable words of length <= cap
  std::vector<PathWord> window;
  for (int v = 0; v < n; ++v) window.push_back({v, {}, v});
  size_t layer_begin = 0;
  for (int len = 1; len <= cap; ++len) {
    size_t layer_end = window.size();
    for (size_t i = layer_begin; i < layer_end; ++i) {
      for (int a = 0; a < n_arrows(); ++a) {
        if (quiver_.arrows[a].from != window[i].target) continue;
        PathWord w = window[i];
        w.arrows.push_back(a);
        w.target = quiver_.arrows[a].to;
        window.push_back(std::move(w));
        if (window.size() > kMaxWindowPaths)
          throw Error(ErrKind::CapTooSmall, "path window explosion; quiver too wild for this cap");
      }
    }
    layer_begin = layer_end;
  }
  std::sort(window.begin(), window.end());
  std::map<PathWord, int> windex;
  for (size_t i = 0; i < window.size(); ++i) windex[window[i]] = int(i);

  // group window paths per parallel class, elimination order: longest first,
  // lexicographic tie-break
  std::map<std::pair<int, int>, std::vector<int>> cls;
  for (size_t i = 0; i < window.size(); ++i)
    cls[{window[i].source, window[i].target}].push_back(int(i));
  for (auto& [key, v] : cls) {
    (void)key;
    std::sort(v.begin(), v.end(), [&](int x, int y) {
      if (window[x].length() != window[y].length()) return window[x].length() > window[y].length();
      return window[x].arrows < window[y].arrows;
    });
  }

  // span of the ideal inside the window, per class
  std::vector<int> byte_source_begin;  // paths grouped by source / by target
  std::map<int, std::vector<int>> by_target, by_source;
  for (size_t i = 0; i < window.size(); ++i) {
    by_target[window[i].target].push_back(int(i));
    by_source[window[i].source].push_back(int(i));
  }
  (void)byte_source_begin;

  std::map<std::pair<int, int>, std::vector<Vec>> span;  // class -> rows over class paths
  std::map<std::pair<int, int>, std::map<int, int>> posin;  // window idx -> column in class
  for (auto& [key, v] : cls) {
    auto& pm = posin[key];
    for (size_t j = 0; j < v.size(); ++j) pm[v[j]] = int(j);
  }

  for (const auto& r : relations_) {
    int rs = quiver_.arrows[r[0].arrows[0]].from;
    int rt = quiver_.arrows[r[0].arrows.back()].to;
    int minlen = cap;
    for (const auto& t : r) minlen = std::min(minlen, int(t.arrows.size()));
    for (int u : by_target.count(rs) ? by_target[rs] : std::vector<int>{}) {
      for (int v : by_source.count(rt) ? by_source[rt] : std::vector<int>{}) {
        if (window[u].length() + window[v].length() + minlen > cap) continue;
        std::pair<int, int> key{window[u].source, window[v].target};
        Vec row(cls[key].size(), 0);
        bool nonzero = false;
        for (const auto& t : r) {
          int len = window[u].length() + int(t.arrows.size()) + window[v].length();
          if (len > cap) continue;  // dies in the window quotient
          PathWord w;
          w.source = window[u].source;
          w.target = window[v].target;
          w.arrows = window[u].arrows;
          w.arrows.insert(w.arrows.end(), t.arrows.begin(), t.arrows.end());
          w.arrows.insert(w.arrows.end(), window[v].arrows.begin(), window[v].arrows.end());
          auto it = windex.find(w);
          if (it == windex.end()) throw Error(ErrKind::Internal, "window lookup failed");
          int col = posin[key][it->second];
          row[col] = field_.add(row[col], field_.reduce(t.coeff));
          nonzero = true;
        }
        if (nonzero) span[key].push_back(std::move(row));
      }
    }
  }

  // reduce each class; record rref rows and pivot columns
  std::map<std::pair<int, int>, Rref> reduced;
  for (auto& [key, rows] : span) {
    Matrix m = Matrix::from_rows(rows, int(cls[key].size()), field_.p);
    reduced[key] = rref(m);
  }

  auto reduce_unit = [&](const std::pair<int, int>& key, int col) -> Vec {
    // normal form of a class path as a vector over the class columns
    Vec v(cls[key].size(), 0);
    v[col] = 1;
    auto it = reduced.find(key);
    if (it == reduced.end()) return v;
    const Rref& rr = it->second;
    for (size_t i = 0; i < rr.pivots.size(); ++i) {
      int c = rr.pivots[i];
      if (v[c] == 0) continue;
      i64 f = v[c];
      for (int j = 0; j < rr.r.cols; ++j)
        v[j] = field_.sub(v[j], field_.mul(f, rr.r.at(int(i), j)));
    }
    return v;
  };

  // the cap certificate: every path of length == cap must reduce to zero
  for (auto& [key, v] : cls) {
    for (size_t j = 0; j < v.size(); ++j) {
      if (window[v[j]].length() != cap) continue;
      Vec nf = reduce_unit(key, int(j));
      for (i64 x : nf)
        if (x != 0)
          throw Error(ErrKind::CapTooSmall,
                      "a path of length length_cap does not reduce to zero; raise length_cap");
    }
  }

  // surviving basis: non-pivot window paths of length < cap, global order
  std::map<std::pair<int, int>, std::vector<int>> survivors;  // class -> class-column list
  for (auto& [key, v] : cls) {
    std::vector<bool> piv(v.size(), false);
    if (reduced.count(key))
      for (int c : reduced[key].pivots) piv[c] = true;
    for (size_t j = 0; j < v.size(); ++j)
      if (!piv[j] && window[v[j]].length() < cap) survivors[key].push_back(int(j));
  }
  basis_.clear();
  std::map<int, int> winidx_to_basis;
  for (auto& [key, exps] : survivors)
    for (int j : exps) basis_.push_back(window[cls[key][j]]);
  std::sort(basis_.begin(), basis_.end());
  for (size_t i = 0; i < basis_.size(); ++i) winidx_to_basis[windex[basis_[i]]] = int(i);
  basis_by_pair_.clear();
  for (size_t i = 0; i < basis_.size(); ++i)
    basis_by_pair_[{basis_[i].source, basis_[i].target}].push_back(int(i));
  nilpotency_ = 1;
  for (const auto& b : basis_) nilpotency_ = std::max(nilpotency_, b.length() + 1);

  // normal forms for every window path
  normal_form_.clear();
  for (auto& [key, v] : cls) {
    for (size_t j = 0; j < v.size(); ++j) {
      Vec nf = reduce_unit(key, int(j));
      Vec g = Vec(basis_.size(), 0);
      for (size_t c = 0; c < nf.size(); ++c) {
        if (nf[c] == 0) continue;
        auto it = winidx_to_basis.find(v[c]);
        if (it == winidx_to_basis.end())
          throw Error(ErrKind::Internal, "normal form hits a non-basis path");
        g[it->second] = nf[c];
      }
      normal_form_[window[v[j]]] = std::move(g);
    }
  }

  // multiplication table on basis elements
  const int d = dim();
  mult_.assign(d, std::vector<Vec>(d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (basis_[i].target != basis_[j].source) continue;  // empty => zero
      if (basis_[i].length() + basis_[j].length() >= cap) continue;
      PathWord w;
      w.source = basis_[i].source;
      w.target = basis_[j].target;
      w.arrows = basis_[i].arrows;
      w.arrows.insert(w.arrows.end(), basis_[j].arrows.begin(), basis_[j].arrows.end());
      mult_[i][j] = path_normal_form(w);
    }
  }

  if (2 * d >= field_.p)
    throw Error(ErrKind::FieldTooSmall, "modulus must exceed twice the algebra dimension");
}

}  // namespace silt
