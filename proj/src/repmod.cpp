#include "silt/repmod.hpp"

#include <algorithm>
#include <numeric>

namespace silt {

int Module::total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

Module zero_module(const AlgebraPtr& a) {
  Module m;
  m.alg = a;
  m.dims.assign(a->n_vertices(), 0);
  for (const auto& ar : a->quiver().arrows)
    m.arrow_maps.push_back(Matrix(m.dims[ar.from], m.dims[ar.to], a->p()));
  return m;
}

Module simple(const AlgebraPtr& a, int v) {
  Module m = zero_module(a);
  m.dims[v] = 1;
  for (int i = 0; i < a->n_arrows(); ++i) {
    const auto& ar = a->quiver().arrows[i];
    m.arrow_maps[i] = Matrix(m.dims[ar.from], m.dims[ar.to], a->p());
  }
  return m;
}

Matrix path_action(const Module& m, const PathWord& w) {
  Matrix act = Matrix::identity(m.dims[w.source], m.alg->p());
  for (int a : w.arrows) act = mul(act, m.arrow_maps[a]);
  return act;
}

void validate_module(const Module& m) {
  const auto& q = m.alg->quiver();
  if (int(m.dims.size()) != m.alg->n_vertices() || int(m.arrow_maps.size()) != m.alg->n_arrows())
    throw Error(ErrKind::Parse, "module shape does not match the quiver");
  for (int a = 0; a < m.alg->n_arrows(); ++a) {
    const Matrix& mt = m.arrow_maps[a];
    if (mt.rows != m.dims[q.arrows[a].from] || mt.cols != m.dims[q.arrows[a].to] || mt.p != m.alg->p())
      throw Error(ErrKind::Parse, "arrow matrix shape mismatch");
  }
  for (const auto& rel : m.alg->relations()) {
    int s = q.arrows[rel[0].arrows[0]].from;
    int t = q.arrows[rel[0].arrows.back()].to;
    Matrix sum(m.dims[s], m.dims[t], m.alg->p());
    for (const auto& term : rel) {
      PathWord w{s, term.arrows, t};
      sum = add(sum, scale(term.coeff, path_action(m, w)));
    }
    if (!is_zero(sum)) throw Error(ErrKind::Parse, "relations do not annihilate the module");
  }
  // Length-cap paths must act by zero too, otherwise the action only factors
  // through the free path algebra, not through this quotient.
  std::vector<Matrix> layer;
  for (int v = 0; v < m.alg->n_vertices(); ++v)
    layer.push_back(Matrix::identity(m.dims[v], m.alg->p()));
  for (int step = 0; step < m.alg->length_cap(); ++step) {
    std::vector<Matrix> next;
    for (int v = 0; v < m.alg->n_vertices(); ++v) next.push_back(Matrix(0, m.dims[v], m.alg->p()));
    for (int a = 0; a < m.alg->n_arrows(); ++a)
      next[q.arrows[a].to] =
          vstack(next[q.arrows[a].to], mul(layer[q.arrows[a].from], m.arrow_maps[a]));
    for (int v = 0; v < m.alg->n_vertices(); ++v) layer[v] = row_span_basis(next[v]);
  }
  for (const auto& l : layer)
    if (l.rows != 0) throw Error(ErrKind::Parse, "a maximal-length path acts nontrivially");
}

ModuleMap zero_map(const Module& src, const Module& tgt) {
  ModuleMap f{src, tgt, {}};
  for (int v = 0; v < src.alg->n_vertices(); ++v)
    f.blocks.push_back(Matrix(src.dims[v], tgt.dims[v], src.alg->p()));
  return f;
}

ModuleMap identity_map(const Module& m) {
  ModuleMap f{m, m, {}};
  for (int v = 0; v < m.alg->n_vertices(); ++v)
    f.blocks.push_back(Matrix::identity(m.dims[v], m.alg->p()));
  return f;
}

ModuleMap compose(const ModuleMap& f, const ModuleMap& g) {
  if (!(f.target == g.source)) throw Error(ErrKind::Internal, "compose: middle modules differ");
  ModuleMap h{f.source, g.target, {}};
  for (size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(mul(f.blocks[v], g.blocks[v]));
  return h;
}

ModuleMap map_add(const ModuleMap& f, const ModuleMap& g) {
  ModuleMap h = f;
  for (size_t v = 0; v < f.blocks.size(); ++v) h.blocks[v] = add(f.blocks[v], g.blocks[v]);
  return h;
}

ModuleMap map_scale(i64 c, const ModuleMap& f) {
  ModuleMap h = f;
  for (auto& b : h.blocks) b = scale(c, b);
  return h;
}

ModuleMap map_combo(const std::vector<ModuleMap>& basis, const Vec& coeffs) {
  if (basis.empty()) throw Error(ErrKind::Internal, "map_combo over empty basis");
  if (basis.size() != coeffs.size()) throw Error(ErrKind::Internal, "map_combo size mismatch");
  ModuleMap h = map_scale(coeffs[0], basis[0]);
  for (size_t i = 1; i < basis.size(); ++i) h = map_add(h, map_scale(coeffs[i], basis[i]));
  return h;
}

bool is_module_map(const ModuleMap& f) {
  const auto& q = f.source.alg->quiver();
  for (int a = 0; a < f.source.alg->n_arrows(); ++a) {
    Matrix lhs = mul(f.source.arrow_maps[a], f.blocks[q.arrows[a].to]);
    Matrix rhs = mul(f.blocks[q.arrows[a].from], f.target.arrow_maps[a]);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

bool is_injective_map(const ModuleMap& f) {
  for (const auto& b : f.blocks)
    if (rank(b) != b.rows) return false;
  return true;
}

bool is_surjective_map(const ModuleMap& f) {
  for (const auto& b : f.blocks)
    if (rank(b) != b.cols) return false;
  return true;
}

bool is_zero_map(const ModuleMap& f) {
  for (const auto& b : f.blocks)
    if (!is_zero(b)) return false;
  return true;
}

Vec flatten_map(const ModuleMap& f) {
  Vec v;
  for (const auto& b : f.blocks) v.insert(v.end(), b.a.begin(), b.a.end());
  return v;
}

Matrix hom_system(const Module& m, const Module& n) {
  if (m.alg != n.alg) throw Error(ErrKind::Internal, "hom over different algebras");
  const auto& q = m.alg->quiver();
  const i64 p = m.alg->p();
  const int nv = m.alg->n_vertices();
  std::vector<int> offset(nv + 1, 0);
  for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + m.dims[v] * n.dims[v];
  const int unknowns = offset[nv];

  int eqs = 0;
  for (int a = 0; a < m.alg->n_arrows(); ++a)
    eqs += m.dims[q.arrows[a].from] * n.dims[q.arrows[a].to];
  Matrix sys(eqs, unknowns, p);
  Fp fp(p);
  int row = 0;
  for (int a = 0; a < m.alg->n_arrows(); ++a) {
    int i = q.arrows[a].from, j = q.arrows[a].to;
    const Matrix& ma = m.arrow_maps[a];
    const Matrix& na = n.arrow_maps[a];
    for (int r = 0; r < m.dims[i]; ++r)
      for (int c = 0; c < n.dims[j]; ++c) {
        // (ma * f_j)[r,c] - (f_i * na)[r,c] = 0
        for (int k = 0; k < m.dims[j]; ++k)
          sys.at(row, offset[j] + k * n.dims[j] + c) =
              fp.add(sys.at(row, offset[j] + k * n.dims[j] + c), ma.at(r, k));
        for (int k = 0; k < n.dims[i]; ++k)
          sys.at(row, offset[i] + r * n.dims[i] + k) =
              fp.sub(sys.at(row, offset[i] + r * n.dims[i] + k), na.at(k, c));
        ++row;
      }
  }
  return sys;
}

std::vector<ModuleMap> hom_basis(const Module& m, const Module& n) {
  const int nv = m.alg->n_vertices();
  std::vector<int> offset(nv + 1, 0);
  for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + m.dims[v] * n.dims[v];
  Matrix sys = hom_system(m, n);
  std::vector<ModuleMap> basis;
  for (const Vec& x : kernel_basis(sys)) {
    ModuleMap f = zero_map(m, n);
    for (int v = 0; v < nv; ++v)
      for (int r = 0; r < m.dims[v]; ++r)
        for (int c = 0; c < n.dims[v]; ++c) f.blocks[v].at(r, c) = x[offset[v] + r * n.dims[v] + c];
    basis.push_back(std::move(f));
  }
  return basis;
}

int hom_dim(const Module& m, const Module& n) { return int(hom_basis(m, n).size()); }

// submodule spanned by the given independent rows (must be action-closed)
static SubModule submodule_from_rows(const Module& m, const std::vector<Matrix>& rows) {
  const auto& q = m.alg->quiver();
  SubModule s;
  s.sub.alg = m.alg;
  s.sub.dims.resize(m.alg->n_vertices());
  for (int v = 0; v < m.alg->n_vertices(); ++v) s.sub.dims[v] = rows[v].rows;
  for (int a = 0; a < m.alg->n_arrows(); ++a) {
    int i = q.arrows[a].from, j = q.arrows[a].to;
    auto x = row_solve(rows[j], mul(rows[i], m.arrow_maps[a]));
    if (!x) throw Error(ErrKind::Internal, "row span is not action-closed");
    s.sub.arrow_maps.push_back(*x);
  }
  s.incl = ModuleMap{s.sub, m, rows};
  return s;
}

SubModule kernel(const ModuleMap& f) {
  std::vector<Matrix> rows;
  for (size_t v = 0; v < f.blocks.size(); ++v) {
    auto rk = row_kernel(f.blocks[v]);
    rows.push_back(Matrix::from_rows(rk, f.blocks[v].rows, f.blocks[v].p));
  }
  return submodule_from_rows(f.source, rows);
}

SubModule image(const ModuleMap& f) {
  std::vector<Matrix> rows;
  for (size_t v = 0; v < f.blocks.size(); ++v) rows.push_back(row_span_basis(f.blocks[v]));
  return submodule_from_rows(f.target, rows);
}

Quotient cokernel(const ModuleMap& f) {
  const Module& n = f.target;
  const auto& q = n.alg->quiver();
  Quotient out;
  out.quot.alg = n.alg;
  out.quot.dims.resize(n.alg->n_vertices());
  std::vector<Matrix> projs;
  for (int v = 0; v < n.alg->n_vertices(); ++v) {
    Matrix r = row_span_basis(f.blocks[v]);
    auto cols = kernel_basis(r);  // columns spanning {x : R x = 0}
    Matrix pr(n.dims[v], int(cols.size()), n.alg->p());
    for (size_t c = 0; c < cols.size(); ++c)
      for (int i = 0; i < n.dims[v]; ++i) pr.at(i, int(c)) = cols[c][i];
    out.quot.dims[v] = pr.cols;
    projs.push_back(std::move(pr));
  }
  for (int a = 0; a < n.alg->n_arrows(); ++a) {
    int i = q.arrows[a].from, j = q.arrows[a].to;
    auto x = solve_matrix(projs[i], mul(n.arrow_maps[a], projs[j]));
    if (!x) throw Error(ErrKind::Internal, "cokernel action does not descend");
    out.quot.arrow_maps.push_back(*x);
  }
  out.proj = ModuleMap{n, out.quot, projs};
  return out;
}

SubModule radical(const Module& m) {
  const auto& q = m.alg->quiver();
  std::vector<Matrix> rows;
  for (int v = 0; v < m.alg->n_vertices(); ++v) {
    Matrix stack(0, m.dims[v], m.alg->p());
    for (int a = 0; a < m.alg->n_arrows(); ++a)
      if (q.arrows[a].to == v) stack = vstack(stack, m.arrow_maps[a]);
    rows.push_back(row_span_basis(stack));
  }
  return submodule_from_rows(m, rows);
}

Quotient top(const Module& m) { return cokernel(radical(m).incl); }

Sum direct_sum(const AlgebraPtr& a, const std::vector<Module>& parts) {
  Sum s;
  s.mod.alg = a;
  s.mod.dims.assign(a->n_vertices(), 0);
  std::vector<std::vector<int>> off(parts.size(), std::vector<int>(a->n_vertices(), 0));
  for (size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].alg != a) throw Error(ErrKind::Internal, "direct sum across algebras");
    for (int v = 0; v < a->n_vertices(); ++v) {
      off[k][v] = s.mod.dims[v];
      s.mod.dims[v] += parts[k].dims[v];
    }
  }
  const auto& q = a->quiver();
  for (int ar = 0; ar < a->n_arrows(); ++ar) {
    int i = q.arrows[ar].from, j = q.arrows[ar].to;
    Matrix blk(s.mod.dims[i], s.mod.dims[j], a->p());
    for (size_t k = 0; k < parts.size(); ++k) {
      const Matrix& pm = parts[k].arrow_maps[ar];
      for (int r = 0; r < pm.rows; ++r)
        for (int c = 0; c < pm.cols; ++c) blk.at(off[k][i] + r, off[k][j] + c) = pm.at(r, c);
    }
    s.mod.arrow_maps.push_back(std::move(blk));
  }
  for (size_t k = 0; k < parts.size(); ++k) {
    ModuleMap in = zero_map(parts[k], s.mod);
    ModuleMap pr = zero_map(s.mod, parts[k]);
    for (int v = 0; v < a->n_vertices(); ++v)
      for (int r = 0; r < parts[k].dims[v]; ++r) {
        in.blocks[v].at(r, off[k][v] + r) = 1;
        pr.blocks[v].at(off[k][v] + r, r) = 1;
      }
    s.inject.push_back(std::move(in));
    s.project.push_back(std::move(pr));
  }
  return s;
}

ModuleMap direct_sum_map(const Sum& src, const Sum& tgt,
                         const std::vector<std::vector<ModuleMap>>& comp) {
  ModuleMap f = zero_map(src.mod, tgt.mod);
  for (size_t i = 0; i < comp.size(); ++i)
    for (size_t j = 0; j < comp[i].size(); ++j)
      f = map_add(f, compose(compose(src.project[i], comp[i][j]), tgt.inject[j]));
  return f;
}

ProjSum proj_sum(const AlgebraPtr& a, const std::vector<int>& vertices) {
  ProjSum ps;
  ps.vertices = vertices;
  ps.mod.alg = a;
  ps.mod.dims.assign(a->n_vertices(), 0);
  std::vector<std::vector<int>> off(vertices.size(), std::vector<int>(a->n_vertices(), 0));
  for (size_t k = 0; k < vertices.size(); ++k)
    for (int v = 0; v < a->n_vertices(); ++v) {
      off[k][v] = ps.mod.dims[v];
      ps.mod.dims[v] += int(a->basis_at(vertices[k], v).size());
    }
  const auto& q = a->quiver();
  for (int ar = 0; ar < a->n_arrows(); ++ar) {
    int i = q.arrows[ar].from, j = q.arrows[ar].to;
    Matrix blk(ps.mod.dims[i], ps.mod.dims[j], a->p());
    for (size_t k = 0; k < vertices.size(); ++k) {
      const auto& src_paths = a->basis_at(vertices[k], i);
      const auto& tgt_paths = a->basis_at(vertices[k], j);
      for (size_t r = 0; r < src_paths.size(); ++r) {
        PathWord w = a->basis_paths()[src_paths[r]];
        w.arrows.push_back(ar);
        w.target = j;
        Vec nf = a->path_normal_form(w);
        for (size_t c = 0; c < tgt_paths.size(); ++c)
          blk.at(off[k][i] + int(r), off[k][j] + int(c)) = nf[tgt_paths[c]];
      }
    }
    ps.mod.arrow_maps.push_back(std::move(blk));
  }
  for (size_t k = 0; k < vertices.size(); ++k) {
    const auto& own = a->basis_at(vertices[k], vertices[k]);
    int pos = -1;
    for (size_t i = 0; i < own.size(); ++i)
      if (own[i] == a->idempotent(vertices[k])) pos = int(i);
    if (pos < 0) throw Error(ErrKind::Internal, "projective generator not found");
    ps.gen_pos.push_back(off[k][vertices[k]] + pos);
  }
  return ps;
}

Module regular_module(const AlgebraPtr& a) { return regular_proj(a).mod; }

ProjSum regular_proj(const AlgebraPtr& a) {
  std::vector<int> verts(a->n_vertices());
  std::iota(verts.begin(), verts.end(), 0);
  return proj_sum(a, verts);
}

ModuleMap hom_from_generators(const ProjSum& src, const Module& tgt,
                              const std::vector<Vec>& gen_rows) {
  const AlgebraPtr& a = src.mod.alg;
  if (gen_rows.size() != src.vertices.size())
    throw Error(ErrKind::Internal, "one generator row per projective copy expected");
  ModuleMap f = zero_map(src.mod, tgt);
  std::vector<int> cursor(a->n_vertices(), 0);
  for (size_t k = 0; k < src.vertices.size(); ++k) {
    int av = src.vertices[k];
    if (int(gen_rows[k].size()) != tgt.dims[av])
      throw Error(ErrKind::Internal, "generator row length mismatch");
    Matrix x = Matrix::from_rows({gen_rows[k]}, tgt.dims[av], a->p());
    for (int v = 0; v < a->n_vertices(); ++v) {
      const auto& paths = a->basis_at(av, v);
      for (size_t r = 0; r < paths.size(); ++r) {
        PathWord w = a->basis_paths()[paths[r]];
        Matrix img = mul(x, path_action(tgt, w));
        for (int c = 0; c < tgt.dims[v]; ++c)
          f.blocks[v].at(cursor[v] + int(r), c) = img.at(0, c);
      }
      cursor[v] += int(paths.size());
    }
  }
  return f;
}

Cover projective_cover(const Module& m) {
  const AlgebraPtr& a = m.alg;
  Quotient t = top(m);
  std::vector<int> verts;
  std::vector<Vec> gens;
  for (int v = 0; v < a->n_vertices(); ++v) {
    for (int c = 0; c < t.quot.dims[v]; ++c) {
      Matrix unit(1, t.quot.dims[v], a->p());
      unit.at(0, c) = 1;
      auto x = row_solve(t.proj.blocks[v], unit);
      if (!x) throw Error(ErrKind::Internal, "top projection not surjective");
      verts.push_back(v);
      gens.push_back(x->row(0));
    }
  }
  Cover cov;
  cov.p = proj_sum(a, verts);
  cov.map = hom_from_generators(cov.p, m, gens);
  if (!is_surjective_map(cov.map)) throw Error(ErrKind::Internal, "cover map not surjective");
  SubModule rad = radical(cov.p.mod);
  SubModule ker = kernel(cov.map);
  for (int v = 0; v < a->n_vertices(); ++v)
    for (int r = 0; r < ker.sub.dims[v]; ++r)
      if (!in_row_space(rad.incl.blocks[v], ker.incl.blocks[v].row(r)))
        throw Error(ErrKind::Internal, "cover kernel escapes the radical");
  return cov;
}

std::vector<std::vector<Vec>> extract_entries(const ProjSum& src, const ProjSum& tgt,
                                              const ModuleMap& d) {
  const AlgebraPtr& a = src.mod.alg;
  std::vector<std::vector<Vec>> entries(src.vertices.size(),
                                        std::vector<Vec>(tgt.vertices.size(), a->zero_elt()));
  for (size_t i = 0; i < src.vertices.size(); ++i) {
    int av = src.vertices[i];
    Vec genimg = d.blocks[av].row(src.gen_pos[i]);
    // split the image row at vertex av into the target copies' path blocks
    int cursor = 0;
    for (size_t j = 0; j < tgt.vertices.size(); ++j) {
      const auto& paths = a->basis_at(tgt.vertices[j], av);
      Vec elt = a->zero_elt();
      for (size_t c = 0; c < paths.size(); ++c) elt[paths[c]] = genimg[cursor + int(c)];
      cursor += int(paths.size());
      entries[i][j] = std::move(elt);
    }
    if (cursor != int(genimg.size())) throw Error(ErrKind::Internal, "entry extraction misaligned");
  }
  return entries;
}

Presentation make_presentation(const AlgebraPtr& a, const std::vector<int>& pm1_verts,
                               const std::vector<int>& p0_verts,
                               const std::vector<std::vector<Vec>>& entries) {
  Presentation pr;
  pr.pm1 = proj_sum(a, pm1_verts);
  pr.p0 = proj_sum(a, p0_verts);
  pr.entries = entries;
  std::vector<Vec> gens;
  for (size_t k = 0; k < pm1_verts.size(); ++k) {
    int av = pm1_verts[k];
    Vec row(pr.p0.mod.dims[av], 0);
    int cursor = 0;
    for (size_t j = 0; j < p0_verts.size(); ++j) {
      const auto& paths = a->basis_at(p0_verts[j], av);
      const Vec& elt = entries[k][j];
      for (size_t c = 0; c < paths.size(); ++c) row[cursor + int(c)] = a->field().reduce(elt[paths[c]]);
      // entries must live in the parallel class from the target copy's vertex
      // to the source copy's vertex
      for (int g = 0; g < a->dim(); ++g)
        if (a->field().reduce(elt[g]) != 0 &&
            (a->basis_source(g) != p0_verts[j] || a->basis_target(g) != av))
          throw Error(ErrKind::Parse, "presentation entry outside its parallel class");
      cursor += int(paths.size());
    }
    gens.push_back(std::move(row));
  }
  pr.map = hom_from_generators(pr.pm1, pr.p0.mod, gens);
  return pr;
}

Presentation direct_sum_pres(const Presentation& x, const Presentation& y) {
  const AlgebraPtr& a = x.pm1.mod.alg;
  std::vector<int> pm1v = x.pm1.vertices, p0v = x.p0.vertices;
  pm1v.insert(pm1v.end(), y.pm1.vertices.begin(), y.pm1.vertices.end());
  p0v.insert(p0v.end(), y.p0.vertices.begin(), y.p0.vertices.end());
  std::vector<std::vector<Vec>> entries(pm1v.size(), std::vector<Vec>(p0v.size(), a->zero_elt()));
  for (size_t i = 0; i < x.pm1.vertices.size(); ++i)
    for (size_t j = 0; j < x.p0.vertices.size(); ++j) entries[i][j] = x.entries[i][j];
  for (size_t i = 0; i < y.pm1.vertices.size(); ++i)
    for (size_t j = 0; j < y.p0.vertices.size(); ++j)
      entries[x.pm1.vertices.size() + i][x.p0.vertices.size() + j] = y.entries[i][j];
  return make_presentation(a, pm1v, p0v, entries);
}

MinPres min_presentation_full(const Module& m) {
  MinPres mp;
  Cover c0 = projective_cover(m);
  mp.cover = c0.map;
  mp.ker = kernel(c0.map);
  Cover c1 = projective_cover(mp.ker.sub);
  mp.ker_pre = c1.map;
  ModuleMap d = compose(c1.map, mp.ker.incl);
  mp.pres.pm1 = c1.p;
  mp.pres.p0 = c0.p;
  mp.pres.map = d;
  mp.pres.entries = extract_entries(c1.p, c0.p, d);
  return mp;
}

Presentation min_presentation(const Module& m) { return min_presentation_full(m).pres; }

ExtSpace ext1(const Module& m, const Module& n) {
  ExtSpace es;
  es.m = m;
  es.n = n;
  Cover c0 = projective_cover(m);
  es.cover = c0.map;
  es.k = kernel(c0.map);
  auto hb_kn = hom_basis(es.k.sub, n);
  auto hb_pn = hom_basis(c0.p.mod, n);
  int width = 0;
  for (int v = 0; v < m.alg->n_vertices(); ++v) width += es.k.sub.dims[v] * n.dims[v];
  Matrix span(0, width, m.alg->p());
  for (const auto& g : hb_pn)
    span = vstack(span, Matrix::from_rows({flatten_map(compose(es.k.incl, g))}, width, m.alg->p()));
  Matrix reduced = row_span_basis(span);
  for (const auto& h : hb_kn) {
    Vec fl = flatten_map(h);
    if (!in_row_space(reduced, fl)) {
      es.cocycles.push_back(h);
      reduced = row_span_basis(vstack(reduced, Matrix::from_rows({fl}, width, m.alg->p())));
    }
  }
  es.dim = int(es.cocycles.size());
  return es;
}

Extension middle_term(const ExtSpace& ext, const Vec& coeffs) {
  const AlgebraPtr& a = ext.m.alg;
  ModuleMap f = ext.cocycles.empty() ? zero_map(ext.k.sub, ext.n) : map_combo(ext.cocycles, coeffs);
  Sum np = direct_sum(a, {ext.n, ext.cover.source});
  ModuleMap g = map_add(compose(f, np.inject[0]), map_scale(-1, compose(ext.k.incl, np.inject[1])));
  Quotient e = cokernel(g);
  Extension out;
  out.e = e.quot;
  out.incl_n = compose(np.inject[0], e.proj);
  // induced e ->> m: the unique solution of proj ; out = (0, cover)
  ModuleMap h = compose(np.project[1], ext.cover);
  out.proj_m = zero_map(e.quot, ext.m);
  for (int v = 0; v < a->n_vertices(); ++v) {
    auto x = solve_matrix(e.proj.blocks[v], h.blocks[v]);
    if (!x) throw Error(ErrKind::Internal, "extension projection does not descend");
    out.proj_m.blocks[v] = *x;
  }
  if (!is_injective_map(out.incl_n) || !is_surjective_map(out.proj_m) ||
      !is_zero_map(compose(out.incl_n, out.proj_m)) ||
      out.e.total_dim() != ext.n.total_dim() + ext.m.total_dim())
    throw Error(ErrKind::Internal, "middle term is not a short exact sequence");
  return out;
}

Module dual_module(const Module& m) {
  auto op = m.alg->opposite();
  Module d;
  d.alg = op;
  d.dims = m.dims;
  // op arrow k reverses arrow k of the original quiver
  for (int a = 0; a < m.alg->n_arrows(); ++a) d.arrow_maps.push_back(transpose(m.arrow_maps[a]));
  return d;
}

static Vec reverse_elt(const AlgebraPtr& a, const AlgebraPtr& op, const Vec& x) {
  Vec out = op->zero_elt();
  Fp f = op->field();
  for (int k = 0; k < a->dim(); ++k) {
    if (x[k] % a->p() == 0) continue;
    Vec nf = op->path_normal_form(reverse_word(a->basis_paths()[k]));
    for (int t = 0; t < op->dim(); ++t) out[t] = f.add(out[t], f.mul(f.reduce(x[k]), nf[t]));
  }
  return out;
}

Module transpose_module(const Module& m) {
  const AlgebraPtr& a = m.alg;
  auto op = a->opposite();
  MinPres mp = min_presentation_full(m);
  std::vector<std::vector<Vec>> entries(mp.pres.p0.vertices.size(),
                                        std::vector<Vec>(mp.pres.pm1.vertices.size(), op->zero_elt()));
  for (size_t i = 0; i < mp.pres.pm1.vertices.size(); ++i)
    for (size_t j = 0; j < mp.pres.p0.vertices.size(); ++j)
      entries[j][i] = reverse_elt(a, op, mp.pres.entries[i][j]);
  Presentation tp = make_presentation(op, mp.pres.p0.vertices, mp.pres.pm1.vertices, entries);
  return cokernel(tp.map).quot;
}

Module tau(const Module& m) { return dual_module(transpose_module(m)); }

Module tau_minus(const Module& m) { return transpose_module(dual_module(m)); }

Module injective(const AlgebraPtr& a, int v) { return dual_module(projective(a->opposite(), v)); }

Module projective(const AlgebraPtr& a, int v) { return proj_sum(a, {v}).mod; }

SubModule trace(const Module& t, const Module& m) {
  auto hb = hom_basis(t, m);
  std::vector<Matrix> rows;
  for (int v = 0; v < m.alg->n_vertices(); ++v) {
    Matrix stack(0, m.dims[v], m.alg->p());
    for (const auto& f : hb) stack = vstack(stack, f.blocks[v]);
    rows.push_back(row_span_basis(stack));
  }
  return submodule_from_rows(m, rows);
}

std::vector<Vec> annihilator(const Module& m) {
  const AlgebraPtr& a = m.alg;
  // group basis elements by parallel class so parallel paths can cancel
  Matrix sys(0, a->dim(), a->p());
  for (int s = 0; s < a->n_vertices(); ++s)
    for (int t = 0; t < a->n_vertices(); ++t) {
      const auto& ks = a->basis_at(s, t);
      if (ks.empty() || m.dims[s] == 0 || m.dims[t] == 0) continue;
      std::vector<Matrix> acts;
      for (int k : ks) acts.push_back(path_action(m, a->basis_paths()[k]));
      Matrix block(m.dims[s] * m.dims[t], a->dim(), a->p());
      for (size_t ki = 0; ki < ks.size(); ++ki)
        for (int r = 0; r < m.dims[s]; ++r)
          for (int c = 0; c < m.dims[t]; ++c) block.at(r * m.dims[t] + c, ks[ki]) = acts[ki].at(r, c);
      sys = vstack(sys, block);
    }
  return kernel_basis(sys);
}

bool is_faithful(const Module& m) { return annihilator(m).empty(); }

bool is_sincere(const Module& m) {
  for (int d : m.dims)
    if (d == 0) return false;
  return true;
}

bool is_isomorphic_structural(const Module& m, const Module& n, std::uint64_t seed, int samples) {
  if (m.alg != n.alg || m.dims != n.dims) return false;
  if (m.total_dim() == 0) return true;
  auto hb = hom_basis(m, n);
  if (hb.empty()) return false;
  auto invertible = [&](const ModuleMap& f) {
    for (const auto& b : f.blocks)
      if (rank(b) != b.rows) return false;
    return true;
  };
  for (const auto& f : hb)
    if (invertible(f)) return true;
  Rng rng(seed);
  for (int s = 0; s < samples; ++s)
    if (invertible(map_combo(hb, random_vec(rng, int(hb.size()), m.alg->p())))) return true;
  return false;
}

}  // namespace silt
