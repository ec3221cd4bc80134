#include "silt/indec.hpp"

#include <algorithm>
#include <numeric>

namespace silt {

IndStrategy strategy_from_name(const std::string& name) {
  if (name == "hereditary-knitting") return IndStrategy::HereditaryKnitting;
  if (name == "nakayama-intervals") return IndStrategy::NakayamaIntervals;
  if (name == "user-supplied") return IndStrategy::UserSupplied;
  throw Error(ErrKind::Parse, "unknown enumeration strategy: " + name);
}

std::string strategy_name(IndStrategy s) {
  switch (s) {
    case IndStrategy::HereditaryKnitting: return "hereditary-knitting";
    case IndStrategy::NakayamaIntervals: return "nakayama-intervals";
    case IndStrategy::UserSupplied: return "user-supplied";
  }
  throw Error(ErrKind::Internal, "bad strategy value");
}

int Decomposition::total() const {
  return std::accumulate(multiplicities.begin(), multiplicities.end(), 0);
}

static ModuleMap map_power(const ModuleMap& f, int n) {
  ModuleMap acc = identity_map(f.source);
  for (int i = 0; i < n; ++i) acc = compose(acc, f);
  return acc;
}

static bool is_invertible_endo(const ModuleMap& f) {
  for (const auto& b : f.blocks)
    if (rank(b) != b.rows) return false;
  return true;
}

static bool is_nilpotent_endo(const ModuleMap& f) {
  return is_zero_map(map_power(f, f.source.total_dim()));
}

bool is_indecomposable_certificate(const Module& m, std::uint64_t seed, int samples) {
  if (m.total_dim() == 0) return false;
  auto basis = hom_basis(m, m);
  if (basis.size() == 1) return true;
  std::vector<ModuleMap> probes = basis;
  Rng rng(seed);
  for (int s = 0; s < samples; ++s)
    probes.push_back(map_combo(basis, random_vec(rng, int(basis.size()), m.alg->p())));
  for (const auto& f : probes)
    if (!is_invertible_endo(f) && !is_nilpotent_endo(f)) return false;
  return true;
}

std::pair<int, int> end_ring_dims(const Module& m) {
  auto basis = hom_basis(m, m);
  int k = int(basis.size());
  Matrix form(k, k, m.alg->p());
  Fp f(m.alg->p());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      i64 tr = 0;
      for (size_t v = 0; v < basis[i].blocks.size(); ++v) {
        Matrix prod = mul(basis[i].blocks[v], basis[j].blocks[v]);
        for (int d = 0; d < prod.rows; ++d) tr = f.add(tr, prod.at(d, d));
      }
      form.at(i, j) = tr;
    }
  return {k, k - rank(form)};
}

namespace {

// eigenvalues in F_p of the total matrix of an endomorphism, via the
// characteristic polynomial (Newton's identities; p far exceeds the degree)
std::vector<i64> endo_eigenvalues(const ModuleMap& f) {
  const i64 p = f.source.alg->p();
  Fp fp(p);
  int d = f.source.total_dim();
  Matrix total(d, d, p);
  int off = 0;
  for (const auto& b : f.blocks) {
    for (int r = 0; r < b.rows; ++r)
      for (int c = 0; c < b.cols; ++c) total.at(off + r, off + c) = b.at(r, c);
    off += b.rows;
  }
  std::vector<i64> psum(d + 1, 0);
  Matrix pw = Matrix::identity(d, p);
  for (int k = 1; k <= d; ++k) {
    pw = mul(pw, total);
    i64 tr = 0;
    for (int i = 0; i < d; ++i) tr = fp.add(tr, pw.at(i, i));
    psum[k] = tr;
  }
  std::vector<i64> e(d + 1, 0);
  e[0] = 1;
  for (int k = 1; k <= d; ++k) {
    i64 acc = 0;
    for (int i = 1; i <= k; ++i) {
      i64 term = fp.mul(e[k - i], psum[i]);
      acc = (i % 2 == 1) ? fp.add(acc, term) : fp.sub(acc, term);
    }
    e[k] = fp.mul(acc, fp.inv(fp.reduce(k)));
  }
  // char poly: sum_k (-1)^k e_k x^(d-k); scan the field for roots
  std::vector<i64> roots;
  for (i64 lam = 0; lam < p && int(roots.size()) < d; ++lam) {
    i64 val = 0;
    for (int k = 0; k <= d; ++k) {
      val = fp.mul(val, lam);
      i64 c = e[k];
      val = (k % 2 == 0) ? fp.add(val, c) : fp.sub(val, c);
    }
    if (val == 0) roots.push_back(lam);
  }
  return roots;
}

}  // namespace

std::vector<Module> fitting_split(const Module& m, std::uint64_t seed, int samples) {
  if (m.total_dim() == 0) return {};
  auto basis = hom_basis(m, m);
  if (basis.size() == 1) return {m};
  std::vector<ModuleMap> probes = basis;
  Rng rng(seed);
  for (int s = 0; s < samples; ++s)
    probes.push_back(map_combo(basis, random_vec(rng, int(basis.size()), m.alg->p())));
  for (const auto& f : probes) {
    for (i64 lam : endo_eigenvalues(f)) {
      ModuleMap g = map_add(f, map_scale(-lam, identity_map(m)));
      ModuleMap stable = map_power(g, m.total_dim());
      SubModule k = kernel(stable);
      SubModule im = image(stable);
      if (k.sub.total_dim() == 0 || im.sub.total_dim() == 0) continue;
      if (k.sub.total_dim() + im.sub.total_dim() != m.total_dim())
        throw Error(ErrKind::Internal, "stable kernel and image do not split the module");
      auto left = fitting_split(k.sub, rng(), samples);
      auto right = fitting_split(im.sub, rng(), samples);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
  return {m};
}

namespace {

// exact integer determinant, fraction-free; entries stay minors of the input
i64 bareiss_det(std::vector<std::vector<i64>> a) {
  int n = int(a.size());
  if (n == 0) return 1;
  i64 prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int sw = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          sw = i;
          break;
        }
      if (sw < 0) return 0;
      std::swap(a[k], a[sw]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        __int128 num = (__int128)a[i][j] * a[k][k] - (__int128)a[i][k] * a[k][j];
        __int128 q = num / prev;
        if (q > INT64_MAX || q < INT64_MIN)
          throw Error(ErrKind::Internal, "determinant overflow in hom table check");
        a[i][j] = i64(q);
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

void check_entry(const Module& u, std::uint64_t seed) {
  if (!is_indecomposable_certificate(u, seed)) throw Error(ErrKind::Parse, "catalog entry splits");
  auto [dim_end, dim_rad] = end_ring_dims(u);
  if (u.alg->p() > u.total_dim() && dim_end - dim_rad != 1)
    throw Error(ErrKind::Parse, "catalog entry has a non-local endomorphism ring");
}

std::vector<Module> knit(const AlgebraPtr& a, int cap) {
  if (!a->is_hereditary())
    throw Error(ErrKind::StrategyMismatch, "hereditary-knitting needs a path algebra without relations");
  std::vector<Module> all;
  std::vector<Module> layer;
  for (int v = 0; v < a->n_vertices(); ++v) layer.push_back(projective(a, v));
  while (!layer.empty()) {
    std::vector<Module> next;
    for (auto& m : layer) {
      bool dup = false;
      for (const auto& seen : all)
        if (is_isomorphic_structural(seen, m)) dup = true;
      if (dup) continue;
      all.push_back(m);
      if (int(all.size()) > cap)
        throw Error(ErrKind::NotRepresentationFinite, "knitting exceeded the module cap");
      Module t = tau_minus(m);
      if (t.total_dim() > 0) next.push_back(std::move(t));
    }
    layer = std::move(next);
  }
  return all;
}

std::vector<Module> intervals(const AlgebraPtr& a) {
  if (!a->is_nakayama())
    throw Error(ErrKind::StrategyMismatch, "nakayama-intervals needs a Nakayama algebra");
  std::vector<Module> all;
  for (int v = 0; v < a->n_vertices(); ++v) {
    Module p = projective(a, v);
    // radical series p > rad p > rad^2 p > ... > 0; the quotients are the
    // uniserial modules with top S_v
    std::vector<SubModule> series;
    series.push_back(radical(p));
    while (series.back().sub.total_dim() > 0) {
      SubModule deeper = radical(series.back().sub);
      deeper.incl = compose(deeper.incl, series.back().incl);
      series.push_back(std::move(deeper));
    }
    for (auto it = series.rbegin(); it != series.rend(); ++it)
      all.push_back(cokernel(it->incl).quot);
  }
  return all;
}

}  // namespace

IndSet enumerate_indecomposables(const AlgebraPtr& a, IndStrategy strategy,
                                 const std::vector<Module>& supplied, int cap,
                                 std::uint64_t seed) {
  IndSet ind;
  ind.alg = a;
  switch (strategy) {
    case IndStrategy::HereditaryKnitting: ind.modules = knit(a, cap); break;
    case IndStrategy::NakayamaIntervals: ind.modules = intervals(a); break;
    case IndStrategy::UserSupplied:
      ind.modules = supplied;
      for (const auto& m : ind.modules) {
        if (m.alg != a) throw Error(ErrKind::Parse, "supplied module over a different algebra");
        validate_module(m);
      }
      for (size_t i = 0; i < ind.modules.size(); ++i)
        for (size_t j = i + 1; j < ind.modules.size(); ++j)
          if (is_isomorphic_structural(ind.modules[i], ind.modules[j]))
            throw Error(ErrKind::Parse, "supplied catalog repeats an isomorphism class");
      break;
  }
  const int n = ind.size();
  for (const auto& u : ind.modules) check_entry(u, seed);

  ind.hom_table.assign(n, std::vector<int>(n, 0));
  ind.ext_table.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ind.hom_table[i][j] = hom_dim(ind.modules[i], ind.modules[j]);
      ind.ext_table[i][j] = ext1(ind.modules[i], ind.modules[j]).dim;
    }

  std::vector<std::vector<i64>> h(n, std::vector<i64>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h[i][j] = ind.hom_table[i][j];
  if (bareiss_det(h) == 0) throw Error(ErrKind::Internal, "hom table is singular");

  for (int i = 0; i < n; ++i) {
    Module t = tau(ind.modules[i]);
    if (t.total_dim() == 0) {
      ind.tau_map.push_back(-1);
      continue;
    }
    int at = -1;
    for (int j = 0; j < n; ++j)
      if (is_isomorphic_structural(t, ind.modules[j])) at = j;
    if (at < 0) throw Error(ErrKind::Internal, "catalog is not closed under tau");
    ind.tau_map.push_back(at);
  }
  for (int i = 0; i < n; ++i) {
    Module t = tau_minus(ind.modules[i]);
    if (t.total_dim() == 0) continue;
    bool found = false;
    for (int j = 0; j < n; ++j)
      if (is_isomorphic_structural(t, ind.modules[j])) found = true;
    if (!found) throw Error(ErrKind::Internal, "catalog is not closed under tau-minus");
  }
  return ind;
}

Decomposition decompose(const Module& m, const IndSet& ind) {
  if (m.alg != ind.alg) throw Error(ErrKind::Parse, "module and catalog algebras differ");
  const int n = ind.size();
  const i64 p = ind.alg->p();
  Matrix h(n, n, p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h.at(i, j) = ind.hom_table[i][j];
  Vec b(n);
  for (int i = 0; i < n; ++i) b[i] = hom_dim(ind.modules[i], m);
  auto x = solve(h, b);
  if (!x) throw Error(ErrKind::InconsistentDecomposition, "hom counts outside the catalog span");

  Decomposition d;
  d.multiplicities.resize(n);
  for (int j = 0; j < n; ++j) {
    // multiplicities are tiny against p, so the residue is the integer itself
    if ((*x)[j] > p / 2)
      throw Error(ErrKind::InconsistentDecomposition, "negative multiplicity");
    d.multiplicities[j] = int((*x)[j]);
  }

  // integer verification: the mod-p solve cannot be trusted on its own
  for (int i = 0; i < n; ++i) {
    i64 acc = 0;
    for (int j = 0; j < n; ++j) acc += i64(ind.hom_table[i][j]) * d.multiplicities[j];
    if (acc != b[i]) throw Error(ErrKind::InconsistentDecomposition, "hom counts do not match");
  }
  std::vector<int> dims(m.dims.size(), 0);
  for (int j = 0; j < n; ++j)
    for (size_t v = 0; v < dims.size(); ++v) dims[v] += d.multiplicities[j] * ind.modules[j].dims[v];
  for (size_t v = 0; v < dims.size(); ++v)
    if (dims[v] != m.dims[v])
      throw Error(ErrKind::InconsistentDecomposition, "dimension vector mismatch");
  for (int i = 0; i < n; ++i) {
    i64 acc = 0;
    for (int j = 0; j < n; ++j) acc += i64(ind.hom_table[j][i]) * d.multiplicities[j];
    if (acc != hom_dim(m, ind.modules[i]))
      throw Error(ErrKind::InconsistentDecomposition, "transposed hom counts do not match");
  }
  return d;
}

bool is_isomorphic(const Module& m, const Module& n, const IndSet& ind) {
  return decompose(m, ind).multiplicities == decompose(n, ind).multiplicities;
}

int IndSet::index_of(const Module& m) const {
  Decomposition d;
  try {
    d = decompose(m, *this);
  } catch (const Error&) {
    return -1;
  }
  int at = -1;
  for (int j = 0; j < size(); ++j) {
    if (d.multiplicities[j] == 0) continue;
    if (d.multiplicities[j] > 1 || at >= 0) return -1;
    at = j;
  }
  return at;
}

}  // namespace silt
