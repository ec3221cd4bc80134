#include "silt/exactlin.hpp"

namespace silt {

const char* err_name(ErrKind k) {
  switch (k) {
    case ErrKind::Parse: return "ParseError";
    case ErrKind::NotAdmissible: return "NotAdmissible";
    case ErrKind::CapTooSmall: return "CapTooSmall";
    case ErrKind::FieldTooSmall: return "FieldTooSmall";
    case ErrKind::PresentationMismatch: return "PresentationMismatch";
    case ErrKind::NotSilting: return "NotSilting";
    case ErrKind::NotPartialSilting: return "NotPartialSilting";
    case ErrKind::StrategyMismatch: return "StrategyMismatch";
    case ErrKind::NotRepresentationFinite: return "NotRepresentationFinite";
    case ErrKind::InconsistentDecomposition: return "InconsistentDecomposition";
    case ErrKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrKind::VerdictDisagreement: return "VerdictDisagreement";
    case ErrKind::CertificationFailure: return "CertificationFailure";
    case ErrKind::ApproximationFailure: return "ApproximationFailure";
    case ErrKind::BijectionFailure: return "BijectionFailure";
    case ErrKind::Internal: return "InternalError";
  }
  return "UnknownError";
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

i64 Fp::pow(i64 a, i64 e) const {
  a = reduce(a);
  i64 r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

i64 Fp::inv(i64 a) const {
  a = reduce(a);
  if (a == 0) throw Error(ErrKind::Internal, "division by zero in F_p");
  return pow(a, p - 2);
}

Matrix Matrix::identity(int n, i64 p) {
  Matrix m(n, n, p);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols, i64 p) {
  Matrix m(int(rows.size()), cols, p);
  Fp f(p);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (int(rows[i].size()) != cols) throw Error(ErrKind::Internal, "ragged row list");
    for (int j = 0; j < cols; ++j) m.at(int(i), j) = f.reduce(rows[i][j]);
  }
  return m;
}

static void shape_check(const Matrix& x, const Matrix& y, bool same_shape) {
  if (x.p != y.p) throw Error(ErrKind::Internal, "field modulus mismatch");
  if (same_shape && (x.rows != y.rows || x.cols != y.cols))
    throw Error(ErrKind::Internal, "matrix shape mismatch");
}

Matrix mul(const Matrix& x, const Matrix& y) {
  shape_check(x, y, false);
  if (x.cols != y.rows) throw Error(ErrKind::Internal, "matrix product shape mismatch");
  Matrix r(x.rows, y.cols, x.p);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      i64 v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        r.at(i, j) = (r.at(i, j) + v * y.at(k, j)) % x.p;
    }
  return r;
}

Matrix add(const Matrix& x, const Matrix& y) {
  shape_check(x, y, true);
  Matrix r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = (r.a[i] + y.a[i]) % r.p;
  return r;
}

Matrix sub(const Matrix& x, const Matrix& y) {
  shape_check(x, y, true);
  Matrix r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = (r.a[i] - y.a[i] + r.p) % r.p;
  return r;
}

Matrix scale(i64 c, const Matrix& x) {
  Fp f(x.p);
  c = f.reduce(c);
  Matrix r = x;
  for (auto& v : r.a) v = (v * c) % r.p;
  return r;
}

Matrix transpose(const Matrix& x) {
  Matrix r(x.cols, x.rows, x.p);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

Matrix hstack(const Matrix& x, const Matrix& y) {
  shape_check(x, y, false);
  if (x.rows != y.rows) throw Error(ErrKind::Internal, "hstack row mismatch");
  Matrix r(x.rows, x.cols + y.cols, x.p);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
  }
  return r;
}

Matrix vstack(const Matrix& x, const Matrix& y) {
  shape_check(x, y, false);
  if (x.cols != y.cols) throw Error(ErrKind::Internal, "vstack col mismatch");
  Matrix r(x.rows + y.rows, x.cols, x.p);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
  for (int i = 0; i < y.rows; ++i)
    for (int j = 0; j < y.cols; ++j) r.at(x.rows + i, j) = y.at(i, j);
  return r;
}

bool is_zero(const Matrix& x) {
  for (i64 v : x.a)
    if (v != 0) return false;
  return true;
}

Rref rref(const Matrix& m) {
  Rref out{m, {}};
  Matrix& r = out.r;
  Fp f(m.p);
  int lead = 0;
  for (int col = 0; col < r.cols && lead < r.rows; ++col) {
    int piv = -1;
    for (int i = lead; i < r.rows; ++i)
      if (r.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < r.cols; ++j) std::swap(r.at(piv, j), r.at(lead, j));
    i64 s = f.inv(r.at(lead, col));
    for (int j = 0; j < r.cols; ++j) r.at(lead, j) = f.mul(r.at(lead, j), s);
    for (int i = 0; i < r.rows; ++i) {
      if (i == lead) continue;
      i64 v = r.at(i, col);
      if (v == 0) continue;
      for (int j = 0; j < r.cols; ++j)
        r.at(i, j) = f.sub(r.at(i, j), f.mul(v, r.at(lead, j)));
    }
    out.pivots.push_back(col);
    ++lead;
  }
  return out;
}

int rank(const Matrix& m) { return int(rref(m).pivots.size()); }

std::vector<Vec> kernel_basis(const Matrix& m) {
  Rref rr = rref(m);
  Fp f(m.p);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : rr.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    Vec x(m.cols, 0);
    x[free] = 1;
    for (size_t i = 0; i < rr.pivots.size(); ++i)
      x[rr.pivots[i]] = f.neg(rr.r.at(int(i), free));
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (int(b.size()) != m.rows) throw Error(ErrKind::Internal, "solve: rhs size mismatch");
  Matrix rhs(m.rows, 1, m.p);
  Fp f(m.p);
  for (int i = 0; i < m.rows; ++i) rhs.at(i, 0) = f.reduce(b[i]);
  auto x = solve_matrix(m, rhs);
  if (!x) return std::nullopt;
  Vec v(m.cols);
  for (int i = 0; i < m.cols; ++i) v[i] = x->at(i, 0);
  return v;
}

std::optional<Matrix> solve_matrix(const Matrix& m, const Matrix& rhs) {
  shape_check(m, rhs, false);
  if (rhs.rows != m.rows) throw Error(ErrKind::Internal, "solve_matrix: rhs rows mismatch");
  Rref rr = rref(hstack(m, rhs));
  Matrix x(m.cols, rhs.cols, m.p);
  for (size_t i = 0; i < rr.pivots.size(); ++i) {
    int c = rr.pivots[i];
    if (c >= m.cols) return std::nullopt;  // pivot in augmented block: inconsistent
    for (int j = 0; j < rhs.cols; ++j) x.at(c, j) = rr.r.at(int(i), m.cols + j);
  }
  return x;
}

bool is_surjective(const Matrix& m) { return rank(m) == m.rows; }

std::vector<Vec> row_kernel(const Matrix& m) { return kernel_basis(transpose(m)); }

std::optional<Matrix> row_solve(const Matrix& m, const Matrix& b) {
  // X m = b  <=>  m^T X^T = b^T
  auto xt = solve_matrix(transpose(m), transpose(b));
  if (!xt) return std::nullopt;
  return transpose(*xt);
}

bool row_is_surjective(const Matrix& m) { return rank(m) == m.cols; }

Matrix row_span_basis(const Matrix& m) {
  Rref rr = rref(m);
  Matrix b(int(rr.pivots.size()), m.cols, m.p);
  for (size_t i = 0; i < rr.pivots.size(); ++i)
    for (int j = 0; j < m.cols; ++j) b.at(int(i), j) = rr.r.at(int(i), j);
  return b;
}

bool in_row_space(const Matrix& m, const Vec& v) {
  Matrix vm = Matrix::from_rows({v}, m.cols, m.p);
  return row_solve(m, vm).has_value();
}

Matrix random_matrix(Rng& rng, int rows, int cols, i64 p) {
  Matrix m(rows, cols, p);
  std::uniform_int_distribution<i64> d(0, p - 1);
  for (auto& v : m.a) v = d(rng);
  return m;
}

Vec random_vec(Rng& rng, int n, i64 p) {
  Vec v(n);
  std::uniform_int_distribution<i64> d(0, p - 1);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace silt
