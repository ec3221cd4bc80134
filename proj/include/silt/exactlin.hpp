#ifndef SILT_EXACTLIN_HPP
#define SILT_EXACTLIN_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace silt {

using i64 = std::int64_t;
using Vec = std::vector<i64>;
using Rng = std::mt19937_64;

// Default prime modulus. Must stay > 2 * any dimension the tool works with so
// that counting arguments (multiplicities, hom dims) lift uniquely from F_p.
inline constexpr i64 kDefaultPrime = 10007;

// Default seed for every randomized witness search, so runs are reproducible.
inline constexpr std::uint64_t kDefaultSeed = 0x5117;

enum class ErrKind {
  Parse,
  NotAdmissible,
  CapTooSmall,
  FieldTooSmall,
  PresentationMismatch,
  NotSilting,
  NotPartialSilting,
  StrategyMismatch,
  NotRepresentationFinite,
  InconsistentDecomposition,
  DegreeOutOfRange,
  VerdictDisagreement,
  CertificationFailure,
  ApproximationFailure,
  BijectionFailure,
  Internal,
};

struct Error : std::runtime_error {
  ErrKind kind;
  Error(ErrKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

const char* err_name(ErrKind k);

bool is_prime(i64 n);

// Arithmetic in F_p. Residues are kept in [0, p).
struct Fp {
  i64 p;
  explicit Fp(i64 p_) : p(p_) {
    if (p_ < 2 || p_ > (i64(1) << 30) || !is_prime(p_))
      throw Error(ErrKind::FieldTooSmall, "modulus must be a prime < 2^30, got " + std::to_string(p_));
  }
  i64 reduce(i64 x) const {
    x %= p;
    return x < 0 ? x + p : x;
  }
  i64 add(i64 a, i64 b) const { return (a + b) % p; }
  i64 sub(i64 a, i64 b) const { return (a - b + p) % p; }
  i64 mul(i64 a, i64 b) const { return (a * b) % p; }
  i64 neg(i64 a) const { return a == 0 ? 0 : p - a; }
  i64 pow(i64 a, i64 e) const;
  i64 inv(i64 a) const;
};

// Dense rows x cols matrix over F_p, row-major. As a linear map it acts two
// ways and both are used: column convention F^cols -> F^rows (x -> M x), and
// row convention F^rows -> F^cols (x -> x M) for right-module actions.
// 0 x n and n x 0 are legal and behave as zero maps.
struct Matrix {
  int rows = 0, cols = 0;
  i64 p = kDefaultPrime;
  Vec a;

  Matrix() = default;
  Matrix(int r, int c, i64 pp) : rows(r), cols(c), p(pp), a(size_t(r) * c, 0) {
    if (r < 0 || c < 0) throw Error(ErrKind::Internal, "negative matrix shape");
  }
  static Matrix identity(int n, i64 p);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols, i64 p);

  i64& at(int i, int j) { return a[size_t(i) * cols + j]; }
  i64 at(int i, int j) const { return a[size_t(i) * cols + j]; }
  Vec row(int i) const { return Vec(a.begin() + size_t(i) * cols, a.begin() + size_t(i + 1) * cols); }
  bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && p == o.p && a == o.a; }
};

Matrix mul(const Matrix& x, const Matrix& y);
Matrix add(const Matrix& x, const Matrix& y);
Matrix sub(const Matrix& x, const Matrix& y);
Matrix scale(i64 c, const Matrix& x);
Matrix transpose(const Matrix& x);
Matrix hstack(const Matrix& x, const Matrix& y);
Matrix vstack(const Matrix& x, const Matrix& y);
bool is_zero(const Matrix& x);

struct Rref {
  Matrix r;
  std::vector<int> pivots;  // pivot column per nonzero row, strictly increasing
};

// Gauss-Jordan reduced row echelon form; rref(rref(m).r).r == rref(m).r.
Rref rref(const Matrix& m);
int rank(const Matrix& m);

// Basis of {x in F^cols : M x = 0}; size == cols - rank(m).
std::vector<Vec> kernel_basis(const Matrix& m);

// Any x with M x = b, or nullopt if inconsistent. b.size() must equal rows.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// Columnwise solve M X = rhs; nullopt if any column is inconsistent.
std::optional<Matrix> solve_matrix(const Matrix& m, const Matrix& rhs);

// Column map onto: rank == rows.
bool is_surjective(const Matrix& m);

// Row-convention helpers (x -> x M).
std::vector<Vec> row_kernel(const Matrix& m);                       // rows x with x M = 0
std::optional<Matrix> row_solve(const Matrix& m, const Matrix& b);  // X with X M = b
bool row_is_surjective(const Matrix& m);                            // rank == cols
Matrix row_span_basis(const Matrix& m);  // rref without zero rows: basis of the row space
// Does v lie in the row space of m?
bool in_row_space(const Matrix& m, const Vec& v);

Matrix random_matrix(Rng& rng, int rows, int cols, i64 p);
Vec random_vec(Rng& rng, int n, i64 p);

}  // namespace silt

#endif
