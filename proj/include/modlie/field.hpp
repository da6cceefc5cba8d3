#ifndef MODLIE_FIELD_HPP
#define MODLIE_FIELD_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace modlie {

/// Error raised for invalid input (bad flags, malformed data, precondition
/// failures). Carries a short machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

using Fp = std::uint8_t;
using Vec = std::vector<Fp>;

bool is_prime(int n);

/// Arithmetic in F_p for primes p < 256. Elements are stored as bytes in
/// [0, p).
class PrimeField {
 public:
  explicit PrimeField(int p);

  int p() const noexcept { return p_; }
  Fp reduce(long long v) const noexcept {
    long long r = v % p_;
    return static_cast<Fp>(r < 0 ? r + p_ : r);
  }
  Fp add(Fp a, Fp b) const noexcept {
    unsigned s = unsigned(a) + b;
    return static_cast<Fp>(s >= unsigned(p_) ? s - p_ : s);
  }
  Fp sub(Fp a, Fp b) const noexcept {
    return static_cast<Fp>(a >= b ? a - b : a + p_ - b);
  }
  Fp neg(Fp a) const noexcept { return static_cast<Fp>(a == 0 ? 0 : p_ - a); }
  Fp mul(Fp a, Fp b) const noexcept {
    return static_cast<Fp>((unsigned(a) * b) % unsigned(p_));
  }
  Fp inv(Fp a) const;
  Fp pow(Fp a, long long e) const noexcept;

  /// y += c * x over the whole length.
  void axpy(Vec& y, Fp c, const Vec& x) const;
  void scale(Vec& x, Fp c) const;
  Fp dot(const Vec& a, const Vec& b) const;

 private:
  int p_;
  std::vector<Fp> inverse_;
};

/// Dense row-major matrix over F_p.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Fp& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Fp operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Fp* row(std::size_t r) { return data_.data() + r * cols_; }
  const Fp* row(std::size_t r) const { return data_.data() + r * cols_; }
  Vec row_vec(std::size_t r) const { return Vec(row(r), row(r) + cols_); }
  Vec col_vec(std::size_t c) const;
  void set_row(std::size_t r, const Vec& v);
  void append_row(const Vec& v);
  bool is_zero() const;

  Matrix transpose() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fp> data_;
};

Matrix multiply(const PrimeField& F, const Matrix& a, const Matrix& b);
Vec apply(const PrimeField& F, const Matrix& a, const Vec& x);
Matrix add(const PrimeField& F, const Matrix& a, const Matrix& b);
Matrix sub(const PrimeField& F, const Matrix& a, const Matrix& b);
Matrix matrix_power(const PrimeField& F, const Matrix& a, long long e);

/// Reduces `m` in place to reduced row echelon form. Zero rows are dropped.
/// Returns pivot columns, one per surviving row.
std::vector<std::size_t> rref(const PrimeField& F, Matrix& m);
std::size_t rank(const PrimeField& F, Matrix m);
/// Right nullspace {x : A x = 0}, returned as the rows of a matrix in
/// reduced row echelon form.
Matrix nullspace(const PrimeField& F, const Matrix& a);
/// Inverse of a square matrix; throws if singular.
Matrix inverse(const PrimeField& F, const Matrix& a);

/// Sparse matrix stored by columns. Column j is a list of (row, value).
class SparseMatrix {
 public:
  struct Entry {
    std::uint32_t row;
    Fp value;
  };

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}
  static SparseMatrix from_dense(const Matrix& m);
  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Entry>& column(std::size_t j) const { return columns_[j]; }
  /// Replaces column j with the nonzero entries of `v`.
  void set_column(std::size_t j, const Vec& v);
  std::size_t nonzeros() const;

  Vec apply(const PrimeField& F, const Vec& x) const;
  Vec apply_transpose(const PrimeField& F, const Vec& x) const;
  /// Column j of the product, as a dense vector.
  Vec column_dense(std::size_t j) const;
  Matrix to_dense() const;
  SparseMatrix transpose() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> columns_;
};

/// dense * sparse
Matrix multiply(const PrimeField& F, const Matrix& a, const SparseMatrix& b);
/// sparse * dense
Matrix multiply(const PrimeField& F, const SparseMatrix& a, const Matrix& b);
SparseMatrix multiply(const PrimeField& F, const SparseMatrix& a, const SparseMatrix& b);
/// ca * a + cb * b
SparseMatrix combine(const PrimeField& F, Fp ca, const SparseMatrix& a, Fp cb, const SparseMatrix& b);
bool equal(const SparseMatrix& a, const SparseMatrix& b);

/// Incrementally grown subspace in semi-echelon form. Each stored row has a
/// pivot column where it is 1 and every later stored row is 0.
class EchelonSpace {
 public:
  EchelonSpace(const PrimeField& F, std::size_t dim) : F_(&F), dim_(dim) {}

  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t ambient() const noexcept { return dim_; }
  /// Reduces v against the stored rows in place.
  void reduce(Vec& v) const;
  bool contains(Vec v) const;
  /// Adds v if it is outside the span; returns true if the span grew.
  bool add(Vec v);
  /// Like add(), but also returns the reduced vector that was stored.
  bool add(Vec v, Vec* stored);
  const std::vector<Vec>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  /// Basis in reduced row echelon form, sorted by pivot.
  Matrix rref_basis() const;

 private:
  const PrimeField* F_;
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Seeded generator with a portable mapping to field elements.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  Fp element(const PrimeField& F) { return static_cast<Fp>(engine_() % unsigned(F.p())); }
  Vec vector(const PrimeField& F, std::size_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace modlie

#endif
