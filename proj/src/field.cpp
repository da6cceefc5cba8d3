#include "modlie/field.hpp"

#include <algorithm>
#include <array>

namespace modlie {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(int p) : p_(p) {
  if (p >= 256 || !is_prime(p))
    throw Error("invalid_prime", "characteristic must be a prime below 256, got " + std::to_string(p));
  inverse_.assign(p, 0);
  for (int a = 1; a < p; ++a)
    for (int b = 1; b < p; ++b)
      if ((a * b) % p == 1) inverse_[a] = static_cast<Fp>(b);
}

Fp PrimeField::inv(Fp a) const {
  if (a == 0) throw Error("division_by_zero", "inverse of zero in F_" + std::to_string(p_));
  return inverse_[a];
}

Fp PrimeField::pow(Fp a, long long e) const noexcept {
  Fp result = 1;
  Fp base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

namespace {

// Multiplication table row for a fixed scalar.
std::array<Fp, 256> times_table(const PrimeField& F, Fp c) {
  std::array<Fp, 256> t{};
  for (int x = 0; x < F.p(); ++x) t[x] = F.mul(c, static_cast<Fp>(x));
  return t;
}

void axpy_raw(const PrimeField& F, Fp* y, Fp c, const Fp* x, std::size_t n) {
  if (c == 0) return;
  const auto t = times_table(F, c);
  const unsigned p = unsigned(F.p());
  for (std::size_t i = 0; i < n; ++i) {
    unsigned s = unsigned(y[i]) + t[x[i]];
    y[i] = static_cast<Fp>(s >= p ? s - p : s);
  }
}

}  // namespace

void PrimeField::axpy(Vec& y, Fp c, const Vec& x) const { axpy_raw(*this, y.data(), c, x.data(), y.size()); }

void PrimeField::scale(Vec& x, Fp c) const {
  const auto t = times_table(*this, c);
  for (auto& v : x) v = t[v];
}

Fp PrimeField::dot(const Vec& a, const Vec& b) const {
  unsigned long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += unsigned(a[i]) * b[i];
  return static_cast<Fp>(s % unsigned(p_));
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vec Matrix::col_vec(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_row(std::size_t r, const Vec& v) { std::copy(v.begin(), v.end(), row(r)); }

void Matrix::append_row(const Vec& v) {
  if (rows_ == 0 && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw Error("dimension_mismatch", "row length does not match matrix width");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Fp v) { return v == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix multiply(const PrimeField& F, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error("dimension_mismatch", "matrix product shape mismatch");
  Matrix c(a.rows(), b.cols());
  std::vector<std::uint32_t> acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0u);
    const Fp* arow = a.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const unsigned s = arow[k];
      if (s == 0) continue;
      const Fp* brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) acc[j] += s * brow[j];
    }
    Fp* crow = c.row(i);
    for (std::size_t j = 0; j < b.cols(); ++j) crow[j] = static_cast<Fp>(acc[j] % unsigned(F.p()));
  }
  return c;
}

Vec apply(const PrimeField& F, const Matrix& a, const Vec& x) {
  if (a.cols() != x.size()) throw Error("dimension_mismatch", "matrix-vector shape mismatch");
  Vec y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Fp* r = a.row(i);
    unsigned long long s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += unsigned(r[j]) * x[j];
    y[i] = static_cast<Fp>(s % unsigned(F.p()));
  }
  return y;
}

Matrix add(const PrimeField& F, const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = F.add(a(i, j), b(i, j));
  return c;
}

Matrix sub(const PrimeField& F, const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = F.sub(a(i, j), b(i, j));
  return c;
}

Matrix matrix_power(const PrimeField& F, const Matrix& a, long long e) {
  Matrix result = Matrix::identity(a.rows());
  Matrix base = a;
  bool first = true;
  while (e > 0) {
    if (e & 1) {
      result = first ? base : multiply(F, result, base);
      first = false;
    }
    e >>= 1;
    if (e > 0) base = multiply(F, base, base);
  }
  return result;
}

std::vector<std::size_t> rref(const PrimeField& F, Matrix& m) {
  // Entries are kept unreduced in 32 bits and reduced when read as pivots
  // or multipliers; every row operation adds at most (p-1)^2.
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::uint32_t p = std::uint32_t(F.p());
  const std::size_t batch = std::max<std::size_t>(1, (1u << 31) / ((p - 1) * (p - 1) + 1));
  std::vector<std::uint32_t> a(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i) a[i] = m.row(0)[i];
  const auto at = [&](std::size_t i) { return a.data() + i * cols; };
  std::size_t r = 0, since = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && (at(sel)[c] %= p) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r) std::swap_ranges(at(sel), at(sel) + cols, at(r));
    std::uint32_t* prow = at(r);
    const std::uint32_t inv = F.inv(static_cast<Fp>(prow[c]));
    for (std::size_t j = c; j < cols; ++j) prow[j] = (prow[j] % p) * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      std::uint32_t* row = at(i);
      const std::uint32_t x = row[c] % p;
      if (x == 0) {
        row[c] = 0;
        continue;
      }
      const std::uint32_t mul = p - x;
      for (std::size_t j = c; j < cols; ++j) row[j] += mul * prow[j];
    }
    if (++since == batch) {
      for (auto& x : a) x %= p;
      since = 0;
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix reduced(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) reduced(i, j) = static_cast<Fp>(at(i)[j] % p);
  m = std::move(reduced);
  return pivots;
}

std::size_t rank(const PrimeField& F, Matrix m) { return rref(F, m).size(); }

Matrix nullspace(const PrimeField& F, const Matrix& a) {
  Matrix m = a;
  const std::size_t n = a.cols();
  const auto pivots = rref(F, m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix basis(0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(m(i, free));
    basis.append_row(v);
  }
  rref(F, basis);
  return basis;
}

Matrix inverse(const PrimeField& F, const Matrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw Error("dimension_mismatch", "inverse of a non-square matrix");
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(a.row(i), a.row(i) + n, aug.row(i));
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(F, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error("singular", "matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) std::copy(aug.row(i) + n, aug.row(i) + 2 * n, inv.row(i));
  return inv;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) s.columns_[j].push_back({static_cast<std::uint32_t>(i), m(i, j)});
  return s;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix s(n, n);
  for (std::size_t j = 0; j < n; ++j) s.columns_[j].push_back({static_cast<std::uint32_t>(j), 1});
  return s;
}

void SparseMatrix::set_column(std::size_t j, const Vec& v) {
  auto& col = columns_[j];
  col.clear();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) col.push_back({static_cast<std::uint32_t>(i), v[i]});
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

Vec SparseMatrix::apply(const PrimeField& F, const Vec& x) const {
  std::vector<std::uint32_t> acc(rows_, 0);
  for (std::size_t j = 0; j < cols_; ++j) {
    const unsigned s = x[j];
    if (s == 0) continue;
    for (const auto& e : columns_[j]) acc[e.row] += s * e.value;
  }
  Vec y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) y[i] = static_cast<Fp>(acc[i] % unsigned(F.p()));
  return y;
}

Vec SparseMatrix::apply_transpose(const PrimeField& F, const Vec& x) const {
  Vec y(cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    unsigned long long s = 0;
    for (const auto& e : columns_[j]) s += unsigned(e.value) * x[e.row];
    y[j] = static_cast<Fp>(s % unsigned(F.p()));
  }
  return y;
}

Vec SparseMatrix::column_dense(std::size_t j) const {
  Vec v(rows_, 0);
  for (const auto& e : columns_[j]) v[e.row] = e.value;
  return v;
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(rows_, cols_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (const auto& e : columns_[j]) m(e.row, j) = e.value;
  return m;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (const auto& e : columns_[j]) t.columns_[e.row].push_back({static_cast<std::uint32_t>(j), e.value});
  return t;
}

Matrix multiply(const PrimeField& F, const Matrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw Error("dimension_mismatch", "matrix product shape mismatch");
  // Work on the transpose so that columns of the result are contiguous rows.
  const Matrix at = a.transpose();
  Matrix ct(b.cols(), a.rows());
  std::vector<std::uint32_t> acc(a.rows());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    std::fill(acc.begin(), acc.end(), 0u);
    for (const auto& e : b.column(j)) {
      const Fp* src = at.row(e.row);
      const unsigned s = e.value;
      for (std::size_t i = 0; i < a.rows(); ++i) acc[i] += s * src[i];
    }
    Fp* dst = ct.row(j);
    for (std::size_t i = 0; i < a.rows(); ++i) dst[i] = static_cast<Fp>(acc[i] % unsigned(F.p()));
  }
  return ct.transpose();
}

Matrix multiply(const PrimeField& F, const SparseMatrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error("dimension_mismatch", "matrix product shape mismatch");
  Matrix c(a.rows(), b.cols());
  std::vector<std::uint32_t> acc(a.rows() * b.cols(), 0);
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const Fp* brow = b.row(k);
    for (const auto& e : a.column(k)) {
      std::uint32_t* dst = acc.data() + std::size_t(e.row) * b.cols();
      const unsigned s = e.value;
      for (std::size_t j = 0; j < b.cols(); ++j) dst[j] += s * brow[j];
    }
  }
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      c(i, j) = static_cast<Fp>(acc[i * b.cols() + j] % unsigned(F.p()));
  return c;
}

void EchelonSpace::reduce(Vec& v) const {
  // Unreduced 32-bit accumulation; each row adds at most (p-1)^2 per entry.
  const unsigned p = unsigned(F_->p());
  const std::size_t batch = std::max<std::size_t>(1, (1u << 31) / ((p - 1) * (p - 1) + 1));
  std::vector<std::uint32_t> acc(v.begin(), v.end());
  std::size_t pending = 0;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const unsigned c = acc[pivots_[k]] % p;
    if (c == 0) continue;
    const std::uint32_t m = p - c;
    const Fp* row = rows_[k].data();
    std::uint32_t* a = acc.data();
    for (std::size_t j = 0; j < dim_; ++j) a[j] += m * row[j];
    if (++pending == batch) {
      for (auto& x : acc) x %= p;
      pending = 0;
    }
  }
  for (std::size_t j = 0; j < dim_; ++j) v[j] = static_cast<Fp>(acc[j] % p);
}

bool EchelonSpace::contains(Vec v) const {
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](Fp x) { return x == 0; });
}

bool EchelonSpace::add(Vec v) { return add(std::move(v), nullptr); }

bool EchelonSpace::add(Vec v, Vec* stored) {
  reduce(v);
  std::size_t piv = 0;
  while (piv < dim_ && v[piv] == 0) ++piv;
  if (piv == dim_) return false;
  F_->scale(v, F_->inv(v[piv]));
  if (stored) *stored = v;
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

Matrix EchelonSpace::rref_basis() const {
  Matrix m(0, dim_);
  for (const auto& r : rows_) m.append_row(r);
  rref(*F_, m);
  return m;
}

SparseMatrix multiply(const PrimeField& F, const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw Error("dimension_mismatch", "sparse product shape mismatch");
  SparseMatrix out(a.rows(), b.cols());
  Vec acc(a.rows(), 0);
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (const auto& [k, v] : b.column(j))
      for (const auto& [i, u] : a.column(k)) acc[i] = F.add(acc[i], F.mul(u, v));
    out.set_column(j, acc);
    std::fill(acc.begin(), acc.end(), 0);
  }
  return out;
}

SparseMatrix combine(const PrimeField& F, Fp ca, const SparseMatrix& a, Fp cb, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("dimension_mismatch", "sparse sum shape mismatch");
  SparseMatrix out(a.rows(), a.cols());
  Vec acc(a.rows(), 0);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (const auto& [i, u] : a.column(j)) acc[i] = F.add(acc[i], F.mul(ca, u));
    for (const auto& [i, u] : b.column(j)) acc[i] = F.add(acc[i], F.mul(cb, u));
    out.set_column(j, acc);
    std::fill(acc.begin(), acc.end(), 0);
  }
  return out;
}

bool equal(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const auto& x = a.column(j);
    const auto& y = b.column(j);
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (x[k].row != y[k].row || x[k].value != y[k].value) return false;
  }
  return true;
}

Vec Rng::vector(const PrimeField& F, std::size_t n) {
  Vec v(n);
  for (auto& x : v) x = element(F);
  return v;
}

}  // namespace modlie
