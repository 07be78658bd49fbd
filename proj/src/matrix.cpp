#include "obstruct/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace obstruct {

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(Ring ring, std::initializer_list<std::initializer_list<long>> rows,
               std::size_t cols)
    : ring_(std::move(ring)), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : cols) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error("matrix: ragged row in literal");
    for (long v : row) data_.push_back(ring_.normalize(Scalar(v)));
  }
}

Matrix Matrix::identity(Ring ring, std::size_t n) {
  Matrix m(std::move(ring), n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Matrix Matrix::column(Ring ring, const std::vector<Scalar>& entries) {
  Matrix m(std::move(ring), entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  data_[r * cols_ + c] = ring_.normalize(value);
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x == 0; });
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) {
    throw Error("matrix: cannot multiply " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                " by " + std::to_string(other.rows_) + "x" + std::to_string(other.cols_));
  }
  Matrix out(ring_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Scalar& b = other.at(k, j);
        if (b != 0) out.data_[i * out.cols_ + j] += a * b;
      }
    }
  }
  if (ring_.kind() == RingKind::PrimeField) {
    for (auto& x : out.data_) x = ring_.normalize(x);
  }
  return out;
}

void Matrix::require_same_shape(const Matrix& other, const char* op) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(std::string("matrix: shape mismatch in ") + op);
  }
}

Matrix Matrix::operator+(const Matrix& other) const {
  require_same_shape(other, "+");
  Matrix out(ring_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = ring_.add(data_[i], other.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  require_same_shape(other, "-");
  Matrix out(ring_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = ring_.sub(data_[i], other.data_[i]);
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out(ring_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = ring_.neg(data_[i]);
  return out;
}

Matrix Matrix::scaled(const Scalar& factor) const {
  Matrix out(ring_, rows_, cols_);
  const Scalar f = ring_.normalize(factor);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = ring_.mul(data_[i], f);
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.data_[j * rows_ + i] = at(i, j);
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error("matrix: block out of range");
  Matrix out(ring_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out.data_[i * nc + j] = at(r0 + i, c0 + j);
  return out;
}

void Matrix::place(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw Error("matrix: place out of range");
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) data_[(r0 + i) * cols_ + c0 + j] = m.at(i, j);
}

std::vector<Scalar> Matrix::column_entries(std::size_t c) const {
  std::vector<Scalar> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, c);
  return out;
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right) {
  if (left.rows_ != right.rows_) throw Error("matrix: hstack row mismatch");
  Matrix out(left.ring_, left.rows_, left.cols_ + right.cols_);
  out.place(0, 0, left);
  out.place(0, left.cols_, right);
  return out;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols_ != bottom.cols_) throw Error("matrix: vstack column mismatch");
  Matrix out(top.ring_, top.rows_ + bottom.rows_, top.cols_);
  out.place(0, 0, top);
  out.place(top.rows_, 0, bottom);
  return out;
}

Matrix Matrix::block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix out(a.ring_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  out.place(0, 0, a);
  out.place(a.rows_, a.cols_, b);
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << ring_.format(at(i, j));
    }
  }
  os << ']';
  return os.str();
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void Matrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[i * cols_ + c], data_[j * cols_ + c]);
}

void Matrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(data_[r * cols_ + i], data_[r * cols_ + j]);
}

void Matrix::add_row_multiple(std::size_t target, std::size_t source, const Scalar& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    const Scalar& s = data_[source * cols_ + c];
    if (s == 0) continue;
    Scalar& t = data_[target * cols_ + c];
    t = ring_.add(t, ring_.mul(factor, s));
  }
}

void Matrix::add_col_multiple(std::size_t target, std::size_t source, const Scalar& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    const Scalar& s = data_[r * cols_ + source];
    if (s == 0) continue;
    Scalar& t = data_[r * cols_ + target];
    t = ring_.add(t, ring_.mul(factor, s));
  }
}

void Matrix::scale_row(std::size_t i, const Scalar& factor) {
  for (std::size_t c = 0; c < cols_; ++c) data_[i * cols_ + c] = ring_.mul(data_[i * cols_ + c], factor);
}

void Matrix::scale_col(std::size_t j, const Scalar& factor) {
  for (std::size_t r = 0; r < rows_; ++r) data_[r * cols_ + j] = ring_.mul(data_[r * cols_ + j], factor);
}

std::vector<Scalar> multiply(const Matrix& a, const std::vector<Scalar>& x) {
  if (x.size() != a.cols()) throw Error("matrix: vector length mismatch");
  std::vector<Scalar> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Scalar acc = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a.at(i, j) * x[j];
    out[i] = a.ring().normalize(acc);
  }
  return out;
}

}  // namespace obstruct
