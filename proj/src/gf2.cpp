#include "knotcone/gf2.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "knotcone/error.hpp"

namespace knotcone {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

std::string shape(const Gf2Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

// Reduced row echelon form in place; returns the pivot column of each
// nonzero row, in row order.
std::vector<std::size_t> reduce_rows(std::vector<BitVector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t found = next;
    while (found < rows.size() && !rows[found].get(c)) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].get(c)) rows[r] ^= rows[next];
    }
    pivots.push_back(c);
    ++next;
  }
  return pivots;
}

}  // namespace

BitVector::BitVector(std::size_t size) : size_(size), words_(word_count(size), 0) {}

bool BitVector::get(std::size_t i) const {
  if (i >= size_) throw Error(ErrorCode::InvalidArgument, "bit index out of range");
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BitVector::set(std::size_t i, bool value) {
  if (i >= size_) throw Error(ErrorCode::InvalidArgument, "bit index out of range");
  const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

void BitVector::flip(std::size_t i) {
  if (i >= size_) throw Error(ErrorCode::InvalidArgument, "bit index out of range");
  words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits);
}

bool BitVector::any() const noexcept {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVector::popcount() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BitVector::first_set() const noexcept {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] != 0) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
  }
  return size_;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw Error(ErrorCode::DimensionMismatch, "xor of vectors of different length");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

Gf2Matrix::Gf2Matrix(std::initializer_list<std::initializer_list<int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.assign(rows_, BitVector(cols_));
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    std::size_t c = 0;
    for (int v : row) {
      if (v % 2 != 0) data_[r].set(c);
      ++c;
    }
    ++r;
  }
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

Gf2Matrix Gf2Matrix::from_columns(std::size_t rows, std::span<const BitVector> columns) {
  Gf2Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) {
      if (columns[c].get(r)) m.set(r, c);
    }
  }
  return m;
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
  if (r >= rows_) throw Error(ErrorCode::InvalidArgument, "row index out of range");
  return data_[r].get(c);
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value) {
  if (r >= rows_) throw Error(ErrorCode::InvalidArgument, "row index out of range");
  data_[r].set(c, value);
}

void Gf2Matrix::flip(std::size_t r, std::size_t c) {
  if (r >= rows_) throw Error(ErrorCode::InvalidArgument, "row index out of range");
  data_[r].flip(c);
}

BitVector Gf2Matrix::column(std::size_t c) const {
  BitVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (data_[r].get(c)) v.set(r);
  }
  return v;
}

bool Gf2Matrix::is_zero() const noexcept {
  return std::none_of(data_.begin(), data_.end(), [](const BitVector& r) { return r.any(); });
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = data_[r].first_set(); c < cols_; ++c) {
      if (data_[r].get(c)) t.set(c, r);
    }
  }
  return t;
}

void Gf2Matrix::place(std::size_t row0, std::size_t col0, const Gf2Matrix& block) {
  if (row0 + block.rows_ > rows_ || col0 + block.cols_ > cols_) {
    throw Error(ErrorCode::DimensionMismatch, "block " + shape(block) + " does not fit in " + shape(*this));
  }
  for (std::size_t r = 0; r < block.rows_; ++r) {
    for (std::size_t c = 0; c < block.cols_; ++c) data_[row0 + r].set(col0 + c, block.get(r, c));
  }
}

void Gf2Matrix::add_block(std::size_t row0, std::size_t col0, const Gf2Matrix& block) {
  if (row0 + block.rows_ > rows_ || col0 + block.cols_ > cols_) {
    throw Error(ErrorCode::DimensionMismatch, "block " + shape(block) + " does not fit in " + shape(*this));
  }
  for (std::size_t r = 0; r < block.rows_; ++r) {
    for (std::size_t c = 0; c < block.cols_; ++c) {
      if (block.get(r, c)) data_[row0 + r].flip(col0 + c);
    }
  }
}

BitVector Gf2Matrix::apply(const BitVector& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "vector length does not match column count");
  BitVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    const auto a = data_[r].words();
    const auto b = v.words();
    for (std::size_t k = 0; k < a.size(); ++k) acc ^= a[k] & b[k];
    if (std::popcount(acc) % 2 != 0) out.set(r);
  }
  return out;
}

std::string Gf2Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) os << (get(r, c) ? '1' : '0');
    os << '\n';
  }
  return os.str();
}

std::size_t rank(const Gf2Matrix& m) {
  // Basis rows indexed by their lowest set bit.
  std::vector<BitVector> basis(m.cols());
  std::vector<bool> occupied(m.cols(), false);
  std::size_t result = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BitVector row = m.row(r);
    for (std::size_t lead = row.first_set(); lead < m.cols(); lead = row.first_set()) {
      if (!occupied[lead]) {
        basis[lead] = std::move(row);
        occupied[lead] = true;
        ++result;
        break;
      }
      row ^= basis[lead];
    }
  }
  return result;
}

Gf2Matrix mul(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "cannot multiply " + shape(a) + " by " + shape(b));
  }
  Gf2Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    BitVector acc(b.cols());
    const BitVector& row = a.row(i);
    for (std::size_t k = row.first_set(); k < a.cols(); ++k) {
      if (row.get(k)) acc ^= b.row(k);
    }
    for (std::size_t c = acc.first_set(); c < b.cols(); ++c) {
      if (acc.get(c)) out.set(i, c);
    }
  }
  return out;
}

Gf2Matrix add(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "cannot add " + shape(a) + " and " + shape(b));
  }
  Gf2Matrix out = a;
  out.add_block(0, 0, b);
  return out;
}

Gf2Matrix hstack(const Gf2Matrix& left, const Gf2Matrix& right) {
  if (left.rows() != right.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "hstack of " + shape(left) + " and " + shape(right));
  }
  Gf2Matrix out(left.rows(), left.cols() + right.cols());
  out.place(0, 0, left);
  out.place(0, left.cols(), right);
  return out;
}

Gf2Matrix vstack(const Gf2Matrix& top, const Gf2Matrix& bottom) {
  if (top.cols() != bottom.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "vstack of " + shape(top) + " and " + shape(bottom));
  }
  Gf2Matrix out(top.rows() + bottom.rows(), top.cols());
  out.place(0, 0, top);
  out.place(top.rows(), 0, bottom);
  return out;
}

Gf2Matrix block_diagonal(std::span<const Gf2Matrix> blocks) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Gf2Matrix out(rows, cols);
  std::size_t r = 0;
  std::size_t c = 0;
  for (const auto& b : blocks) {
    out.place(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

std::vector<BitVector> kernel_basis(const Gf2Matrix& m) {
  std::vector<BitVector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  const auto pivots = reduce_rows(rows, m.cols());

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<BitVector> basis;
  basis.reserve(m.cols() - pivots.size());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVector v(m.cols());
    v.set(free);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (rows[i].get(free)) v.set(pivots[i]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

void require_differential(const Gf2Matrix& d, const char* what) {
  if (d.rows() != d.cols()) {
    throw Error(ErrorCode::NotADifferential, std::string(what) + " is not square (" + shape(d) + ")");
  }
  if (!mul(d, d).is_zero()) {
    throw Error(ErrorCode::NotADifferential, std::string(what) + " does not square to zero");
  }
}

std::size_t homology_rank(const Gf2Matrix& d) {
  require_differential(d, "differential");
  return d.rows() - 2 * rank(d);
}

std::size_t induced_homology_map_rank(const Gf2Matrix& dC, const Gf2Matrix& dD, const Gf2Matrix& f) {
  require_differential(dC, "source differential");
  require_differential(dD, "target differential");
  if (f.rows() != dD.rows() || f.cols() != dC.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "chain map has shape " + shape(f) + ", expected " +
                                                  std::to_string(dD.rows()) + "x" + std::to_string(dC.cols()));
  }
  if (mul(f, dC) != mul(dD, f)) {
    throw Error(ErrorCode::NotAChainMap, "map does not commute with the differentials");
  }
  const auto cycles = kernel_basis(dC);
  std::vector<BitVector> images;
  images.reserve(cycles.size());
  for (const auto& z : cycles) images.push_back(f.apply(z));
  const Gf2Matrix image_of_cycles = Gf2Matrix::from_columns(dD.rows(), images);
  // dim (f(Z) + B) - dim B, with B = im dD.
  return rank(hstack(dD, image_of_cycles)) - rank(dD);
}

}  // namespace knotcone
