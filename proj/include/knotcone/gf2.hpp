#pragma once

// Exact linear algebra over the two-element field.
//
// Vectors and matrix rows are bit-packed into 64-bit words. Matrices act on
// column vectors: for a differential d, d(col) = row means entry (row, col) = 1.
// Empty matrices (zero rows or zero columns) are legal everywhere.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace knotcone {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size);

  std::size_t size() const noexcept { return size_; }
  bool get(std::size_t i) const;
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i);
  bool any() const noexcept;
  std::size_t popcount() const noexcept;
  // Index of the lowest set bit, or size() when the vector is zero.
  std::size_t first_set() const noexcept;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend bool operator==(const BitVector& a, const BitVector& b) = default;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);
  // Dense literal, one inner list per row; entries are reduced mod 2.
  Gf2Matrix(std::initializer_list<std::initializer_list<int>> rows);

  static Gf2Matrix identity(std::size_t n);
  static Gf2Matrix zero(std::size_t rows, std::size_t cols) { return Gf2Matrix(rows, cols); }
  // Matrix whose columns are the given vectors; all must have length `rows`.
  static Gf2Matrix from_columns(std::size_t rows, std::span<const BitVector> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value = true);
  void flip(std::size_t r, std::size_t c);

  const BitVector& row(std::size_t r) const { return data_.at(r); }
  BitVector column(std::size_t c) const;
  bool is_zero() const noexcept;

  Gf2Matrix transpose() const;
  // Copies `block` into this matrix with its top-left corner at (row0, col0).
  // Existing entries in the covered region are overwritten.
  void place(std::size_t row0, std::size_t col0, const Gf2Matrix& block);
  // Adds (xor) `block` into the region starting at (row0, col0).
  void add_block(std::size_t row0, std::size_t col0, const Gf2Matrix& block);

  BitVector apply(const BitVector& v) const;

  friend bool operator==(const Gf2Matrix& a, const Gf2Matrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BitVector> data_;
};

std::size_t rank(const Gf2Matrix& m);

// Throws Error(DimensionMismatch) unless a.cols() == b.rows().
Gf2Matrix mul(const Gf2Matrix& a, const Gf2Matrix& b);
Gf2Matrix add(const Gf2Matrix& a, const Gf2Matrix& b);
Gf2Matrix hstack(const Gf2Matrix& left, const Gf2Matrix& right);
Gf2Matrix vstack(const Gf2Matrix& top, const Gf2Matrix& bottom);
Gf2Matrix block_diagonal(std::span<const Gf2Matrix> blocks);

// Basis of {v : m v = 0}; exactly cols - rank vectors, each of length cols.
std::vector<BitVector> kernel_basis(const Gf2Matrix& m);

// dim ker d - rank d for a square d with d*d = 0.
std::size_t homology_rank(const Gf2Matrix& d);

// Rank of H(C) -> H(D) induced by the chain map f : C -> D.
// f is dim D x dim C and must satisfy f dC = dD f.
std::size_t induced_homology_map_rank(const Gf2Matrix& dC, const Gf2Matrix& dD, const Gf2Matrix& f);

// Throws Error(NotADifferential) unless d is square with d*d = 0.
void require_differential(const Gf2Matrix& d, const char* what);

}  // namespace knotcone
