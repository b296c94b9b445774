#pragma once

// Exact integer linear algebra over arbitrary-precision integers.
//
// Matrices act on column vectors; "row-style" normal forms reduce by
// unimodular row operations, so the row space (a lattice) is preserved.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace fanlat {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  // `cols` fixes the width when `rows` is empty.
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Integer> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<Integer> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  IntVector row_vector(std::size_t i) const;
  IntVector column_vector(std::size_t j) const;
  std::vector<IntVector> row_vectors() const;

  void append_row(std::span<const Integer> r);
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // Keeps the first `n` rows.
  void truncate_rows(std::size_t n);

  IntMatrix transpose() const;
  IntMatrix select_rows(std::size_t first, std::size_t last) const;
  IntMatrix select_columns(std::span<const std::size_t> columns) const;
  bool is_zero() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, std::span<const Integer> v);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);
std::string to_string(std::span<const Integer> v);

bool is_zero(std::span<const Integer> v);
IntVector make_vector(std::initializer_list<long> values);

// Fraction-free (Bareiss) determinant. Independent of the normal forms below.
Integer determinant(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);

// h = u * m with u unimodular and h in row Hermite normal form: the first
// `rank` rows are nonzero with strictly increasing pivot columns, pivots are
// positive, entries above a pivot lie in [0, pivot), remaining rows are zero.
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
};
HermiteForm hnf(const IntMatrix& m);
bool is_hnf(const IntMatrix& h);

// s = u * m * w, s diagonal with d_1 | d_2 | ... and d_i >= 0.
struct SmithForm {
  IntMatrix s;
  IntMatrix u;
  IntMatrix w;
};
SmithForm snf(const IntMatrix& m);
// Diagonal of a Smith form, including trailing zeros up to min(rows, cols).
IntVector smith_diagonal(const IntMatrix& s);

std::size_t matrix_rank(const IntMatrix& m);

// Some integer x with m * x = b, if one exists.
std::optional<IntVector> integer_solve(const IntMatrix& m, std::span<const Integer> b);

// A sublattice of Z^ambient stored by its canonical row HNF basis (no zero
// rows). Equal sublattices have identical bases.
class Sublattice {
 public:
  explicit Sublattice(std::size_t ambient_rank = 0);

  static Sublattice generated_by(std::size_t ambient_rank, const IntMatrix& generators);
  static Sublattice generated_by(std::size_t ambient_rank, const std::vector<IntVector>& generators);
  static Sublattice full(std::size_t ambient_rank);

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }
  std::vector<IntVector> basis_vectors() const { return basis_.row_vectors(); }

  // Coefficients c with v = sum c_i * basis_i, by back-substitution.
  std::optional<IntVector> coordinates(std::span<const Integer> v) const;
  bool contains(std::span<const Integer> v) const;
  bool contains(const Sublattice& other) const;

  friend bool operator==(const Sublattice& a, const Sublattice& b) {
    return a.ambient_rank_ == b.ambient_rank_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_rank_;
  IntMatrix basis_;
};

// Kernel of m viewed as a map Z^cols -> Z^rows.
Sublattice integer_kernel(const IntMatrix& m);
bool member(std::span<const Integer> v, const Sublattice& lattice);
Sublattice lattice_sum(std::span<const Sublattice> parts, std::size_t ambient_rank);
Sublattice lattice_sum(std::span<const Sublattice> parts);
bool lattice_equal(const Sublattice& a, const Sublattice& b);
Sublattice saturation(const Sublattice& lattice);
// Index in the ambient lattice; nullopt when the rank is deficient (infinite).
std::optional<Integer> sublattice_index(const Sublattice& lattice);
// [super : sub] for sub ⊆ super; nullopt when sub has smaller rank. Throws
// DimensionError if sub is not contained in super.
std::optional<Integer> relative_index(const Sublattice& sub, const Sublattice& super);

}  // namespace fanlat
