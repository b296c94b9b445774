#include "fanlat/intlin.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "fanlat/errors.hpp"

namespace fanlat {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("row length does not match column count");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DimensionError("column length does not match row count");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::row_vector(std::size_t i) const {
  auto r = row(i);
  return {r.begin(), r.end()};
}

IntVector IntMatrix::column_vector(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<IntVector> IntMatrix::row_vectors() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_vector(i));
  return out;
}

void IntMatrix::append_row(std::span<const Integer> r) {
  if (r.size() != cols_) throw DimensionError("appended row has wrong length");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::truncate_rows(std::size_t n) {
  if (n >= rows_) return;
  rows_ = n;
  data_.resize(rows_ * cols_);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::select_rows(std::size_t first, std::size_t last) const {
  IntMatrix out(last - first, cols_);
  for (std::size_t i = first; i < last; ++i)
    std::copy(row(i).begin(), row(i).end(), out.row(i - first).begin());
  return out;
}

IntMatrix IntMatrix::select_columns(std::span<const std::size_t> columns) const {
  IntMatrix out(rows_, columns.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < columns.size(); ++k) out(i, k) = (*this)(i, columns[k]);
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return sgn(x) == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntVector operator*(const IntMatrix& a, std::span<const Integer> v) {
  if (a.cols() != v.size()) throw DimensionError("matrix-vector product shape mismatch");
  IntVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << to_string(m.row(i));
  }
  return os << ']';
}

std::string to_string(std::span<const Integer> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

IntVector make_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  return abs(determinant(m)) == 1;
}

namespace {

// rows[target] += factor * rows[source]
void add_row_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) += factor * m(source, j);
}

void add_col_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
  if (sgn(factor) == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) += factor * m(i, source);
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (auto& x : m.row(i)) x = -x;
}

// Replaces rows (p, q) by the unimodular combination
//   p' = s*p + t*q,  q' = -(b/g)*p + (a/g)*q
// where a, b are the entries in column `col` and g = s*a + t*b = gcd(a, b).
// Afterwards entry (q, col) is zero.
void row_gcd_step(IntMatrix& m, IntMatrix& u, std::size_t p, std::size_t q, std::size_t col) {
  const Integer a = m(p, col);
  const Integer b = m(q, col);
  if (sgn(b) == 0) return;
  if (sgn(a) != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
    const Integer f = -(b / a);
    add_row_multiple(m, q, p, f);
    add_row_multiple(u, q, p, f);
    return;
  }
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  const Integer bg = b / g;
  const Integer ag = a / g;
  auto combine = [&](IntMatrix& x) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      Integer xp = x(p, j);
      Integer xq = x(q, j);
      x(p, j) = s * xp + t * xq;
      x(q, j) = ag * xq - bg * xp;
    }
  };
  combine(m);
  combine(u);
}

// Column analogue of row_gcd_step; zeroes entry (row, q).
void col_gcd_step(IntMatrix& m, IntMatrix& w, std::size_t p, std::size_t q, std::size_t row) {
  const Integer a = m(row, p);
  const Integer b = m(row, q);
  if (sgn(b) == 0) return;
  if (sgn(a) != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
    const Integer f = -(b / a);
    add_col_multiple(m, q, p, f);
    add_col_multiple(w, q, p, f);
    return;
  }
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  const Integer bg = b / g;
  const Integer ag = a / g;
  auto combine = [&](IntMatrix& x) {
    for (std::size_t i = 0; i < x.rows(); ++i) {
      Integer xp = x(i, p);
      Integer xq = x(i, q);
      x(i, p) = s * xp + t * xq;
      x(i, q) = ag * xq - bg * xp;
    }
  };
  combine(m);
  combine(w);
}

}  // namespace

HermiteForm hnf(const IntMatrix& m) {
  HermiteForm out{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    // Smallest nonzero magnitude as pivot keeps intermediate entries small.
    std::size_t best = h.rows();
    for (std::size_t i = r; i < h.rows(); ++i) {
      if (sgn(h(i, c)) == 0) continue;
      if (best == h.rows() || abs(h(i, c)) < abs(h(best, c))) best = i;
    }
    if (best == h.rows()) continue;
    h.swap_rows(r, best);
    u.swap_rows(r, best);
    for (std::size_t i = r + 1; i < h.rows(); ++i) row_gcd_step(h, u, r, i, c);
    if (sgn(h(r, c)) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      add_row_multiple(h, i, r, -q);
      add_row_multiple(u, i, r, -q);
    }
    ++r;
  }
  out.rank = r;
  return out;
}

bool is_hnf(const IntMatrix& h) {
  std::size_t next_col = 0;
  bool seen_zero_row = false;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    auto r = h.row(i);
    auto it = std::find_if(r.begin(), r.end(), [](const Integer& x) { return sgn(x) != 0; });
    if (it == r.end()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    const std::size_t c = static_cast<std::size_t>(it - r.begin());
    if (c < next_col || sgn(*it) <= 0) return false;
    pivots.emplace_back(i, c);
    next_col = c + 1;
  }
  for (auto [pi, pc] : pivots) {
    const Integer& p = h(pi, pc);
    for (std::size_t i = 0; i < pi; ++i)
      if (sgn(h(i, pc)) < 0 || h(i, pc) >= p) return false;
  }
  return true;
}

SmithForm snf(const IntMatrix& m) {
  SmithForm out{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& s = out.s;
  IntMatrix& u = out.u;
  IntMatrix& w = out.w;
  const std::size_t n = std::min(s.rows(), s.cols());
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t bi = s.rows();
    std::size_t bj = s.cols();
    for (std::size_t i = t; i < s.rows(); ++i)
      for (std::size_t j = t; j < s.cols(); ++j) {
        if (sgn(s(i, j)) == 0) continue;
        if (bi == s.rows() || abs(s(i, j)) < abs(s(bi, bj))) {
          bi = i;
          bj = j;
        }
      }
    if (bi == s.rows()) break;
    s.swap_rows(t, bi);
    u.swap_rows(t, bi);
    s.swap_cols(t, bj);
    w.swap_cols(t, bj);

    while (true) {
      for (std::size_t i = t + 1; i < s.rows(); ++i) row_gcd_step(s, u, t, i, t);
      for (std::size_t j = t + 1; j < s.cols(); ++j) col_gcd_step(s, w, t, j, t);
      bool column_clear = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i)
        if (sgn(s(i, t)) != 0) column_clear = false;
      if (!column_clear) continue;
      // Enforce d_t | every remaining entry.
      std::size_t bad = s.rows();
      for (std::size_t i = t + 1; i < s.rows() && bad == s.rows(); ++i)
        for (std::size_t j = t + 1; j < s.cols(); ++j)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == s.rows()) break;
      add_row_multiple(s, t, bad, Integer(1));
      add_row_multiple(u, t, bad, Integer(1));
    }
    if (sgn(s(t, t)) < 0) {
      negate_row(s, t);
      negate_row(u, t);
    }
  }
  return out;
}

IntVector smith_diagonal(const IntMatrix& s) {
  const std::size_t n = std::min(s.rows(), s.cols());
  IntVector d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = s(i, i);
  return d;
}

std::size_t matrix_rank(const IntMatrix& m) { return hnf(m).rank; }

std::optional<IntVector> integer_solve(const IntMatrix& m, std::span<const Integer> b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side length does not match rows");
  // Rows of h span the same lattice as the columns of m; h = u * m^T.
  const HermiteForm f = hnf(m.transpose());
  IntVector rest(b.begin(), b.end());
  IntVector coeffs(f.rank);
  std::size_t col = 0;
  for (std::size_t i = 0; i < f.rank; ++i) {
    while (sgn(f.h(i, col)) == 0) ++col;
    const Integer& p = f.h(i, col);
    if (!mpz_divisible_p(rest[col].get_mpz_t(), p.get_mpz_t())) return std::nullopt;
    coeffs[i] = rest[col] / p;
    for (std::size_t j = col; j < f.h.cols(); ++j) rest[j] -= coeffs[i] * f.h(i, j);
  }
  if (!is_zero(rest)) return std::nullopt;
  IntVector x(m.cols());
  for (std::size_t i = 0; i < f.rank; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) x[j] += coeffs[i] * f.u(i, j);
  return x;
}

Sublattice::Sublattice(std::size_t ambient_rank)
    : ambient_rank_(ambient_rank), basis_(0, ambient_rank) {}

Sublattice Sublattice::generated_by(std::size_t ambient_rank, const IntMatrix& generators) {
  if (generators.cols() != ambient_rank)
    throw DimensionError("generator length does not match ambient rank");
  Sublattice out(ambient_rank);
  HermiteForm f = hnf(generators);
  f.h.truncate_rows(f.rank);
  out.basis_ = std::move(f.h);
  return out;
}

Sublattice Sublattice::generated_by(std::size_t ambient_rank,
                                    const std::vector<IntVector>& generators) {
  return generated_by(ambient_rank, IntMatrix::from_rows(generators, ambient_rank));
}

Sublattice Sublattice::full(std::size_t ambient_rank) {
  Sublattice out(ambient_rank);
  out.basis_ = IntMatrix::identity(ambient_rank);
  return out;
}

std::optional<IntVector> Sublattice::coordinates(std::span<const Integer> v) const {
  if (v.size() != ambient_rank_) throw DimensionError("vector length does not match ambient rank");
  IntVector rest(v.begin(), v.end());
  IntVector coeffs(rank());
  std::size_t col = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    while (sgn(basis_(i, col)) == 0) ++col;
    const Integer& p = basis_(i, col);
    if (!mpz_divisible_p(rest[col].get_mpz_t(), p.get_mpz_t())) return std::nullopt;
    coeffs[i] = rest[col] / p;
    for (std::size_t j = col; j < ambient_rank_; ++j) rest[j] -= coeffs[i] * basis_(i, j);
  }
  if (!is_zero(rest)) return std::nullopt;
  return coeffs;
}

bool Sublattice::contains(std::span<const Integer> v) const { return coordinates(v).has_value(); }

bool Sublattice::contains(const Sublattice& other) const {
  if (other.ambient_rank_ != ambient_rank_) throw DimensionError("ambient rank mismatch");
  for (std::size_t i = 0; i < other.rank(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Sublattice integer_kernel(const IntMatrix& m) {
  const HermiteForm f = hnf(m.transpose());
  return Sublattice::generated_by(m.cols(), f.u.select_rows(f.rank, f.u.rows()));
}

bool member(std::span<const Integer> v, const Sublattice& lattice) { return lattice.contains(v); }

Sublattice lattice_sum(std::span<const Sublattice> parts, std::size_t ambient_rank) {
  IntMatrix stacked(0, ambient_rank);
  for (const auto& p : parts) {
    if (p.ambient_rank() != ambient_rank) throw DimensionError("ambient rank mismatch in lattice sum");
    for (std::size_t i = 0; i < p.rank(); ++i) stacked.append_row(p.basis().row(i));
  }
  return Sublattice::generated_by(ambient_rank, stacked);
}

Sublattice lattice_sum(std::span<const Sublattice> parts) {
  return lattice_sum(parts, parts.empty() ? 0 : parts.front().ambient_rank());
}

bool lattice_equal(const Sublattice& a, const Sublattice& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw DimensionError("ambient rank mismatch");
  return a == b;
}

Sublattice saturation(const Sublattice& lattice) {
  // The rational span meets Z^n in the kernel of the annihilator.
  const Sublattice annihilator = integer_kernel(lattice.basis());
  return integer_kernel(annihilator.basis());
}

std::optional<Integer> relative_index(const Sublattice& sub, const Sublattice& super) {
  if (!super.contains(sub)) throw DimensionError("sublattice is not contained in the larger lattice");
  if (sub.rank() < super.rank()) return std::nullopt;
  IntMatrix coords(sub.rank(), super.rank());
  for (std::size_t i = 0; i < sub.rank(); ++i) {
    const IntVector c = *super.coordinates(sub.basis().row(i));
    for (std::size_t j = 0; j < c.size(); ++j) coords(i, j) = c[j];
  }
  return Integer(abs(determinant(coords)));
}

std::optional<Integer> sublattice_index(const Sublattice& lattice) {
  if (lattice.rank() != lattice.ambient_rank()) return std::nullopt;
  Integer index = 1;
  for (std::size_t i = 0; i < lattice.rank(); ++i) index *= lattice.basis()(i, i);
  return index;
}

}  // namespace fanlat
