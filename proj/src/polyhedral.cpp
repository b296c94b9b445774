#include "fanlat/polyhedral.hpp"

#include <algorithm>
#include <set>

#include "fanlat/errors.hpp"

namespace fanlat {
namespace {

using RatRow = std::vector<Rational>;

struct Echelon {
  std::vector<RatRow> rows;          // reduced rows of [A | b], zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column per row
  bool consistent = true;
};

Echelon reduce(const IntMatrix& a, std::span<const Integer> b) {
  if (b.size() != a.rows()) throw DimensionError("right-hand side length does not match rows");
  const std::size_t n = a.cols();
  std::vector<RatRow> m(a.rows(), RatRow(n + 1));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    m[i][n] = b[i];
  }
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m.size(); ++i)
    if (sgn(m[i][n]) != 0) out.consistent = false;
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

// g . y <= h, stored as [g..., h], scaled so the largest |entry| of g is 1.
void normalize(RatRow& c) {
  Rational scale = 0;
  for (std::size_t j = 0; j + 1 < c.size(); ++j) scale = std::max(scale, Rational(abs(c[j])));
  if (sgn(scale) == 0) return;
  for (auto& x : c) x /= scale;
}

}  // namespace

std::optional<std::vector<Rational>> rational_solve(const IntMatrix& a, std::span<const Integer> b) {
  const Echelon e = reduce(a, b);
  if (!e.consistent) return std::nullopt;
  if (e.pivots.size() != a.cols()) throw DimensionError("columns are not linearly independent");
  std::vector<Rational> x(a.cols());
  for (std::size_t i = 0; i < e.rows.size(); ++i) x[e.pivots[i]] = e.rows[i][a.cols()];
  return x;
}

std::optional<bool> nonnegative_feasible(const IntMatrix& a, std::span<const Integer> b,
                                         std::size_t constraint_limit) {
  const Echelon e = reduce(a, b);
  if (!e.consistent) return false;
  const std::size_t n = a.cols();
  std::vector<std::size_t> free_vars;
  for (std::size_t j = 0; j < n; ++j)
    if (std::find(e.pivots.begin(), e.pivots.end(), j) == e.pivots.end()) free_vars.push_back(j);
  const std::size_t k = free_vars.size();

  // Pivot variable x_p = beta - sum alpha_f y_f must be >= 0, i.e.
  // sum alpha_f y_f <= beta. Free variables: -y_f <= 0.
  std::set<RatRow> constraints;
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    RatRow c(k + 1);
    for (std::size_t f = 0; f < k; ++f) c[f] = e.rows[i][free_vars[f]];
    c[k] = e.rows[i][n];
    normalize(c);
    constraints.insert(std::move(c));
  }
  for (std::size_t f = 0; f < k; ++f) {
    RatRow c(k + 1);
    c[f] = -1;
    constraints.insert(std::move(c));
  }

  for (std::size_t v = 0; v < k; ++v) {
    std::vector<RatRow> pos, neg;
    std::set<RatRow> next;
    for (const auto& c : constraints) {
      const int s = sgn(c[v]);
      if (s > 0) pos.push_back(c);
      else if (s < 0) neg.push_back(c);
      else next.insert(c);
    }
    if (next.size() + pos.size() * neg.size() > constraint_limit) return std::nullopt;
    for (const auto& p : pos)
      for (const auto& q : neg) {
        RatRow c(k + 1);
        const Rational wp = -q[v];
        const Rational wq = p[v];
        for (std::size_t j = 0; j <= k; ++j) c[j] = wp * p[j] + wq * q[j];
        c[v] = 0;
        normalize(c);
        next.insert(std::move(c));
      }
    constraints = std::move(next);
  }
  return std::all_of(constraints.begin(), constraints.end(),
                     [k](const RatRow& c) { return sgn(c[k]) >= 0; });
}

}  // namespace fanlat
