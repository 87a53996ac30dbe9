#include "densepts/linalg.hpp"

#include <algorithm>
#include <utility>

#include "densepts/errors.hpp"

namespace densepts {

namespace {

// In-place Bareiss elimination with row pivoting. Returns the rank; the
// signed determinant of a square full-rank matrix is left in `det`.
std::size_t bareiss(IntMatrix& m, Integer* det) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  Integer prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(m[piv], m[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  if (det) *det = (rows == cols && r == rows) ? Integer(sign * prev) : Integer(0);
  return r;
}

void for_each_subset(std::size_t n, std::size_t k, const auto& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Integer determinant(IntMatrix m) {
  if (m.empty()) return 1;
  if (m.size() != m[0].size()) throw DimensionError("determinant of a non-square matrix");
  if (m.size() == 1) return m[0][0];
  Integer det;
  bareiss(m, &det);
  return det;
}

std::size_t rank(IntMatrix m) {
  if (m.empty()) return 0;
  return bareiss(m, nullptr);
}

std::vector<Integer> minors(const IntMatrix& m, std::size_t k) {
  std::vector<Integer> out;
  if (m.empty()) return out;
  const std::size_t rows = m.size(), cols = m[0].size();
  for_each_subset(rows, k, [&](const std::vector<std::size_t>& rs) {
    for_each_subset(cols, k, [&](const std::vector<std::size_t>& cs) {
      IntMatrix sub(k, IntVector(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[rs[i]][cs[j]];
      out.push_back(determinant(std::move(sub)));
    });
  });
  return out;
}

Integer maximal_minor_gcd(const IntMatrix& m) {
  if (m.empty()) return 1;
  if (m.size() > m[0].size()) return 0;
  auto all = minors(m, m.size());
  return gcd_of(all);
}

IntMatrix kernel_basis(const IntMatrix& m) {
  if (m.empty()) return {};
  const std::size_t rows = m.size(), cols = m[0].size();
  RatMatrix a(rows, RatVector(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];

  // reduced row echelon form over Q
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    Rational inv = 1 / a[r][c];
    for (auto& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }

  IntMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    RatVector v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][free];
    Integer den = 1;
    for (auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    IntVector iv(cols);
    for (std::size_t j = 0; j < cols; ++j) iv[j] = v[j].get_num() * (den / v[j].get_den());
    make_primitive(iv);
    basis.push_back(std::move(iv));
  }
  return basis;
}

std::optional<RatMatrix> inverse(const IntMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix a(n, RatVector(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DimensionError("inverse of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[c]);
    Rational inv = 1 / a[c][c];
    for (auto& v : a[c]) v *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  RatMatrix out(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

IntVector multiply(const IntMatrix& m, const IntVector& x) {
  IntVector out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != x.size()) throw DimensionError("matrix-vector size mismatch");
    for (std::size_t j = 0; j < x.size(); ++j) out[i] += m[i][j] * x[j];
  }
  return out;
}

RatVector multiply(const RatMatrix& m, const RatVector& x) {
  RatVector out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != x.size()) throw DimensionError("matrix-vector size mismatch");
    for (std::size_t j = 0; j < x.size(); ++j) out[i] += m[i][j] * x[j];
  }
  return out;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot product size mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool make_primitive(IntVector& v) {
  Integer g = gcd_of(v);
  if (g == 0) return false;
  auto first = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
  if (*first < 0) g = -g;
  if (g != 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return true;
}

bool IncrementalEchelon::insert(IntVector row) {
  if (row.size() != columns_) throw DimensionError("echelon row has the wrong length");
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    const std::size_t c = pivots_[b];
    if (row[c] == 0) continue;
    const IntVector& e = basis_[b];
    Integer g = gcd(e[c], row[c]);
    Integer fe = e[c] / g, fr = row[c] / g;
    for (std::size_t j = 0; j < columns_; ++j) row[j] = fe * row[j] - fr * e[j];
    make_primitive(row);
  }
  auto it = std::find_if(row.begin(), row.end(), [](const Integer& x) { return x != 0; });
  if (it == row.end()) return false;
  make_primitive(row);
  pivots_.push_back(static_cast<std::size_t>(it - row.begin()));
  basis_.push_back(std::move(row));
  return true;
}

}  // namespace densepts
