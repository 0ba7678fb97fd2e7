#include "chessboard/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace chessboard {

Rat dot(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_add(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_scale(const Rat& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool is_zero_vec(const Vec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

std::string vec_str(const Vec& a) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ",";
    os << rat_str(a[i]);
  }
  os << ")";
  return os.str();
}

int rref(Mat& m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    Rat inv = 1 / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

int rank(Mat m) { return rref(m); }

Mat nullspace(const Mat& rows, int d) {
  Mat m = rows;
#ifndef NDEBUG
  for (auto& row : m) assert(static_cast<int>(row.size()) == d);
#endif
  int r = rref(m);
  m.resize(r);
  // Locate pivot columns.
  std::vector<int> pivot_col(r);
  std::vector<bool> is_pivot(d, false);
  for (int i = 0; i < r; ++i) {
    int c = 0;
    while (m[i][c] == 0) ++c;
    pivot_col[i] = c;
    is_pivot[c] = true;
  }
  Mat basis;
  for (int freec = 0; freec < d; ++freec) {
    if (is_pivot[freec]) continue;
    Vec v(d, Rat(0));
    v[freec] = 1;
    for (int i = 0; i < r; ++i) v[pivot_col[i]] = -m[i][freec];
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat orthogonal_complement(const Mat& rows, int d) { return nullspace(rows, d); }

Vec canonical_direction(Vec v) {
  assert(!is_zero_vec(v));
  BigInt lcm_den = 1;
  for (const auto& x : v) lcm_den = lcm(lcm_den, x.get_den());
  BigInt g = 0;
  std::vector<BigInt> ints(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].get_num() * (lcm_den / v[i].get_den());
    g = gcd(g, ints[i]);
  }
  int lead_sign = 0;
  for (const auto& z : ints) {
    if (z != 0) {
      lead_sign = ::sgn(z);
      break;
    }
  }
  if (lead_sign < 0) g = -g;
  for (size_t i = 0; i < v.size(); ++i) v[i] = Rat(ints[i] / g);
  return v;
}

Subspace Subspace::span(Mat rows, int d) {
  Subspace s;
  s.ambient = d;
  s.dim = rref(rows);
  rows.resize(s.dim);
  s.basis = std::move(rows);
  std::ostringstream os;
  os << d << ":" << s.dim;
  for (const auto& row : s.basis) os << "|" << vec_str(row);
  s.token = os.str();
  return s;
}

Subspace Subspace::full(int d) {
  Mat rows;
  for (int i = 0; i < d; ++i) {
    Vec e(d, Rat(0));
    e[i] = 1;
    rows.push_back(std::move(e));
  }
  return span(std::move(rows), d);
}

Subspace Subspace::complement() const {
  return span(orthogonal_complement(basis, ambient), ambient);
}

bool Subspace::contains(const Vec& v) const {
  Mat m = basis;
  m.push_back(v);
  return rank(std::move(m)) == dim;
}

}  // namespace chessboard
