#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chessboard/rational.hpp"

namespace chessboard {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row-major

Rat dot(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_scale(const Rat& c, const Vec& a);
bool is_zero_vec(const Vec& a);
std::string vec_str(const Vec& a);

// Reduced row echelon form (in place copy); returns the rank.
int rref(Mat& m);
int rank(Mat m);

// Basis (rows) of {x : row·x = 0 for every row}. `d` is the ambient
// dimension; rows may be empty.
Mat nullspace(const Mat& rows, int d);

// Basis of the orthogonal complement of span(rows) in R^d.
Mat orthogonal_complement(const Mat& rows, int d);

// Scales to a primitive integer vector with positive leading coordinate.
// This is the canonical representative of a projective direction.
Vec canonical_direction(Vec v);

// Linear subspace with a cached canonical form. Equal subspaces compare equal
// via `token` regardless of the basis they were built from.
struct Subspace {
  int ambient = 0;
  int dim = 0;
  Mat basis;      // canonical RREF rows
  std::string token;

  static Subspace span(Mat rows, int d);
  static Subspace full(int d);
  Subspace complement() const;
  bool contains(const Vec& v) const;
};

}  // namespace chessboard
