// Exact integer linear algebra: dense matrices over arbitrary-precision
// integers, Hermite and Smith normal forms, determinants, kernel bases.

#ifndef GGP_ZMAT_HPP
#define GGP_ZMAT_HPP

#include <vector>

#include "ggp/numeric.hpp"

namespace ggp {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);  // zero-filled
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  const Int& at(int r, int c) const {
    return entries_[static_cast<size_t>(r) * cols_ + c];
  }

  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const = default;

  bool is_zero() const;
  std::string str() const;  // bracketed integer rows

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> entries_;
};

// U*M*V = S with U, V unimodular, S diagonal, d1 | d2 | ..., nonzero diagonal
// entries positive.
struct SmithDecomposition {
  IntMatrix u, s, v;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// U*M = H with U unimodular, H in row echelon form with positive pivots and
// entries above each pivot reduced into [0, pivot).
struct HermiteDecomposition {
  IntMatrix h, u;
};

HermiteDecomposition hermite_normal_form(const IntMatrix& m);

Int determinant(const IntMatrix& m);  // fraction-free elimination; square only
int rank(const IntMatrix& m);

// Lattice basis of {x : M*x = 0}; size = cols - rank(M).  Each vector has its
// first nonzero entry positive.
std::vector<std::vector<Int>> integer_kernel_basis(const IntMatrix& m);

}  // namespace ggp

#endif
