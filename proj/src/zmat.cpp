#include "ggp/zmat.hpp"

#include <sstream>

namespace ggp {

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw InputError("ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw InputError("matrix dimension mismatch");
  IntMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < other.cols_; ++j) out.at(i, j) += a * other.at(k, j);
    }
  return out;
}

bool IntMatrix::is_zero() const {
  for (const Int& e : entries_)
    if (e != 0) return false;
  return true;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << '[';
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    os << ']';
    if (i + 1 < rows_) os << '\n';
  }
  return os.str();
}

namespace {

// Elementary operations mirrored onto the transformation matrices so that
// u * original * v stays equal to the working matrix.
struct SmithState {
  IntMatrix m, u, v;

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
    for (int j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
    for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
  }
  void add_row(int dst, int src, const Int& q) {  // row dst += q * row src
    if (q == 0) return;
    for (int j = 0; j < m.cols(); ++j) m.at(dst, j) += q * m.at(src, j);
    for (int j = 0; j < u.cols(); ++j) u.at(dst, j) += q * u.at(src, j);
  }
  void add_col(int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < m.rows(); ++i) m.at(i, dst) += q * m.at(i, src);
    for (int i = 0; i < v.rows(); ++i) v.at(i, dst) += q * v.at(i, src);
  }
  void negate_row(int r) {
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
    for (int j = 0; j < u.cols(); ++j) u.at(r, j) = -u.at(r, j);
  }

  // Smallest nonzero absolute value in the trailing submatrix, ties broken by
  // lowest (row, col).  Returns false when the submatrix is zero.
  bool find_pivot(int t, int& pr, int& pc) const {
    bool found = false;
    Int best;
    for (int i = t; i < m.rows(); ++i)
      for (int j = t; j < m.cols(); ++j) {
        const Int& e = m.at(i, j);
        if (e == 0) continue;
        Int a = int_abs(e);
        if (!found || a < best) {
          found = true;
          best = a;
          pr = i;
          pc = j;
        }
      }
    return found;
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  SmithState st{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  int nmin = std::min(m.rows(), m.cols());
  for (int t = 0; t < nmin; ++t) {
    int pr, pc;
    if (!st.find_pivot(t, pr, pc)) break;  // trailing submatrix is zero
    st.swap_rows(t, pr);
    st.swap_cols(t, pc);
    for (;;) {
      // Clear column t; a nonzero remainder becomes a strictly smaller pivot.
      bool restart = false;
      for (int i = t + 1; i < st.m.rows(); ++i) {
        if (st.m.at(i, t) == 0) continue;
        Int q = st.m.at(i, t) / st.m.at(t, t);
        st.add_row(i, t, -q);
        if (st.m.at(i, t) != 0) {
          st.swap_rows(t, i);
          restart = true;
        }
      }
      if (restart) continue;
      bool restart_col = false;
      for (int j = t + 1; j < st.m.cols(); ++j) {
        if (st.m.at(t, j) == 0) continue;
        Int q = st.m.at(t, j) / st.m.at(t, t);
        st.add_col(j, t, -q);
        if (st.m.at(t, j) != 0) {
          st.swap_cols(t, j);
          restart_col = true;
        }
      }
      if (restart_col) continue;
      // Row and column are clear; force the pivot to divide the rest of the
      // submatrix so the diagonal comes out as a divisibility chain.
      bool fixed = false;
      for (int i = t + 1; i < st.m.rows() && !fixed; ++i)
        for (int j = t + 1; j < st.m.cols() && !fixed; ++j)
          if (st.m.at(i, j) % st.m.at(t, t) != 0) {
            st.add_row(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (st.m.at(t, t) < 0) st.negate_row(t);
  }
  return {st.u, st.m, st.v};
}

HermiteDecomposition hermite_normal_form(const IntMatrix& m) {
  SmithState st{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    // Euclidean elimination within the column.
    for (;;) {
      int pr = -1;
      Int best;
      for (int i = row; i < st.m.rows(); ++i) {
        const Int& e = st.m.at(i, col);
        if (e == 0) continue;
        Int a = int_abs(e);
        if (pr < 0 || a < best) {
          pr = i;
          best = a;
        }
      }
      if (pr < 0) break;
      st.swap_rows(row, pr);
      bool clear = true;
      for (int i = row + 1; i < st.m.rows(); ++i) {
        if (st.m.at(i, col) == 0) continue;
        Int q = st.m.at(i, col) / st.m.at(row, col);
        st.add_row(i, row, -q);
        if (st.m.at(i, col) != 0) clear = false;
      }
      if (clear) break;
    }
    if (st.m.at(row, col) == 0) continue;
    if (st.m.at(row, col) < 0) st.negate_row(row);
    // Reduce entries above the pivot into [0, pivot).
    for (int i = 0; i < row; ++i) {
      Int q = st.m.at(i, col) / st.m.at(row, col);
      if (st.m.at(i, col) - q * st.m.at(row, col) < 0) q -= 1;
      st.add_row(i, row, -q);
    }
    ++row;
  }
  return {st.m, st.u};
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of non-square matrix");
  int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;  // Bareiss fraction-free elimination
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

int rank(const IntMatrix& m) {
  IntMatrix s = smith_normal_form(m).s;
  int r = 0;
  for (int i = 0; i < std::min(s.rows(), s.cols()); ++i)
    if (s.at(i, i) != 0) ++r;
  return r;
}

std::vector<std::vector<Int>> integer_kernel_basis(const IntMatrix& m) {
  SmithDecomposition d = smith_normal_form(m);
  int nmin = std::min(d.s.rows(), d.s.cols());
  std::vector<std::vector<Int>> basis;
  // Columns of V past the rank span the kernel lattice; V unimodular makes
  // them a primitive basis.
  for (int j = 0; j < m.cols(); ++j) {
    if (j < nmin && d.s.at(j, j) != 0) continue;
    std::vector<Int> vec(m.cols());
    for (int i = 0; i < m.cols(); ++i) vec[i] = d.v.at(i, j);
    for (const Int& e : vec) {
      if (e == 0) continue;
      if (e < 0)
        for (Int& x : vec) x = -x;
      break;
    }
    basis.push_back(std::move(vec));
  }
  return basis;
}

}  // namespace ggp
