#include "mcg/linalg.hpp"

#include <algorithm>

namespace mcg {

IMat mul(const IMat& A, const IMat& B) {
  require(A.cols == B.rows, "mul: shape mismatch");
  IMat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      const Int& x = A(i, k);
      if (x == 0) continue;
      for (int j = 0; j < B.cols; ++j) C(i, j) += x * B(k, j);
    }
  return C;
}

IMat transpose(const IMat& A) {
  IMat T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T(j, i) = A(i, j);
  return T;
}

IVec mul(const IMat& A, const IVec& v) {
  require(static_cast<int>(v.size()) == A.cols, "mul: vector size mismatch");
  IVec r(A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j)
      if (A(i, j) != 0) r[i] += A(i, j) * v[j];
  return r;
}

Int bilinear(const IVec& v, const IMat& A, const IVec& w) {
  IVec Aw = mul(A, w);
  Int s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s += v[i] * Aw[i];
  return s;
}

namespace {

struct QMat {
  int rows, cols;
  std::vector<Rat> a;
  QMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  Rat& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
};

}  // namespace

IMat kernel_basis(const IMat& A) {
  const int m = A.rows, n = A.cols;
  QMat M(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) M(i, j) = Rat(A(i, j));

  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int p = -1;
    for (int i = row; i < m; ++i)
      if (M(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = col; j < n; ++j) std::swap(M(p, j), M(row, j));
    Rat inv = 1 / M(row, col);
    for (int j = col; j < n; ++j) M(row, j) *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == row || M(i, col) == 0) continue;
      Rat f = M(i, col);
      for (int j = col; j < n; ++j) M(i, j) -= f * M(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }

  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  IMat K(n, static_cast<int>(free_cols.size()));
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    int fc = free_cols[t];
    // rational kernel vector: x_fc = 1, x_pivot = -M(row, fc)
    std::vector<Rat> x(n);
    x[fc] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = -M(static_cast<int>(r), fc);
    Int lcm = 1;
    for (int j = 0; j < n; ++j) lcm = lcm / gcd(lcm, x[j].get_den()) * x[j].get_den();
    IVec v(n);
    Int g = 0;
    for (int j = 0; j < n; ++j) {
      v[j] = x[j].get_num() * (lcm / x[j].get_den());
      g = gcd(g, v[j]);
    }
    if (g > 1)
      for (int j = 0; j < n; ++j) v[j] /= g;
    for (int j = 0; j < n; ++j) K(j, static_cast<int>(t)) = v[j];
  }
  return K;
}

IMat restrict_form(const IMat& Q, const IMat& K) {
  return mul(transpose(K), mul(Q, K));
}

SymDiag symmetric_diagonalize(const IMat& S) {
  require(S.rows == S.cols, "symmetric_diagonalize: not square");
  const int n = S.rows;
  QMat M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M(i, j) = Rat(S(i, j));

  SymDiag out;
  std::vector<bool> done(n, false);
  for (;;) {
    // a nonzero diagonal pivot if possible
    int p = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && M(i, i) != 0) {
        p = i;
        break;
      }
    if (p < 0) {
      // zero diagonal everywhere: look for a hyperbolic pair and convert it
      // into a usable pivot by the congruence e_i += e_j.
      int bi = -1, bj = -1;
      for (int i = 0; i < n && bi < 0; ++i) {
        if (done[i]) continue;
        for (int j = i + 1; j < n; ++j)
          if (!done[j] && M(i, j) != 0) {
            bi = i;
            bj = j;
            break;
          }
      }
      if (bi < 0) break;  // remaining block is zero
      for (int k = 0; k < n; ++k)
        if (!done[k]) M(bi, k) += M(bj, k);
      for (int k = 0; k < n; ++k)
        if (!done[k]) M(k, bi) += M(k, bj);
      continue;
    }
    Rat d = M(p, p);
    if (d > 0)
      ++out.positives;
    else
      ++out.negatives;
    done[p] = true;
    for (int i = 0; i < n; ++i) {
      if (done[i] || M(i, p) == 0) continue;
      Rat f = M(i, p) / d;
      for (int j = 0; j < n; ++j)
        if (!done[j] || j == p) M(i, j) -= f * M(p, j);
    }
    for (int j = 0; j < n; ++j)
      if (!done[j]) M(p, j) = 0;
    // column entries against p are dead from now on
  }
  return out;
}

IMat abelianize(const Automorphism& f) {
  const int n = f.rank();
  IMat M(n, n);
  for (int j = 1; j <= n; ++j)
    for (Letter l : f.image(j).letters()) {
      int i = std::abs(l) - 1;
      M(i, j - 1) += l > 0 ? 1 : -1;
    }
  return M;
}

long rank_rational(const IMat& A) {
  const int m = A.rows, n = A.cols;
  QMat M(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) M(i, j) = Rat(A(i, j));
  long rank = 0;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int p = -1;
    for (int i = row; i < m; ++i)
      if (M(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = col; j < n; ++j) std::swap(M(p, j), M(row, j));
    for (int i = row + 1; i < m; ++i) {
      if (M(i, col) == 0) continue;
      Rat f = M(i, col) / M(row, col);
      for (int j = col; j < n; ++j) M(i, j) -= f * M(row, j);
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace mcg
