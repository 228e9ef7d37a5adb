#include "ordertree/zlinalg.hpp"

#include <cstdlib>

namespace ordertree {

IntMat hnf(IntMat M) {
  const int rows = M.rows(), cols = M.cols();
  int r = 0;  // next pivot row
  for (int c = 0; c < cols && r < rows; ++c) {
    // Euclid across rows r..end on column c until one nonzero entry remains.
    while (true) {
      int best = -1;
      for (int i = r; i < rows; ++i) {
        if (M(i, c) != 0 && (best < 0 || cmpabs(M(i, c).get_mpz_t(), M(best, c).get_mpz_t()) < 0)) best = i;
      }
      if (best < 0) break;  // column is zero below r
      M.swap_rows(r, best);
      if (M(r, c) < 0)
        for (int j = 0; j < cols; ++j) M(r, j) = -M(r, j);
      bool cleared = true;
      for (int i = r + 1; i < rows; ++i) {
        if (M(i, c) == 0) continue;
        Int q = fdiv_q(M(i, c), M(r, c));
        if (q != 0)
          for (int j = c; j < cols; ++j) M(i, j) -= q * M(r, j);
        if (M(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (M(r, c) != 0) {
      // reduce entries above the pivot into [0, pivot)
      for (int i = 0; i < r; ++i) {
        Int q = fdiv_q(M(i, c), M(r, c));
        if (q != 0)
          for (int j = c; j < cols; ++j) M(i, j) -= q * M(r, j);
      }
      ++r;
    }
  }
  IntMat H(r, cols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < cols; ++j) H(i, j) = M(i, j);
  return H;
}

IntMat hnf_full_rank(IntMat M) {
  IntMat H = hnf(std::move(M));
  OT_CHECK(H.rows() == H.cols(), ErrorCode::Precondition, "matrix rows do not span full rank");
  return H;
}

int hnf_rank(const IntMat& H) { return H.rows(); }

Int hnf_det(const IntMat& H) {
  OT_ASSERT(H.rows() == H.cols(), "hnf_det needs square HNF");
  Int d = 1;
  for (int i = 0; i < H.rows(); ++i) d *= H(i, i);
  return d;
}

Int det_bareiss(IntMat M) {
  OT_ASSERT(M.rows() == M.cols(), "det of non-square");
  const int n = M.rows();
  if (n == 0) return 1;
  Int denom = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (M(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (M(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      M.swap_rows(k, piv);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = M(i, j) * M(k, k) - M(i, k) * M(k, j);
        M(i, j) = divexact(t, denom);
      }
    denom = M(k, k);
  }
  return sign > 0 ? M(n - 1, n - 1) : Int(-M(n - 1, n - 1));
}

RatMat rat_inverse(RatMat M) {
  OT_ASSERT(M.rows() == M.cols(), "inverse of non-square");
  const int n = M.rows();
  RatMat I = RatMat::identity(n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (M(i, c) != 0) {
        piv = i;
        break;
      }
    OT_CHECK(piv >= 0, ErrorCode::Precondition, "singular matrix");
    M.swap_rows(c, piv);
    I.swap_rows(c, piv);
    Rat inv = 1 / M(c, c);
    for (int j = 0; j < n; ++j) {
      M(c, j) *= inv;
      I(c, j) *= inv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || M(i, c) == 0) continue;
      Rat f = M(i, c);
      for (int j = 0; j < n; ++j) {
        M(i, j) -= f * M(c, j);
        I(i, j) -= f * I(c, j);
      }
    }
  }
  return I;
}

std::vector<Rat> solve_upper_triangular(const IntMat& B, const std::vector<Rat>& t) {
  const int n = B.rows();
  OT_ASSERT(B.cols() == n && static_cast<int>(t.size()) == n, "solve shapes");
  std::vector<Rat> x(n), rhs = t;
  for (int i = 0; i < n; ++i) {
    OT_ASSERT(B(i, i) != 0, "triangular solve zero pivot");
    x[i] = rhs[i] / Rat(B(i, i));
    x[i].canonicalize();
    if (x[i] != 0)
      for (int j = i + 1; j < n; ++j) rhs[j] -= x[i] * Rat(B(i, j));
  }
  return x;
}

std::optional<std::vector<Int>> solve_integral(const IntMat& B, const std::vector<Int>& t) {
  const int n = B.rows();
  std::vector<Int> x(n), rhs = t;
  for (int i = 0; i < n; ++i) {
    if (!divides(B(i, i), rhs[i])) return std::nullopt;
    x[i] = divexact(rhs[i], B(i, i));
    if (x[i] != 0)
      for (int j = i + 1; j < n; ++j) rhs[j] -= x[i] * B(i, j);
  }
  return x;
}

Int content(const IntMat& M) {
  Int g = 0;
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) g = int_gcd(g, M(i, j));
  return g;
}

}  // namespace ordertree
