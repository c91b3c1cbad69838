#include "latspan/intmat.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace latspan {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat matmul(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.rows()) throw std::logic_error("matmul: shape mismatch");
  IntMat c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const BigInt& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

IntMat transpose(const IntMat& m) {
  IntMat t(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
  return t;
}

BigInt bareiss_determinant(IntMat m) {
  if (m.rows() != m.cols()) throw std::logic_error("determinant: matrix not square");
  int n = m.rows();
  if (n == 0) return 1;

  int sign = 1;
  BigInt prev = 1, t1, t2;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = k; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    const BigInt& piv = m.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        // m[i][j] = (m[i][j]*piv - m[i][k]*m[k][j]) / prev, division exact
        mpz_mul(t1.get_mpz_t(), m.at(i, j).get_mpz_t(), piv.get_mpz_t());
        mpz_mul(t2.get_mpz_t(), m.at(i, k).get_mpz_t(), m.at(k, j).get_mpz_t());
        mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
        mpz_divexact(m.at(i, j).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, k) = 0;
    }
    prev = piv;
  }
  return sign > 0 ? m.at(n - 1, n - 1) : BigInt(-m.at(n - 1, n - 1));
}

namespace {

void negate_col(IntMat& m, int c) {
  for (int i = 0; i < m.rows(); ++i) m.at(i, c) = -m.at(i, c);
}

void add_col_multiple(IntMat& m, int dst, int src, const BigInt& q) {
  if (q == 0) return;
  for (int i = 0; i < m.rows(); ++i) m.at(i, dst) += q * m.at(i, src);
}

void swap_cols(IntMat& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

}  // namespace

IntMat hermite_column_form(IntMat m) {
  int c = 0;
  for (int r = 0; r < m.rows() && c < m.cols(); ++r) {
    // Gather the gcd of row r (columns >= c) into column c by euclidean steps.
    for (;;) {
      int best = -1;
      for (int j = c; j < m.cols(); ++j) {
        if (m.at(r, j) == 0) continue;
        if (best < 0 || cmp(abs(m.at(r, j)), abs(m.at(r, best))) < 0) best = j;
      }
      if (best < 0) break;  // row r is zero from column c on
      swap_cols(m, c, best);
      if (m.at(r, c) < 0) negate_col(m, c);
      bool more = false;
      for (int j = c + 1; j < m.cols(); ++j) {
        if (m.at(r, j) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), m.at(r, j).get_mpz_t(), m.at(r, c).get_mpz_t());
        add_col_multiple(m, j, c, -q);
        if (m.at(r, j) != 0) more = true;
      }
      if (!more) break;
    }
    if (c < m.cols() && m.at(r, c) != 0) {
      // Reduce earlier pivot columns into [0, pivot) at this row.
      for (int j = 0; j < c; ++j) {
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), m.at(r, j).get_mpz_t(), m.at(r, c).get_mpz_t());
        add_col_multiple(m, j, c, -q);
      }
      ++c;
    }
  }
  IntMat out(m.rows(), c);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < c; ++j) out.at(i, j) = m.at(i, j);
  return out;
}

SmithDecomposition smith_normal_form(const IntMat& a) {
  if (a.rows() != a.cols()) throw std::logic_error("smith_normal_form: matrix not square");
  int n = a.rows();
  IntMat d = a;
  IntMat left = IntMat::identity(n);
  IntMat right = IntMat::identity(n);

  auto row_op = [&](IntMat& m, int dst, int src, const BigInt& q) {
    for (int j = 0; j < m.cols(); ++j) m.at(dst, j) += q * m.at(src, j);
  };
  auto swap_rows = [&](IntMat& m, int x, int y) {
    if (x == y) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(x, j), m.at(y, j));
  };

  for (int s = 0; s < n; ++s) {
    for (;;) {
      // Smallest nonzero |entry| of the trailing block moves to (s, s).
      int pi = -1, pj = -1;
      for (int i = s; i < n; ++i)
        for (int j = s; j < n; ++j) {
          if (d.at(i, j) == 0) continue;
          if (pi < 0 || cmp(abs(d.at(i, j)), abs(d.at(pi, pj))) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) throw std::logic_error("smith_normal_form: singular matrix");
      swap_rows(d, s, pi);
      swap_rows(left, s, pi);
      swap_cols(d, s, pj);
      swap_cols(right, s, pj);

      bool clean = true;
      for (int i = s + 1; i < n; ++i) {
        if (d.at(i, s) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), d.at(i, s).get_mpz_t(), d.at(s, s).get_mpz_t());
        row_op(d, i, s, -q);
        row_op(left, i, s, -q);
        if (d.at(i, s) != 0) clean = false;
      }
      for (int j = s + 1; j < n; ++j) {
        if (d.at(s, j) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), d.at(s, j).get_mpz_t(), d.at(s, s).get_mpz_t());
        add_col_multiple(d, j, s, -q);
        add_col_multiple(right, j, s, -q);
      }
      for (int i = s + 1; i < n && clean; ++i)
        if (d.at(i, s) != 0) clean = false;
      for (int j = s + 1; j < n && clean; ++j)
        if (d.at(s, j) != 0) clean = false;
      if (!clean) continue;

      // Pivot must divide the trailing block; fold a bad row in and retry.
      int bi = -1, bj = -1;
      for (int i = s + 1; i < n && bi < 0; ++i)
        for (int j = s + 1; j < n; ++j)
          if (d.at(i, j) % d.at(s, s) != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi < 0) break;
      row_op(d, s, bi, 1);
      row_op(left, s, bi, 1);
    }
    if (d.at(s, s) < 0) {
      for (int j = 0; j < n; ++j) {
        d.at(s, j) = -d.at(s, j);
        left.at(s, j) = -left.at(s, j);
      }
    }
  }

  SmithDecomposition out;
  out.left = std::move(left);
  out.right = std::move(right);
  out.factors.reserve(n);
  for (int i = 0; i < n; ++i) out.factors.push_back(d.at(i, i));
  return out;
}

}  // namespace latspan
