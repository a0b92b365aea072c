#include "totreal/numfield/qmat.hpp"

#include <stdexcept>

namespace totreal {

QMat qmat_identity(size_t n) {
  QMat m(n, std::vector<mpq_class>(n, mpq_class(0)));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMat qmat_mul(const QMat& a, const QMat& b) {
  size_t n = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  QMat r(n, std::vector<mpq_class>(c, mpq_class(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < c; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

std::vector<mpq_class> qvec_mat(const std::vector<mpq_class>& v, const QMat& m) {
  size_t k = m.size(), c = m.empty() ? 0 : m[0].size();
  std::vector<mpq_class> r(c, mpq_class(0));
  for (size_t t = 0; t < k; ++t) {
    if (v[t] == 0) continue;
    for (size_t j = 0; j < c; ++j) r[j] += v[t] * m[t][j];
  }
  return r;
}

QMat qmat_inverse(const QMat& m) {
  size_t n = m.size();
  QMat a = m;
  QMat inv = qmat_identity(n);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::domain_error("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    mpq_class d = a[col][col];
    for (size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      mpq_class f = a[i][col];
      for (size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

mpq_class qmat_det(const QMat& m) {
  size_t n = m.size();
  QMat a = m;
  mpq_class det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    mpq_class d = a[col][col];
    for (size_t i = col + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      mpq_class f = a[i][col] / d;
      for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

ZMat hnf_rows(ZMat rows, size_t cols) {
  size_t n = rows.size();
  // eliminate below-pivot entries column by column with gcd row operations
  size_t r = 0;
  std::vector<size_t> pivcol;
  for (size_t c = 0; c < cols && r < n; ++c) {
    // find a row with nonzero entry in column c at or after r
    size_t nz = r;
    while (nz < n && rows[nz][c] == 0) ++nz;
    if (nz == n) continue;
    std::swap(rows[r], rows[nz]);
    for (size_t i = r + 1; i < n; ++i) {
      while (rows[i][c] != 0) {
        mpz_class q = rows[r][c] / rows[i][c];  // truncated division
        for (size_t j = 0; j < cols; ++j) rows[r][j] -= q * rows[i][j];
        std::swap(rows[r], rows[i]);
      }
    }
    if (rows[r][c] < 0)
      for (size_t j = 0; j < cols; ++j) rows[r][j] = -rows[r][j];
    pivcol.push_back(c);
    ++r;
  }
  rows.resize(r);
  // canonical form: entries above each pivot reduced into [0, pivot)
  for (size_t j = 1; j < rows.size(); ++j) {
    size_t pc = pivcol[j];
    for (size_t i = 0; i < j; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][pc].get_mpz_t(), rows[j][pc].get_mpz_t());
      if (q != 0)
        for (size_t k = 0; k < cols; ++k) rows[i][k] -= q * rows[j][k];
    }
  }
  return rows;
}

mpz_class nearest_int(const mpq_class& q) {
  // floor(q + 1/2), with exact halves rounded to the even neighbor
  mpq_class shifted = q + mpq_class(1, 2);
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
  if (shifted == mpq_class(fl) && fl % 2 != 0) fl -= 1;  // tie: pick even
  return fl;
}

}  // namespace totreal
