// Small dense exact linear algebra over Q and Z used by order construction
// and eigenvalue machinery: products, inverses, determinants, integer HNF.
#pragma once

#include <gmpxx.h>

#include <vector>

namespace totreal {

using QMat = std::vector<std::vector<mpq_class>>;
using ZMat = std::vector<std::vector<mpz_class>>;

QMat qmat_identity(size_t n);
QMat qmat_mul(const QMat& a, const QMat& b);
std::vector<mpq_class> qvec_mat(const std::vector<mpq_class>& v, const QMat& m);
QMat qmat_inverse(const QMat& m);  // throws std::domain_error on singular
mpq_class qmat_det(const QMat& m);

// Canonical row-style Hermite normal form: row echelon with positive pivots
// and above-pivot entries reduced into [0, pivot).  Zero rows are dropped;
// full-rank square input yields an upper-triangular d x d matrix.
ZMat hnf_rows(ZMat rows, size_t cols);

// Round-to-nearest integer with ties to even (deterministic size reduction).
mpz_class nearest_int(const mpq_class& q);

}  // namespace totreal
