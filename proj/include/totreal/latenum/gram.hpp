// Certified smallest eigenvalues of rational Gram matrices, the Rayleigh
// constant C with house(v)^2 <= C * house(Q(v)), and greedy reduced bases of
// O_K under the l1 embedding length |sigma_1(x)| + ... + |sigma_d(x)|.
#pragma once

#include <gmpxx.h>

#include <vector>

#include "totreal/exact/roots.hpp"
#include "totreal/numfield/field.hpp"
#include "totreal/numfield/qmat.hpp"

namespace totreal {

struct GramEmbeddings {
  QMat m;
  // Embedding images of m; with rational entries they all coincide, so a
  // single copy stands for every embedding.
  std::vector<QMat> per_embedding;
  DyadicInterval lambda_min;  // certified, positive lower endpoint
};

// Certified interval of width <= 2^-precision around the smallest eigenvalue.
// Throws std::invalid_argument("matrix not symmetric").
DyadicInterval smallest_eigenvalue(const QMat& m, long precision_bits);

// Throws std::domain_error("not positive definite").
GramEmbeddings make_gram_embeddings(const QMat& m, long precision_bits = 48);

// Interval whose upper endpoint is a valid constant C = 1/lambda_min.
DyadicInterval rayleigh_constant(const GramEmbeddings& g);

// Exact house(x) as an algebraic real.
AlgReal house_algreal(const FieldElem& x);

// l1 embedding length: certified interval, exact algebraic value, and exact
// three-way comparison between two elements.
DyadicInterval norm1_interval(const FieldElem& x, long precision_bits);
AlgReal norm1_algreal(const FieldElem& x);
int norm1_cmp(const FieldElem& a, const FieldElem& b);

// Greedy l1-shortest basis of O_K starting from 1: each further entry has
// minimal length among elements extending the chosen ones to a basis, ties
// broken by coordinate-lexicographic order of the sign-normalized candidate.
// Throws std::invalid_argument("unsupported degree") above degree 4.
std::vector<FieldElem> minkowski_reduced_basis(const NumberField& K);

}  // namespace totreal
