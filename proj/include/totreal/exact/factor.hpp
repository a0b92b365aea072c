// Integer factorization (trial division + Pollard-Brent rho) and complete
// factorization of monic integer polynomials of degree at most 8 into
// irreducible factors, with multiplicity.
#pragma once

#include <gmpxx.h>

#include <vector>

#include "totreal/exact/intpoly.hpp"

namespace totreal {

// Prime factorization of n >= 1, ascending primes with exponents.
std::vector<std::pair<mpz_class, int>> factor_mpz(const mpz_class& n);

// All positive divisors of |n|, n != 0, ascending.
std::vector<mpz_class> divisors_mpz(const mpz_class& n);

bool is_probable_prime(const mpz_class& n);

// Largest s with s^2 | n, for n != 0 (square part of |n|).
mpz_class square_part(const mpz_class& n);

const std::vector<unsigned long>& small_primes();  // primes below 10^4

// Irreducible factors with multiplicity; product equals the input.
// Requires a monic polynomial of degree <= 8; throws
// std::invalid_argument("out of supported range") above that.
std::vector<IntPoly> factor_small(const IntPoly& f);

bool poly_is_irreducible(const IntPoly& f);

// True iff irreducible f has all roots real; throws
// std::domain_error("not irreducible") for reducible input.
bool poly_is_totally_real(const IntPoly& f);

}  // namespace totreal
