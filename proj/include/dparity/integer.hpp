#pragma once

// Thin helpers over GMP's C++ classes. All arithmetic in the library is
// exact; these are the only numeric types used outside the cyclotomic code.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dparity {

using Integer = mpz_class;
using Rational = mpq_class;

/// p-adic valuation of a nonzero integer.
int valuation(const Integer& x, const Integer& p);

/// p-adic valuation of a nonzero rational (numerator minus denominator).
int valuation(const Rational& x, const Integer& p);

/// Least nonnegative residue of x modulo m (m > 0).
Integer mod(const Integer& x, const Integer& m);

/// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
Integer inverse_mod(const Integer& a, const Integer& m);

Integer power(const Integer& base, unsigned long exponent);

bool is_probable_prime(const Integer& n);

bool is_perfect_square(const Integer& n);

/// Legendre symbol (a/p) for an odd prime p.
int legendre(const Integer& a, const Integer& p);

/// Prime factorisation of |n| as (prime, exponent) pairs, sorted by prime.
/// When the Pollard-rho budget runs out, `cofactor` holds the unfactored
/// remainder (composite, coprime to every listed prime); otherwise it is 1.
struct Factorization {
  std::vector<std::pair<Integer, int>> primes;
  Integer cofactor = 1;

  bool complete() const { return cofactor == 1; }
};

Factorization factor(const Integer& n, std::uint64_t rho_budget = 2'000'000);

/// Exact rational as "a" or "a/b".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

}  // namespace dparity
