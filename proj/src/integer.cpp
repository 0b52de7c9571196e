#include "dparity/integer.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dparity {

int valuation(const Integer& x, const Integer& p) {
  if (x == 0) throw std::domain_error("valuation of zero");
  if (p < 2) throw std::domain_error("valuation base must be >= 2");
  Integer y = x;
  int v = 0;
  while (mpz_divisible_p(y.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(y.get_mpz_t(), y.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

int valuation(const Rational& x, const Integer& p) {
  return valuation(Integer(x.get_num()), p) - valuation(Integer(x.get_den()), p);
}

Integer mod(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw std::domain_error("inverse_mod: " + a.get_str() + " not invertible mod " + m.get_str());
  }
  return mod(r, m);
}

Integer power(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

bool is_probable_prime(const Integer& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

int legendre(const Integer& a, const Integer& p) {
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

namespace {

// Brent's variant of Pollard rho; returns a nontrivial factor or 0 when the
// iteration budget is exhausted.
Integer pollard_brent(const Integer& n, std::uint64_t& budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1; budget > 0; ++c) {
    Integer y = 2, x, ys, q = 1, g = 1;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](const Integer& z) { return mod(z * z + c, n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        const unsigned long steps = std::min(m, r - k);
        for (unsigned long i = 0; i < steps; ++i) {
          y = f(y);
          q = mod(q * abs(Integer(x - y)), n);
        }
        budget = budget > steps ? budget - steps : 0;
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1 && budget > 0);
      r *= 2;
    } while (g == 1 && budget > 0);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(Integer(x - ys)), n);
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return 0;
}

void factor_into(const Integer& n, std::map<Integer, int>& out, std::vector<Integer>& stuck,
                 std::uint64_t& budget) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  if (is_perfect_square(n)) {
    Integer root = sqrt(n);
    factor_into(root, out, stuck, budget);
    factor_into(root, out, stuck, budget);
    return;
  }
  Integer d = pollard_brent(n, budget);
  if (d == 0) {
    stuck.push_back(n);
    return;
  }
  factor_into(d, out, stuck, budget);
  factor_into(Integer(n / d), out, stuck, budget);
}

}  // namespace

Factorization factor(const Integer& n, std::uint64_t rho_budget) {
  if (n == 0) throw std::domain_error("factor of zero");
  Integer m = abs(n);
  std::map<Integer, int> found;
  for (unsigned long p = 2; p < 10000 && m > 1; p += (p == 2 ? 1 : 2)) {
    if (p * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      ++found[Integer(p)];
    }
  }
  std::vector<Integer> stuck;
  factor_into(m, found, stuck, rho_budget);

  Factorization result;
  for (const auto& [p, e] : found) result.primes.emplace_back(p, e);
  for (const auto& s : stuck) result.cofactor *= s;
  // A stuck composite may still share primes found elsewhere.
  for (auto& [p, e] : result.primes) {
    while (result.cofactor != 1 && mpz_divisible_p(result.cofactor.get_mpz_t(), p.get_mpz_t())) {
      result.cofactor /= p;
      ++e;
    }
  }
  return result;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace dparity
