#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dparity {

/// Element of Z[zeta_m] for m = 1 or an odd prime power, stored in the power
/// basis 1, zeta, ..., zeta^(phi(m)-1) modulo the m-th cyclotomic polynomial.
/// Character values of cyclic and dihedral p-groups live here.
class Cyclotomic {
 public:
  /// Zero of Z[zeta_m].
  explicit Cyclotomic(std::uint64_t m = 1);

  static Cyclotomic integer(std::uint64_t m, std::int64_t value);
  /// zeta_m^k for any integer k.
  static Cyclotomic zeta_power(std::uint64_t m, std::int64_t k);

  std::uint64_t order() const { return m_; }
  const std::vector<std::int64_t>& coefficients() const { return c_; }

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(std::int64_t k);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, std::int64_t k) { return a *= k; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic operator-() const { return *this * -1; }

  /// Complex conjugation zeta -> zeta^-1.
  Cyclotomic conj() const;

  /// Image under Z[zeta_m] -> Z[zeta_M], zeta_m -> zeta_M^(M/m); m must divide M.
  Cyclotomic embed(std::uint64_t big_m) const;
  /// Inverse of embed; throws std::domain_error if the element is not in Z[zeta_small].
  Cyclotomic descend(std::uint64_t small_m) const;

  /// Exact division by a nonzero integer; throws std::domain_error if inexact.
  Cyclotomic divided_by(std::int64_t k) const;

  bool is_integer() const;
  /// Throws std::domain_error unless is_integer().
  std::int64_t integer_value() const;

  std::string to_string() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.m_ == b.m_ && a.c_ == b.c_; }

 private:
  // Reduces a coefficient vector modulo x^m - 1 into the power basis.
  static std::vector<std::int64_t> reduce(std::uint64_t m, std::vector<std::int64_t> full);

  std::uint64_t m_;
  std::vector<std::int64_t> c_;
};

/// Euler phi of 1 or an odd prime power.
std::uint64_t cyclotomic_degree(std::uint64_t m);

}  // namespace dparity
