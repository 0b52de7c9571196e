#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dparity/integer.hpp"
#include "dparity/tate.hpp"
#include "dparity/weierstrass.hpp"

namespace dparity {

/// Smallest nonnegative x with x = r_i mod m_i for every (r_i, m_i).
/// Throws CrtError unless the moduli are positive and pairwise coprime.
Integer crt(const std::vector<std::pair<Integer, Integer>>& congruences);

struct SurgeryPlan {
  Integer p0 = 2;  // the preserved prime
  int n = 8;       // closeness exponent: output = input mod p0^n
  Integer v = 5;   // odd prime forced to multiplicative reduction

  // Trace, filled in by make_semistable.
  Integer d1, d2, d3, d4;  // shifts of a1, a2, a3, a4
  Integer c;               // shift of a6
  Integer gamma;           // d disc / d a6 at the step-3 input
  Integer additive_part;   // product of the primes step 3 turns good (with multiplicity)
  int attempts = 0;        // closeness exponents tried

  std::string to_string() const;
};

struct SurgeryResult {
  WeierstrassCurve curve;
  SurgeryPlan plan;
};

/// Congruent to `curve` mod p0^n, semistable away from p0, multiplicative
/// at v. n starts at plan.n and doubles until closeness_check passes.
/// Throws std::invalid_argument on a bad plan and UnsupportedCaseError if
/// n would exceed 4096.
SurgeryResult make_semistable(const WeierstrassCurve& curve, SurgeryPlan plan);

/// Kodaira symbol, discriminant valuation, Tamagawa number and conductor
/// exponent agree at p0.
bool closeness_check(const WeierstrassCurve& e, const WeierstrassCurve& e2, const Integer& p0);

struct CertifiedPrime {
  Integer ell;
  ReductionClass reduction = ReductionClass::Good;
  KodairaSymbol kodaira;
};

struct CertifyReport {
  std::vector<CertifiedPrime> primes;  // every factored prime of the discriminant
  /// Unfactored part of the discriminant. Coprime to c4 means all of its
  /// primes are multiplicative without knowing them.
  Integer cofactor = 1;
  bool cofactor_multiplicative = true;
  std::vector<Integer> additive_away_from_p0;
  int j_valuation_at_v = 0;
  bool semistable_away_from_p0 = true;
  bool j_nonintegral_at_v = false;
  bool pass = false;

  std::string to_string() const;
};

CertifyReport certify(const WeierstrassCurve& e, const Integer& p0, const Integer& v);

}  // namespace dparity
