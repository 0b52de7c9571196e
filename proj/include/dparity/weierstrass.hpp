#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "dparity/integer.hpp"

namespace dparity {

/// Coefficients [a1, a2, a3, a4, a6] of y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
using Coefficients = std::array<Integer, 5>;

struct InvariantSet {
  Integer b2, b4, b6, b8;
  Integer c4, c6;
  Integer discriminant;
  /// j = c4^3 / discriminant as a reduced fraction; zero when the
  /// discriminant vanishes (only reachable through `compute_invariants`).
  Rational j;
};

/// The standard b/c/discriminant polynomials. Accepts singular tuples.
InvariantSet compute_invariants(const Coefficients& a);

/// Integral Weierstrass model with nonzero discriminant. Immutable.
class WeierstrassCurve {
 public:
  /// Throws SingularCurveError when the discriminant vanishes.
  explicit WeierstrassCurve(Coefficients a);
  WeierstrassCurve(Integer a1, Integer a2, Integer a3, Integer a4, Integer a6);

  const Coefficients& coefficients() const { return a_; }
  const Integer& a1() const { return a_[0]; }
  const Integer& a2() const { return a_[1]; }
  const Integer& a3() const { return a_[2]; }
  const Integer& a4() const { return a_[3]; }
  const Integer& a6() const { return a_[4]; }

  const InvariantSet& invariants() const { return inv_; }
  const Integer& discriminant() const { return inv_.discriminant; }
  const Rational& j_invariant() const { return inv_.j; }

  /// "a1 a2 a3 a4 a6"
  std::string to_string() const;

  friend bool operator==(const WeierstrassCurve& x, const WeierstrassCurve& y) { return x.a_ == y.a_; }

 private:
  Coefficients a_;
  InvariantSet inv_;
};

std::ostream& operator<<(std::ostream& os, const WeierstrassCurve& e);

inline const InvariantSet& invariants(const WeierstrassCurve& e) { return e.invariants(); }

/// Admissible change of variables x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
struct Transform {
  Rational u = 1, r = 0, s = 0, t = 0;

  /// The transform equivalent to applying `*this` first and then `next`.
  Transform then(const Transform& next) const;
};

using RationalCoefficients = std::array<Rational, 5>;

/// Coefficients after the coordinate change, as exact rationals.
RationalCoefficients transform_coefficients(const RationalCoefficients& a, const Transform& tr);
RationalCoefficients transform_coefficients(const Coefficients& a, const Transform& tr);

/// Throws InvalidTransformError when u = 0 and NonIntegralModelError when the
/// image is not integral.
WeierstrassCurve transform(const WeierstrassCurve& e, const Transform& tr);

/// The discriminant as a polynomial in a6: disc = alpha + beta * a6 - 432 * a6^2,
/// where alpha and beta depend only on a1, a2, a3, a4. The quadratic
/// coefficient is -27 * 4^2, coming from the -27 b6^2 term.
struct A6Expansion {
  static constexpr long kQuadratic = -432;

  Integer alpha, beta;

  /// d(disc)/d(a6) = beta - 864 * a6.
  Integer gamma(const Integer& a6) const { return beta + 2 * kQuadratic * a6; }

  /// disc(a6 + c) - disc(a6) = c * (gamma + kQuadratic * c).
  Integer shift(const Integer& a6, const Integer& c) const { return c * (gamma(a6) + kQuadratic * c); }
};

A6Expansion discriminant_in_a6(const Coefficients& a);

}  // namespace dparity
