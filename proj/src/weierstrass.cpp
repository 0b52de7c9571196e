#include "dparity/weierstrass.hpp"

#include <ostream>

#include "dparity/errors.hpp"

namespace dparity {

InvariantSet compute_invariants(const Coefficients& a) {
  const auto& [a1, a2, a3, a4, a6] = a;
  InvariantSet inv;
  inv.b2 = a1 * a1 + 4 * a2;
  inv.b4 = 2 * a4 + a1 * a3;
  inv.b6 = a3 * a3 + 4 * a6;
  inv.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  inv.c4 = inv.b2 * inv.b2 - 24 * inv.b4;
  inv.c6 = -inv.b2 * inv.b2 * inv.b2 + 36 * inv.b2 * inv.b4 - 216 * inv.b6;
  inv.discriminant = -inv.b2 * inv.b2 * inv.b8 - 8 * inv.b4 * inv.b4 * inv.b4 -
                     27 * inv.b6 * inv.b6 + 9 * inv.b2 * inv.b4 * inv.b6;
  if (inv.discriminant != 0) {
    inv.j = Rational(inv.c4 * inv.c4 * inv.c4, inv.discriminant);
    inv.j.canonicalize();
  }
  return inv;
}

WeierstrassCurve::WeierstrassCurve(Coefficients a) : a_(std::move(a)), inv_(compute_invariants(a_)) {
  if (inv_.discriminant == 0) {
    throw SingularCurveError("singular Weierstrass model [" + to_string() + "]");
  }
}

WeierstrassCurve::WeierstrassCurve(Integer a1, Integer a2, Integer a3, Integer a4, Integer a6)
    : WeierstrassCurve(Coefficients{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)}) {}

std::string WeierstrassCurve::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i) out += ' ';
    out += a_[i].get_str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const WeierstrassCurve& e) { return os << '[' << e.to_string() << ']'; }

Transform Transform::then(const Transform& next) const {
  Transform c;
  c.u = u * next.u;
  c.r = r + u * u * next.r;
  c.s = s + u * next.s;
  c.t = t + u * u * s * next.r + u * u * u * next.t;
  return c;
}

RationalCoefficients transform_coefficients(const RationalCoefficients& a, const Transform& tr) {
  if (tr.u == 0) throw InvalidTransformError("transform with u = 0");
  const auto& [a1, a2, a3, a4, a6] = a;
  const Rational &u = tr.u, &r = tr.r, &s = tr.s, &t = tr.t;
  const Rational u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
  RationalCoefficients out{
      (a1 + 2 * s) / u,
      (a2 - s * a1 + 3 * r - s * s) / u2,
      (a3 + r * a1 + 2 * t) / u3,
      (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / u4,
      (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1) / u6,
  };
  for (auto& q : out) q.canonicalize();
  return out;
}

RationalCoefficients transform_coefficients(const Coefficients& a, const Transform& tr) {
  return transform_coefficients(RationalCoefficients{Rational(a[0]), Rational(a[1]), Rational(a[2]), Rational(a[3]),
                                                     Rational(a[4])},
                                tr);
}

WeierstrassCurve transform(const WeierstrassCurve& e, const Transform& tr) {
  const auto q = transform_coefficients(e.coefficients(), tr);
  Coefficients a;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i].get_den() != 1) throw NonIntegralModelError("transform leaves a non-integral coefficient");
    a[i] = q[i].get_num();
  }
  return WeierstrassCurve(std::move(a));
}

A6Expansion discriminant_in_a6(const Coefficients& a) {
  const auto& [a1, a2, a3, a4, a6] = a;
  const Integer b2 = a1 * a1 + 4 * a2;
  const Integer b4 = 2 * a4 + a1 * a3;
  const Integer a3sq = a3 * a3;
  A6Expansion x;
  x.alpha = -b2 * b2 * (-a1 * a3 * a4 + a2 * a3sq - a4 * a4) - 8 * b4 * b4 * b4 - 27 * a3sq * a3sq +
            9 * b2 * b4 * a3sq;
  x.beta = -b2 * b2 * b2 - 216 * a3sq + 36 * b2 * b4;
  return x;
}

}  // namespace dparity
