#include "dparity/surgery.hpp"

#include <stdexcept>

#include "dparity/errors.hpp"

namespace dparity {

Integer crt(const std::vector<std::pair<Integer, Integer>>& congruences) {
  Integer x = 0, m = 1;
  for (const auto& [r, mi] : congruences) {
    if (mi < 1) throw CrtError("modulus " + mi.get_str() + " is not positive");
    Integer g;
    mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), mi.get_mpz_t());
    if (g != 1) throw CrtError("moduli " + m.get_str() + " and " + mi.get_str() + " are not coprime");
    // x + m k = r mod mi
    const Integer k = mod((r - x) * inverse_mod(mod(m, mi), mi), mi);
    x += m * k;
    m *= mi;
    x = mod(x, m);
  }
  return x;
}

std::string SurgeryPlan::to_string() const {
  return "p0=" + p0.get_str() + " n=" + std::to_string(n) + " v=" + v.get_str() + " d1=" + d1.get_str() +
         " d2=" + d2.get_str() + " d3=" + d3.get_str() + " d4=" + d4.get_str() + " c=" + c.get_str() +
         " gamma=" + gamma.get_str() + " additive_part=" + additive_part.get_str() +
         " attempts=" + std::to_string(attempts);
}

namespace {

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Largest divisor of m made of primes that divide d (m, d nonzero).
Integer part_sharing_primes(const Integer& m, const Integer& d) {
  Integer rest = abs(m);
  for (Integer g = gcd(rest, d); g > 1; g = gcd(rest, d)) rest /= g;
  return abs(m) / rest;
}

Integer strip(Integer m, const Integer& p) {
  m = abs(m);
  while (m != 0 && m % p == 0) m /= p;
  return m;
}

// Shift d with d = 0 mod p0^n and x + d = target_i mod m_i.
Integer shift_for(const Integer& x, const Integer& p0n, const std::vector<std::pair<Integer, Integer>>& targets) {
  std::vector<std::pair<Integer, Integer>> sys{{0, p0n}};
  for (const auto& [t, m] : targets)
    if (m > 1) sys.push_back({mod(t - x, m), m});
  return crt(sys);
}

WeierstrassCurve attempt(const WeierstrassCurve& e, SurgeryPlan& plan) {
  const Integer p0n = power(plan.p0, plan.n);
  Coefficients a = e.coefficients();
  const Integer& v = plan.v;

  // Step 1: the only prime above 2 is 2. An odd a1 makes c4 odd.
  plan.d1 = plan.p0 == 2 ? Integer(0) : shift_for(a[0], p0n, {{1, 2}});
  a[0] += plan.d1;

  // Step 2: a3 = a4 = 0 mod v gives c4 = (a1^2 + 4 a2)^2 mod v; pick a unit a2
  // keeping that nonzero. Away from p0 and v, b2 = a1^2 + a2 = 1 mod 3 keeps 3 out of c4.
  Integer r2 = 1;
  while (mod(a[0] * a[0] + 4 * r2, v) == 0 || mod(r2, v) == 0) ++r2;
  std::vector<std::pair<Integer, Integer>> t2{{r2, v}};
  if (plan.p0 != 3 && v != 3) t2.push_back({1 - a[0] * a[0], 3});
  plan.d2 = shift_for(a[1], p0n, t2);
  plan.d3 = shift_for(a[2], p0n, {{0, v}});
  plan.d4 = shift_for(a[3], p0n, {{0, v}});
  a[1] += plan.d2;
  a[2] += plan.d3;
  a[3] += plan.d4;

  // Step 3: shift a6 by c. The primes of c4 split into those dividing the
  // discriminant (additive, to be made good) and the rest (kept off the new
  // discriminant by c = 0). With c = 1 the new discriminant is gamma - 432
  // mod each additive prime; where that vanishes c = 2 gives -864, a unit.
  const auto inv = compute_invariants(a);
  const auto expansion = discriminant_in_a6(a);
  plan.gamma = expansion.gamma(a[4]);
  const Integer c4_part = strip(inv.c4, plan.p0);
  // c4 is odd or prime to 3 after steps 1 and 2, so never zero.
  if (c4_part == 0) throw std::logic_error("c4 vanished after step 2");
  const Integer additive = part_sharing_primes(c4_part, inv.discriminant);
  const Integer untouched = c4_part / additive;
  const Integer bad_at_one = part_sharing_primes(additive, plan.gamma + A6Expansion::kQuadratic);
  plan.additive_part = additive;
  plan.c = crt({{0, p0n},
                {mod(-a[4], v), v},  // a6 = 0 mod v puts v in the discriminant
                {1, additive / bad_at_one},
                {2, bad_at_one},
                {0, untouched}});
  a[4] += plan.c;
  return WeierstrassCurve(a);
}

}  // namespace

SurgeryResult make_semistable(const WeierstrassCurve& curve, SurgeryPlan plan) {
  if (!is_probable_prime(plan.p0)) throw std::invalid_argument("p0 must be prime");
  if (!is_probable_prime(plan.v) || plan.v == 2) throw std::invalid_argument("v must be an odd prime");
  if (plan.v == plan.p0) throw std::invalid_argument("v must differ from p0");
  if (plan.n < 1) throw std::invalid_argument("n must be positive");
  plan.attempts = 0;
  for (; plan.n <= 4096; plan.n *= 2) {
    ++plan.attempts;
    try {
      WeierstrassCurve out = attempt(curve, plan);
      if (closeness_check(curve, out, plan.p0)) return {std::move(out), plan};
    } catch (const SingularCurveError&) {
      // the discriminant vanished by coincidence; a larger n moves every shift
    }
  }
  throw UnsupportedCaseError("no close curve found with n <= 4096");
}

bool closeness_check(const WeierstrassCurve& e, const WeierstrassCurve& e2, const Integer& p0) {
  return local_reduction(e, p0).same_invariants(local_reduction(e2, p0));
}

std::string CertifyReport::to_string() const {
  std::string out;
  for (const auto& q : primes)
    out += q.ell.get_str() + ":" + dparity::to_string(q.reduction) + "(" + q.kodaira.to_string() + ") ";
  if (cofactor != 1)
    out += "cofactor " + cofactor.get_str() + (cofactor_multiplicative ? ":multiplicative " : ":uncertified ");
  out += "v(j)=" + std::to_string(j_valuation_at_v);
  if (!additive_away_from_p0.empty()) {
    out += " additive:";
    for (const auto& l : additive_away_from_p0) out += " " + l.get_str();
  }
  out += pass ? " PASS" : " FAIL";
  return out;
}

CertifyReport certify(const WeierstrassCurve& e, const Integer& p0, const Integer& v) {
  CertifyReport r;
  const Factorization f = factor(e.discriminant());
  for (const auto& [ell, exponent] : f.primes) {
    const auto d = local_reduction(e, ell);
    r.primes.push_back({ell, d.reduction_class, d.kodaira});
    if (d.reduction_class == ReductionClass::Additive && ell != p0) r.additive_away_from_p0.push_back(ell);
  }
  r.cofactor = f.cofactor;
  r.cofactor_multiplicative = gcd(f.cofactor, e.invariants().c4) == 1;
  r.semistable_away_from_p0 = r.additive_away_from_p0.empty() && r.cofactor_multiplicative;
  r.j_valuation_at_v = e.j_invariant() == 0 ? 0 : valuation(e.j_invariant(), v);
  r.j_nonintegral_at_v = r.j_valuation_at_v < 0;
  r.pass = r.semistable_away_from_p0 && r.j_nonintegral_at_v;
  return r;
}

}  // namespace dparity
