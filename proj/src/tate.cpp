#include "dparity/tate.hpp"

#include <climits>
#include <stdexcept>
#include <vector>

#include "dparity/errors.hpp"

namespace dparity {

std::string KodairaSymbol::to_string() const {
  switch (kind) {
    case KodairaKind::I0: return "I0";
    case KodairaKind::In: return "I" + std::to_string(n);
    case KodairaKind::II: return "II";
    case KodairaKind::III: return "III";
    case KodairaKind::IV: return "IV";
    case KodairaKind::I0Star: return "I0*";
    case KodairaKind::InStar: return "I" + std::to_string(n) + "*";
    case KodairaKind::IVStar: return "IV*";
    case KodairaKind::IIIStar: return "III*";
    case KodairaKind::IIStar: return "II*";
  }
  return "?";
}

std::optional<KodairaSymbol> KodairaSymbol::parse(const std::string& text) {
  if (text == "I0") return KodairaSymbol{KodairaKind::I0, 0};
  if (text == "II") return KodairaSymbol{KodairaKind::II, 0};
  if (text == "III") return KodairaSymbol{KodairaKind::III, 0};
  if (text == "IV") return KodairaSymbol{KodairaKind::IV, 0};
  if (text == "I0*") return KodairaSymbol{KodairaKind::I0Star, 0};
  if (text == "IV*") return KodairaSymbol{KodairaKind::IVStar, 0};
  if (text == "III*") return KodairaSymbol{KodairaKind::IIIStar, 0};
  if (text == "II*") return KodairaSymbol{KodairaKind::IIStar, 0};
  if (text.size() >= 2 && text[0] == 'I') {
    const bool star = text.back() == '*';
    const std::string digits = text.substr(1, text.size() - 1 - (star ? 1 : 0));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
    const int n = std::stoi(digits);
    if (n < 1) return std::nullopt;
    return KodairaSymbol{star ? KodairaKind::InStar : KodairaKind::In, n};
  }
  return std::nullopt;
}

int KodairaSymbol::component_count() const {
  switch (kind) {
    case KodairaKind::I0: return 1;
    case KodairaKind::In: return n;
    case KodairaKind::II: return 1;
    case KodairaKind::III: return 2;
    case KodairaKind::IV: return 3;
    case KodairaKind::I0Star: return 5;
    case KodairaKind::InStar: return n + 5;
    case KodairaKind::IVStar: return 7;
    case KodairaKind::IIIStar: return 8;
    case KodairaKind::IIStar: return 9;
  }
  return 0;
}

std::string to_string(SplitType s) {
  switch (s) {
    case SplitType::Split: return "split";
    case SplitType::Nonsplit: return "nonsplit";
    case SplitType::NotApplicable: return "n/a";
  }
  return "?";
}

std::string to_string(ReductionClass r) {
  switch (r) {
    case ReductionClass::Good: return "good";
    case ReductionClass::Multiplicative: return "multiplicative";
    case ReductionClass::Additive: return "additive";
  }
  return "?";
}

std::string to_string(PotentialClass c) {
  return c == PotentialClass::PotentiallyGood ? "potentially_good" : "potentially_multiplicative";
}

bool LocalReductionData::same_invariants(const LocalReductionData& o) const {
  return ell == o.ell && kodaira == o.kodaira && delta == o.delta && tamagawa == o.tamagawa &&
         conductor_exponent == o.conductor_exponent && split == o.split && reduction_class == o.reduction_class;
}

namespace residue {

namespace {

// Exhaustive search is used below this bound; beyond it the root counts come
// from the quadratic-residue criterion and gcd(x^p - x, f).
constexpr unsigned long kExhaustiveBound = 1000;

using Poly = std::vector<Integer>;  // little-endian coefficients mod p

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_rem(Poly f, const Poly& g, const Integer& p) {
  const Integer lead_inv = inverse_mod(g.back(), p);
  trim(f);
  while (f.size() >= g.size()) {
    const Integer q = mod(f.back() * lead_inv, p);
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] = mod(f[shift + i] - q * g[i], p);
    trim(f);
  }
  return f;
}

Poly poly_mulmod(const Poly& x, const Poly& y, const Poly& m, const Integer& p) {
  if (x.empty() || y.empty()) return {};
  Poly r(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
  for (auto& c : r) c = mod(c, p);
  return poly_rem(std::move(r), m, p);
}

std::size_t poly_gcd_degree(Poly f, Poly g, const Integer& p) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    Poly r = poly_rem(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  return f.empty() ? 0 : f.size() - 1;
}

}  // namespace

bool quadratic_has_root(const Integer& a, const Integer& b, const Integer& c, const Integer& p) {
  const Integer A = mod(a, p), B = mod(b, p), C = mod(c, p);
  if (A == 0) return B != 0 || C == 0;
  if (p == 2 || p < kExhaustiveBound) {
    for (Integer x = 0; x < p; ++x) {
      if (mod(Integer((A * x + B) * x + C), p) == 0) return true;
    }
    return false;
  }
  return legendre(Integer(B * B - 4 * A * C), p) >= 0;
}

int cubic_distinct_roots(const Integer& b, const Integer& c, const Integer& d, const Integer& p) {
  if (p < kExhaustiveBound) {
    int count = 0;
    for (Integer x = 0; x < p; ++x) {
      if (mod(Integer(((x + b) * x + c) * x + d), p) == 0) ++count;
    }
    return count;
  }
  const Poly f{mod(d, p), mod(c, p), mod(b, p), 1};
  // x^p mod f by square-and-multiply.
  Poly result{1}, base{0, 1};
  for (std::size_t i = mpz_sizeinbase(p.get_mpz_t(), 2); i-- > 0;) {
    result = poly_mulmod(result, result, f, p);
    if (mpz_tstbit(p.get_mpz_t(), i)) result = poly_mulmod(result, base, f, p);
  }
  result.resize(std::max<std::size_t>(result.size(), 2), 0);
  result[1] = mod(result[1] - 1, p);
  return static_cast<int>(poly_gcd_degree(f, result, p));
}

}  // namespace residue

namespace {

// u = 1 change of variables with integer r, s, t.
Coefficients rst(const Coefficients& a, const Integer& r, const Integer& s, const Integer& t) {
  const auto& [a1, a2, a3, a4, a6] = a;
  return Coefficients{
      a1 + 2 * s,
      a2 - s * a1 + 3 * r - s * s,
      a3 + r * a1 + 2 * t,
      a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t,
      a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1,
  };
}

Integer exact_div(const Integer& x, const Integer& d) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return q;
}

class TateRun {
 public:
  TateRun(const WeierstrassCurve& curve, Integer p) : a_(curve.coefficients()), p_(std::move(p)) {
    if (!is_probable_prime(p_)) throw std::invalid_argument("local_reduction: " + p_.get_str() + " is not prime");
    half_ = p_ == 2 ? Integer(0) : inverse_mod(2, p_);
  }

  LocalReductionData run();

 private:
  bool divides(const Integer& x) const { return mpz_divisible_p(x.get_mpz_t(), p_.get_mpz_t()) != 0; }
  int val(const Integer& x) const { return x == 0 ? INT_MAX : valuation(x, p_); }
  Integer red(const Integer& x) const { return mod(x, p_); }
  Integer inv(const Integer& x) const { return inverse_mod(x, p_); }

  void apply(const Integer& r, const Integer& s, const Integer& t) {
    a_ = rst(a_, r, s, t);
    total_ = total_.then(Transform{1, Rational(r), Rational(s), Rational(t)});
  }

  LocalReductionData finish(KodairaSymbol k, int delta, int c, int f, SplitType split) const {
    ReductionClass cls = ReductionClass::Additive;
    if (k.kind == KodairaKind::I0) cls = ReductionClass::Good;
    if (k.kind == KodairaKind::In) cls = ReductionClass::Multiplicative;
    return LocalReductionData{p_, k, delta, c, f, split, cls, WeierstrassCurve(a_), total_};
  }

  Coefficients a_;
  Integer p_;
  Integer half_;
  Transform total_;
};

LocalReductionData TateRun::run() {
  using K = KodairaKind;
  const Integer& p = p_;
  auto& [a1, a2, a3, a4, a6] = a_;
  for (;;) {
    InvariantSet iv = compute_invariants(a_);
    const int vd = valuation(iv.discriminant, p);
    if (vd == 0) return finish({K::I0, 0}, 0, 1, 0, SplitType::NotApplicable);

    // Move the singular point to (0, 0): afterwards p | a3, a4, a6.
    Integer r, t;
    if (p == 2) {
      if (divides(iv.b2)) {
        r = red(a4);
        t = red(((r + a2) * r + a4) * r + a6);
      } else {
        r = red(a3);
        t = red(Integer(a4 + r * r));
      }
    } else if (p == 3) {
      r = divides(iv.b2) ? red(Integer(-iv.b6)) : red(Integer(-inv(iv.b2) * iv.b4));
      t = red(Integer(a1 * r + a3));
    } else {
      if (divides(iv.c4)) {
        r = red(Integer(-inv(12) * iv.b2));
      } else {
        r = red(Integer(-inv(Integer(12 * iv.c4)) * (iv.c6 + iv.b2 * iv.c4)));
      }
      t = red(Integer(-half_ * (a1 * r + a3)));
    }
    apply(r, 0, t);
    iv = compute_invariants(a_);

    if (!divides(iv.c4)) {
      const bool split = residue::quadratic_has_root(1, a1, Integer(-a2), p);
      const int c = split ? vd : (vd % 2 == 0 ? 2 : 1);
      return finish({K::In, vd}, vd, c, 1, split ? SplitType::Split : SplitType::Nonsplit);
    }

    if (val(a6) < 2) return finish({K::II, 0}, vd, 1, vd, SplitType::NotApplicable);
    if (val(iv.b8) < 3) return finish({K::III, 0}, vd, 2, vd - 1, SplitType::NotApplicable);
    if (val(iv.b6) < 3) {
      const Integer p2 = p * p;
      const int c = residue::quadratic_has_root(1, exact_div(a3, p), Integer(-exact_div(a6, p2)), p) ? 3 : 1;
      return finish({K::IV, 0}, vd, c, vd - 2, SplitType::NotApplicable);
    }

    // Now p | a1, a2; p^2 | a3, a4; p^3 | a6.
    Integer s;
    if (p == 2) {
      s = red(a2);
      t = 2 * red(exact_div(a6, 4));
    } else if (p == 3) {
      s = a1;
      t = a3;
    } else {
      s = red(Integer(-a1 * half_));
      t = -a3 * half_;
    }
    apply(0, s, t);

    const Integer p2 = p * p, p3 = p2 * p;
    const Integer b = exact_div(a2, p), c = exact_div(a4, p2), d = exact_div(a6, p3);
    const Integer w = 27 * d * d - b * b * c * c + 4 * b * b * b * d - 18 * b * c * d + 4 * c * c * c;
    const Integer x = 3 * c - b * b;
    const int sw = divides(w) ? (divides(x) ? 3 : 2) : 1;

    if (sw == 1) {
      const int cp = 1 + residue::cubic_distinct_roots(b, c, d, p);
      return finish({K::I0Star, 0}, vd, cp, vd - 4, SplitType::NotApplicable);
    }

    if (sw == 2) {
      // Move the double root of the cubic to T = 0.
      if (p == 2) {
        r = red(c);
      } else if (p == 3) {
        r = red(Integer(c * inv(b)));
      } else {
        r = red(Integer((b * c - 9 * d) * inv(Integer(2 * x))));
      }
      apply(p * r, 0, 0);
      int ix = 3, iy = 3;
      Integer mx = p2, my = p2;
      int cp = 0;
      for (;;) {
        Integer a2t = exact_div(a2, p), a3t = exact_div(a3, my);
        Integer a4t = exact_div(a4, p * mx), a6t = exact_div(a6, mx * my);
        if (!divides(Integer(a3t * a3t + 4 * a6t))) {
          cp = residue::quadratic_has_root(1, a3t, Integer(-a6t), p) ? 4 : 2;
          break;
        }
        t = p == 2 ? Integer(my * red(a6t)) : Integer(my * red(Integer(-a3t * half_)));
        apply(0, 0, t);
        my *= p;
        ++iy;
        a2t = exact_div(a2, p);
        a3t = exact_div(a3, my);
        a4t = exact_div(a4, p * mx);
        a6t = exact_div(a6, mx * my);
        if (!divides(Integer(a4t * a4t - 4 * a6t * a2t))) {
          cp = residue::quadratic_has_root(a2t, a4t, a6t, p) ? 4 : 2;
          break;
        }
        r = p == 2 ? Integer(mx * red(Integer(a6t * inv(a2t)))) : Integer(mx * red(Integer(-a4t * inv(Integer(2 * a2t)))));
        apply(r, 0, 0);
        mx *= p;
        ++ix;
      }
      return finish({K::InStar, ix + iy - 5}, vd, cp, vd - ix - iy + 1, SplitType::NotApplicable);
    }

    // Triple root: move it to T = 0.
    if (p == 2) {
      r = red(b);
    } else if (p == 3) {
      r = red(Integer(-d));
    } else {
      r = red(Integer(-b * inv(3)));
    }
    apply(p * r, 0, 0);
    const Integer p4 = p2 * p2;
    const Integer a3t = exact_div(a3, p2), a6t = exact_div(a6, p4);
    if (!divides(Integer(a3t * a3t + 4 * a6t))) {
      const int cp = residue::quadratic_has_root(1, a3t, Integer(-a6t), p) ? 3 : 1;
      return finish({K::IVStar, 0}, vd, cp, vd - 6, SplitType::NotApplicable);
    }
    t = p == 2 ? Integer(-p2 * red(a6t)) : Integer(p2 * red(Integer(-a3t * half_)));
    apply(0, 0, t);
    if (val(a4) < 4) return finish({K::IIIStar, 0}, vd, 2, vd - 7, SplitType::NotApplicable);
    if (val(a6) < 6) return finish({K::IIStar, 0}, vd, 1, vd - 8, SplitType::NotApplicable);

    // Non-minimal: scale by u = p and start over.
    a1 = exact_div(a1, p);
    a2 = exact_div(a2, p2);
    a3 = exact_div(a3, p3);
    a4 = exact_div(a4, p4);
    a6 = exact_div(a6, p4 * p2);
    total_ = total_.then(Transform{Rational(p), 0, 0, 0});
  }
}

}  // namespace

LocalReductionData local_reduction(const WeierstrassCurve& curve, const Integer& ell) {
  return TateRun(curve, ell).run();
}

PotentialClass potential_class(const WeierstrassCurve& curve, const Integer& ell) {
  if (!is_probable_prime(ell)) throw std::invalid_argument("potential_class: " + ell.get_str() + " is not prime");
  const Rational& j = curve.j_invariant();
  if (j != 0 && valuation(j, ell) < 0) return PotentialClass::PotentiallyMultiplicative;
  return PotentialClass::PotentiallyGood;
}

SplitType split_type(const WeierstrassCurve& curve, const Integer& ell) { return local_reduction(curve, ell).split; }

}  // namespace dparity
