#pragma once

#include <optional>
#include <string>

#include "dparity/integer.hpp"
#include "dparity/weierstrass.hpp"

namespace dparity {

enum class KodairaKind { I0, In, II, III, IV, I0Star, InStar, IVStar, IIIStar, IIStar };

struct KodairaSymbol {
  KodairaKind kind = KodairaKind::I0;
  int n = 0;  ///< index for I_n and I_n^*; zero otherwise

  /// "I0", "I5", "II", "III", "IV", "I0*", "I3*", "IV*", "III*", "II*".
  std::string to_string() const;
  /// Inverse of to_string; nullopt on anything else.
  static std::optional<KodairaSymbol> parse(const std::string& text);

  /// Number of irreducible components of the special fibre.
  int component_count() const;

  friend bool operator==(const KodairaSymbol&, const KodairaSymbol&) = default;
};

enum class SplitType { Split, Nonsplit, NotApplicable };
enum class ReductionClass { Good, Multiplicative, Additive };
enum class PotentialClass { PotentiallyGood, PotentiallyMultiplicative };

std::string to_string(SplitType s);
std::string to_string(ReductionClass r);
std::string to_string(PotentialClass c);

struct LocalReductionData {
  Integer ell;
  KodairaSymbol kodaira;
  int delta = 0;  ///< valuation of the minimal discriminant
  int tamagawa = 1;
  int conductor_exponent = 0;
  SplitType split = SplitType::NotApplicable;
  ReductionClass reduction_class = ReductionClass::Good;
  WeierstrassCurve minimal_model;
  /// Coordinate change from the input model to `minimal_model`.
  Transform to_minimal;

  /// Equality of the local invariants (the models may differ).
  bool same_invariants(const LocalReductionData& other) const;
};

/// Tate's algorithm at the prime `ell`, valid in every residue
/// characteristic. Throws std::invalid_argument if `ell` is not prime.
LocalReductionData local_reduction(const WeierstrassCurve& curve, const Integer& ell);

/// Potentially multiplicative exactly when v_ell(j) < 0.
PotentialClass potential_class(const WeierstrassCurve& curve, const Integer& ell);

SplitType split_type(const WeierstrassCurve& curve, const Integer& ell);

namespace residue {

/// Whether a x^2 + b x + c has a root in Z/p.
bool quadratic_has_root(const Integer& a, const Integer& b, const Integer& c, const Integer& p);

/// Number of distinct roots of x^3 + b x^2 + c x + d in Z/p.
int cubic_distinct_roots(const Integer& b, const Integer& c, const Integer& d, const Integer& p);

}  // namespace residue

}  // namespace dparity
