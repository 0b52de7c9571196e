#pragma once

#include <optional>
#include <string>

#include "dparity/dihedral.hpp"
#include "dparity/integer.hpp"

namespace dparity {

/// Reduction type of E over K_v, as far as the parity computation needs it.
struct BaseReduction {
  enum class Kind { Good, SplitMult, NonsplitMult, AdditivePotMult, AdditivePotGood };
  Kind kind = Kind::Good;
  int n = 0;      // I_n index for the multiplicative kinds, I_n* index for AdditivePotMult
  int delta = 0;  // valuation of the minimal discriminant for AdditivePotGood

  static BaseReduction good() { return {Kind::Good, 0, 0}; }
  static BaseReduction split(int n) { return {Kind::SplitMult, n, 0}; }
  static BaseReduction nonsplit(int n) { return {Kind::NonsplitMult, n, 0}; }
  static BaseReduction additive_pot_mult(int n) { return {Kind::AdditivePotMult, n, 0}; }
  static BaseReduction additive_pot_good(int delta) { return {Kind::AdditivePotGood, 0, delta}; }

  bool semistable() const { return kind == Kind::Good || kind == Kind::SplitMult || kind == Kind::NonsplitMult; }
  bool potentially_multiplicative() const {
    return kind == Kind::SplitMult || kind == Kind::NonsplitMult || kind == Kind::AdditivePotMult;
  }
  /// Valuation of the minimal discriminant over K_v (residue characteristic >= 5).
  int discriminant_valuation() const;
  /// 12 / gcd(delta, 12).
  int semistability_defect() const;
  std::string to_string() const;
  static std::optional<BaseReduction> parse(const std::string& s);

  friend bool operator==(const BaseReduction&, const BaseReduction&) = default;
};

/// Class of a quadratic character of K_v^*. Ramified characters carry an
/// identifier so that equality between two of them can be stated explicitly.
struct QuadCharClass {
  enum class Kind { Trivial, Unramified, Ramified };
  Kind kind = Kind::Trivial;
  int ramified_id = 0;

  static QuadCharClass trivial() { return {Kind::Trivial, 0}; }
  static QuadCharClass unramified() { return {Kind::Unramified, 0}; }
  static QuadCharClass ramified(int id) { return {Kind::Ramified, id}; }
  std::string to_string() const;

  friend bool operator==(const QuadCharClass&, const QuadCharClass&) = default;
};

/// A local situation at a finite place v of K inside a D_{2p}-extension L/K.
struct LocalSetting {
  int p = 5;
  Integer ell = 2;  // residue characteristic
  int r = 1;        // q = ell^r
  SubgroupTag g_v = SubgroupTag::trivial();
  SubgroupTag i_v = SubgroupTag::trivial();
  BaseReduction base;
  std::optional<bool> eta_equals_chi;

  Integer q() const { return power(ell, static_cast<unsigned long>(r)); }
  std::string to_string() const;
  friend bool operator==(const LocalSetting&, const LocalSetting&) = default;
};

/// Short names of the subgroups of D_2p used for G_v and I_v: "1", "D2", "Cp", "D2p".
std::string local_group_name(const SubgroupTag& h);
/// Accepts the short names plus "trivial", "order2", "C_p", "D_2p" and "G".
std::optional<SubgroupTag> parse_local_group(const std::string& s);

/// I_v normal in G_v with cyclic quotient, both among {1, D2, C_p, D_2p}.
bool admissible_local_pair(const SubgroupTag& g_v, const SubgroupTag& i_v);

/// Throws InadmissibleSettingError unless the setting satisfies every structural
/// rule: p >= 5 prime, ell prime, admissible (G_v, I_v), I_v = C_p when G_v = D_2p
/// and ell != p, the delta range for potentially good reduction, n >= 1, and the
/// eta/chi flag present exactly for AdditivePotMult with I_v = D_2p.
void validate(const LocalSetting& s);

/// chi: the character of K_v(sqrt(-c6)); only for potentially multiplicative bases.
QuadCharClass chi_class(const LocalSetting& s);
/// eta restricted to the decomposition group.
QuadCharClass eta_v_class(const LocalSetting& s);

}  // namespace dparity
