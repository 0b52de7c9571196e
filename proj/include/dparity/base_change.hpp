#pragma once

#include <string>

#include "dparity/setting.hpp"

namespace dparity {

/// Ramification index and residue degree of (L^H)_w / K_v for the place w
/// singled out by the fixed embedding of H.
struct LocalDegreeData {
  SubgroupTag h;
  int e = 1;
  int f = 1;
};

/// e_H = [I_v : I_v cap H], f_H = [G_v : G_v cap H] / e_H. Throws
/// InadmissibleSettingError for a pair (G_v, I_v) that is not admissible and
/// InvalidGroupError for H outside {1, D2, C_p, D_2p}.
LocalDegreeData degrees(const SubgroupTag& g_v, const SubgroupTag& i_v, const SubgroupTag& h, int p);

/// Number of places of L^H above v, |H \ G / G_v|.
int place_count(const SubgroupTag& g_v, const SubgroupTag& h, int p);

/// Reduction of E over (L^H)_w.
enum class ExtensionReduction { Good, SplitMult, NonsplitMult, Additive, PotGood };
std::string to_string(ExtensionReduction r);

/// A Tamagawa number known exactly or only up to a range.
struct TamagawaValue {
  Integer low = 1, high = 1;
  bool exact() const { return low == high; }
  /// ord_p of the value; 0 for ranges, whose members are all below p.
  int ord(int p) const;
  std::string to_string() const;
};

/// Tamagawa number over an extension with ramification index e_H, by the
/// standard rules for each reduction class.
TamagawaValue tamagawa_over(const BaseReduction& base, int e_h, bool acquires_split, const Integer& ell);

/// Reduction type over (L^H)_w, from how chi restricts to the extension.
ExtensionReduction reduction_over(const LocalSetting& s, const SubgroupTag& h);

/// ord_p omega(H). Zero for semistable bases and for ell != p; for ell = p it is
/// r f_H (delta e_H - delta_H) / 12. Throws UnsupportedCaseError when the
/// formula would be needed with ell <= 3.
int omega_ordp(const LocalSetting& s, const SubgroupTag& h);
inline int omega_ordp_parity(const LocalSetting& s, const SubgroupTag& h) { return omega_ordp(s, h) % 2 ? -1 : 1; }

/// Everything known about C_v(H) = prod_{w | v} c_w(E/L^H) omega(H).
struct BaseChangeResult {
  SubgroupTag h;
  LocalDegreeData degree;
  int places = 1;
  ExtensionReduction reduction = ExtensionReduction::Good;
  int delta_h = -1;  // -1 when not determined (residue characteristic <= 3)
  TamagawaValue c_w;
  int ordp_c = 0;
  int ordp_omega = 0;
  /// ord_p C_v(H) = places * (ord_p c_w + ord_p omega(H)).
  int ordp_total() const { return places * (ordp_c + ordp_omega); }
};

BaseChangeResult base_change(const LocalSetting& s, const SubgroupTag& h);

}  // namespace dparity
