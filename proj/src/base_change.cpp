#include "dparity/base_change.hpp"

#include <stdexcept>

#include "dparity/errors.hpp"

namespace dparity {

namespace {

// The four subgroups of D_2p under the fixed embedding, as
// (contains the rotations, contains the reflection t).
struct Sub {
  bool rot = false;
  bool ref = false;
  int order(int p) const { return (rot ? p : 1) * (ref ? 2 : 1); }
  Sub operator&(const Sub& o) const { return {rot && o.rot, ref && o.ref}; }
};

Sub as_sub(const SubgroupTag& h) {
  using K = SubgroupTag::Kind;
  switch (h.kind) {
    case K::Trivial: return {false, false};
    case K::Order2: return {false, true};
    case K::Cyclic:
      if (h.k == 1) return {true, false};
      break;
    case K::Dihedral:
      if (h.k == 1) return {true, true};
      break;
  }
  throw InvalidGroupError(h.to_string() + " is not a subgroup of D_2p");
}

}  // namespace

LocalDegreeData degrees(const SubgroupTag& g_v, const SubgroupTag& i_v, const SubgroupTag& h, int p) {
  if (!admissible_local_pair(g_v, i_v))
    throw InadmissibleSettingError("(" + local_group_name(g_v) + ", " + local_group_name(i_v) + ") is not admissible");
  const Sub g = as_sub(g_v), i = as_sub(i_v), hh = as_sub(h);
  const int e = i.order(p) / (i & hh).order(p);
  const int degree = g.order(p) / (g & hh).order(p);
  return {h, e, degree / e};
}

int place_count(const SubgroupTag& g_v, const SubgroupTag& h, int p) {
  const Sub g = as_sub(g_v), hh = as_sub(h);
  if (hh.ref && !hh.rot) {
    // D2 = <t> is not normal: count double cosets <t> \ D_2p / G_v directly.
    if (!g.rot) return g.ref ? (p + 1) / 2 : p;
    return 1;
  }
  return 2 * p * (g & hh).order(p) / (g.order(p) * hh.order(p));
}

std::string to_string(ExtensionReduction r) {
  switch (r) {
    case ExtensionReduction::Good: return "good";
    case ExtensionReduction::SplitMult: return "split";
    case ExtensionReduction::NonsplitMult: return "nonsplit";
    case ExtensionReduction::Additive: return "additive";
    case ExtensionReduction::PotGood: return "potgood";
  }
  return "?";
}

int TamagawaValue::ord(int p) const {
  if (exact()) return valuation(low, p);
  if (high >= p) throw std::logic_error("Tamagawa range reaches p");
  return 0;
}

std::string TamagawaValue::to_string() const {
  return exact() ? low.get_str() : "{" + low.get_str() + ".." + high.get_str() + "}";
}

TamagawaValue tamagawa_over(const BaseReduction& base, int e_h, bool acquires_split, const Integer& ell) {
  using K = BaseReduction::Kind;
  const Integer ne = Integer(base.n) * e_h;
  switch (base.kind) {
    case K::Good: return {1, 1};
    case K::SplitMult: return {ne, ne};
    case K::NonsplitMult: return acquires_split ? TamagawaValue{ne, ne} : TamagawaValue{1, 2};
    case K::AdditivePotGood: return {1, 4};
    case K::AdditivePotMult: return acquires_split && ell != 2 ? TamagawaValue{ne, ne} : TamagawaValue{1, 4};
  }
  return {1, 4};
}

ExtensionReduction reduction_over(const LocalSetting& s, const SubgroupTag& h) {
  using K = BaseReduction::Kind;
  if (s.base.kind == K::Good) return ExtensionReduction::Good;
  if (s.base.kind == K::AdditivePotGood) return ExtensionReduction::PotGood;

  const auto deg = degrees(s.g_v, s.i_v, h, s.p);
  const Sub kernel = as_sub(s.g_v) & as_sub(h);  // Gal(L_z / (L^H)_w)
  const QuadCharClass chi = chi_class(s), eta = eta_v_class(s);
  const bool eta_dies = eta.kind != QuadCharClass::Kind::Trivial && !kernel.ref;
  const bool f_even = deg.f % 2 == 0;
  auto dies = [&](const QuadCharClass& psi) {
    if (psi.kind == QuadCharClass::Kind::Trivial) return true;
    if (psi == eta && eta_dies) return true;
    return psi.kind == QuadCharClass::Kind::Unramified && f_even;
  };

  if (dies(chi)) return ExtensionReduction::SplitMult;
  if (chi.kind == QuadCharClass::Kind::Unramified) return ExtensionReduction::NonsplitMult;
  // chi ramified. With ell odd there are exactly two ramified quadratic
  // characters, so a ramified eta_v != chi forces chi = eta_v * eta_nr.
  if (s.ell != 2 && eta.kind == QuadCharClass::Kind::Ramified && !(eta == chi) && eta_dies)
    return f_even ? ExtensionReduction::SplitMult : ExtensionReduction::NonsplitMult;
  return ExtensionReduction::Additive;
}

namespace {

// delta_H in residue characteristic >= 5, from the reduction type over the extension.
int delta_over(const LocalSetting& s, const LocalDegreeData& deg, ExtensionReduction red) {
  const int e = deg.e;
  switch (red) {
    case ExtensionReduction::Good: return 0;
    case ExtensionReduction::PotGood: return s.base.delta * e % 12;
    case ExtensionReduction::SplitMult:
    case ExtensionReduction::NonsplitMult: return s.base.n * e;
    case ExtensionReduction::Additive:
      // I_n* stays I_{n e}* only over extensions of odd ramification index.
      if (e % 2 == 0) throw UnsupportedCaseError("additive I_n* over an extension of even ramification index");
      return s.base.n * e + 6;
  }
  return 0;
}

}  // namespace

int omega_ordp(const LocalSetting& s, const SubgroupTag& h) {
  if (s.base.semistable()) return 0;
  if (s.ell != s.p) return 0;
  if (s.ell <= 3) throw UnsupportedCaseError("the differential formula needs residue characteristic > 3");
  const auto deg = degrees(s.g_v, s.i_v, h, s.p);
  const int delta_h = delta_over(s, deg, reduction_over(s, h));
  const int num = s.base.discriminant_valuation() * deg.e - delta_h;
  if (num % 12 != 0) throw std::logic_error("non-integral differential exponent in " + s.to_string());
  return s.r * deg.f * (num / 12);
}

BaseChangeResult base_change(const LocalSetting& s, const SubgroupTag& h) {
  validate(s);
  BaseChangeResult out;
  out.h = h;
  out.degree = degrees(s.g_v, s.i_v, h, s.p);
  out.places = place_count(s.g_v, h, s.p);
  out.reduction = reduction_over(s, h);
  if (s.ell > 3) out.delta_h = delta_over(s, out.degree, out.reduction);
  out.c_w = tamagawa_over(s.base, out.degree.e, out.reduction == ExtensionReduction::SplitMult, s.ell);
  out.ordp_c = out.c_w.ord(s.p);
  out.ordp_omega = omega_ordp(s, h);
  return out;
}

}  // namespace dparity
