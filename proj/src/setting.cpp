#include "dparity/setting.hpp"

#include <numeric>
#include <regex>
#include <set>

#include "dparity/errors.hpp"

namespace dparity {

namespace {

const std::set<int> kPotGoodDeltas{2, 3, 4, 6, 8, 9, 10};

bool is_local_group(const SubgroupTag& h) {
  using K = SubgroupTag::Kind;
  return h.kind == K::Trivial || h.kind == K::Order2 || ((h.kind == K::Cyclic || h.kind == K::Dihedral) && h.k == 1);
}

bool pair_ok(const SubgroupTag& g, const SubgroupTag& i) {
  // I_v normal in G_v with cyclic quotient.
  using K = SubgroupTag::Kind;
  switch (g.kind) {
    case K::Trivial: return i.kind == K::Trivial;
    case K::Order2: return i.kind == K::Trivial || i.kind == K::Order2;
    case K::Cyclic: return i.kind == K::Trivial || i == SubgroupTag::cyclic(1);
    case K::Dihedral: return i == SubgroupTag::cyclic(1) || i == SubgroupTag::dihedral(1);
  }
  return false;
}

}  // namespace

bool admissible_local_pair(const SubgroupTag& g_v, const SubgroupTag& i_v) {
  return is_local_group(g_v) && is_local_group(i_v) && pair_ok(g_v, i_v);
}

namespace {

[[noreturn]] void reject(const LocalSetting& s, const std::string& why) {
  throw InadmissibleSettingError("inadmissible setting (" + s.to_string() + "): " + why);
}

}  // namespace

int BaseReduction::discriminant_valuation() const {
  switch (kind) {
    case Kind::Good: return 0;
    case Kind::SplitMult:
    case Kind::NonsplitMult: return n;
    case Kind::AdditivePotMult: return n + 6;
    case Kind::AdditivePotGood: return delta;
  }
  return 0;
}

int BaseReduction::semistability_defect() const { return 12 / std::gcd(discriminant_valuation(), 12); }

std::string BaseReduction::to_string() const {
  switch (kind) {
    case Kind::Good: return "good";
    case Kind::SplitMult: return "split(" + std::to_string(n) + ")";
    case Kind::NonsplitMult: return "nonsplit(" + std::to_string(n) + ")";
    case Kind::AdditivePotMult: return "addmult(" + std::to_string(n) + ")";
    case Kind::AdditivePotGood: return "addgood(" + std::to_string(delta) + ")";
  }
  return "?";
}

std::optional<BaseReduction> BaseReduction::parse(const std::string& s) {
  if (s == "good") return good();
  static const std::regex re(R"((split|nonsplit|addmult|addgood)\((\d{1,6})\))");
  std::smatch m;
  if (!std::regex_match(s, m, re)) return std::nullopt;
  const int v = std::stoi(m[2]);
  if (m[1] == "split") return split(v);
  if (m[1] == "nonsplit") return nonsplit(v);
  if (m[1] == "addmult") return additive_pot_mult(v);
  return additive_pot_good(v);
}

std::string QuadCharClass::to_string() const {
  switch (kind) {
    case Kind::Trivial: return "trivial";
    case Kind::Unramified: return "unramified";
    case Kind::Ramified: return "ramified#" + std::to_string(ramified_id);
  }
  return "?";
}

std::string local_group_name(const SubgroupTag& h) {
  using K = SubgroupTag::Kind;
  switch (h.kind) {
    case K::Trivial: return "1";
    case K::Order2: return "D2";
    case K::Cyclic: return h.k == 1 ? "Cp" : h.to_string();
    case K::Dihedral: return h.k == 1 ? "D2p" : h.to_string();
  }
  return "?";
}

std::optional<SubgroupTag> parse_local_group(const std::string& s) {
  if (s == "1" || s == "trivial") return SubgroupTag::trivial();
  if (s == "D2" || s == "order2") return SubgroupTag::order2();
  if (s == "Cp" || s == "C_p") return SubgroupTag::cyclic(1);
  if (s == "D2p" || s == "D_2p" || s == "G") return SubgroupTag::dihedral(1);
  return std::nullopt;
}

std::string LocalSetting::to_string() const {
  std::string out = "p=" + std::to_string(p) + " l=" + ell.get_str() + " r=" + std::to_string(r) +
                    " Gv=" + local_group_name(g_v) + " Iv=" + local_group_name(i_v) + " base=" + base.to_string();
  if (eta_equals_chi) out += *eta_equals_chi ? " eta=chi" : " eta!=chi";
  return out;
}

void validate(const LocalSetting& s) {
  if (s.p < 5 || !is_probable_prime(s.p)) reject(s, "p must be a prime >= 5");
  if (s.ell < 2 || !is_probable_prime(s.ell)) reject(s, "l must be prime");
  if (s.r < 1) reject(s, "r must be positive");
  if (!is_local_group(s.g_v) || !is_local_group(s.i_v)) reject(s, "G_v and I_v must be subgroups of D_2p");
  if (!admissible_local_pair(s.g_v, s.i_v)) reject(s, "I_v must be normal in G_v with cyclic quotient");
  if (s.g_v == SubgroupTag::dihedral(1) && s.ell != s.p && s.i_v != SubgroupTag::cyclic(1))
    reject(s, "l != p forces I_v = C_p when G_v = D_2p");

  using K = BaseReduction::Kind;
  const auto& b = s.base;
  if ((b.kind == K::SplitMult || b.kind == K::NonsplitMult || b.kind == K::AdditivePotMult) && b.n < 1)
    reject(s, "multiplicative index must be >= 1");
  if (b.kind == K::AdditivePotGood) {
    // The delta <-> Kodaira correspondence only holds in residue characteristic > 3.
    if (s.ell > 3 ? kPotGoodDeltas.count(b.delta) == 0 : b.delta < 1)
      reject(s, "delta " + std::to_string(b.delta) + " is not a potentially good additive valuation");
  }
  const bool flag_expected = b.kind == K::AdditivePotMult && s.i_v == SubgroupTag::dihedral(1);
  if (flag_expected && !s.eta_equals_chi) reject(s, "eta_equals_chi must be given for addmult with I_v = D_2p");
  if (!flag_expected && s.eta_equals_chi) reject(s, "eta_equals_chi only applies to addmult with I_v = D_2p");
}

QuadCharClass chi_class(const LocalSetting& s) {
  switch (s.base.kind) {
    case BaseReduction::Kind::SplitMult: return QuadCharClass::trivial();
    case BaseReduction::Kind::NonsplitMult: return QuadCharClass::unramified();
    case BaseReduction::Kind::AdditivePotMult: return QuadCharClass::ramified(0);
    default: throw UnsupportedCaseError("chi is only defined for potentially multiplicative reduction");
  }
}

QuadCharClass eta_v_class(const LocalSetting& s) {
  using K = SubgroupTag::Kind;
  if (s.g_v.kind == K::Trivial || s.g_v.kind == K::Cyclic) return QuadCharClass::trivial();
  // G_v contains a reflection, so eta_v is the quadratic character cut out by G_v cap C_p.
  if (s.i_v.kind == K::Trivial || s.i_v.kind == K::Cyclic) return QuadCharClass::unramified();
  return QuadCharClass::ramified(s.eta_equals_chi.value_or(false) ? 0 : 1);
}

}  // namespace dparity
