#include "dparity/parity_engine.hpp"

#include <stdexcept>

#include "dparity/errors.hpp"
#include "dparity/tate.hpp"

namespace dparity {

namespace {

const SubgroupTag kOne = SubgroupTag::trivial();
const SubgroupTag kD2 = SubgroupTag::order2();
const SubgroupTag kCp = SubgroupTag::cyclic(1);
const SubgroupTag kG = SubgroupTag::dihedral(1);

int sign_of_parity(int n) { return n % 2 == 0 ? 1 : -1; }

// <1 + a, 1 + b> for quadratic characters a, b.
int pair_multiplicity(const QuadCharClass& a, const QuadCharClass& b) {
  const auto one = QuadCharClass::trivial();
  return 1 + (b == one) + (a == one) + (a == b);
}

std::string c_branch(const LocalSetting& s) {
  if (s.g_v == kOne) return "Gv=1: C_v({1}) and C_v(C_p) are squares";
  if (s.g_v == kCp) return "Gv=Cp: C_v({1}) and C_v(C_p) are squares";
  if (s.g_v == kD2) return "Gv=D2: C_v = C_v(C_p)^(p-1)";
  if (s.base.kind == BaseReduction::Kind::Good) return "Gv=D2p: good reduction, omega trivial and c = 1";
  if (s.base.potentially_multiplicative()) {
    const auto red = reduction_over(s, kCp);
    if (red == ExtensionReduction::SplitMult) return "Gv=D2p: pot-mult, split over L^Cp, C_v = e_1/e_Cp = p";
    if (s.ell != s.p) return "Gv=D2p: pot-mult, not split over L^Cp, l != p so omega is a unit";
    if (red == ExtensionReduction::NonsplitMult) return "Gv=D2p: pot-mult, nonsplit over L, p-1 | e_1 - e_Cp";
    return "Gv=D2p: pot-mult, additive I_n* over L";
  }
  if (s.i_v == kCp) return "Gv=D2p: pot-good, I_v=Cp, f_1 = f_Cp = 2";
  if (s.r % 2 == 0) return "Gv=D2p: pot-good, I_v=D2p, q an even power of p";
  return "Gv=D2p: pot-good, I_v=D2p, q an odd power of p: floor(2p delta/12) - floor(2 delta/12)";
}

}  // namespace

std::string CaseTrace::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < branches.size(); ++i) out += (i ? " | " : "") + branches[i];
  if (!factors.empty())
    out += " | ord_p C_v({1})=" + std::to_string(ordp_c1) + " ord_p C_v(C_p)=" + std::to_string(ordp_ccp);
  if (epsilon) out += " | epsilon=" + std::to_string(*epsilon);
  return out;
}

int rohrlich_epsilon(int p, int r, int defect) {
  if (r % 2 == 0 || defect == 1) return 1;
  switch (defect) {
    case 2:
    case 6: return legendre(-1, p);
    case 3: return legendre(-3, p);
    case 4: return legendre(-2, p);
    default: throw UnsupportedCaseError("epsilon undefined for semistability defect " + std::to_string(defect));
  }
}

SignWithTrace c_parity(const LocalSetting& s) {
  validate(s);
  SignWithTrace out;
  out.trace.branches.push_back(c_branch(s));
  const auto one = base_change(s, kOne);
  const auto cp = base_change(s, kCp);
  out.trace.ordp_c1 = one.ordp_total();
  out.trace.ordp_ccp = cp.ordp_total();
  out.trace.factors = {one, cp};
  // C_v = C_v({1}) C_v(D2)^-2 C_v(C_p)^-1 C_v(G)^2; the squared terms drop out mod 2.
  out.sign = sign_of_parity(out.trace.ordp_c1 - out.trace.ordp_ccp);
  return out;
}

SignWithTrace w_ratio(const LocalSetting& s) {
  validate(s);
  SignWithTrace out;
  auto& br = out.trace.branches;
  if (s.g_v == kOne) {
    br.push_back("Gv=1: tau_v = 1+1 = (1+eta)_v");
    return out;
  }
  if (s.g_v == kCp) {
    br.push_back("Gv=Cp: W(tau_v) = 1 = W((1+eta)_v)");
    return out;
  }
  if (s.g_v == kD2) {
    br.push_back("Gv=D2: tau_v = (1+eta)_v");
    return out;
  }
  if (s.base.kind == BaseReduction::Kind::Good) {
    br.push_back("Gv=D2p: good reduction, ratio det tau_v(-1) / det (1+eta)_v(-1) = 1");
    return out;
  }
  if (s.base.potentially_multiplicative()) {
    const auto chi = chi_class(s), eta = eta_v_class(s);
    const auto one = QuadCharClass::trivial();
    const int k = (chi == one) + (chi == eta);
    br.push_back("Gv=D2p: pot-mult, chi=" + chi.to_string() + " eta_v=" + eta.to_string() +
                 ", <chi,(1+eta)_v> = " + std::to_string(k));
    out.sign = sign_of_parity(k);
    return out;
  }
  // Potentially good additive reduction.
  if (s.ell != s.p) {
    br.push_back("Gv=D2p: pot-good, l != p: epsilon_0 congruence gives ratio 1");
    return out;
  }
  const int defect = s.base.semistability_defect();
  out.trace.epsilon = rohrlich_epsilon(s.p, s.r, defect);
  br.push_back("alpha(tau_v, epsilon) = alpha((1+eta)_v, epsilon) cancels");
  const Integer q_mod = mod(s.q(), defect);
  if (q_mod == 1) {
    br.insert(br.begin(), std::string("Gv=D2p: pot-good, l = p, q = 1 mod ") + std::to_string(defect) +
                              (s.r % 2 == 0 ? " (r even)" : ""));
    return out;
  }
  if (q_mod != defect - 1 || (defect != 3 && defect != 4 && defect != 6))
    throw std::logic_error("q is neither 1 nor -1 modulo the defect in " + s.to_string());
  const auto eta_nr = QuadCharClass::unramified();
  const auto eta = eta_v_class(s);
  const int k = pair_multiplicity(eta_nr, eta);
  br.insert(br.begin(), "Gv=D2p: pot-good, l = p, q = -1 mod " + std::to_string(defect) +
                            ", <1+eta_nr, 1+eta_v> = " + std::to_string(k));
  out.sign = sign_of_parity(k);
  return out;
}

LocalVerdict verify_local(const LocalSetting& s) {
  auto c = c_parity(s);
  auto w = w_ratio(s);
  LocalVerdict v;
  v.c_parity = c.sign;
  v.w_ratio = w.sign;
  v.equal = c.sign == w.sign;
  v.c_trace = std::move(c.trace);
  v.w_trace = std::move(w.trace);
  return v;
}

bool realizable_by_tame_inertia(const LocalSetting& s) {
  if (s.ell == s.p || s.i_v != kCp) return true;
  const Integer q = mod(s.q(), s.p);
  if (s.g_v == kCp) return q == 1;
  if (s.g_v == kG) return q == s.p - 1;
  return true;
}

std::vector<LocalSetting> enumerate_settings(int p, const EnumerationBounds& bounds) {
  if (p < 5 || !is_probable_prime(p)) throw InadmissibleSettingError("enumeration needs a prime p >= 5");
  const std::pair<SubgroupTag, SubgroupTag> pairs[] = {{kOne, kOne}, {kD2, kOne}, {kD2, kD2}, {kCp, kOne},
                                                       {kCp, kCp},   {kG, kCp},   {kG, kG}};
  std::vector<BaseReduction> bases{BaseReduction::good()};
  for (int n = 1; n <= bounds.max_n; ++n) bases.push_back(BaseReduction::split(n));
  for (int n = 1; n <= bounds.max_n; ++n) bases.push_back(BaseReduction::nonsplit(n));
  for (int n = 1; n <= bounds.max_n; ++n) bases.push_back(BaseReduction::additive_pot_mult(n));
  for (int d : {2, 3, 4, 6, 8, 9, 10}) bases.push_back(BaseReduction::additive_pot_good(d));

  std::vector<LocalSetting> out;
  for (const auto& ell : bounds.ells)
    for (int r : bounds.r_values)
      for (const auto& [g, i] : pairs)
        for (const auto& base : bases) {
          std::vector<std::optional<bool>> flags{std::nullopt};
          if (base.kind == BaseReduction::Kind::AdditivePotMult && i == kG) flags = {false, true};
          for (const auto& flag : flags) {
            LocalSetting s{p, ell, r, g, i, base, flag};
            try {
              validate(s);
            } catch (const InadmissibleSettingError&) {
              continue;
            }
            if (bounds.strict && !realizable_by_tame_inertia(s)) continue;
            out.push_back(std::move(s));
          }
        }
  return out;
}

ParityTable generate_table(TableRoute route, const std::vector<int>& primes) {
  const std::array<std::vector<int>, 4> deltas{{{2, 10}, {3, 9}, {4, 8}, {6}}};
  ParityTable table{};
  for (std::size_t row = 0; row < 4; ++row)
    for (std::size_t col = 0; col < 4; ++col) {
      std::optional<int> entry;
      bool consistent = true;
      for (int p : primes) {
        if (p % 12 != kTableResidues[col]) continue;
        for (int delta : deltas[row])
          for (int r : {1, 3}) {
            const LocalSetting s{p, p, r, kG, kG, BaseReduction::additive_pot_good(delta), std::nullopt};
            const int v = route == TableRoute::CParity ? c_parity(s).sign : w_ratio(s).sign;
            if (entry && *entry != v) consistent = false;
            entry = v;
          }
      }
      table[row][col] = entry && consistent ? *entry : 0;
    }
  return table;
}

BaseReduction base_reduction(const WeierstrassCurve& e, const Integer& ell) {
  const auto d = local_reduction(e, ell);
  switch (d.reduction_class) {
    case ReductionClass::Good: return BaseReduction::good();
    case ReductionClass::Multiplicative:
      return d.split == SplitType::Split ? BaseReduction::split(d.kodaira.n) : BaseReduction::nonsplit(d.kodaira.n);
    case ReductionClass::Additive:
      if (potential_class(e, ell) == PotentialClass::PotentiallyMultiplicative)
        return BaseReduction::additive_pot_mult(-valuation(e.j_invariant(), ell));
      return BaseReduction::additive_pot_good(d.delta);
  }
  return BaseReduction::good();
}

std::vector<Integer> bad_primes(const WeierstrassCurve& e) {
  const Factorization f = factor(e.discriminant());
  if (!f.complete())
    throw UnsupportedCaseError("could not factor the discriminant; cofactor " + f.cofactor.get_str() + " remains");
  std::vector<Integer> out;
  for (const auto& [ell, exponent] : f.primes)
    if (local_reduction(e, ell).delta > 0) out.push_back(ell);
  return out;
}

GlobalVerdict global_parity(const WeierstrassCurve& e, int p, const std::map<Integer, Completion>& completion) {
  GlobalVerdict out;
  for (const auto& ell : bad_primes(e)) {
    const auto it = completion.find(ell);
    if (it == completion.end())
      throw InadmissibleSettingError("no local completion given for the bad prime " + ell.get_str());
    const Completion& c = it->second;
    LocalSetting s{p, ell, 1, c.g_v, c.i_v, base_reduction(e, ell), c.eta_equals_chi};
    auto verdict = verify_local(s);
    out.w_product *= verdict.w_ratio;
    out.c_product *= verdict.c_parity;
    out.primes.push_back({ell, std::move(s), std::move(verdict)});
  }
  out.equal = out.w_product == out.c_product;
  return out;
}

}  // namespace dparity
