#include "dparity/dihedral.hpp"

#include <stdexcept>

#include "dparity/errors.hpp"

namespace dparity {

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

bool small_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void validate(const GroupSpec& g) {
  if (g.p % 2 == 0 || g.p < 3 || !small_prime(g.p))
    throw InvalidGroupError("group parameter p must be an odd prime, got " + std::to_string(g.p));
  if (g.n < 0) throw InvalidGroupError("group parameter n must be nonnegative");
  if (ipow(static_cast<std::uint64_t>(g.p), g.n) > 100000) throw InvalidGroupError("group too large: " + g.to_string());
}

GroupElement multiply(const GroupSpec& g, const GroupElement& x, const GroupElement& y) {
  const std::uint64_t m = g.rotation_order();
  const std::uint64_t ya = x.b ? (m - y.a) % m : y.a;
  return {(x.a + ya) % m, x.b ^ y.b};
}

GroupElement inverse(const GroupSpec& g, const GroupElement& x) {
  if (x.b) return x;
  const std::uint64_t m = g.rotation_order();
  return {(m - x.a) % m, 0};
}

std::vector<GroupElement> elements(const GroupSpec& g) {
  std::vector<GroupElement> out;
  const std::uint64_t m = g.rotation_order();
  for (int b = 0; b <= (g.kind == GroupSpec::Kind::Dihedral ? 1 : 0); ++b)
    for (std::uint64_t a = 0; a < m; ++a) out.push_back({a, b});
  return out;
}

// Index of the subgroup's rotations inside the ambient rotations.
std::uint64_t embedding_step(const SubgroupTag& tag, const GroupSpec& ambient) {
  const GroupSpec h = tag.group(ambient.p);
  return ipow(static_cast<std::uint64_t>(ambient.p), ambient.n - h.n);
}

void require_subgroup(const SubgroupTag& tag, const GroupSpec& ambient) {
  if (!is_subgroup(tag, ambient))
    throw InvalidGroupError(tag.to_string() + " is not a subgroup of " + ambient.to_string());
}

}  // namespace

std::uint64_t GroupSpec::rotation_order() const { return ipow(static_cast<std::uint64_t>(p), n); }

std::uint64_t GroupSpec::order() const { return rotation_order() * (kind == Kind::Dihedral ? 2 : 1); }

int GroupSpec::class_count() const {
  const auto m = static_cast<int>(rotation_order());
  return kind == Kind::Cyclic ? m : (m - 1) / 2 + 2;
}

std::uint64_t GroupSpec::class_size(int cls) const {
  if (cls < 0 || cls >= class_count()) throw std::out_of_range("class index");
  if (kind == Kind::Cyclic || cls == 0) return 1;
  return cls == class_count() - 1 ? rotation_order() : 2;
}

std::string GroupSpec::to_string() const {
  const auto m = rotation_order();
  return kind == Kind::Cyclic ? "C" + std::to_string(m) : "D" + std::to_string(2 * m);
}

int class_of(const GroupSpec& g, const GroupElement& x) {
  const std::uint64_t m = g.rotation_order();
  if (g.kind == GroupSpec::Kind::Cyclic) return static_cast<int>(x.a % m);
  if (x.b) return g.class_count() - 1;
  const std::uint64_t a = x.a % m;
  return static_cast<int>(a <= m - a ? a : m - a);
}

GroupElement class_representative(const GroupSpec& g, int cls) {
  if (cls < 0 || cls >= g.class_count()) throw std::out_of_range("class index");
  if (g.kind == GroupSpec::Kind::Dihedral && cls == g.class_count() - 1) return {0, 1};
  return {static_cast<std::uint64_t>(cls), 0};
}

GroupSpec SubgroupTag::group(int p) const {
  switch (kind) {
    case Kind::Trivial: return {GroupSpec::Kind::Cyclic, p, 0};
    case Kind::Order2: return {GroupSpec::Kind::Dihedral, p, 0};
    case Kind::Cyclic: return {GroupSpec::Kind::Cyclic, p, k};
    case Kind::Dihedral: return {GroupSpec::Kind::Dihedral, p, k};
  }
  throw InvalidGroupError("bad subgroup tag");
}

std::string SubgroupTag::to_string() const {
  switch (kind) {
    case Kind::Trivial: return "trivial";
    case Kind::Order2: return "order2";
    case Kind::Cyclic: return "cyclic_p_power(" + std::to_string(k) + ")";
    case Kind::Dihedral: return "dihedral_p_power(" + std::to_string(k) + ")";
  }
  return "?";
}

bool is_subgroup(const SubgroupTag& tag, const GroupSpec& g) {
  const GroupSpec h = tag.group(g.p);
  if (h.n < 0 || h.n > g.n) return false;
  return !(h.kind == GroupSpec::Kind::Dihedral && g.kind == GroupSpec::Kind::Cyclic);
}

VirtualCharacter::VirtualCharacter(GroupSpec g, std::vector<Cyclotomic> values)
    : group_(g), values_(std::move(values)) {
  validate(group_);
  if (values_.size() != static_cast<std::size_t>(group_.class_count()))
    throw InvalidGroupError("value count does not match class count of " + group_.to_string());
  for (const auto& v : values_)
    if (v.order() != group_.rotation_order()) throw InvalidGroupError("character value in the wrong cyclotomic field");
}

VirtualCharacter VirtualCharacter::zero(const GroupSpec& g) {
  validate(g);
  return VirtualCharacter(g, std::vector<Cyclotomic>(static_cast<std::size_t>(g.class_count()),
                                                     Cyclotomic(g.rotation_order())));
}

std::int64_t VirtualCharacter::degree() const { return values_[0].integer_value(); }

VirtualCharacter& VirtualCharacter::operator+=(const VirtualCharacter& o) {
  if (!(group_ == o.group_)) throw InvalidGroupError("adding characters of different groups");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

VirtualCharacter& VirtualCharacter::operator-=(const VirtualCharacter& o) {
  if (!(group_ == o.group_)) throw InvalidGroupError("subtracting characters of different groups");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

VirtualCharacter& VirtualCharacter::operator*=(std::int64_t k) {
  for (auto& v : values_) v *= k;
  return *this;
}

std::string VirtualCharacter::to_string() const {
  std::string out = group_.to_string() + "[";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ", ";
    out += values_[i].to_string();
  }
  return out + "]";
}

VirtualCharacter trivial_character(const GroupSpec& g) {
  validate(g);
  return VirtualCharacter(g, std::vector<Cyclotomic>(static_cast<std::size_t>(g.class_count()),
                                                     Cyclotomic::integer(g.rotation_order(), 1)));
}

VirtualCharacter eta_character(int p, int n) {
  const GroupSpec g{GroupSpec::Kind::Dihedral, p, n};
  auto chi = trivial_character(g);
  std::vector<Cyclotomic> v = chi.values();
  v.back() = Cyclotomic::integer(g.rotation_order(), -1);
  return VirtualCharacter(g, std::move(v));
}

VirtualCharacter cyclic_character(int p, int n, std::int64_t j) {
  const GroupSpec g{GroupSpec::Kind::Cyclic, p, n};
  validate(g);
  const auto m = static_cast<std::int64_t>(g.rotation_order());
  std::vector<Cyclotomic> v;
  for (std::int64_t a = 0; a < m; ++a) v.push_back(Cyclotomic::zeta_power(g.rotation_order(), (j % m) * a));
  return VirtualCharacter(g, std::move(v));
}

VirtualCharacter dihedral_two_dim(int p, int n, std::int64_t j) {
  const GroupSpec g{GroupSpec::Kind::Dihedral, p, n};
  validate(g);
  const std::uint64_t m = g.rotation_order();
  const auto sm = static_cast<std::int64_t>(m);
  std::vector<Cyclotomic> v;
  for (int cls = 0; cls + 1 < g.class_count(); ++cls) {
    const std::int64_t e = (j % sm) * cls;
    v.push_back(Cyclotomic::zeta_power(m, e) + Cyclotomic::zeta_power(m, -e));
  }
  v.push_back(Cyclotomic(m));
  return VirtualCharacter(g, std::move(v));
}

std::vector<VirtualCharacter> irreducibles(const GroupSpec& g) {
  validate(g);
  std::vector<VirtualCharacter> out;
  const auto m = static_cast<std::int64_t>(g.rotation_order());
  if (g.kind == GroupSpec::Kind::Cyclic) {
    for (std::int64_t j = 0; j < m; ++j) out.push_back(cyclic_character(g.p, g.n, j));
    return out;
  }
  out.push_back(trivial_character(g));
  out.push_back(eta_character(g.p, g.n));
  for (std::int64_t j = 1; j <= (m - 1) / 2; ++j) out.push_back(dihedral_two_dim(g.p, g.n, j));
  return out;
}

std::vector<VirtualCharacter> irreducibles(int p, int n) {
  if (n < 1) throw InvalidGroupError("n must be positive");
  return irreducibles(GroupSpec{GroupSpec::Kind::Dihedral, p, n});
}

std::int64_t inner_product(const VirtualCharacter& chi1, const VirtualCharacter& chi2) {
  const GroupSpec& g = chi1.group();
  if (!(g == chi2.group()))
    throw InvalidGroupError("inner product of characters on " + g.to_string() + " and " + chi2.group().to_string());
  Cyclotomic sum(g.rotation_order());
  for (int cls = 0; cls < g.class_count(); ++cls)
    sum += chi1.value(cls) * chi2.value(cls).conj() * static_cast<std::int64_t>(g.class_size(cls));
  return sum.divided_by(static_cast<std::int64_t>(g.order())).integer_value();
}

std::vector<std::int64_t> multiplicities(const VirtualCharacter& chi) {
  std::vector<std::int64_t> out;
  for (const auto& irr : irreducibles(chi.group())) out.push_back(inner_product(chi, irr));
  return out;
}

VirtualCharacter induce(const SubgroupTag& from, const VirtualCharacter& chi, const GroupSpec& ambient) {
  validate(ambient);
  require_subgroup(from, ambient);
  const GroupSpec h = from.group(ambient.p);
  if (!(chi.group() == h))
    throw InvalidGroupError("character lives on " + chi.group().to_string() + ", not on " + h.to_string());
  const std::uint64_t step = embedding_step(from, ambient);
  const std::uint64_t m = ambient.rotation_order();
  const auto all = elements(ambient);

  std::vector<Cyclotomic> values;
  for (int cls = 0; cls < ambient.class_count(); ++cls) {
    const GroupElement g = class_representative(ambient, cls);
    Cyclotomic sum(m);
    for (const auto& x : all) {
      const GroupElement c = multiply(ambient, multiply(ambient, x, g), inverse(ambient, x));
      const bool in_h = c.a % step == 0 && (c.b == 0 || h.kind == GroupSpec::Kind::Dihedral);
      if (in_h) sum += chi(GroupElement{c.a / step, c.b}).embed(m);
    }
    values.push_back(sum.divided_by(static_cast<std::int64_t>(h.order())));
  }
  return VirtualCharacter(ambient, std::move(values));
}

VirtualCharacter induce(const SubgroupTag& from, const VirtualCharacter& chi, int ambient_n) {
  return induce(from, chi, GroupSpec{GroupSpec::Kind::Dihedral, chi.group().p, ambient_n});
}

VirtualCharacter restrict_to(const SubgroupTag& to, const VirtualCharacter& chi) {
  const GroupSpec& ambient = chi.group();
  require_subgroup(to, ambient);
  const GroupSpec h = to.group(ambient.p);
  const std::uint64_t step = embedding_step(to, ambient);
  std::vector<Cyclotomic> values;
  for (int cls = 0; cls < h.class_count(); ++cls) {
    const GroupElement y = class_representative(h, cls);
    values.push_back(chi(GroupElement{y.a * step, y.b}).descend(h.rotation_order()));
  }
  return VirtualCharacter(h, std::move(values));
}

bool verify_reduction_identity(int p, int N) {
  if (N < 2) throw InvalidGroupError("reduction identity needs N >= 2");
  validate(GroupSpec{GroupSpec::Kind::Dihedral, p, N});
  const auto m = static_cast<std::int64_t>(ipow(static_cast<std::uint64_t>(p), N));
  const std::int64_t step = m / p;
  const auto sub = SubgroupTag::dihedral(N - 1);
  for (std::int64_t j = 1; j <= (m - 1) / 2; ++j) {
    if (j % p == 0) continue;  // chi_j injective
    const auto tau = dihedral_two_dim(p, N, j);
    const auto restricted = restrict_to(sub, tau);
    // The restriction is I(chi') for the injective chi' = chi|C_{p^(N-1)}.
    if (!(restricted == dihedral_two_dim(p, N - 1, j % step))) return false;
    const auto lhs = induce(sub, restricted, N);
    auto rhs = VirtualCharacter::zero(tau.group());
    for (std::int64_t i = 0; i < p; ++i) rhs += dihedral_two_dim(p, N, j + i * step);
    if (!(lhs == rhs) || lhs.degree() != 2 * p) return false;
  }
  return true;
}

}  // namespace dparity
