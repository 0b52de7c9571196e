#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dparity/cyclotomic.hpp"

namespace dparity {

/// Finite group carrying characters: the cyclic group C_{p^n} or the dihedral
/// group D_{2p^n} = <s, t | s^{p^n}, t^2, t s t = s^-1>. n = 0 gives the trivial
/// group or the order-2 group respectively.
struct GroupSpec {
  enum class Kind { Cyclic, Dihedral };
  Kind kind = Kind::Dihedral;
  int p = 3;
  int n = 1;

  /// Rotation order p^n.
  std::uint64_t rotation_order() const;
  std::uint64_t order() const;
  int class_count() const;
  std::uint64_t class_size(int cls) const;
  std::string to_string() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Group element s^a t^b with 0 <= a < p^n and b in {0, 1} (b = 0 for cyclic groups).
struct GroupElement {
  std::uint64_t a = 0;
  int b = 0;
};

/// Canonical class index: cyclic groups index classes by the rotation exponent;
/// dihedral groups use 0 for the identity, j for {s^j, s^-j} with 1 <= j <= (p^n-1)/2,
/// and (p^n+1)/2 for the reflections.
int class_of(const GroupSpec& g, const GroupElement& x);
GroupElement class_representative(const GroupSpec& g, int cls);

/// Subgroups of D_{2p^n} up to conjugacy. Embeddings are fixed once: C_{p^k} is
/// generated by s^{p^(n-k)}, the order-2 subgroup by t, and D_{2p^k} by both.
struct SubgroupTag {
  enum class Kind { Trivial, Order2, Cyclic, Dihedral };
  Kind kind = Kind::Trivial;
  int k = 0;

  static SubgroupTag trivial() { return {Kind::Trivial, 0}; }
  static SubgroupTag order2() { return {Kind::Order2, 0}; }
  static SubgroupTag cyclic(int k) { return {Kind::Cyclic, k}; }
  static SubgroupTag dihedral(int k) { return {Kind::Dihedral, k}; }

  /// The subgroup as an abstract group for the given prime.
  GroupSpec group(int p) const;
  std::string to_string() const;

  friend bool operator==(const SubgroupTag&, const SubgroupTag&) = default;
};

/// Class function with values in Z[zeta_{p^n}], indexed by canonical classes.
class VirtualCharacter {
 public:
  VirtualCharacter(GroupSpec g, std::vector<Cyclotomic> values);
  static VirtualCharacter zero(const GroupSpec& g);

  const GroupSpec& group() const { return group_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& value(int cls) const { return values_.at(static_cast<std::size_t>(cls)); }
  const Cyclotomic& operator()(const GroupElement& x) const { return value(class_of(group_, x)); }
  std::int64_t degree() const;

  VirtualCharacter& operator+=(const VirtualCharacter& o);
  VirtualCharacter& operator-=(const VirtualCharacter& o);
  VirtualCharacter& operator*=(std::int64_t k);
  friend VirtualCharacter operator+(VirtualCharacter a, const VirtualCharacter& b) { return a += b; }
  friend VirtualCharacter operator-(VirtualCharacter a, const VirtualCharacter& b) { return a -= b; }
  friend VirtualCharacter operator*(std::int64_t k, VirtualCharacter a) { return a *= k; }
  friend bool operator==(const VirtualCharacter&, const VirtualCharacter&) = default;

  std::string to_string() const;

 private:
  GroupSpec group_;
  std::vector<Cyclotomic> values_;
};

/// Trivial character 1.
VirtualCharacter trivial_character(const GroupSpec& g);
/// The sign character eta of D_{2p^n} (trivial on rotations, -1 on reflections).
VirtualCharacter eta_character(int p, int n);
/// chi_j : s -> zeta_{p^n}^j on C_{p^n}.
VirtualCharacter cyclic_character(int p, int n, std::int64_t j);
/// I(chi_j) = Ind_{C_{p^n}}^{D_{2p^n}} chi_j, computed in closed form.
VirtualCharacter dihedral_two_dim(int p, int n, std::int64_t j);

/// Irreducible characters: for D_{2p^n} the list is 1, eta, I(chi_1), ..., I(chi_{(p^n-1)/2});
/// for C_{p^n} it is chi_0, ..., chi_{p^n-1}. Throws InvalidGroupError for p even or p < 3.
std::vector<VirtualCharacter> irreducibles(int p, int n);
std::vector<VirtualCharacter> irreducibles(const GroupSpec& g);

/// (1/|G|) sum_g chi1(g) conj(chi2(g)); throws InvalidGroupError on mismatched groups
/// and std::domain_error if the result is not an integer.
std::int64_t inner_product(const VirtualCharacter& chi1, const VirtualCharacter& chi2);

/// Multiplicities of the irreducibles of chi's group, in irreducibles() order.
std::vector<std::int64_t> multiplicities(const VirtualCharacter& chi);

/// Induction from the tagged subgroup of the ambient group. chi must live on
/// from.group(ambient.p). Throws InvalidGroupError if the tag is not a subgroup.
VirtualCharacter induce(const SubgroupTag& from, const VirtualCharacter& chi, const GroupSpec& ambient);
/// Induction into D_{2p^n}.
VirtualCharacter induce(const SubgroupTag& from, const VirtualCharacter& chi, int ambient_n);
VirtualCharacter restrict_to(const SubgroupTag& to, const VirtualCharacter& chi);

/// Whether the tag names a subgroup of g under the fixed embeddings.
bool is_subgroup(const SubgroupTag& tag, const GroupSpec& g);

/// For every injective chi on C_{p^N}, checks that
/// Ind_{D_{2p^(N-1)}} Res_{D_{2p^(N-1)}} I(chi) equals the sum of I(chi0) over the
/// p characters chi0 agreeing with chi on C_{p^(N-1)}.
bool verify_reduction_identity(int p, int N);

}  // namespace dparity
