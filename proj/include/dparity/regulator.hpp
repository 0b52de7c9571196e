#pragma once

#include <array>
#include <string>

#include "dparity/dihedral.hpp"
#include "dparity/matrix.hpp"

namespace dparity {

/// Rational matrix model of a representation of D_{2p} = <s, t>, checked on
/// construction against s^p = t^2 = 1 and t s t = s^-1.
class RationalRep {
 public:
  RationalRep(int p, Matrix s, Matrix t);

  int p() const { return p_; }
  std::size_t dimension() const { return s_.rows(); }
  const Matrix& s() const { return s_; }
  const Matrix& t() const { return t_; }
  /// Image of s^a t^b.
  Matrix image(unsigned a, int b) const;

  static RationalRep trivial(int p);
  static RationalRep eta(int p);
  /// Permutation representation on Z/p minus the trivial one, in the basis e_i - e_0.
  static RationalRep rho2(int p);
  /// Permutation representation on G/C_p, isomorphic to 1 + eta.
  static RationalRep coset_sign_model(int p);

  friend RationalRep operator+(const RationalRep& a, const RationalRep& b);

 private:
  int p_;
  Matrix s_, t_;
};

/// Nonzero rational modulo squares of nonzero rationals. The stored
/// representative has squarefree numerator and denominator when factoring succeeds.
class SquareClass {
 public:
  explicit SquareClass(const Rational& q);

  const Rational& representative() const { return rep_; }
  int ord_parity(const Integer& p) const;
  friend SquareClass operator*(const SquareClass& a, const SquareClass& b);
  friend bool operator==(const SquareClass& a, const SquareClass& b);
  std::string to_string() const { return dparity::to_string(rep_); }

 private:
  Rational rep_;
};

/// Subgroups in Theta = {1} - 2 D2 - C_p + 2 G; D2 is generated by t.
enum class ThetaSubgroup { Trivial, D2, Cp, G };

/// Averages seed over G: (1/2p) sum_g rho(g)^T seed rho(g). Throws
/// DegeneratePairingError if the result is singular; the caller should retry
/// with another seed.
Matrix invariant_pairing(const RationalRep& rep, const Matrix& seed);

/// Basis (as columns) of the H-fixed subspace of rep, via the projector image.
Matrix fixed_subspace(const RationalRep& rep, ThetaSubgroup h);

/// Sum over Theta of coefficient * dim rho^H; zero for every representation.
int theta_dimension_sum(const RationalRep& rep);

/// C_Theta(rep) for the given invariant pairing.
SquareClass regulator_constant(const RationalRep& rep, const Matrix& pairing);
/// C_Theta(rep) using the standard pairing averaged from the identity.
SquareClass regulator_constant(const RationalRep& rep);

/// Characters on D_{2p} of the rational basis 1, eta, rho2.
std::array<VirtualCharacter, 3> rational_basis_characters(int p);

struct MembershipReport {
  std::array<std::int64_t, 3> multiplicities{};  // <sigma, rho> for rho = 1, eta, rho2
  std::array<int, 3> ord_parities{};              // ord_p C_Theta(rho) mod 2
  bool member = false;
};

/// Tests <sigma, rho> = ord_p C_Theta(rho) mod 2 for rho in {1, eta, rho2}.
/// Throws InvalidGroupError unless sigma lives on D_{2p} with p >= 5, and
/// std::invalid_argument if sigma is not self-dual.
MembershipReport t_theta_report(const VirtualCharacter& sigma, int p);
bool t_theta_member(const VirtualCharacter& sigma, int p);

}  // namespace dparity
