#include "dparity/regulator.hpp"

#include <stdexcept>

#include "dparity/errors.hpp"

namespace dparity {

namespace {

struct Term {
  ThetaSubgroup h;
  int coefficient;
};
constexpr Term kTheta[] = {
    {ThetaSubgroup::Trivial, 1}, {ThetaSubgroup::D2, -2}, {ThetaSubgroup::Cp, -1}, {ThetaSubgroup::G, 2}};

int subgroup_order(ThetaSubgroup h, int p) {
  switch (h) {
    case ThetaSubgroup::Trivial: return 1;
    case ThetaSubgroup::D2: return 2;
    case ThetaSubgroup::Cp: return p;
    case ThetaSubgroup::G: return 2 * p;
  }
  return 0;
}

// Square-free part of |n| together with whether factoring finished.
Integer squarefree_part(const Integer& n) {
  const Factorization f = factor(n);
  Integer out = f.cofactor;
  for (const auto& [q, e] : f.primes)
    if (e % 2) out *= q;
  return out;
}

}  // namespace

RationalRep::RationalRep(int p, Matrix s, Matrix t) : p_(p), s_(std::move(s)), t_(std::move(t)) {
  if (p < 3 || p % 2 == 0 || !is_probable_prime(p)) throw InvalidGroupError("p must be an odd prime");
  const std::size_t d = s_.rows();
  if (s_.cols() != d || t_.rows() != d || t_.cols() != d) throw InvalidGroupError("rep matrices must be square of equal size");
  const Matrix id = Matrix::identity(d);
  if (!(s_.power(static_cast<unsigned>(p)) == id)) throw InvalidGroupError("rho(s)^p != 1");
  if (!(t_ * t_ == id)) throw InvalidGroupError("rho(t)^2 != 1");
  if (!(t_ * s_ * t_ * s_ == id)) throw InvalidGroupError("rho(t) rho(s) rho(t) != rho(s)^-1");
}

Matrix RationalRep::image(unsigned a, int b) const {
  Matrix m = s_.power(a % static_cast<unsigned>(p_));
  return b ? m * t_ : m;
}

RationalRep RationalRep::trivial(int p) { return RationalRep(p, Matrix{{1}}, Matrix{{1}}); }

RationalRep RationalRep::eta(int p) { return RationalRep(p, Matrix{{1}}, Matrix{{-1}}); }

RationalRep RationalRep::rho2(int p) {
  // f_i = e_i - e_0 for i = 1..p-1, with f_0 = 0. s f_i = f_{i+1} - f_1, t f_i = f_{-i}.
  const std::size_t d = static_cast<std::size_t>(p - 1);
  Matrix s(d, d), t(d, d);
  for (int i = 1; i < p; ++i) {
    const std::size_t col = static_cast<std::size_t>(i - 1);
    const int next = (i + 1) % p;
    if (next != 0) s(static_cast<std::size_t>(next - 1), col) += 1;
    s(0, col) -= 1;
    t(static_cast<std::size_t>(p - i - 1), col) = 1;
  }
  return RationalRep(p, std::move(s), std::move(t));
}

RationalRep RationalRep::coset_sign_model(int p) { return RationalRep(p, Matrix::identity(2), Matrix{{0, 1}, {1, 0}}); }

RationalRep operator+(const RationalRep& a, const RationalRep& b) {
  if (a.p_ != b.p_) throw InvalidGroupError("direct sum of representations of different groups");
  return RationalRep(a.p_, direct_sum(a.s_, b.s_), direct_sum(a.t_, b.t_));
}

SquareClass::SquareClass(const Rational& q) {
  if (q == 0) throw std::domain_error("square class of zero");
  Rational c = q;
  c.canonicalize();
  const Integer num = squarefree_part(c.get_num()), den = squarefree_part(c.get_den());
  rep_ = Rational(sgn(c) * num, den);
  rep_.canonicalize();
}

int SquareClass::ord_parity(const Integer& p) const { return ((valuation(rep_, p) % 2) + 2) % 2; }

SquareClass operator*(const SquareClass& a, const SquareClass& b) { return SquareClass(a.rep_ * b.rep_); }

bool operator==(const SquareClass& a, const SquareClass& b) {
  Rational q = a.rep_ / b.rep_;
  q.canonicalize();
  return q > 0 && is_perfect_square(q.get_num()) && is_perfect_square(q.get_den());
}

Matrix invariant_pairing(const RationalRep& rep, const Matrix& seed) {
  const std::size_t d = rep.dimension();
  if (seed.rows() != d || seed.cols() != d || !seed.is_symmetric())
    throw std::invalid_argument("seed pairing must be a symmetric matrix of the representation's dimension");
  Matrix sum(d, d);
  for (unsigned a = 0; a < static_cast<unsigned>(rep.p()); ++a)
    for (int b = 0; b < 2; ++b) {
      const Matrix g = rep.image(a, b);
      sum += g.transpose() * seed * g;
    }
  sum *= Rational(1, 2 * rep.p());
  if (d > 0 && sum.determinant() == 0) throw DegeneratePairingError("averaged pairing is degenerate; retry with another seed");
  return sum;
}

Matrix fixed_subspace(const RationalRep& rep, ThetaSubgroup h) {
  const std::size_t d = rep.dimension();
  Matrix proj(d, d);
  const int order = subgroup_order(h, rep.p());
  const unsigned p = static_cast<unsigned>(rep.p());
  const bool rotations = h == ThetaSubgroup::Cp || h == ThetaSubgroup::G;
  const bool reflection = h == ThetaSubgroup::D2 || h == ThetaSubgroup::G;
  for (unsigned a = 0; a < (rotations ? p : 1u); ++a)
    for (int b = 0; b < (reflection ? 2 : 1); ++b) proj += rep.image(a, b);
  proj *= Rational(1, order);
  return proj.column_space_basis();
}

int theta_dimension_sum(const RationalRep& rep) {
  int total = 0;
  for (const auto& term : kTheta) total += term.coefficient * static_cast<int>(fixed_subspace(rep, term.h).cols());
  return total;
}

SquareClass regulator_constant(const RationalRep& rep, const Matrix& pairing) {
  Rational c = 1;
  for (const auto& term : kTheta) {
    const Matrix v = fixed_subspace(rep, term.h);
    if (v.cols() == 0) continue;
    Matrix gram = v.transpose() * pairing * v;
    gram *= Rational(1, subgroup_order(term.h, rep.p()));
    Rational det = gram.determinant();
    if (det == 0) throw DegeneratePairingError("pairing is degenerate on a fixed subspace");
    Rational factor = 1;
    const int e = term.coefficient;
    for (int i = 0; i < (e < 0 ? -e : e); ++i) factor *= det;
    if (e > 0) c *= factor;
    else c /= factor;
  }
  return SquareClass(c);
}

SquareClass regulator_constant(const RationalRep& rep) {
  return regulator_constant(rep, invariant_pairing(rep, Matrix::identity(rep.dimension())));
}

std::array<VirtualCharacter, 3> rational_basis_characters(int p) {
  const GroupSpec g{GroupSpec::Kind::Dihedral, p, 1};
  auto rho2 = VirtualCharacter::zero(g);
  for (int j = 1; j <= (p - 1) / 2; ++j) rho2 += dihedral_two_dim(p, 1, j);
  return {trivial_character(g), eta_character(p, 1), rho2};
}

MembershipReport t_theta_report(const VirtualCharacter& sigma, int p) {
  if (p < 5) throw InvalidGroupError("T_Theta membership needs p >= 5");
  const GroupSpec g{GroupSpec::Kind::Dihedral, p, 1};
  if (!(sigma.group() == g)) throw InvalidGroupError("sigma must be a character of " + g.to_string());
  for (const auto& v : sigma.values())
    if (!(v == v.conj())) throw std::invalid_argument("sigma is not self-dual");

  const auto basis = rational_basis_characters(p);
  const RationalRep reps[3] = {RationalRep::trivial(p), RationalRep::eta(p), RationalRep::rho2(p)};
  MembershipReport r;
  r.member = true;
  for (std::size_t i = 0; i < 3; ++i) {
    r.multiplicities[i] = inner_product(sigma, basis[i]);
    r.ord_parities[i] = regulator_constant(reps[i]).ord_parity(p);
    if (((r.multiplicities[i] % 2) + 2) % 2 != r.ord_parities[i]) r.member = false;
  }
  return r;
}

bool t_theta_member(const VirtualCharacter& sigma, int p) { return t_theta_report(sigma, p).member; }

}  // namespace dparity
