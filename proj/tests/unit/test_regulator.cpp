#include <random>

#include "doctest.h"
#include "dparity/errors.hpp"
#include "dparity/regulator.hpp"

using namespace dparity;

namespace {

Rational trace(const Matrix& m) {
  Rational t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

// Random symmetric positive definite seed: A^T A + I keeps it non-degenerate.
Matrix random_seed(std::mt19937_64& rng, std::size_t d) {
  std::uniform_int_distribution<int> dist(-4, 4);
  Matrix a(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      a(i, j) = Rational(dist(rng), 1 + std::abs(dist(rng)));
      a(i, j).canonicalize();
    }
  return a.transpose() * a + Matrix::identity(d);
}

bool invariant(const RationalRep& rep, const Matrix& b) {
  return rep.s().transpose() * b * rep.s() == b && rep.t().transpose() * b * rep.t() == b;
}

}  // namespace

TEST_CASE("square classes") {
  CHECK(SquareClass(Rational(1, 5)) == SquareClass(5));
  CHECK(SquareClass(Rational(1, 25)) == SquareClass(1));
  CHECK_FALSE(SquareClass(-1) == SquareClass(1));
  CHECK_FALSE(SquareClass(2) == SquareClass(3));
  CHECK(SquareClass(Rational(12, 7)).representative() == Rational(3, 7));
  CHECK(SquareClass(Rational(1, 5)).ord_parity(5) == 1);
  CHECK(SquareClass(Rational(8, 125)).ord_parity(5) == 1);
  CHECK(SquareClass(Rational(8, 125)).ord_parity(2) == 1);
  CHECK(SquareClass(Rational(4, 25)).ord_parity(5) == 0);
}

TEST_CASE("representation models satisfy the dihedral relations") {
  for (int p : {3, 5, 7, 11, 13}) {
    CHECK_NOTHROW(RationalRep::rho2(p));
    CHECK(RationalRep::rho2(p).dimension() == static_cast<std::size_t>(p - 1));
  }
  CHECK_THROWS_AS(RationalRep(5, Matrix{{1}}, Matrix{{2}}), InvalidGroupError);
  CHECK_THROWS_AS(RationalRep(5, Matrix{{-1}}, Matrix{{1}}), InvalidGroupError);  // (-1)^5 != 1
  CHECK_THROWS_AS(RationalRep(4, Matrix{{1}}, Matrix{{1}}), InvalidGroupError);
}

TEST_CASE("rho2 has the character sum of I(chi)") {
  for (int p : {5, 7, 11}) {
    const auto rep = RationalRep::rho2(p);
    const auto chi = rational_basis_characters(p)[2];
    const GroupSpec g = chi.group();
    for (int cls = 0; cls < g.class_count(); ++cls) {
      const auto x = class_representative(g, cls);
      const Rational tr = trace(rep.image(static_cast<unsigned>(x.a), x.b));
      CHECK(chi.value(cls).is_integer());
      CHECK(tr == chi.value(cls).integer_value());
    }
  }
}

TEST_CASE("invariant pairing") {
  const auto one = RationalRep::trivial(5);
  CHECK(invariant_pairing(one, Matrix{{1}}) == Matrix{{1}});

  const auto model = RationalRep::coset_sign_model(7);
  const auto b = invariant_pairing(model, Matrix::identity(2));
  CHECK(b == Matrix::identity(2));
  // A skew seed averages to a block form: symmetric under the swap.
  const auto b2 = invariant_pairing(model, Matrix{{3, 1}, {1, 0}});
  CHECK(b2 == Matrix{{Rational(3, 2), 1}, {1, Rational(3, 2)}});

  std::mt19937_64 rng(5);
  const auto rho = RationalRep::rho2(7) + RationalRep::eta(7);
  for (int i = 0; i < 20; ++i) CHECK(invariant(rho, invariant_pairing(rho, random_seed(rng, rho.dimension()))));

  // The seed diag(1, -1) averages to zero on the coset model.
  CHECK_THROWS_AS(invariant_pairing(model, Matrix{{1, 0}, {0, -1}}), DegeneratePairingError);
}

TEST_CASE("regulator constants of the basic representations") {
  for (int p : {5, 7, 11, 13}) {
    INFO("p = " << p);
    const auto c1 = regulator_constant(RationalRep::trivial(p));
    CHECK(c1 == SquareClass(Rational(1, p)));
    CHECK(c1.ord_parity(p) == 1);
    const auto ceta = regulator_constant(RationalRep::eta(p));
    CHECK(ceta == SquareClass(p));
    const auto c11 = regulator_constant(RationalRep::trivial(p) + RationalRep::trivial(p));
    CHECK(c11.ord_parity(p) == 0);
    CHECK(c11 == SquareClass(1));
    CHECK(regulator_constant(RationalRep::coset_sign_model(p)) == c1 * ceta);
    CHECK(regulator_constant(RationalRep::rho2(p)).ord_parity(p) == 1);
  }
}

TEST_CASE("pairing independence over random seeds") {
  std::mt19937_64 rng(2026);
  for (int p : {5, 7}) {
    for (const auto& rep : {RationalRep::rho2(p), RationalRep::rho2(p) + RationalRep::trivial(p),
                            RationalRep::coset_sign_model(p) + RationalRep::eta(p)}) {
      const auto reference = regulator_constant(rep);
      for (int i = 0; i < 60; ++i) CHECK(regulator_constant(rep, invariant_pairing(rep, random_seed(rng, rep.dimension()))) == reference);
    }
  }
}

TEST_CASE("multiplicativity and the dimension identity") {
  for (int p : {5, 7, 11}) {
    const RationalRep basis[] = {RationalRep::trivial(p), RationalRep::eta(p), RationalRep::rho2(p),
                                 RationalRep::coset_sign_model(p)};
    for (const auto& a : basis) {
      CHECK(theta_dimension_sum(a) == 0);
      for (const auto& b : basis) {
        CHECK(regulator_constant(a + b) == regulator_constant(a) * regulator_constant(b));
        CHECK(theta_dimension_sum(a + b) == 0);
      }
    }
  }
}

TEST_CASE("T_Theta membership") {
  for (int p : {5, 7, 11, 13}) {
    INFO("p = " << p);
    const GroupSpec g{GroupSpec::Kind::Dihedral, p, 1};
    const auto one = trivial_character(g);
    const auto eta = eta_character(p, 1);
    for (int j = 1; j <= (p - 1) / 2; ++j) CHECK(t_theta_member(one + eta + dihedral_two_dim(p, 1, j), p));
    CHECK_FALSE(t_theta_member(one, p));
    CHECK_FALSE(t_theta_member(VirtualCharacter::zero(g), p));
    const auto report = t_theta_report(one, p);
    CHECK(report.ord_parities == std::array<int, 3>{1, 1, 1});
  }
  CHECK_THROWS_AS(t_theta_member(cyclic_character(5, 1, 1), 5), InvalidGroupError);
  CHECK_THROWS_AS(t_theta_member(trivial_character({GroupSpec::Kind::Dihedral, 3, 1}), 3), InvalidGroupError);
}
