#include <random>

#include "doctest.h"
#include "dparity/errors.hpp"
#include "dparity/weierstrass.hpp"

using namespace dparity;

namespace {

Integer random_integer(std::mt19937_64& rng, int bits) {
  std::uniform_int_distribution<std::uint64_t> d;
  Integer x = 0;
  for (int b = 0; b < bits; b += 32) x = (x << 32) + Integer(static_cast<unsigned long>(d(rng) & 0xffffffffu));
  x >>= (bits % 32 == 0 ? 0 : 32 - bits % 32);
  return (d(rng) & 1) ? Integer(-x) : x;
}

Coefficients random_coefficients(std::mt19937_64& rng, int bits) {
  return {random_integer(rng, bits), random_integer(rng, bits), random_integer(rng, bits), random_integer(rng, bits),
          random_integer(rng, bits)};
}

}  // namespace

TEST_CASE("invariants of y^2 = x^3 - x") {
  const WeierstrassCurve e(0, 0, 0, -1, 0);
  const auto& iv = e.invariants();
  CHECK(iv.b2 == 0);
  CHECK(iv.b4 == -2);
  CHECK(iv.b6 == 0);
  CHECK(iv.b8 == -1);
  CHECK(iv.c4 == 48);
  CHECK(iv.c6 == 0);
  CHECK(iv.discriminant == 64);
  CHECK(iv.j == 1728);
}

TEST_CASE("invariants of y^2 = x^3 + 1") {
  const WeierstrassCurve e(0, 0, 0, 0, 1);
  const auto& iv = e.invariants();
  CHECK(iv.b2 == 0);
  CHECK(iv.b4 == 0);
  CHECK(iv.b6 == 4);
  CHECK(iv.discriminant == -432);
  CHECK(iv.j == 0);
}

TEST_CASE("11a1 discriminant and j") {
  const WeierstrassCurve e(0, -1, 1, -10, -20);
  CHECK(e.discriminant() == -161051);  // -11^5
  CHECK(e.j_invariant() == Rational(-122023936, 161051));
}

TEST_CASE("singular model is rejected") {
  CHECK_THROWS_AS(WeierstrassCurve(0, 0, 0, 0, 0), SingularCurveError);
  CHECK_THROWS_AS(WeierstrassCurve(0, 0, 0, -3, 2), SingularCurveError);  // node at x = 1
}

TEST_CASE("1728 disc = c4^3 - c6^2 on random coefficient vectors") {
  std::mt19937_64 rng(20261017);
  for (int i = 0; i < 2000; ++i) {
    const auto iv = compute_invariants(random_coefficients(rng, 8 + i % 120));
    CHECK(1728 * iv.discriminant == iv.c4 * iv.c4 * iv.c4 - iv.c6 * iv.c6);
  }
}

TEST_CASE("transform laws") {
  const WeierstrassCurve e(1, -1, 1, -3, 7);

  SUBCASE("identity") { CHECK(transform(e, Transform{}) == e); }

  SUBCASE("u = 0 is invalid") { CHECK_THROWS_AS(transform(e, Transform{0, 0, 0, 0}), InvalidTransformError); }

  SUBCASE("u scaling") {
    // u = 1/2 scales a_i by 2^i, then u = 2 brings it back.
    const WeierstrassCurve big = transform(e, Transform{Rational(1, 2), 0, 0, 0});
    CHECK(big.a1() == 2);
    CHECK(big.a6() == 7 * 64);
    CHECK(big.discriminant() == e.discriminant() * 4096);
    const WeierstrassCurve back = transform(big, Transform{2, 0, 0, 0});
    CHECK(back == e);
    CHECK(back.discriminant() == big.discriminant() / 4096);
    CHECK(big.invariants().c4 == e.invariants().c4 * 16);
  }

  SUBCASE("non-integral image") { CHECK_THROWS_AS(transform(e, Transform{2, 0, 0, 0}), NonIntegralModelError); }

  SUBCASE("j is invariant under integral changes") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-50, 50);
    for (int i = 0; i < 200; ++i) {
      const Transform tr{d(rng) % 2 == 0 ? Rational(1) : Rational(-1), d(rng), d(rng), d(rng)};
      const auto image = transform(e, tr);
      CHECK(image.j_invariant() == e.j_invariant());
      CHECK(image.discriminant() == e.discriminant());
    }
  }
}

TEST_CASE("transform composition") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-9, 9);
  auto random_rational = [&] { return Rational(d(rng), 1 + std::abs(d(rng))); };
  auto random_transform = [&] {
    Transform tr{random_rational(), random_rational(), random_rational(), random_rational()};
    if (tr.u == 0) tr.u = Rational(3, 2);
    return tr;
  };
  for (int i = 0; i < 300; ++i) {
    const auto a = random_coefficients(rng, 20);
    const Transform t1 = random_transform(), t2 = random_transform();
    const auto stepwise = transform_coefficients(transform_coefficients(a, t1), t2);
    const auto direct = transform_coefficients(a, t1.then(t2));
    CHECK(stepwise == direct);
  }
}

TEST_CASE("discriminant as a polynomial in a6") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 1000; ++i) {
    auto a = random_coefficients(rng, 10 + i % 60);
    const auto x = discriminant_in_a6(a);
    const Integer disc = compute_invariants(a).discriminant;
    CHECK(disc == x.alpha + x.beta * a[4] + A6Expansion::kQuadratic * a[4] * a[4]);
    const Integer c = random_integer(rng, 30);
    auto shifted = a;
    shifted[4] += c;
    CHECK(compute_invariants(shifted).discriminant - disc == x.shift(a[4], c));
  }
  // alpha and beta do not see a6.
  Coefficients a{1, 2, 3, 4, 5}, b{1, 2, 3, 4, -77};
  CHECK(discriminant_in_a6(a).alpha == discriminant_in_a6(b).alpha);
  CHECK(discriminant_in_a6(a).beta == discriminant_in_a6(b).beta);
}
