#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hsas/algebra.hpp"

using namespace hsas;

namespace {

ScheffersElement random_element(int dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  ScheffersElement a(dim);
  for (double& c : a.coeffs) c = uni(rng);
  return a;
}

}  // namespace

TEST_CASE("S_2 multiplication table") {
  // Full 4x4 table; rows e1, e2, e3 hold the 12 nontrivial entries.
  const int sign[4][4] = {{+1, +1, +1, +1},
                          {+1, -1, +1, -1},
                          {+1, +1, -1, -1},
                          {+1, -1, -1, +1}};
  const unsigned mask[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  for (unsigned a = 0; a < 4; ++a) {
    for (unsigned b = 0; b < 4; ++b) {
      const ScheffersElement p = sch_mul(ScheffersElement::blade(2, a), ScheffersElement::blade(2, b));
      for (unsigned c = 0; c < 4; ++c)
        CHECK(p.coeffs[c] == (c == mask[a][b] ? sign[a][b] : 0.0));
    }
  }
}

TEST_CASE("zero divisor pair annihilates") {
  // (e1 - e2)(e1 + e2) = 0
  const ScheffersElement a = ScheffersElement::blade(2, 1) - ScheffersElement::blade(2, 2);
  const ScheffersElement b = ScheffersElement::blade(2, 1) + ScheffersElement::blade(2, 2);
  CHECK(sch_norm(sch_mul(a, b)) == 0.0);
}

TEST_CASE("norm") {
  CHECK(sch_norm(ScheffersElement(2)) == 0.0);
  const ScheffersElement two_units = ScheffersElement::blade(2, 1) + ScheffersElement::blade(2, 2);
  CHECK(sch_norm(two_units) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  const ScheffersElement pyth = ScheffersElement::blade(2, 0, 3.0) + ScheffersElement::blade(2, 3, 4.0);
  CHECK(sch_norm(pyth) == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("inverse") {
  SUBCASE("pure generator") {
    const ScheffersElement inv = sch_inverse(ScheffersElement::blade(2, 1));
    CHECK(inv.coeffs[1] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(std::abs(inv.coeffs[0]) < 1e-14);
  }
  SUBCASE("plane element behaves like a complex inverse") {
    const ScheffersElement a = ScheffersElement::unit(2) + ScheffersElement::blade(2, 1);
    const ScheffersElement inv = sch_inverse(a);
    CHECK(inv.coeffs[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(inv.coeffs[1] == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(std::abs(inv.coeffs[2]) < 1e-14);
    CHECK(std::abs(inv.coeffs[3]) < 1e-14);
  }
  SUBCASE("zero divisor is rejected") {
    const ScheffersElement zd = ScheffersElement::blade(2, 1) + ScheffersElement::blade(2, 2);
    CHECK_THROWS_WITH_AS(sch_inverse(zd), doctest::Contains("singular"), Error);
  }
  SUBCASE("round trip on random invertible elements") {
    std::mt19937_64 rng(7);
    for (int d = 1; d <= 4; ++d) {
      for (int trial = 0; trial < 20; ++trial) {
        // Shift by a large unit component to stay away from the zero-divisor set.
        ScheffersElement a = random_element(d, rng);
        a.coeffs[0] += 3.0;
        const ScheffersElement err = sch_mul(a, sch_inverse(a)) - ScheffersElement::unit(d);
        CHECK(sch_norm(err) <= 1e-10);
      }
    }
  }
}

TEST_CASE("axis conjugation") {
  const ScheffersElement a = ScheffersElement::unit(2) + ScheffersElement::blade(2, 1);
  const ScheffersElement c = conj_axis(a, 1);
  CHECK(c.coeffs[0] == 1.0);
  CHECK(c.coeffs[1] == -1.0);

  // blade {1,2} contains generator 1; blade {2} does not
  CHECK(conj_axis(ScheffersElement::blade(2, 3), 1).coeffs[3] == -1.0);
  CHECK(conj_axis(ScheffersElement::blade(2, 2), 1).coeffs[2] == 1.0);

  std::mt19937_64 rng(11);
  const ScheffersElement r = random_element(3, rng);
  CHECK(sch_norm(conj_axis(conj_axis(r, 2), 2) - r) == 0.0);

  // multiplicative on the plane S(i)
  std::uniform_real_distribution<double> uni(-2.0, 2.0);
  for (int trial = 0; trial < 16; ++trial) {
    const ScheffersElement p =
        ScheffersElement::blade(3, 0, uni(rng)) + ScheffersElement::blade(3, 2, uni(rng));
    const ScheffersElement q =
        ScheffersElement::blade(3, 0, uni(rng)) + ScheffersElement::blade(3, 2, uni(rng));
    CHECK(sch_norm(conj_axis(sch_mul(p, q), 2) - sch_mul(conj_axis(p, 2), conj_axis(q, 2))) <=
          1e-14);
  }

  CHECK_THROWS_AS(conj_axis(r, 4), Error);
}

TEST_CASE("blade-basis distributivity is exact") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> uni(-5.0, 5.0);
  for (int d = 1; d <= 4; ++d) {
    for (std::uint32_t blade = 0; blade < (1u << d); ++blade) {
      const ScheffersElement a = ScheffersElement::blade(d, blade);
      ScheffersElement b(d), c(d);
      for (std::size_t i = 0; i < b.size(); ++i) {
        b.coeffs[i] = uni(rng);
        c.coeffs[i] = uni(rng);
      }
      const ScheffersElement lhs = sch_mul(a, b + c);
      const ScheffersElement rhs = sch_mul(a, b) + sch_mul(a, c);
      for (std::size_t i = 0; i < lhs.size(); ++i) CHECK(lhs.coeffs[i] == rhs.coeffs[i]);
    }
  }
}

TEST_CASE("unit exponential") {
  const double pi = std::numbers::pi;
  CHECK(sch_norm(unit_exp(2, 1, 0.0) - ScheffersElement::unit(2)) == 0.0);
  CHECK(unit_exp(2, 1, pi / 2).coeffs[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(unit_exp(2, 2, pi).coeffs[0] == doctest::Approx(-1.0).epsilon(1e-15));

  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> uni(-3.0, 3.0);
  for (int trial = 0; trial < 32; ++trial) {
    const double a = uni(rng), b = uni(rng);
    const ScheffersElement prod = sch_mul(unit_exp(3, 2, a), unit_exp(3, 2, b));
    CHECK(sch_norm(prod - unit_exp(3, 2, a + b)) <= 1e-14);
    CHECK(sch_norm(unit_exp(3, 2, a)) == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("shift sign") {
  CHECK(shift_sign(Direction::from_string("11000"), Direction::from_string("10110")) == +1);
  CHECK(shift_sign(Direction::from_string("0"), Direction::from_string("1")) == -1);
  CHECK(shift_sign(Direction::from_string("1"), Direction::from_string("1")) == +1);
  CHECK(shift_sign(Direction::zero(3), Direction::zero(3)) == +1);
  CHECK_THROWS_AS(shift_sign(Direction::zero(2), Direction::zero(3)), Error);
}

TEST_CASE("direction bit conventions") {
  const Direction j = Direction::from_string("10110");
  CHECK(j.dim == 5);
  CHECK(j.weight() == 3);
  CHECK(j.axis(1));
  CHECK(!j.axis(2));
  CHECK(j.axis(3));
  CHECK(j.to_string() == "10110");
  const Direction z = Direction::zero(5);
  CHECK((j ^ z) == j);
  CHECK((j ^ j) == z);
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 rng(5);
  for (int d = 1; d <= 5; ++d) {
    for (int trial = 0; trial < 40; ++trial) {
      const ScheffersElement a = random_element(d, rng);
      const ScheffersElement b = random_element(d, rng);
      const ScheffersElement c = random_element(d, rng);
      const double scale =
          std::max(1.0, sch_norm(a) * sch_norm(b) * std::max(1.0, sch_norm(c)));
      CHECK(sch_norm(sch_mul(a, b) - sch_mul(b, a)) / scale <= 1e-12);
      CHECK(sch_norm(sch_mul(sch_mul(a, b), c) - sch_mul(a, sch_mul(b, c))) / scale <= 1e-12);
      CHECK(sch_norm(sch_mul(a, b + c) - (sch_mul(a, b) + sch_mul(a, c))) / scale <= 1e-12);
    }
    for (int axis = 1; axis <= d; ++axis) {
      const ScheffersElement sq = sch_mul(ScheffersElement::blade(d, 1u << (axis - 1)),
                                          ScheffersElement::blade(d, 1u << (axis - 1)));
      CHECK(sq.coeffs[0] == -1.0);
      CHECK(sch_norm(sq + ScheffersElement::unit(d)) == 0.0);
    }
  }
}

TEST_CASE("blade products stay exact and unit-normed") {
  std::mt19937_64 rng(17);
  for (int d = 1; d <= 5; ++d) {
    const std::uint32_t n = 1u << d;
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) {
        const ScheffersElement p = sch_mul(ScheffersElement::blade(d, a), ScheffersElement::blade(d, b));
        CHECK(sch_norm(p) == 1.0);
        CHECK(std::abs(p.coeffs[a ^ b]) == 1.0);
      }
  }
  (void)rng;
}

TEST_CASE("dimension mismatch is rejected") {
  CHECK_THROWS_AS(sch_mul(ScheffersElement(2), ScheffersElement(3)), Error);
}
