#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "chevkit/finitefield.hpp"

using namespace chevkit;

TEST_CASE("extension degree for roots of unity") {
  CHECK(Field::min_extension_degree(17, 16) == 1);
  CHECK(Field::min_extension_degree(3, 16) == 4);
  CHECK(Field::min_extension_degree(7, 8) == 2);
  CHECK(Field::min_extension_degree(5, 16) == 4);
  CHECK(Field::min_extension_degree(7, 16) == 2);
  CHECK(Field::min_extension_degree(3, 1) == 1);
  CHECK_THROWS_AS(Field::min_extension_degree(3, 9), std::invalid_argument);
  CHECK_THROWS_AS(Field::min_extension_degree(5, 10), std::invalid_argument);
}

TEST_CASE("field construction") {
  CHECK_THROWS_AS(Field(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field(9, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field(7, 0), std::invalid_argument);
  const Field f81(3, 4);
  CHECK(f81.order() == 81);
  CHECK(f81.params().modulus_poly.size() == 5);
  CHECK(f81.params().modulus_poly.back() == 1);
  const Field f17(17, 1);
  CHECK(f17.order() == 17);
}

TEST_CASE("construction is reproducible") {
  const Field a(3, 4), b(3, 4);
  CHECK(a.params() == b.params());
  CHECK(a.primitive_root_of_unity(16) == b.primitive_root_of_unity(16));
  const Field c(7, 2), d(7, 2);
  CHECK(c.params() == d.params());
  CHECK(c.primitive_root_of_unity(16) == d.primitive_root_of_unity(16));
}

TEST_CASE("roots of unity") {
  const Field f(17, 1);
  const FieldElem z8 = f.primitive_root_of_unity(8);
  CHECK(f.element_order(z8) == 8);
  CHECK(f.element_order(f.mul(z8, z8)) == 4);
  CHECK(f.pow(z8, 4) == f.neg(f.one()));  // unique element of order 2
  CHECK(f.pow(z8, 8) == f.one());
  CHECK_THROWS_AS(f.primitive_root_of_unity(5), std::invalid_argument);

  const Field g(3, 4);
  const FieldElem z16 = g.primitive_root_of_unity(16);
  CHECK(g.element_order(z16) == 16);
  CHECK(g.pow(z16, 8) == g.neg(g.one()));

  // n even: z_n^{n/2} = -1
  for (long long n : {2LL, 4LL, 8LL, 16LL}) {
    const FieldElem zn = g.primitive_root_of_unity(n);
    CHECK(g.pow(zn, n / 2) == g.neg(g.one()));
  }
  CHECK(g.primitive_root_of_unity(1) == g.one());
}

TEST_CASE("field axioms on random samples") {
  for (auto [p, k] : {std::pair<long long, int>{17, 1}, {7, 2}, {3, 4}}) {
    const Field f(p, k);
    std::mt19937_64 rng(99);
    for (int t = 0; t < 300; ++t) {
      const FieldElem a = f.element_from_counter(rng() % f.order());
      const FieldElem b = f.element_from_counter(rng() % f.order());
      const FieldElem c = f.element_from_counter(rng() % f.order());
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.add(a, f.neg(a)) == f.zero());
      if (!f.is_zero(a)) {
        CHECK(f.mul(a, f.inv(a)) == f.one());
        CHECK(f.pow(a, static_cast<long long>(f.order() - 1)) == f.one());
      }
      // Frobenius is additive in characteristic p
      CHECK(f.pow(f.add(a, b), p) == f.add(f.pow(a, p), f.pow(b, p)));
    }
  }
}

TEST_CASE("inverse of zero") {
  const Field f(17, 1);
  CHECK_THROWS_AS(f.inv(f.zero()), std::domain_error);
}

TEST_CASE("negative powers") {
  const Field f(7, 2);
  const FieldElem z = f.primitive_root_of_unity(16);
  CHECK(f.mul(f.pow(z, -3), f.pow(z, 3)) == f.one());
  CHECK(f.pow(z, -1) == f.inv(z));
}
