#include "printers.hpp"

#include "oigb/error.hpp"
#include "oigb/parse.hpp"
#include "oigb/polynomial.hpp"
#include "test_support.hpp"

using namespace oigb;

namespace {

Polynomial poly(const std::string& s, Width n) { return parse_polynomial(s, testing::P2, n); }
PolyMonomial mono(const std::string& s, Width n) { return poly(s, n).lead_term().mono; }

}  // namespace

TEST_CASE("apply_morphism substitutes columns") {
  const auto p = poly("x(1,1)*x(2,2) + 3*x(1,2)", 2);
  CHECK(apply_morphism(OIMorphism::identity(2), p) == p);
  CHECK(apply_morphism(OIMorphism(3, {1, 3}), poly("x(1,1)*x(2,2)", 2)) == poly("x(1,1)*x(2,3)", 3));
  CHECK(apply_morphism(OIMorphism(2, {2}), poly("x(1,1) + x(2,1)", 1)) == poly("x(1,2) + x(2,2)", 2));
  CHECK_THROWS_AS(apply_morphism(OIMorphism(3, {1, 2}), poly("x(1,1)", 1)), WidthMismatch);
}

TEST_CASE("ring operations") {
  const auto p = poly("x(1,1) - 2*x(2,1)*x(1,2) + 1/3", 2);
  CHECK((p + (-p)).is_zero());
  CHECK(poly("x(1,1)", 1) * poly("x(2,1)", 1) == poly("x(2,1)*x(1,1)", 1));
  CHECK(Rational(1, 2) * poly("2*x(1,1)", 1) == poly("x(1,1)", 1));
  CHECK_THROWS_AS(poly("x(1,1)", 1) + poly("x(1,1)", 2), WidthMismatch);
  CHECK(to_string(poly("x(1,1)^2*x(1,2) - 1/2*x(2,1)", 2)) == "-1/2*x(2,1) + x(1,2)*x(1,1)^2");
  CHECK(to_string(Polynomial(3)) == "0");
}

TEST_CASE("variables are ordered row first, then column") {
  CHECK(compare(mono("x(2,1)", 3), mono("x(1,3)", 3)) == std::strong_ordering::greater);
  CHECK(compare(mono("x(1,3)", 3), mono("x(1,2)", 3)) == std::strong_ordering::greater);
  // lex: the larger variable wins regardless of degree
  CHECK(compare(mono("x(1,2)", 2), mono("x(1,1)^5", 2)) == std::strong_ordering::greater);
  CHECK(compare(mono("x(1,2)*x(1,1)", 2), mono("x(1,2)", 2)) == std::strong_ordering::greater);
}

TEST_CASE("monomial divisibility") {
  CHECK(mono_divides(mono("x(1,1)", 2), mono("x(1,1)*x(2,2)", 2)));
  CHECK_FALSE(mono_divides(mono("x(1,1)^2", 2), mono("x(1,1)*x(2,2)", 2)));
  CHECK(mono_lcm(mono("x(1,1)", 1), mono("x(2,1)", 1)) == mono("x(1,1)*x(2,1)", 1));
  CHECK(mono_quotient(mono("x(1,2)*x(1,1)", 2), mono("x(1,1)", 2)) == mono("x(1,2)", 2));
  CHECK_THROWS_AS(mono_quotient(mono("x(1,2)", 2), mono("x(1,1)", 2)), InvalidArgument);
}

TEST_CASE("degree and homogeneity") {
  CHECK(degree(poly("x(1,2)*x(1,1)", 2)) == 2);
  CHECK(is_homogeneous(poly("x(1,1) + x(2,1)", 1)));
  CHECK_FALSE(is_homogeneous(poly("x(1,1) + 1", 1)));
  CHECK_FALSE(degree(Polynomial(1)).has_value());
}

TEST_CASE("morphism action is a functorial ring homomorphism") {
  testing::Random rnd(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = rnd.uniform(0, 3), n = m + rnd.uniform(0, 2), k = n + rnd.uniform(0, 2);
    const auto p = rnd.polynomial(2, m, rnd.uniform(0, 4), 3);
    const auto q = rnd.polynomial(2, m, rnd.uniform(0, 4), 3);
    const auto eps = rnd.morphism(m, n), delta = rnd.morphism(n, k);
    CHECK(apply_morphism(eps, p * q) == apply_morphism(eps, p) * apply_morphism(eps, q));
    CHECK(apply_morphism(eps, p + q) == apply_morphism(eps, p) + apply_morphism(eps, q));
    CHECK(apply_morphism(compose(eps, delta), p) == apply_morphism(delta, apply_morphism(eps, p)));
    CHECK(apply_morphism(eps, p).terms().size() == p.terms().size());
    if (degree(p) && degree(q)) CHECK(degree(p * q) == *degree(p) + *degree(q));
    // printing is a fixed point of parsing
    CHECK(parse_polynomial(to_string(p), testing::P2, m) == p);
  }
}
