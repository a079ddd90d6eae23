#include "doctest.h"

#include "levelalg/form.hpp"

using namespace levelalg;

namespace {

Form mono(int r, const Exponent& e, const Rat& c = 1) {
  int d = 0;
  for (int v : e) d += v;
  Form f(r, d);
  f.add_term(e, c);
  return f;
}

} // namespace

TEST_CASE("differentiate") {
  // d/dy1 (y1^2 y2) = 2 y1 y2
  Form f = mono(3, {2, 1, 0});
  Form df = differentiate(f, 1);
  CHECK(df == mono(3, {1, 1, 0}, 2));

  // d/dy1 (y3^4) = 0
  CHECK(differentiate(mono(3, {0, 0, 4}), 1).is_zero());

  // d/dy3 (y1 y3^3) = 3 y1 y3^2
  CHECK(differentiate(mono(3, {1, 0, 3}), 3) == mono(3, {1, 0, 2}, 3));

  // degree-0 derivative is the zero form
  CHECK(differentiate(mono(2, {0, 0}), 1).is_zero());
}

TEST_CASE("iterated derivative matches repeated single derivatives") {
  Form f = mono(3, {2, 1, 1}) + mono(3, {0, 3, 1}).scaled(Rat(Int(1), Int(2)));
  Form expect = differentiate(differentiate(differentiate(f, 1), 2), 2);
  CHECK(differentiate_multi(f, {1, 2, 0}) == expect);
}

TEST_CASE("linear_power expands by the multinomial theorem") {
  // (y1 + 2 y2)^2 = y1^2 + 4 y1 y2 + 4 y2^2
  Form p = linear_power({Rat(1), Rat(2)}, 2);
  Form expect = mono(2, {2, 0}) + mono(2, {1, 1}, 4) + mono(2, {0, 2}, 4);
  CHECK(p == expect);
}

TEST_CASE("grammar round trip") {
  Form f = parse_form("3/2*y1^2*y2 - y3^3", 3);
  CHECK(f.degree() == 3);
  CHECK(f.num_vars() == 3);
  Form g = parse_form(f.to_string(), 3);
  CHECK(f == g);

  // whitespace insignificant, implicit exponent 1, repeated variables multiply
  CHECK(parse_form("y1 * y1", 2) == mono(2, {2, 0}));
  CHECK(parse_form("  -y2^2+ 2*y1*y2 ", 2) == mono(2, {0, 2}, -1) + mono(2, {1, 1}, 2));

  CHECK_THROWS_AS(parse_form("y1 + y2^2", 2), std::invalid_argument); // inhomogeneous
  CHECK_THROWS_AS(parse_form("x1*y1", 2), std::invalid_argument);     // mixed letters
  CHECK_THROWS_AS(parse_form("1/0*y1", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_form("", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_form("y1 y2", 2), std::invalid_argument);
}

TEST_CASE("module files: comments, blank lines, shared variable window") {
  auto gens = parse_form_lines("# witness\ny1*y3^3\n\ny2*y3^3  # second generator\n");
  REQUIRE(gens.size() == 2);
  CHECK(gens[0].num_vars() == 3);
  CHECK(gens[1].num_vars() == 3);
  CHECK(gens[0] == mono(3, {1, 0, 3}));
}

TEST_CASE("parse/print round trip across random forms") {
  // includes negative and fractional coefficients
  Form f = mono(4, {1, 0, 0, 4}, Rat(Int(-7), Int(3))) + mono(4, {0, 5, 0, 0}) +
           mono(4, {2, 1, 1, 1}, Rat(Int(9), Int(16)));
  CHECK(parse_form(f.to_string(), 4) == f);
}

TEST_CASE("coefficients beyond 64 bits survive the grammar") {
  Rat huge(Int("123456789012345678901234567890123"), Int("987654321098765432109"));
  Form f = mono(2, {3, 1}, huge) + mono(2, {0, 4}, Rat(Int("-9999999999999999999999"), Int(1)));
  CHECK(parse_form(f.to_string(), 2) == f);
}
