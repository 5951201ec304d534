#include <doctest.h>

#include <random>

#include "ringlab/notation.hpp"
#include "ringlab/perm.hpp"

using namespace ringlab;

namespace {

Perm cyc(const std::string& s, int n) { return parse_cycles(s, n); }

Perm random_perm(int n, std::mt19937& rng) {
  std::vector<std::uint8_t> img(n);
  for (int i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>(i);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm::from_images(std::move(img));
}

}  // namespace

TEST_CASE("identity basics") {
  Perm id5 = Perm::identity(5);
  CHECK(apply_to_row(id5, Row::rounds(5)) == Row::rounds(5));
  CHECK(order(Perm::identity(4)) == 1);
  CHECK(is_even(Perm::identity(6)));
  CHECK_THROWS_AS(Perm::identity(0), error);
}

TEST_CASE("composition is left-to-right") {
  // XY = (1 2)(3 4) * (2 3)(4 5) = (1 3 5 4 2)
  Perm x = cyc("(1 2)(3 4)", 5);
  Perm y = cyc("(2 3)(4 5)", 5);
  CHECK(format_cycles(x * y) == "(1 3 5 4 2)");
  // Y^-1 Z = (2 3)(4 5)(1 2) = (1 2 3)(4 5) on 5 bells
  Perm z = cyc("(1 2)", 5);
  CHECK(format_cycles(y.inverse() * z) == "(1 2 3)(4 5)");
  CHECK(x * Perm::identity(5) == x);
  Perm q = cyc("(1 2 3)", 4);
  CHECK_THROWS_AS((void)(x * q), error);
}

TEST_CASE("inverse") {
  CHECK(format_cycles(cyc("(2 4 3)", 4).inverse()) == "(2 3 4)");
  Perm inv = cyc("(1 2)(3 4)", 4);
  CHECK(inv.inverse() == inv);
  CHECK(format_cycles(cyc("(2 3 4 6 7)", 7).inverse()) == "(2 7 6 4 3)");
}

TEST_CASE("apply_to_row moves bells to new positions") {
  Row r = parse_row("5 4 3 2 1");
  CHECK(format_row(apply_to_row(cyc("(1 2)(3 4)", 5), r)) == "4 5 2 3 1");
  // ZX on 7 bells sends rounds to 1 2 5 3 7 4 6
  Perm zx = cyc("(3 4 6 7 5)", 7);
  CHECK(format_row(apply_to_row(zx, Row::rounds(7))) == "1 2 5 3 7 4 6");
}

TEST_CASE("order") {
  CHECK(order(cyc("(2 4 6 5 3)", 6)) == 5);
  CHECK(order(cyc("(1 2 3)(4 5)", 5)) == 6);
  CHECK(order(Perm::identity(7)) == 1);
}

TEST_CASE("parity") {
  CHECK_FALSE(is_even(cyc("(1 2)(3 4)(5 6)", 6)));
  CHECK(is_even(cyc("(2 4 7)(3 6 5)", 7)));
  CHECK(is_even(Perm::identity(3)));
}

TEST_CASE("is_transition") {
  CHECK(is_transition(cyc("(1 2)(3 4)", 5)));
  CHECK_FALSE(is_transition(cyc("(1 3)", 3)));
  CHECK_FALSE(is_transition(cyc("(2 4 3)", 4)));
  CHECK_FALSE(is_transition(Perm::identity(4)));  // a change must move a pair
}

TEST_CASE("common_fixed_point") {
  Perm x = cyc("(1 2)(3 4)", 5);
  Perm y = cyc("(2 3)(4 5)", 5);
  CHECK_FALSE(common_fixed_point(x, y));
  CHECK(common_fixed_point(cyc("(3 4)", 4), cyc("(3 4)", 4)));
  // Y and Z on 4 bells both fix position 1: this is why SJT breaks 4R
  CHECK(common_fixed_point(cyc("(2 3)", 4), cyc("(3 4)", 4)));
}

TEST_CASE("algebra properties on random triples") {
  std::mt19937 rng(20030617);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + trial % 7;
    Perm p = random_perm(n, rng), q = random_perm(n, rng),
         r = random_perm(n, rng);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p.inverse().inverse() == p);
    CHECK((p * p.inverse()).is_identity());
    CHECK(is_even(p * q) == (is_even(p) == is_even(q)));
    Row row = apply_to_row(r, Row::rounds(n));
    CHECK(apply_to_row(p * q, row) == apply_to_row(q, apply_to_row(p, row)));
  }
}

TEST_CASE("transitions square to the identity") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + trial % 8;
    Perm p = random_perm(n, rng);
    if (is_transition(p)) CHECK((p * p).is_identity());
  }
  // and deterministically for every stage's hunt generators
  for (int n = 3; n <= 9; ++n) {
    for (const char* s : {"(1 2)", "(2 3)"}) {
      Perm t = cyc(s, n);
      CHECK(is_transition(t));
      CHECK((t * t).is_identity());
    }
  }
}

TEST_CASE("row invariants") {
  CHECK_THROWS_AS(parse_row("1 1 2 3"), error);
  CHECK_THROWS_AS(parse_row("1 2 5"), error);
  CHECK(parse_row("21435") == parse_row("2 1 4 3 5"));
}
