#include <doctest.h>

#include "tlc/checks.hpp"
#include "tlc/monoid.hpp"

using namespace tlc;

namespace {

MonoidPtr trivial_monoid() { return std::make_shared<FiniteMonoid>(1, std::vector<int>{0}, 0); }

// Two-element group: 0 = identity, 1 = g with g*g = 1.
MonoidPtr z2() { return std::make_shared<FiniteMonoid>(2, std::vector<int>{0, 1, 1, 0}, 0); }

// 0 = identity, 1 = absorbing zero.
MonoidPtr u1() { return std::make_shared<FiniteMonoid>(2, std::vector<int>{0, 1, 1, 1}, 0); }

// Syntactic monoid of (ab)*: 0 = 1, 1 = a, 2 = b, 3 = ab, 4 = ba, 5 = zero.
MonoidPtr b21() {
  return std::make_shared<FiniteMonoid>(6,
                                        std::vector<int>{
                                            0, 1, 2, 3, 4, 5,  // 1
                                            1, 5, 3, 5, 1, 5,  // a
                                            2, 4, 5, 2, 5, 5,  // b
                                            3, 1, 5, 3, 5, 5,  // ab
                                            4, 5, 2, 5, 4, 5,  // ba
                                            5, 5, 5, 5, 5, 5,  // zero
                                        },
                                        0);
}

SubMonoid whole(const MonoidPtr& m) {
  std::vector<int> all(m->size());
  for (int i = 0; i < m->size(); ++i) {
    all[i] = i;
  }
  return SubMonoid::checked(m, all, m->identity());
}

}  // namespace

TEST_CASE("monoid construction validates the table") {
  CHECK(trivial_monoid()->size() == 1);

  // All eight associativity triples of Z2 hold, by brute force.
  const auto z = z2();
  for (int s = 0; s < 2; ++s) {
    for (int t = 0; t < 2; ++t) {
      for (int u = 0; u < 2; ++u) {
        CHECK(z->mul(z->mul(s, t), u) == z->mul(s, z->mul(t, u)));
      }
    }
  }

  CHECK_THROWS_AS(FiniteMonoid(2, {0, 1, 0, 0}, 0), IdentityError);
  CHECK_THROWS_AS(FiniteMonoid(3, {0, 1, 2, 1, 2, 1, 2, 1, 1}, 0), AssociativityError);
  CHECK_THROWS_AS(FiniteMonoid(2, {0, 3, 1, 0}, 0), InputError);
  CHECK_THROWS_AS(FiniteMonoid(2, {0, 1, 1}, 0), InputError);
}

TEST_CASE("multiplication") {
  CHECK(trivial_monoid()->mul(0, 0) == 0);
  CHECK(z2()->mul(1, 1) == 0);  // g*g = identity
  CHECK(u1()->mul(0, 1) == 1);  // identity * zero = zero
}

TEST_CASE("omega powers") {
  const auto u = u1();
  for (int e : {0, 1}) {
    CHECK(u->omega(e) == e);  // idempotents are fixpoints
  }
  CHECK(z2()->omega(1) == 0);  // g^2 = identity

  const auto b = b21();
  CHECK(b->omega(1) == 5);  // a^2 = zero
  CHECK(b->omega(3) == 3);  // ab is idempotent
  for (int s = 0; s < b->size(); ++s) {
    CHECK(b->omega(b->omega(s)) == b->omega(s));
    CHECK(b->is_idempotent(b->omega(s)));
  }
}

TEST_CASE("idempotents") {
  CHECK(trivial_monoid()->idempotents() == std::vector<int>{0});
  CHECK(z2()->idempotents() == std::vector<int>{0});
  CHECK(u1()->idempotents() == std::vector<int>{0, 1});
  CHECK(b21()->idempotents() == std::vector<int>{0, 3, 4, 5});
}

TEST_CASE("green relations") {
  SUBCASE("groups are equivalent everywhere") {
    const GreenData g = green(*z2());
    for (int s = 0; s < 2; ++s) {
      for (int t = 0; t < 2; ++t) {
        CHECK(g.equiv_j(s, t));
        CHECK(g.equiv_l(s, t));
        CHECK(g.equiv_r(s, t));
      }
    }
  }
  SUBCASE("the zero of U1 sits strictly below the identity") {
    const GreenData g = green(*u1());
    CHECK(g.strictly_below_j(1, 0));
    CHECK(g.leq_l(1, 0));
    CHECK(!g.leq_l(0, 1));
    CHECK(g.leq_r(1, 0));
    CHECK(!g.leq_r(0, 1));
  }
  SUBCASE("the generators of the (ab)* monoid") {
    const GreenData g = green(*b21());
    CHECK(g.equiv_r(3, 1));   // ab R a
    CHECK(g.equiv_l(3, 2));   // ab L b
    CHECK(g.equiv_j(3, 4));   // ab J ba
    CHECK(!g.equiv_l(3, 1));  // ab is not L-equivalent to a
    CHECK(!g.equiv_r(1, 2));
  }
}

TEST_CASE("j depth") {
  CHECK(j_depth(green(*trivial_monoid()), 0) == 0);
  CHECK(j_depth(green(*u1()), 0) == 0);
  CHECK(j_depth(green(*u1()), 1) == 1);
  const GreenData g = green(*b21());
  CHECK(j_depth(g, 0) == 0);
  CHECK(j_depth(g, 1) == 1);
  CHECK(j_depth(g, 5) == 2);  // zero <J a <J 1
}

TEST_CASE("generated submonoids") {
  CHECK(SubMonoid::generated(trivial_monoid(), {}, 0).elements() == std::vector<int>{0});
  CHECK(SubMonoid::generated(z2(), {1}, 0).elements() == std::vector<int>{0, 1});

  // Everything J-above ab generates the whole monoid (a*a = zero shows up
  // through closure).
  const auto b = b21();
  const GreenData g = green(*b);
  std::vector<int> above;
  for (int s = 0; s < b->size(); ++s) {
    if (g.leq_j(3, s)) {
      above.push_back(s);
    }
  }
  CHECK(above == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(SubMonoid::generated(b, above, 0).elements().size() == 6);
}

TEST_CASE("submonoid validation") {
  const auto b = b21();
  CHECK_THROWS_AS(SubMonoid::checked(b, {0, 1}, 0), ClosureError);  // a*a escapes
  CHECK_THROWS_AS(SubMonoid::checked(b, {1, 5}, 5), ClosureError);  // zero not neutral on a
  const SubMonoid corner = SubMonoid::checked(b, {3, 5}, 3);        // {ab, zero}
  CHECK(corner.contains(3));
  CHECK(!corner.contains(1));
}

TEST_CASE("equational checks") {
  const auto b = b21();
  const auto z = z2();

  SUBCASE("singleton passes everything") {
    const SubMonoid e = SubMonoid::checked(b, {3}, 3);
    CHECK(!check_da(e));
    CHECK(!check_l_trivial(e));
    CHECK(!check_r_trivial(e));
    CHECK(!check_j_trivial(e));
    CHECK(!check_aperiodic(e));
  }

  SUBCASE("the (ab)* monoid fails the DA equation at (a, b)") {
    const auto w = check_da(whole(b));
    REQUIRE(w.has_value());
    CHECK(w->s == 1);
    CHECK(w->t == 2);
    CHECK(w->lhs == 3);  // (ab)^w = ab
    CHECK(w->rhs == 5);  // ab b ab = zero
  }

  SUBCASE("groups fail everything; witnesses re-evaluate") {
    const SubMonoid zw = whole(z);
    for (auto* fn : {&check_da, &check_l_trivial, &check_r_trivial, &check_j_trivial}) {
      const auto w = (*fn)(zw);
      REQUIRE(w.has_value());
      CHECK(w->lhs != w->rhs);
    }
    const auto ap = check_aperiodic(zw);
    REQUIRE(ap.has_value());
    CHECK(ap->s == 1);  // g^(w+1) = g but g^w = identity
  }

  SUBCASE("U1 is J-trivial and in DA") {
    const SubMonoid uw = whole(u1());
    CHECK(!check_da(uw));
    CHECK(!check_l_trivial(uw));
    CHECK(!check_r_trivial(uw));
    CHECK(!check_j_trivial(uw));
    CHECK(!check_aperiodic(uw));
  }
}

TEST_CASE("random-monoid law suites") {
  CHECK(checks::monoid_law_suite(11, 6).ok());
  CHECK(checks::stability_suite(12, 12).ok());
}
