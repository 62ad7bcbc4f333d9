#include <doctest.h>

#include "classring/catalog.hpp"
#include "classring/torus.hpp"

using namespace classring;

namespace {

TorusPoint half(int n, std::initializer_list<int> idx) {
  std::vector<Rat> q(static_cast<std::size_t>(n), Rat(0));
  for (int j : idx) q[static_cast<std::size_t>(j - 1)] = Rat(1, 2);
  return torus_point(std::move(q));
}

}  // namespace

TEST_CASE("phase evaluation") {
  // omega_2 on h_{alpha_2}(-1)
  CHECK(eval_phase(from_std({0, 1, 0}), half(3, {2})) == Rat(1, 2));
  CHECK(eval_phase(from_std({1, 0, 0}), half(3, {2})) == Rat(0));
  // omega_1 in E_7 kills the center
  TorusPoint z = half(7, {2, 5, 7});
  CHECK(eval_phase(from_std({1, 0, 0, 0, 0, 0, 0}), z) == Rat(0));
  CHECK(eval_phase(from_std({0, 1, 0, 0, 0, 0, 0}), z) == Rat(1, 2));
  // order-4 point in D_4
  TorusPoint t = coroot_multiple(4, 3, Rat(1, 4));
  CHECK(eval_phase(from_std({0, 0, 1, 0}), t) == Rat(1, 4));
  CHECK(t.order() == 4);
}

TEST_CASE("phase additivity") {
  TorusPoint t = torus_point({Rat(1, 2), Rat(1, 4), Rat(2, 3)});
  Weight a = from_std({1, 2, 3}), b = from_std({0, 5, 1});
  Rat sum = eval_phase(a, t) + eval_phase(b, t);
  Rat whole = eval_phase(a + b, t);
  BigInt num = numerator(sum - whole), den = denominator(sum - whole);
  CHECK(den == 1);
  CHECK(num % 1 == 0);
  CHECK(eval_phase(a + b, t) == eval_phase(Weight(a + b), t));
}

TEST_CASE("trivial_on") {
  FiniteTorusSubgroup empty;
  CHECK(trivial_on(from_std({3, 1}), empty));
  FiniteTorusSubgroup z7{{half(7, {2, 5, 7})}};
  CHECK(!trivial_on(from_std({0, 1, 0, 0, 0, 0, 0}), z7));
  FiniteTorusSubgroup c1{{half(4, {1})}};
  CHECK(trivial_on(from_std({2, 0, 0, 0}), c1));
}

TEST_CASE("centers have the right order and kill the roots") {
  auto order_of = [](CartanType t) {
    const RootSystem& rs = root_system(t);
    return subgroup_order(center(rs), t.rank);
  };
  for (int n = 1; n <= 8; ++n) CHECK(order_of({'A', n}) == n + 1);
  for (int n = 2; n <= 8; ++n) CHECK(order_of({'B', n}) == 2);
  for (int n = 2; n <= 8; ++n) CHECK(order_of({'C', n}) == 2);
  for (int n = 4; n <= 8; ++n) CHECK(order_of({'D', n}) == 4);
  CHECK(order_of({'E', 6}) == 3);
  CHECK(order_of({'E', 7}) == 2);
  CHECK(order_of({'E', 8}) == 1);
  CHECK(order_of({'F', 4}) == 1);
  CHECK(order_of({'G', 2}) == 1);

  std::vector<CartanType> types = {{'A', 5}, {'B', 4}, {'C', 5}, {'D', 4},
                                   {'D', 7}, {'E', 6}, {'E', 7}};
  for (CartanType t : types) {
    const RootSystem& rs = root_system(t);
    for (const TorusPoint& g : center(rs).generators)
      for (const Root& beta : rs.positive_roots())
        CHECK(eval_phase(rs.root_to_weight(beta), g) == Rat(0));
  }
}

TEST_CASE("D_n even center is (Z/2)^2") {
  const RootSystem& d6 = root_system({'D', 6});
  auto z = center(d6);
  CHECK(z.generators.size() == 2);
  for (const TorusPoint& g : z.generators) CHECK(g.order() == 2);
  CHECK(subgroup_order(z, 6) == 4);
  const RootSystem& d5 = root_system({'D', 5});
  auto z5 = center(d5);
  REQUIRE(z5.generators.size() == 1);
  CHECK(z5.generators.front().order() == 4);
}

TEST_CASE("fundamental coweights pair correctly with the simple roots") {
  for (CartanType t : {CartanType{'A', 4}, CartanType{'G', 2}, CartanType{'F', 4}}) {
    const RootSystem& rs = root_system(t);
    for (int i = 1; i <= t.rank; ++i) {
      std::vector<Rat> q = fundamental_coweight(rs, i);
      for (int j = 1; j <= t.rank; ++j) {
        Rat pairing(0);
        Weight aj = rs.root_to_weight(rs.simple_root(j));
        for (int k = 0; k < t.rank; ++k) pairing += Rat(aj[k]) * q[static_cast<std::size_t>(k)];
        CHECK(pairing == (i == j ? Rat(1) : Rat(0)));
      }
    }
  }
}

TEST_CASE("component group of T^w") {
  const RootSystem& a1 = root_system({'A', 1});
  CHECK(component_group_of_Tw(a1, a1.longest_element()) == std::vector<Int>{2});
  CHECK(fixed_torus_rank(a1, a1.longest_element()) == 0);

  const RootSystem& a2 = root_system({'A', 2});
  CHECK(component_group_of_Tw(a2, a2.reflection_for_root(a2.simple_root(1))).empty());

  // Lemma toni1c: C_3, w = s_{beta_1} s_{beta_2} gives two order-2 factors.
  const ClassDescriptor& x2 = lookup({'C', 3}, "X_2");
  CHECK(component_group_of_Tw(root_system({'C', 3}), x2.w) == std::vector<Int>({2, 2}));

  // Lemma toni3bd: B_5, Z_2 gives 2l - 1 = 3 factors.
  const ClassDescriptor& z2 = lookup({'B', 5}, "Z_2");
  CHECK(component_group_of_Tw(root_system({'B', 5}), z2.w) == std::vector<Int>({2, 2, 2}));

  // Lemma toni1bd: B_5, X_2 has connected T^w.
  const ClassDescriptor& bx2 = lookup({'B', 5}, "X_2");
  CHECK(component_group_of_Tw(root_system({'B', 5}), bx2.w).empty());

  const RootSystem& c2 = root_system({'C', 2});
  WeylElement s1 = c2.simple_reflection(1);
  CHECK_THROWS_AS(component_group_of_Tw(c2, s1 * c2.simple_reflection(2)), DomainError);
}

TEST_CASE("rank of fixed torus plus rank of image is n") {
  for (CartanType t : {CartanType{'B', 4}, CartanType{'D', 5}, CartanType{'E', 6}}) {
    const RootSystem& rs = root_system(t);
    for (const ClassDescriptor& c : instantiate(t)) {
      MatI one_minus = MatI::Identity(t.rank, t.rank) - c.w.m;
      CHECK(fixed_torus_rank(rs, c.w) + intlat::rank(one_minus) == t.rank);
    }
  }
}

TEST_CASE("subgroup closure") {
  FiniteTorusSubgroup s{{half(3, {1}), half(3, {2})}};
  CHECK(subgroup_order(s, 3) == 4);
  CHECK(subgroup_contains(s, half(3, {1, 2}), 3));
  CHECK(!subgroup_contains(s, half(3, {3}), 3));
  FiniteTorusSubgroup sub{{half(3, {1, 2})}};
  CHECK(subgroup_leq(sub, s, 3));
  CHECK(!subgroup_leq(s, sub, 3));
}
