#include <doctest.h>

#include <numeric>

#include "classring/rootsys.hpp"

using namespace classring;

namespace {

Int expected_positive_count(CartanType t) {
  const Int n = t.rank;
  switch (t.letter) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return t.rank == 6 ? 36 : t.rank == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  return -1;
}

std::vector<CartanType> all_types() {
  std::vector<CartanType> out;
  for (int n = 1; n <= 8; ++n) out.push_back({'A', n});
  for (int n = 2; n <= 8; ++n) out.push_back({'B', n});
  for (int n = 2; n <= 8; ++n) out.push_back({'C', n});
  for (int n = 4; n <= 8; ++n) out.push_back({'D', n});
  out.push_back({'E', 6});
  out.push_back({'E', 7});
  out.push_back({'E', 8});
  out.push_back({'F', 4});
  out.push_back({'G', 2});
  return out;
}

}  // namespace

TEST_CASE("type parsing and admissibility") {
  CHECK(CartanType::parse("C3").name() == "C3");
  CHECK(CartanType::parse("e_7").rank == 7);
  CHECK_THROWS_AS(CartanType::parse("D3"), DomainError);
  CHECK_THROWS_AS(CartanType::parse("H4"), DomainError);
  CHECK_THROWS_AS(CartanType::parse("B1"), DomainError);
  CHECK_THROWS_AS((RootSystem{CartanType{'E', 9}}), DomainError);
}

TEST_CASE("positive root counts") {
  CHECK(root_system({'A', 2}).positive_roots().size() == 3);
  for (CartanType t : all_types())
    CHECK(static_cast<Int>(root_system(t).positive_roots().size()) == expected_positive_count(t));
}

TEST_CASE("cartan convention: s_j(alpha_i) = alpha_i - a_ij alpha_j") {
  for (CartanType t : all_types()) {
    const RootSystem& rs = root_system(t);
    for (int i = 1; i <= t.rank; ++i)
      for (int j = 1; j <= t.rank; ++j) {
        Weight lhs = rs.simple_reflection(j).apply(rs.root_to_weight(rs.simple_root(i)));
        Weight rhs = rs.root_to_weight(rs.simple_root(i)) -
                     rs.cartan()(i - 1, j - 1) * rs.root_to_weight(rs.simple_root(j));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("symmetrizer makes DA symmetric") {
  for (CartanType t : all_types()) {
    const RootSystem& rs = root_system(t);
    MatI da = rs.symmetrizers().asDiagonal() * rs.cartan();
    CHECK(da == MatI(da.transpose()));
    Int g = 0;
    for (int i = 0; i < t.rank; ++i) {
      CHECK(rs.symmetrizers()[i] > 0);
      g = std::gcd(g, rs.symmetrizers()[i]);
    }
    CHECK(g == 1);
  }
}

TEST_CASE("G2 positive roots and highest root") {
  const RootSystem& rs = root_system({'G', 2});
  CHECK(rs.positive_roots().size() == 6);
  CHECK(rs.highest_root() == from_std({3, 2}));
  CHECK(rs.is_long(rs.highest_root()));
  CHECK(!rs.is_long(from_std({2, 1})));
}

TEST_CASE("simple reflections on fundamental weights") {
  const RootSystem& a2 = root_system({'A', 2});
  Weight w1 = from_std({1, 0});
  CHECK(a2.simple_reflection(1).apply(w1) == from_std({-1, 1}));
  CHECK(a2.simple_reflection(1).apply(from_std({0, 1})) == from_std({0, 1}));
  const RootSystem& c2 = root_system({'C', 2});
  Weight alpha2 = c2.root_to_weight(c2.simple_root(2));
  CHECK(c2.simple_reflection(2).apply(alpha2) == Weight(-alpha2));
  CHECK_THROWS_AS(a2.simple_reflection(3), DomainError);
}

TEST_CASE("reflection for a root") {
  const RootSystem& a3 = root_system({'A', 3});
  CHECK(a3.reflection_for_root(a3.simple_root(2)) == a3.simple_reflection(2));
  WeylElement s = a3.reflection_for_root(from_std({1, 1, 1}));  // e_1 - e_4
  CHECK(s.is_involution());
  CHECK(a3.length(s) == 5);
  const RootSystem& g2 = root_system({'G', 2});
  CHECK(g2.length(g2.reflection_for_root(from_std({3, 2}))) == 5);
  const RootSystem& a5 = root_system({'A', 5});
  CHECK(a5.length(a5.reflection_for_root(from_std({1, 1, 1, 1, 1}))) == 9);
  CHECK_THROWS_AS(a3.reflection_for_root(from_std({1, 0, 1})), DomainError);
}

TEST_CASE("longest elements") {
  const RootSystem& c3 = root_system({'C', 3});
  CHECK(c3.longest_element().m == MatI(-MatI::Identity(3, 3)));
  const RootSystem& a2 = root_system({'A', 2});
  CHECK(a2.longest_element().apply(from_std({1, 0})) == from_std({0, -1}));
  const RootSystem& e6 = root_system({'E', 6});
  WeylElement wj = e6.parabolic_longest({3, 4, 5});
  for (int i : {1, 2, 6}) {
    Weight w = Weight::Zero(6);
    w[i - 1] = 1;
    CHECK(wj.apply(w) == w);
  }
  CHECK(root_system({'E', 7}).length(root_system({'E', 7}).longest_element()) == 63);
  for (CartanType t : all_types()) {
    const RootSystem& rs = root_system(t);
    CHECK(rs.length(rs.longest_element()) ==
          static_cast<int>(rs.positive_roots().size()));
    CHECK(rs.length(rs.identity()) == 0);
  }
}

TEST_CASE("theta") {
  auto perm = [](const RootSystem& rs) {
    return std::vector<int>(rs.theta().begin() + 1, rs.theta().end());
  };
  CHECK(perm(root_system({'C', 4})) == std::vector<int>{1, 2, 3, 4});
  CHECK(perm(root_system({'A', 3})) == std::vector<int>{3, 2, 1});
  CHECK(perm(root_system({'E', 6})) == std::vector<int>{6, 2, 5, 4, 3, 1});
  for (CartanType t : all_types()) {
    const RootSystem& rs = root_system(t);
    const auto& th = rs.theta();
    bool identity = true;
    for (int i = 1; i <= t.rank; ++i) {
      CHECK(th[static_cast<std::size_t>(th[static_cast<std::size_t>(i)])] == i);
      identity = identity && th[static_cast<std::size_t>(i)] == i;
    }
    bool minus_one_in_w =
        (t.letter == 'A' && t.rank == 1) || t.letter == 'B' || t.letter == 'C' ||
        (t.letter == 'D' && t.rank % 2 == 0) || (t.letter == 'E' && t.rank >= 7) ||
        t.letter == 'F' || t.letter == 'G';
    CHECK(identity == minus_one_in_w);
  }
}

TEST_CASE("minus-fixed roots") {
  const RootSystem& a2 = root_system({'A', 2});
  CHECK(a2.minus_fixed_roots(a2.identity()).empty());
  const RootSystem& c2 = root_system({'C', 2});
  CHECK(c2.minus_fixed_roots(c2.longest_element()).size() == 8);
  auto fixed = a2.minus_fixed_roots(a2.reflection_for_root(a2.highest_root()));
  REQUIRE(fixed.size() == 2);
  CHECK(fixed[0] == a2.highest_root());
  CHECK(fixed[1] == Root(-a2.highest_root()));
  WeylElement s1 = a2.simple_reflection(1);
  WeylElement non_inv = s1 * a2.simple_reflection(2);
  CHECK_THROWS_AS(a2.minus_fixed_roots(non_inv), DomainError);
}

TEST_CASE("weyl elements permute the roots, reflections are involutions") {
  for (CartanType t : all_types()) {
    const RootSystem& rs = root_system(t);
    CHECK(rs.permutes_roots(rs.longest_element()));
    for (const Root& beta : rs.positive_roots()) {
      WeylElement s = rs.reflection_for_root(beta);
      CHECK(s.is_involution());
      CHECK(s.apply(rs.root_to_weight(beta)) == Weight(-rs.root_to_weight(beta)));
    }
  }
}

TEST_CASE("length of inverse") {
  const RootSystem& f4 = root_system({'F', 4});
  WeylElement w = f4.simple_reflection(1) * f4.simple_reflection(2) * f4.simple_reflection(3) *
                  f4.simple_reflection(2) * f4.simple_reflection(4);
  CHECK(f4.length(w) == f4.length(w.inverse()));
  CHECK((w * w.inverse()).is_identity());
  const RootSystem& d5 = root_system({'D', 5});
  WeylElement v = d5.simple_reflection(5) * d5.simple_reflection(3) * d5.simple_reflection(4);
  CHECK(d5.length(v) == d5.length(v.inverse()));
}

TEST_CASE("weight printing and parsing") {
  CHECK(weight_to_string(from_std({2, 0, 1})) == "2w1+w3");
  CHECK(weight_to_string(from_std({0, 0})) == "0");
  CHECK(parse_weight("0,1,0", 3) == from_std({0, 1, 0}));
  CHECK_THROWS_AS(parse_weight("1,2", 3), DomainError);
  CHECK_THROWS_AS(parse_weight("a,b,c", 3), DomainError);
}
