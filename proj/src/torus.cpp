#include "classring/torus.hpp"

#include <numeric>
#include <set>

#include "classring/intlat.hpp"

namespace classring {

namespace {

Rat frac(const Rat& x) {
  BigInt n = numerator(x), d = denominator(x);
  BigInt m = n % d;
  if (m < 0) m += d;
  return Rat(m, d);
}

}  // namespace

bool TorusPoint::is_zero() const {
  for (const Rat& x : q)
    if (x != 0) return false;
  return true;
}

Int TorusPoint::order() const {
  BigInt l = 1;
  for (const Rat& x : q) l = lcm(l, denominator(x));
  return static_cast<Int>(l);
}

TorusPoint torus_point(std::vector<Rat> q) {
  for (Rat& x : q) x = frac(x);
  return TorusPoint{std::move(q)};
}

TorusPoint coroot_multiple(int n, int j, const Rat& t) {
  if (j < 1 || j > n) throw DomainError("coroot index out of range");
  std::vector<Rat> q(static_cast<std::size_t>(n), Rat(0));
  q[static_cast<std::size_t>(j - 1)] = frac(t);
  return TorusPoint{std::move(q)};
}

TorusPoint add(const TorusPoint& a, const TorusPoint& b) {
  if (a.q.size() != b.q.size()) throw DomainError("torus point size mismatch");
  std::vector<Rat> q(a.q.size());
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = frac(a.q[i] + b.q[i]);
  return TorusPoint{std::move(q)};
}

Rat eval_phase(const Weight& lambda, const TorusPoint& t) {
  if (lambda.size() != t.size()) throw DomainError("eval_phase: size mismatch");
  Rat acc(0);
  for (Eigen::Index i = 0; i < lambda.size(); ++i)
    acc += Rat(lambda[i]) * t.q[static_cast<std::size_t>(i)];
  return frac(acc);
}

bool trivial_on(const Weight& lambda, const FiniteTorusSubgroup& s) {
  for (const TorusPoint& g : s.generators)
    if (eval_phase(lambda, g) != 0) return false;
  return true;
}

std::vector<TorusPoint> subgroup_elements(const FiniteTorusSubgroup& s, int n) {
  std::set<std::vector<Rat>> seen;
  std::vector<TorusPoint> out;
  TorusPoint zero{std::vector<Rat>(static_cast<std::size_t>(n), Rat(0))};
  seen.insert(zero.q);
  out.push_back(zero);
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const TorusPoint& g : s.generators) {
      if (g.size() != n) throw DomainError("subgroup generator has wrong rank");
      TorusPoint next = add(out[k], g);
      if (seen.insert(next.q).second) out.push_back(next);
    }
  }
  return out;
}

Int subgroup_order(const FiniteTorusSubgroup& s, int n) {
  return static_cast<Int>(subgroup_elements(s, n).size());
}

bool subgroup_contains(const FiniteTorusSubgroup& s, const TorusPoint& t, int n) {
  for (const TorusPoint& e : subgroup_elements(s, n))
    if (e == torus_point(t.q)) return true;
  return false;
}

bool subgroup_leq(const FiniteTorusSubgroup& b, const FiniteTorusSubgroup& a, int n) {
  auto elems = subgroup_elements(a, n);
  std::set<std::vector<Rat>> in_a;
  for (const TorusPoint& e : elems) in_a.insert(e.q);
  for (const TorusPoint& g : b.generators)
    if (!in_a.count(torus_point(g.q).q)) return false;
  return true;
}

std::vector<Rat> fundamental_coweight(const RootSystem& rs, int i) {
  const int n = rs.rank();
  if (i < 1 || i > n) throw DomainError("fundamental coweight index out of range");
  // Solve A q = e_i exactly through the Smith decomposition of the Cartan matrix.
  auto s = intlat::smith_normal_form(rs.cartan());
  std::vector<Rat> y(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    BigInt num = s.u(k, i - 1);
    BigInt den = s.d(k, k);
    if (den == 0) throw DomainError("singular Cartan matrix");
    y[static_cast<std::size_t>(k)] = Rat(num, den);
  }
  std::vector<Rat> x(static_cast<std::size_t>(n), Rat(0));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k)
      x[static_cast<std::size_t>(r)] += Rat(s.v(r, k)) * y[static_cast<std::size_t>(k)];
  return x;
}

FiniteTorusSubgroup center(const RootSystem& rs) {
  const int n = rs.rank();
  const char letter = rs.type().letter;
  const Rat half(1, 2), quarter(1, 4);
  FiniteTorusSubgroup z;
  auto at = [&](std::vector<std::pair<int, Rat>> entries) {
    std::vector<Rat> q(static_cast<std::size_t>(n), Rat(0));
    for (auto& [j, t] : entries) q[static_cast<std::size_t>(j - 1)] = t;
    z.generators.push_back(torus_point(std::move(q)));
  };
  switch (letter) {
    case 'A':
      z.generators.push_back(torus_point(fundamental_coweight(rs, n)));
      break;
    case 'B':
      at({{n, half}});
      break;
    case 'C': {
      std::vector<std::pair<int, Rat>> e;
      for (int i = 1; 2 * i - 1 <= n; ++i) e.emplace_back(2 * i - 1, half);
      at(e);
      break;
    }
    case 'D': {
      if (n % 2 == 0) {
        std::vector<std::pair<int, Rat>> e;
        for (int i = 1; 2 * i - 1 <= n - 1; ++i) e.emplace_back(2 * i - 1, half);
        at(e);
        at({{n - 1, half}, {n, half}});
      } else {
        std::vector<std::pair<int, Rat>> e;
        for (int i = 1; 2 * i - 1 <= n - 2; ++i) e.emplace_back(2 * i - 1, half);
        e.emplace_back(n - 1, quarter);
        e.emplace_back(n, Rat(3, 4));
        at(e);
      }
      break;
    }
    case 'E':
      if (n == 6) {
        z.generators.push_back(torus_point(fundamental_coweight(rs, 1)));
      } else if (n == 7) {
        at({{2, half}, {5, half}, {7, half}});
      }
      break;
    case 'F':
    case 'G':
      break;
    default:
      throw DomainError("bad type");
  }
  return z;
}

int fixed_torus_rank(const RootSystem& rs, const WeylElement& w) {
  if (!w.is_involution()) throw DomainError("fixed_torus_rank: not an involution");
  MatI one_minus = MatI::Identity(rs.rank(), rs.rank()) - w.m;
  return rs.rank() - static_cast<int>(intlat::rank(one_minus));
}

std::vector<Int> component_group_of_Tw(const RootSystem& rs, const WeylElement& w) {
  if (!w.is_involution()) throw DomainError("component_group_of_Tw: not an involution");
  MatI one_minus = MatI::Identity(rs.rank(), rs.rank()) - w.m;
  std::vector<Int> out;
  for (const BigInt& e : intlat::quotient_torsion(one_minus)) out.push_back(static_cast<Int>(e));
  return out;
}

}  // namespace classring
