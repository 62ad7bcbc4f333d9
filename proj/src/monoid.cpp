#include "classring/monoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "classring/intlat.hpp"

namespace classring {

namespace {

// Degree first, then lexicographic with earlier coordinates weighing more
// (so 2w1 precedes 2w2).
bool graded_lex_less(const Weight& a, const Weight& b) {
  Int sa = a.sum(), sb = b.sum();
  if (sa != sb) return sa < sb;
  return std::lexicographical_compare(b.data(), b.data() + b.size(), a.data(),
                                      a.data() + a.size());
}

bool leq_componentwise(const Weight& a, const Weight& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

WeightMonoid WeightMonoid::congruence(std::vector<Weight> basis, FiniteTorusSubgroup constraints) {
  WeightMonoid m;
  m.kind_ = Kind::congruence;
  if (basis.empty()) throw DomainError("congruence monoid needs a nonempty basis");
  m.rank_ = static_cast<int>(basis.front().size());
  m.basis_ = std::move(basis);
  m.constraints_ = std::move(constraints);

  {
    MatI b(m.rank_, static_cast<Eigen::Index>(m.basis_.size()));
    for (std::size_t j = 0; j < m.basis_.size(); ++j)
      b.col(static_cast<Eigen::Index>(j)) = m.basis_[j];
    if (intlat::rank(b) != static_cast<Eigen::Index>(m.basis_.size()))
      throw DomainError("congruence monoid basis is not linearly independent");
  }

  // Fast decode when the basis vectors are 0/1 with disjoint supports, which
  // is the shape every P^+_w basis has.
  m.disjoint_01_basis_ = true;
  m.owner_.assign(static_cast<std::size_t>(m.rank_), -1);
  m.basis_rep_.assign(m.basis_.size(), -1);
  for (std::size_t j = 0; j < m.basis_.size() && m.disjoint_01_basis_; ++j) {
    const Weight& b = m.basis_[j];
    for (int i = 0; i < m.rank_; ++i) {
      if (b[i] == 0) continue;
      if (b[i] != 1 || m.owner_[static_cast<std::size_t>(i)] != -1) {
        m.disjoint_01_basis_ = false;
        break;
      }
      m.owner_[static_cast<std::size_t>(i)] = static_cast<int>(j);
      if (m.basis_rep_[j] < 0) m.basis_rep_[j] = i;
    }
    if (m.disjoint_01_basis_ && m.basis_rep_[j] < 0) m.disjoint_01_basis_ = false;
  }

  // Integral phase tests: <lambda, q> in Z  <=>  sum_i num_i lambda_i = 0 mod den.
  for (const TorusPoint& t : m.constraints_.generators) {
    FastConstraint fc;
    fc.den = t.order();
    for (const Rat& x : t.q)
      fc.num.push_back(static_cast<Int>(BigInt(numerator(x) * (fc.den / denominator(x)))));
    m.fast_constraints_.push_back(std::move(fc));
  }

  m.compute_generators();
  return m;
}

WeightMonoid WeightMonoid::from_generators(std::vector<Weight> gens) {
  WeightMonoid m;
  m.kind_ = Kind::generated;
  if (gens.empty()) throw DomainError("generated monoid needs at least one generator");
  m.rank_ = static_cast<int>(gens.front().size());
  m.generators_ = std::move(gens);
  std::sort(m.generators_.begin(), m.generators_.end(), graded_lex_less);
  return m;
}

WeightMonoid WeightMonoid::b_odd_closure(int n) {
  if (n < 3 || n % 2 == 0) throw DomainError("b_odd_closure needs odd rank >= 3");
  WeightMonoid m;
  m.kind_ = Kind::closure_b_odd;
  m.rank_ = n;
  m.compute_generators();
  return m;
}

WeightMonoid WeightMonoid::g2_closure() {
  WeightMonoid m;
  m.kind_ = Kind::closure_g2;
  m.rank_ = 2;
  Weight a = Weight::Zero(2), b = Weight::Zero(2), c = Weight::Zero(2);
  a[0] = 2;
  b[0] = 3;
  c[1] = 1;
  m.generators_ = {a, b, c};
  std::sort(m.generators_.begin(), m.generators_.end(), graded_lex_less);
  return m;
}

bool WeightMonoid::phases_trivial(const Weight& lambda) const {
  for (const FastConstraint& fc : fast_constraints_) {
    Int acc = 0;
    for (int i = 0; i < rank_; ++i) acc += fc.num[static_cast<std::size_t>(i)] * lambda[i];
    if (acc % fc.den != 0) return false;
  }
  return true;
}

bool WeightMonoid::in_free_monoid_on_basis(const Weight& lambda) const {
  if (disjoint_01_basis_) {
    for (int i = 0; i < rank_; ++i) {
      const int j = owner_[static_cast<std::size_t>(i)];
      if (j < 0) {
        if (lambda[i] != 0) return false;
      } else {
        if (lambda[i] < 0 || lambda[i] != lambda[basis_rep_[static_cast<std::size_t>(j)]])
          return false;
      }
    }
    return true;
  }
  std::vector<Int> coeff;
  return decompose_in_basis(lambda, coeff);
}

bool WeightMonoid::decompose_in_basis(const Weight& lambda, std::vector<Int>& coeff) const {
  coeff.assign(basis_.size(), 0);
  if (disjoint_01_basis_) {
    if (!in_free_monoid_on_basis(lambda)) return false;
    for (std::size_t j = 0; j < basis_.size(); ++j) coeff[j] = lambda[basis_rep_[j]];
    return true;
  }
  // General exact solve over the rationals, then integrality/nonnegativity.
  const int k = static_cast<int>(basis_.size());
  std::vector<std::vector<Rat>> a(static_cast<std::size_t>(rank_),
                                  std::vector<Rat>(static_cast<std::size_t>(k + 1)));
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < k; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
        Rat(basis_[static_cast<std::size_t>(j)][i]);
    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = Rat(lambda[i]);
  }
  int row = 0;
  std::vector<int> pivot_row(static_cast<std::size_t>(k), -1);
  for (int col = 0; col < k && row < rank_; ++col) {
    int p = -1;
    for (int i = row; i < rank_; ++i)
      if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[static_cast<std::size_t>(row)], a[static_cast<std::size_t>(p)]);
    Rat piv = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
    for (auto& x : a[static_cast<std::size_t>(row)]) x /= piv;
    for (int i = 0; i < rank_; ++i) {
      if (i == row) continue;
      Rat f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int j = 0; j <= k; ++j)
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            f * a[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
    }
    pivot_row[static_cast<std::size_t>(col)] = row;
    ++row;
  }
  for (int i = row; i < rank_; ++i)
    if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) return false;
  for (int j = 0; j < k; ++j) {
    if (pivot_row[static_cast<std::size_t>(j)] < 0) return false;
    Rat x = a[static_cast<std::size_t>(pivot_row[static_cast<std::size_t>(j)])]
             [static_cast<std::size_t>(k)];
    if (denominator(x) != 1 || x < 0) return false;
    coeff[static_cast<std::size_t>(j)] = static_cast<Int>(BigInt(numerator(x)));
  }
  return true;
}

bool WeightMonoid::n_combination_of_generators(const Weight& lambda) const {
  if (lambda.isZero(0)) return true;
  std::map<std::vector<Int>, bool> memo;
  std::function<bool(const Weight&)> go = [&](const Weight& v) -> bool {
    if (v.isZero(0)) return true;
    auto key = to_std(v);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (const Weight& g : generators_) {
      if (g.sum() > v.sum()) break;
      if (leq_componentwise(g, v) && go(v - g)) {
        ok = true;
        break;
      }
    }
    memo.emplace(std::move(key), ok);
    return ok;
  };
  return go(lambda);
}

bool WeightMonoid::contains(const Weight& lambda) const {
  if (static_cast<int>(lambda.size()) != rank_) throw DomainError("weight of wrong rank");
  switch (kind_) {
    case Kind::congruence:
      return in_free_monoid_on_basis(lambda) && phases_trivial(lambda);
    case Kind::closure_b_odd: {
      const int n = rank_;
      const int m = (n - 1) / 2;
      if ((lambda.array() < 0).any()) return false;
      if (lambda[n - 1] == 0) {
        Int odd_sum = 0;
        for (int i = 1; i <= m; ++i) odd_sum += lambda[2 * i - 2];
        return odd_sum % 2 == 0;
      }
      return lambda[n - 1] % 2 == 0 && lambda[n - 1] >= 2;
    }
    case Kind::closure_g2:
      return lambda[0] >= 0 && lambda[1] >= 0 && lambda[0] != 1;
    case Kind::generated:
      if ((lambda.array() < 0).any()) return false;
      return n_combination_of_generators(lambda);
  }
  return false;
}

void WeightMonoid::compute_generators() {
  generators_.clear();
  std::vector<Weight> members;

  if (kind_ == Kind::congruence) {
    // Every constraint has finite order, so N * (basis vector) is a member
    // for N = lcm of the orders; Hilbert generators therefore lie in the
    // coefficient box {0..N}^k.
    Int n_box = 1;
    for (const TorusPoint& t : constraints_.generators) n_box = std::lcm(n_box, t.order());
    const int k = static_cast<int>(basis_.size());
    std::function<void(int, const Weight&)> rec = [&](int j, const Weight& acc) {
      if (j == k) {
        if (!acc.isZero(0) && phases_trivial(acc)) members.push_back(acc);
        return;
      }
      Weight cur = acc;
      for (Int c = 0; c <= n_box; ++c) {
        rec(j + 1, cur);
        if (c < n_box) cur += basis_[static_cast<std::size_t>(j)];
      }
    };
    rec(0, Weight::Zero(rank_));
  } else if (kind_ == Kind::closure_b_odd) {
    for_each_dominant_box(rank_, 4, [&](const Weight& w) {
      if (!w.isZero(0) && contains(w)) members.push_back(w);
    });
  }

  // Hilbert basis = minimal nonzero members under the componentwise order.
  std::sort(members.begin(), members.end(), graded_lex_less);
  for (const Weight& w : members) {
    bool minimal = true;
    for (const Weight& g : generators_) {
      if (g.sum() >= w.sum()) break;
      if (leq_componentwise(g, w)) {
        minimal = false;
        break;
      }
    }
    if (minimal) generators_.push_back(w);
  }
}

std::vector<Weight> pwplus_basis(const RootSystem& rs, const std::vector<int>& j_set) {
  if (!rs.theta_invariant(j_set)) throw DomainError("pwplus_basis: J is not theta-invariant");
  const int n = rs.rank();
  std::vector<bool> in_j(static_cast<std::size_t>(n + 1), false);
  for (int j : j_set) {
    if (j < 1 || j > n) throw DomainError("pwplus_basis: J index out of range");
    in_j[static_cast<std::size_t>(j)] = true;
  }
  std::vector<Weight> basis;
  for (int i = 1; i <= n; ++i) {
    if (in_j[static_cast<std::size_t>(i)]) continue;
    int ti = rs.theta()[static_cast<std::size_t>(i)];
    if (ti < i) continue;  // orbit already handled by its smaller element
    Weight w = Weight::Zero(n);
    w[i - 1] = 1;
    if (ti != i) w[ti - 1] = 1;
    basis.push_back(w);
  }
  return basis;
}

WeightMonoid constrained_monoid(std::vector<Weight> basis, const FiniteTorusSubgroup& s) {
  return WeightMonoid::congruence(std::move(basis), s);
}

WeightMonoid lambda_O(const ClassDescriptor& c) {
  const RootSystem& rs = root_system(c.group);
  return WeightMonoid::congruence(pwplus_basis(rs, c.j_set), c.s_O);
}

WeightMonoid lambda_O_hat(const ClassDescriptor& c) {
  const RootSystem& rs = root_system(c.group);
  return WeightMonoid::congruence(pwplus_basis(rs, c.j_set), c.s_O_hat);
}

WeightMonoid lambda_closure(const ClassDescriptor& c) {
  switch (c.closure_special) {
    case ClosureSpecial::none:
      return lambda_O(c);
    case ClosureSpecial::b_odd_zmax:
      return WeightMonoid::b_odd_closure(c.group.rank);
    case ClosureSpecial::g2_a1tilde:
      return WeightMonoid::g2_closure();
  }
  throw DomainError("bad closure tag");
}

WeightMonoid lambda_isogeny(const ClassDescriptor& c, const std::string& d_tag) {
  const RootSystem& rs = root_system(c.group);
  const IsogenyEntry& e = c.isogeny(d_tag);
  return WeightMonoid::congruence(pwplus_basis(rs, c.j_set), e.constraints);
}

bool saturation_check(const WeightMonoid& m, Int bound) {
  if (bound < 1) throw DomainError("saturation_check: bound must be >= 1");
  if (m.generators().empty()) return true;  // trivial monoid, trivial group
  const int n = m.rank();
  MatI gens(n, static_cast<Eigen::Index>(m.generators().size()));
  for (std::size_t j = 0; j < m.generators().size(); ++j)
    gens.col(static_cast<Eigen::Index>(j)) = m.generators()[j];
  intlat::LatticeMembership group(gens);
  bool ok = true;
  for_each_dominant_box(n, bound, [&](const Weight& w) {
    if (!ok) return;
    if (group.contains(w) && !m.contains(w)) ok = false;
  });
  return ok;
}

bool chain_check(const ClassDescriptor& c, Int bound) {
  const int n = c.group.rank;
  WeightMonoid closure = lambda_closure(c);
  WeightMonoid o = lambda_O(c);
  WeightMonoid cover = lambda_O_hat(c);
  MatI one_plus = MatI::Identity(n, n) + c.w.m;
  MatI one_minus = MatI::Identity(n, n) - c.w.m;
  bool ok = true;
  for_each_dominant_box(n, bound, [&](const Weight& w) {
    if (!ok) return;
    const bool in_pw = (one_plus * w).isZero(0);
    const bool in_cl = closure.contains(w);
    const bool in_o = o.contains(w);
    const bool in_cover = cover.contains(w);
    // closure <= O <= cover <= P^+_w
    if ((in_cl && !in_o) || (in_o && !in_cover) || (in_cover && !in_pw)) {
      ok = false;
      return;
    }
    // 2 P^+_w <= (1-w) P^+, witnessed by lambda itself, and (1-w) P^+ <= closure.
    if (in_pw && !(one_minus * w - 2 * w).isZero(0)) {
      ok = false;
      return;
    }
    if (!closure.contains(one_minus * w)) ok = false;
  });
  return ok;
}

Int class_dimension(const ClassDescriptor& c) {
  const RootSystem& rs = root_system(c.group);
  MatI one_minus = MatI::Identity(rs.rank(), rs.rank()) - c.w.m;
  return rs.length(c.w) + static_cast<Int>(intlat::rank(one_minus));
}

bool is_model(const ClassDescriptor& c) {
  WeightMonoid o = lambda_O(c);
  const int n = c.group.rank;
  if (static_cast<int>(o.generators().size()) != n) return false;
  std::set<std::vector<Int>> gens;
  for (const Weight& g : o.generators()) gens.insert(to_std(g));
  for (int i = 0; i < n; ++i) {
    Weight fw = Weight::Zero(n);
    fw[i] = 1;
    if (!gens.count(to_std(fw))) return false;
  }
  return true;
}

void for_each_dominant_box(int n, Int bound, const std::function<void(const Weight&)>& f) {
  Weight w = Weight::Zero(n);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      f(w);
      return;
    }
    for (Int c = 0; c <= bound; ++c) {
      w[i] = c;
      rec(i + 1);
    }
    w[i] = 0;
  };
  rec(0);
}

std::vector<Weight> dominant_by_sum(int n, Int bound) {
  std::vector<Weight> out;
  Weight w = Weight::Zero(n);
  std::function<void(int, Int)> rec = [&](int i, Int left) {
    if (i == n) {
      out.push_back(w);
      return;
    }
    for (Int c = 0; c <= left; ++c) {
      w[i] = c;
      rec(i + 1, left - c);
    }
    w[i] = 0;
  };
  rec(0, bound);
  return out;
}

}  // namespace classring
