#include "classring/catalog.hpp"

#include <algorithm>

namespace classring::catalog_detail {

namespace {

// Bourbaki e-coordinate combinations expressed in alpha-coordinates. Every
// vector built here is checked against the root list in finalize().

// e_i - e_j for i < j; valid in types A (j <= n+1), B, C, D (j <= n).
Root e_minus_e(int n, int i, int j) {
  Root r = Root::Zero(n);
  for (int k = i; k < j; ++k) r[k - 1] = 1;
  return r;
}

Root b_e(int n, int i) {  // e_i in B_n
  Root r = Root::Zero(n);
  for (int k = i; k <= n; ++k) r[k - 1] = 1;
  return r;
}

Root b_e_plus_e(int n, int i, int j) {  // e_i + e_j in B_n, i < j
  Root r = Root::Zero(n);
  for (int k = i; k < j; ++k) r[k - 1] = 1;
  for (int k = j; k <= n; ++k) r[k - 1] = 2;
  return r;
}

Root c_2e(int n, int i) {  // 2 e_i in C_n
  Root r = Root::Zero(n);
  for (int k = i; k < n; ++k) r[k - 1] = 2;
  r[n - 1] = 1;
  return r;
}

Root c_e_plus_e(int n, int i, int j) {  // e_i + e_j in C_n, i < j
  Root r = Root::Zero(n);
  for (int k = i; k < j; ++k) r[k - 1] = 1;
  for (int k = j; k < n; ++k) r[k - 1] = 2;
  r[n - 1] = 1;
  return r;
}

Root d_e_plus_e(int n, int i, int j) {  // e_i + e_j in D_n, i < j
  Root r = Root::Zero(n);
  if (j == n) {
    for (int k = i; k <= n - 2; ++k) r[k - 1] = 1;
    r[n - 1] = 1;
    return r;
  }
  for (int k = i; k < j; ++k) r[k - 1] = 1;
  for (int k = j; k <= n - 2; ++k) r[k - 1] = 2;
  r[n - 2] = 1;
  r[n - 1] = 1;
  return r;
}

Root simple(int n, int i) {
  Root r = Root::Zero(n);
  r[i - 1] = 1;
  return r;
}

std::vector<int> range(int lo, int hi) {  // {lo, ..., hi}
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

TorusPoint half_sum(int n, const std::vector<int>& idx) {
  std::vector<Rat> q(static_cast<std::size_t>(n), Rat(0));
  for (int j : idx) q[static_cast<std::size_t>(j - 1)] = Rat(1, 2);
  return TorusPoint{std::move(q)};
}

std::vector<int> odds_upto(int k) {  // {1, 3, ..., <= k}
  std::vector<int> v;
  for (int i = 1; i <= k; i += 2) v.push_back(i);
  return v;
}

// h_{alpha_j}(-1) for each listed j, as separate generators
std::vector<TorusPoint> each_half(int n, const std::vector<int>& idx) {
  std::vector<TorusPoint> out;
  for (int j : idx) out.push_back(half_sum(n, {j}));
  return out;
}

struct Builder {
  const RootSystem& rs;
  std::vector<ClassDescriptor>& out;

  ClassDescriptor& make(std::string label, ClassKind kind, Family fam, int param,
                        std::vector<int> j, std::vector<Root> factors,
                        std::vector<TorusPoint> s, std::vector<TorusPoint> s_hat,
                        bool hat_same) {
    ClassDescriptor c;
    c.group = rs.type();
    c.label = std::move(label);
    c.kind = kind;
    c.family = fam;
    c.family_param = param;
    c.j_set = std::move(j);
    c.w_factors = std::move(factors);
    c.s_O.generators = std::move(s);
    c.s_O_hat.generators = hat_same ? c.s_O.generators : std::move(s_hat);
    out.push_back(std::move(c));
    return out.back();
  }
};

void build_A(const RootSystem& rs, std::vector<ClassDescriptor>& out) {
  const int n = rs.rank();
  const int m = (n + 1) / 2;
  Builder b{rs, out};
  auto beta = [&](int i) { return e_minus_e(n + 1, i, n + 2 - i); };
  auto betas = [&](int l) {
    std::vector<Root> v;
    for (int i = 1; i <= l; ++i) v.push_back(beta(i));
    return v;
  };
  for (int l = 1; l <= m; ++l) {
    std::vector<int> j = range(l + 1, n - l);
    std::vector<TorusPoint> s;
    if (n + 1 == 2 * m && l == m) s.push_back(half_sum(n, {m}));
    b.make("X_" + std::to_string(l), ClassKind::unipotent, Family::x_ell, l, j, betas(l), s, {},
           false);
    b.make("exp(zeta w" + std::to_string(l) + ")", ClassKind::semisimple, Family::exp_zeta_wl, l,
           j, betas(l), s, {}, true);
  }
}

void build_C(const RootSystem& rs, std::vector<ClassDescriptor>& out) {
  const int n = rs.rank();
  const int p = n / 2;
  Builder b{rs, out};
  auto beta = [&](int i) { return c_2e(n, i); };
  auto betas = [&](int l) {
    std::vector<Root> v;
    for (int i = 1; i <= l; ++i) v.push_back(beta(i));
    return v;
  };

  // unipotent X_l = (2^l, 1^{2n-2l})
  for (int l = 1; l <= n; ++l) {
    b.make("X_" + std::to_string(l), ClassKind::unipotent, Family::x_ell, l, range(l + 1, n),
           betas(l), each_half(n, range(1, l)), each_half(n, range(1, l - 1)), false);
  }

  // semisimple
  b.make("exp(zeta w" + std::to_string(n) + ")", ClassKind::semisimple, Family::exp_zeta_wn, n,
         {}, betas(n), each_half(n, range(1, n)), {}, true);
  b.make("exp(zeta w1)", ClassKind::semisimple, Family::exp_zeta_w1, 1, range(3, n), betas(2),
         each_half(n, {1}), {}, true);
  for (int l = 1; l <= p; ++l) {
    std::vector<int> j = odds_upto(2 * l - 1);
    for (int i : range(2 * l + 1, n)) j.push_back(i);
    std::sort(j.begin(), j.end());
    std::vector<Root> gammas;
    for (int i = 1; i <= l; ++i) gammas.push_back(c_e_plus_e(n, 2 * i - 1, 2 * i));
    b.make("exp(pi i w" + std::to_string(l) + ")", ClassKind::semisimple, Family::exp_pi_wl, l, j,
           gammas, {}, {}, true);
  }

  // mixed: sigma_k x_{alpha_n}(1) and sigma_k x_{beta_1}(1)
  for (int k = 1; k <= p; ++k) {
    int r = std::min(2 * k + 1, n);
    int parity_terms = std::min(k + 1, (n + 1) / 2);
    b.make("sigma_" + std::to_string(k) + " x_an", ClassKind::mixed, Family::sigma_x_an, k,
           range(r + 1, n), betas(r), {half_sum(n, odds_upto(2 * parity_terms - 1))}, {}, false);
  }
  for (int k = 1; k <= p; ++k) {
    b.make("sigma_" + std::to_string(k) + " x_b1", ClassKind::mixed, Family::sigma_x_b1, k,
           range(2 * k + 1, n), betas(2 * k), {half_sum(n, odds_upto(2 * k - 1))}, {}, false);
  }
}

void build_B(const RootSystem& rs, std::vector<ClassDescriptor>& out) {
  const int n = rs.rank();
  const int m = n / 2;
  const bool even = (n % 2 == 0);
  Builder b{rs, out};
  auto beta_delta = [&](int l) {  // s_{beta_1} s_{delta_1} ... s_{beta_l} s_{delta_l}
    std::vector<Root> v;
    for (int i = 1; i <= l; ++i) {
      v.push_back(b_e_plus_e(n, 2 * i - 1, 2 * i));
      v.push_back(simple(n, 2 * i - 1));
    }
    return v;
  };
  auto betas = [&](int l) {
    std::vector<Root> v;
    for (int i = 1; i <= l; ++i) v.push_back(b_e_plus_e(n, 2 * i - 1, 2 * i));
    return v;
  };
  auto gammas = [&](int r) {
    std::vector<Root> v;
    for (int i = 1; i <= r; ++i) v.push_back(b_e(n, i));
    return v;
  };

  // unipotent
  for (int l = 1; l <= m; ++l) {
    std::vector<TorusPoint> s;
    std::vector<TorusPoint> s_hat;
    if (even && l == m) {
      s = {half_sum(n, odds_upto(n - 1)), half_sum(n, {n})};
      s_hat = {half_sum(n, {n})};
    } else {
      s = {half_sum(n, odds_upto(2 * l - 1))};
    }
    b.make("Z_" + std::to_string(l), ClassKind::unipotent, Family::z_ell, l, range(2 * l + 1, n),
           beta_delta(l), s, s_hat, false);
  }
  if (!even) {
    auto factors = beta_delta(m);
    factors.push_back(simple(n, n));
    auto& c = b.make("Z_" + std::to_string(m + 1), ClassKind::unipotent, Family::z_ell, m + 1, {},
                     factors, {half_sum(n, {n})}, {}, false);
    c.normal_closure = false;
    c.closure_special = ClosureSpecial::b_odd_zmax;
  }
  for (int l = 1; l <= m; ++l) {
    std::vector<int> j = odds_upto(2 * l - 1);
    for (int i : range(2 * l + 1, n)) j.push_back(i);
    std::sort(j.begin(), j.end());
    std::vector<TorusPoint> s, s_hat;
    if (even && l == m) s = {half_sum(n, {n})};
    b.make("X_" + std::to_string(l), ClassKind::unipotent, Family::x_ell, l, j, betas(l), s,
           s_hat, false);
  }

  // semisimple
  {
    std::vector<TorusPoint> s = (even && m == 1) ? each_half(n, {1, 2}) : each_half(n, {1});
    b.make("exp(zeta w1)", ClassKind::semisimple, Family::exp_zeta_w1, 1, range(3, n),
           beta_delta(1), s, {}, true);
  }
  int mid_hi = even ? m - 1 : m;  // exp(pi i w_l) through J_l
  for (int l = 2; l <= mid_hi; ++l) {
    b.make("exp(pi i w" + std::to_string(l) + ")", ClassKind::semisimple, Family::exp_pi_wl, l,
           range(2 * l + 1, n), beta_delta(l), each_half(n, range(1, 2 * l - 1)), {}, true);
  }
  {
    int l0 = even ? m : m + 1;  // the w_0 member with all-even weight monoid
    b.make("exp(pi i w" + std::to_string(l0) + ")", ClassKind::semisimple, Family::exp_pi_wl, l0,
           {}, even ? beta_delta(m) : gammas(n), each_half(n, range(1, n)), {}, true);
  }
  for (int l = (even ? m + 1 : m + 2); l <= n; ++l) {
    int r = 2 * (n - l) + 1;
    b.make("exp(pi i w" + std::to_string(l) + ")", ClassKind::semisimple, Family::exp_pi_wl, l,
           range(r + 1, n), gammas(r), each_half(n, range(1, r - 1)), {}, true);
  }
  b.make("exp(zeta w" + std::to_string(n) + ")", ClassKind::semisimple, Family::exp_zeta_wn, n,
         {}, gammas(n), each_half(n, {n}), {}, true);

  // mixed: sigma_n x_{beta_1}(1) ... x_{beta_l}(1)
  for (int l = 1; l <= m; ++l) {
    std::string label = "sigma_n x_b1";
    if (l > 1) label += "..b" + std::to_string(l);
    int r = 2 * l + 1;
    std::vector<TorusPoint> s, s_hat;
    bool hat_same = false;
    if (l == m && even) {
      s = {half_sum(n, {n})};
    } else if (l == m && !even) {
      s = {half_sum(n, {n})};
      hat_same = true;
    }
    b.make(label, ClassKind::mixed, Family::sigma_x_blist, l, range(r + 1, n), gammas(r), s,
           s_hat, hat_same);
  }
}

void build_D(const RootSystem& rs, std::vector<ClassDescriptor>& out) {
  const int n = rs.rank();
  const int m = n / 2;
  const bool even = (n % 2 == 0);
  Builder b{rs, out};
  auto beta_delta = [&](int l) {
    std::vector<Root> v;
    for (int i = 1; i <= l; ++i) {
      v.push_back(d_e_plus_e(n, 2 * i - 1, 2 * i));
      v.push_back(simple(n, 2 * i - 1));
    }
    return v;
  };
  auto betas = [&](int l) {
    std::vector<Root> v;
    for (int i = 1; i <= l; ++i) v.push_back(d_e_plus_e(n, 2 * i - 1, 2 * i));
    return v;
  };
  auto j_l = [&](int l) { return l < m ? range(2 * l + 1, n) : std::vector<int>{}; };
  auto k_l = [&](int l) {
    std::vector<int> j = odds_upto(2 * l - 1);
    for (int i : j_l(l)) j.push_back(i);
    std::sort(j.begin(), j.end());
    return j;
  };
  std::vector<int> j_prime = odds_upto(n - 3);  // {1,3,...,n-3,n}, even n only
  j_prime.push_back(n);
  auto x_prime_factors = [&]() {
    auto v = betas(m - 1);
    v.push_back(simple(n, n - 1));
    return v;
  };

  // unipotent
  for (int l = 1; l <= m; ++l) {
    std::vector<TorusPoint> s;
    if (l == m && even) {
      s = {half_sum(n, odds_upto(n - 1)), half_sum(n, {n - 1, n})};
    } else if (l == m && !even) {
      s = {half_sum(n, odds_upto(n - 2))};
    } else {
      s = {half_sum(n, odds_upto(2 * l - 1))};
    }
    b.make("Z_" + std::to_string(l), ClassKind::unipotent, Family::z_ell, l, j_l(l),
           beta_delta(l), s, {}, false);
  }
  for (int l = 1; l <= m; ++l) {
    std::vector<TorusPoint> s;
    if (l == m && even) s = {half_sum(n, {n})};
    b.make("X_" + std::to_string(l), ClassKind::unipotent, Family::x_ell, l, k_l(l), betas(l), s,
           {}, false);
  }
  if (even) {
    b.make("X_" + std::to_string(m) + "'", ClassKind::unipotent, Family::x_m_prime, m, j_prime,
           x_prime_factors(), {half_sum(n, {n - 1})}, {}, false);
  }

  // semisimple
  b.make("exp(zeta w1)", ClassKind::semisimple, Family::exp_zeta_w1, 1, j_l(1), beta_delta(1),
         each_half(n, {1}), {}, true);
  for (int l = 2; l <= m - 1; ++l) {
    b.make("exp(pi i w" + std::to_string(l) + ")", ClassKind::semisimple, Family::exp_pi_wl, l,
           j_l(l), beta_delta(l), each_half(n, range(1, 2 * l - 1)), {}, true);
  }
  {
    auto& c = b.make("exp(pi i w" + std::to_string(m) + ")", ClassKind::semisimple,
                     Family::exp_pi_wl, m, j_l(m), beta_delta(m),
                     each_half(n, range(1, even ? n : n - 2)), {}, true);
    if (even) {
      // PSO(2n), n = 2m: the one isogeny quotient the tables print for D.
      IsogenyEntry iso;
      iso.d_tag = "Z";
      iso.constraints.generators = each_half(n, range(1, n));
      std::vector<Rat> q1(static_cast<std::size_t>(n), Rat(0));
      q1[static_cast<std::size_t>(n - 2)] = q1[static_cast<std::size_t>(n - 1)] = Rat(1, 4);
      iso.constraints.generators.push_back(torus_point(std::move(q1)));
      std::vector<Rat> q2(static_cast<std::size_t>(n), Rat(0));
      for (int i = 1; i <= n - 1; i += 2) q2[static_cast<std::size_t>(i - 1)] = Rat(1, 4);
      iso.constraints.generators.push_back(torus_point(std::move(q2)));
      c.isogeny_entries.push_back(std::move(iso));
    }
  }
  b.make("exp(zeta w" + std::to_string(n) + ")", ClassKind::semisimple, Family::exp_zeta_wn, n,
         k_l(m), betas(m), even ? each_half(n, {n}) : std::vector<TorusPoint>{}, {}, true);
  if (even) {
    b.make("exp(zeta w" + std::to_string(n - 1) + ")", ClassKind::semisimple, Family::exp_zeta_wn1,
           n - 1, j_prime, x_prime_factors(), each_half(n, {n - 1}), {}, true);
  }
}

}  // namespace

void build_classical(const RootSystem& rs, std::vector<ClassDescriptor>& out) {
  switch (rs.type().letter) {
    case 'A': build_A(rs, out); break;
    case 'B': build_B(rs, out); break;
    case 'C': build_C(rs, out); break;
    case 'D': build_D(rs, out); break;
    default: throw DomainError("build_classical: not a classical type");
  }
}

}  // namespace classring::catalog_detail
