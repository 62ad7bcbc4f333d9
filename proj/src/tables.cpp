#include "classring/verify.hpp"

namespace classring {

// Verbatim transcriptions of the printed weight-monoid tables, one coefficient
// predicate per family row. They read only the family tag, the rank, and the
// raw omega-coordinates, so they provide an independent check of the torus
// data stored in the catalog.

namespace {

// lambda_i == 0 unless keep(i); indices 1-based
template <class Keep>
bool support(const Weight& l, Keep keep) {
  for (int i = 1; i <= static_cast<int>(l.size()); ++i)
    if (!keep(i) && l[i - 1] != 0) return false;
  return true;
}

bool even_at(const Weight& l, int i) { return l[i - 1] % 2 == 0; }

Int odd_sum_upto(const Weight& l, int hi) {
  Int s = 0;
  for (int i = 1; i <= hi; i += 2) s += l[i - 1];
  return s;
}

bool all_even_upto(const Weight& l, int hi) {
  for (int i = 1; i <= hi; ++i)
    if (l[i - 1] % 2 != 0) return false;
  return true;
}

bool table_A(const ClassDescriptor& c, const Weight& l, bool cover) {
  const int n = c.group.rank;
  const int m = (n + 1) / 2;
  const int el = c.family_param;
  // sum_{k<=el} n_k (w_k + w_{n-k+1}), with 2 n_m w_m when n+1 = 2m, el = m
  if (!support(l, [&](int i) { return i <= el || i >= n + 1 - el; })) return false;
  for (int k = 1; k <= el; ++k)
    if (l[k - 1] != l[n - k]) return false;
  if (n + 1 == 2 * m && el == m) {
    bool hat_free = cover && c.family == Family::x_ell;
    if (!hat_free && !even_at(l, m)) return false;
  }
  return true;
}

bool table_C(const ClassDescriptor& c, const Weight& l, bool cover) {
  const int n = c.group.rank;
  const int k = c.family_param;
  switch (c.family) {
    case Family::x_ell:
      if (!support(l, [&](int i) { return i <= k; })) return false;
      return all_even_upto(l, cover ? k - 1 : k);
    case Family::exp_zeta_wn:
      return all_even_upto(l, n);
    case Family::exp_zeta_w1:
      return support(l, [&](int i) { return i <= 2; }) && even_at(l, 1);
    case Family::exp_pi_wl:
      return support(l, [&](int i) { return i % 2 == 0 && i <= 2 * k; });
    case Family::sigma_x_an: {
      int r = std::min(2 * k + 1, n);
      if (!support(l, [&](int i) { return i <= r; })) return false;
      if (cover) return true;
      int terms = std::min(k + 1, (n + 1) / 2);
      return odd_sum_upto(l, 2 * terms - 1) % 2 == 0;
    }
    case Family::sigma_x_b1:
      if (!support(l, [&](int i) { return i <= 2 * k; })) return false;
      return cover || odd_sum_upto(l, 2 * k - 1) % 2 == 0;
    default:
      throw DomainError("table_C: unexpected family for " + c.id());
  }
}

bool table_B(const ClassDescriptor& c, const Weight& l, bool cover) {
  const int n = c.group.rank;
  const int m = n / 2;
  const bool even_rank = (n % 2 == 0);
  const int el = c.family_param;
  switch (c.family) {
    case Family::x_ell:
      if (even_rank && el == m)
        return support(l, [&](int i) { return i % 2 == 0; }) && (cover || even_at(l, n));
      return support(l, [&](int i) { return i % 2 == 0 && i <= 2 * el; });
    case Family::z_ell:
      if (!even_rank && el == m + 1) return cover || even_at(l, n);
      if (even_rank && el == m) {
        if (!even_at(l, n)) return false;
        return cover || odd_sum_upto(l, n - 1) % 2 == 0;
      }
      if (!support(l, [&](int i) { return i <= 2 * el; })) return false;
      return cover || odd_sum_upto(l, 2 * el - 1) % 2 == 0;
    case Family::exp_zeta_w1:
      if (even_rank && m == 1) return even_at(l, 1) && even_at(l, 2);
      return support(l, [&](int i) { return i <= 2; }) && even_at(l, 1);
    case Family::exp_pi_wl: {
      const int mid_hi = even_rank ? m - 1 : m;
      const int w0_member = even_rank ? m : m + 1;
      if (el <= mid_hi)
        return support(l, [&](int i) { return i <= 2 * el; }) && all_even_upto(l, 2 * el - 1);
      if (el == w0_member) return all_even_upto(l, n);
      int r = 2 * (n - el) + 1;
      return support(l, [&](int i) { return i <= r; }) && all_even_upto(l, r - 1);
    }
    case Family::exp_zeta_wn:
      return even_at(l, n);
    case Family::sigma_x_blist:
      if (el < m) return support(l, [&](int i) { return i <= 2 * el + 1; });
      if (even_rank) return cover || even_at(l, n);
      return even_at(l, n);  // n odd: lambda(O) = lambda(cover)
    default:
      throw DomainError("table_B: unexpected family for " + c.id());
  }
}

bool table_D(const ClassDescriptor& c, const Weight& l, bool cover) {
  const int n = c.group.rank;
  const int m = n / 2;
  const bool even_rank = (n % 2 == 0);
  const int el = c.family_param;
  auto spinor_pair = [&] { return l[n - 2] == l[n - 1]; };
  switch (c.family) {
    case Family::x_ell:
      if (even_rank && el == m)
        return support(l, [&](int i) { return i % 2 == 0; }) && (cover || even_at(l, n));
      if (!even_rank && el == m)
        return support(l, [&](int i) { return (i % 2 == 0 && i <= n - 3) || i >= n - 1; }) &&
               spinor_pair();
      return support(l, [&](int i) { return i % 2 == 0 && i <= 2 * el; });
    case Family::x_m_prime:
      if (!support(l, [&](int i) { return (i % 2 == 0 && i <= n - 2) || i == n - 1; }))
        return false;
      return cover || even_at(l, n - 1);
    case Family::z_ell:
      if (el == m) {
        if (even_rank) {
          if (cover) return true;
          return odd_sum_upto(l, n - 1) % 2 == 0 && (l[n - 2] + l[n - 1]) % 2 == 0;
        }
        if (!spinor_pair()) return false;
        return cover || odd_sum_upto(l, n - 2) % 2 == 0;
      }
      if (!support(l, [&](int i) { return i <= 2 * el; })) return false;
      return cover || odd_sum_upto(l, 2 * el - 1) % 2 == 0;
    case Family::exp_zeta_w1:
      return support(l, [&](int i) { return i <= 2; }) && even_at(l, 1);
    case Family::exp_pi_wl:
      if (el == m) {
        if (even_rank) return all_even_upto(l, n);
        return all_even_upto(l, n - 2) && spinor_pair();
      }
      return support(l, [&](int i) { return i <= 2 * el; }) && all_even_upto(l, 2 * el - 1);
    case Family::exp_zeta_wn:
      if (even_rank) return support(l, [&](int i) { return i % 2 == 0; }) && even_at(l, n);
      return support(l, [&](int i) { return (i % 2 == 0 && i <= n - 3) || i >= n - 1; }) &&
             spinor_pair();
    case Family::exp_zeta_wn1:
      return support(l, [&](int i) { return (i % 2 == 0 && i <= n - 2) || i == n - 1; }) &&
             even_at(l, n - 1);
    default:
      throw DomainError("table_D: unexpected family for " + c.id());
  }
}

bool table_exceptional(const ClassDescriptor& c, const Weight& l, bool cover) {
  const std::string& label = c.label;
  const char letter = c.group.letter;
  const int n = c.group.rank;
  if (letter == 'E' && n == 6) {
    bool symm16 = l[0] == l[5];
    bool symm35 = l[2] == l[4];
    if (label == "A1") return support(l, [](int i) { return i == 2; });
    if (label == "2A1") return support(l, [](int i) { return i == 1 || i == 2 || i == 6; }) && symm16;
    if (label == "3A1") return symm16 && symm35;
    if (label == "exp(pi i w2)") return symm16 && symm35 && even_at(l, 2) && even_at(l, 4);
    if (label == "exp(zeta w1)")
      return support(l, [](int i) { return i == 1 || i == 2 || i == 6; }) && symm16;
  }
  if (letter == 'E' && n == 7) {
    if (label == "A1") return support(l, [](int i) { return i == 1; });
    if (label == "2A1") return support(l, [](int i) { return i == 1 || i == 6; });
    if (label == "3A1''")
      return support(l, [](int i) { return i == 1 || i == 6 || i == 7; }) &&
             (cover || even_at(l, 7));
    if (label == "3A1'")
      return support(l, [](int i) { return i == 1 || i == 3 || i == 4 || i == 6; });
    if (label == "4A1") return cover || (l[1] + l[4] + l[6]) % 2 == 0;
    if (label == "exp(zeta w7)")
      return support(l, [](int i) { return i == 1 || i == 6 || i == 7; }) && even_at(l, 7);
    if (label == "exp(pi i w1)")
      return support(l, [](int i) { return i == 1 || i == 3 || i == 4 || i == 6; }) &&
             even_at(l, 1) && even_at(l, 3);
    if (label == "exp(pi i w2)") return all_even_upto(l, 7);
  }
  if (letter == 'E' && n == 8) {
    if (label == "A1") return support(l, [](int i) { return i == 8; });
    if (label == "2A1") return support(l, [](int i) { return i == 1 || i == 8; });
    if (label == "3A1")
      return support(l, [](int i) { return i == 1 || i == 6 || i == 7 || i == 8; });
    if (label == "4A1") return true;
    if (label == "exp(pi i w8)")
      return support(l, [](int i) { return i == 1 || i == 6 || i == 7 || i == 8; }) &&
             even_at(l, 7) && even_at(l, 8);
    if (label == "exp(pi i w1)") return all_even_upto(l, 8);
  }
  if (letter == 'F') {
    if (label == "A1") return support(l, [](int i) { return i == 1; });
    if (label == "A1tilde")
      return support(l, [](int i) { return i == 1 || i == 4; }) && (cover || even_at(l, 4));
    if (label == "A1+A1tilde") return even_at(l, 3) && even_at(l, 4);
    if (label == "exp(pi i w1)") return all_even_upto(l, 4);
    if (label == "exp(pi i w4)") return support(l, [](int i) { return i == 4; });
    if (label == "f2 x_b1") return true;
  }
  if (letter == 'G') {
    if (label == "A1") return support(l, [](int i) { return i == 2; });
    if (label == "A1tilde") return true;
    if (label == "exp(pi i w2)") return all_even_upto(l, 2);
    if (label == "exp(2pi i/3 w1)") return support(l, [](int i) { return i == 1; });
  }
  throw DomainError("no table predicate for " + c.id());
}

bool table_membership(const ClassDescriptor& c, const Weight& l, bool cover) {
  if ((l.array() < 0).any()) return false;
  switch (c.group.letter) {
    case 'A': return table_A(c, l, cover);
    case 'B': return table_B(c, l, cover);
    case 'C': return table_C(c, l, cover);
    case 'D': return table_D(c, l, cover);
    default: return table_exceptional(c, l, cover);
  }
}

}  // namespace

bool table_lambda_O(const ClassDescriptor& c, const Weight& lambda) {
  return table_membership(c, lambda, false);
}

bool table_lambda_O_hat(const ClassDescriptor& c, const Weight& lambda) {
  bool cover = c.kind == ClassKind::unipotent || c.kind == ClassKind::mixed;
  // Semisimple classes have connected centralizer, so the cover equals the
  // class and the tables print a single column.
  return table_membership(c, lambda, cover);
}

}  // namespace classring
