#include "classring/intlat.hpp"

#include <limits>

namespace classring::intlat {

ZMat ZMat::identity(Eigen::Index n) {
  ZMat m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ZMat ZMat::from(const MatI& src) {
  ZMat m(src.rows(), src.cols());
  for (Eigen::Index i = 0; i < src.rows(); ++i)
    for (Eigen::Index j = 0; j < src.cols(); ++j) m(i, j) = src(i, j);
  return m;
}

void ZMat::swap_rows(Eigen::Index i, Eigen::Index j) {
  if (i == j) return;
  for (Eigen::Index k = 0; k < cols_; ++k) (*this)(i, k).swap((*this)(j, k));
}

void ZMat::swap_cols(Eigen::Index i, Eigen::Index j) {
  if (i == j) return;
  for (Eigen::Index k = 0; k < rows_; ++k) (*this)(k, i).swap((*this)(k, j));
}

void ZMat::add_row(Eigen::Index i, Eigen::Index j, const BigInt& c) {
  for (Eigen::Index k = 0; k < cols_; ++k) (*this)(i, k) += c * (*this)(j, k);
}

void ZMat::add_col(Eigen::Index i, Eigen::Index j, const BigInt& c) {
  for (Eigen::Index k = 0; k < rows_; ++k) (*this)(k, i) += c * (*this)(k, j);
}

void ZMat::negate_row(Eigen::Index i) {
  for (Eigen::Index k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

void ZMat::negate_col(Eigen::Index i) {
  for (Eigen::Index k = 0; k < rows_; ++k) (*this)(k, i) = -(*this)(k, i);
}

ZMat ZMat::col(Eigen::Index j) const {
  ZMat c(rows_, 1);
  for (Eigen::Index i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
  return c;
}

MatI ZMat::to_int() const {
  MatI m(rows_, cols_);
  const BigInt lo = std::numeric_limits<Int>::min();
  const BigInt hi = std::numeric_limits<Int>::max();
  for (Eigen::Index i = 0; i < rows_; ++i)
    for (Eigen::Index j = 0; j < cols_; ++j) {
      const BigInt& e = (*this)(i, j);
      if (e < lo || e > hi) throw DomainError("intlat: entry does not fit in machine integer");
      m(i, j) = static_cast<Int>(e);
    }
  return m;
}

ZMat operator*(const ZMat& a, const ZMat& b) {
  if (a.cols() != b.rows()) throw DomainError("intlat: dimension mismatch in product");
  ZMat c(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::vector<BigInt> SmithDecomposition::divisors() const {
  const Eigen::Index k = std::min(d.rows(), d.cols());
  std::vector<BigInt> out(static_cast<std::size_t>(k));
  for (Eigen::Index i = 0; i < k; ++i) out[static_cast<std::size_t>(i)] = d(i, i);
  return out;
}

Eigen::Index SmithDecomposition::rank() const {
  Eigen::Index r = 0;
  for (const auto& e : divisors())
    if (e != 0) ++r;
  return r;
}

namespace {

// Pivot rule: smallest nonzero absolute value in the trailing submatrix,
// ties broken row-major.
bool find_pivot(const ZMat& d, Eigen::Index s, Eigen::Index& pi, Eigen::Index& pj) {
  bool found = false;
  BigInt best;
  for (Eigen::Index i = s; i < d.rows(); ++i)
    for (Eigen::Index j = s; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      BigInt a = abs(d(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

bool cross_clear(const ZMat& d, Eigen::Index s) {
  for (Eigen::Index i = s + 1; i < d.rows(); ++i)
    if (d(i, s) != 0) return false;
  for (Eigen::Index j = s + 1; j < d.cols(); ++j)
    if (d(s, j) != 0) return false;
  return true;
}

}  // namespace

SmithDecomposition smith_normal_form(const ZMat& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  SmithDecomposition s;
  s.d = m;
  s.u = ZMat::identity(rows);
  s.u_inv = ZMat::identity(rows);
  s.v = ZMat::identity(cols);
  ZMat& d = s.d;

  const Eigen::Index steps = std::min(rows, cols);
  for (Eigen::Index t = 0; t < steps; ++t) {
    for (;;) {
      Eigen::Index pi, pj;
      if (!find_pivot(d, t, pi, pj)) break;
      d.swap_rows(t, pi);
      s.u.swap_rows(t, pi);
      s.u_inv.swap_cols(t, pi);
      d.swap_cols(t, pj);
      s.v.swap_cols(t, pj);

      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        BigInt q = d(i, t) / d(t, t);
        d.add_row(i, t, -q);
        s.u.add_row(i, t, -q);
        s.u_inv.add_col(t, i, q);
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        BigInt q = d(t, j) / d(t, t);
        d.add_col(j, t, -q);
        s.v.add_col(j, t, -q);
      }
      if (!cross_clear(d, t)) continue;

      // Pivot isolated; restart the step if it fails to divide the rest.
      bool divides_all = true;
      for (Eigen::Index i = t + 1; i < rows && divides_all; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row(t, i, 1);
            s.u.add_row(t, i, 1);
            s.u_inv.add_col(i, t, BigInt(-1));
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.u.negate_row(t);
      s.u_inv.negate_col(t);
    }
  }
  return s;
}

SmithDecomposition smith_normal_form(const MatI& m) { return smith_normal_form(ZMat::from(m)); }

ZMat image_basis(const MatI& m) {
  SmithDecomposition s = smith_normal_form(m);
  const Eigen::Index r = s.rank();
  ZMat out(m.rows(), r);
  for (Eigen::Index j = 0; j < r; ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) out(i, j) = s.u_inv(i, j) * s.d(j, j);
  return out;
}

ZMat kernel_basis(const MatI& m) {
  SmithDecomposition s = smith_normal_form(m);
  const Eigen::Index r = s.rank();
  ZMat out(m.cols(), m.cols() - r);
  for (Eigen::Index j = r; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.cols(); ++i) out(i, j - r) = s.v(i, j);
  return out;
}

std::vector<BigInt> quotient_torsion(const MatI& m) {
  if (m.rows() != m.cols()) throw DomainError("intlat: quotient_torsion needs a square matrix");
  std::vector<BigInt> out;
  for (const auto& e : smith_normal_form(m).divisors())
    if (e != 0 && e != 1) out.push_back(e);
  return out;
}

Eigen::Index rank(const MatI& m) { return smith_normal_form(m).rank(); }

BigInt determinant(const ZMat& m) {
  if (m.rows() != m.cols()) throw DomainError("intlat: determinant needs a square matrix");
  // Bareiss fraction-free elimination.
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  ZMat a = m;
  BigInt prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool in_lattice(const ZMat& gens, const ZMat& v) {
  if (v.cols() != 1 || v.rows() != gens.rows()) throw DomainError("intlat: bad vector shape");
  SmithDecomposition s = smith_normal_form(gens);
  ZMat y = s.u * v;
  const Eigen::Index k = std::min(gens.rows(), gens.cols());
  for (Eigen::Index i = 0; i < gens.rows(); ++i) {
    if (i < k && s.d(i, i) != 0) {
      if (y(i, 0) % s.d(i, i) != 0) return false;
    } else if (y(i, 0) != 0) {
      return false;
    }
  }
  return true;
}

bool in_lattice(const MatI& gens, const VecI& v) {
  ZMat w(v.size(), 1);
  for (Eigen::Index i = 0; i < v.size(); ++i) w(i, 0) = v[i];
  return in_lattice(ZMat::from(gens), w);
}

bool lattice_equal(const ZMat& a, const ZMat& b) {
  if (a.rows() != b.rows()) return false;
  for (Eigen::Index j = 0; j < b.cols(); ++j)
    if (!in_lattice(a, b.col(j))) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    if (!in_lattice(b, a.col(j))) return false;
  return true;
}

bool lattice_equal(const MatI& a, const MatI& b) {
  return lattice_equal(ZMat::from(a), ZMat::from(b));
}

LatticeMembership::LatticeMembership(const MatI& gens) {
  SmithDecomposition s = smith_normal_form(gens);
  u_ = s.u.to_int();
  rank_ = s.rank();
  for (const auto& e : s.divisors()) {
    if (e > std::numeric_limits<Int>::max()) throw DomainError("intlat: divisor overflow");
    d_.push_back(static_cast<Int>(e));
  }
}

bool LatticeMembership::contains(const VecI& v) const {
  const Eigen::Index rows = u_.rows();
  for (Eigen::Index i = 0; i < rows; ++i) {
    Int y = 0;
    for (Eigen::Index j = 0; j < rows; ++j) y += u_(i, j) * v[j];
    const Int di = i < static_cast<Eigen::Index>(d_.size()) ? d_[static_cast<std::size_t>(i)] : 0;
    if (di != 0) {
      if (y % di != 0) return false;
    } else if (y != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace classring::intlat
