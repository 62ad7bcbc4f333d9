#pragma once

#include "classring/types.hpp"

namespace classring::intlat {

/// Dense matrix over arbitrary-precision integers. Intermediate entries of a
/// Smith reduction can overflow machine words, so everything in this module
/// computes in BigInt regardless of the input scalar.
class ZMat {
 public:
  ZMat() = default;
  ZMat(Eigen::Index rows, Eigen::Index cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {}

  static ZMat identity(Eigen::Index n);
  static ZMat from(const MatI& m);

  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }

  BigInt& operator()(Eigen::Index i, Eigen::Index j) {
    return a_[static_cast<std::size_t>(i * cols_ + j)];
  }
  const BigInt& operator()(Eigen::Index i, Eigen::Index j) const {
    return a_[static_cast<std::size_t>(i * cols_ + j)];
  }

  void swap_rows(Eigen::Index i, Eigen::Index j);
  void swap_cols(Eigen::Index i, Eigen::Index j);
  /// row i += c * row j
  void add_row(Eigen::Index i, Eigen::Index j, const BigInt& c);
  /// col i += c * col j
  void add_col(Eigen::Index i, Eigen::Index j, const BigInt& c);
  void negate_row(Eigen::Index i);
  void negate_col(Eigen::Index i);

  ZMat col(Eigen::Index j) const;

  /// Checked narrowing; throws DomainError if an entry exceeds Int range.
  MatI to_int() const;

  bool operator==(const ZMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

 private:
  Eigen::Index rows_ = 0, cols_ = 0;
  std::vector<BigInt> a_;
};

ZMat operator*(const ZMat& a, const ZMat& b);

/// u * m * v = d with u, v unimodular, d diagonal, d(i,i) >= 0 and
/// d(0,0) | d(1,1) | ... . u_inv is accumulated during the reduction so the
/// image lattice can be read off without a separate inversion.
struct SmithDecomposition {
  ZMat d, u, v, u_inv;
  std::vector<BigInt> divisors() const;
  Eigen::Index rank() const;
};

SmithDecomposition smith_normal_form(const ZMat& m);
SmithDecomposition smith_normal_form(const MatI& m);

/// Columns form a lattice basis of the image (resp. kernel) of m over Z.
ZMat image_basis(const MatI& m);
ZMat kernel_basis(const MatI& m);

/// Elementary divisors of m that are neither 0 nor 1.
std::vector<BigInt> quotient_torsion(const MatI& m);

Eigen::Index rank(const MatI& m);

BigInt determinant(const ZMat& m);

/// Does v lie in the lattice spanned by the columns of gens?
bool in_lattice(const ZMat& gens, const ZMat& v);
bool in_lattice(const MatI& gens, const VecI& v);
bool lattice_equal(const ZMat& a, const ZMat& b);
bool lattice_equal(const MatI& a, const MatI& b);

/// Repeated membership tests against one fixed lattice, in machine integers.
/// Valid whenever the reduced transform of the generator matrix fits in Int,
/// which holds for every lattice this project builds (rank <= 8, small data);
/// construction throws otherwise.
class LatticeMembership {
 public:
  explicit LatticeMembership(const MatI& gens);
  bool contains(const VecI& v) const;
  Eigen::Index lattice_rank() const { return rank_; }

 private:
  MatI u_;
  std::vector<Int> d_;
  Eigen::Index rank_ = 0;
};

}  // namespace classring::intlat
