#include <doctest.h>

#include <random>

#include "classring/intlat.hpp"

using namespace classring;
using namespace classring::intlat;

namespace {

MatI mat(std::initializer_list<std::initializer_list<Int>> rows) {
  MatI m(static_cast<Eigen::Index>(rows.size()),
         static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (Int v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

void check_decomposition(const MatI& m) {
  SmithDecomposition s = smith_normal_form(m);
  CHECK(s.u * ZMat::from(m) * s.v == s.d);
  CHECK(s.u * s.u_inv == ZMat::identity(m.rows()));
  BigInt du = determinant(s.u), dv = determinant(s.v);
  CHECK(abs(du) == 1);
  CHECK(abs(dv) == 1);
  auto div = s.divisors();
  for (std::size_t i = 0; i + 1 < div.size(); ++i) {
    CHECK(div[i] >= 0);
    if (div[i] != 0) {
      if (div[i + 1] != 0) CHECK(div[i + 1] % div[i] == 0);
    } else {
      CHECK(div[i + 1] == 0);
    }
  }
  // off-diagonal zero
  for (Eigen::Index i = 0; i < s.d.rows(); ++i)
    for (Eigen::Index j = 0; j < s.d.cols(); ++j)
      if (i != j) CHECK(s.d(i, j) == 0);
}

}  // namespace

TEST_CASE("smith normal form of diag(2,2)") {
  MatI m = mat({{2, 0}, {0, 2}});
  SmithDecomposition s = smith_normal_form(m);
  CHECK(s.d == ZMat::from(m));
  CHECK(s.u == ZMat::identity(2));
  CHECK(s.v == ZMat::identity(2));
}

TEST_CASE("smith normal form of 1 - s_1 in A_2 omega-coordinates") {
  // columns (2,-1) and (0,0)
  MatI m = mat({{2, 0}, {-1, 0}});
  auto div = smith_normal_form(m).divisors();
  REQUIRE(div.size() == 2);
  CHECK(div[0] == 1);
  CHECK(div[1] == 0);
  check_decomposition(m);
}

TEST_CASE("smith normal form of 2I") {
  for (int n : {1, 3, 8}) {
    MatI m = 2 * MatI::Identity(n, n);
    auto div = smith_normal_form(m).divisors();
    for (const auto& d : div) CHECK(d == 2);
  }
}

TEST_CASE("empty matrix is allowed") {
  MatI m(0, 0);
  SmithDecomposition s = smith_normal_form(m);
  CHECK(s.divisors().empty());
  CHECK(s.rank() == 0);
}

TEST_CASE("image and kernel bases") {
  MatI m = mat({{2, 0, 2}, {0, 3, 3}, {0, 0, 0}});
  ZMat img = image_basis(m);
  ZMat ker = kernel_basis(m);
  CHECK(img.cols() + ker.cols() == 3);
  // every image generator is a Z-combination of the columns of m and back
  ZMat cols = ZMat::from(m);
  CHECK(lattice_equal(img, cols));
  // kernel vectors are annihilated
  for (Eigen::Index j = 0; j < ker.cols(); ++j) {
    ZMat v = ZMat::from(m) * ker.col(j);
    for (Eigen::Index i = 0; i < v.rows(); ++i) CHECK(v(i, 0) == 0);
  }
}

TEST_CASE("quotient torsion") {
  CHECK(quotient_torsion(mat({{2}})) == std::vector<BigInt>{2});
  CHECK(quotient_torsion(mat({{1, 0}, {0, 1}})).empty());
  CHECK(quotient_torsion(mat({{2, 0}, {-1, 0}})).empty());  // divisors 1, 0
  CHECK(quotient_torsion(mat({{2, 0}, {0, 6}})) == std::vector<BigInt>({2, 6}));
}

TEST_CASE("lattice membership") {
  MatI gens = mat({{2, 1}, {0, 1}});
  CHECK(in_lattice(gens, from_std({1, 1})));
  CHECK(in_lattice(gens, from_std({3, 1})));
  CHECK(!in_lattice(gens, from_std({1, 0})));
  LatticeMembership fast(gens);
  CHECK(fast.contains(from_std({1, 1})));
  CHECK(fast.contains(from_std({3, 1})));
  CHECK(!fast.contains(from_std({1, 0})));

  MatI a = mat({{1, 0}, {0, 1}});
  MatI b = mat({{1, 1}, {0, 1}});
  CHECK(lattice_equal(a, b));
  CHECK(!lattice_equal(a, mat({{2, 0}, {0, 1}})));
}

TEST_CASE("random matrices satisfy the decomposition invariants") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<Int> entry(-9, 9);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    MatI m(dim(rng), dim(rng));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    check_decomposition(m);
    if (m.rows() == m.cols()) {
      SmithDecomposition s = smith_normal_form(m);
      CHECK(static_cast<Eigen::Index>(kernel_basis(m).cols()) + s.rank() == m.cols());
    }
  }
}
