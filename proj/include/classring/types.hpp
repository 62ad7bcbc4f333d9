#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

namespace classring {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using MatI = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using VecI = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

/// Weight in fundamental-weight (omega) coordinates.
using Weight = VecI;
/// Root in simple-root (alpha) coordinates.
using Root = VecI;

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::vector<Int> to_std(const VecI& v) {
  return std::vector<Int>(v.data(), v.data() + v.size());
}

inline VecI from_std(const std::vector<Int>& v) {
  VecI out(static_cast<Eigen::Index>(v.size()));
  for (Eigen::Index i = 0; i < out.size(); ++i) out[i] = v[static_cast<std::size_t>(i)];
  return out;
}

}  // namespace classring
