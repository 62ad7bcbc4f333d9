#pragma once

#include <map>
#include <optional>

#include "classring/types.hpp"

namespace classring {

/// Simple type in Bourbaki numbering. Admissible ranks: A n>=1, B n>=2,
/// C n>=2, D n>=4, E 6..8, F 4, G 2.
struct CartanType {
  char letter = 'A';
  int rank = 1;

  bool admissible() const;
  std::string name() const;
  /// Parses "C3", "E_7", "d4" (case-insensitive, optional underscore).
  static CartanType parse(const std::string& s);

  friend bool operator==(const CartanType&, const CartanType&) = default;
  friend auto operator<=>(const CartanType&, const CartanType&) = default;
};

/// Integer matrix acting on weights in omega-coordinates.
struct WeylElement {
  MatI m;

  Weight apply(const Weight& w) const { return m * w; }
  WeylElement operator*(const WeylElement& o) const { return {m * o.m}; }
  bool operator==(const WeylElement& o) const { return m == o.m; }
  bool is_identity() const { return m.isIdentity(); }
  bool is_involution() const { return (m * m).isIdentity(); }
  int order() const;
  WeylElement inverse() const;
};

class RootSystem {
 public:
  explicit RootSystem(CartanType t);

  const CartanType& type() const { return type_; }
  int rank() const { return n_; }

  /// Cartan matrix with the convention s_j(alpha_i) = alpha_i - a_ij alpha_j,
  /// i.e. a_ij = <alpha_i, alpha_j^vee>.
  const MatI& cartan() const { return cartan_; }
  /// Coprime positive d_i with diag(d) * cartan symmetric.
  const VecI& symmetrizers() const { return sym_; }

  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& highest_root() const { return positive_.back(); }

  /// omega-coordinates of a vector given in alpha-coordinates.
  Weight root_to_weight(const Root& r) const { return cartan_.transpose() * r; }
  Root simple_root(int i) const;

  bool is_root(const Root& r) const;
  /// +k / -k when w is +/- the k-th positive root (1-based), 0 otherwise.
  int classify_weight_as_root(const Weight& w) const;
  /// Scaled squared length; equal values mean equal length.
  Int norm2(const Root& r) const;
  bool is_long(const Root& r) const;

  WeylElement identity() const;
  WeylElement simple_reflection(int i) const;
  WeylElement reflection_for_root(const Root& beta) const;
  WeylElement longest_element() const;
  WeylElement parabolic_longest(const std::vector<int>& j_set) const;

  int length(const WeylElement& w) const;
  /// Diagram symmetry induced by -w0: w0(alpha_i) = -alpha_{theta(i)} (1-based).
  const std::vector<int>& theta() const { return theta_; }
  bool theta_invariant(const std::vector<int>& j_set) const;

  /// All roots beta with w(beta) = -beta; w must be an involution.
  std::vector<Root> minus_fixed_roots(const WeylElement& w) const;

  /// True when the image of every root under w is a root.
  bool permutes_roots(const WeylElement& w) const;

 private:
  CartanType type_;
  int n_;
  MatI cartan_;
  VecI sym_;
  VecI norm_half_;  // m_j with (alpha_j, alpha_j) = 2 m_j in scaled units
  MatI gram_;       // gram_jk = (alpha_j, alpha_k), scaled
  std::vector<Root> positive_;
  std::vector<Weight> positive_omega_;
  std::map<std::vector<Int>, int> by_omega_;  // omega-coords -> signed index
  std::map<std::vector<Int>, int> by_alpha_;  // alpha-coords of positives -> index
  std::vector<int> theta_;
  Int max_norm2_;
};

/// Shared immutable instance per type (root systems are pure data).
const RootSystem& root_system(CartanType t);

std::string weight_to_string(const Weight& w);
Weight parse_weight(const std::string& s, int rank);

}  // namespace classring
