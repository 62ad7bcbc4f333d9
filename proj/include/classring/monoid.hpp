#pragma once

#include <functional>

#include "classring/catalog.hpp"

namespace classring {

/// Finitely generated submonoid of P^+. The congruence kind is cut out of the
/// free monoid on ambient_basis by triviality conditions; the two closure
/// kinds carry the printed exceptional predicates; the generated kind is
/// defined by its generator list alone.
class WeightMonoid {
 public:
  enum class Kind { congruence, closure_b_odd, closure_g2, generated };

  static WeightMonoid congruence(std::vector<Weight> basis, FiniteTorusSubgroup constraints);
  static WeightMonoid from_generators(std::vector<Weight> gens);
  static WeightMonoid b_odd_closure(int n);
  static WeightMonoid g2_closure();

  Kind kind() const { return kind_; }
  int rank() const { return rank_; }
  const std::vector<Weight>& ambient_basis() const { return basis_; }
  const FiniteTorusSubgroup& constraints() const { return constraints_; }
  /// Hilbert basis, graded-lex on omega-coordinates.
  const std::vector<Weight>& generators() const { return generators_; }

  bool contains(const Weight& lambda) const;

 private:
  WeightMonoid() = default;
  void compute_generators();
  bool phases_trivial(const Weight& lambda) const;
  bool in_free_monoid_on_basis(const Weight& lambda) const;
  bool decompose_in_basis(const Weight& lambda, std::vector<Int>& coeff) const;
  bool n_combination_of_generators(const Weight& lambda) const;

  // <lambda, q> in Z  <=>  num . lambda = 0 mod den
  struct FastConstraint {
    std::vector<Int> num;
    Int den = 1;
  };

  Kind kind_ = Kind::congruence;
  int rank_ = 0;
  std::vector<Weight> basis_;
  FiniteTorusSubgroup constraints_;
  std::vector<FastConstraint> fast_constraints_;
  std::vector<Weight> generators_;
  bool disjoint_01_basis_ = false;
  std::vector<int> owner_;      // coordinate -> basis index, -1 outside supports
  std::vector<int> basis_rep_;  // basis index -> a representative coordinate
};

/// {omega_S : S a theta-orbit in Pi \ J}; J must be theta-invariant.
std::vector<Weight> pwplus_basis(const RootSystem& rs, const std::vector<int>& j_set);

WeightMonoid constrained_monoid(std::vector<Weight> basis, const FiniteTorusSubgroup& s);

WeightMonoid lambda_O(const ClassDescriptor& c);
WeightMonoid lambda_O_hat(const ClassDescriptor& c);
WeightMonoid lambda_closure(const ClassDescriptor& c);
WeightMonoid lambda_isogeny(const ClassDescriptor& c, const std::string& d_tag);

/// True when every dominant weight with coordinates <= bound lying in the
/// group generated by the monoid's generators lies in the monoid itself.
bool saturation_check(const WeightMonoid& m, Int bound);

/// Checks 2 P^+_w <= (1-w) P^+ <= lambda(closure) <= lambda(O) <= lambda(cover)
/// <= P^+_w on the dominant box with coordinates <= bound.
bool chain_check(const ClassDescriptor& c, Int bound);

/// l(w) + rk(1 - w).
Int class_dimension(const ClassDescriptor& c);

/// True when lambda(O) is generated by all the fundamental weights, i.e.
/// every simple module occurs exactly once in the coordinate ring.
bool is_model(const ClassDescriptor& c);

void for_each_dominant_box(int n, Int bound, const std::function<void(const Weight&)>& f);
std::vector<Weight> dominant_by_sum(int n, Int bound);

}  // namespace classring
