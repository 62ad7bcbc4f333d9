#pragma once

#include "classring/rootsys.hpp"

namespace classring {

/// Finite-order torus element exp(2 pi i q) with q rational in simple-coroot
/// coordinates, taken mod the coroot lattice (entries normalized to [0,1)).
/// lambda(t) = exp(2 pi i <lambda, q>) with <omega_i, alpha_j^vee> = delta_ij.
struct TorusPoint {
  std::vector<Rat> q;

  Eigen::Index size() const { return static_cast<Eigen::Index>(q.size()); }
  bool is_zero() const;
  Int order() const;  // lcm of denominators

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
  friend auto operator<=>(const TorusPoint&, const TorusPoint&) = default;
};

TorusPoint torus_point(std::vector<Rat> q);
/// t * (j-th simple coroot), i.e. h_{alpha_j}(exp(2 pi i t)); j is 1-based.
TorusPoint coroot_multiple(int n, int j, const Rat& t);
TorusPoint add(const TorusPoint& a, const TorusPoint& b);

/// <lambda, q> mod 1, in [0,1). Phase 0 means lambda(t) = 1.
Rat eval_phase(const Weight& lambda, const TorusPoint& t);

struct FiniteTorusSubgroup {
  std::vector<TorusPoint> generators;
};

bool trivial_on(const Weight& lambda, const FiniteTorusSubgroup& s);

/// All elements of the generated subgroup (BFS closure; groups here are tiny).
std::vector<TorusPoint> subgroup_elements(const FiniteTorusSubgroup& s, int n);
Int subgroup_order(const FiniteTorusSubgroup& s, int n);
bool subgroup_contains(const FiniteTorusSubgroup& s, const TorusPoint& t, int n);
/// Every generator of b lies in the subgroup generated by a.
bool subgroup_leq(const FiniteTorusSubgroup& b, const FiniteTorusSubgroup& a, int n);

/// Z(G) with the generators the tables use; order equals |P/Q|.
FiniteTorusSubgroup center(const RootSystem& rs);

/// Coweight with alpha_j(q) = delta_ij, exact (not reduced mod the coroot
/// lattice); j is 1-based.
std::vector<Rat> fundamental_coweight(const RootSystem& rs, int i);

/// dim ker(1 - w); w must be an involution.
int fixed_torus_rank(const RootSystem& rs, const WeylElement& w);
/// Elementary divisors > 1 of 1 - w, the component group of T^w.
std::vector<Int> component_group_of_Tw(const RootSystem& rs, const WeylElement& w);

}  // namespace classring
