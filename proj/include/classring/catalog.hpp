#pragma once

#include "classring/torus.hpp"

namespace classring {

enum class ClassKind { unipotent, semisimple, mixed };
enum class ClosureSpecial { none, b_odd_zmax, g2_a1tilde };

/// Family tag of the row a class comes from; the verify module keys its
/// independent table predicates on this.
enum class Family {
  x_ell,
  z_ell,
  x_m_prime,
  exp_zeta_wl,    // A_n only, param = l
  exp_zeta_w1,
  exp_zeta_wn,
  exp_zeta_wn1,   // D_{2m} only: exp(zeta w_{n-1})
  exp_pi_wl,      // param = l
  sigma_x_an,     // C_n, param = k
  sigma_x_b1,     // C_n, param = k
  sigma_x_blist,  // B_n, param = l
  exceptional,
};

struct IsogenyEntry {
  std::string d_tag;  // central subgroup label, e.g. "Z", "Z:pi", "Z:generic"
  /// Generators of a supplement of (T^w)^o in T_{x,D}; triviality on these
  /// cuts the quotient-group monoid out of P^+_w.
  FiniteTorusSubgroup constraints;
};

/// One spherical conjugacy class with the data of its table row.
struct ClassDescriptor {
  CartanType group;
  std::string label;
  ClassKind kind = ClassKind::unipotent;
  Family family = Family::exceptional;
  int family_param = 0;
  std::vector<int> j_set;  // 1-based, sorted
  std::vector<Root> w_factors;
  FiniteTorusSubgroup s_O;
  FiniteTorusSubgroup s_O_hat;
  bool normal_closure = true;
  ClosureSpecial closure_special = ClosureSpecial::none;
  std::vector<IsogenyEntry> isogeny_entries;

  WeylElement w;  // product of the reflections in the w_factors

  std::string id() const { return group.name() + "/" + label; }
  const IsogenyEntry& isogeny(const std::string& d_tag) const;
};

/// All non-central spherical classes of the given simple type. Built once,
/// validated against the structural invariants, then cached.
const std::vector<ClassDescriptor>& instantiate(CartanType t);

const ClassDescriptor& lookup(CartanType t, const std::string& label);

/// |<s_O>| / |<s_O_hat>|, the order of C(x)/C(x)^o.
Int centralizer_component_order(const ClassDescriptor& c);

/// Case-insensitive, ignores spaces and underscores.
std::string normalize_label(const std::string& s);

std::string data_dir();
void set_data_dir(const std::string& dir);

namespace catalog_detail {
void build_classical(const RootSystem& rs, std::vector<ClassDescriptor>& out);
void finalize(const RootSystem& rs, ClassDescriptor& c);
}  // namespace catalog_detail

}  // namespace classring
