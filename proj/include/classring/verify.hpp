#pragma once

#include "classring/monoid.hpp"

namespace classring {

enum class Variant { O, cover, closure, isogeny };

/// "O", "cover", "closure" or "isogeny:<D>"; fills iso_tag for the last form.
Variant parse_variant(const std::string& s, std::string* iso_tag = nullptr);
std::string variant_name(Variant v, const std::string& iso_tag = "");

/// First-principles membership: the matrix condition (1+w)lambda = 0 plus
/// triviality of lambda on the class's torus data. Never consults the
/// Hilbert-basis engine; lambda must be dominant.
bool oracle_membership(const ClassDescriptor& c, const Weight& lambda, Variant v,
                       const std::string& iso_tag = "");

struct Mismatch {
  Weight lambda;
  std::string where;  // variant or check name
  bool expected = false;
  bool got = false;
};

struct VerificationReport {
  std::string class_id;
  Int checked_bound = 0;
  std::vector<Mismatch> mismatches;
  double elapsed_seconds = 0.0;

  bool pass() const { return mismatches.empty(); }
};

/// Monoid-engine membership vs the oracle on every dominant weight with
/// coefficient sum <= bound, over all variants the class carries.
VerificationReport verify_class(const ClassDescriptor& c, Int bound);

/// Monoid-engine membership vs the printed table formulas (verbatim
/// transcriptions, keyed by family tag) on the same sweep.
VerificationReport verify_tables(const ClassDescriptor& c, Int bound);

/// Connectedness of T^{s_alpha} over every root of every type of rank <=
/// rank_max against the three printed exceptions.
VerificationReport verify_minima(int rank_max = 8);

std::string report_to_json(const VerificationReport& r);
std::string reports_to_json(const std::vector<VerificationReport>& rs);

/// A1..A{rank_max}, B2.., C2.., D4.., E6, E7, E8, F4, G2.
std::vector<CartanType> sweep_types(int rank_max = 8);

/// Direct transcriptions of the printed lambda(O) / lambda(cover) tables,
/// one coefficient predicate per family row. Independent of the torus data
/// stored in the descriptor.
bool table_lambda_O(const ClassDescriptor& c, const Weight& lambda);
bool table_lambda_O_hat(const ClassDescriptor& c, const Weight& lambda);

}  // namespace classring
