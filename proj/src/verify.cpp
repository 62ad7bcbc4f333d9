#include "classring/verify.hpp"

#include <chrono>

#include <nlohmann/json.hpp>

namespace classring {

Variant parse_variant(const std::string& s, std::string* iso_tag) {
  std::string t = normalize_label(s);
  if (t == "o") return Variant::O;
  if (t == "cover" || t == "ohat" || t == "hat") return Variant::cover;
  if (t == "closure") return Variant::closure;
  if (t.rfind("isogeny:", 0) == 0) {
    if (iso_tag) *iso_tag = s.substr(s.find(':') + 1);
    return Variant::isogeny;
  }
  throw DomainError("unknown variant '" + s + "' (expected O, cover, closure or isogeny:<D>)");
}

std::string variant_name(Variant v, const std::string& iso_tag) {
  switch (v) {
    case Variant::O: return "O";
    case Variant::cover: return "cover";
    case Variant::closure: return "closure";
    case Variant::isogeny: return "isogeny:" + iso_tag;
  }
  return "?";
}

namespace {

bool closure_oracle(const ClassDescriptor& c, const Weight& l) {
  switch (c.closure_special) {
    case ClosureSpecial::none:
      break;
    case ClosureSpecial::b_odd_zmax: {
      // Union of the two printed constraint sets.
      const int n = c.group.rank;
      const int m = (n - 1) / 2;
      if (l[n - 1] == 0) {
        Int s = 0;
        for (int i = 1; i <= m; ++i) s += l[2 * i - 2];
        return s % 2 == 0;
      }
      return l[n - 1] % 2 == 0 && l[n - 1] >= 2;
    }
    case ClosureSpecial::g2_a1tilde:
      // Generated by 2w1, 3w1, w2.
      return l[0] != 1;
  }
  return oracle_membership(c, l, Variant::O);
}

}  // namespace

bool oracle_membership(const ClassDescriptor& c, const Weight& lambda, Variant v,
                       const std::string& iso_tag) {
  const int n = c.group.rank;
  if (lambda.size() != n) throw DomainError("oracle: weight of wrong rank");
  if ((lambda.array() < 0).any()) return false;
  if (v == Variant::closure) return closure_oracle(c, lambda);
  if (!(c.w.m * lambda + lambda).isZero(0)) return false;
  switch (v) {
    case Variant::O:
      return trivial_on(lambda, c.s_O);
    case Variant::cover:
      return trivial_on(lambda, c.s_O_hat);
    case Variant::isogeny:
      return trivial_on(lambda, c.isogeny(iso_tag).constraints);
    case Variant::closure:
      break;
  }
  return false;
}

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

void compare(VerificationReport& r, const Weight& l, const std::string& where, bool expected,
             bool got) {
  if (expected != got) r.mismatches.push_back({l, where, expected, got});
}

}  // namespace

VerificationReport verify_class(const ClassDescriptor& c, Int bound) {
  if (bound < 1) throw DomainError("verify_class: bound must be >= 1");
  Timer timer;
  VerificationReport r;
  r.class_id = c.id();
  r.checked_bound = bound;

  WeightMonoid mo = lambda_O(c);
  WeightMonoid mhat = lambda_O_hat(c);
  WeightMonoid mcl = lambda_closure(c);
  std::vector<std::pair<std::string, WeightMonoid>> iso;
  for (const IsogenyEntry& e : c.isogeny_entries)
    iso.emplace_back(e.d_tag, lambda_isogeny(c, e.d_tag));

  for (const Weight& l : dominant_by_sum(c.group.rank, bound)) {
    compare(r, l, "O", oracle_membership(c, l, Variant::O), mo.contains(l));
    compare(r, l, "cover", oracle_membership(c, l, Variant::cover), mhat.contains(l));
    compare(r, l, "closure", oracle_membership(c, l, Variant::closure), mcl.contains(l));
    for (auto& [tag, m] : iso)
      compare(r, l, "isogeny:" + tag, oracle_membership(c, l, Variant::isogeny, tag),
              m.contains(l));
  }
  r.elapsed_seconds = timer.seconds();
  return r;
}

VerificationReport verify_tables(const ClassDescriptor& c, Int bound) {
  if (bound < 1) throw DomainError("verify_tables: bound must be >= 1");
  Timer timer;
  VerificationReport r;
  r.class_id = c.id();
  r.checked_bound = bound;
  WeightMonoid mo = lambda_O(c);
  WeightMonoid mhat = lambda_O_hat(c);
  for (const Weight& l : dominant_by_sum(c.group.rank, bound)) {
    compare(r, l, "table:O", table_lambda_O(c, l), mo.contains(l));
    compare(r, l, "table:cover", table_lambda_O_hat(c, l), mhat.contains(l));
  }
  r.elapsed_seconds = timer.seconds();
  return r;
}

VerificationReport verify_minima(int rank_max) {
  Timer timer;
  VerificationReport r;
  r.class_id = "minima";
  r.checked_bound = rank_max;
  for (CartanType t : sweep_types(rank_max)) {
    const RootSystem& rs = root_system(t);
    for (const Root& beta : rs.positive_roots()) {
      bool expect_disconnected = (t.letter == 'A' && t.rank == 1) ||
                                 (t.letter == 'C' && rs.is_long(beta)) ||
                                 (t.letter == 'B' && t.rank == 2 && rs.is_long(beta));
      auto torsion = component_group_of_Tw(rs, rs.reflection_for_root(beta));
      bool got_disconnected = !torsion.empty();
      bool shape_ok = torsion.empty() || (torsion.size() == 1 && torsion[0] == 2);
      if (expect_disconnected != got_disconnected || !shape_ok) {
        Mismatch m;
        m.lambda = beta;
        m.where = t.name() + "/s_alpha";
        m.expected = expect_disconnected;
        m.got = got_disconnected;
        r.mismatches.push_back(std::move(m));
      }
    }
  }
  r.elapsed_seconds = timer.seconds();
  return r;
}

namespace {

nlohmann::json report_json(const VerificationReport& r) {
  nlohmann::json j;
  j["class"] = r.class_id;
  j["bound"] = r.checked_bound;
  j["pass"] = r.pass();
  j["elapsed_seconds"] = r.elapsed_seconds;
  j["mismatches"] = nlohmann::json::array();
  for (const Mismatch& m : r.mismatches) {
    nlohmann::json e;
    e["lambda"] = to_std(m.lambda);
    e["where"] = m.where;
    e["expected"] = m.expected;
    e["got"] = m.got;
    j["mismatches"].push_back(std::move(e));
  }
  return j;
}

}  // namespace

std::string report_to_json(const VerificationReport& r) { return report_json(r).dump(2); }

std::string reports_to_json(const std::vector<VerificationReport>& rs) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rs) j.push_back(report_json(r));
  return j.dump(2);
}

std::vector<CartanType> sweep_types(int rank_max) {
  std::vector<CartanType> out;
  for (int n = 1; n <= rank_max; ++n) out.push_back({'A', n});
  for (int n = 2; n <= rank_max; ++n) out.push_back({'B', n});
  for (int n = 2; n <= rank_max; ++n) out.push_back({'C', n});
  for (int n = 4; n <= rank_max; ++n) out.push_back({'D', n});
  for (int n = 6; n <= std::min(rank_max, 8); ++n) out.push_back({'E', n});
  if (rank_max >= 4) out.push_back({'F', 4});
  if (rank_max >= 2) out.push_back({'G', 2});
  return out;
}

}  // namespace classring
