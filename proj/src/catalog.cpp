#include "classring/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "classring/intlat.hpp"

namespace classring {

namespace {

std::string g_data_dir = CLASSRING_DATA_DIR;

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(BigInt(s));
  return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

TorusPoint point_from_json(const nlohmann::json& arr, int n) {
  if (static_cast<int>(arr.size()) != n)
    throw DomainError("catalog data: torus point has wrong rank");
  std::vector<Rat> q;
  for (const auto& e : arr) q.push_back(parse_rat(e.get<std::string>()));
  return torus_point(std::move(q));
}

std::vector<TorusPoint> points_from_json(const nlohmann::json& arr, int n) {
  std::vector<TorusPoint> out;
  for (const auto& e : arr) out.push_back(point_from_json(e, n));
  return out;
}

void load_exceptional(const RootSystem& rs, std::vector<ClassDescriptor>& out) {
  std::string path = g_data_dir + "/";
  for (char c : rs.type().name()) path.push_back(static_cast<char>(std::tolower(c)));
  path += ".json";
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open catalog data file " + path);
  nlohmann::json doc = nlohmann::json::parse(in);
  if (doc.at("group").get<std::string>() != rs.type().name())
    throw DomainError("catalog data file " + path + " is for the wrong group");
  const int n = rs.rank();
  for (const auto& jc : doc.at("classes")) {
    ClassDescriptor c;
    c.group = rs.type();
    c.label = jc.at("label").get<std::string>();
    std::string kind = jc.at("kind").get<std::string>();
    c.kind = kind == "unipotent"    ? ClassKind::unipotent
             : kind == "semisimple" ? ClassKind::semisimple
             : kind == "mixed"      ? ClassKind::mixed
                                    : throw DomainError("bad kind in " + path);
    c.family = Family::exceptional;
    c.j_set = jc.at("J").get<std::vector<int>>();
    for (const auto& f : jc.at("w_factors")) {
      std::vector<Int> coords = f.get<std::vector<Int>>();
      if (static_cast<int>(coords.size()) != n)
        throw DomainError("catalog data: root of wrong rank in " + path);
      c.w_factors.push_back(from_std(coords));
    }
    c.s_O.generators = points_from_json(jc.at("s_O"), n);
    if (jc.at("s_O_hat").is_null())
      c.s_O_hat = c.s_O;
    else
      c.s_O_hat.generators = points_from_json(jc.at("s_O_hat"), n);
    c.normal_closure = jc.at("normal").get<bool>();
    if (!jc.at("closure_special").is_null()) {
      std::string tag = jc.at("closure_special").get<std::string>();
      if (tag == "g2_a1tilde")
        c.closure_special = ClosureSpecial::g2_a1tilde;
      else if (tag == "b_odd_zmax")
        c.closure_special = ClosureSpecial::b_odd_zmax;
      else
        throw DomainError("bad closure_special in " + path);
    }
    for (const auto& je : jc.at("isogeny")) {
      IsogenyEntry e;
      e.d_tag = je.at("D").get<std::string>();
      e.constraints.generators = points_from_json(je.at("gens"), n);
      c.isogeny_entries.push_back(std::move(e));
    }
    out.push_back(std::move(c));
  }
}

void validate(const RootSystem& rs, const ClassDescriptor& c) {
  const int n = rs.rank();
  auto fail = [&](const std::string& what) {
    throw DomainError("catalog invariant failed for " + c.id() + ": " + what);
  };

  for (const Root& f : c.w_factors)
    if (!rs.is_root(f)) fail("w-factor " + weight_to_string(f) + " is not a root");
  for (int j : c.j_set)
    if (j < 1 || j > n) fail("J index out of range");
  if (!rs.theta_invariant(c.j_set)) fail("J is not theta-invariant");

  if (!c.w.is_involution()) fail("w is not an involution");
  WeylElement w0wj = rs.longest_element() * rs.parabolic_longest(c.j_set);
  if (!(c.w == w0wj)) fail("w differs from w0 * w_J");

  MatI one_minus = MatI::Identity(n, n) - c.w.m;
  Int dim = rs.length(c.w) + static_cast<Int>(intlat::rank(one_minus));
  if (dim % 2 != 0) fail("l(w) + rk(1-w) is odd");

  for (const TorusPoint& t : c.s_O.generators)
    if (t.size() != n || t.order() > 2) fail("s_O generator of order > 2");
  for (const TorusPoint& t : c.s_O_hat.generators)
    if (t.size() != n || t.order() > 2) fail("s_O_hat generator of order > 2");
  if (!subgroup_leq(c.s_O_hat, c.s_O, n)) fail("<s_O_hat> is not contained in <s_O>");

  for (const IsogenyEntry& e : c.isogeny_entries)
    for (const TorusPoint& t : e.constraints.generators)
      if (t.size() != n || t.order() > 4) fail("isogeny constraint of order > 4");

  // Constraints must actually live in T^w: w must fix each generator mod the
  // coroot lattice, or triviality on them would not cut inside P^+_w coherently.
  for (const TorusPoint& t : c.s_O.generators) {
    // w acts on cocharacters by the transpose inverse; for an involution on
    // a lattice point q this is integrality of (1-w^T) q.
    std::vector<Rat> img(static_cast<std::size_t>(n), Rat(0));
    for (int i = 0; i < n; ++i) {
      Rat acc(0);
      for (int j = 0; j < n; ++j) acc += Rat(c.w.m(j, i)) * t.q[static_cast<std::size_t>(j)];
      img[static_cast<std::size_t>(i)] = acc - t.q[static_cast<std::size_t>(i)];
    }
    for (const Rat& x : img)
      if (denominator(x) != 1) fail("s_O generator is not fixed by w");
  }
}

const std::vector<ClassDescriptor>& instances(CartanType t) {
  static std::mutex mu;
  static std::map<CartanType, std::vector<ClassDescriptor>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it != cache.end()) return it->second;

  const RootSystem& rs = root_system(t);
  std::vector<ClassDescriptor> out;
  if (t.letter == 'A' || t.letter == 'B' || t.letter == 'C' || t.letter == 'D')
    catalog_detail::build_classical(rs, out);
  else
    load_exceptional(rs, out);

  std::map<std::string, int> labels;
  for (ClassDescriptor& c : out) {
    catalog_detail::finalize(rs, c);
    validate(rs, c);
    if (++labels[normalize_label(c.label)] > 1)
      throw DomainError("duplicate label " + c.label + " in " + t.name());
  }
  return cache.emplace(t, std::move(out)).first->second;
}

}  // namespace

namespace catalog_detail {

void finalize(const RootSystem& rs, ClassDescriptor& c) {
  std::sort(c.j_set.begin(), c.j_set.end());
  c.w = rs.identity();
  for (const Root& f : c.w_factors) c.w = c.w * rs.reflection_for_root(f);
}

}  // namespace catalog_detail

const IsogenyEntry& ClassDescriptor::isogeny(const std::string& d_tag) const {
  std::string want = normalize_label(d_tag);
  const IsogenyEntry* hit = nullptr;
  int prefix_hits = 0;
  const IsogenyEntry* prefix_hit = nullptr;
  for (const IsogenyEntry& e : isogeny_entries) {
    std::string have = normalize_label(e.d_tag);
    if (have == want) {
      hit = &e;
      break;
    }
    if (have.rfind(want, 0) == 0) {
      ++prefix_hits;
      prefix_hit = &e;
    }
  }
  if (!hit && prefix_hits == 1) hit = prefix_hit;
  if (!hit) {
    std::ostringstream os;
    os << "no isogeny data for " << id() << " and D = '" << d_tag << "'";
    if (isogeny_entries.empty()) {
      os << " (class has no isogeny entries)";
    } else {
      os << "; available:";
      for (const IsogenyEntry& e : isogeny_entries) os << " " << e.d_tag;
    }
    throw DomainError(os.str());
  }
  return *hit;
}

const std::vector<ClassDescriptor>& instantiate(CartanType t) {
  if (!t.admissible())
    throw DomainError("inadmissible type " + std::string(1, t.letter) + std::to_string(t.rank));
  return instances(t);
}

const ClassDescriptor& lookup(CartanType t, const std::string& label) {
  const auto& all = instantiate(t);
  std::string want = normalize_label(label);
  for (const ClassDescriptor& c : all)
    if (normalize_label(c.label) == want) return c;
  std::ostringstream os;
  os << "unknown class '" << label << "' in " << t.name() << "; available:";
  for (const ClassDescriptor& c : all) os << " " << c.label << ",";
  std::string msg = os.str();
  msg.pop_back();
  throw DomainError(msg);
}

Int centralizer_component_order(const ClassDescriptor& c) {
  const int n = c.group.rank;
  return subgroup_order(c.s_O, n) / subgroup_order(c.s_O_hat, n);
}

std::string normalize_label(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == ' ' || ch == '_') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  return out;
}

std::string data_dir() { return g_data_dir; }
void set_data_dir(const std::string& dir) { g_data_dir = dir; }

}  // namespace classring
