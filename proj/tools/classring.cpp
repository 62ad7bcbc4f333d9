#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "classring/intlat.hpp"
#include "classring/verify.hpp"

using namespace classring;

namespace {

std::string weight_to_latex(const Weight& w) {
  std::ostringstream os;
  bool first = true;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    if (!first) os << "+";
    if (w[i] != 1) os << w[i];
    os << "\\omega_{" << (i + 1) << "}";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string generator_list(const WeightMonoid& m, bool latex = false) {
  std::ostringstream os;
  bool first = true;
  for (const Weight& g : m.generators()) {
    if (!first) os << (latex ? ",\\ " : ", ");
    os << (latex ? weight_to_latex(g) : weight_to_string(g));
    first = false;
  }
  if (first) os << (latex ? "\\varnothing" : "(none)");
  return os.str();
}

std::string kind_name(ClassKind k) {
  switch (k) {
    case ClassKind::unipotent: return "unipotent";
    case ClassKind::semisimple: return "semisimple";
    case ClassKind::mixed: return "mixed";
  }
  return "?";
}

nlohmann::json monoid_json(const WeightMonoid& m) {
  nlohmann::json j;
  j["generators"] = nlohmann::json::array();
  for (const Weight& g : m.generators()) j["generators"].push_back(to_std(g));
  j["ambient_basis"] = nlohmann::json::array();
  for (const Weight& b : m.ambient_basis()) j["ambient_basis"].push_back(to_std(b));
  return j;
}

WeightMonoid monoid_for(const ClassDescriptor& c, Variant v, const std::string& iso_tag) {
  switch (v) {
    case Variant::O: return lambda_O(c);
    case Variant::cover: return lambda_O_hat(c);
    case Variant::closure: return lambda_closure(c);
    case Variant::isogeny: return lambda_isogeny(c, iso_tag);
  }
  throw DomainError("bad variant");
}

// "A1tilde~closure" -> label + variant suffix
void split_variant_suffix(std::string& label, std::string& variant) {
  auto pos = label.find('~');
  if (pos == std::string::npos) return;
  std::string suffix = label.substr(pos + 1);
  label = label.substr(0, pos);
  if (!variant.empty() && normalize_label(variant) != normalize_label(suffix))
    throw DomainError("variant given both as ~suffix and --variant");
  variant = suffix;
}

int cmd_list(const std::string& group, const std::string& format) {
  CartanType t = CartanType::parse(group);
  const auto& classes = instantiate(t);
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : classes) {
      nlohmann::json e;
      e["label"] = c.label;
      e["kind"] = kind_name(c.kind);
      e["J"] = c.j_set;
      e["dimension"] = class_dimension(c);
      e["normal_closure"] = c.normal_closure;
      std::vector<std::string> tags;
      for (const auto& iso : c.isogeny_entries) tags.push_back(iso.d_tag);
      e["isogeny"] = tags;
      j.push_back(std::move(e));
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << t.name() << ": " << classes.size() << " spherical classes\n";
  for (const auto& c : classes) {
    std::cout << "  " << c.label << "  [" << kind_name(c.kind) << ", dim "
              << class_dimension(c);
    if (!c.normal_closure) std::cout << ", non-normal closure";
    if (is_model(c)) std::cout << ", model";
    for (const auto& iso : c.isogeny_entries) std::cout << ", isogeny:" << iso.d_tag;
    std::cout << "]\n";
  }
  return 0;
}

int cmd_show(const std::string& group, std::string label, std::string variant,
             const std::string& format) {
  split_variant_suffix(label, variant);
  if (variant.empty()) variant = "O";
  CartanType t = CartanType::parse(group);
  const ClassDescriptor& c = lookup(t, label);
  std::string iso_tag;
  Variant v = parse_variant(variant, &iso_tag);
  WeightMonoid m = monoid_for(c, v, iso_tag);
  if (format == "json") {
    nlohmann::json j = monoid_json(m);
    j["group"] = t.name();
    j["label"] = c.label;
    j["variant"] = variant_name(v, iso_tag);
    j["kind"] = kind_name(c.kind);
    j["J"] = c.j_set;
    j["dimension"] = class_dimension(c);
    j["model"] = is_model(c);
    j["centralizer_component_order"] = centralizer_component_order(c);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (format == "latex") {
    std::cout << c.label << " & " << generator_list(m, true) << " \\\\\n";
    return 0;
  }
  std::cout << t.name() << " " << c.label << " [" << kind_name(c.kind) << "], variant "
            << variant_name(v, iso_tag) << "\n";
  std::cout << "J = {";
  for (std::size_t i = 0; i < c.j_set.size(); ++i)
    std::cout << (i ? "," : "") << c.j_set[i];
  std::cout << "}, l(w) = " << root_system(t).length(c.w) << ", dim = " << class_dimension(c)
            << "\n";
  std::cout << "generators: " << generator_list(m) << "\n";
  return 0;
}

int cmd_member(const std::string& group, std::string label, const std::string& weight,
               std::string variant) {
  split_variant_suffix(label, variant);
  if (variant.empty()) variant = "O";
  CartanType t = CartanType::parse(group);
  const ClassDescriptor& c = lookup(t, label);
  std::string iso_tag;
  Variant v = parse_variant(variant, &iso_tag);
  Weight l = parse_weight(weight, t.rank);
  if ((l.array() < 0).any()) throw DomainError("weight is not dominant");
  WeightMonoid m = monoid_for(c, v, iso_tag);
  std::cout << (m.contains(l) ? "true" : "false") << "\n";
  return 0;
}

int cmd_table(const std::string& group, const std::string& format) {
  CartanType t = CartanType::parse(group);
  const auto& classes = instantiate(t);
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : classes) {
      nlohmann::json e;
      e["label"] = c.label;
      e["kind"] = kind_name(c.kind);
      e["lambda_O"] = monoid_json(lambda_O(c))["generators"];
      e["lambda_cover"] = monoid_json(lambda_O_hat(c))["generators"];
      if (!c.normal_closure) e["lambda_closure"] = monoid_json(lambda_closure(c))["generators"];
      for (const auto& iso : c.isogeny_entries)
        e["lambda_isogeny:" + iso.d_tag] = monoid_json(lambda_isogeny(c, iso.d_tag))["generators"];
      j.push_back(std::move(e));
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (format == "latex") {
    std::cout << "\\begin{array}{|c||c|c|}\n\\hline\n"
              << "{\\cal O} & \\lambda({\\cal O}) & \\lambda(\\hat{\\cal O}) \\\\\n\\hline\n";
    for (const auto& c : classes) {
      WeightMonoid mo = lambda_O(c);
      WeightMonoid mh = lambda_O_hat(c);
      std::string hat = (mo.generators() == mh.generators()) ? "" : generator_list(mh, true);
      std::cout << "\\hline\n" << c.label << " & " << generator_list(mo, true) << " & " << hat
                << " \\\\\n";
    }
    std::cout << "\\hline\n\\end{array}\n";
    return 0;
  }
  for (const auto& c : classes) {
    WeightMonoid mo = lambda_O(c);
    WeightMonoid mh = lambda_O_hat(c);
    std::cout << c.label << "\n  lambda(O)     : " << generator_list(mo) << "\n";
    if (!(mo.generators() == mh.generators()))
      std::cout << "  lambda(cover) : " << generator_list(mh) << "\n";
    if (!c.normal_closure)
      std::cout << "  lambda(closure): " << generator_list(lambda_closure(c)) << "\n";
    for (const auto& iso : c.isogeny_entries)
      std::cout << "  lambda(isogeny:" << iso.d_tag
                << "): " << generator_list(lambda_isogeny(c, iso.d_tag)) << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& group, int rank_max, Int max_coeff, const std::string& format) {
  std::vector<CartanType> types;
  if (group.empty())
    types = sweep_types(rank_max);
  else
    types.push_back(CartanType::parse(group));

  std::vector<VerificationReport> reports;
  for (CartanType t : types) {
    for (const ClassDescriptor& c : instantiate(t)) {
      VerificationReport oracle = verify_class(c, max_coeff);
      VerificationReport tables = verify_tables(c, max_coeff);
      oracle.mismatches.insert(oracle.mismatches.end(), tables.mismatches.begin(),
                               tables.mismatches.end());
      oracle.elapsed_seconds += tables.elapsed_seconds;
      reports.push_back(std::move(oracle));
    }
  }
  reports.push_back(verify_minima(rank_max));

  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.pass();
  if (format == "json") {
    std::cout << reports_to_json(reports) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << (r.pass() ? "ok      " : "MISMATCH") << "  " << r.class_id;
      if (!r.pass()) std::cout << "  (" << r.mismatches.size() << " mismatches)";
      std::cout << "\n";
    }
    std::cout << (all_pass ? "PASS" : "FAIL") << " (" << reports.size() << " reports)\n";
  }
  return all_pass ? 0 : 2;
}

int cmd_snf(const std::string& matrix, const std::string& format) {
  std::vector<std::vector<Int>> rows;
  std::stringstream ss(matrix);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::vector<Int> r;
    std::stringstream rs(row);
    std::string cell;
    while (std::getline(rs, cell, ',')) r.push_back(std::stoll(cell));
    if (!rows.empty() && r.size() != rows.front().size())
      throw DomainError("ragged matrix");
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw DomainError("empty matrix");
  MatI m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  auto s = intlat::smith_normal_form(m);
  auto print = [&](const char* name, const intlat::ZMat& z) {
    std::cout << name << " =\n";
    for (Eigen::Index i = 0; i < z.rows(); ++i) {
      std::cout << " ";
      for (Eigen::Index j = 0; j < z.cols(); ++j) std::cout << " " << z(i, j);
      std::cout << "\n";
    }
  };
  if (format == "json") {
    nlohmann::json j;
    auto dump = [&](const intlat::ZMat& z) {
      nlohmann::json rowsj = nlohmann::json::array();
      for (Eigen::Index i = 0; i < z.rows(); ++i) {
        nlohmann::json r = nlohmann::json::array();
        for (Eigen::Index jj = 0; jj < z.cols(); ++jj) r.push_back(z(i, jj).str());
        rowsj.push_back(std::move(r));
      }
      return rowsj;
    };
    j["D"] = dump(s.d);
    j["U"] = dump(s.u);
    j["V"] = dump(s.v);
    std::vector<std::string> div;
    for (const auto& e : s.divisors()) div.push_back(e.str());
    j["divisors"] = div;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "divisors:";
  for (const auto& e : s.divisors()) std::cout << " " << e;
  std::cout << "\n";
  print("D", s.d);
  print("U", s.u);
  print("V", s.v);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weight monoids of spherical conjugacy classes"};
  app.require_subcommand(1);

  std::string data;
  app.add_option("--data-dir", data, "directory with the exceptional-type data files");

  std::string group, label, weight, variant, format = "text", matrix;
  int rank_max = 8;
  Int max_coeff = 6;

  auto* list = app.add_subcommand("list", "list the spherical classes of a group");
  list->add_option("group", group)->required();
  list->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* show = app.add_subcommand("show", "print the weight monoid of one class");
  show->add_option("group", group)->required();
  show->add_option("label", label)->required();
  show->add_option("--variant", variant);
  show->add_option("--format", format)->check(CLI::IsMember({"text", "json", "latex"}));

  auto* member = app.add_subcommand("member", "test a dominant weight for membership");
  member->add_option("group", group)->required();
  member->add_option("label", label)->required();
  member->add_option("weight", weight, "comma-separated omega-coordinates")->required();
  member->add_option("--variant", variant);

  auto* table = app.add_subcommand("table", "emit the full class table of a group");
  table->add_option("group", group)->required();
  table->add_option("--format", format)->check(CLI::IsMember({"text", "json", "latex"}));

  auto* verify = app.add_subcommand("verify", "run the oracle and table checks");
  verify->add_option("--group", group);
  verify->add_option("--rank-max", rank_max)->check(CLI::Range(1, 8));
  verify->add_option("--max-coeff", max_coeff)->check(CLI::Range(Int(1), Int(12)));
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("matrix", matrix, "rows separated by ';', entries by ','")->required();
  snf->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (!data.empty()) set_data_dir(data);
    if (list->parsed()) return cmd_list(group, format);
    if (show->parsed()) return cmd_show(group, label, variant, format);
    if (member->parsed()) return cmd_member(group, label, weight, variant);
    if (table->parsed()) return cmd_table(group, format);
    if (verify->parsed()) return cmd_verify(group, rank_max, max_coeff, format);
    if (snf->parsed()) return cmd_snf(matrix, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
