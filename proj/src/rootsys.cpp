#include "classring/rootsys.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace classring {

bool CartanType::admissible() const {
  switch (letter) {
    case 'A': return rank >= 1;
    case 'B': return rank >= 2;
    case 'C': return rank >= 2;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

std::string CartanType::name() const { return std::string(1, letter) + std::to_string(rank); }

CartanType CartanType::parse(const std::string& s) {
  std::string t;
  for (char c : s)
    if (c != '_' && c != ' ') t.push_back(c);
  if (t.empty()) throw DomainError("empty group name");
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
  int rank = 0;
  try {
    rank = std::stoi(t.substr(1));
  } catch (...) {
    throw DomainError("cannot parse group name '" + s + "'");
  }
  CartanType ct{letter, rank};
  if (!ct.admissible())
    throw DomainError("inadmissible type " + std::string(1, letter) + " of rank " +
                      std::to_string(rank));
  return ct;
}

int WeylElement::order() const {
  MatI p = m;
  int k = 1;
  while (!p.isIdentity()) {
    p = p * m;
    ++k;
    if (k > 10000) throw DomainError("WeylElement has no small finite order");
  }
  return k;
}

WeylElement WeylElement::inverse() const {
  const int k = order();
  MatI p = MatI::Identity(m.rows(), m.cols());
  for (int i = 0; i + 1 < k; ++i) p = p * m;
  return {p};
}

namespace {

MatI cartan_matrix(CartanType t) {
  const int n = t.rank;
  MatI a = MatI::Zero(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) a(i, i + 1) = a(i + 1, i) = -1;
  };
  switch (t.letter) {
    case 'A':
      chain(n);
      break;
    case 'B':
      // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2.
      chain(n);
      a(n - 2, n - 1) = -2;
      break;
    case 'C':
      chain(n);
      a(n - 1, n - 2) = -2;
      break;
    case 'D':
      chain(n - 1);
      a(n - 3, n - 1) = a(n - 1, n - 3) = -1;
      break;
    case 'E':
      // Bourbaki: chain 1-3-4-5-..., node 2 attached to node 4.
      a(0, 2) = a(2, 0) = -1;
      for (int i = 2; i + 1 < n; ++i) a(i, i + 1) = a(i + 1, i) = -1;
      a(1, 3) = a(3, 1) = -1;
      break;
    case 'F':
      chain(4);
      a(1, 2) = -2;
      a(2, 1) = -1;
      break;
    case 'G':
      a(0, 1) = -1;
      a(1, 0) = -3;
      break;
    default:
      throw DomainError("bad type");
  }
  return a;
}

// Coprime positive d with diag(d) * A symmetric: propagate ratios along the
// Dynkin graph, then clear denominators.
VecI symmetrizer(const MatI& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<Int> num(n, 0), den(n, 0);
  num[0] = den[0] = 1;
  std::vector<int> todo{0};
  while (!todo.empty()) {
    int i = todo.back();
    todo.pop_back();
    for (int j = 0; j < n; ++j) {
      if (i == j || a(i, j) == 0 || den[j] != 0) continue;
      // d_i a_ij = d_j a_ji
      num[j] = num[i] * a(i, j);
      den[j] = den[i] * a(j, i);
      if (num[j] < 0) { num[j] = -num[j]; den[j] = -den[j]; }
      Int g = std::gcd(num[j], den[j]);
      num[j] /= g;
      den[j] /= g;
      todo.push_back(j);
    }
  }
  Int l = 1;
  for (int i = 0; i < n; ++i) l = std::lcm(l, den[i]);
  VecI d(n);
  for (int i = 0; i < n; ++i) d[i] = num[i] * (l / den[i]);
  Int g = 0;
  for (int i = 0; i < n; ++i) g = std::gcd(g, d[i]);
  for (int i = 0; i < n; ++i) d[i] /= g;
  return d;
}

}  // namespace

RootSystem::RootSystem(CartanType t) : type_(t), n_(t.rank) {
  if (!t.admissible()) throw DomainError("inadmissible type " + t.name());
  cartan_ = cartan_matrix(t);
  sym_ = symmetrizer(cartan_);

  // (alpha_j, alpha_j) = 2 m_j with m_j = lcm(d)/d_j; gram_jk = a_jk m_k.
  Int l = 1;
  for (int i = 0; i < n_; ++i) l = std::lcm(l, sym_[i]);
  norm_half_ = VecI(n_);
  for (int i = 0; i < n_; ++i) norm_half_[i] = l / sym_[i];
  gram_ = cartan_ * norm_half_.asDiagonal();
  if (gram_ != gram_.transpose()) throw DomainError("gram matrix not symmetric");

  // Positive roots: close the simple roots under simple reflections, keeping
  // the vectors with nonnegative alpha-coordinates.
  std::map<std::vector<Int>, bool> seen;
  std::vector<Root> queue;
  for (int i = 0; i < n_; ++i) {
    Root r = Root::Zero(n_);
    r[i] = 1;
    queue.push_back(r);
    seen.emplace(to_std(r), true);
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    Root c = queue[q];
    VecI pair = cartan_.transpose() * c;  // <c, alpha_i^vee> for each i
    for (int i = 0; i < n_; ++i) {
      Root c2 = c;
      c2[i] -= pair[i];
      if ((c2.array() < 0).any()) continue;
      auto key = to_std(c2);
      if (seen.emplace(std::move(key), true).second) queue.push_back(c2);
    }
  }
  positive_ = std::move(queue);
  std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    Int ha = a.sum(), hb = b.sum();
    if (ha != hb) return ha < hb;
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                        b.data() + b.size());
  });

  max_norm2_ = 0;
  for (int k = 0; k < static_cast<int>(positive_.size()); ++k) {
    const Root& r = positive_[k];
    positive_omega_.push_back(cartan_.transpose() * r);
    by_alpha_[to_std(r)] = k + 1;
    by_omega_[to_std(positive_omega_.back())] = k + 1;
    by_omega_[to_std(Weight(-positive_omega_.back()))] = -(k + 1);
    max_norm2_ = std::max(max_norm2_, norm2(r));
  }

  // theta from the action of w0 on the simple roots.
  theta_.assign(n_ + 1, 0);
  WeylElement w0 = longest_element();
  for (int i = 1; i <= n_; ++i) {
    Weight im = -(w0.m * positive_omega_[static_cast<std::size_t>(
                              by_alpha_.at(to_std(simple_root(i))) - 1)]);
    int k = classify_weight_as_root(im);
    if (k <= 0 || positive_[static_cast<std::size_t>(k - 1)].sum() != 1)
      throw DomainError("w0 does not induce a diagram symmetry");
    for (int j = 0; j < n_; ++j)
      if (positive_[static_cast<std::size_t>(k - 1)][j] == 1) theta_[i] = j + 1;
  }
}

Root RootSystem::simple_root(int i) const {
  if (i < 1 || i > n_) throw DomainError("simple root index out of range");
  Root r = Root::Zero(n_);
  r[i - 1] = 1;
  return r;
}

bool RootSystem::is_root(const Root& r) const {
  if (r.size() != n_) return false;
  if (by_alpha_.count(to_std(r))) return true;
  return by_alpha_.count(to_std(Root(-r))) > 0;
}

int RootSystem::classify_weight_as_root(const Weight& w) const {
  auto it = by_omega_.find(to_std(w));
  return it == by_omega_.end() ? 0 : it->second;
}

Int RootSystem::norm2(const Root& r) const { return r.dot(gram_ * r); }

bool RootSystem::is_long(const Root& r) const { return norm2(r) == max_norm2_; }

WeylElement RootSystem::identity() const { return {MatI::Identity(n_, n_)}; }

WeylElement RootSystem::simple_reflection(int i) const {
  if (i < 1 || i > n_) throw DomainError("simple reflection index out of range");
  MatI m = MatI::Identity(n_, n_);
  m.col(i - 1) -= cartan_.row(i - 1).transpose();
  return {m};
}

WeylElement RootSystem::reflection_for_root(const Root& beta) const {
  if (!is_root(beta)) throw DomainError("reflection_for_root: not a root");
  Weight bw = root_to_weight(beta);
  Int nb = norm2(beta);
  MatI m = MatI::Identity(n_, n_);
  for (int k = 0; k < n_; ++k) {
    Int num = 2 * beta[k] * norm_half_[k];  // 2 (omega_k, beta)
    if (num % nb != 0) throw DomainError("reflection_for_root: non-integral pairing");
    m.col(k) -= (num / nb) * bw;
  }
  return {m};
}

namespace {

// Push a J-regular dominant weight to the antidominant chamber of W_J; the
// product of the reflections used is the longest element of W_J.
WeylElement push_antidominant(const RootSystem& rs, Weight mu, const std::vector<int>& j_set) {
  WeylElement w = rs.identity();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : j_set) {
      if (mu[i - 1] > 0) {
        WeylElement s = rs.simple_reflection(i);
        mu = s.apply(mu);
        w = s * w;
        moved = true;
      }
    }
  }
  return w;
}

}  // namespace

WeylElement RootSystem::longest_element() const {
  std::vector<int> all(static_cast<std::size_t>(n_));
  std::iota(all.begin(), all.end(), 1);
  return push_antidominant(*this, Weight::Ones(n_), all);
}

WeylElement RootSystem::parabolic_longest(const std::vector<int>& j_set) const {
  Weight mu = Weight::Zero(n_);
  for (int i : j_set) {
    if (i < 1 || i > n_) throw DomainError("parabolic index out of range");
    mu[i - 1] = 1;
  }
  return push_antidominant(*this, mu, j_set);
}

int RootSystem::length(const WeylElement& w) const {
  int len = 0;
  for (const Weight& bw : positive_omega_) {
    int k = classify_weight_as_root(w.m * bw);
    if (k == 0) throw DomainError("length: element does not permute the roots");
    if (k < 0) ++len;
  }
  return len;
}

bool RootSystem::theta_invariant(const std::vector<int>& j_set) const {
  for (int i : j_set)
    if (std::find(j_set.begin(), j_set.end(), theta_[static_cast<std::size_t>(i)]) == j_set.end())
      return false;
  return true;
}

std::vector<Root> RootSystem::minus_fixed_roots(const WeylElement& w) const {
  if (!w.is_involution()) throw DomainError("minus_fixed_roots: not an involution");
  std::vector<Root> out;
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    if (w.m * positive_omega_[k] == -positive_omega_[k]) {
      out.push_back(positive_[k]);
      out.push_back(-positive_[k]);
    }
  }
  return out;
}

bool RootSystem::permutes_roots(const WeylElement& w) const {
  for (const Weight& bw : positive_omega_)
    if (classify_weight_as_root(w.m * bw) == 0) return false;
  return true;
}

const RootSystem& root_system(CartanType t) {
  static std::mutex mu;
  static std::map<CartanType, std::unique_ptr<RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, std::make_unique<RootSystem>(t)).first;
  return *it->second;
}

std::string weight_to_string(const Weight& w) {
  std::ostringstream os;
  bool first = true;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    if (!first) os << "+";
    if (w[i] < 0) os << "-";
    if (w[i] != 1 && w[i] != -1) os << (w[i] < 0 ? -w[i] : w[i]);
    os << "w" << (i + 1);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Weight parse_weight(const std::string& s, int rank) {
  std::vector<Int> coords;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) throw DomainError("malformed weight vector '" + s + "'");
    try {
      std::size_t used = 0;
      coords.push_back(std::stoll(cur, &used));
      if (used != cur.size()) throw DomainError("");
    } catch (...) {
      throw DomainError("malformed weight vector '" + s + "'");
    }
    cur.clear();
  };
  for (char c : s) {
    if (c == ',') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  flush();
  if (static_cast<int>(coords.size()) != rank)
    throw DomainError("weight vector has " + std::to_string(coords.size()) +
                      " coordinates, expected " + std::to_string(rank));
  return from_std(coords);
}

}  // namespace classring
