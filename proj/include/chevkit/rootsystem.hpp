#pragma once

// Simply-laced root systems (A/D/E) built by closure from the Cartan matrix.
// Roots are integer coefficient vectors over the simple roots with Bourbaki
// labelling; all pairings are Cartan integers computed through the matrix.

#include <array>
#include <cctype>
#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chevkit/zmatrix.hpp"

namespace chevkit {

inline constexpr int kMaxRank = 8;

struct Root {
  std::array<int, kMaxRank> k{};  // zero-padded beyond the system rank
  friend auto operator<=>(const Root&, const Root&) = default;
};

inline Root operator-(const Root& r) {
  Root out;
  for (int i = 0; i < kMaxRank; ++i) out.k[i] = -r.k[i];
  return out;
}
inline Root operator+(const Root& a, const Root& b) {
  Root out;
  for (int i = 0; i < kMaxRank; ++i) out.k[i] = a.k[i] + b.k[i];
  return out;
}
inline Root operator-(const Root& a, const Root& b) { return a + (-b); }

inline int height(const Root& r) {
  int h = 0;
  for (int v : r.k) h += v;
  return h;
}

struct TypeLabel {
  char family = 'E';  // 'A', 'D' or 'E'
  int rank = 7;
  friend bool operator==(const TypeLabel&, const TypeLabel&) = default;
};

inline TypeLabel parse_type(std::string_view s) {
  if (s.size() < 2) throw std::invalid_argument("bad Cartan type: " + std::string(s));
  const char fam = static_cast<char>(std::toupper(s[0]));
  int rank = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(s[i])) throw std::invalid_argument("bad Cartan type: " + std::string(s));
    rank = rank * 10 + (s[i] - '0');
  }
  return {fam, rank};
}

inline std::string to_string(TypeLabel t) { return std::string(1, t.family) + std::to_string(t.rank); }

/// Cartan matrix of a simply-laced type. A_n: chain 1-2-...-n. D_n: chain
/// 1-...-(n-2) with both n-1 and n attached to n-2. E_n (n = 6,7,8): chain
/// 1-3-4-...-n with node 2 attached to 4 (Bourbaki).
inline ZMat cartan_matrix(TypeLabel t) {
  const int n = t.rank;
  auto chain_ok = [&](int lo) { return n >= lo && n <= kMaxRank; };
  std::vector<std::pair<int, int>> edges;  // 1-based
  switch (t.family) {
    case 'A':
      if (!chain_ok(1)) throw std::invalid_argument("unsupported rank for type A");
      for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case 'D':
      if (!chain_ok(3)) throw std::invalid_argument("unsupported rank for type D");
      for (int i = 1; i < n - 2; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n - 2, n - 1);
      edges.emplace_back(n - 2, n);
      break;
    case 'E':
      if (n < 6 || n > 8) throw std::invalid_argument("unsupported rank for type E");
      edges.emplace_back(1, 3);
      edges.emplace_back(2, 4);
      for (int i = 3; i < n; ++i) edges.emplace_back(i, i + 1);
      break;
    default:
      throw std::invalid_argument("unsupported Cartan type family");
  }
  ZMat a(n, ZVec(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  for (auto [i, j] : edges) {
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  }
  return a;
}

class RootSystem;

/// A linearly independent set of roots with pairwise non-positive Cartan
/// integers, i.e. a simple base for a closed subsystem.
struct SubsystemBase {
  std::vector<Root> base;
  static SubsystemBase make(const RootSystem& rs, std::vector<Root> roots);
};

class RootSystem {
 public:
  static RootSystem build(TypeLabel t) {
    RootSystem rs;
    rs.type_ = t;
    rs.cartan_ = cartan_matrix(t);
    rs.enumerate();
    return rs;
  }
  static RootSystem build(std::string_view label) { return build(parse_type(label)); }

  TypeLabel type() const { return type_; }
  int rank() const { return static_cast<int>(cartan_.size()); }
  const ZMat& cartan() const { return cartan_; }

  /// All roots: positives in height order (ties broken lexicographically,
  /// alpha_1 most significant), then the matching negatives.
  const std::vector<Root>& roots() const { return roots_; }
  int num_positive() const { return static_cast<int>(roots_.size()) / 2; }
  int num_roots() const { return static_cast<int>(roots_.size()); }

  Root simple_root(int i) const {  // 0-based
    Root r;
    r.k[i] = 1;
    return r;
  }

  bool is_root(const Root& r) const { return index_.count(r) > 0; }

  int index_of(const Root& r) const {
    auto it = index_.find(r);
    if (it == index_.end()) throw std::invalid_argument("not a root of the system");
    return it->second;
  }
  const Root& root_at(int i) const { return roots_.at(static_cast<std::size_t>(i)); }

  /// Index of a + b, or -1 when the sum is not a root.
  int sum_index(const Root& a, const Root& b) const {
    auto it = index_.find(a + b);
    return it == index_.end() ? -1 : it->second;
  }

  /// Cartan integer <beta, alpha^vee>. Simply laced, so this is the root
  /// bilinear form with all squared lengths normalised to 2.
  int pairing(const Root& beta, const Root& alpha) const {
    require_root(beta);
    require_root(alpha);
    return pairing_unchecked(beta, alpha);
  }

  int pairing_unchecked(const Root& beta, const Root& alpha) const {
    const int n = rank();
    long long s = 0;
    for (int j = 0; j < n; ++j) {
      if (alpha.k[j] == 0) continue;
      long long row = 0;
      for (int i = 0; i < n; ++i) row += beta.k[i] * cartan_[i][j];
      s += row * alpha.k[j];
    }
    return static_cast<int>(s);
  }

  Root reflect(const Root& beta, const Root& alpha) const {
    const int c = pairing(beta, alpha);
    Root out = beta;
    for (int i = 0; i < rank(); ++i) out.k[i] -= c * alpha.k[i];
    return out;
  }

  Root root_by_coeffs(std::span<const int> coeffs) const {
    if (static_cast<int>(coeffs.size()) != rank())
      throw std::invalid_argument("coefficient vector has wrong length");
    Root r;
    for (int i = 0; i < rank(); ++i) r.k[i] = coeffs[i];
    if (!is_root(r)) throw std::invalid_argument("coefficients do not describe a root");
    return r;
  }

  /// Parses "1122100"-style digit strings (single digit per coefficient).
  Root root_by_digits(std::string_view digits) const {
    if (static_cast<int>(digits.size()) != rank())
      throw std::invalid_argument("digit string has wrong length");
    std::vector<int> c(digits.size());
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (!std::isdigit(digits[i])) throw std::invalid_argument("bad digit string");
      c[i] = digits[i] - '0';
    }
    return root_by_coeffs(c);
  }

  const Root& highest_root() const { return roots_.at(static_cast<std::size_t>(num_positive() - 1)); }

  /// All roots lying in the integer span of the base.
  std::vector<Root> subsystem(const SubsystemBase& sb) const {
    const int n = rank();
    ZMat m(n, ZVec(sb.base.size(), 0));
    for (std::size_t j = 0; j < sb.base.size(); ++j)
      for (int i = 0; i < n; ++i) m[i][j] = sb.base[j].k[i];
    std::vector<Root> out;
    for (const Root& r : roots_) {
      ZVec b(n);
      for (int i = 0; i < n; ++i) b[i] = r.k[i];
      if (solve_integer(m, b)) out.push_back(r);
    }
    return out;
  }

  /// Cartan matrix of the base, in the order given.
  ZMat induced_cartan(const SubsystemBase& sb) const {
    const std::size_t n = sb.base.size();
    ZMat c(n, ZVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c[i][j] = pairing(sb.base[i], sb.base[j]);
    return c;
  }

  bool pairwise_orthogonal(std::span<const Root> rs) const {
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = i + 1; j < rs.size(); ++j)
        if (pairing(rs[i], rs[j]) != 0) return false;
    return true;
  }

  /// Debug export: one root per line as space-separated coefficients,
  /// positive roots first in enumeration order.
  void write_roots(std::ostream& os) const {
    for (const Root& r : roots_) {
      for (int i = 0; i < rank(); ++i) os << (i ? " " : "") << r.k[i];
      os << '\n';
    }
  }

 private:
  void require_root(const Root& r) const {
    if (!is_root(r)) throw std::invalid_argument("not a root of the system");
  }

  // Breadth-first closure from the simple base. In a simply-laced system
  // beta + alpha_i is a root exactly when <beta, alpha_i^vee> = -1, so no
  // root-string bookkeeping is needed.
  void enumerate() {
    const int n = rank();
    std::map<Root, bool> pos;
    std::vector<Root> frontier;
    for (int i = 0; i < n; ++i) {
      pos[simple_root(i)] = true;
      frontier.push_back(simple_root(i));
    }
    while (!frontier.empty()) {
      std::vector<Root> next;
      for (const Root& b : frontier)
        for (int i = 0; i < n; ++i) {
          const Root a = simple_root(i);
          if (b == a) continue;
          if (pairing_unchecked(b, a) != -1) continue;
          const Root c = b + a;
          if (!pos.count(c)) {
            pos[c] = true;
            next.push_back(c);
          }
        }
      frontier = std::move(next);
    }
    std::vector<Root> positives;
    positives.reserve(pos.size());
    for (auto& [r, _] : pos) positives.push_back(r);
    std::sort(positives.begin(), positives.end(), [](const Root& x, const Root& y) {
      const int hx = height(x), hy = height(y);
      if (hx != hy) return hx < hy;
      return x.k > y.k;  // alpha_1 before alpha_2 among the simples
    });
    roots_ = positives;
    for (const Root& r : positives) roots_.push_back(-r);
    for (std::size_t i = 0; i < roots_.size(); ++i) index_[roots_[i]] = static_cast<int>(i);
  }

  TypeLabel type_;
  ZMat cartan_;
  std::vector<Root> roots_;
  std::map<Root, int> index_;
};

inline SubsystemBase SubsystemBase::make(const RootSystem& rs, std::vector<Root> roots) {
  for (const Root& r : roots)
    if (!rs.is_root(r)) throw std::invalid_argument("base contains a non-root");
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = 0; j < roots.size(); ++j)
      if (i != j && rs.pairing(roots[i], roots[j]) > 0)
        throw std::invalid_argument("base has a positive Cartan integer pair");
  // independence: solve for each vector in terms of the others is overkill;
  // a base with pairwise <= 0 pairings is dependent only if it spans rank+1
  // directions, which the span test below rules out.
  const int n = rs.rank();
  if (static_cast<int>(roots.size()) > n) throw std::invalid_argument("base larger than rank");
  ZMat m(n, ZVec(roots.size(), 0));
  for (std::size_t j = 0; j < roots.size(); ++j)
    for (int i = 0; i < n; ++i) m[i][j] = roots[j].k[i];
  ZMat g(roots.size(), ZVec(roots.size(), 0));  // Gram via Cartan pairings
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = 0; j < roots.size(); ++j) g[i][j] = rs.pairing(roots[i], roots[j]);
  if (det_bareiss(g) == 0) throw std::invalid_argument("base is linearly dependent");
  SubsystemBase sb;
  sb.base = std::move(roots);
  return sb;
}

}  // namespace chevkit
