#pragma once

// Nonabelian H^1 for a finite group under an automorphism: twisted conjugacy
// classes x ~ sigma(g)^{-1} x g, computed by exhaustive search. The group of
// interest is Sym4 realised as E x| Sym3 with E = {1, e, f, ef} the Klein
// four-group and Sym3 permuting {e, f, ef} faithfully; its five classes
// carry the structure descriptors of the normalizer table.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace chevkit {

/// Small finite group with a full multiplication table. For the Sym4 model
/// each element is labelled (v, pi) with v in E = {1, e, f, ef} and pi the
/// induced permutation of {e, f, ef}.
struct FiniteGroupModel {
  std::vector<std::string> labels;
  std::vector<std::array<int, 4>> perms;  // underlying permutations of {0,1,2,3}
  std::vector<std::vector<int>> mult;     // mult[i][j] = index of x_i * x_j
  std::vector<int> inverse;
  std::vector<int> e_part;     // 0: 1, 1: e, 2: f, 3: ef
  std::vector<int> sym3_part;  // index into the six Sym3 complement elements
  int identity = 0;

  int order() const { return static_cast<int>(labels.size()); }
};

namespace symdetail {

using Perm4 = std::array<int, 4>;

inline Perm4 compose(const Perm4& a, const Perm4& b) {  // (a*b)(x) = a(b(x))
  Perm4 r{};
  for (int i = 0; i < 4; ++i) r[i] = a[b[i]];
  return r;
}
inline Perm4 inverse_of(const Perm4& a) {
  Perm4 r{};
  for (int i = 0; i < 4; ++i) r[a[i]] = i;
  return r;
}

// The Klein four-group inside Sym4, indexed to match E = {1, e, f, ef}.
inline const std::array<Perm4, 4>& klein4() {
  static const std::array<Perm4, 4> k = {{{0, 1, 2, 3},    // 1
                                          {1, 0, 3, 2},    // e  = (01)(23)
                                          {2, 3, 0, 1},    // f  = (02)(13)
                                          {3, 2, 1, 0}}};  // ef = (03)(12)
  return k;
}

}  // namespace symdetail

/// Builds the Sym4 model as E x| Sym3: elements are permutations of
/// {0,1,2,3}; the E-part is the unique Klein element with x = v * pi where pi
/// fixes the point 3.
inline FiniteGroupModel build_sym4_model() {
  using symdetail::Perm4;
  FiniteGroupModel g;

  // the complement: permutations of {0,1,2} fixing 3, in a fixed order
  std::vector<Perm4> sym3;
  std::array<int, 3> base{0, 1, 2};
  std::sort(base.begin(), base.end());
  do {
    sym3.push_back(Perm4{base[0], base[1], base[2], 3});
  } while (std::next_permutation(base.begin(), base.end()));

  static const char* e_names[4] = {"1", "e", "f", "ef"};
  auto sym3_name = [&](const Perm4& p) -> std::string {
    // name by the induced permutation of {e, f, ef}: conjugation action on
    // the Klein elements 1..3
    const auto& k4 = symdetail::klein4();
    std::array<int, 4> img{};
    const Perm4 pinv = symdetail::inverse_of(p);
    for (int v = 1; v < 4; ++v) {
      const Perm4 c = symdetail::compose(symdetail::compose(p, k4[v]), pinv);
      for (int w = 1; w < 4; ++w)
        if (c == k4[w]) img[v] = w;
    }
    if (img[1] == 1 && img[2] == 2 && img[3] == 3) return "id";
    std::string s = "(";
    std::set<int> done;
    for (int v = 1; v < 4; ++v) {
      if (done.count(v) || img[v] == v) continue;
      int cur = v;
      bool first = true;
      while (!done.count(cur)) {
        done.insert(cur);
        s += (first ? "" : " ") + std::string(e_names[cur]);
        first = false;
        cur = img[cur];
      }
      s += ")(";
    }
    s.pop_back();  // trailing "("
    return s;
  };

  const auto& k4 = symdetail::klein4();
  for (int v = 0; v < 4; ++v)
    for (std::size_t s = 0; s < sym3.size(); ++s) {
      g.perms.push_back(symdetail::compose(k4[v], sym3[s]));
      g.e_part.push_back(v);
      g.sym3_part.push_back(static_cast<int>(s));
      g.labels.push_back(std::string("(") + e_names[v] + ", " + sym3_name(sym3[s]) + ")");
    }

  const int n = g.order();
  auto index_of = [&](const Perm4& p) {
    for (int i = 0; i < n; ++i)
      if (g.perms[i] == p) return i;
    throw std::logic_error("element escaped the group");
  };
  g.mult.assign(n, std::vector<int>(n));
  g.inverse.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g.mult[i][j] = index_of(symdetail::compose(g.perms[i], g.perms[j]));
    g.inverse[i] = index_of(symdetail::inverse_of(g.perms[i]));
  }
  g.identity = index_of(Perm4{0, 1, 2, 3});
  return g;
}

/// Index of the element (v, id) for v in {0: 1, 1: e, 2: f, 3: ef}.
inline int e_element_index(const FiniteGroupModel& g, int v) {
  for (int i = 0; i < g.order(); ++i)
    if (g.perms[i] == symdetail::klein4()[static_cast<std::size_t>(v)]) return i;
  throw std::logic_error("E element not found");
}

/// Whether an element lies in the normal Klein four-group E.
inline bool in_e(const FiniteGroupModel& g, int x) {
  return g.sym3_part[x] == g.sym3_part[g.identity];
}

struct GroupAutomorphism {
  std::vector<int> image;  // image[i] = index of sigma(x_i)
};

inline bool is_automorphism(const FiniteGroupModel& g, const GroupAutomorphism& s) {
  const int n = g.order();
  if (static_cast<int>(s.image.size()) != n) return false;
  std::set<int> seen(s.image.begin(), s.image.end());
  if (static_cast<int>(seen.size()) != n) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (s.image[g.mult[i][j]] != g.mult[s.image[i]][s.image[j]]) return false;
  return true;
}

inline GroupAutomorphism trivial_automorphism(const FiniteGroupModel& g) {
  GroupAutomorphism s;
  s.image.resize(g.order());
  for (int i = 0; i < g.order(); ++i) s.image[i] = i;
  return s;
}

inline GroupAutomorphism conjugation_by(const FiniteGroupModel& g, int a) {
  GroupAutomorphism s;
  s.image.resize(g.order());
  for (int i = 0; i < g.order(); ++i) s.image[i] = g.mult[g.mult[a][i]][g.inverse[a]];
  return s;
}

/// One twisted conjugacy class: members are pairwise related by
/// x ~ sigma(g)^{-1} x g; the witness map sends each member to one such g
/// taking the representative to it.
struct H1Class {
  int representative = 0;
  std::vector<int> members;
  std::map<int, int> witness;
};

inline std::vector<H1Class> h1_classes(const FiniteGroupModel& g, const GroupAutomorphism& sigma) {
  if (!is_automorphism(g, sigma)) throw std::invalid_argument("sigma is not an automorphism");
  const int n = g.order();
  std::vector<bool> assigned(n, false);
  std::vector<H1Class> out;
  for (int x = 0; x < n; ++x) {
    if (assigned[x]) continue;
    H1Class cls;
    cls.representative = x;
    for (int w = 0; w < n; ++w) {
      const int y = g.mult[g.mult[g.inverse[sigma.image[w]]][x]][w];
      if (!cls.witness.count(y)) {
        cls.witness[y] = w;
        cls.members.push_back(y);
        assigned[y] = true;
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    out.push_back(std::move(cls));
  }
  return out;
}

/// A witness w with sigma(w)^{-1} x w = y, if the two are twisted-related.
inline std::optional<int> twisted_related(const FiniteGroupModel& g, const GroupAutomorphism& sigma,
                                          int x, int y) {
  for (int w = 0; w < g.order(); ++w)
    if (g.mult[g.mult[g.inverse[sigma.image[w]]][x]][w] == y) return w;
  return std::nullopt;
}

/// Ordinary conjugacy classes via the orbit partition of x -> g x g^{-1};
/// kept independent of h1_classes as a cross-check route.
inline std::vector<std::vector<int>> conjugacy_classes(const FiniteGroupModel& g) {
  const int n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::set<int> orbit;
    for (int w = 0; w < n; ++w) orbit.insert(g.mult[g.mult[w][x]][g.inverse[w]]);
    std::vector<int> cls(orbit.begin(), orbit.end());
    for (int y : cls) seen[y] = true;
    out.push_back(std::move(cls));
  }
  return out;
}

inline std::vector<int> center_elements(const FiniteGroupModel& g) {
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int y = 0; y < g.order() && central; ++y)
      if (g.mult[x][y] != g.mult[y][x]) central = false;
    if (central) out.push_back(x);
  }
  return out;
}

inline int element_order(const FiniteGroupModel& g, int x) {
  int cur = x, o = 1;
  while (cur != g.identity) {
    cur = g.mult[cur][x];
    ++o;
  }
  return o;
}

/// Canonical class label from the cycle type of the representative as a
/// permutation of four points: "[(1)]", "[(1,2)]", "[(1,2)(3,4)]",
/// "[(1,2,3)]" or "[(1,2,3,4)]".
inline std::string cycle_type_label(const FiniteGroupModel& g, int x) {
  const auto& p = g.perms[static_cast<std::size_t>(x)];
  std::vector<int> lens;
  std::array<bool, 4> seen{};
  for (int i = 0; i < 4; ++i) {
    if (seen[i]) continue;
    int len = 0, cur = i;
    while (!seen[cur]) {
      seen[cur] = true;
      cur = p[cur];
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  if (lens[0] == 1) return "[(1)]";
  if (lens[0] == 2 && lens[1] == 2) return "[(1,2)(3,4)]";
  if (lens[0] == 2) return "[(1,2)]";
  if (lens[0] == 3) return "[(1,2,3)]";
  return "[(1,2,3,4)]";
}

namespace symdetail {

// subgroup of `g` generated by up to two elements, as an index set
inline std::set<int> generated_by(const FiniteGroupModel& g, int a, int b) {
  std::set<int> s{g.identity};
  std::vector<int> frontier{g.identity};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int y : {g.mult[x][a], g.mult[x][b]})
        if (s.insert(y).second) next.push_back(y);
    frontier = std::move(next);
  }
  return s;
}

}  // namespace symdetail

/// Structure descriptor of the normalizer form attached to a twisted class
/// of the Sym4 model, assembled from the recipe:
///   - the cycle order of the representative's image in Sym3 = Sym4/E picks
///     the core: 1 -> Inndiag(D4(q)), 2 -> 2D4(q).2, 3 -> 3D4(q);
///   - the component group is the centralizer C of the representative;
///   - the fixed involutions C_E(x) split off as direct 2-factors when they
///     admit a complement in C; otherwise they are absorbed by the tail;
///   - the tail is C / C_E(x) (or all of C when no complement exists).
inline std::string structure_descriptor(const FiniteGroupModel& g, const H1Class& cls) {
  const int x = cls.representative;

  // order of the image of x in Sym3 = Sym4 / E
  int d = 1;
  for (int cur = x; !in_e(g, cur); cur = g.mult[cur][x]) {
    ++d;
    if (d > 4) throw std::logic_error("unexpected Sym3 image order");
  }
  std::string core;
  if (d == 1)
    core = "Inndiag(D4(q))";
  else if (d == 2)
    core = "2D4(q).2";
  else
    core = "3D4(q)";

  // centralizer of x (the component group) and its E-fixed part
  std::vector<int> cent;
  for (int y = 0; y < g.order(); ++y)
    if (g.mult[x][y] == g.mult[y][x]) cent.push_back(y);
  std::set<int> efix;
  for (int y : cent)
    if (in_e(g, y)) efix.insert(y);

  // does C_E(x) admit a complement in C? (any complement here needs at most
  // two generators: the candidate subgroups have order <= 6)
  const std::size_t ctail = cent.size() / efix.size();
  bool has_complement = efix.size() == 1;  // trivial subgroup: C itself works
  for (std::size_t ai = 0; ai < cent.size() && !has_complement; ++ai)
    for (std::size_t bi = ai; bi < cent.size() && !has_complement; ++bi) {
      const std::set<int> h = symdetail::generated_by(g, cent[ai], cent[bi]);
      if (h.size() != ctail) continue;
      bool meets = false;
      for (int y : h)
        if (y != g.identity && efix.count(y)) meets = true;
      if (!meets) has_complement = true;
    }

  std::string prefix;
  std::size_t tail_order;
  if (has_complement) {
    if (efix.size() == 4) prefix = "2^2 x ";
    else if (efix.size() == 2) prefix = "2 x ";
    tail_order = ctail;
  } else {
    tail_order = cent.size();
  }

  // tail name: the quotient C / C_E(x) (or C itself): in Sym4 an order-6
  // section is Sym3, everything else arising here is cyclic
  std::string tail;
  if (tail_order == 1)
    tail = "";
  else if (tail_order == 6)
    tail = "Sym3";
  else
    tail = std::to_string(tail_order);

  std::string out = prefix.empty() ? core : "(" + prefix + core + ")";
  if (!tail.empty()) {
    if (prefix.empty() && core.find('.') != std::string::npos) out = "(" + out + ")";
    out += "." + tail;
  }
  return out;
}

/// The five descriptors in class-label order, as byte-fixed constants. The
/// recipe above must reproduce them; a disagreement is a failing check.
inline const std::map<std::string, std::string>& normalizer_table_constants() {
  static const std::map<std::string, std::string> table = {
      {"[(1)]", "(2^2 x Inndiag(D4(q))).Sym3"},
      {"[(1,2)]", "(2 x 2D4(q).2).2"},
      {"[(1,2)(3,4)]", "(2^2 x Inndiag(D4(q))).2"},
      {"[(1,2,3)]", "3D4(q).3"},
      {"[(1,2,3,4)]", "(2D4(q).2).4"},
  };
  return table;
}

/// Rows whose descriptor derivation is spelled out in the source analysis;
/// the remaining rows are recipe-computed and checked against the constants
/// but are flagged as such in reports.
inline bool descriptor_derivation_documented(const std::string& label) {
  return label == "[(1)]" || label == "[(1,2)]" || label == "[(1,2,3)]";
}

}  // namespace chevkit
