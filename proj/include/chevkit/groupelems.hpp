#pragma once

// Words in the Steinberg generators, their evaluation on the adjoint module,
// and the explicit elements of the construction: the torus involution e
// (center of the A7 subsystem subgroup), the Weyl representative f of the
// longest element, and the torus element g with g^2 = e. Also the involution
// classifier, the 2-torsion census, and the diagonal case survey.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chevkit/chevalley.hpp"
#include "chevkit/lattices.hpp"

namespace chevkit {

enum class GenKind { XRoot, WRoot, HRoot };

struct GeneratorToken {
  GenKind kind = GenKind::XRoot;
  Root root;
  FieldElem param;  // nonzero for WRoot / HRoot
};

struct GroupWord {
  std::vector<GeneratorToken> tokens;
};

inline GroupWord concat(const GroupWord& a, const GroupWord& b) {
  GroupWord w = a;
  w.tokens.insert(w.tokens.end(), b.tokens.begin(), b.tokens.end());
  return w;
}

inline AdjointMatrix evaluate(const GroupWord& w, const AdjointRep& rep) {
  AdjointMatrix m = rep.identity_matrix();
  for (const GeneratorToken& t : w.tokens) {
    switch (t.kind) {
      case GenKind::XRoot:
        m = m * rep.x_matrix(t.root, t.param);
        break;
      case GenKind::WRoot:
        m = m * rep.w_matrix(t.root, t.param);
        break;
      case GenKind::HRoot:
        m = m * rep.h_matrix(t.root, t.param);
        break;
    }
  }
  return m;
}

/// Base of the A7 subsystem: (-alpha_0, alpha_1, alpha_3, ..., alpha_7).
inline std::vector<Root> a7_base(const RootSystem& rs) {
  return {-rs.highest_root(),  rs.simple_root(0), rs.simple_root(2), rs.simple_root(3),
          rs.simple_root(4), rs.simple_root(5), rs.simple_root(6)};
}

/// e = h_{-a0}(z) h_{a1}(z^2) ... h_{a7}(z^7) with z of order 8: the A_n
/// center pattern prod h_{beta_i}(z^i) over the A7 base.
inline GroupWord construct_e(const AdjointRep& rep) {
  const FieldElem z = rep.zeta(8);
  GroupWord w;
  int i = 1;
  for (const Root& b : a7_base(rep.basis().root_system()))
    w.tokens.push_back({GenKind::HRoot, b, rep.field().pow(z, i++)});
  return w;
}

/// The 4-term torus word e also equals: h_{a2}(-z^2) h_{a5}(z^2) h_{a7}(-z^2) h_{a6}(-1).
inline GroupWord construct_e_reduced(const AdjointRep& rep) {
  const Field& f = rep.field();
  const RootSystem& rs = rep.basis().root_system();
  const FieldElem z2 = f.pow(rep.zeta(8), 2);
  GroupWord w;
  w.tokens.push_back({GenKind::HRoot, rs.simple_root(1), f.neg(z2)});
  w.tokens.push_back({GenKind::HRoot, rs.simple_root(4), z2});
  w.tokens.push_back({GenKind::HRoot, rs.simple_root(6), f.neg(z2)});
  w.tokens.push_back({GenKind::HRoot, rs.simple_root(5), f.neg(f.one())});
  return w;
}

/// The seven pairwise orthogonal roots whose Weyl representatives multiply
/// to f, resolved by coefficient vector.
inline std::vector<Root> f_word_roots(const RootSystem& rs) {
  return {rs.root_by_digits("1000000"), rs.root_by_digits("0100000"),
          rs.root_by_digits("0000100"), rs.root_by_digits("0000001"),
          rs.root_by_digits("1122100"), rs.root_by_digits("1122221"),
          rs.root_by_digits("1224321")};
}

/// f = w_{a1} w_{a2} w_{a5} w_{a7} w_{a37} w_{a55} w_{a61}, all parameters 1.
/// The seven roots are pairwise orthogonal, so the factors commute.
inline GroupWord construct_f(const AdjointRep& rep) {
  GroupWord w;
  for (const Root& r : f_word_roots(rep.basis().root_system()))
    w.tokens.push_back({GenKind::WRoot, r, rep.field().one()});
  return w;
}

/// g realises diag(s, s, ..., s, -s) with s = sqrt(zeta) of order 16 in the
/// A7 subsystem subgroup: diag(t_1..t_8) = prod_i h_{beta_i}(t_1 ... t_i),
/// so g = prod_i h_{beta_i}(s^i). Determinant is (s^7)(-s) = -zeta^4 = 1.
inline GroupWord construct_g(const AdjointRep& rep) {
  const FieldElem s = rep.zeta(16);
  GroupWord w;
  int i = 1;
  for (const Root& b : a7_base(rep.basis().root_system()))
    w.tokens.push_back({GenKind::HRoot, b, rep.field().pow(s, i++)});
  return w;
}

// Lattice images of the torus words (exponents of zeta_m, no field needed).

inline TorsionTorusElement e_torsion(const TorsionLattice& lat) {
  std::vector<std::pair<Root, long long>> terms;
  long long i = 1;
  for (const Root& b : a7_base(lat.root_system())) terms.emplace_back(b, i++);
  return lat.h_element(terms, 8);
}

inline TorsionTorusElement g_torsion(const TorsionLattice& lat) {
  std::vector<std::pair<Root, long long>> terms;
  long long i = 1;
  for (const Root& b : a7_base(lat.root_system())) terms.emplace_back(b, i++);
  return lat.h_element(terms, 16);
}

/// f^2 = h_{a2}(-1) h_{a5}(-1) h_{a7}(-1) as a lattice element at modulus 2.
inline TorsionTorusElement f_squared_torsion(const TorsionLattice& lat) {
  const RootSystem& rs = lat.root_system();
  return lat.h_element({{rs.simple_root(1), 1}, {rs.simple_root(4), 1}, {rs.simple_root(6), 1}}, 2);
}

// ---------------------------------------------------------------------------

enum class InvolutionClassLabel { A7, D6A1, E6T1 };

inline const char* to_string(InvolutionClassLabel l) {
  switch (l) {
    case InvolutionClassLabel::A7: return "A7";
    case InvolutionClassLabel::D6A1: return "D6A1";
    case InvolutionClassLabel::E6T1: return "E6T1";
  }
  return "?";
}

/// Conjugacy class of an involution of the adjoint group, recognised by the
/// dimension of its fixed space on the adjoint module: 69 -> D6A1,
/// 79 -> E6T1, 63 -> A7. Any other dimension signals an engine bug.
inline InvolutionClassLabel involution_class(const AdjointMatrix& m) {
  if (m.is_identity()) throw std::invalid_argument("identity is not an involution");
  if (!(m * m).is_identity()) throw std::invalid_argument("matrix is not an involution");
  switch (m.fixed_space_dim()) {
    case 63: return InvolutionClassLabel::A7;
    case 69: return InvolutionClassLabel::D6A1;
    case 79: return InvolutionClassLabel::E6T1;
    default:
      throw std::runtime_error("involution fixed-space dimension outside {63, 69, 79}");
  }
}

// ---------------------------------------------------------------------------

struct RootConjugation {
  Root source;
  Root target;
  int sign;  // +1 or -1: fM x_source(c) fM^{-1} = x_target(sign * c)
};

/// Conjugation action of f on every root subgroup. The conjugate of a root
/// element is recognised from the Cartan columns of its matrix (subtract the
/// identity, locate the supported root line, solve for the scalar) and then
/// verified against a freshly built generator matrix.
inline std::vector<RootConjugation> root_conjugation_map(const AdjointRep& rep,
                                                         const AdjointMatrix& fM) {
  const RootSystem& rs = rep.basis().root_system();
  const Field& f = rep.field();
  const AdjointMatrix fInv = fM.inverse();
  std::vector<RootConjugation> out;
  for (int j = 0; j < rs.num_roots(); ++j) {
    const Root& alpha = rs.root_at(j);
    const AdjointMatrix c = fM * rep.x_matrix(alpha, f.one()) * fInv;
    // Cartan column h_i of x_beta(s) deviates from the identity exactly by
    // -s <beta, alpha_i^vee> in row beta.
    int target_row = -1;
    FieldElem scalar = f.zero();
    for (int i = 0; i < rs.rank() && target_row < 0; ++i) {
      const int col = rep.basis().cartan_basis_index(i);
      for (int r = 0; r < rs.num_roots(); ++r) {
        if (f.is_zero(c.at(r, col))) continue;
        target_row = r;
        const int pair = rs.pairing_unchecked(rs.root_at(r), rs.simple_root(i));
        scalar = f.mul(c.at(r, col), f.inv(f.from_int(-pair)));
        break;
      }
    }
    if (target_row < 0) throw std::runtime_error("conjugate of a root element has no root line");
    const Root target = rs.root_at(target_row);
    if (!(c == rep.x_matrix(target, scalar)))
      throw std::runtime_error("conjugate of a root element is not a root element");
    int sign;
    if (scalar == f.one())
      sign = +1;
    else if (scalar == f.neg(f.one()))
      sign = -1;
    else
      throw std::runtime_error("root element conjugation scalar is not a sign");
    out.push_back({alpha, target, sign});
  }
  return out;
}

// ---------------------------------------------------------------------------

struct CensusResult {
  std::map<int, int> dim_counts;  // fixed-space dimension -> class count
  int total = 0;                  // nontrivial classes tallied
};

/// Evaluates every nontrivial 2-torsion class of the adjoint maximal torus
/// (127 of them) on the adjoint module and tallies fixed-space dimensions.
inline CensusResult torus_involution_census(const AdjointRep& rep) {
  const TorsionLattice& lat = rep.lattice();
  CensusResult res;
  for (const TorsionTorusElement& v : lat.adjoint_two_torsion()) {
    const AdjointMatrix m = rep.torsion_to_matrix(v);
    if (!(m * m).is_identity())
      throw std::runtime_error("census element does not square to the identity");
    if (m.is_identity()) continue;  // the trivial class
    ++res.dim_counts[m.fixed_space_dim()];
    ++res.total;
  }
  return res;
}

// ---------------------------------------------------------------------------

struct SurveyCase {
  int a = 0;               // size of the first diagonal block
  int lambda_zeta_exp = 0; // 0: lambda = 1, 1: lambda = zeta
  bool feasible = false;   // determinant-1 filter (even a)
  bool nontrivial = false; // image is neither 1 nor e in the adjoint group
  long long sc_order_f = 0;
  long long sc_order_ef = 0;
  long long ad_order_f = 0;
};

/// Torus-level case analysis for diagonal involutions diag(lambda I_a,
/// -lambda I_{8-a}) in the A7 subsystem subgroup, lambda in {1, zeta}:
/// in every admissible case at least one of f', ef' has a simply connected
/// lift of order <= 2, which is impossible for an involution of type A7.
inline std::vector<SurveyCase> a7_involution_survey(const TorsionLattice& lat) {
  const std::vector<Root> base = a7_base(lat.root_system());
  const TorsionTorusElement e = e_torsion(lat);
  std::vector<SurveyCase> out;
  for (int a = 0; a <= 8; ++a) {
    for (int c = 0; c <= 1; ++c) {
      SurveyCase sc;
      sc.a = a;
      sc.lambda_zeta_exp = c;
      sc.feasible = (a % 2 == 0);  // det = (-1)^a must be 1
      if (!sc.feasible) {
        out.push_back(sc);
        continue;
      }
      // diag entries t_i = lambda (i <= a), -lambda (i > a); as an h-word the
      // parameters are prefix products t_1...t_i = zeta^{c i + 4 max(0, i-a)}
      std::vector<std::pair<Root, long long>> terms;
      for (int i = 1; i <= 7; ++i)
        terms.emplace_back(base[static_cast<std::size_t>(i - 1)],
                           c * i + 4 * std::max(0, i - a));
      const TorsionTorusElement fp = lat.h_element(terms, 8);
      const TorsionTorusElement efp = lat.add(e, fp);
      sc.nontrivial = !lat.is_trivial(fp, IsogenyForm::Adjoint) &&
                      !lat.equal_in_form(fp, e, IsogenyForm::Adjoint);
      sc.sc_order_f = lat.element_order(fp, IsogenyForm::SimplyConnected);
      sc.sc_order_ef = lat.element_order(efp, IsogenyForm::SimplyConnected);
      sc.ad_order_f = lat.element_order(fp, IsogenyForm::Adjoint);
      out.push_back(sc);
    }
  }
  return out;
}

}  // namespace chevkit
