#pragma once

// Integer-lattice arithmetic for torsion torus elements. An element of order
// dividing m is stored as a vector over Z/m in coroot coordinates; the same
// vector can be read in the simply connected group (equality componentwise)
// or in the adjoint group (equality modulo m times the coweight lattice,
// decided through the Cartan matrix).

#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chevkit/rootsystem.hpp"
#include "chevkit/zmatrix.hpp"

namespace chevkit {

enum class IsogenyForm { SimplyConnected, Adjoint };

struct TorsionTorusElement {
  long long modulus = 1;
  std::array<long long, kMaxRank> c{};  // coroot coordinates, reduced mod modulus
  friend bool operator==(const TorsionTorusElement&, const TorsionTorusElement&) = default;
  friend auto operator<=>(const TorsionTorusElement&, const TorsionTorusElement&) = default;
};

/// Frobenius action on torus torsion: coordinates scale by twist*q. The
/// twist -1 variant models the action on a conjugate torus inverted by the
/// twisting element; no group element is ever materialised for it.
struct FrobeniusSpec {
  long long q = 1;
  int twist = +1;  // +1 or -1
};

/// Invariant factors (> 1) of the cokernel of the Cartan matrix.
inline ZVec fundamental_group(TypeLabel t) {
  SmithResult s = smith_normal_form(cartan_matrix(t));
  ZVec out;
  for (long long d : s.diag)
    if (d != 1) out.push_back(d);
  return out;
}
inline ZVec fundamental_group(std::string_view label) { return fundamental_group(parse_type(label)); }

class TorsionLattice {
 public:
  explicit TorsionLattice(const RootSystem& rs) : rs_(&rs), cartan_(rs.cartan()) {}

  const RootSystem& root_system() const { return *rs_; }

  TorsionTorusElement make(std::span<const long long> coeffs, long long m) const {
    if (m < 1) throw std::invalid_argument("modulus must be positive");
    if (static_cast<int>(coeffs.size()) != rank())
      throw std::invalid_argument("coefficient vector has wrong length");
    TorsionTorusElement t;
    t.modulus = m;
    for (int i = 0; i < rank(); ++i) t.c[i] = mod(coeffs[i], m);
    return t;
  }

  TorsionTorusElement zero(long long m) const {
    TorsionTorusElement t;
    t.modulus = m;
    return t;
  }

  /// Coroot coordinates of beta^vee over the simple coroots, computed by an
  /// exact integer solve against the Cartan matrix (for a simply-laced system
  /// the result equals the root coefficients).
  ZVec coroot_coordinates(const Root& beta) const {
    const int n = rank();
    ZVec rhs(n);
    for (int j = 0; j < n; ++j) rhs[j] = rs_->pairing(rs_->simple_root(j), beta);
    auto sol = solve_integer(cartan_, rhs);
    if (!sol) throw std::runtime_error("coroot expansion is not integral");
    return *sol;
  }

  /// Product of h_{beta_i}(zeta_m^{k_i}) as a lattice element: sum k_i beta_i^vee mod m.
  TorsionTorusElement h_element(const std::vector<std::pair<Root, long long>>& terms,
                                long long m) const {
    if (m < 1) throw std::invalid_argument("modulus must be positive");
    TorsionTorusElement t = zero(m);
    for (const auto& [beta, k] : terms) {
      const ZVec co = coroot_coordinates(beta);
      for (int i = 0; i < rank(); ++i) t.c[i] = mod(t.c[i] + k * co[i], m);
    }
    return t;
  }

  TorsionTorusElement add(const TorsionTorusElement& a, const TorsionTorusElement& b) const {
    require_same_modulus(a, b);
    TorsionTorusElement t = a;
    for (int i = 0; i < rank(); ++i) t.c[i] = mod(a.c[i] + b.c[i], a.modulus);
    return t;
  }

  TorsionTorusElement scale(const TorsionTorusElement& a, long long n) const {
    TorsionTorusElement t = a;
    for (int i = 0; i < rank(); ++i) t.c[i] = mod(n * a.c[i], a.modulus);
    return t;
  }

  /// Re-embed into a larger modulus: a at m maps to (m2/m)*a at m2.
  TorsionTorusElement rescale(const TorsionTorusElement& a, long long m2) const {
    if (m2 % a.modulus != 0) throw std::invalid_argument("new modulus must be a multiple");
    const long long f = m2 / a.modulus;
    TorsionTorusElement t;
    t.modulus = m2;
    for (int i = 0; i < rank(); ++i) t.c[i] = mod(f * a.c[i], m2);
    return t;
  }

  /// <beta, v> mod m for v = sum v_i alpha_i^vee.
  long long pairing_with(const Root& beta, const TorsionTorusElement& v) const {
    long long s = 0;
    for (int i = 0; i < rank(); ++i)
      s += v.c[i] * rs_->pairing(beta, rs_->simple_root(i));
    return mod(s, v.modulus);
  }

  bool is_trivial(const TorsionTorusElement& a, IsogenyForm form) const {
    if (form == IsogenyForm::SimplyConnected) {
      for (int i = 0; i < rank(); ++i)
        if (a.c[i] % a.modulus != 0) return false;
      return true;
    }
    // adjoint: trivial iff a lies in m * (coweight lattice), i.e. all simple
    // pairings <alpha_j, a> vanish mod m
    for (int j = 0; j < rank(); ++j) {
      long long s = 0;
      for (int i = 0; i < rank(); ++i) s += cartan_[j][i] * a.c[i];
      if (mod(s, a.modulus) != 0) return false;
    }
    return true;
  }

  bool equal_in_form(const TorsionTorusElement& a, const TorsionTorusElement& b,
                     IsogenyForm form) const {
    require_same_modulus(a, b);
    TorsionTorusElement d = a;
    for (int i = 0; i < rank(); ++i) d.c[i] = mod(a.c[i] - b.c[i], a.modulus);
    return is_trivial(d, form);
  }

  long long element_order(const TorsionTorusElement& a, IsogenyForm form) const {
    const long long m = a.modulus;
    auto order_of_vec = [&](std::span<const long long> v) {
      long long n = 1;
      for (long long x : v) {
        const long long g = std::gcd(mod(x, m), m);
        n = std::lcm(n, m / g);
      }
      return n;
    };
    if (form == IsogenyForm::SimplyConnected) {
      ZVec v(a.c.begin(), a.c.begin() + rank());
      return order_of_vec(v);
    }
    ZVec av(rank(), 0);
    for (int j = 0; j < rank(); ++j)
      for (int i = 0; i < rank(); ++i) av[j] += cartan_[j][i] * a.c[i];
    return order_of_vec(av);
  }

  /// h_{alpha_2}(-1) h_{alpha_5}(-1) h_{alpha_7}(-1) at modulus 2; generates
  /// the center of the simply connected form and is trivial in the adjoint.
  TorsionTorusElement central_element_sc() const {
    if (rs_->type() != TypeLabel{'E', 7})
      throw std::logic_error("central element is defined for E7 only");
    TorsionTorusElement t = zero(2);
    t.c[1] = t.c[4] = t.c[6] = 1;
    return t;
  }

  TorsionTorusElement frobenius_act(const TorsionTorusElement& a, FrobeniusSpec s) const {
    if (s.twist != 1 && s.twist != -1) throw std::invalid_argument("twist must be +1 or -1");
    if (std::gcd(mod(s.q, a.modulus), a.modulus) != 1)
      throw std::invalid_argument("q is not a unit modulo the element modulus");
    return scale(a, s.twist * s.q);
  }

  /// Whether the adjoint element represented by `a` lies in the derived
  /// subgroup of the sigma-fixed points: true iff the simply connected lift
  /// is sigma-fixed. Requires `a` to be sigma-stable in the adjoint form.
  bool in_derived_subgroup(const TorsionTorusElement& a, FrobeniusSpec s) const {
    const TorsionTorusElement img = frobenius_act(a, s);
    if (!equal_in_form(img, a, IsogenyForm::Adjoint))
      throw std::invalid_argument("element is not sigma-stable in the adjoint form");
    return equal_in_form(img, a, IsogenyForm::SimplyConnected);
  }

  struct CenterGenerator {
    TorsionTorusElement elem;
    long long order = 1;  // order in the requested form
  };

  /// Generators (with orders) of the m-torsion center of the subsystem
  /// subgroup with the given base, read in the requested ambient form:
  /// vectors in the base coroot span annihilated mod m by every base root,
  /// modulo triviality in the form.
  std::vector<CenterGenerator> subsystem_center(const SubsystemBase& sb, long long m,
                                                IsogenyForm form) const {
    const std::size_t nb = sb.base.size();
    ZMat c = rs_->induced_cartan(sb);
    SmithResult snf = smith_normal_form(c);

    // kernel of c mod m, generated by V * (m / gcd(d_i, m)) e_i
    std::vector<ZVec> gens_base;
    for (std::size_t i = 0; i < snf.diag.size(); ++i) {
      const long long g = std::gcd(mod(snf.diag[i], m), m);
      const long long f = m / g;
      if (f % m == 0) continue;  // contributes only the zero vector
      ZVec v(nb, 0);
      for (std::size_t r = 0; r < nb; ++r) v[r] = mod(f * snf.V[r][i], m);
      gens_base.push_back(std::move(v));
    }

    // map generators to ambient coroot coordinates
    std::vector<ZVec> base_coroots;
    for (const Root& r : sb.base) base_coroots.push_back(coroot_coordinates(r));
    auto to_ambient = [&](const ZVec& v) {
      TorsionTorusElement t = zero(m);
      for (std::size_t j = 0; j < nb; ++j)
        for (int i = 0; i < rank(); ++i) t.c[i] = mod(t.c[i] + v[j] * base_coroots[j][i], m);
      return t;
    };

    // the full kernel subgroup in ambient coordinates (small: bounded by
    // the product of gcd(d_i, m) over the base rank)
    std::set<TorsionTorusElement> subgroup{zero(m)};
    std::vector<TorsionTorusElement> frontier{zero(m)};
    std::vector<TorsionTorusElement> ambient_gens;
    for (const ZVec& v : gens_base) ambient_gens.push_back(to_ambient(v));
    while (!frontier.empty()) {
      std::vector<TorsionTorusElement> next;
      for (const auto& x : frontier)
        for (const auto& g : ambient_gens) {
          TorsionTorusElement y = add(x, g);
          if (subgroup.insert(y).second) next.push_back(y);
        }
      frontier = std::move(next);
    }

    // quotient by triviality in the requested form
    std::vector<TorsionTorusElement> reps;
    for (const auto& x : subgroup) {
      bool seen = false;
      for (const auto& r : reps)
        if (equal_in_form(x, r, form)) {
          seen = true;
          break;
        }
      if (!seen) reps.push_back(x);
    }
    const std::size_t quotient_order = reps.size();

    auto class_index = [&](const TorsionTorusElement& x) {
      for (std::size_t i = 0; i < reps.size(); ++i)
        if (equal_in_form(x, reps[i], form)) return i;
      throw std::logic_error("element escaped its own subgroup");
    };

    // greedy generating set of the quotient
    std::vector<CenterGenerator> out;
    std::set<std::size_t> generated{class_index(zero(m))};
    while (generated.size() < quotient_order) {
      std::size_t best = 0;
      long long best_order = 0;
      for (std::size_t i = 0; i < reps.size(); ++i) {
        if (generated.count(i)) continue;
        const long long o = element_order(reps[i], form);
        if (o > best_order) {
          best_order = o;
          best = i;
        }
      }
      out.push_back({reps[best], best_order});
      // close up
      std::set<std::size_t> closure = generated;
      std::vector<std::size_t> fr(closure.begin(), closure.end());
      while (!fr.empty()) {
        std::vector<std::size_t> nx;
        for (std::size_t ci : fr) {
          const TorsionTorusElement s = add(reps[ci], reps[best]);
          const std::size_t k = class_index(s);
          if (closure.insert(k).second) nx.push_back(k);
        }
        fr = std::move(nx);
      }
      generated = std::move(closure);
    }
    return out;
  }

  /// The 128 elements of the 2-torsion of the adjoint maximal torus, as
  /// sums of fundamental coweights 2*omega_j^vee embedded at modulus 4
  /// (so each has adjoint order dividing 2). Coroot vectors mod 2 reach only
  /// half of this group, so the coweight basis is used instead; the expected
  /// cardinality is verified and a mismatch reported as an engine error.
  std::vector<TorsionTorusElement> adjoint_two_torsion() const {
    const int n = rank();
    std::vector<ZVec> two_omega;  // 2*omega_j^vee over simple coroots
    for (int j = 0; j < n; ++j) {
      ZVec rhs(n, 0);
      rhs[j] = 2;
      auto sol = solve_integer(cartan_, rhs);
      if (!sol) throw std::runtime_error("2*coweight is not in the coroot lattice");
      two_omega.push_back(*sol);
    }
    std::vector<TorsionTorusElement> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
      TorsionTorusElement t = zero(4);
      for (int j = 0; j < n; ++j) {
        if (!(mask >> j & 1)) continue;
        for (int i = 0; i < n; ++i) t.c[i] = mod(t.c[i] + two_omega[j][i], 4);
      }
      out.push_back(t);
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (element_order(out[i], IsogenyForm::Adjoint) > 2)
        throw std::runtime_error("two-torsion representative has adjoint order > 2");
      for (std::size_t j = i + 1; j < out.size(); ++j)
        if (equal_in_form(out[i], out[j], IsogenyForm::Adjoint))
          throw std::runtime_error("two-torsion representatives collide in the adjoint form");
    }
    return out;
  }

  int rank() const { return rs_->rank(); }

  static long long mod(long long x, long long m) {
    const long long r = x % m;
    return r < 0 ? r + m : r;
  }

 private:
  void require_same_modulus(const TorsionTorusElement& a, const TorsionTorusElement& b) const {
    if (a.modulus != b.modulus) throw std::invalid_argument("modulus mismatch");
  }

  const RootSystem* rs_;
  ZMat cartan_;
};

}  // namespace chevkit
