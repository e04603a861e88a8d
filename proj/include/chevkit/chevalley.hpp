#pragma once

// Chevalley basis of the simple Lie algebra attached to a simply-laced root
// system, and the Steinberg generators realised as exact matrices on the
// adjoint module over a finite field.
//
// Basis order: e_alpha for every root (system order: positives then
// negatives), followed by the Cartan elements h_1..h_r. Structure constant
// signs are fixed by choosing N = +1 on extraspecial pairs, where the pair
// (alpha1, beta1) of a positive root gamma is the decomposition with alpha1
// minimal in the height-lex root order; every other constant follows from
// the Jacobi identity and the standard symmetries.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "chevkit/finitefield.hpp"
#include "chevkit/lattices.hpp"
#include "chevkit/rootsystem.hpp"

namespace chevkit {

class ChevalleyBasis {
 public:
  static ChevalleyBasis build(const RootSystem& rs) {
    ChevalleyBasis cb(rs);
    cb.fill_sum_table();
    cb.assert_short_strings();
    cb.fill_positive_table();
    cb.extend_table();
    return cb;
  }

  const RootSystem& root_system() const { return *rs_; }
  int num_roots() const { return rs_->num_roots(); }
  int rank() const { return rs_->rank(); }
  int dim() const { return num_roots() + rank(); }

  std::string sign_convention_id() const { return "extraspecial-min-height-lex-v1"; }

  /// N(alpha_i, alpha_j) by root index; 0 when the sum is not a root.
  int nconst(int i, int j) const { return table_[idx(i, j)]; }
  int nconst(const Root& a, const Root& b) const {
    return nconst(rs_->index_of(a), rs_->index_of(b));
  }

  /// Index of root_i + root_j, or -1.
  int sum_index(int i, int j) const { return sum_[idx(i, j)]; }

  int root_basis_index(int root_index) const { return root_index; }
  int cartan_basis_index(int simple_index) const { return num_roots() + simple_index; }

  /// Lie bracket of two basis vectors as a sparse integer combination.
  ///   [e_a, e_b] = N(a,b) e_{a+b}            when a+b is a root
  ///   [e_a, e_{-a}] = h_a = sum coroot coefficients h_i
  ///   [h_i, e_b] = <b, alpha_i^vee> e_b,  [h_i, h_j] = 0
  std::vector<std::pair<int, long long>> bracket(int bi, int bj) const {
    const int nr = num_roots();
    std::vector<std::pair<int, long long>> out;
    if (bi < nr && bj < nr) {
      const int s = sum_index(bi, bj);
      if (s >= 0) {
        out.emplace_back(s, nconst(bi, bj));
      } else if (rs_->root_at(bi) == -rs_->root_at(bj)) {
        const Root& a = rs_->root_at(bi);
        for (int t = 0; t < rank(); ++t)
          if (a.k[t] != 0) out.emplace_back(cartan_basis_index(t), a.k[t]);
      }
      return out;
    }
    if (bi >= nr && bj >= nr) return out;
    if (bi >= nr) {  // [h_i, e_b]
      const int i = bi - nr;
      out.emplace_back(bj, rs_->pairing_unchecked(rs_->root_at(bj), rs_->simple_root(i)));
      return out;
    }
    // [e_b, h_i] = -[h_i, e_b]
    const int i = bj - nr;
    out.emplace_back(bi, -rs_->pairing_unchecked(rs_->root_at(bi), rs_->simple_root(i)));
    return out;
  }

 private:
  explicit ChevalleyBasis(const RootSystem& rs) : rs_(&rs) {
    const std::size_t n = static_cast<std::size_t>(rs.num_roots());
    table_.assign(n * n, 0);
    sum_.assign(n * n, -1);
  }

  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(num_roots()) +
           static_cast<std::size_t>(j);
  }

  void fill_sum_table() {
    const int n = num_roots();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        sum_[idx(i, j)] = rs_->sum_index(rs_->root_at(i), rs_->root_at(j));
  }

  // Root strings in a simply-laced system have at most two roots; the
  // degree-3 term of exp(t ad e_alpha) vanishes for that reason, and the
  // matrix engine relies on it.
  void assert_short_strings() const {
    const int n = num_roots();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (sum_[idx(i, j)] < 0) continue;
        const Root two = rs_->root_at(i) + rs_->root_at(i) + rs_->root_at(j);
        if (rs_->is_root(two))
          throw std::runtime_error("root string longer than two roots; system is not simply laced");
      }
  }

  // N on pairs of positive roots. Extraspecial pairs get +1; a special pair
  // (a, b) with a < b and extraspecial (a1, b1) for gamma = a+b satisfies
  //   N(a,b) = N(a1, a-a1) N(a-a1, b) - N(a1, b-a1) N(b-a1, a)
  // with absent differences contributing zero. Both right-hand pairs sum to
  // roots of smaller height, so filling gamma in height order terminates.
  void fill_positive_table() {
    const int np = rs_->num_positive();
    for (int g = 0; g < np; ++g) {
      const Root gamma = rs_->root_at(g);
      int a1 = -1, b1 = -1;
      for (int a = 0; a < np; ++a) {
        const Root rest = gamma - rs_->root_at(a);
        if (!rs_->is_root(rest)) continue;
        const int b = rs_->index_of(rest);
        if (b < np && a < b) {
          a1 = a;
          b1 = b;
          break;  // roots are scanned in order, so the first hit is minimal
        }
      }
      if (a1 < 0) continue;  // gamma simple
      set_pair(a1, b1, 1);
      for (int a = a1 + 1; a < np; ++a) {
        const Root rest = gamma - rs_->root_at(a);
        if (!rs_->is_root(rest)) continue;
        const int b = rs_->index_of(rest);
        if (b >= np || a >= b) continue;
        const Root da = rs_->root_at(a) - rs_->root_at(a1);
        const Root db = rs_->root_at(b) - rs_->root_at(a1);
        long long val = 0;
        if (rs_->is_root(da)) {
          const int ia = rs_->index_of(da);
          val += lookup(a1, ia) * lookup(ia, b);
        }
        if (rs_->is_root(db)) {
          const int ib = rs_->index_of(db);
          val -= lookup(a1, ib) * lookup(ib, a);
        }
        if (val != 1 && val != -1)
          throw std::runtime_error("structure constant recursion produced |N| != 1");
        set_pair(a, b, static_cast<int>(val));
      }
    }
  }

  int lookup(int i, int j) const {
    const int v = table_[idx(i, j)];
    if (v == 0) throw std::logic_error("structure constant referenced before computed");
    return v;
  }

  void set_pair(int i, int j, int v) {
    table_[idx(i, j)] = static_cast<std::int8_t>(v);
    table_[idx(j, i)] = static_cast<std::int8_t>(-v);
  }

  // Extends the positive-pair table to arbitrary sign combinations using
  //   N(-a,-b) = -N(a,b)
  //   N(a,b) = N(b,c) = N(c,a) whenever a + b + c = 0 (equal lengths).
  void extend_table() {
    const int np = rs_->num_positive();
    const int n = num_roots();
    auto neg_index = [&](int i) { return i < np ? i + np : i - np; };
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (sum_[idx(i, j)] < 0) continue;
        if (i < np && j < np) continue;  // already filled
        int v;
        if (i >= np && j >= np)
          v = -table_[idx(neg_index(i), neg_index(j))];
        else if (i < np)
          v = resolved_mixed(i, j, np);
        else
          v = -resolved_mixed(j, i, np);
        table_[idx(i, j)] = static_cast<std::int8_t>(v);
      }
  }

  // N(a, b) for a positive, b negative, a + b a root:
  //   a + b positive:  N(a,b) = -N(-b, a+b)
  //   a + b negative:  N(a,b) =  N(-(a+b), a)
  // both reductions land on pairs of positive roots.
  int resolved_mixed(int i, int j, int np) const {
    const int g = sum_[idx(i, j)];
    if (g < np) return -table_[idx(j - np, g)];
    return table_[idx(g - np, i)];
  }

  const RootSystem* rs_;
  std::vector<std::int8_t> table_;
  std::vector<int> sum_;
};

// ---------------------------------------------------------------------------

/// Dense square matrix over a Field, sized for the adjoint module (dim 133
/// for E7). Multiplication skips zero entries, which makes products of the
/// naturally sparse generator matrices cheap.
class AdjointMatrix {
 public:
  AdjointMatrix(const Field* f, int n) : f_(f), n_(n), a_(static_cast<std::size_t>(n) * n) {}

  static AdjointMatrix matrix_identity(const Field* f, int n) {
    AdjointMatrix m(f, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f->one();
    return m;
  }

  int dim() const { return n_; }
  const Field& field() const { return *f_; }

  FieldElem& at(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  const FieldElem& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }

  friend bool operator==(const AdjointMatrix& x, const AdjointMatrix& y) {
    return x.n_ == y.n_ && x.a_ == y.a_;
  }

  AdjointMatrix operator*(const AdjointMatrix& o) const {
    check_compat(o);
    AdjointMatrix r(f_, n_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        const FieldElem& aik = at(i, k);
        if (f_->is_zero(aik)) continue;
        for (int j = 0; j < n_; ++j) {
          const FieldElem& bkj = o.at(k, j);
          if (f_->is_zero(bkj)) continue;
          r.at(i, j) = f_->add(r.at(i, j), f_->mul(aik, bkj));
        }
      }
    return r;
  }

  bool is_identity() const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        if (i == j && !(at(i, j) == f_->one())) return false;
        if (i != j && !f_->is_zero(at(i, j))) return false;
      }
    return true;
  }

  AdjointMatrix pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    AdjointMatrix base = *this;
    AdjointMatrix r = matrix_identity(f_, n_);
    while (e) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  /// Gauss-Jordan inverse; throws std::domain_error when singular.
  AdjointMatrix inverse() const {
    AdjointMatrix m = *this;
    AdjointMatrix inv = matrix_identity(f_, n_);
    for (int col = 0; col < n_; ++col) {
      int piv = -1;
      for (int r = col; r < n_; ++r)
        if (!f_->is_zero(m.at(r, col))) {
          piv = r;
          break;
        }
      if (piv < 0) throw std::domain_error("matrix is singular");
      if (piv != col) {
        for (int j = 0; j < n_; ++j) {
          std::swap(m.at(piv, j), m.at(col, j));
          std::swap(inv.at(piv, j), inv.at(col, j));
        }
      }
      const FieldElem pi = f_->inv(m.at(col, col));
      for (int j = 0; j < n_; ++j) {
        m.at(col, j) = f_->mul(m.at(col, j), pi);
        inv.at(col, j) = f_->mul(inv.at(col, j), pi);
      }
      for (int r = 0; r < n_; ++r) {
        if (r == col) continue;
        const FieldElem fct = m.at(r, col);
        if (f_->is_zero(fct)) continue;
        for (int j = 0; j < n_; ++j) {
          m.at(r, j) = f_->sub(m.at(r, j), f_->mul(fct, m.at(col, j)));
          inv.at(r, j) = f_->sub(inv.at(r, j), f_->mul(fct, inv.at(col, j)));
        }
      }
    }
    return inv;
  }

  /// dim ker(M - I) by exact Gaussian elimination.
  int fixed_space_dim() const {
    AdjointMatrix m = *this;
    for (int i = 0; i < n_; ++i) m.at(i, i) = f_->sub(m.at(i, i), f_->one());
    return n_ - rank_destructive(m);
  }

  /// Nullity of the stacked system {M_t - I}: the common fixed space.
  static int common_fixed_dim(std::span<const AdjointMatrix> ms) {
    if (ms.empty()) throw std::invalid_argument("no matrices given");
    const Field* f = ms[0].f_;
    const int n = ms[0].n_;
    std::vector<std::vector<FieldElem>> rows;
    for (const AdjointMatrix& m : ms) {
      for (int i = 0; i < n; ++i) {
        std::vector<FieldElem> row(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) row[j] = m.at(i, j);
        row[i] = f->sub(row[i], f->one());
        rows.push_back(std::move(row));
      }
    }
    return n - row_rank(*f, rows);
  }

 private:
  void check_compat(const AdjointMatrix& o) const {
    if (n_ != o.n_ || f_ != o.f_) throw std::invalid_argument("matrix shape/field mismatch");
  }

  static int row_rank(const Field& f, std::vector<std::vector<FieldElem>>& rows) {
    const int ncols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    int rank = 0;
    for (int col = 0; col < ncols && rank < static_cast<int>(rows.size()); ++col) {
      int piv = -1;
      for (int r = rank; r < static_cast<int>(rows.size()); ++r)
        if (!f.is_zero(rows[r][col])) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      std::swap(rows[rank], rows[piv]);
      const FieldElem pi = f.inv(rows[rank][col]);
      for (int j = col; j < ncols; ++j) rows[rank][j] = f.mul(rows[rank][j], pi);
      for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
        if (r == rank) continue;
        const FieldElem fct = rows[r][col];
        if (f.is_zero(fct)) continue;
        for (int j = col; j < ncols; ++j)
          rows[r][j] = f.sub(rows[r][j], f.mul(fct, rows[rank][j]));
      }
      ++rank;
    }
    return rank;
  }

  int rank_destructive(AdjointMatrix& m) const {
    std::vector<std::vector<FieldElem>> rows;
    rows.reserve(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      std::vector<FieldElem> row(static_cast<std::size_t>(n_));
      for (int j = 0; j < n_; ++j) row[j] = m.at(i, j);
      rows.push_back(std::move(row));
    }
    return row_rank(*f_, rows);
  }

  const Field* f_;
  int n_;
  std::vector<FieldElem> a_;
};

inline bool commutes(const AdjointMatrix& a, const AdjointMatrix& b) { return a * b == b * a; }

/// a b a^{-1}
inline AdjointMatrix conjugate(const AdjointMatrix& a, const AdjointMatrix& b) {
  return a * b * a.inverse();
}

// ---------------------------------------------------------------------------

/// Binds a Chevalley basis to a field and produces generator matrices on the
/// adjoint module. The run field is expected to contain a primitive 16th
/// root of unity; all smaller roots of unity are taken as its powers so that
/// elements built at different moduli stay compatible.
class AdjointRep {
 public:
  AdjointRep(const ChevalleyBasis& cb, const Field& f)
      : cb_(&cb), f_(&f), lattice_(cb.root_system()) {
    // the run field is expected to contain a 16th root of unity; computing it
    // up front keeps the object immutable and shareable across threads
    if ((f.order() - 1) % 16 == 0) {
      zeta16_ = f.primitive_root_of_unity(16);
      have_zeta16_ = true;
    }
  }

  const ChevalleyBasis& basis() const { return *cb_; }
  const Field& field() const { return *f_; }
  const TorsionLattice& lattice() const { return lattice_; }
  int dim() const { return cb_->dim(); }

  /// Primitive m-th root of unity, m | 16, coherent across m (zeta_m = zeta_16^{16/m}).
  FieldElem zeta(long long m) const {
    if (m < 1 || 16 % m != 0) throw std::invalid_argument("modulus must divide 16");
    if (!have_zeta16_)
      throw std::invalid_argument("field has no primitive 16th root of unity");
    return f_->pow(zeta16_, 16 / m);
  }

  AdjointMatrix identity_matrix() const { return AdjointMatrix::matrix_identity(f_, dim()); }

  /// exp(t ad e_alpha): unipotent, quadratic in t on the adjoint module.
  AdjointMatrix x_matrix(const Root& alpha, const FieldElem& t) const {
    const RootSystem& rs = cb_->root_system();
    const int ia = rs.index_of(alpha);
    const int nr = cb_->num_roots();
    AdjointMatrix m = identity_matrix();
    if (f_->is_zero(t)) return m;
    const FieldElem t2 = f_->mul(t, t);
    for (int j = 0; j < nr; ++j) {
      const Root& beta = rs.root_at(j);
      if (beta == -alpha) {
        // e_{-a} -> e_{-a} + t h_a - t^2 e_a
        for (int i = 0; i < cb_->rank(); ++i)
          if (alpha.k[i] != 0)
            m.at(cb_->cartan_basis_index(i), j) = f_->mul(t, f_->from_int(alpha.k[i]));
        m.at(ia, j) = f_->neg(t2);
        continue;
      }
      const int s = cb_->sum_index(ia, j);
      if (s >= 0) m.at(s, j) = f_->mul(t, f_->from_int(cb_->nconst(ia, j)));
    }
    for (int i = 0; i < cb_->rank(); ++i) {
      const int c = rs.pairing_unchecked(alpha, rs.simple_root(i));
      if (c != 0) m.at(ia, cb_->cartan_basis_index(i)) = f_->neg(f_->mul(t, f_->from_int(c)));
    }
    return m;
  }

  /// w_alpha(t) = x_alpha(t) x_{-alpha}(-t^{-1}) x_alpha(t), t nonzero.
  AdjointMatrix w_matrix(const Root& alpha, const FieldElem& t) const {
    if (f_->is_zero(t)) throw std::invalid_argument("w_alpha(0) is undefined");
    const FieldElem mti = f_->neg(f_->inv(t));
    return x_matrix(alpha, t) * x_matrix(-alpha, mti) * x_matrix(alpha, t);
  }

  /// h_alpha(t): diagonal, e_beta -> t^{<beta, alpha^vee>} e_beta, identity
  /// on the Cartan part. Must agree with w_alpha(t) w_alpha(1)^{-1}.
  AdjointMatrix h_matrix(const Root& alpha, const FieldElem& t) const {
    if (f_->is_zero(t)) throw std::invalid_argument("h_alpha(0) is undefined");
    const RootSystem& rs = cb_->root_system();
    AdjointMatrix m = identity_matrix();
    for (int j = 0; j < cb_->num_roots(); ++j)
      m.at(j, j) = f_->pow(t, rs.pairing_unchecked(rs.root_at(j), alpha));
    return m;
  }

  /// Evaluates a torsion torus element: e_beta -> zeta_m^{<beta, v>} e_beta.
  AdjointMatrix torsion_to_matrix(const TorsionTorusElement& v) const {
    const FieldElem zm = zeta(v.modulus);
    const RootSystem& rs = cb_->root_system();
    AdjointMatrix m = identity_matrix();
    for (int j = 0; j < cb_->num_roots(); ++j)
      m.at(j, j) = f_->pow(zm, lattice_.pairing_with(rs.root_at(j), v));
    return m;
  }

 private:
  const ChevalleyBasis* cb_;
  const Field* f_;
  TorsionLattice lattice_;
  FieldElem zeta16_{};
  bool have_zeta16_ = false;
};

}  // namespace chevkit
