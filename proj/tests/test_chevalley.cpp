#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "chevkit/chevalley.hpp"

using namespace chevkit;

namespace {

struct Engine {
  RootSystem rs = RootSystem::build("E7");
  ChevalleyBasis cb = ChevalleyBasis::build(rs);
  Field field{17, 1};
  AdjointRep rep{cb, field};
};

Engine& engine() {
  static Engine e;
  return e;
}

// sparse integer vector arithmetic for bracket oracles
using SparseVec = std::map<int, long long>;

SparseVec bracket_vec(const ChevalleyBasis& cb, const SparseVec& u, const SparseVec& v) {
  SparseVec out;
  for (auto [bi, ci] : u)
    for (auto [bj, cj] : v)
      for (auto [b, c] : cb.bracket(bi, bj)) {
        out[b] += ci * cj * c;
        if (out[b] == 0) out.erase(b);
      }
  return out;
}

}  // namespace

TEST_CASE("structure constants are signs with antisymmetry") {
  const ChevalleyBasis& cb = engine().cb;
  const RootSystem& rs = engine().rs;
  int pairs = 0;
  for (int i = 0; i < rs.num_roots(); ++i)
    for (int j = 0; j < rs.num_roots(); ++j) {
      if (cb.sum_index(i, j) >= 0) {
        ++pairs;
        const int n = cb.nconst(i, j);
        CHECK((n == 1 || n == -1));
        CHECK(cb.nconst(j, i) == -n);
      } else {
        CHECK(cb.nconst(i, j) == 0);
      }
    }
  CHECK(pairs > 0);
  CHECK(cb.sign_convention_id() == "extraspecial-min-height-lex-v1");
}

TEST_CASE("brackets vanish when the sum is not a root") {
  const ChevalleyBasis& cb = engine().cb;
  const RootSystem& rs = engine().rs;
  const int i = rs.index_of(rs.simple_root(0));
  const int j = rs.index_of(rs.simple_root(1));  // a1 + a2 is not a root
  CHECK(cb.bracket(i, j).empty());
}

TEST_CASE("jacobi identity on 500 random basis triples") {
  const ChevalleyBasis& cb = engine().cb;
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 500; ++trial) {
    const int x = static_cast<int>(rng() % 133);
    const int y = static_cast<int>(rng() % 133);
    const int z = static_cast<int>(rng() % 133);
    SparseVec sx{{x, 1}}, sy{{y, 1}}, sz{{z, 1}};
    SparseVec total;
    for (auto [b, c] : bracket_vec(cb, sx, bracket_vec(cb, sy, sz))) total[b] += c;
    for (auto [b, c] : bracket_vec(cb, sy, bracket_vec(cb, sz, sx))) total[b] += c;
    for (auto [b, c] : bracket_vec(cb, sz, bracket_vec(cb, sx, sy))) total[b] += c;
    for (auto [b, c] : total) CHECK(c == 0);
  }
}

TEST_CASE("x matrices") {
  Engine& e = engine();
  const Field& f = e.field;
  const Root a = e.rs.simple_root(3);
  CHECK(e.rep.x_matrix(a, f.zero()).is_identity());

  std::mt19937_64 rng(102);
  for (int t = 0; t < 50; ++t) {
    const Root& r = e.rs.root_at(static_cast<int>(rng() % 126));
    const FieldElem s = f.from_int(static_cast<long long>(rng() % 17));
    const FieldElem u = f.from_int(static_cast<long long>(rng() % 17));
    CHECK(e.rep.x_matrix(r, s) * e.rep.x_matrix(r, u) == e.rep.x_matrix(r, f.add(s, u)));
  }

  // unipotency degree: (x(t) - 1)^3 = 0 because ad e_a is 3-step nilpotent
  const AdjointMatrix x = e.rep.x_matrix(a, f.from_int(5));
  AdjointMatrix d = x;
  for (int i = 0; i < d.dim(); ++i) d.at(i, i) = f.sub(d.at(i, i), f.one());
  const AdjointMatrix d3 = d * d * d;
  CHECK(d3 == AdjointMatrix(&f, d.dim()));
}

TEST_CASE("ad e_a is nilpotent of degree at most four") {
  const ChevalleyBasis& cb = engine().cb;
  std::mt19937_64 rng(103);
  for (int t = 0; t < 10; ++t) {
    const int ia = static_cast<int>(rng() % 126);
    SparseVec ea{{ia, 1}};
    for (int b = 0; b < cb.dim(); ++b) {
      SparseVec v{{b, 1}};
      for (int rep = 0; rep < 4; ++rep) v = bracket_vec(cb, ea, v);
      CHECK(v.empty());
    }
  }
}

TEST_CASE("w matrices") {
  Engine& e = engine();
  const Field& f = e.field;
  std::mt19937_64 rng(104);
  CHECK_THROWS_AS(e.rep.w_matrix(e.rs.simple_root(0), f.zero()), std::invalid_argument);
  for (int t = 0; t < 25; ++t) {
    const Root& a = e.rs.root_at(static_cast<int>(rng() % 126));
    const AdjointMatrix w1 = e.rep.w_matrix(a, f.one());
    CHECK(w1 * w1 == e.rep.h_matrix(a, f.neg(f.one())));
    CHECK((w1 * w1 * w1 * w1).is_identity());

    // weight-space tracking: w_a sends the e_b line to the e_{s_a(b)} line
    const Root& b = e.rs.root_at(static_cast<int>(rng() % 126));
    const int jb = e.rs.index_of(b);
    const int target = e.rs.index_of(e.rs.reflect(b, a));
    for (int r = 0; r < 126; ++r) {
      if (r == target) {
        const FieldElem v = w1.at(r, jb);
        CHECK((v == f.one() || v == f.neg(f.one())));
      } else {
        CHECK(f.is_zero(w1.at(r, jb)));
      }
    }
  }
}

TEST_CASE("h matrices") {
  Engine& e = engine();
  const Field& f = e.field;
  CHECK(e.rep.h_matrix(e.rs.simple_root(2), f.one()).is_identity());
  CHECK_THROWS_AS(e.rep.h_matrix(e.rs.simple_root(2), f.zero()), std::invalid_argument);

  std::mt19937_64 rng(105);
  for (int t = 0; t < 100; ++t) {
    const Root& a = e.rs.root_at(static_cast<int>(rng() % 126));
    const FieldElem s = f.from_int(static_cast<long long>(1 + rng() % 16));
    // definitional agreement: w_a(s) w_a(1)^{-1} equals the diagonal form
    const AdjointMatrix w1inv = e.rep.w_matrix(a, f.neg(f.one()));
    CHECK((e.rep.w_matrix(a, f.one()) * w1inv).is_identity());
    CHECK(e.rep.w_matrix(a, s) * w1inv == e.rep.h_matrix(a, s));
    // multiplicativity
    const FieldElem u = f.from_int(static_cast<long long>(1 + rng() % 16));
    CHECK(e.rep.h_matrix(a, s) * e.rep.h_matrix(a, u) == e.rep.h_matrix(a, f.mul(s, u)));
  }

  // h_a(-1) acts by signs on every root space
  const AdjointMatrix hm = e.rep.h_matrix(e.rs.simple_root(0), f.neg(f.one()));
  for (int j = 0; j < 126; ++j) {
    const FieldElem v = hm.at(j, j);
    CHECK((v == f.one() || v == f.neg(f.one())));
  }
}

TEST_CASE("generator matrices preserve the bracket") {
  Engine& e = engine();
  const Field& f = e.field;
  const ChevalleyBasis& cb = e.cb;
  std::mt19937_64 rng(106);

  std::vector<AdjointMatrix> gens;
  gens.push_back(e.rep.x_matrix(e.rs.root_at(7), f.from_int(3)));
  gens.push_back(e.rep.w_matrix(e.rs.root_at(40), f.from_int(2)));
  gens.push_back(e.rep.h_matrix(e.rs.root_at(90), f.from_int(5)));
  gens.push_back(e.rep.x_matrix(e.rs.root_at(100), f.from_int(11)));

  for (const AdjointMatrix& m : gens)
    for (int t = 0; t < 40; ++t) {
      const int u = static_cast<int>(rng() % 133);
      const int v = static_cast<int>(rng() % 133);
      // lhs: m applied to [b_u, b_v]
      std::vector<FieldElem> lhs(133, f.zero());
      for (auto [b, c] : cb.bracket(u, v))
        for (int r = 0; r < 133; ++r)
          lhs[r] = f.add(lhs[r], f.mul(m.at(r, b), f.from_int(c)));
      // rhs: [m b_u, m b_v] via bilinear extension over matrix columns
      std::vector<FieldElem> rhs(133, f.zero());
      for (int i = 0; i < 133; ++i) {
        if (f.is_zero(m.at(i, u))) continue;
        for (int j = 0; j < 133; ++j) {
          if (f.is_zero(m.at(j, v))) continue;
          const FieldElem coef = f.mul(m.at(i, u), m.at(j, v));
          for (auto [b, c] : cb.bracket(i, j))
            rhs[b] = f.add(rhs[b], f.mul(coef, f.from_int(c)));
        }
      }
      for (int r = 0; r < 133; ++r) CHECK(lhs[r] == rhs[r]);
    }
}

TEST_CASE("commuting and non-commuting root subgroups") {
  Engine& e = engine();
  const Field& f = e.field;
  std::mt19937_64 rng(107);
  int checked = 0;
  while (checked < 100) {
    const int i = static_cast<int>(rng() % 126);
    const int j = static_cast<int>(rng() % 126);
    const Root &a = e.rs.root_at(i), &b = e.rs.root_at(j);
    if (a == -b || e.rs.is_root(a + b)) continue;
    const FieldElem s = f.from_int(static_cast<long long>(1 + rng() % 16));
    const FieldElem t = f.from_int(static_cast<long long>(1 + rng() % 16));
    CHECK(commutes(e.rep.x_matrix(a, s), e.rep.x_matrix(b, t)));
    ++checked;
  }
}

TEST_CASE("chevalley commutator relation") {
  Engine& e = engine();
  const Field& f = e.field;
  std::mt19937_64 rng(108);
  int checked = 0;
  while (checked < 60) {
    const int i = static_cast<int>(rng() % 126);
    const int j = static_cast<int>(rng() % 126);
    if (e.cb.sum_index(i, j) < 0) continue;
    const Root &a = e.rs.root_at(i), &b = e.rs.root_at(j);
    const FieldElem s = f.from_int(static_cast<long long>(1 + rng() % 16));
    const FieldElem t = f.from_int(static_cast<long long>(1 + rng() % 16));
    const AdjointMatrix comm = e.rep.x_matrix(a, f.neg(s)) * e.rep.x_matrix(b, f.neg(t)) *
                               e.rep.x_matrix(a, s) * e.rep.x_matrix(b, t);
    const FieldElem nst = f.mul(f.from_int(e.cb.nconst(i, j)), f.mul(s, t));
    CHECK(comm == e.rep.x_matrix(a + b, nst));
    ++checked;
  }
}

TEST_CASE("torsion elements as matrices") {
  Engine& e = engine();
  const Field& f = e.field;
  const TorsionLattice& lat = e.rep.lattice();

  CHECK(e.rep.torsion_to_matrix(lat.zero(8)).is_identity());

  std::mt19937_64 rng(109);
  for (long long m : {2LL, 4LL, 8LL, 16LL})
    for (int t = 0; t < 10; ++t) {
      const Root& a = e.rs.root_at(static_cast<int>(rng() % 126));
      const long long k = static_cast<long long>(rng() % m);
      const TorsionTorusElement v = lat.h_element({{a, k}}, m);
      const FieldElem zk = f.pow(e.rep.zeta(m), k);
      CHECK(e.rep.h_matrix(a, zk) == e.rep.torsion_to_matrix(v));
    }
  CHECK_THROWS_AS(e.rep.torsion_to_matrix(lat.zero(3)), std::invalid_argument);
}

TEST_CASE("fixed space dimensions") {
  Engine& e = engine();
  CHECK(e.rep.identity_matrix().fixed_space_dim() == 133);
  const TorsionLattice& lat = e.rep.lattice();
  const AdjointMatrix em = e.rep.torsion_to_matrix(
      lat.h_element({{-e.rs.highest_root(), 1},
                     {e.rs.simple_root(0), 2},
                     {e.rs.simple_root(2), 3},
                     {e.rs.simple_root(3), 4},
                     {e.rs.simple_root(4), 5},
                     {e.rs.simple_root(5), 6},
                     {e.rs.simple_root(6), 7}},
                    8));
  CHECK((em * em).is_identity());
  CHECK(em.fixed_space_dim() == 63);
}

TEST_CASE("representation over a field without 16th roots") {
  Engine& e = engine();
  const Field small(3, 1);
  AdjointRep rep(e.cb, small);
  CHECK_NOTHROW(rep.w_matrix(e.rs.simple_root(0), small.one()));
  CHECK(rep.h_matrix(e.rs.simple_root(0), small.from_int(2)).fixed_space_dim() > 0);
  CHECK_THROWS_AS(rep.zeta(8), std::invalid_argument);
  CHECK_THROWS_AS(rep.torsion_to_matrix(rep.lattice().zero(2)), std::invalid_argument);
}

TEST_CASE("matrix inverse and singular detection") {
  Engine& e = engine();
  const Field& f = e.field;
  const AdjointMatrix w = e.rep.w_matrix(e.rs.root_at(17), f.from_int(3));
  CHECK((w * w.inverse()).is_identity());
  CHECK_THROWS_AS(AdjointMatrix(&f, 5).inverse(), std::domain_error);
}
