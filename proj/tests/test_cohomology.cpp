#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "chevkit/cohomology.hpp"

using namespace chevkit;

namespace {

FiniteGroupModel& sym4() {
  static FiniteGroupModel g = build_sym4_model();
  return g;
}

FiniteGroupModel trivial_group() {
  FiniteGroupModel g;
  g.labels = {"1"};
  g.perms = {{0, 1, 2, 3}};
  g.mult = {{0}};
  g.inverse = {0};
  g.e_part = {0};
  g.sym3_part = {0};
  g.identity = 0;
  return g;
}

}  // namespace

TEST_CASE("sym4 model shape") {
  const FiniteGroupModel& g = sym4();
  CHECK(g.order() == 24);
  CHECK(center_elements(g).size() == 1);
  CHECK(conjugacy_classes(g).size() == 5);

  // E is normal of order 4 and Sym3 permutes {e, f, ef} faithfully
  int e_count = 0;
  for (int x = 0; x < g.order(); ++x)
    if (in_e(g, x)) ++e_count;
  CHECK(e_count == 4);
  std::set<int> images;
  for (int x = 0; x < g.order(); ++x) images.insert(g.sym3_part[x]);
  CHECK(images.size() == 6);

  // associativity spot-check, exhaustive at this size
  for (int a = 0; a < 24; ++a)
    for (int b = 0; b < 24; ++b)
      for (int c = 0; c < 24; ++c)
        CHECK(g.mult[g.mult[a][b]][c] == g.mult[a][g.mult[b][c]]);
}

TEST_CASE("h1 with trivial action is ordinary conjugacy") {
  const FiniteGroupModel& g = sym4();
  const auto h1 = h1_classes(g, trivial_automorphism(g));
  CHECK(h1.size() == 5);

  auto ordinary = conjugacy_classes(g);
  std::set<std::vector<int>> a, b;
  for (const H1Class& c : h1) a.insert(c.members);
  for (auto& c : ordinary) {
    std::sort(c.begin(), c.end());
    b.insert(c);
  }
  CHECK(a == b);

  std::size_t total = 0;
  for (const H1Class& c : h1) total += c.members.size();
  CHECK(total == 24);
}

TEST_CASE("h1 of the trivial group") {
  const FiniteGroupModel g = trivial_group();
  CHECK(h1_classes(g, trivial_automorphism(g)).size() == 1);
}

TEST_CASE("witness maps are valid") {
  const FiniteGroupModel& g = sym4();
  const int fe = e_element_index(g, 2);
  for (const GroupAutomorphism& sigma : {trivial_automorphism(g), conjugation_by(g, fe)}) {
    const auto h1 = h1_classes(g, sigma);
    std::size_t total = 0;
    for (const H1Class& cls : h1) {
      total += cls.members.size();
      for (int y : cls.members) {
        const int w = cls.witness.at(y);
        CHECK(g.mult[g.mult[g.inverse[sigma.image[w]]][cls.representative]][w] == y);
      }
    }
    CHECK(total == 24);  // classes partition the group
  }
}

TEST_CASE("inner twists biject with ordinary classes by translation") {
  const FiniteGroupModel& g = sym4();
  auto plain_classes = [&] {
    std::set<std::vector<int>> plain;
    for (auto c : conjugacy_classes(g)) {
      std::sort(c.begin(), c.end());
      plain.insert(c);
    }
    return plain;
  }();

  // every inner twist: x -> a^{-1} x carries twisted classes to ordinary ones
  for (int a = 0; a < g.order(); ++a) {
    const GroupAutomorphism sigma = conjugation_by(g, a);
    const auto twisted = h1_classes(g, sigma);
    CHECK(twisted.size() == 5);
    std::set<std::vector<int>> translated;
    for (const H1Class& cls : twisted) {
      std::vector<int> t;
      for (int y : cls.members) t.push_back(g.mult[g.inverse[a]][y]);
      std::sort(t.begin(), t.end());
      translated.insert(t);
    }
    CHECK(translated == plain_classes);
  }

  // for an involution a the right translation x -> x a works as well
  for (int a = 0; a < g.order(); ++a) {
    if (element_order(g, a) != 2) continue;
    const GroupAutomorphism sigma = conjugation_by(g, a);
    std::set<std::vector<int>> translated;
    for (const H1Class& cls : h1_classes(g, sigma)) {
      std::vector<int> t;
      for (int y : cls.members) t.push_back(g.mult[y][a]);
      std::sort(t.begin(), t.end());
      translated.insert(t);
    }
    CHECK(translated == plain_classes);
  }
}

TEST_CASE("burnside count") {
  const FiniteGroupModel& g = sym4();
  long long fixed = 0;
  for (int w = 0; w < g.order(); ++w)
    for (int x = 0; x < g.order(); ++x)
      if (g.mult[g.mult[w][x]][g.inverse[w]] == x) ++fixed;
  CHECK(fixed / g.order() == 5);
}

TEST_CASE("invalid automorphisms are rejected") {
  const FiniteGroupModel& g = sym4();
  GroupAutomorphism bad;
  bad.image.assign(static_cast<std::size_t>(g.order()), 0);  // not a bijection
  CHECK_THROWS_AS(h1_classes(g, bad), std::invalid_argument);
  // a bijection that is not multiplicative: swap two arbitrary elements
  GroupAutomorphism swap_two = trivial_automorphism(g);
  std::swap(swap_two.image[1], swap_two.image[2]);
  CHECK_FALSE(is_automorphism(g, swap_two));
}

TEST_CASE("structure descriptors match the table") {
  const FiniteGroupModel& g = sym4();
  const auto classes = h1_classes(g, trivial_automorphism(g));
  std::set<std::string> labels;
  for (const H1Class& cls : classes) {
    const std::string label = cycle_type_label(g, cls.representative);
    labels.insert(label);
    CHECK(structure_descriptor(g, cls) == normalizer_table_constants().at(label));
  }
  CHECK(labels == std::set<std::string>{"[(1)]", "[(1,2)]", "[(1,2)(3,4)]", "[(1,2,3)]",
                                        "[(1,2,3,4)]"});
  CHECK(descriptor_derivation_documented("[(1)]"));
  CHECK(descriptor_derivation_documented("[(1,2)]"));
  CHECK(descriptor_derivation_documented("[(1,2,3)]"));
  CHECK_FALSE(descriptor_derivation_documented("[(1,2)(3,4)]"));
  CHECK_FALSE(descriptor_derivation_documented("[(1,2,3,4)]"));
}

TEST_CASE("twisted relatedness facts") {
  const FiniteGroupModel& g = sym4();
  const int ee = e_element_index(g, 1);
  const int fe = e_element_index(g, 2);
  const int efe = e_element_index(g, 3);

  // f ~ ef under the trivial action, witnessed by an element inducing the
  // transposition (f ef) on E
  const auto w1 = twisted_related(g, trivial_automorphism(g), fe, efe);
  REQUIRE(w1.has_value());
  CHECK(g.mult[g.mult[g.inverse[*w1]][fe]][*w1] == efe);

  // 1 ~ e under conjugation by f: sigma(w)^{-1} w = e
  const GroupAutomorphism sigf = conjugation_by(g, fe);
  const auto w2 = twisted_related(g, sigf, g.identity, ee);
  REQUIRE(w2.has_value());
  CHECK(g.mult[g.inverse[sigf.image[*w2]]][*w2] == ee);

  // x ~ x with the identity witness whenever sigma fixes x
  const auto w3 = twisted_related(g, sigf, fe, fe);
  REQUIRE(w3.has_value());

  // f and e are not twisted-related under the trivial action (different
  // ordinary classes: transposition-type vs double-transposition-type)
  CHECK(cycle_type_label(g, fe) == cycle_type_label(g, ee));  // both in E: same type
  const int transposition = [&] {
    for (int x = 0; x < g.order(); ++x)
      if (cycle_type_label(g, x) == "[(1,2)]") return x;
    return -1;
  }();
  CHECK_FALSE(twisted_related(g, trivial_automorphism(g), transposition, ee).has_value());
}
