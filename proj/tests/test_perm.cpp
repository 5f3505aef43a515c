#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "rauzy/perm.hpp"
#include "rauzy/stratum.hpp"
#include "rauzy/suspension.hpp"

using namespace rauzy;

namespace {

GP gp(const std::string& s) {
  return GP::parse(s);
}

GP relabel_randomly(const GP& pi, std::mt19937_64& rng) {
  int d = pi.size_alphabet();
  std::vector<int> p(d);
  for (int i = 0; i < d; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  std::vector<int> top, bottom;
  for (int a : pi.top()) top.push_back(p[a]);
  for (int a : pi.bottom()) bottom.push_back(p[a]);
  std::vector<std::string> names(d);
  for (int i = 0; i < d; ++i) names[i] = "L" + std::to_string(i);
  return GP(std::move(top), std::move(bottom), std::move(names));
}

}  // namespace

TEST_CASE("parsing, printing and validation") {
  GP pi = gp("1 2 1 2 3 / 3 4 4");
  CHECK(pi.str() == "1 2 1 2 3 / 3 4 4");
  CHECK(pi.size_alphabet() == 4);
  CHECK(pi.ell() == 5);
  CHECK(pi.m() == 3);
  CHECK(pi.is_quadratic());
  CHECK(gp("A 0 1 / 1 A 0").size_alphabet() == 3);
  CHECK_THROWS_AS(gp("1 2 / 1"), domain_error);        // letter 2 appears once
  CHECK_THROWS_AS(gp("1 1 2 2 3 / 3"), domain_error);  // top flips, no bottom flip
  CHECK_THROWS_AS(gp("1 1 2 3 / 2 3"), domain_error);  // top flip, no bottom flip
  CHECK_THROWS_AS(gp("1 2 3 3 2 1"), domain_error);    // missing slash
}

TEST_CASE("letter types") {
  GP pi = gp("1 2 1 2 3 / 3 4 4");
  CHECK(pi.letter_type(2) == LetterType::Translation);  // letter "3"
  CHECK(pi.letter_type(0) == LetterType::TopFlip);      // letter "1"
  CHECK(pi.letter_type(3) == LetterType::BottomFlip);   // letter "4"
  GP ab = gp("1 2 3 / 3 2 1");
  for (int a = 0; a < 3; ++a) CHECK(ab.letter_type(a) == LetterType::Translation);
  CHECK(ab.is_abelian());
  CHECK_THROWS_AS(pi.letter_type(17), domain_error);
}

TEST_CASE("canonical form examples") {
  CHECK(gp("2 1 2 1 3 / 3 4 4").canonical_form().str() == "1 2 1 2 3 / 3 4 4");
  CHECK(gp("1 2 3 / 3 2 1").canonical_form().str() == "1 2 3 / 3 2 1");
  CHECK(gp("5 5 1 / 1 2 2").canonical_form().str() == "1 1 2 / 2 3 3");
}

TEST_CASE("canonical form is idempotent and constant on re-indexing orbits") {
  std::mt19937_64 rng(7);
  for (const char* s : {"1 2 1 2 3 / 3 4 4", "1 2 3 2 4 / 4 5 5 3 1", "1 2 3 4 / 4 3 2 1"}) {
    GP pi = gp(s);
    GP c = pi.canonical_form();
    CHECK(c.canonical_form() == c);
    for (int k = 0; k < 10; ++k) {
      GP shuffled = relabel_randomly(pi, rng);
      CHECK(shuffled.canonical_form() == c);
      CHECK(is_irreducible(shuffled) == is_irreducible(pi));
    }
  }
}

TEST_CASE("irreducibility examples") {
  CHECK(is_irreducible(gp("1 2 3 / 3 2 1")));
  CHECK(is_irreducible(gp("1 2 1 2 3 / 3 4 4")));
  CHECK(is_irreducible(gp("1 2 / 2 1")));
  CHECK(!is_irreducible(gp("1 2 / 1 2")));  // classical abelian-reducible
  CHECK(!is_irreducible(gp("1 2 3 / 1 2 3")));
}

TEST_CASE("irreducibility equals the vertex-enumeration oracle on samples") {
  for (const char* s :
       {"1 2 3 / 3 2 1", "1 2 1 2 3 / 3 4 4", "1 2 / 1 2", "1 1 2 2 / 3 3 4 4",
        "1 2 3 2 4 / 4 5 5 3 1", "1 2 / 2 1", "1 1 2 / 2 3 3"}) {
    GP pi = gp(s);
    CHECK_MESSAGE(is_irreducible(pi) == is_irreducible_vertex_oracle(pi), s);
  }
}

TEST_CASE("singularity data of pinned strata") {
  SingularityData q211 = singularity_data(gp("1 2 1 2 3 / 3 4 4"));
  CHECK(!q211.abelian);
  CHECK(q211.orders == std::vector<long>{2, -1, -1});
  CHECK(q211.genus == 1);

  SingularityData h0 = singularity_data(gp("1 2 / 2 1"));
  CHECK(h0.abelian);
  CHECK(h0.genus == 1);
  for (long m : h0.orders) CHECK(m == 0);
}

TEST_CASE("singularity data of the sporadic representatives") {
  CHECK(singularity_data(gp("1 2 3 2 4 / 4 5 5 3 1")).orders == std::vector<long>{5, -1});
  CHECK(singularity_data(gp("1 2 3 4 5 6 3 / 7 7 6 5 4 2 1")).orders ==
        std::vector<long>{9, -1});
  CHECK(singularity_data(gp("1 2 1 3 4 5 6 7 / 2 4 3 6 5 8 7 8")).orders ==
        std::vector<long>{12});
  CHECK(singularity_data(gp("1 2 1 3 4 5 6 7 / 2 6 5 4 3 8 7 8")).orders ==
        std::vector<long>{12});
}

TEST_CASE("minimal-strata representative for g = 5 lies in Q(16)") {
  GP pi10 = gp("1 2 1 3 4 5 6 7 8 9 / 2 4 3 6 5 8 7 10 9 10");
  SingularityData sd = singularity_data(pi10);
  CHECK(sd.orders == std::vector<long>{16});
  CHECK(sd.genus == 5);
}

TEST_CASE("hyperelliptic representative for (r,s) = (3,1) lies in Q(6,2)") {
  GP pi = gp("A 0 1 2 A 3 4 / 4 3 B 2 1 0 B");
  SingularityData sd = singularity_data(pi);
  CHECK(sd.orders == std::vector<long>{6, 2});
  CHECK(sd.genus == 3);
}

TEST_CASE("rooting count formula") {
  SingularityData sd = make_singularity_data({2, -1, -1}, false);
  CHECK(sd.genus == 1);
  CHECK(rooting_count(sd) == 6);
  SingularityData h2 = make_singularity_data({2}, true);
  CHECK(h2.genus == 2);
  CHECK(rooting_count(h2) == 6);
  CHECK_THROWS_AS(make_singularity_data({3, -1, -1}, false), domain_error);
  CHECK_THROWS_AS(make_singularity_data({1}, true), domain_error);
}

TEST_CASE("component classification tables") {
  using K = ComponentKind;
  auto kinds = [](const std::vector<ComponentLabel>& ls) {
    std::vector<K> ks;
    for (const auto& l : ls) ks.push_back(l.kind);
    return ks;
  };
  CHECK(kinds(classify_components(make_singularity_data({4}, true))) ==
        std::vector<K>{K::Hyperelliptic, K::OddSpin});
  CHECK(kinds(classify_components(make_singularity_data({2, 2}, true))) ==
        std::vector<K>{K::Hyperelliptic, K::OddSpin});
  CHECK(kinds(classify_components(make_singularity_data({6}, true))) ==
        std::vector<K>{K::Hyperelliptic, K::EvenSpin, K::OddSpin});
  CHECK(kinds(classify_components(make_singularity_data({3, 3}, true))) ==
        std::vector<K>{K::Hyperelliptic, K::Connected});  // g = 4 even
  CHECK(kinds(classify_components(make_singularity_data({4, 4}, true))) ==
        std::vector<K>{K::Hyperelliptic, K::EvenSpin, K::OddSpin});  // g = 5 odd
  CHECK(kinds(classify_components(make_singularity_data({2, 4}, true))) ==
        std::vector<K>{K::EvenSpin, K::OddSpin});
  CHECK(kinds(classify_components(make_singularity_data({3, 2, 1}, true))) ==
        std::vector<K>{K::Connected});
  CHECK(kinds(classify_components(make_singularity_data({0}, true))) ==
        std::vector<K>{K::Hyperelliptic});

  CHECK(kinds(classify_components(make_singularity_data({9, -1}, false))) ==
        std::vector<K>{K::Regular, K::Irregular});
  CHECK(classify_components(make_singularity_data({4}, false)).empty());
  CHECK(classify_components(make_singularity_data({3, 1}, false)).empty());
  CHECK(classify_components(make_singularity_data({1, -1}, false)).empty());
  CHECK(kinds(classify_components(make_singularity_data({2, 2}, false))) ==
        std::vector<K>{K::Hyperelliptic});
  CHECK(kinds(classify_components(make_singularity_data({12}, false))) ==
        std::vector<K>{K::Regular, K::Irregular});
  CHECK(kinds(classify_components(make_singularity_data({6, 6}, false))) ==
        std::vector<K>{K::Hyperelliptic, K::Regular, K::Irregular});
  CHECK(kinds(classify_components(make_singularity_data({6, 2}, false))) ==
        std::vector<K>{K::Hyperelliptic, K::Connected});
  CHECK(kinds(classify_components(make_singularity_data({-1, -1, -1, -1}, false))) ==
        std::vector<K>{K::Connected});
  CHECK(kinds(classify_components(make_singularity_data({5, -1}, false))) ==
        std::vector<K>{K::Connected});
  CHECK(kinds(classify_components(make_singularity_data({9, 0, -1}, false))) ==
        std::vector<K>{K::Regular, K::Irregular});
}
