#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rauzy/matrix.hpp"
#include "rauzy/poly.hpp"
#include "rauzy/simplex.hpp"

using namespace rauzy;

TEST_CASE("rational parsing and rounding") {
  CHECK(parse_rat("3/4") == make_rat(3, 4));
  CHECK(parse_rat("-12") == make_rat(-12));
  CHECK_THROWS_AS(parse_rat("x"), domain_error);
  Rat q = make_rat(355, 113);
  CHECK(round_rat(q, Int(200)) == q);
  Rat pi_ish = parse_rat("3141592653589793/1000000000000000");
  Rat r = round_rat(pi_ish, Int(120));
  CHECK(r.get_den() <= 120);
  CHECK(rat_to_double(r) == doctest::Approx(3.14159265).epsilon(1e-4));
}

TEST_CASE("matrix determinant, rank, kernel, inverse") {
  QMat m(3, 3, {2, 0, 0, 0, 3, 0, 0, 0, 5});
  CHECK(det(m) == Rat(30));
  CHECK(rank(m) == 3);
  QMat s(2, 3, {1, 2, 3, 2, 4, 6});
  CHECK(rank(s) == 1);
  QMat k = right_kernel(s);
  CHECK(k.rows() == 2);
  for (size_t i = 0; i < k.rows(); ++i) {
    Rat acc(0);
    for (size_t j = 0; j < 3; ++j) acc += s(0, j) * k(i, j);
    CHECK(acc == 0);
  }
  QMat inv = inverse(m);
  CHECK((m * inv) == QMat::identity(3));
}

TEST_CASE("charpoly is exact") {
  IMat a(2, 2, {2, 1, 1, 1});
  IVec cp = charpoly(a);  // t^2 - 3t + 1
  CHECK(cp == IVec{Int(1), Int(-3), Int(1)});
  IMat id = IMat::identity(3);
  CHECK(charpoly(id) == IVec{Int(-1), Int(3), Int(-3), Int(1)});
}

TEST_CASE("hnf, integer kernel, saturation") {
  IMat a(2, 2, {2, 4, 1, 2});
  IMat k = integer_left_kernel(a);
  CHECK(k.rows() == 1);
  // x * a = 0 with primitive x = (1, -2) up to sign
  CHECK((k(0, 0) * 2 + k(0, 1) * 1) == 0);
  Int g;
  mpz_gcd(g.get_mpz_t(), k(0, 0).get_mpz_t(), k(0, 1).get_mpz_t());
  CHECK(g == 1);

  IMat rows(1, 2, {2, 4});
  IMat sat = saturate_rows(rows);
  CHECK(sat.rows() == 1);
  CHECK(sat(0, 0) * 2 == sat(0, 1));  // spans (1, 2)
  Int g2;
  mpz_gcd(g2.get_mpz_t(), sat(0, 0).get_mpz_t(), sat(0, 1).get_mpz_t());
  CHECK(g2 == 1);
}

TEST_CASE("polynomial arithmetic and gcd") {
  ZPoly f = poly_from_string_coeffs({-1, 0, 1});  // t^2 - 1
  ZPoly g = poly_from_string_coeffs({1, 1});      // t + 1
  CHECK(divides(g, f));
  CHECK(exact_div(f, g) == poly_from_string_coeffs({-1, 1}));
  CHECK(gcd(f, g) == g);
  CHECK(is_reciprocal(poly_from_string_coeffs({1, 10, 22, 10, 1})));
  CHECK(!is_reciprocal(poly_from_string_coeffs({1, 2, 3})));
}

TEST_CASE("trace polynomial of a reciprocal polynomial") {
  // p = t^2 - 3t + 1, q(s) = s - 3
  ZPoly p = poly_from_string_coeffs({1, -3, 1});
  CHECK(trace_polynomial(p) == poly_from_string_coeffs({-3, 1}));
  // p = (t^2 - 3t + 1)(t^2 - 7t + 1): q = (s-3)(s-7) = s^2 - 10 s + 21
  ZPoly p2 = p * poly_from_string_coeffs({1, -7, 1});
  CHECK(trace_polynomial(p2) == poly_from_string_coeffs({21, -10, 1}));
}

TEST_CASE("sturm root counts") {
  ZPoly f = poly_from_string_coeffs({-2, 0, 1});  // t^2 - 2
  CHECK(sturm_count(f, std::nullopt, std::nullopt) == 2);
  CHECK(sturm_count(f, Rat(0), std::nullopt) == 1);
  CHECK(sturm_count(f, Rat(-1), Rat(1)) == 0);
  ZPoly g = poly_from_string_coeffs({0, -1, 0, 1});  // t^3 - t
  CHECK(sturm_count(g, std::nullopt, std::nullopt) == 3);
  CHECK(sturm_count(g, make_rat(-1, 2), make_rat(1, 2)) == 1);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == poly_from_string_coeffs({-1, 1}));
  CHECK(cyclotomic(2) == poly_from_string_coeffs({1, 1}));
  CHECK(cyclotomic(4) == poly_from_string_coeffs({1, 0, 1}));
  CHECK(cyclotomic(6) == poly_from_string_coeffs({1, -1, 1}));
  CHECK(cyclotomic(12) == poly_from_string_coeffs({1, 0, -1, 0, 1}));
}

TEST_CASE("factor degree patterns mod p") {
  // t^2 + 1 mod 3 irreducible; mod 5 splits
  ZPoly f = poly_from_string_coeffs({1, 0, 1});
  auto d3 = factor_degrees_mod_p(f, 3);
  REQUIRE(d3.has_value());
  CHECK(*d3 == std::vector<int>{2});
  auto d5 = factor_degrees_mod_p(f, 5);
  REQUIRE(d5.has_value());
  CHECK(*d5 == std::vector<int>{1, 1});
  // x^2 mod 3 is not squarefree
  CHECK(!factor_degrees_mod_p(poly_from_string_coeffs({0, 0, 1}), 3).has_value());
}

TEST_CASE("exact simplex agrees with vertex enumeration") {
  // maximize x + y over x,y >= 0, x + 2y <= 4, 3x + y <= 6
  LinearProgram lp;
  lp.A = QMat(2, 2, {1, 2, 3, 1});
  lp.b = {Rat(4), Rat(6)};
  lp.rel = {Rel::LE, Rel::LE};
  lp.c = {Rat(1), Rat(1)};
  LPResult res = lp_solve(lp);
  REQUIRE(res.feasible);
  CHECK(res.objective == make_rat(14, 5));

  // Same optimum through the brute-force oracle (with x,y >= 0 rows).
  QMat a(4, 2, {1, 2, 3, 1, -1, 0, 0, -1});
  QVec b = {Rat(4), Rat(6), Rat(0), Rat(0)};
  auto best = vertex_enumeration_max(a, b, {Rat(1), Rat(1)});
  REQUIRE(best.has_value());
  CHECK(best->first == make_rat(14, 5));
}

TEST_CASE("infeasible and equality-constrained programs") {
  LinearProgram lp;
  lp.A = QMat(2, 1, {1, -1});
  lp.b = {Rat(-1), Rat(-1)};  // x <= -1 and -x <= -1: infeasible with x >= 0
  lp.rel = {Rel::LE, Rel::LE};
  lp.c = {Rat(1)};
  CHECK(!lp_solve(lp).feasible);

  LinearProgram eq;
  eq.A = QMat(1, 2, {1, 1});
  eq.b = {Rat(3)};
  eq.rel = {Rel::EQ};
  eq.c = {Rat(1), Rat(0)};
  LPResult r = lp_solve(eq);
  REQUIRE(r.feasible);
  CHECK(r.objective == Rat(3));
}
