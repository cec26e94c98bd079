#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacklr/hookspace.hpp"
#include "jacklr/symfunc.hpp"

#include <bit>

using namespace jacklr;
using namespace jacklr::hookspace;
namespace r = jacklr::root;

namespace {

void expect_pass(const Check& c) {
  INFO(c.name << ": " << c.details);
  for (const auto& w : c.witnesses) INFO(w);
  CHECK(c.status == Status::Pass);
}

}  // namespace

TEST_CASE("window parameters") {
  WindowParams p;
  p.r2 = 1;
  p.n4 = 1;
  CHECK_THROWS_AS(hook_table(p), std::invalid_argument);
  auto s1 = sample_params(200, 42), s2 = sample_params(200, 42), s3 = sample_params(200, 43);
  REQUIRE(s1.size() == 200);
  bool differs = false;
  for (std::size_t i = 0; i < s1.size(); ++i) {
    CHECK(s1[i].to_string() == s2[i].to_string());
    differs = differs || s1[i].to_string() != s3[i].to_string();
    CHECK(s1[i].r2 * s1[i].n4 == 0);
    for (int v : {s1[i].m1, s1[i].m2, s1[i].m3, s1[i].n1, s1[i].n2, s1[i].n4, s1[i].r1, s1[i].r2})
      CHECK((v >= 0 && v <= 4));
  }
  CHECK(differs);
}

TEST_CASE("claws vanish on every sampled window") {
  MultiPoly be = parse_poly("a-1");
  for (const auto& p : sample_params(200, 42)) {
    HookTable t = hook_table(p);
    for (int b = 0; b < r::kBoxes; ++b) {
      auto primed = [&](int c) -> const MultiPoly& { return r::x_sign(c) > 0 ? t.free[c].upper : t.free[c].lower; };
      MultiPoly f = -be - MultiPoly::from_int(r::x_sign(b)) * primed(b);
      for (int a = 0; a < r::kBoxes; ++a)
        if (r::adjacent(a, b)) f += MultiPoly::from_int(r::x_sign(a)) * primed(a);
      INFO(p.to_string() << " box " << r::box_names()[b]);
      CHECK(f.is_zero());
      CHECK(claw_value(t, b).is_zero());
      // the two hooks of a box differ by beta
      CHECK(t.free[b].upper - t.free[b].lower == be);
    }
  }
}

TEST_CASE("five free hooks") {
  CHECK(free_vars().size() == 6);
  // the ten claw forms span a 5-dimensional space of ell forms
  std::vector<std::vector<Rational>> m;
  for (int b = 0; b < r::kBoxes; ++b) {
    MultiPoly cl = claw_ell(b);
    std::vector<Rational> row;
    for (int c = 0; c < r::kBoxes; ++c) row.push_back(cl.coeff(std::map<std::string, int>{{r::ell_var(c), 1}}));
    m.push_back(row);
  }
  CHECK(rational_rank(m) == 5);
  for (int b = 0; b < r::kBoxes; ++b) CHECK(pullback(claw_ell(b)).is_zero());
  expect_pass(verify_rank());
}

TEST_CASE("g* at the zero window is the LR coefficient") {
  HookTable t = hook_table({});
  Partition mu{2, 1}, lam{3, 2, 1};
  CHECK(evaluate(r::build_gstar(), t.physical) == lr_coefficient(mu, mu, lam));
  expect_pass(verify_root_evaluation());
  expect_pass(verify_k_values());
}

TEST_CASE("orbit sums") {
  MultiPoly sum;
  for (int k = 0; k <= 10; ++k) sum += beta().pow(10 - k) * orbit_sum(k);
  CHECK(gstar_ell() == MultiPoly::from_int(2) * sum);
  CHECK(orbit_sum(9).is_zero());
  for (int k : {1, 3, 5, 7}) CHECK(pullback(orbit_sum(k)).is_zero());
  CHECK_FALSE(pullback(orbit_sum(2)).is_zero());
  expect_pass(verify_orbit_sums());
  expect_pass(verify_odd_vanishing());
  expect_pass(verify_z2_invariance());
  expect_pass(verify_sigma56_invariance());
}

TEST_CASE("boundary data of the ten free boxes") {
  const std::map<std::string, std::string> expected = {
      {"a1", "mu:LUL;nu:ULU;lam:UL?UL?"}, {"a2", "mu:LLL;nu:UUU;lam:UU?UU?"},
      {"a3", "mu:LLU;nu:UUL;lam:UU?LL?"}, {"b1", "mu:ULU;nu:LUL;lam:UL?UL?"},
      {"b2", "mu:UUU;nu:LLL;lam:UU?UU?"}, {"b3t", "mu:UUL;nu:LLU;lam:UU?LL?"},
      {"c2", "mu:ULU;nu:ULU;lam:LU?LL?"}, {"c3", "mu:LUU;nu:LUU;lam:LU?UU?"},
      {"c4", "mu:UUU;nu:UUU;lam:LL?LU?"}, {"c5", "mu:UUL;nu:UUL;lam:LL?UL?"}};
  for (const auto& [name, text] : expected) {
    int b = r::box_index(name);
    REQUIRE(b >= 0);
    INFO(name);
    CHECK(boundary_datum(b, r::reference_choice(b)).to_string() == text);
    CHECK(boundary_mask(b, r::reference_choice(b)) == r::closed_neighborhood(b));
    CHECK(boundary_datum(b, complement(r::reference_choice(b))) ==
          boundary_datum(b, r::reference_choice(b)).conjugate());
  }
}

TEST_CASE("twenty hyperplane restrictions") {
  auto cs = verify_hyperplanes();
  CHECK(cs.size() == 20);
  for (const auto& c : cs) expect_pass(c);
  std::string pivot;
  MultiPoly q = restrict_to_hyperplane(MultiPoly::var(free_vars()[0]), 0, HookChoice::U, &pivot);
  CHECK_FALSE(pivot.empty());
  expect_pass(verify_boundary_equivariance());
}

TEST_CASE("e-expansion, support and positivity") {
  MultiPoly e = e_expansion();
  CHECK(e == expected_e_expansion());
  CHECK(e.coeff(std::map<std::string, int>{{kBeta, 10}}) == 42);
  for (const auto& [lam, a] : monomial_coefficients(e)) {
    if (a.is_zero()) continue;
    CHECK(lam.part(0) <= 3);
    for (const auto& [x, k] : a.terms()) CHECK(k >= 0);
  }
  for (const auto& [x, k] : phi_polynomial().terms()) CHECK(k >= 0);
  MultiPoly y = y_polynomial();
  CHECK(y.degree_in(kBeta) <= 7);
  for (const auto& [x, k] : y.terms()) CHECK(k >= 0);
  expect_pass(verify_e_expansion());
  expect_pass(verify_nonnegativity());
}
