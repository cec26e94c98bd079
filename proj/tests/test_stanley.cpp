#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacklr/report.hpp"
#include "jacklr/stanley.hpp"
#include "jacklr/symfunc.hpp"

#include <bit>

using namespace jacklr;
using namespace jacklr::root;

namespace {

Rational q(long long v) { return Rational(static_cast<long>(v)); }

// Kneser adjacency straight from the labels
bool disjoint_labels(int a, int b) {
  auto [i, j] = petersen_label(a);
  auto [k, l] = petersen_label(b);
  return i != k && i != l && j != k && j != l;
}

int edge_oracle(Mask I) {
  int e = 0;
  for (int a = 0; a < kBoxes; ++a)
    for (int b = a + 1; b < kBoxes; ++b) e += (I >> a & 1) && (I >> b & 1) && disjoint_labels(a, b);
  return e;
}

// K^B_I by brute force: D = X^m agrees with B = X^ref on I iff m and ref agree on I
long long k_brute(const MaskSum& s, Mask ref, Mask I) {
  long long k = 0;
  for (const auto& [m, c] : s)
    if (((m ^ ref) & I) == 0) k += c;
  return k;
}

// formal primed value evaluated at integer points u_b, beta
Rational formal_value(const MaskSum& s, const std::array<long long, kBoxes>& u, long long beta_v) {
  Rational total = 0;
  for (const auto& [m, c] : s) {
    Rational p = q(c);
    for (int b = 0; b < kBoxes; ++b) {
      bool up = (x_sign(b) > 0) != static_cast<bool>(m >> b & 1);
      p *= q(up ? u[b] : u[b] - beta_v);
    }
    total += p;
  }
  return total;
}

}  // namespace

TEST_CASE("labels and adjacency") {
  CHECK(box_names().size() == 10);
  CHECK(box_index("b3t") == B3T);
  CHECK(box_index("zz") == -1);
  for (int b = 0; b < kBoxes; ++b) {
    auto [i, j] = petersen_label(b);
    CHECK(box_of_label(i, j) == b);
    for (int a = 0; a < kBoxes; ++a) CHECK(adjacent(a, b) == disjoint_labels(a, b));
    CHECK(std::popcount(static_cast<unsigned>(neighbors(b))) == 3);
  }
  CHECK(petersen_edges().size() == 15);
  int prod = 1;
  for (int b = 0; b < kBoxes; ++b) prod *= x_sign(b);
  CHECK(prod == -1);
  CHECK(x_sign(C2) == -1);
  CHECK(x_sign(C4) == -1);
  CHECK(x_sign(C5) == -1);
}

TEST_CASE("g* has 26 terms: 7, -2 on singletons, 1 on edges") {
  MaskSum g = gstar_masks();
  CHECK(g.size() == 26);
  for (const auto& [m, c] : g) {
    int n = std::popcount(static_cast<unsigned>(m));
    if (n == 0) CHECK(c == 7);
    else if (n == 1) CHECK(c == -2);
    else {
      CHECK(n == 2);
      CHECK(edge_oracle(m) == 1);
      CHECK(c == 1);
    }
  }
  CHECK(to_masks(build_gstar()) == g);
  CHECK(from_masks(g) == build_gstar());
  long long sum = 0;
  for (const auto& [m, c] : g) sum += c;
  CHECK(sum == 7 - 20 + 15);
}

TEST_CASE("diagrams round trip through masks") {
  CHECK(diagram(0) == reference_X());
  for (Mask m : {0, 1, 5, 77, 513, kFull}) {
    CHECK(mask_of(diagram(m)) == m);
    CHECK(flip(diagram(m), m) == reference_X());
  }
  StanleyDiagram d({2, 1}, {2, 1}, {3, 2, 1});
  CHECK(d.conjugate().conjugate() == d);
  CHECK(d.to_string() == "mu:UUU;nu:UUU;lam:UUUUUU");
}

TEST_CASE("g* evaluates to the LR coefficient") {
  HookContext ctx = triple_context({2, 1}, {2, 1}, {3, 2, 1});
  CHECK(evaluate(build_gstar(), ctx) == lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}));
}

TEST_CASE("K-values of g* and its conjugate for all 1024 subsets") {
  MaskSum g = gstar_masks();
  MaskSum gc = conjugate(g);
  auto K = k_transform(g, kFull);
  auto Kc = k_transform(gc, kFull);
  REQUIRE(K.size() == 1024);
  for (Mask I = 0; I <= kFull; ++I) {
    int n = std::popcount(static_cast<unsigned>(I));
    int e = edge_oracle(I);
    CHECK(K[I] == k_brute(g, kFull, I));
    CHECK(Kc[I] == k_brute(gc, kFull, I));
    CHECK(Kc[I] == 2 - n + e);
  }
}

TEST_CASE("Moebius inversion and change of reference, random sums") {
  Lcg64 g(7);
  for (int i = 0; i < 100; ++i) {
    MaskSum s;
    for (int t = 0, n = 1 + draw(g, 10); t < n; ++t) s[draw(g, kFull + 1)] += draw(g, 9) - 4;
    std::erase_if(s, [](const auto& kv) { return kv.second == 0; });
    Mask ra = draw(g, kFull + 1), rb = draw(g, kFull + 1);
    auto kb = k_transform(s, rb);
    for (Mask I : {0, 1, 300, 1023, static_cast<int>(draw(g, 1024))}) CHECK(kb[I] == k_brute(s, rb, I));
    CHECK(k_inverse(kb, rb) == s);
    CHECK(change_reference(kb, rb, ra) == k_transform(s, ra));
  }
}

TEST_CASE("kernel sums factor through beta^{|Y|-1} f") {
  Lcg64 g(11);
  for (int i = 0; i < 60; ++i) {
    Mask Y = 1 + draw(g, kFull);
    Mask ref = draw(g, kFull + 1);
    std::array<long long, kBoxes> a{}, u{};
    for (int b = 0; b < kBoxes; ++b) {
      if (Y >> b & 1) a[b] = draw(g, 9) - 4;
      u[b] = draw(g, 21) - 10;
    }
    long long d = draw(g, 9) - 4, bv = draw(g, 13) - 6;
    MaskSum k = kernel_sum(ref, Y, a, d);
    for (const auto& [m, c] : k) CHECK((m & ~Y) == (ref & ~Y));  // only boxes of Y move
    // independent right side: (-1)^|Y| sigma_Y prod_{not Y} h^B beta^{|Y|-1} f
    Rational rhs = std::popcount(static_cast<unsigned>(Y)) % 2 ? -1 : 1, f = q(d * bv);
    for (int b = 0; b < kBoxes; ++b) {
      bool up = (x_sign(b) > 0) != static_cast<bool>(ref >> b & 1);
      long long h = up ? u[b] : u[b] - bv;
      if (Y >> b & 1) {
        if (up) rhs = -rhs;
        f += q(a[b] * h);
      } else {
        rhs *= q(h);
      }
    }
    for (int t = 1; t < std::popcount(static_cast<unsigned>(Y)); ++t) rhs *= q(bv);
    rhs *= f;
    CHECK(formal_value(k, u, bv) == rhs);
    std::map<std::string, Rational> pt{{kBeta, q(bv)}};
    for (int b = 0; b < kBoxes; ++b) pt[hook_var(b)] = q(u[b]);
    CHECK(jacklr::evaluate(formal_primed(k), pt) == rhs);
  }
}

TEST_CASE("ell-basis weights of g*") {
  MultiPoly G = ell_expansion(gstar_masks());
  auto coeff_at = [&](Mask I) {
    std::map<std::string, int> mono;
    if (I) mono[kBeta] = std::popcount(static_cast<unsigned>(I));
    for (int b = 0; b < kBoxes; ++b)
      if (!(I >> b & 1)) mono[ell_var(b)] = 1;
    return G.coeff(mono);
  };
  CHECK(coeff_at(0) == 2);
  CHECK(coeff_at(kFull) == 42);
  CHECK(coeff_at(1 << A1) == 0);
  auto [e0, e1] = petersen_edges()[0];
  CHECK(coeff_at((1 << e0) | (1 << e1)) == 2);
  int far = 0;
  while (far == e0 || adjacent(e0, far)) ++far;
  CHECK(coeff_at((1 << e0) | (1 << far)) == -2);
  for (Mask I = 0; I <= kFull; ++I) {
    long long w = 2 * (2 * edge_oracle(I) - std::popcount(static_cast<unsigned>(I)) + 1);
    CHECK(coeff_at(I) == q(w));
    CHECK(gstar_weight(I) == w);
  }
}

TEST_CASE("S5 generators are Petersen automorphisms fixing g*") {
  MaskSum g = gstar_masks();
  auto gens = s5_generators();
  CHECK(gens.size() == 4);
  for (const auto& s : gens) {
    for (int a = 0; a < kBoxes; ++a)
      for (int b = 0; b < kBoxes; ++b) CHECK(disjoint_labels(a, b) == disjoint_labels(s.perm[a], s.perm[b]));
    CHECK(permute(s.perm, g) == g);
    CHECK(permute(s.perm, conjugate(g)) == conjugate(g));
  }
}

TEST_CASE("claw kernels live on closed neighbourhoods") {
  for (int b = 0; b < kBoxes; ++b) {
    MaskSum k = claw_kernel(b);
    CHECK_FALSE(k.empty());
    for (const auto& [m, c] : k) CHECK((m & ~closed_neighborhood(b)) == 0);
  }
}
