#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacklr/petjohn.hpp"
#include "jacklr/stanley.hpp"
#include "jacklr/suites.hpp"

#include <bit>
#include <set>

using namespace jacklr;
using namespace jacklr::petjohn;

namespace {

using Mat = std::vector<std::vector<long long>>;

Mat mul(const Mat& a, const Mat& b) {
  std::size_t n = a.size();
  Mat c(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Mat shifted(const Graph& g, long long k) {
  Mat m(g.size(), std::vector<long long>(g.size()));
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j) m[i][j] = g.adj[i][j] - (i == j ? k : 0);
  return m;
}

bool is_zero(const Mat& m) {
  for (const auto& r : m)
    for (long long v : r)
      if (v) return false;
  return true;
}

int meet(Subset a, Subset b) { return std::popcount(a & b); }

}  // namespace

TEST_CASE("subset text") {
  CHECK(from_digits("126") == 0b100011u);
  CHECK(to_digits(from_digits("345")) == "345");
  CHECK(from_appendix("025") == 0b100101u);
  CHECK(to_appendix(from_appendix("134")) == "134");
  CHECK(complement(from_digits("126")) == from_digits("345"));
  CHECK_THROWS(from_digits("127"));
  CHECK_THROWS(from_digits("1x3"));
}

TEST_CASE("Petersen graph") {
  Graph g = petersen();
  CHECK(g.size() == 10);
  CHECK(g.edge_count() == 15);
  CHECK(g.regular(3));
  CHECK(girth(g) == 5);
  // strongly regular (10,3,0,1): A^2 + A - 2I = J
  Mat a = shifted(g, 0), a2 = mul(a, a);
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) CHECK(a2[i][j] + a[i][j] - 2 * (i == j) == 1);
  // (A-3)(A-1)(A+2) = 0 confirms the eigenvalue set
  CHECK(is_zero(mul(mul(shifted(g, 3), shifted(g, 1)), shifted(g, -2))));
  CHECK(eigen_multiplicity(g, 3) == 1);
  CHECK(eigen_multiplicity(g, 1) == 5);
  CHECK(eigen_multiplicity(g, -2) == 4);
  CHECK(eigen_multiplicity(g, 0) == 0);
}

TEST_CASE("Johnson graph J(6,3)") {
  Graph g = johnson();
  auto ts = triples();
  REQUIRE(ts.size() == 20);
  CHECK(g.size() == 20);
  CHECK(g.regular(9));
  CHECK(g.edge_count() == 90);
  for (int i = 0; i < 20; ++i) {
    CHECK(std::popcount(ts[i]) == 3);
    for (int j = 0; j < 20; ++j) CHECK(g.adj[i][j] == (meet(ts[i], ts[j]) == 2));
  }
  CHECK(is_zero(mul(mul(shifted(g, 9), shifted(g, 3)), mul(shifted(g, -1), shifted(g, -3)))));
  CHECK(eigen_multiplicity(g, 9) == 1);
  CHECK(eigen_multiplicity(g, 3) == 5);
  CHECK(eigen_multiplicity(g, -1) == 9);
  CHECK(eigen_multiplicity(g, -3) == 5);
}

TEST_CASE("rho of the reference pentagon: five 4-cycles") {
  Pentagon p = figure_pentagon();
  const char* cycles[5][4] = {{"126", "124", "345", "356"},
                              {"136", "456", "245", "123"},
                              {"146", "236", "235", "145"},
                              {"156", "135", "234", "246"},
                              {"256", "346", "134", "125"}};
  std::set<Subset> seen;
  for (const auto& cyc : cycles)
    for (int i = 0; i < 4; ++i) {
      CHECK(rho(p, from_digits(cyc[i])) == from_digits(cyc[(i + 1) % 4]));
      seen.insert(from_digits(cyc[i]));
    }
  CHECK(seen.size() == 20);
  for (Subset t : triples()) {
    CHECK(rho(p, rho(p, t)) == complement(t));
    for (Subset u : triples())
      if (t < u) CHECK((3 - meet(t, u) == 2) == (3 - meet(rho(p, t), rho(p, u)) == 1));
  }
}

TEST_CASE("pentads are five disjoint synthemes") {
  for (const auto& p : all_pentagons()) {
    auto pentad = pentad_from_pentagon(p);
    REQUIRE(pentad.size() == 5);
    std::set<Duad> duads;
    for (const auto& s : pentad) {
      unsigned cover = 0;
      for (auto [i, j] : s) {
        cover |= 1u << i | 1u << j;
        duads.insert({std::min(i, j), std::max(i, j)});
      }
      CHECK(cover == kAll6);
    }
    CHECK(duads.size() == 15);  // every duad exactly once
  }
}

TEST_CASE("twelve embeddings of the Petersen graph") {
  auto ps = all_pentagons();
  CHECK(ps.size() == 12);
  std::set<std::array<Subset, 10>> distinct;
  for (const auto& p : ps) {
    auto g = gamma_embedding(p);
    distinct.insert(g);
    for (int a = 0; a < 10; ++a)
      for (int b = 0; b < 10; ++b)
        if (root::adjacent(a, b)) CHECK(meet(g[a], g[b]) == 2);
  }
  CHECK(distinct.size() == 12);
}

TEST_CASE("signed triple table is a transversal of complementary pairs") {
  auto t = psi_table();
  std::set<Subset> classes;
  for (auto [sign, s] : t) {
    CHECK((sign == 1 || sign == -1));
    classes.insert(std::min(s, complement(s)));
  }
  CHECK(classes.size() == 10);
}

TEST_CASE("graph-layer checks") {
  for (auto f : {suites::verify_graph_counts, suites::verify_spectra, suites::verify_pentads,
                 suites::verify_rho_cycles, suites::verify_rho_distances, suites::verify_embeddings,
                 suites::verify_intertwiners, suites::verify_sigma56_action, suites::verify_appendix_labels}) {
    Check c = f();
    INFO(c.name << ": " << c.details);
    CHECK(c.ok());
    CHECK(c.status == Status::Pass);
  }
}
