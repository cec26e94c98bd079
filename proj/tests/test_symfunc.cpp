#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacklr/symfunc.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>

using namespace jacklr;

namespace {

MultiPoly P(const char* s) { return parse_poly(s); }

// number of matrices with row sums `rows`, column sums `cols`, entries <= cap
long long matrix_count(const std::vector<int>& rows, std::vector<int> cols, int cap) {
  std::function<long long(std::size_t, std::vector<int>&)> rec = [&](std::size_t r, std::vector<int>& left) -> long long {
    if (r == rows.size()) return std::all_of(left.begin(), left.end(), [](int v) { return v == 0; });
    long long total = 0;
    std::function<void(std::size_t, int)> fill = [&](std::size_t c, int need) {
      if (c == left.size()) {
        if (!need) total += rec(r + 1, left);
        return;
      }
      for (int k = 0; k <= std::min({need, left[c], cap}); ++k) {
        left[c] -= k;
        fill(c + 1, need - k);
        left[c] += k;
      }
    };
    fill(0, rows[r]);
    return total;
  };
  return rec(0, cols);
}

/* [m_mu] s_lam by Jacobi-Trudi: det(h_{lam_i - i + j}) or, for long
 * columns, det(e_{lam'_i - i + j}); [m_mu] h_alpha counts N-matrices and
 * [m_mu] e_alpha counts 0/1 matrices with the given margins. */
long long schur_monomial(const Partition& lam, const Partition& mu) {
  bool dual = lam.length() > lam.part(0);
  Partition shape = dual ? lam.conjugate() : lam;
  int n = shape.length();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long long total = 0;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
    std::vector<int> rows;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      int k = shape.part(i) - i + perm[i];
      if (k < 0) ok = false;
      else if (k > 0) rows.push_back(k);
    }
    if (!ok) continue;
    long long m = matrix_count(rows, mu.parts(), dual ? 1 : 1 << 20);
    total += inv % 2 ? -m : m;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

AlphaPoly norm_oracle(const Partition& l) {
  AlphaPoly p = MultiPoly::from_int(1);
  for (Box b : l.boxes()) p *= upper_hook(l, b) * lower_hook(l, b);
  return p;
}

}  // namespace

TEST_CASE("small Jack polynomials") {
  JackTable& t = default_jack_table();
  CHECK(t.jack(Partition()).coeffs.at(Partition()) == RatFunc(P("1")));
  CHECK(t.jack({1}).coeffs.at({1}) == RatFunc(P("1")));
  CHECK(t.jack({2}).coeffs.at({2}) == RatFunc(P("1+a")));
  CHECK(t.jack({2}).coeffs.at({1, 1}) == RatFunc(P("2")));
  CHECK(t.jack({1, 1}).coeffs.size() == 1);
  CHECK(t.jack({2, 1}).coeffs.at({2, 1}) == RatFunc(P("2+a")));
  CHECK(t.jack({2, 1}).coeffs.at({1, 1, 1}) == RatFunc(P("6")));
  CHECK(t.jack({3}).coeffs.at({3}) == RatFunc(P("(1+a)*(1+2*a)")));
}

TEST_CASE("LR and Stanley fixtures for (21,21)") {
  RatFunc want(P("6*a*(2+11*a+2*a^2)"), P("(1+2*a)*(2+a)*(2+3*a)*(3+2*a)"));
  CHECK(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}) == want);
  CHECK(stanley_coefficient({2, 1}, {2, 1}, {3, 2, 1}) == P("6*a^4*(1+2*a)*(2+a)*(2+11*a+2*a^2)"));
  CHECK(stanley_coefficient({2, 1}, {2, 1}, {2, 2, 1, 1}) == P("4*a^4*(1+2*a)^2*(3+a)*(4+a)"));
  CHECK(stanley_coefficient({1}, {1}, {1, 1}) == P("2*a^2"));
  CHECK(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}).evaluate({{"a", Rational(1)}}) == Rational(2, 5));
  CHECK_THROWS(lr_coefficient({1}, {1}, {3}));
}

TEST_CASE("norms and the m_{1^n} coefficient for |lambda| <= 8") {
  JackTable& t = default_jack_table();
  for (int n = 1; n <= 8; ++n) {
    Integer fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    Partition ones(std::vector<int>(n, 1));
    for (const auto& l : enumerate_partitions(n)) {
      CHECK(jnorm(l) == norm_oracle(l));
      CHECK(t.jack(l).coeffs.at(ones) == RatFunc(MultiPoly::constant(Rational(fact))));
    }
  }
}

TEST_CASE("orthogonality in the power-sum pairing for |lambda| <= 8") {
  JackTable& t = default_jack_table();
  for (int n = 1; n <= 8; ++n) {
    auto ps = enumerate_partitions(n);
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i; j < ps.size(); ++j) {
        AlphaPoly s;
        const auto& x = t.jack_power(ps[i]);
        const auto& y = t.jack_power(ps[j]);
        for (const auto& [rho, c] : x)
          if (auto it = y.find(rho); it != y.end())
            s += c * it->second * alpha().pow(rho.length()) * Rational(z_factor(rho));
        CHECK(s == (i == j ? norm_oracle(ps[i]) : AlphaPoly()));
      }
  }
}

TEST_CASE("alpha = 1 is the hook-scaled Schur function (Jacobi-Trudi oracle)") {
  JackTable& t = default_jack_table();
  const std::map<std::string, Rational> one = {{"a", Rational(1)}};
  for (int n = 1; n <= 8; ++n)
    for (const auto& l : enumerate_partitions(n))
      for (const auto& m : enumerate_partitions(n)) {
        const auto& co = t.jack(l).coeffs;
        auto it = co.find(m);
        Rational got = it == co.end() ? Rational(0) : it->second.evaluate(one);
        CHECK(got == Rational(Integer(hook_product(l) * static_cast<long>(schur_monomial(l, m)))));
      }
}

TEST_CASE("multiply and expand_in_jack are inverse to the product") {
  SymFunc f = multiply(jack({2, 1}), jack({1}));
  auto e = expand_in_jack(f);
  for (const auto& [lam, c] : e) CHECK(c == lr_coefficient({2, 1}, {1}, lam));
  CHECK(e.size() == 3);
}

TEST_CASE("cache round trip, key format and corrupted lines") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "jacklr_symfunc_cache_test";
  fs::remove_all(dir);
  std::string cold, warm;
  {
    JackTable t(6, dir.string());
    cold = RatFunc(t.jack({3, 2, 1}).coeffs.at({2, 2, 1, 1})).to_string();
    CHECK(t.stored() >= 1);
  }
  fs::path file = dir / "jack_deg6.txt";
  REQUIRE(fs::exists(file));
  {
    std::ifstream in(file);
    std::string line;
    bool found = false;
    while (std::getline(in, line)) found = found || line.rfind("3,2,1 := [", 0) == 0;
    CHECK(found);
  }
  {
    JackTable t(6, dir.string());
    warm = t.jack({3, 2, 1}).coeffs.at({2, 2, 1, 1}).to_string();
    CHECK(t.loaded() == 1);
    CHECK(t.warnings().empty());
  }
  CHECK(cold == warm);
  {
    std::ofstream app(file, std::ios::app);
    app << "3,3 := [ (6, 1+\n";
  }
  {
    JackTable t(6, dir.string());
    CHECK(t.jack({3, 2, 1}).coeffs.at({2, 2, 1, 1}).to_string() == cold);
    CHECK(t.loaded() == 0);
    CHECK_FALSE(t.warnings().empty());
  }
  JackTable capped(3, "");
  CHECK_THROWS_AS(capped.jack({2, 1, 1}), std::out_of_range);
  fs::remove_all(dir);
}
