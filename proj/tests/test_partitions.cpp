#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacklr/partitions.hpp"
#include "jacklr/symfunc.hpp"

#include <map>

using namespace jacklr;

namespace {

// Euler's pentagonal recurrence p(n) = sum_k (-1)^{k+1} (p(n-k(3k-1)/2) + p(n-k(3k+1)/2))
long long partition_count(int n) {
  std::vector<long long> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      long long s = (k % 2) ? 1 : -1;
      p[m] += s * p[m - g1];
      if (g2 <= m) p[m] += s * p[m - g2];
    }
  return p[n];
}

// standard tableaux count by removing the largest entry
long long syt_count(const std::vector<int>& lam, std::map<std::vector<int>, long long>& memo) {
  int n = 0;
  for (int v : lam) n += v;
  if (n <= 1) return 1;
  if (auto it = memo.find(lam); it != memo.end()) return it->second;
  long long total = 0;
  for (std::size_t i = 0; i < lam.size(); ++i)
    if (i + 1 == lam.size() || lam[i + 1] < lam[i]) {
      auto mu = lam;
      if (--mu[i] == 0) mu.pop_back();
      total += syt_count(mu, memo);
    }
  return memo[lam] = total;
}

}  // namespace

TEST_CASE("parse and print") {
  CHECK(Partition::parse("3,2,1") == Partition{3, 2, 1});
  CHECK(Partition::parse("").length() == 0);
  CHECK(Partition{3, 2, 1}.to_string() == "3,2,1");
  CHECK_THROWS(Partition::parse("2,x"));
  CHECK_THROWS(Partition({1, 2}));
  CHECK_THROWS(Partition({2, 0}));
}

TEST_CASE("arms, legs, hooks of 321") {
  Partition l{3, 2, 1};
  CHECK(arm(l, {0, 0}) == 2);
  CHECK(leg(l, {0, 0}) == 2);
  CHECK(upper_hook(l, {0, 0}) == parse_poly("3*a+2"));
  CHECK(lower_hook(l, {0, 0}) == parse_poly("2*a+3"));
  CHECK(upper_hook(l, {2, 0}) == parse_poly("a"));
  CHECK(lower_hook(l, {2, 0}) == parse_poly("1"));
  CHECK(l.conjugate() == l);
  CHECK(Partition{4, 1}.conjugate() == Partition{2, 1, 1, 1});
}

TEST_CASE("corners") {
  Partition l{2, 2, 1};
  CHECK(addable_corners(l) == std::vector<Box>{{0, 2}, {2, 1}, {3, 0}});
  CHECK(removable_corners(l) == std::vector<Box>{{1, 1}, {2, 0}});
  CHECK(addable_corners(Partition()) == std::vector<Box>{{0, 0}});
  CHECK_THROWS(l.add({1, 2}));
  CHECK(l.add({0, 2}) == Partition{3, 2, 1});
  CHECK(l.remove({1, 1}) == Partition{2, 1, 1});
}

TEST_CASE("partition counts follow the pentagonal recurrence") {
  for (int n = 0; n <= 15; ++n) CHECK(static_cast<long long>(enumerate_partitions(n).size()) == partition_count(n));
}

TEST_CASE("hook length formula and sum of squares") {
  std::map<std::vector<int>, long long> memo;
  for (int n = 1; n <= 10; ++n) {
    Integer fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    Integer sum = 0;
    for (const auto& l : enumerate_partitions(n)) {
      long long f = syt_count(l.parts(), memo);
      CHECK(Integer(fact / hook_product(l)) == Integer(static_cast<long>(f)));
      sum += Integer(static_cast<long>(f)) * static_cast<long>(f);
    }
    CHECK(sum == fact);
  }
}

TEST_CASE("enumeration is reverse-lex and dominance is compatible") {
  auto ps = enumerate_partitions(6);
  for (std::size_t i = 0; i + 1 < ps.size(); ++i) CHECK(ps[i + 1] < ps[i]);
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j) CHECK_FALSE(dominated_by(ps[i], ps[j]));
  CHECK(dominated_by(Partition{2, 2, 2}, Partition{3, 2, 1}));
  CHECK_FALSE(dominated_by(Partition{3, 1, 1, 1}, Partition{2, 2, 2}));
}

TEST_CASE("pivot pairs share the hook at (row b, col a)") {
  auto pp = make_pivot(Partition{2, 2, 1}, {0, 2}, {3, 0});
  CHECK(pp.corner_a == Box{3, 0});
  CHECK(pp.lambda1 == Partition{2, 2, 1, 1});
  CHECK(pp.lambda2 == Partition{3, 2, 1});
  CHECK(pp.pivot_box == Box{0, 0});
  CHECK(pp.shared_hook == parse_poly("3+2*a"));
  for (int n = 1; n <= 8; ++n)
    for (const auto& k : enumerate_partitions(n)) {
      auto c = addable_corners(k);
      auto pairs = pivot_pairs(k);
      CHECK(pairs.size() == c.size() * (c.size() - 1) / 2);
      for (const auto& p : pairs) {
        CHECK(upper_hook(p.lambda1, p.pivot_box) == lower_hook(p.lambda2, p.pivot_box));
        CHECK(p.corner_a.row > p.corner_b.row);
      }
    }
}
