#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacklr/pivots.hpp"

#include <set>

using namespace jacklr;
using namespace jacklr::pivots;

namespace {

void expect_pass(const Check& c) {
  INFO(c.name << ": " << c.details);
  for (const auto& w : c.witnesses) INFO(w);
  CHECK(c.status == Status::Pass);
}

// reflected CRC-32, polynomial 0xEDB88320, one bit at a time
std::uint32_t crc32_bitwise(const std::string& s) {
  std::uint32_t c = 0xffffffffu;
  for (unsigned char ch : s) {
    c ^= ch;
    for (int k = 0; k < 8; ++k) c = (c >> 1) ^ (0xedb88320u & (0u - (c & 1u)));
  }
  return ~c;
}

}  // namespace

TEST_CASE("adjacent pair enumeration") {
  auto two = enumerate_adjacent(2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].first.to_string() == "1|1|1,1");
  CHECK(two[0].second.to_string() == "1|1|2");
  CHECK(two[0].slot == Slot::Lam);

  auto seven = enumerate_adjacent(7);
  CHECK(seven.size() >= 500);
  std::set<std::string> keys;
  for (std::size_t i = 0; i < seven.size(); ++i) {
    keys.insert(seven[i].key());
    if (i) CHECK(seven[i - 1].key() < seven[i].key());
    const auto& p = seven[i];
    CHECK(p.pivot.corner_a.row > p.pivot.corner_b.row);
    int w = p.first.mu.weight() + p.first.nu.weight();
    CHECK(w <= 7);
    CHECK(w == p.first.lam.weight());
  }
  CHECK(keys.size() == seven.size());
}

TEST_CASE("congruences hold on the corpus up to weight 5") {
  for (const auto& p : enumerate_adjacent(5)) {
    auto r = check_congruence(p);
    INFO(p.key());
    CHECK_FALSE(r.skipped);
    CHECK(r.divisible);
    CHECK(r.root_vanishes);
    CHECK(r.quotient * r.shared_hook == r.difference);
  }
  expect_pass(verify_corpus(5, 2));
}

TEST_CASE("the root pair") {
  AdjacentTriplePair p;
  for (const auto& q : lambda_pairs({2, 1}, {2, 1}, {2, 2, 1}))
    if (q.first.lam == Partition{2, 2, 1, 1} && q.second.lam == Partition{3, 2, 1}) p = q;
  REQUIRE(p.second.lam == Partition{3, 2, 1});
  auto r = check_congruence(p);
  CHECK(r.shared_hook == parse_poly("3+2*a"));
  CHECK(r.quotient == parse_poly("2*a^4*(1+2*a)*(-4+6*a+a^2)"));
  CHECK(r.root == Rational(-3, 2));
  AlphaPoly g = stanley_coefficient({2, 1}, {2, 1}, {3, 2, 1});
  CHECK(evaluate(g, {{kAlpha, Rational(-3, 2)}}) == Rational(1215, 4));
  expect_pass(verify_root_pair());
}

TEST_CASE("box correspondences") {
  CHECK_THROWS_AS(hook_correspondence({2, 1}, {0, 0}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(hook_correspondence({2, 1}, {0, 2}, {0, 2}), std::invalid_argument);
  auto c = hook_correspondence({2, 2, 1}, {3, 0}, {0, 2});
  CHECK(c.from == Partition{2, 2, 1, 1});
  CHECK(c.to == Partition{3, 2, 1});
  CHECK(c.d == Box{0, 0});
  CHECK(c.map.size() == 6);
  std::set<Box> targets;
  for (const auto& [p, img] : c.map) {
    targets.insert(img.target);
    CHECK(c.to.contains(img.target));
    // agreement modulo x: evaluate at the root of x
    if (p == c.d) continue;
    Rational a0 = -c.x.constant_term() / c.x.coeff(std::map<std::string, int>{{kAlpha, 1}});
    for (HookChoice h : {HookChoice::U, HookChoice::L}) {
      HookChoice h2 = img.flipped ? complement(h) : h;
      CHECK(hook_at(c.from, p, h, a0) == img.sign * hook_at(c.to, img.target, h2, a0));
    }
  }
  CHECK(targets.size() == 6);
  expect_pass(verify_correspondence(c));
  expect_pass(verify_all_correspondences(5));
  expect_pass(verify_lemma_identities(5));
  expect_pass(verify_displayed_correspondences());
}

TEST_CASE("fixtures") {
  std::set<std::string> names;
  for (const auto& f : fixtures()) {
    names.insert(f.name);
    CHECK(f.checksum() == crc32_bitwise(f.text));
    CHECK_NOTHROW(f.value());
  }
  CHECK(names.size() == fixtures().size());
  CHECK(crc32_bitwise("123456789") == 0xcbf43926u);
  CHECK(fixture("stanley.21.21.321").value() == stanley_coefficient({2, 1}, {2, 1}, {3, 2, 1}));
  CHECK(fixture("stanley.21.21.2211").value() == stanley_coefficient({2, 1}, {2, 1}, {2, 2, 1, 1}));
  CHECK_THROWS(fixture("no.such.fixture"));
  expect_pass(verify_shifted_fixtures());
  expect_pass(verify_macdonald_fixture());
  expect_pass(verify_pivot_example_fixture());
  auto cs = verify_fixture_congruences();
  CHECK(cs.size() == 3);
  for (const auto& c : cs) expect_pass(c);
}
