#include "jacklr/suites.hpp"

#include "jacklr/hookspace.hpp"
#include "jacklr/petjohn.hpp"
#include "jacklr/pivots.hpp"
#include "jacklr/stanley.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace jacklr::suites {

using namespace petjohn;

namespace {

Check named(const std::string& name) {
  Check c;
  c.name = name;
  return c;
}

std::string subset_text(Subset t) { return to_digits(t); }

int meet_size(Subset a, Subset b) { return std::popcount(a & b); }

// the ten Kneser labels permuted by a transposition of [5] (1-based)
int swap_label(int b, int i, int j) {
  auto [x, y] = root::petersen_label(b);
  auto sw = [&](int v) { return v == i ? j : (v == j ? i : v); };
  int u = sw(x), v = sw(y);
  return root::box_of_label(std::min(u, v), std::max(u, v));
}

}  // namespace

// ---------------------------------------------------------------------------
// Graph layer.

Check verify_graph_counts() {
  Check c = named("graphs.counts");
  Graph p = petersen(), j = johnson();
  c.expect(p.size() == 10 && p.edge_count() == 15 && p.regular(3), "petersen is not 10 vertices, 15 edges, 3-regular");
  c.expect(girth(p) == 5, "petersen girth " + std::to_string(girth(p)));
  c.expect(j.size() == 20 && j.edge_count() == 90 && j.regular(9), "johnson is not 20 vertices, 90 edges, 9-regular");
  c.details = "petersen 10/15/3 girth 5; johnson 20/90/9";
  return c;
}

Check verify_spectra() {
  Check c = named("graphs.spectra");
  Graph p = petersen(), j = johnson();
  const std::map<long long, int> want_p = {{3, 1}, {1, 5}, {-2, 4}};
  const std::map<long long, int> want_j = {{9, 1}, {3, 5}, {-1, 9}, {-3, 5}};
  std::ostringstream o;
  for (auto [g, want, tag] : {std::tuple{&p, &want_p, "petersen"}, std::tuple{&j, &want_j, "johnson"}}) {
    int total = 0;
    o << tag << " {";
    for (auto [k, m] : *want) {
      int got = eigen_multiplicity(*g, k);
      total += got;
      o << k << ":" << got << " ";
      c.expect(got == m, std::string(tag) + " eigenvalue " + std::to_string(k) + " multiplicity " +
                             std::to_string(got));
    }
    c.expect(total == g->size(), std::string(tag) + " spectrum incomplete");
    o << "} ";
  }
  c.details = o.str();
  return c;
}

Check verify_pentads() {
  Check c = named("graphs.pentads");
  auto norm = [](Syntheme s) {
    std::sort(s.begin(), s.end());
    return s;
  };
  auto duad = [](int a, int b) { return Duad{a - 1, b - 1}; };
  auto pent = pentad_from_pentagon(pentagon_from_cycle({1, 2, 3, 4, 5}));
  std::set<Syntheme> have;
  for (const auto& s : pent) have.insert(norm(s));
  c.expect(have.count(norm({duad(1, 2), duad(3, 5), duad(4, 6)})) == 1, "missing (12)/(35)/(46)");
  c.expect(have.count(norm({duad(1, 5), duad(2, 4), duad(3, 6)})) == 1, "missing (15)/(24)/(36)");
  // every pentagon: five synthemes covering the fifteen duads once
  for (int q = 0; q < 6; ++q)
    for (const auto& p : all_pentagons(q)) {
      auto ps = pentad_from_pentagon(p);
      std::map<Duad, int> seen;
      for (const auto& s : ps)
        for (const auto& d : s) seen[d]++;
      bool ok = ps.size() == 5 && seen.size() == 15 &&
                std::all_of(seen.begin(), seen.end(), [](const auto& kv) { return kv.second == 1; });
      c.expect(ok, "pentad of " + pentagon_text(p) + " does not cover each duad once");
    }
  bool threw = false;
  try {
    Pentagon bad = pentagon_from_cycle({1, 2, 3, 4, 5});
    bad.white[0] = {0, 2};
    pentad_from_pentagon(bad);
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  c.expect(threw, "invalid pentagon accepted");
  c.details = "72 pentagons, 15 duads each covered once";
  return c;
}

Check verify_rho_cycles() {
  Check c = named("graphs.rho_cycles");
  Pentagon p = figure_pentagon();
  const char* cycles[5][4] = {{"126", "124", "345", "356"},
                              {"136", "456", "245", "123"},
                              {"146", "236", "235", "145"},
                              {"156", "135", "234", "246"},
                              {"256", "346", "134", "125"}};
  for (const auto& cyc : cycles)
    for (int i = 0; i < 4; ++i) {
      Subset t = from_digits(cyc[i]), u = from_digits(cyc[(i + 1) % 4]);
      c.expect(rho(p, t) == u, std::string("rho(") + cyc[i] + ") = " + subset_text(rho(p, t)));
    }
  for (Subset t : triples()) {
    c.expect(rho(p, rho(p, t)) == complement(t), "rho^2(" + subset_text(t) + ") is not the complement");
    c.expect(rho(p, t) != t && rho(p, rho(p, rho(p, rho(p, t)))) == t, "rho has wrong order at " + subset_text(t));
  }
  c.details = "pentagon " + pentagon_text(p) + ": five 4-cycles, rho^2 = complement";
  return c;
}

Check verify_rho_distances() {
  Check c = named("graphs.rho_distances");
  Pentagon p = figure_pentagon();
  auto dist = [](Subset a, Subset b) { return 3 - meet_size(a, b); };
  int n = 0;
  for (Subset t : triples())
    for (Subset u : triples()) {
      if (t >= u) continue;
      bool lhs = dist(t, u) == 2, rhs = dist(rho(p, t), rho(p, u)) == 1;
      c.expect(lhs == rhs, subset_text(t) + "," + subset_text(u));
      ++n;
    }
  c.details = std::to_string(n) + " pairs";
  return c;
}

Check verify_embeddings() {
  Check c = named("graphs.embeddings");
  std::set<std::array<Subset, 10>> distinct;
  int pentagons = 0;
  for (const auto& p : all_pentagons()) {
    ++pentagons;
    auto g = gamma_embedding(p);
    distinct.insert(g);
    std::set<Subset> img;
    for (int b = 0; b < 10; ++b) {
      img.insert(g[b]);
      img.insert(complement(g[b]));
    }
    c.expect(img.size() == 20, pentagon_text(p) + ": gamma and its complement do not partition J(6,3)");
    for (int a = 0; a < 10; ++a)
      for (int b = a + 1; b < 10; ++b)
        if (root::adjacent(a, b))
          c.expect(meet_size(g[a], g[b]) == 2, pentagon_text(p) + ": edge not preserved");
  }
  c.expect(distinct.size() == 12, std::to_string(distinct.size()) + " distinct embeddings");
  c.details = std::to_string(pentagons) + " pentagons, " + std::to_string(distinct.size()) + " distinct embeddings";
  return c;
}

Check verify_intertwiners() {
  Check c = named("graphs.intertwiners");
  auto g = gamma_embedding(figure_pentagon());
  auto gens = intertwiner_generators();
  int checked = 0;
  for (const auto& s : gens) {
    // the transposition is read off the name; s56 has no [5] counterpart
    int i = s.name[1] - '0', j = s.name[2] - '0';
    for (Subset t : triples()) c.expect(s.apply(s.apply(t)) == t, s.name + " is not an involution");
    if (j > 5) continue;
    for (int b = 0; b < 10; ++b) {
      Subset lhs = s.apply(g[b]), rhs = g[swap_label(b, i, j)];
      c.expect(lhs == rhs, s.name + " on gamma(" + root::box_names()[b] + "): " + subset_text(lhs) + " vs " +
                               subset_text(rhs));
      ++checked;
    }
  }
  c.details = std::to_string(checked) + " vertex checks over s12 s23 s34 s45";
  return c;
}

Check verify_sigma56_action() {
  Check c = named("graphs.sigma56");
  auto s = sigma56_on_ell();
  auto box = [](int i, int j) { return root::box_of_label(i, j); };
  auto image = [&](int i, int j) { return s[box(i, j)]; };
  c.expect(image(1, 5) == std::pair{box(1, 5), 1}, "sigma56 l15");
  c.expect(image(2, 3) == std::pair{box(1, 4), -1}, "sigma56 l23");
  c.expect(image(1, 2) == std::pair{box(3, 4), -1}, "sigma56 l12");
  c.expect(image(2, 4) == std::pair{box(1, 3), -1}, "sigma56 l24");
  for (int b = 0; b < 10; ++b) {
    auto [b2, e2] = s[s[b].first];
    c.expect(b2 == b && e2 * s[b].second == 1, std::string("sigma56^2 moves ") + root::box_names()[b]);
  }
  std::map<std::string, MultiPoly> bind;
  for (int b = 0; b < 10; ++b)
    bind[root::ell_var(b)] = MultiPoly::from_int(s[b].second) * MultiPoly::var(root::ell_var(s[b].first));
  MultiPoly lhs = substitute(hookspace::claw_ell(box(1, 5)), bind);
  MultiPoly rhs = -hookspace::claw_ell(box(2, 5)) - hookspace::claw_ell(box(3, 4));
  c.expect(lhs == rhs, "sigma56 cl15 = " + lhs.to_string());
  c.details = "three arrowed pairs negated, involution, sigma56 cl15 = -cl25 - cl34";
  return c;
}

Check verify_appendix_labels() {
  Check c = named("graphs.appendix_labels");
  auto lab = appendix_labels();
  auto same = [](Subset a, Subset b) { return a == b || a == complement(b); };
  // some choice of T or T^c per box realises Petersen adjacency as |T cap U| = 2
  int realisations = 0;
  for (int m = 0; m < 1024; ++m) {
    bool ok = true;
    for (int a = 0; a < 10 && ok; ++a)
      for (int b = a + 1; b < 10 && ok; ++b) {
        Subset ta = m >> a & 1 ? complement(lab[a]) : lab[a], tb = m >> b & 1 ? complement(lab[b]) : lab[b];
        ok = root::adjacent(a, b) == (meet_size(ta, tb) == 2);
      }
    realisations += ok;
  }
  c.expect(realisations > 0, "box labels do not induce the Petersen graph");
  /* the label ground set {0..5} is a relabelling of [6]: count the
   * (relabelling, pentagon) pairs carrying the labels onto a gamma */
  std::array<int, 6> pi = {0, 1, 2, 3, 4, 5};
  int matches = 0;
  std::string first;
  do {
    auto move = [&](Subset t) {
      Subset o = 0;
      for (int e = 0; e < 6; ++e)
        if (t >> e & 1) o |= 1u << pi[e];
      return o;
    };
    for (const auto& p : all_pentagons()) {
      auto g = gamma_embedding(p);
      bool ok = true;
      for (int b = 0; b < 10 && ok; ++b) ok = same(g[b], move(lab[b]));
      if (!ok) continue;
      if (!matches++) {
        first = "pentagon " + pentagon_text(p) + " via ";
        for (int e = 0; e < 6; ++e) first += std::to_string(e) + ">" + std::to_string(pi[e] + 1) + " ";
      }
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  c.expect(matches > 0, "box labels match none of the 12 embeddings under any relabelling");
  c.details = std::to_string(realisations) + " sign realisations; " + std::to_string(matches) +
              " (relabelling, pentagon) matches, first " + first;
  return c;
}

// ---------------------------------------------------------------------------
// Jack and Stanley-sum properties.

Check verify_lr_fixtures(JackTable& table) {
  Check c = named("stanley.lr_fixtures");
  RatFunc lr = lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}, table);
  RatFunc want(parse_poly("6*a*(2+11*a+2*a^2)"), parse_poly("(1+2*a)*(2+a)*(2+3*a)*(3+2*a)"));
  c.expect(lr == want, "lr(21,21,321) = " + lr.to_string());
  AlphaPoly g1 = stanley_coefficient({2, 1}, {2, 1}, {3, 2, 1}, table);
  AlphaPoly g2 = stanley_coefficient({2, 1}, {2, 1}, {2, 2, 1, 1}, table);
  c.expect(g1 == pivots::fixture("stanley.21.21.321").value(), "g(21,21;321) = " + g1.to_string());
  c.expect(g2 == pivots::fixture("stanley.21.21.2211").value(), "g(21,21;2211) = " + g2.to_string());
  AlphaPoly g3 = stanley_coefficient({1}, {1}, {1, 1}, table);
  c.expect(g3 == parse_poly("2*a^2"), "g(1,1;11) = " + g3.to_string());
  c.details = "lr(21,21,321) and g for 321, 2211, (1,1;11)";
  return c;
}

Check verify_jack_orthogonality(int max_degree, JackTable& table) {
  Check c = named("stanley.jack_orthogonality");
  int pairs = 0;
  for (int n = 1; n <= max_degree; ++n) {
    auto parts = enumerate_partitions(n);
    std::vector<const PowerExpansion*> pw;
    for (const auto& l : parts) pw.push_back(&table.jack_power(l));
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = i; j < parts.size(); ++j) {
        // <p_rho, p_sigma> = delta z_rho alpha^{l(rho)}
        AlphaPoly s;
        for (const auto& [rho, ci] : *pw[i]) {
          auto it = pw[j]->find(rho);
          if (it == pw[j]->end()) continue;
          s += ci * it->second * alpha().pow(rho.length()) * Rational(z_factor(rho));
        }
        AlphaPoly want = i == j ? jnorm(parts[i]) : AlphaPoly();
        c.expect(s == want, "<J_" + parts[i].to_string() + ", J_" + parts[j].to_string() + "> = " + s.to_string());
        ++pairs;
      }
  }
  c.details = std::to_string(pairs) + " pairs, degree <= " + std::to_string(max_degree);
  return c;
}

Check verify_unit_coefficient(int max_degree, JackTable& table) {
  Check c = named("stanley.unit_coefficient");
  int n_checked = 0;
  for (int n = 1; n <= max_degree; ++n) {
    Integer fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    Partition ones(std::vector<int>(n, 1));
    for (const auto& l : enumerate_partitions(n)) {
      const auto& co = table.jack(l).coeffs;
      auto it = co.find(ones);
      bool ok = it != co.end() && it->second == RatFunc(MultiPoly::constant(Rational(fact)));
      c.expect(ok, "[m_1^" + std::to_string(n) + "] J_" + l.to_string());
      ++n_checked;
    }
  }
  c.details = std::to_string(n_checked) + " partitions, degree <= " + std::to_string(max_degree);
  return c;
}

namespace {

// semistandard tableaux of shape lam and content mu, one horizontal strip per letter
long long kostka(const Partition& lam, const Partition& mu) {
  std::function<long long(std::vector<int>, int)> go = [&](std::vector<int> cur, int letter) -> long long {
    if (letter == mu.length()) return Partition(cur) == lam ? 1 : 0;
    long long total = 0;
    int need = mu.part(letter);
    std::vector<int> next(lam.length(), 0);
    std::function<void(int, int)> place = [&](int row, int left) {
      if (row == lam.length()) {
        if (!left) {
          std::vector<int> nz;
          for (int v : next)
            if (v) nz.push_back(v);
          total += go(nz, letter + 1);
        }
        return;
      }
      int base = row < static_cast<int>(cur.size()) ? cur[row] : 0;
      int cap = std::min(lam.part(row), row ? (row - 1 < static_cast<int>(cur.size()) ? cur[row - 1] : 0) : 1 << 20);
      for (int k = 0; base + k <= cap && k <= left; ++k) {
        next[row] = base + k;
        place(row + 1, left - k);
      }
    };
    place(0, need);
    return total;
  };
  if (lam.weight() != mu.weight()) return 0;
  return go({}, 0);
}

// Schur LR coefficients of s_mu s_nu via Kostka triangularity
std::map<Partition, Integer> schur_product(const Partition& mu, const Partition& nu) {
  int n = mu.weight() + nu.weight();
  auto parts = enumerate_partitions(n);
  std::map<Partition, Integer> mono;  // s_mu s_nu in monomials
  for (const auto& a : enumerate_partitions(mu.weight()))
    for (const auto& b : enumerate_partitions(nu.weight())) {
      long long ka = kostka(mu, a), kb = kostka(nu, b);
      if (!ka || !kb) continue;
      for (const auto& l : parts) mono[l] += Integer(static_cast<long>(ka * kb)) * monomial_product_coeff(a, b, l);
    }
  std::map<Partition, Integer> out;
  for (const auto& l : parts) {  // largest first in dominance-compatible order
    Integer cl = mono[l];
    if (cl == 0) continue;
    out[l] = cl;
    for (const auto& m : parts) mono[m] -= cl * static_cast<long>(kostka(l, m));
  }
  return out;
}

}  // namespace

Check verify_schur_oracle(int max_degree, JackTable& table) {
  Check c = named("stanley.schur_oracle");
  const std::map<std::string, Rational> one = {{kAlpha, Rational(1)}};
  int entries = 0;
  for (int n = 1; n <= max_degree; ++n) {
    auto parts = enumerate_partitions(n);
    for (const auto& l : parts) {
      const auto& co = table.jack(l).coeffs;
      Integer h = hook_product(l);
      for (const auto& m : parts) {
        auto it = co.find(m);
        Rational got = it == co.end() ? Rational(0) : it->second.evaluate(one);
        c.expect(got == Rational(Integer(h * static_cast<long>(kostka(l, m)))), "J_" + l.to_string() + "(1) at m_" + m.to_string());
        ++entries;
      }
    }
  }
  // LR coefficients at alpha = 1: g = c H_mu H_nu / H_lam
  int triples = 0;
  for (int n = 2; n <= std::min(max_degree, 6); ++n)
    for (int k = 1; k < n; ++k)
      for (const auto& mu : enumerate_partitions(k))
        for (const auto& nu : enumerate_partitions(n - k)) {
          auto cs = schur_product(mu, nu);
          for (const auto& l : enumerate_partitions(n)) {
            Rational want(Integer(cs[l] * hook_product(mu) * hook_product(nu)), hook_product(l));
            want.canonicalize();
            Rational got = lr_coefficient(mu, nu, l, table).evaluate(one);
            c.expect(got == want, "lr(" + mu.to_string() + "|" + nu.to_string() + "|" + l.to_string() +
                                      ")(1) = " + rational_text(got));
            ++triples;
          }
        }
  Rational g = lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}, table).evaluate(one);
  c.expect(g == Rational(2, 5), "g(21,21;321)(1) = " + rational_text(g));
  c.details = std::to_string(entries) + " monomial entries, " + std::to_string(triples) +
              " lr values at alpha=1, g(21,21;321)(1) = 2/5";
  return c;
}

Check verify_gstar_terms() {
  Check c = named("stanley.gstar_terms");
  auto s = root::build_gstar();
  auto m = root::gstar_masks();
  c.expect(s.size() == 26 && m.size() == 26, "g* has " + std::to_string(s.size()) + " terms");
  c.expect(m[0] == 7, "coefficient of X");
  for (int b = 0; b < 10; ++b) c.expect(m[1 << b] == -2, std::string("coefficient of X^") + root::box_names()[b]);
  for (auto [a, b] : root::petersen_edges()) c.expect(m[(1 << a) | (1 << b)] == 1, "edge coefficient");
  c.expect(root::to_masks(s) == m, "diagram and mask forms differ");
  c.details = "7 X - 2 sum X^b + sum over 15 edges";
  return c;
}

Check verify_moebius(int count, std::uint64_t seed) {
  Check c = named("stanley.moebius");
  Lcg64 g(seed);
  for (int i = 0; i < count; ++i) {
    root::MaskSum s;
    int terms = 1 + draw(g, 12);
    for (int t = 0; t < terms; ++t) s[draw(g, root::kFull + 1)] += draw(g, 11) - 5;
    std::erase_if(s, [](const auto& kv) { return kv.second == 0; });
    root::Mask ra = draw(g, root::kFull + 1), rb = draw(g, root::kFull + 1);
    auto kb = root::k_transform(s, rb);
    c.expect(root::k_inverse(kb, rb) == s, "k_inverse(k_transform) differs, sample " + std::to_string(i));
    c.expect(root::change_reference(kb, rb, ra) == root::k_transform(s, ra),
             "change_reference differs, sample " + std::to_string(i));
  }
  c.details = std::to_string(count) + " random sums";
  return c;
}

Check verify_kernel_identity(int count, std::uint64_t seed) {
  Check c = named("stanley.kernel_identity");
  Lcg64 g(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int i = 0; i < count; ++i) {
    root::Mask Y = 1 + draw(g, root::kFull);
    root::Mask ref = draw(g, root::kFull + 1);
    std::array<long long, root::kBoxes> a{};
    for (int b = 0; b < root::kBoxes; ++b)
      if (Y >> b & 1) a[b] = draw(g, 7) - 3;
    long long d = draw(g, 7) - 3;
    MultiPoly lhs = root::formal_primed(root::kernel_sum(ref, Y, a, d));
    // (-1)^|Y| sigma_Y h^B_{not Y} beta^{|Y|-1} f
    MultiPoly rhs = MultiPoly::from_int(std::popcount(static_cast<unsigned>(Y)) & 1 ? -1 : 1);
    MultiPoly f = MultiPoly::constant(Rational(static_cast<long>(d))) * beta();
    for (int b = 0; b < root::kBoxes; ++b) {
      bool up = (root::x_sign(b) > 0) != static_cast<bool>(ref >> b & 1);
      MultiPoly h = MultiPoly::var(root::hook_var(b));
      if (!up) h -= beta();
      if (Y >> b & 1) {
        if (up) rhs = -rhs;
        f += MultiPoly::constant(Rational(static_cast<long>(a[b]))) * h;
      } else {
        rhs *= h;
      }
    }
    rhs = rhs * beta().pow(std::popcount(static_cast<unsigned>(Y)) - 1) * f;
    c.expect(lhs == rhs, "sample " + std::to_string(i) + ": " + (lhs - rhs).to_string());
  }
  c.details = std::to_string(count) + " random (Y, a, d, B)";
  return c;
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n = {"pivots", "stanley", "hookspace", "symmetry", "graphs", "fixtures", "all"};
  return n;
}

std::vector<Task> suite_tasks(const std::string& suite, const Options& opt, JackTable& table) {
  std::vector<Task> t;
  JackTable* tp = &table;
  int jack_deg = std::min(8, table.degree_cap());
  if (suite == "pivots" || suite == "all") {
    t.push_back([=] { return pivots::verify_corpus(opt.max_weight, opt.jobs, *tp); });
    t.push_back([=] { return pivots::verify_root_pair(*tp); });
    t.push_back([] { return pivots::verify_lemma_identities(6); });
    t.push_back([] { return pivots::verify_all_correspondences(6); });
    t.push_back(pivots::verify_displayed_correspondences);
  }
  if (suite == "stanley" || suite == "all") {
    t.push_back([=] { return verify_lr_fixtures(*tp); });
    t.push_back(verify_gstar_terms);
    t.push_back([=] { return verify_jack_orthogonality(jack_deg, *tp); });
    t.push_back([=] { return verify_unit_coefficient(jack_deg, *tp); });
    t.push_back([=] { return verify_schur_oracle(jack_deg, *tp); });
    t.push_back([=] { return verify_moebius(opt.samples, opt.seed); });
    t.push_back([=] { return verify_kernel_identity(opt.samples, opt.seed); });
    t.push_back([=] { return pivots::verify_pivot_example_computed(*tp); });
  }
  if (suite == "hookspace" || suite == "all") {
    t.push_back([=] { return hookspace::verify_claws(hookspace::sample_params(opt.samples, opt.seed)); });
    t.push_back(hookspace::verify_rank);
    t.push_back(hookspace::verify_k_values);
    t.push_back(hookspace::verify_root_evaluation);
    for (int b = 0; b < root::kBoxes; ++b)
      for (HookChoice hc : {HookChoice::U, HookChoice::L}) t.push_back([=] { return hookspace::verify_hyperplane(b, hc); });
    t.push_back(hookspace::verify_boundary_equivariance);
  }
  if (suite == "symmetry" || suite == "all") {
    t.push_back(hookspace::verify_orbit_sums);
    t.push_back(hookspace::verify_odd_vanishing);
    t.push_back(hookspace::verify_z2_invariance);
    t.push_back(hookspace::verify_sigma56_invariance);
    t.push_back(hookspace::verify_e_expansion);
    t.push_back(hookspace::verify_nonnegativity);
  }
  if (suite == "graphs" || suite == "all") {
    for (Task f : {verify_graph_counts, verify_spectra, verify_pentads, verify_rho_cycles, verify_rho_distances,
                   verify_embeddings, verify_intertwiners, verify_sigma56_action, verify_appendix_labels})
      t.push_back(f);
  }
  if (suite == "fixtures" || suite == "all") {
    t.push_back(pivots::verify_shifted_fixtures);
    t.push_back(pivots::verify_macdonald_fixture);
    t.push_back(pivots::verify_pivot_example_fixture);
  }
  if (t.empty()) throw std::invalid_argument("unknown suite: " + suite);
  return t;
}

std::vector<Check> run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<Check> out(tasks.size());
  auto run_one = [&](std::size_t i) {
    out[i] = timed([&]() -> Check {
      try {
        return tasks[i]();
      } catch (const std::exception& e) {
        Check c;
        c.name = "task" + std::to_string(i);
        c.status = Status::Fail;
        c.details = "exception";
        c.witnesses.push_back(e.what());
        return c;
      }
    });
  };
  if (jobs <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> ts;
  for (int j = 0; j < jobs; ++j)
    ts.emplace_back([&] {
      for (std::size_t i; (i = next++) < tasks.size();) run_one(i);
    });
  for (auto& th : ts) th.join();
  return out;
}

Report run_suite(const std::string& suite, const Options& opt, JackTable& table) {
  Report r;
  r.meta.version = kVersion;
  r.meta.seed = opt.seed;
  r.meta.degree_cap = opt.degree_cap;
  r.meta.corpus_bound = opt.max_weight;
  r.checks = run_tasks(suite_tasks(suite, opt, table), opt.jobs);
  return r;
}

}  // namespace jacklr::suites
