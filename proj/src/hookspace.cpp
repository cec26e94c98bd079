#include "jacklr/hookspace.hpp"

#include "jacklr/petjohn.hpp"
#include "jacklr/symfunc.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace jacklr::hookspace {

using namespace root;

std::string WindowParams::to_string() const {
  std::ostringstream o;
  o << "m=(" << m1 << "," << m2 << "," << m3 << ") n=(" << n1 << "," << n2 << "," << n4 << ") r=(" << r1 << ","
    << r2 << ")";
  return o.str();
}

namespace {

Check named(const std::string& name) {
  Check c;
  c.name = name;
  return c;
}

// physical rows of the table plus the virtual box
enum Row { kA1, kA2, kA3, kB1, kB2, kB3, kC1, kC2, kC3, kC4, kC5, kC6, kB3t, kRows };
constexpr std::array<Row, kBoxes> kFreeRow = {kA1, kA2, kA3, kB1, kB2, kB3t, kC2, kC3, kC4, kC5};

struct Sym {
  MultiPoly m1, m2, m3, n1, n2, n4, r1, r2;
};

std::array<MultiPoly, kRows> upper_rows(const Sym& p) {
  MultiPoly a = alpha();
  auto k = [](long v) { return MultiPoly::from_int(v); };
  std::array<MultiPoly, kRows> h;
  h[kA1] = p.m1 + (p.n1 + k(1)) * a;
  h[kA2] = p.m1 + p.m2 + p.r1 + k(1) + (p.n1 + p.n2 + k(2)) * a;
  h[kA3] = p.m2 + (p.n2 + k(1)) * a;
  h[kB1] = p.m3 + a;
  h[kB2] = p.m3 + p.r1 + p.r2 + k(1) + (p.n4 + k(2)) * a;
  h[kB3] = (p.n4 + k(1)) * a;
  h[kC1] = a;
  h[kC2] = p.m1 + p.m3 + p.r1 + k(1) + (p.n1 + k(2)) * a;
  h[kC3] = p.r1 + a;
  h[kC4] = p.m1 + p.m2 + p.m3 + p.r1 + p.r2 + k(2) + (p.n1 + p.n2 + p.n4 + k(3)) * a;
  h[kC5] = p.m2 + p.r1 + p.r2 + k(1) + (p.n2 + p.n4 + k(2)) * a;
  h[kC6] = p.r2 + a;
  h[kB3t] = p.r2 + (p.n4 + k(1)) * a;
  return h;
}

// (slot, box) of the twelve physical rows
const std::array<std::pair<Slot, Box>, 12> kPhysical = {{{Slot::Mu, {1, 0}},
                                                         {Slot::Mu, {0, 0}},
                                                         {Slot::Mu, {0, 1}},
                                                         {Slot::Nu, {1, 0}},
                                                         {Slot::Nu, {0, 0}},
                                                         {Slot::Nu, {0, 1}},
                                                         {Slot::Lam, {2, 0}},
                                                         {Slot::Lam, {1, 0}},
                                                         {Slot::Lam, {1, 1}},
                                                         {Slot::Lam, {0, 0}},
                                                         {Slot::Lam, {0, 1}},
                                                         {Slot::Lam, {0, 2}}}};

MultiPoly beta_in_alpha() { return alpha() - MultiPoly::constant(1); }
Hook make_hook(const MultiPoly& up) { return Hook{up, up - beta_in_alpha()}; }

const MultiPoly& primed_hook(const HookTable& t, int b) {
  return x_sign(b) > 0 ? t.free[b].upper : t.free[b].lower;
}

/* sum_m c_m prod_b (l_b + beta) or (l_b - beta) on flipped boxes, for any
 * images of the ell variables: the product form of ell_expansion. */
MultiPoly product_form(const MaskSum& s, const std::array<MultiPoly, kBoxes>& ell, const MultiPoly& b) {
  std::array<MultiPoly, kBoxes> plus, minus;
  for (int i = 0; i < kBoxes; ++i) {
    plus[i] = ell[i] + b;
    minus[i] = ell[i] - b;
  }
  MultiPoly total;
  for (auto [m, c] : s) {
    MultiPoly p = MultiPoly::from_int(static_cast<long>(c));
    for (int i = 0; i < kBoxes; ++i) p *= (m >> i & 1) ? minus[i] : plus[i];
    total += p;
  }
  return total;
}

std::array<MultiPoly, kBoxes> pulled_ells() {
  std::array<MultiPoly, kBoxes> e;
  for (int b = 0; b < kBoxes; ++b) e[b] = pulled_ell(b);
  return e;
}

// pullback of the product form of s, computed without expanding in ell
MultiPoly pulled_product(const MaskSum& s) { return product_form(s, pulled_ells(), beta()); }

std::string text(const MultiPoly& p) { return p.to_string(); }

bool nonneg_coeffs(const MultiPoly& p, std::string* witness) {
  for (const auto& [e, c] : p.terms())
    if (sgn(c) < 0) {
      if (witness) *witness = MultiPoly(p.var_list(), {{e, c}}).to_string();
      return false;
    }
  return true;
}

}  // namespace

HookTable hook_table(const WindowParams& p) {
  if (p.r2 * p.n4 != 0) throw std::invalid_argument("r2*n4 must be 0");
  for (int v : {p.m1, p.m2, p.m3, p.n1, p.n2, p.n4, p.r1, p.r2})
    if (v < 0) throw std::invalid_argument("window parameters must be non-negative");
  auto k = [](int v) { return MultiPoly::from_int(v); };
  auto up = upper_rows({k(p.m1), k(p.m2), k(p.m3), k(p.n1), k(p.n2), k(p.n4), k(p.r1), k(p.r2)});
  HookTable t;
  for (int r = 0; r < 12; ++r) t.physical.hooks[kPhysical[r]] = make_hook(up[r]);
  // virtual box: alpha^{-1} h_b3^U h_c1^L h_c6^U, exact in alpha
  MultiPoly prod = up[kB3] * (up[kC1] - beta_in_alpha()) * up[kC6];
  auto [q, r] = divrem(prod, alpha());
  if (!r.is_zero() || q != up[kB3t]) throw std::logic_error("virtual hook b~3 does not divide");
  for (int b = 0; b < kBoxes; ++b) t.free[b] = make_hook(up[kFreeRow[b]]);
  return t;
}

MultiPoly symbolic_upper(int b) {
  auto v = [](const char* n) { return MultiPoly::var(n); };
  auto up = upper_rows({v("m1"), v("m2"), v("m3"), v("n1"), v("n2"), v("n4"), v("r1"), v("r2")});
  return up[kFreeRow.at(b)];
}

MultiPoly claw_value(const HookTable& t, int b) {
  MultiPoly f = -(MultiPoly::from_int(x_sign(b)) * primed_hook(t, b)) - beta_in_alpha();
  for (int a = 0; a < kBoxes; ++a)
    if (adjacent(a, b)) f += MultiPoly::from_int(x_sign(a)) * primed_hook(t, a);
  return f;
}

std::vector<WindowParams> sample_params(int count, std::uint64_t seed) {
  Lcg64 g(seed);
  std::vector<WindowParams> out;
  for (int i = 0; i < count; ++i) {
    WindowParams p;
    for (int* f : {&p.m1, &p.m2, &p.m3, &p.n1, &p.n2, &p.n4, &p.r1, &p.r2}) *f = draw(g, 5);
    if (p.r2 * p.n4 != 0) (draw(g, 2) ? p.n4 : p.r2) = 0;
    out.push_back(p);
  }
  return out;
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& free_vars() {
  static const std::vector<std::string> v = {"h_a1", "h_a3", "h_b1", "h_b3t", "h_c3", kBeta};
  return v;
}

MultiPoly resolved_upper(int b) {
  auto h = [](int i) { return MultiPoly::var(free_vars()[i]); };
  MultiPoly a1 = h(0), a3 = h(1), b1 = h(2), b3 = h(3), c3 = h(4), be = beta();
  MultiPoly r;
  switch (b) {
    case A1: r = a1; break;
    case A3: r = a3; break;
    case B1: r = b1; break;
    case B3T: r = b3; break;
    case C3: r = c3; break;
    case A2: r = a1 + a3 + c3 - be; break;
    case B2: r = b1 + c3 + b3 - be; break;
    case C5: r = a3 + c3 + b3 - be; break;
    case C4: r = a1 + a3 + b1 + c3 + b3 - be - be; break;
    case C2: r = a1 + b1 + c3 - be; break;
    default: throw std::out_of_range("free box");
  }
  return r.over(free_vars());
}

MultiPoly pulled_ell(int b) {
  return (MultiPoly::from_int(x_sign(b)) * (MultiPoly::from_int(2) * resolved_upper(b) - beta())).over(free_vars());
}

MultiPoly pullback(const MultiPoly& p) {
  std::map<std::string, MultiPoly> bind;
  for (int b = 0; b < kBoxes; ++b) bind[ell_var(b)] = pulled_ell(b);
  return substitute(p, bind);
}

MultiPoly pullback_hooks(const MultiPoly& p) {
  std::map<std::string, MultiPoly> bind;
  for (int b = 0; b < kBoxes; ++b) bind[hook_var(b)] = resolved_upper(b);
  return substitute(p, bind);
}

MultiPoly evaluate_on(const MultiPoly& q, const HookTable& t) {
  std::map<std::string, MultiPoly> bind;
  const int rows[5] = {A1, A3, B1, B3T, C3};
  for (int i = 0; i < 5; ++i) bind[free_vars()[i]] = t.free[rows[i]].upper;
  bind[kBeta] = beta_in_alpha();
  return substitute(q, bind);
}

MultiPoly claw_ell(int b) {
  MultiPoly c = -MultiPoly::var(ell_var(b));
  for (int a = 0; a < kBoxes; ++a)
    if (adjacent(a, b)) c += MultiPoly::var(ell_var(a));
  return c;
}

const MultiPoly& gstar_ell() {
  static const MultiPoly g = ell_expansion(gstar_masks());
  return g;
}

MultiPoly orbit_sum(int k) {
  if (k < 0 || k > kBoxes) throw std::out_of_range("orbit_sum degree");
  MultiPoly t(ell_vars());
  for (Mask S = 0; S <= kFull; ++S) {
    if (std::popcount(static_cast<unsigned>(S)) != k) continue;
    Mask I = kFull & ~S;
    long w = 2 * edges_within(I) - (kBoxes - k) + 1;
    if (!w) continue;
    MultiPoly m = MultiPoly::from_int(w);
    for (int b = 0; b < kBoxes; ++b)
      if (S >> b & 1) m *= MultiPoly::var(ell_var(b));
    t += m;
  }
  return t;
}

// ---------------------------------------------------------------------------

Mask boundary_mask(int b, HookChoice c) {
  Mask cl = closed_neighborhood(b);
  return c == reference_choice(b) ? cl : (kFull & ~cl);
}

StanleyDiagram boundary_datum(int b, HookChoice c) { return diagram(boundary_mask(b, c)); }

MultiPoly restrict_to_hyperplane(const MultiPoly& q, int b, HookChoice c, std::string* pivot) {
  // l_b = -beta (c = X'_b) or +beta
  MultiPoly cond = pulled_ell(b) + (c == reference_choice(b) ? beta() : -beta());
  cond = cond.over(free_vars());
  std::string var;
  for (int i = 4; i >= 0 && var.empty(); --i)
    if (cond.degree_in(free_vars()[i]) > 0) var = free_vars()[i];
  if (var.empty()) var = kBeta;
  Rational lead = cond.coeff(std::map<std::string, int>{{var, 1}});
  MultiPoly rest = cond - MultiPoly::constant(lead) * MultiPoly::var(var);
  MultiPoly solved = rest * Rational(Rational(-1) / lead);
  if (pivot) *pivot = var;
  return substitute(q, {{var, solved}}).over(free_vars());
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& x_vars() {
  static const std::vector<std::string> v = {"x1", "x2", "x3", "x4", "x5", "x6"};
  return v;
}

namespace {
MultiPoly triple_sum(petjohn::Subset t, const std::vector<std::string>& xs) {
  MultiPoly s;
  for (int e = 0; e < 6; ++e)
    if (t >> e & 1) s += MultiPoly::var(xs[e]);
  return s;
}

std::array<MultiPoly, kBoxes> psi_images() {
  std::array<MultiPoly, kBoxes> im;
  auto tab = petjohn::psi_table();
  for (int b = 0; b < kBoxes; ++b) im[b] = MultiPoly::from_int(tab[b].sign) * triple_sum(tab[b].t, x_vars());
  return im;
}

const std::vector<std::string>& appendix_x() {
  static const std::vector<std::string> v = {"x0", "x1", "x2", "x3", "x4", "x5"};
  return v;
}

std::array<MultiPoly, kBoxes> appendix_images() {
  std::array<MultiPoly, kBoxes> im;
  auto tab = petjohn::appendix_labels();
  for (int b = 0; b < kBoxes; ++b) im[b] = triple_sum(tab[b], appendix_x());
  return im;
}

MultiPoly substitute_ells(const MultiPoly& p, const std::array<MultiPoly, kBoxes>& im) {
  std::map<std::string, MultiPoly> bind;
  for (int b = 0; b < kBoxes; ++b) bind[ell_var(b)] = im[b];
  return substitute(p, bind);
}
}  // namespace

MultiPoly untwist_to_x(const MultiPoly& p) { return substitute_ells(p, psi_images()); }
MultiPoly untwist_appendix(const MultiPoly& p) { return substitute_ells(p, appendix_images()); }

MultiPoly e_expansion() {
  return expand_in_elementary(product_form(gstar_masks(), psi_images(), beta()), x_vars());
}

MultiPoly expected_e_expansion() {
  return parse_poly(
      "42*b^10 + 54*e2*b^8 + (34*e4 + 14*e2^2)*b^6 + (42*e6 + 30*e3^2 + 4*e2*e4 + 2*e2^3)*b^4"
      " + (-8*e4^2 - 18*e3*e5 + 12*e2*e6 + 6*e2*e3^2 + 2*e2^2*e4)*b^2"
      " + (2*e5^2 - 8*e4*e6 + 2*e3^2*e4 - 2*e2*e3*e5 + 2*e2^2*e6)");
}

std::map<Partition, MultiPoly> monomial_coefficients(const MultiPoly& e_poly) {
  // e_k on six free variables, then read the coefficient of x^lambda
  std::map<std::string, MultiPoly> bind;
  for (int k = 2; k <= 6; ++k) {
    MultiPoly e;
    for (unsigned m = 0; m < 64; ++m) {
      if (std::popcount(m) != k) continue;
      MultiPoly t = MultiPoly::constant(1);
      for (int i = 0; i < 6; ++i)
        if (m >> i & 1) t *= MultiPoly::var(x_vars()[i]);
      e += t;
    }
    bind["e" + std::to_string(k)] = e;
  }
  MultiPoly full = substitute(e_poly, bind);
  std::vector<int> xi(6);
  for (int i = 0; i < 6; ++i) xi[i] = full.var_index(x_vars()[i]);
  int bi = full.var_index(kBeta);
  std::map<Partition, MultiPoly> out;
  for (const auto& [e, c] : full.terms()) {
    std::vector<int> lam;
    bool sorted = true;
    for (int i = 0; i < 6; ++i) {
      int v = xi[i] < 0 ? 0 : e[xi[i]];
      if (!lam.empty() && v > lam.back()) sorted = false;
      lam.push_back(v);
    }
    if (!sorted) continue;
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    int bdeg = bi < 0 ? 0 : e[bi];
    out[Partition(lam)] += MultiPoly::constant(c) * beta().pow(bdeg);
  }
  return out;
}

namespace {
std::array<MultiPoly, kBoxes> red_vertex_ells(const std::array<MultiPoly, 5>& red) {
  std::array<MultiPoly, kBoxes> l;
  l[A1] = red[0];
  l[A3] = red[1];
  l[B1] = red[2];
  l[B3T] = red[3];
  l[C3] = red[4];
  l[B2] = l[B1] + l[B3T] + l[C3];
  l[A2] = l[A1] + l[A3] + l[C3];
  l[C2] = -(l[A1] + l[B1] + l[C3]);
  l[C5] = -(l[A3] + l[B3T] + l[C3]);
  l[C4] = -(l[A1] + l[A3] + l[B1] + l[B3T] + l[C3]);
  return l;
}
}  // namespace

std::array<MultiPoly, kBoxes> phi_ell() {
  std::array<MultiPoly, 5> red;
  for (int i = 0; i < 5; ++i)
    red[i] = MultiPoly::from_int(2) * (MultiPoly::constant(1) + MultiPoly::var(x_vars()[i])) + beta();
  return red_vertex_ells(red);
}

std::array<MultiPoly, kBoxes> y_ell() {
  std::array<MultiPoly, 5> red;
  for (int i = 0; i < 5; ++i) red[i] = MultiPoly::var("y" + std::to_string(i + 1)) + beta();
  return red_vertex_ells(red);
}

MultiPoly phi_polynomial() {
  MultiPoly g = -product_form(gstar_masks(), phi_ell(), beta());
  return substitute(g, {{kBeta, beta_in_alpha()}});
}

MultiPoly y_polynomial() { return -product_form(gstar_masks(), y_ell(), beta()); }

// ---------------------------------------------------------------------------
// Checks.

Check verify_claws(const std::vector<WindowParams>& samples) {
  Check c = named("hookspace.claws");
  int evaluated = 0;
  for (const auto& p : samples) {
    HookTable t = hook_table(p);
    for (int b = 0; b < kBoxes; ++b) {
      MultiPoly f = claw_value(t, b);
      ++evaluated;
      c.expect(f.is_zero(), "f_" + std::string(box_names()[b]) + " at " + p.to_string() + " = " + text(f));
    }
    // hook table invariants: h^U - h^L = alpha - 1 on every physical row
    for (const auto& [k, h] : t.physical.hooks)
      c.expect(h.upper - h.lower == beta_in_alpha(), "row difference at " + p.to_string());
  }
  // the ten claws are the ell-claws halved
  for (int b = 0; b < kBoxes; ++b) {
    MultiPoly q = pullback(claw_ell(b));
    c.expect(q.is_zero(), "pullback(cl_" + std::string(box_names()[b]) + ") = " + text(q));
  }
  c.details = std::to_string(samples.size()) + " samples, " + std::to_string(evaluated) + " claw evaluations";
  return c;
}

Check verify_rank() {
  Check c = named("hookspace.rank");
  // coefficient vectors over the monomials of the rows, beta = a - 1 appended
  std::vector<MultiPoly> rows;
  for (int b = 0; b < kBoxes; ++b) rows.push_back(symbolic_upper(b));
  MultiPoly be = beta_in_alpha();
  const std::vector<std::string> vars = {"m1", "m2", "m3", "n1", "n2", "n4", "r1", "r2", kAlpha};
  std::map<Exponent, int> col;
  auto vec_of = [&](const MultiPoly& p) {
    MultiPoly q = p.over(vars);
    std::map<Exponent, Rational> m;
    for (const auto& [e, k] : q.terms()) m[e] = k;
    return m;
  };
  std::vector<std::map<Exponent, Rational>> vs;
  for (const auto& r : rows) vs.push_back(vec_of(r));
  auto bvec = vec_of(be);
  for (const auto& v : vs)
    for (const auto& [e, k] : v) col.emplace(e, 0);
  for (const auto& [e, k] : bvec) col.emplace(e, 0);
  int n = 0;
  for (auto& [e, i] : col) i = n++;
  auto dense = [&](const std::vector<std::map<Exponent, Rational>>& sel) {
    std::vector<std::vector<Rational>> m;
    for (const auto& v : sel) {
      std::vector<Rational> row(n);
      for (const auto& [e, k] : v) row[col[e]] = k;
      m.push_back(row);
    }
    return m;
  };
  std::vector<std::map<Exponent, Rational>> with_beta = vs, free5;
  with_beta.push_back(bvec);
  for (int b : {A1, A3, B1, B3T, C3}) free5.push_back(vs[b]);
  int r_all = rational_rank(dense(with_beta));
  int r_free = rational_rank(dense(free5));
  free5.push_back(bvec);
  int r_free_beta = rational_rank(dense(free5));
  c.expect(r_all == 6, "rank(ten hooks, beta) = " + std::to_string(r_all));
  c.expect(r_free == 5, "rank(free hooks) = " + std::to_string(r_free));
  c.expect(r_free_beta == 6, "rank(free hooks, beta) = " + std::to_string(r_free_beta));
  // the resolution formulas reproduce the table rows
  for (int b = 0; b < kBoxes; ++b) {
    std::map<std::string, MultiPoly> bind;
    const int fr[5] = {A1, A3, B1, B3T, C3};
    for (int i = 0; i < 5; ++i) bind[free_vars()[i]] = symbolic_upper(fr[i]);
    bind[kBeta] = be;
    MultiPoly d = substitute(resolved_upper(b), bind) - symbolic_upper(b);
    c.expect(d.is_zero(), "resolution of " + std::string(box_names()[b]) + " off by " + text(d));
  }
  c.details = "free hooks: " + std::to_string(r_all - 1);
  return c;
}

Check verify_k_values() {
  Check c = named("hookspace.k_values");
  MaskSum g = gstar_masks();
  auto K = k_transform(g, kFull);
  auto Kc = k_transform(conjugate(g), kFull);
  for (Mask I = 0; I <= kFull; ++I) {
    int n = std::popcount(static_cast<unsigned>(I));
    int e = edges_within(I);
    long long want = n == 0 ? 2 : n == 1 ? 1 : (n == 2 && e == 1) ? 1 : 0;
    c.expect(K[I] == want, "K_" + std::to_string(I) + " = " + std::to_string(K[I]));
    c.expect(Kc[I] == 2 - n + e, "conj K_" + std::to_string(I) + " = " + std::to_string(Kc[I]));
  }
  c.expect(k_inverse(K, kFull) == g, "Moebius inversion does not return g*");
  c.details = "1024 subsets, g* and conjugate";
  return c;
}

Check verify_root_evaluation() {
  Check c = named("hookspace.root_evaluation");
  Partition mu{2, 1}, lam{3, 2, 1};
  HookTable t = hook_table({});
  RatFunc lr = lr_coefficient(mu, mu, lam);
  RatFunc ev = evaluate(build_gstar(), t.physical);
  c.expect(ev == lr, "evaluate(g*) = " + ev.to_string() + " vs lr " + lr.to_string());
  AlphaPoly st = stanley_coefficient(mu, mu, lam);
  MultiPoly gq = evaluate_on(pulled_product(gstar_masks()), t);  // = G at the root
  MultiPoly via_g = gq * alpha() * Rational(-1, 1024);
  c.expect(via_g == st, "-alpha 2^-10 G(root) = " + text(via_g));
  MultiPoly primed = evaluate_on(pullback_hooks(formal_primed(gstar_masks())), t) * alpha();
  c.expect(primed == st, "alpha g*'(root) = " + text(primed));
  MultiPoly phi0 = substitute(phi_polynomial(), {{"x1", MultiPoly()}, {"x2", MultiPoly()}, {"x3", MultiPoly()},
                                                 {"x4", MultiPoly()}, {"x5", MultiPoly()}}) *
                   alpha() * Rational(1, 1024);
  c.expect(phi0 == st, "phi at x=0 gives " + text(phi0));
  c.details = "stanley(21,21;321) = " + text(st);
  return c;
}

Check verify_orbit_sums() {
  Check c = named("hookspace.orbit_sums");
  MultiPoly sum_ell;
  for (int b = 0; b < kBoxes; ++b) sum_ell += MultiPoly::var(ell_var(b));
  MultiPoly t1 = orbit_sum(1);
  c.expect(t1 == sum_ell * Rational(16), "T1 = " + text(t1));
  c.expect(orbit_sum(9).is_zero(), "T9 = " + text(orbit_sum(9)));
  MultiPoly regroup;
  for (int k = 0; k <= kBoxes; ++k) regroup += orbit_sum(k) * beta().pow(kBoxes - k) * Rational(2);
  c.expect(regroup == gstar_ell(), "2 sum beta^{10-k} T_k != G");
  // G against the primed product: l_b = x_b(2u_b - beta), 2^10 g*' = -G
  std::map<std::string, MultiPoly> bind;
  for (int b = 0; b < kBoxes; ++b)
    bind[ell_var(b)] = MultiPoly::from_int(x_sign(b)) * (MultiPoly::from_int(2) * MultiPoly::var(hook_var(b)) - beta());
  MultiPoly lhs = substitute(gstar_ell(), bind);
  MultiPoly rhs = formal_primed(gstar_masks()) * Rational(-1024);
  c.expect(lhs == rhs, "G(l(u)) != -2^10 g*'");
  for (Mask I = 0; I <= kFull; ++I) {
    std::map<std::string, int> mono;
    for (int b = 0; b < kBoxes; ++b)
      if (!(I >> b & 1)) mono[ell_var(b)] = 1;
    int n = std::popcount(static_cast<unsigned>(I));
    if (n) mono[kBeta] = n;
    Rational got = gstar_ell().coeff(mono);
    c.expect(got == Rational(static_cast<long>(gstar_weight(I))), "weight of I=" + std::to_string(I));
  }
  c.details = "T1 = 16 sum l, T9 = 0, weights 2(2e_I-|I|+1) on 1024 subsets";
  return c;
}

Check verify_odd_vanishing() {
  Check c = named("hookspace.odd_orbit_vanishing");
  std::string d;
  for (int k : {1, 3, 5, 7, 9}) {
    MultiPoly q = pullback(orbit_sum(k));
    c.expect(q.is_zero(), "pullback(T" + std::to_string(k) + ") = " + text(q));
  }
  MultiPoly t2 = pullback(orbit_sum(2));
  c.expect(!t2.is_zero(), "pullback(T2) = 0");
  c.details = "T1,T3,T5,T7,T9 in the kernel; pullback(T2) has " + std::to_string(t2.size()) + " terms";
  return c;
}

Check verify_z2_invariance() {
  Check c = named("hookspace.z2_invariance");
  MultiPoly g = pulled_product(gstar_masks());
  MultiPoly gc = pulled_product(conjugate(gstar_masks()));
  c.expect(g == gc, "pullback(g*) - pullback(conj g*) = " + text(g - gc));
  // the same through the formal hook variables
  MultiPoly h = pullback_hooks(formal_primed(gstar_masks()));
  MultiPoly hc = pullback_hooks(formal_primed(conjugate(gstar_masks())));
  c.expect(h == hc, "hook-variable route differs: " + text(h - hc));
  c.expect(pullback(gstar_ell()) == g, "pullback of the expanded G disagrees with the product form");
  c.details = "conjugate and g* agree on the hook space";
  return c;
}

Check verify_sigma56_invariance() {
  Check c = named("hookspace.sigma56_invariance");
  auto s = petjohn::sigma56_on_ell();
  std::map<std::string, MultiPoly> bind;
  for (int b = 0; b < kBoxes; ++b)
    bind[ell_var(b)] = MultiPoly::from_int(s[b].second) * MultiPoly::var(ell_var(s[b].first));
  for (int b = 0; b < kBoxes; ++b) {
    MultiPoly q = pullback(substitute(claw_ell(b), bind));
    c.expect(q.is_zero(), "sigma56 moves cl_" + std::string(box_names()[b]) + " out of the claw span");
  }
  MultiPoly g = pullback(gstar_ell());
  MultiPoly gs = pullback(substitute(gstar_ell(), bind));
  c.expect(g == gs, "pullback(sigma56 G) - pullback(G) = " + text(gs - g));
  // top slice: prod l_b picks up (-1)^6
  MultiPoly top = orbit_sum(10);
  c.expect(substitute(top, bind) == top, "degree-10 slice not invariant");
  c.details = "sigma56 preserves the claw span and G";
  return c;
}

namespace {
const MultiPoly& pulled_gstar() {
  static const MultiPoly g = pulled_product(gstar_masks());
  return g;
}
}  // namespace

Check verify_hyperplane(int b, HookChoice hc) {
  Check c = named(std::string("hookspace.hyperplane.") + box_names()[b] + "." + choice_char(hc));
  std::string pivot;
  MultiPoly lhs = restrict_to_hyperplane(pulled_gstar(), b, hc, &pivot);
  Mask m = boundary_mask(b, hc);
  MultiPoly rhs = restrict_to_hyperplane(pulled_product({{m, 1}}), b, hc);
  c.expect(lhs == rhs, "restricted g*: " + text(lhs));
  if (lhs != rhs) c.witnesses.push_back("restricted datum: " + text(rhs));
  c.expect(!gstar_masks().count(m), "datum lies in the support of g*");
  c.details = "datum " + diagram(m).to_string() + ", eliminated " + pivot;
  return c;
}

std::vector<Check> verify_hyperplanes() {
  std::vector<Check> out;
  for (int b = 0; b < kBoxes; ++b)
    for (HookChoice hc : {reference_choice(b), complement(reference_choice(b))})
      out.push_back(timed([&] { return verify_hyperplane(b, hc); }));
  return out;
}

Check verify_boundary_equivariance() {
  Check c = named("hookspace.boundary_equivariance");
  int n = 0;
  for (const auto& g : s5_generators())
    for (int b = 0; b < kBoxes; ++b)
      for (bool agree : {true, false}) {
        HookChoice cb = agree ? reference_choice(b) : complement(reference_choice(b));
        int gb = g.perm[b];
        HookChoice cg = agree ? reference_choice(gb) : complement(reference_choice(gb));
        ++n;
        c.expect(permute(g.perm, boundary_mask(b, cb)) == boundary_mask(gb, cg),
                 g.name + " on datum of " + box_names()[b]);
      }
  c.details = std::to_string(n) + " generator/box/choice cases";
  return c;
}

Check verify_e_expansion() {
  Check c = named("hookspace.e_expansion");
  MultiPoly want = expected_e_expansion();
  MultiPoly got = e_expansion();
  c.expect(got == want, "untwisted G = " + text(got));
  // untwisting kills the claws
  for (int b = 0; b < kBoxes; ++b) {
    MultiPoly q = substitute(untwist_to_x(claw_ell(b)), {{"x6", -(MultiPoly::var("x1") + MultiPoly::var("x2") +
                                                                   MultiPoly::var("x3") + MultiPoly::var("x4") +
                                                                   MultiPoly::var("x5"))}});
    c.expect(q.is_zero(), "psi(cl_" + std::string(box_names()[b]) + ") = " + text(q));
  }
  // the {0..5} box labelling gives the same invariant
  const auto& ax = appendix_x();
  MultiPoly app = expand_in_elementary(product_form(gstar_masks(), appendix_images(), beta()), ax);
  c.expect(app == want, "label-table untwisting = " + text(app));
  c.expect(want.coeff(std::map<std::string, int>{{kBeta, 10}}) == 42, "beta^10 coefficient");
  c.details = "e-expansion matches, " + std::to_string(got.size()) + " terms";
  return c;
}

Check verify_nonnegativity() {
  Check c = named("hookspace.nonnegativity");
  std::string w;
  auto a = monomial_coefficients(expected_e_expansion());
  int nonzero = 0;
  for (const auto& [lam, p] : a) {
    if (p.is_zero()) continue;
    ++nonzero;
    c.expect(lam.part(0) <= 3, "a_" + lam.to_string() + " nonzero with lambda_1 > 3");
    c.expect(nonneg_coeffs(p, &w), "a_" + lam.to_string() + " = " + text(p));
  }
  MultiPoly phi = phi_polynomial();
  c.expect(nonneg_coeffs(phi, &w), "-G(phi) has " + w);
  MultiPoly y = y_polynomial();
  c.expect(nonneg_coeffs(y, &w), "-G(y) has " + w);
  c.expect(y.degree_in(kBeta) <= 7, "beta-degree of -G(y) = " + std::to_string(y.degree_in(kBeta)));
  bool homogeneous = true;
  for (const auto& [e, k] : y.terms()) {
    int d = 0;
    for (auto v : e) d += v;
    homogeneous = homogeneous && d == 10;
  }
  c.expect(homogeneous, "-G(y) not homogeneous of degree 10");
  // phi at integer parameters reproduces l_b = 2h^U - beta
  c.details = std::to_string(nonzero) + " nonzero a_lambda; -G(phi) " + std::to_string(phi.size()) +
              " terms; -G(y) beta-degree " + std::to_string(y.degree_in(kBeta));
  return c;
}

}  // namespace jacklr::hookspace
