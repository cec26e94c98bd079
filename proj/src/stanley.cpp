#include "jacklr/stanley.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace jacklr {

char choice_char(HookChoice c) { return c == HookChoice::U ? 'U' : 'L'; }

const char* slot_name(Slot s) {
  switch (s) {
    case Slot::Mu: return "mu";
    case Slot::Nu: return "nu";
    default: return "lam";
  }
}

namespace {
int box_offset(const Partition& p, Box b) {
  if (!p.contains(b)) throw std::out_of_range("box not in diagram");
  int k = 0;
  for (int i = 0; i < b.row; ++i) k += p.part(i);
  return k + b.col;
}
}  // namespace

StanleyDiagram::StanleyDiagram(Partition mu, Partition nu, Partition lam) {
  shape = {std::move(mu), std::move(nu), std::move(lam)};
  for (int s = 0; s < 3; ++s) {
    choice[s].assign(shape[s].weight(), HookChoice::U);
    bound[s].assign(shape[s].weight(), false);
  }
}

HookChoice StanleyDiagram::at(Slot s, Box b) const {
  int i = static_cast<int>(s);
  return choice[i][box_offset(shape[i], b)];
}

void StanleyDiagram::set(Slot s, Box b, HookChoice c) {
  int i = static_cast<int>(s);
  choice[i][box_offset(shape[i], b)] = c;
}

std::string StanleyDiagram::to_string() const {
  std::string out;
  for (int s = 0; s < 3; ++s) {
    if (s) out += ";";
    out += slot_name(static_cast<Slot>(s));
    out += ":";
    for (std::size_t k = 0; k < choice[s].size(); ++k) out += bound[s][k] ? '?' : choice_char(choice[s][k]);
  }
  return out;
}

StanleyDiagram StanleyDiagram::conjugate() const {
  StanleyDiagram d = *this;
  for (auto& v : d.choice)
    for (auto& c : v) c = jacklr::complement(c);
  return d;
}

void add_term(StanleySum& s, const StanleyDiagram& d, long long c) {
  if (!c) return;
  auto it = s.find(d);
  if (it == s.end()) {
    s.emplace(d, c);
    return;
  }
  it->second += c;
  if (!it->second) s.erase(it);
}

const Hook& HookContext::at(Slot s, Box b) const {
  auto it = hooks.find({s, b});
  if (it == hooks.end())
    throw std::out_of_range(std::string("missing hook for ") + slot_name(s) + " box (" + std::to_string(b.row) +
                            "," + std::to_string(b.col) + ")");
  return it->second;
}

HookContext triple_context(const Partition& mu, const Partition& nu, const Partition& lam) {
  HookContext ctx;
  const Partition* ps[3] = {&mu, &nu, &lam};
  for (int s = 0; s < 3; ++s)
    for (Box b : ps[s]->boxes())
      ctx.hooks[{static_cast<Slot>(s), b}] = Hook{upper_hook(*ps[s], b), lower_hook(*ps[s], b)};
  return ctx;
}

namespace {
// numerator and lambda-product of one diagram; primed puts bar-lambda on top
std::pair<MultiPoly, MultiPoly> diagram_parts(const StanleyDiagram& d, const HookContext& ctx, bool primed) {
  MultiPoly top = MultiPoly::constant(1), bottom = MultiPoly::constant(1);
  for (int s = 0; s < 3; ++s) {
    auto boxes = d.shape[s].boxes();
    for (std::size_t k = 0; k < boxes.size(); ++k) {
      const Hook& h = ctx.at(static_cast<Slot>(s), boxes[k]);
      HookChoice c = d.choice[s][k];
      if (s < 2)
        top *= h.get(c);
      else if (primed)
        top *= h.get(complement(c));
      else
        bottom *= h.get(c);
    }
  }
  return {top, bottom};
}
}  // namespace

RatFunc evaluate(const StanleySum& s, const HookContext& ctx) {
  RatFunc total;
  for (const auto& [d, c] : s) {
    auto [top, bottom] = diagram_parts(d, ctx, false);
    total += RatFunc(top * Rational(static_cast<long>(c)), bottom);
  }
  return total;
}

MultiPoly evaluate_poly(const StanleySum& s, const HookContext& ctx) {
  MultiPoly total;
  for (const auto& [d, c] : s) total += diagram_parts(d, ctx, true).first * Rational(static_cast<long>(c));
  return total;
}

// ---------------------------------------------------------------------------

namespace root {

namespace {
const Partition kMu{2, 1}, kLam{3, 2, 1};
// Kneser labels in free-box order
constexpr std::array<std::pair<int, int>, kBoxes> kLabels = {{
    {3, 4}, {2, 5}, {1, 3}, {2, 4}, {3, 5}, {1, 2}, {4, 5}, {1, 4}, {2, 3}, {1, 5}}};
const Box kB3{0, 1}, kC1{2, 0}, kC6{0, 2};
}  // namespace

const std::array<const char*, kBoxes>& box_names() {
  static const std::array<const char*, kBoxes> n = {"a1", "a2", "a3", "b1", "b2", "b3t", "c2", "c3", "c4", "c5"};
  return n;
}

int box_index(const std::string& name) {
  const auto& n = box_names();
  for (int i = 0; i < kBoxes; ++i)
    if (name == n[i]) return i;
  return -1;
}

std::pair<Slot, Box> position(int b) {
  static const std::array<std::pair<Slot, Box>, kBoxes> pos = {{
      {Slot::Mu, {1, 0}}, {Slot::Mu, {0, 0}}, {Slot::Mu, {0, 1}},
      {Slot::Nu, {1, 0}}, {Slot::Nu, {0, 0}}, {Slot::Nu, {0, 1}},
      {Slot::Lam, {1, 0}}, {Slot::Lam, {1, 1}}, {Slot::Lam, {0, 0}}, {Slot::Lam, {0, 1}}}};
  return pos.at(b);
}

std::pair<int, int> petersen_label(int b) { return kLabels.at(b); }

int box_of_label(int i, int j) {
  if (i > j) std::swap(i, j);
  for (int b = 0; b < kBoxes; ++b)
    if (kLabels[b] == std::make_pair(i, j)) return b;
  return -1;
}

bool adjacent(int a, int b) {
  auto [p, q] = kLabels[a];
  auto [r, s] = kLabels[b];
  return p != r && p != s && q != r && q != s;
}

Mask neighbors(int b) {
  Mask m = 0;
  for (int a = 0; a < kBoxes; ++a)
    if (adjacent(a, b)) m |= 1 << a;
  return m;
}

Mask closed_neighborhood(int b) { return neighbors(b) | (1 << b); }

std::vector<std::pair<int, int>> petersen_edges() {
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < kBoxes; ++a)
    for (int b = a + 1; b < kBoxes; ++b)
      if (adjacent(a, b)) e.emplace_back(a, b);
  return e;
}

int x_sign(int b) { return (b == C2 || b == C4 || b == C5) ? -1 : 1; }

HookChoice reference_choice(int b) { return b == C3 ? HookChoice::L : HookChoice::U; }

StanleyDiagram diagram(Mask flips) {
  StanleyDiagram d(kMu, kMu, kLam);
  for (int b = 0; b < kBoxes; ++b) {
    HookChoice c = reference_choice(b);
    if (flips >> b & 1) c = complement(c);
    auto [s, box] = position(b);
    d.set(s, box, c);
  }
  // b~3 drives b3, c1 (same choice) and c6 (opposite)
  HookChoice t = d.at(Slot::Nu, kB3);
  d.set(Slot::Lam, kC1, t);
  d.set(Slot::Lam, kC6, complement(t));
  d.bound[2][box_offset(kLam, kC1)] = true;
  d.bound[2][box_offset(kLam, kC6)] = true;
  return d;
}

StanleyDiagram reference_X() { return diagram(0); }

Mask mask_of(const StanleyDiagram& d) {
  if (d.shape[0] != kMu || d.shape[1] != kMu || d.shape[2] != kLam) throw std::invalid_argument("not a root diagram");
  HookChoice t = d.at(Slot::Nu, kB3);
  if (d.at(Slot::Lam, kC1) != t || d.at(Slot::Lam, kC6) != complement(t))
    throw std::invalid_argument("diagram violates the b3/c1/c6 constraint");
  Mask m = 0;
  for (int b = 0; b < kBoxes; ++b) {
    auto [s, box] = position(b);
    if (d.at(s, box) != reference_choice(b)) m |= 1 << b;
  }
  return m;
}

StanleyDiagram flip(const StanleyDiagram& d, Mask flips) { return diagram(mask_of(d) ^ flips); }

MaskSum gstar_masks() {
  MaskSum s;
  s[0] = 7;
  for (int b = 0; b < kBoxes; ++b) s[1 << b] = -2;
  for (auto [a, b] : petersen_edges()) s[(1 << a) | (1 << b)] = 1;
  return s;
}

StanleySum from_masks(const MaskSum& s) {
  StanleySum out;
  for (auto [m, c] : s) add_term(out, diagram(m), c);
  return out;
}

MaskSum to_masks(const StanleySum& s) {
  MaskSum out;
  for (const auto& [d, c] : s) {
    long long& v = out[mask_of(d)];
    v += c;
    if (!v) out.erase(mask_of(d));
  }
  return out;
}

StanleySum build_gstar() { return from_masks(gstar_masks()); }

MaskSum conjugate(const MaskSum& s) {
  MaskSum out;
  for (auto [m, c] : s) out[m ^ kFull] = c;
  return out;
}

std::vector<long long> k_transform(const MaskSum& s, Mask ref) {
  std::vector<long long> K(1 << kBoxes, 0);
  for (auto [m, c] : s) {
    Mask agree = ~(m ^ ref) & kFull;  // boxes where D matches the reference
    // K_I collects c_D for every I inside the agreement set
    for (Mask I = agree;; I = (I - 1) & agree) {
      K[I] += c;
      if (!I) break;
    }
  }
  return K;
}

MaskSum k_inverse(const std::vector<long long>& K, Mask ref) {
  // superset Moebius inversion: f(I) = sum_{J>=I} (-1)^{|J\I|} K_J
  std::vector<long long> f(K);
  for (int b = 0; b < kBoxes; ++b)
    for (Mask I = 0; I <= kFull; ++I)
      if (!(I >> b & 1)) f[I] -= f[I | (1 << b)];
  MaskSum out;
  for (Mask I = 0; I <= kFull; ++I)
    if (f[I]) out[ref ^ (~I & kFull)] = f[I];  // f(I) is the coefficient of bar(B)^I
  return out;
}

std::vector<long long> change_reference(const std::vector<long long>& KB, Mask refB, Mask refA) {
  Mask diff = (refA ^ refB) & kFull;
  std::vector<long long> KA(1 << kBoxes, 0);
  for (Mask J = 0; J <= kFull; ++J) {
    Mask free = J & diff;
    long long v = 0;
    // I = J minus a subset of the differing boxes inside J
    for (Mask S = free;; S = (S - 1) & free) {
      Mask I = J & ~S;
      int sign = std::popcount(static_cast<unsigned>(I & diff)) & 1 ? -1 : 1;
      v += sign * KB[I];
      if (!S) break;
    }
    KA[J] = v;
  }
  return KA;
}

namespace {
// primed reference choice at b for a diagram given by its flip mask
bool primed_upper(int b, Mask ref) {
  bool up = x_sign(b) > 0;
  return (ref >> b & 1) ? !up : up;
}
}  // namespace

MaskSum kernel_sum(Mask ref, Mask Y, const std::array<long long, kBoxes>& a, long long d) {
  MaskSum out;
  for (Mask L = Y;; L = (L - 1) & Y) {
    long long s = d;
    for (int b = 0; b < kBoxes; ++b)
      if ((Y >> b & 1) && !(L >> b & 1)) s -= (primed_upper(b, ref) ? -1 : 1) * a[b];
    if (std::popcount(static_cast<unsigned>(L)) & 1) s = -s;
    if (s) out[ref ^ L] += s;
    if (!L) break;
  }
  return out;
}

MaskSum claw_kernel(int b) {
  std::array<long long, kBoxes> a{};
  a[b] = -x_sign(b);
  for (int c = 0; c < kBoxes; ++c)
    if (adjacent(b, c)) a[c] = x_sign(c);
  return kernel_sum(0, closed_neighborhood(b), a, -1);
}

std::string hook_var(int b) { return std::string("u_") + box_names()[b]; }

MultiPoly formal_primed(const MaskSum& s) {
  MultiPoly total;
  for (auto [m, c] : s) {
    MultiPoly p = MultiPoly::constant(static_cast<long>(c));
    for (int b = 0; b < kBoxes; ++b) {
      MultiPoly u = MultiPoly::var(hook_var(b));
      p *= primed_upper(b, m) ? u : u - beta();
    }
    total += p;
  }
  return total;
}

std::string ell_var(int b) { return std::string("l_") + box_names()[b]; }

std::vector<std::string> ell_vars() {
  std::vector<std::string> v;
  for (int b = 0; b < kBoxes; ++b) v.push_back(ell_var(b));
  return v;
}

MultiPoly ell_expansion(const MaskSum& s, Mask ref) {
  std::vector<std::string> vars = ell_vars();
  vars.push_back(kBeta);
  MultiPoly total(vars);
  std::vector<MultiPoly> plus, minus;
  for (int b = 0; b < kBoxes; ++b) {
    MultiPoly l = MultiPoly::var(ell_var(b)).over(vars);
    plus.push_back(l + beta());
    minus.push_back(l - beta());
  }
  for (auto [m, c] : s) {
    Mask J = m ^ ref;
    MultiPoly p = MultiPoly::constant(static_cast<long>(c)).over(vars);
    for (int b = 0; b < kBoxes; ++b) p *= (J >> b & 1) ? minus[b] : plus[b];
    total += p;
  }
  return total;
}

int edges_within(Mask I) {
  int e = 0;
  for (auto [a, b] : petersen_edges())
    if ((I >> a & 1) && (I >> b & 1)) ++e;
  return e;
}

long long gstar_weight(Mask I) {
  int n = std::popcount(static_cast<unsigned>(I));
  return 2 * (2 * edges_within(I) - n + 1);
}

std::vector<S5Generator> s5_generators() {
  // permutations of [5]; index 0 unused
  struct P {
    const char* name;
    std::array<int, 6> p;
  };
  const P gens[] = {{"R1", {0, 1, 2, 5, 4, 3}},
                    {"R2", {0, 1, 5, 3, 4, 2}},
                    {"T", {0, 4, 2, 3, 1, 5}},
                    {"R3", {0, 3, 4, 1, 2, 5}}};
  std::vector<S5Generator> out;
  for (const auto& g : gens) {
    S5Generator s{g.name, {}};
    for (int b = 0; b < kBoxes; ++b) {
      auto [i, j] = kLabels[b];
      s.perm[b] = box_of_label(g.p[i], g.p[j]);
    }
    out.push_back(s);
  }
  return out;
}

Mask permute(const std::array<int, kBoxes>& perm, Mask m) {
  Mask out = 0;
  for (int b = 0; b < kBoxes; ++b)
    if (m >> b & 1) out |= 1 << perm[b];
  return out;
}

MaskSum permute(const std::array<int, kBoxes>& perm, const MaskSum& s) {
  MaskSum out;
  for (auto [m, c] : s) out[permute(perm, m)] = c;
  return out;
}

}  // namespace root

}  // namespace jacklr
