#include "jacklr/petjohn.hpp"

#include "jacklr/stanley.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

namespace jacklr::petjohn {

namespace {
Subset from_digits(const std::string& s, int offset) {
  Subset t = 0;
  for (char c : s) {
    int e = c - '0' - offset;
    if (e < 0 || e > 5 || (t >> e & 1)) throw std::invalid_argument("bad subset label '" + s + "'");
    t |= 1u << e;
  }
  return t;
}
std::string to_digits(Subset t, int offset) {
  std::string s;
  for (int e = 0; e < 6; ++e)
    if (t >> e & 1) s += static_cast<char>('0' + e + offset);
  return s;
}
}  // namespace

Subset from_digits(const std::string& d) { return from_digits(d, 1); }
std::string to_digits(Subset t) { return to_digits(t, 1); }
Subset from_appendix(const std::string& d) { return from_digits(d, 0); }
std::string to_appendix(Subset t) { return to_digits(t, 0); }

int Graph::edge_count() const {
  int e = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j) e += adj[i][j];
  return e;
}

bool Graph::regular(int k) const {
  for (const auto& row : adj)
    if (std::count(row.begin(), row.end(), 1) != k) return false;
  return true;
}

Graph petersen() {
  Graph g;
  for (int b = 0; b < root::kBoxes; ++b) {
    auto [i, j] = root::petersen_label(b);
    g.names.push_back(std::to_string(i) + std::to_string(j));
  }
  g.adj.assign(10, std::vector<int>(10, 0));
  for (int a = 0; a < 10; ++a)
    for (int b = 0; b < 10; ++b) g.adj[a][b] = a != b && root::adjacent(a, b);
  return g;
}

int girth(const Graph& g) {
  int best = 0;
  for (int s = 0; s < g.size(); ++s) {
    std::vector<int> dist(g.size(), -1), parent(g.size(), -1);
    std::deque<int> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v = 0; v < g.size(); ++v) {
        if (!g.adj[u][v]) continue;
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push_back(v);
        } else if (parent[u] != v) {
          int c = dist[u] + dist[v] + 1;
          if (!best || c < best) best = c;
        }
      }
    }
  }
  return best;
}

std::vector<Subset> triples() {
  std::vector<Subset> t;
  for (Subset m = 0; m <= kAll6; ++m)
    if (std::popcount(m) == 3) t.push_back(m);
  return t;
}

Graph johnson() {
  Graph g;
  auto t = triples();
  for (Subset m : t) g.names.push_back(to_digits(m));
  g.adj.assign(t.size(), std::vector<int>(t.size(), 0));
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) g.adj[i][j] = std::popcount(t[i] & t[j]) == 2;
  return g;
}

int eigen_multiplicity(const Graph& g, long long k) {
  std::vector<std::vector<Rational>> m(g.size(), std::vector<Rational>(g.size()));
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j) m[i][j] = static_cast<long>(g.adj[i][j] - (i == j ? k : 0));
  return g.size() - rational_rank(m);
}

Pentagon pentagon_from_cycle(const std::array<int, 5>& cycle, int q_label) {
  Pentagon p;
  p.q = label_element(q_label);
  for (int i = 0; i < 5; ++i) {
    int a = label_element(cycle[i]), b = label_element(cycle[(i + 1) % 5]);
    p.white[i] = {std::min(a, b), std::max(a, b)};
  }
  return p;
}

bool is_white(const Pentagon& p, int i, int j) {
  Duad d{std::min(i, j), std::max(i, j)};
  return std::find(p.white.begin(), p.white.end(), d) != p.white.end();
}

std::vector<Pentagon> all_pentagons(int q) {
  std::vector<int> v;
  for (int e = 0; e < 6; ++e)
    if (e != q) v.push_back(e);
  std::vector<Pentagon> out;
  // 5-cycles through v[0]: fix the start, drop reversals
  std::array<int, 4> rest = {v[1], v[2], v[3], v[4]};
  std::sort(rest.begin(), rest.end());
  do {
    if (rest[0] > rest[3]) continue;
    std::array<int, 5> cyc = {v[0], rest[0], rest[1], rest[2], rest[3]};
    Pentagon p;
    p.q = q;
    for (int i = 0; i < 5; ++i) {
      int a = cyc[i], b = cyc[(i + 1) % 5];
      p.white[i] = {std::min(a, b), std::max(a, b)};
    }
    out.push_back(p);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

std::string pentagon_text(const Pentagon& p) {
  std::string s;
  for (auto [a, b] : p.white) s += "(" + std::to_string(a + 1) + std::to_string(b + 1) + ")";
  return s;
}

std::vector<Syntheme> pentad_from_pentagon(const Pentagon& p) {
  // white edges must form a single 5-cycle on [6]\{q}
  std::array<int, 6> deg{};
  for (auto [a, b] : p.white) {
    if (a == p.q || b == p.q || a == b) throw std::invalid_argument("invalid pentagon");
    deg[a]++, deg[b]++;
  }
  for (int e = 0; e < 6; ++e)
    if (e != p.q && deg[e] != 2) throw std::invalid_argument("invalid pentagon");
  {
    std::vector<int> seen{p.white[0].first};
    int prev = -1, cur = p.white[0].first;
    for (int step = 0; step < 5; ++step) {
      int next = -1;
      for (auto [a, b] : p.white) {
        int o = a == cur ? b : (b == cur ? a : -1);
        if (o >= 0 && o != prev) {
          next = o;
          break;
        }
      }
      prev = cur, cur = next;
      seen.push_back(cur);
    }
    if (cur != p.white[0].first) throw std::invalid_argument("invalid pentagon");
    std::sort(seen.begin(), seen.end());
    if (std::unique(seen.begin(), seen.end()) - seen.begin() != 5) throw std::invalid_argument("invalid pentagon");
  }
  std::vector<Syntheme> out;
  for (auto A : p.white) {
    // the unique black edge disjoint from A, and the leftover vertex
    std::vector<int> left;
    for (int e = 0; e < 6; ++e)
      if (e != p.q && e != A.first && e != A.second) left.push_back(e);
    for (int i = 0; i < 3; ++i) {
      int x = left[i], y = left[(i + 1) % 3], e = left[(i + 2) % 3];
      if (is_white(p, x, y)) continue;
      Duad B{std::min(x, y), std::max(x, y)};
      Duad E{std::min(e, p.q), std::max(e, p.q)};
      out.push_back({A, B, E});
    }
  }
  return out;
}

Subset rho(const Pentagon& p, Subset t) {
  Subset qbit = 1u << p.q;
  bool has_q = t & qbit;
  Subset side = has_q ? t : complement(t);
  Subset dmask = side & ~qbit;
  int d1 = std::countr_zero(dmask), d2 = 31 - std::countl_zero(dmask);
  Duad d{d1, d2};
  Subset image = 0;
  for (const auto& s : pentad_from_pentagon(p))
    for (int k = 0; k < 2; ++k)
      if (s[k] == d) image = qbit | (1u << s[1 - k].first) | (1u << s[1 - k].second);
  if (!image) throw std::logic_error("duad not covered by pentad");
  bool flip = !has_q;
  if (!is_white(p, d1, d2)) flip = !flip;
  return flip ? complement(image) : image;
}

std::array<Subset, 10> gamma_embedding(const Pentagon& p) {
  std::array<Subset, 10> g{};
  for (int b = 0; b < 10; ++b) {
    auto [i, j] = root::petersen_label(b);
    g[b] = rho(p, (1u << label_element(i)) | (1u << label_element(j)) | (1u << p.q));
  }
  return g;
}

Pentagon figure_pentagon() {
  // white cycle 1-3-5-2-4, i.e. the colour swap of (12)(23)(34)(45)(15)
  return pentagon_from_cycle({1, 3, 5, 2, 4});
}

Subset SignedPerm::apply(Subset t) const {
  Subset out = 0;
  for (int e = 0; e < 6; ++e)
    if (t >> e & 1) out |= 1u << perm[e];
  return sign < 0 ? complement(out) : out;
}

std::vector<SignedPerm> intertwiner_generators() {
  // cycles in 1..6 labels
  auto make = [](const char* name, std::vector<std::pair<int, int>> swaps) {
    SignedPerm s{name, {0, 1, 2, 3, 4, 5}, -1};
    for (auto [a, b] : swaps) std::swap(s.perm[a - 1], s.perm[b - 1]);
    return s;
  };
  return {make("s12", {{4, 6}, {1, 5}, {2, 3}}), make("s23", {{5, 6}, {1, 2}, {3, 4}}),
          make("s34", {{1, 6}, {2, 3}, {4, 5}}), make("s45", {{2, 6}, {1, 5}, {3, 4}}),
          make("s56", {{6, 5}, {1, 4}, {2, 3}})};
}

std::array<std::pair<int, int>, 10> sigma56_on_ell() {
  std::array<std::pair<int, int>, 10> s{};
  for (int b = 0; b < 10; ++b) s[b] = {b, 1};
  auto pair = [&](int i, int j, int k, int l) {
    int a = root::box_of_label(i, j), b = root::box_of_label(k, l);
    s[a] = {b, -1};
    s[b] = {a, -1};
  };
  pair(1, 2, 3, 4);
  pair(2, 3, 1, 4);
  pair(2, 4, 1, 3);
  return s;
}

std::array<Subset, 10> appendix_labels() {
  return {from_appendix("145"), from_appendix("135"), from_appendix("235"), from_appendix("025"),
          from_appendix("012"), from_appendix("124"), from_appendix("234"), from_appendix("013"),
          from_appendix("034"), from_appendix("045")};
}

std::array<SignedTriple, 10> psi_table() {
  std::array<SignedTriple, 10> t{};
  auto set = [&](int i, int j, int sign, const char* T) { t[root::box_of_label(i, j)] = {sign, from_digits(T)}; };
  set(1, 2, -1, "356");
  set(2, 3, -1, "146");
  set(3, 4, -1, "256");
  set(1, 3, 1, "456");
  set(2, 4, 1, "156");
  set(3, 5, 1, "126");
  set(1, 4, 1, "236");
  set(2, 5, 1, "346");
  set(4, 5, -1, "136");
  set(1, 5, -1, "246");
  return t;
}

}  // namespace jacklr::petjohn
