#include "anharm/diagrams.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "anharm/errors.hpp"

namespace anharm {

namespace {

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long long ipow(long long base, int exp) {
  long long r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::string describe(std::span<const Edge> edges) {
  std::ostringstream os;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) os << ' ';
    os << 'G' << edges[i].a + 1 << edges[i].b + 1 << '^' << edges[i].power;
  }
  return os.str();
}

DiagramSpec make(std::string name, int order, std::vector<Edge> edges, long long symmetry_factor) {
  DiagramSpec d{std::move(name), order, std::move(edges), symmetry_factor, order % 2 == 1 ? 1 : -1, {}};
  validate(d);
  return d;
}

}  // namespace

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<int> vertex_degrees(const DiagramSpec& diagram) {
  std::vector<int> deg(static_cast<std::size_t>(std::max(diagram.order, 0)), 0);
  for (const auto& e : diagram.edges) {
    if (e.a >= 0 && e.a < diagram.order) deg[e.a] += e.power;
    if (e.b >= 0 && e.b < diagram.order) deg[e.b] += e.power;
  }
  return deg;
}

void validate(const DiagramSpec& d) {
  if (d.order < 2) throw ValidationError("diagram " + d.name + ": needs at least two vertices");
  if (d.symmetry_factor <= 0) throw ValidationError("diagram " + d.name + ": symmetry factor must be positive");
  for (const auto& e : d.edges) {
    if (e.a < 0 || e.b < 0 || e.a >= d.order || e.b >= d.order) {
      throw ValidationError("diagram " + d.name + ": edge vertex out of range");
    }
    if (e.a == e.b) throw ValidationError("diagram " + d.name + ": self-contraction at a vertex");
    if (e.power <= 0) throw ValidationError("diagram " + d.name + ": edge power must be positive");
  }
  const auto deg = vertex_degrees(d);
  for (int v = 0; v < d.order; ++v) {
    if (deg[v] != 4) {
      throw ValidationError("diagram " + d.name + ": vertex " + std::to_string(v + 1) + " has degree " +
                            std::to_string(deg[v]) + ", expected 4");
    }
  }
  // connectivity by union-find
  std::vector<int> parent(d.order);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : d.edges) parent[find(e.a)] = find(e.b);
  for (int v = 1; v < d.order; ++v) {
    if (find(v) != find(0)) throw ValidationError("diagram " + d.name + ": graph is disconnected");
  }
}

std::vector<Edge> repair_to_quartic(std::span<const Edge> edges, int order) {
  std::vector<int> excess(order, -4);
  for (const auto& e : edges) {
    excess[e.a] += e.power;
    excess[e.b] += e.power;
  }
  if (std::any_of(excess.begin(), excess.end(), [](int x) { return x < 0; })) {
    throw ValidationError("cannot repair: a vertex has degree below 4");
  }
  // enumerate reductions r_e in [0, power_e - 1]
  std::vector<int> r(edges.size(), 0);
  std::vector<std::vector<int>> solutions;
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == edges.size()) {
      std::vector<int> left = excess;
      for (std::size_t k = 0; k < edges.size(); ++k) {
        left[edges[k].a] -= r[k];
        left[edges[k].b] -= r[k];
      }
      if (std::all_of(left.begin(), left.end(), [](int x) { return x == 0; })) solutions.push_back(r);
      return;
    }
    for (int k = 0; k < edges[i].power; ++k) {
      r[i] = k;
      self(self, i + 1);
    }
    r[i] = 0;
  };
  recurse(recurse, 0);
  if (solutions.size() != 1) {
    throw ValidationError("degree-4 repair of " + describe(edges) + " is not unique (" +
                          std::to_string(solutions.size()) + " candidates)");
  }
  std::vector<Edge> out(edges.begin(), edges.end());
  for (std::size_t k = 0; k < out.size(); ++k) out[k].power -= solutions[0][k];
  return out;
}

std::vector<DiagramSpec> builtin_diagrams() {
  const long long c42 = binomial(4, 2);
  const long long c43 = binomial(4, 3);
  const long long n2 = factorial(4);
  const long long n3 = factorial(3) / (3 * 2) * ipow(2 * c42, 3);
  const long long n4a = factorial(4) / (4 * 2) * ipow(2 * c42, 4);
  const long long n4b = factorial(4) / (4 * 2) * ipow(c42 * 2 * c42, 2) * ipow(2, 4);
  const long long n4c = factorial(4) / (4 * 2) * ipow(c43 * factorial(3) * c43, 2) * 2;

  std::vector<DiagramSpec> out;
  out.push_back(make("2", 2, {{0, 1, 4}}, n2));
  out.push_back(make("3", 3, {{0, 1, 2}, {1, 2, 2}, {2, 0, 2}}, n3));
  out.push_back(make("4a", 4, {{0, 1, 2}, {1, 2, 2}, {2, 3, 2}, {3, 0, 2}}, n4a));

  // 4b as transcribed: G12^2 G34^2 G23 G24^2 G13 G14^2
  const std::vector<Edge> printed_4b{{0, 1, 2}, {2, 3, 2}, {1, 2, 1}, {1, 3, 2}, {0, 2, 1}, {0, 3, 2}};
  DiagramSpec as_printed{"4b", 4, printed_4b, n4b, -1, {}};
  std::vector<Edge> edges_4b = printed_4b;
  std::string note;
  try {
    validate(as_printed);
  } catch (const ValidationError& err) {
    edges_4b = repair_to_quartic(printed_4b, 4);
    note = std::string("transcribed powers rejected (") + err.what() + "); repaired " + describe(printed_4b) +
           " -> " + describe(edges_4b);
  }
  auto d4b = make("4b", 4, edges_4b, n4b);
  d4b.note = note;
  out.push_back(std::move(d4b));

  out.push_back(make("4c", 4, {{0, 1, 3}, {2, 3, 3}, {1, 2, 1}, {3, 0, 1}}, n4c));
  return out;
}

std::vector<DiagramSpec> diagrams_of_order(int order) {
  std::vector<DiagramSpec> out;
  for (auto& d : builtin_diagrams()) {
    if (d.order == order) out.push_back(std::move(d));
  }
  if (out.empty()) throw ValidationError("no builtin diagrams of order " + std::to_string(order));
  return out;
}

DiagramSpec relabel(const DiagramSpec& diagram, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != diagram.order) throw ValidationError("permutation size mismatch");
  std::vector<int> seen(perm.size(), 0);
  for (int v : perm) {
    if (v < 0 || v >= diagram.order || seen[v]++) throw ValidationError("not a permutation");
  }
  DiagramSpec out = diagram;
  for (auto& e : out.edges) {
    e.a = perm[e.a];
    e.b = perm[e.b];
  }
  return out;
}

}  // namespace anharm
