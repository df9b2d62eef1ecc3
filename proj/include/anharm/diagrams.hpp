#pragma once

// Connected vacuum diagrams of the quartic vertex without self-contractions.

#include <span>
#include <string>
#include <vector>

namespace anharm {

/// `power` propagators joining vertices a and b.
struct Edge {
  int a = 0;
  int b = 0;
  int power = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct DiagramSpec {
  std::string name;
  int order = 0;  // number of vertices
  std::vector<Edge> edges;
  long long symmetry_factor = 0;
  /// (-1)^(n+1): the vertex factors (-lambda)^n times the overall -1/(beta n!).
  int sign = 0;
  /// Non-empty when the topology had to be repaired at construction.
  std::string note;
};

/// Throws ValidationError unless every vertex has degree 4, no edge is a
/// self-loop, powers are positive and the graph is connected.
void validate(const DiagramSpec& diagram);

/// Degree of each vertex (sum of incident edge powers).
std::vector<int> vertex_degrees(const DiagramSpec& diagram);

/// The five diagrams through fourth order: "2", "3", "4a", "4b", "4c".
std::vector<DiagramSpec> builtin_diagrams();

/// The builtin diagrams with `order` vertices.
std::vector<DiagramSpec> diagrams_of_order(int order);

/// Renames vertex v to perm[v].
DiagramSpec relabel(const DiagramSpec& diagram, std::span<const int> perm);

/// Lowers edge powers (keeping every edge) until all vertex degrees are 4.
/// Returns the repaired edges, or throws ValidationError unless the
/// repair is unique.
std::vector<Edge> repair_to_quartic(std::span<const Edge> edges, int order);

long long binomial(int n, int k);

}  // namespace anharm
