#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <vector>

#include "anharm/diagrams.hpp"
#include "anharm/errors.hpp"
#include "doctest.h"

using namespace anharm;

namespace {

using Multiplicity = std::array<std::array<int, 4>, 4>;

long long canonical_key(const Multiplicity& mult, int n) {
  std::array<int, 4> perm{0, 1, 2, 3};
  long long best = -1;
  do {
    long long key = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) key = key * 5 + mult[perm[i]][perm[j]];
    }
    if (best < 0 || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
  return best;
}

bool connected(const Multiplicity& mult, int n) {
  std::vector<int> seen{0};
  std::vector<bool> in(n, false);
  in[0] = true;
  for (std::size_t k = 0; k < seen.size(); ++k) {
    for (int j = 0; j < n; ++j) {
      if (!in[j] && mult[seen[k]][j] > 0) {
        in[j] = true;
        seen.push_back(j);
      }
    }
  }
  return static_cast<int>(seen.size()) == n;
}

// All pairings of the 4n legs (leg l sits on vertex l / 4) without
// self-contractions, tallied by isomorphism class of the connected multigraph.
std::map<long long, long long> wick_census(int n) {
  const int legs = 4 * n;
  std::vector<int> partner(legs, -1);
  Multiplicity mult{};
  std::map<long long, long long> census;
  auto recurse = [&](auto&& self) -> void {
    const auto first = std::find(partner.begin(), partner.end(), -1);
    if (first == partner.end()) {
      if (connected(mult, n)) ++census[canonical_key(mult, n)];
      return;
    }
    const int a = static_cast<int>(first - partner.begin());
    for (int b = a + 1; b < legs; ++b) {
      if (partner[b] != -1 || b / 4 == a / 4) continue;
      partner[a] = b;
      partner[b] = a;
      ++mult[a / 4][b / 4];
      ++mult[b / 4][a / 4];
      self(self);
      --mult[a / 4][b / 4];
      --mult[b / 4][a / 4];
      partner[a] = partner[b] = -1;
    }
  };
  recurse(recurse);
  return census;
}

long long diagram_key(const DiagramSpec& d) {
  Multiplicity mult{};
  for (const auto& e : d.edges) {
    mult[e.a][e.b] += e.power;
    mult[e.b][e.a] += e.power;
  }
  return canonical_key(mult, d.order);
}

}  // namespace

TEST_CASE("builtin diagrams") {
  const auto all = builtin_diagrams();
  REQUIRE(all.size() == 5);
  const char* names[] = {"2", "3", "4a", "4b", "4c"};
  const long long factors[] = {24, 1728, 62208, 248832, 55296};
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].name == names[i]);
    CHECK(all[i].symmetry_factor == factors[i]);
    CHECK(all[i].sign == (all[i].order % 2 == 1 ? 1 : -1));
    CHECK_NOTHROW(validate(all[i]));
    for (int deg : vertex_degrees(all[i])) CHECK(deg == 4);
  }
  CHECK(all[3].note.find("repaired") != std::string::npos);
  CHECK(all[4].note.empty());
  CHECK(diagrams_of_order(4).size() == 3);
  CHECK_THROWS_AS(diagrams_of_order(5), ValidationError);
}

TEST_CASE("symmetry factors match a Wick-contraction census") {
  for (int n = 2; n <= 4; ++n) {
    const auto census = wick_census(n);
    const auto diagrams = diagrams_of_order(n);
    CHECK(census.size() == diagrams.size());
    for (const auto& d : diagrams) {
      const auto it = census.find(diagram_key(d));
      REQUIRE(it != census.end());
      CHECK(it->second == d.symmetry_factor);
    }
  }
}

TEST_CASE("repair of the transcribed double-edged diagram") {
  const std::vector<Edge> printed{{0, 1, 2}, {2, 3, 2}, {1, 2, 1}, {1, 3, 2}, {0, 2, 1}, {0, 3, 2}};
  const DiagramSpec raw{"raw", 4, printed, 1, -1, {}};
  CHECK_THROWS_AS(validate(raw), ValidationError);
  const auto degrees = vertex_degrees(raw);
  CHECK(degrees == std::vector<int>{5, 5, 4, 6});
  const auto fixed = repair_to_quartic(printed, 4);
  const std::vector<Edge> expected{{0, 1, 2}, {2, 3, 2}, {1, 2, 1}, {1, 3, 1}, {0, 2, 1}, {0, 3, 1}};
  CHECK(fixed == expected);
  CHECK(builtin_diagrams()[3].edges == expected);

  const std::vector<Edge> ambiguous{{0, 1, 3}, {1, 2, 3}, {2, 3, 3}, {3, 0, 3}};
  CHECK_THROWS_AS(repair_to_quartic(ambiguous, 4), ValidationError);
  const std::vector<Edge> short_of_degree{{0, 1, 3}};
  CHECK_THROWS_AS(repair_to_quartic(short_of_degree, 2), ValidationError);
}

TEST_CASE("validation rejects malformed diagrams") {
  CHECK_THROWS_AS(validate({"loop", 2, {{0, 0, 2}, {0, 1, 2}, {1, 1, 1}}, 1, -1, {}}), ValidationError);
  CHECK_THROWS_AS(validate({"degree", 2, {{0, 1, 3}}, 1, -1, {}}), ValidationError);
  CHECK_THROWS_AS(validate({"split", 4, {{0, 1, 4}, {2, 3, 4}}, 1, -1, {}}), ValidationError);
  CHECK_THROWS_AS(validate({"range", 2, {{0, 2, 4}}, 1, -1, {}}), ValidationError);
  CHECK_THROWS_AS(validate({"zero", 2, {{0, 1, 4}, {0, 1, 0}}, 1, -1, {}}), ValidationError);
  CHECK_THROWS_AS(validate({"factor", 2, {{0, 1, 4}}, 0, -1, {}}), ValidationError);
}

TEST_CASE("relabeling preserves structure") {
  const auto d = builtin_diagrams()[3];
  std::vector<int> perm{2, 0, 3, 1};
  const auto r = relabel(d, perm);
  CHECK_NOTHROW(validate(r));
  CHECK(diagram_key(r) == diagram_key(d));
  const std::vector<int> bad{0, 0, 1, 2};
  CHECK_THROWS_AS(relabel(d, bad), ValidationError);
  const std::vector<int> short_perm{0, 1};
  CHECK_THROWS_AS(relabel(d, short_perm), ValidationError);
}

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(4, 3) == 4);
  CHECK(binomial(4, 5) == 0);
}
