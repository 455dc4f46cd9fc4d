#pragma once

// Weighted dual graph of the exceptional configuration.  Vertices are the
// exceptional curves E_1..E_n with weights w_i = -E_i·E_i; vertex i < n is
// adjacent exactly to i + w_i - 1.

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "jumpnum/point_basis.hpp"

namespace jumpnum {

struct DualGraph {
  int n = 0;
  std::vector<int> weight;                 // w_1..w_n
  std::vector<std::pair<int, int>> edges;  // {i,j}, i < j, sorted
  IntVec multiplicity;                     // a_1..a_n, for labels
};

inline DualGraph build_dual_graph(const ProximityMatrix& P) {
  DualGraph g;
  g.n = P.n;
  g.multiplicity = P.row(P.n);
  for (int i = 1; i <= P.n; ++i) g.weight.push_back(P.weight(i));
  for (int i = 1; i < P.n; ++i) g.edges.emplace_back(i, i + g.weight[i - 1] - 1);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

// stars: degree >= 3; ends: degree <= 1
inline std::pair<std::vector<int>, std::vector<int>> stars_and_ends(const DualGraph& g) {
  std::vector<int> deg(g.n, 0);
  for (auto [i, j] : g.edges) {
    ++deg[i - 1];
    ++deg[j - 1];
  }
  std::vector<int> stars, ends;
  for (int i = 1; i <= g.n; ++i) {
    if (deg[i - 1] >= 3) stars.push_back(i);
    if (deg[i - 1] <= 1) ends.push_back(i);
  }
  return {stars, ends};
}

inline std::string to_dot(const DualGraph& g) {
  std::ostringstream os;
  os << "graph dual_graph {\n";
  os << "  node [shape=circle fontsize=10];\n";
  for (int i = 1; i <= g.n; ++i)
    os << "  e" << i << " [label=\"e" << i << " (w=" << g.weight[i - 1]
       << ", a=" << g.multiplicity[i - 1].str() << ")\"];\n";
  for (auto [i, j] : g.edges) os << "  e" << i << " -- e" << j << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string to_ascii(const DualGraph& g) {
  auto [stars, ends] = stars_and_ends(g);
  std::ostringstream os;
  os << "vertex weight mult adjacent\n";
  for (int i = 1; i <= g.n; ++i) {
    os << "e" << i << " w=" << g.weight[i - 1] << " a=" << g.multiplicity[i - 1].str() << " --";
    for (auto [u, v] : g.edges) {
      if (u == i) os << " e" << v;
      if (v == i) os << " e" << u;
    }
    os << "\n";
  }
  os << "stars:";
  for (int s : stars) os << " e" << s;
  os << "\nends:";
  for (int e : ends) os << " e" << e;
  os << "\n";
  return os.str();
}

}  // namespace jumpnum
