#pragma once

// Shared helpers for the test binaries: fixture loading, programmatic
// diagram construction, and labeled-tree enumeration via Pruefer sequences.

#include <string>
#include <vector>

#include "coxkit/diagram.hpp"
#include "coxkit/words.hpp"

namespace testsup {

inline std::string fixture(const std::string& name) {
  return std::string(COXKIT_FIXTURE_DIR) + "/" + name;
}

inline coxkit::CoxeterDiagram load(const std::string& name) {
  return coxkit::parse_diagram_file(fixture(name));
}

struct EdgeSpec {
  int u, v;
  int m = 3;  // 0 encodes infinity
};

// Vertices named "1".."n" so words print in the compact concatenated form.
inline coxkit::CoxeterDiagram make_diagram(int n, const std::vector<EdgeSpec>& edges) {
  coxkit::CoxeterDiagram d;
  for (int i = 1; i <= n; ++i) d.add_vertex(std::to_string(i));
  for (const auto& e : edges)
    d.add_edge(static_cast<coxkit::Gen>(e.u - 1), static_cast<coxkit::Gen>(e.v - 1),
               e.m == 0 ? coxkit::EdgeLabel::infinity() : coxkit::EdgeLabel::finite(e.m));
  return d;
}

// Edge list (0-based endpoints) of the labeled tree with this Pruefer
// sequence over vertices 0..n-1; the sequence has length n-2.
inline std::vector<std::pair<int, int>> pruefer_tree(int n,
                                                     const std::vector<int>& seq) {
  std::vector<int> degree(n, 1);
  for (int x : seq) ++degree[x];
  std::vector<std::pair<int, int>> edges;
  std::vector<char> used(n, 0);
  for (int x : seq) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1 && !used[leaf]) {
        edges.emplace_back(leaf, x);
        used[leaf] = 1;
        --degree[x];
        break;
      }
    }
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v)
    if (!used[v] && degree[v] == 1) (a < 0 ? a : b) = v;
  edges.emplace_back(a, b);
  return edges;
}

// Calls fn(edge list) for every labeled tree on n >= 2 vertices.
template <typename Fn>
void for_each_labeled_tree(int n, Fn&& fn) {
  if (n == 1) {
    fn(std::vector<std::pair<int, int>>{});
    return;
  }
  std::vector<int> seq(n - 2, 0);
  while (true) {
    fn(pruefer_tree(n, seq));
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
}

inline std::vector<std::string> word_strings(const coxkit::CoxeterDiagram& d,
                                             const std::vector<coxkit::RigidWord>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(coxkit::format_word(d, w.word));
  return out;
}

}  // namespace testsup
