#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coxkit/cellrep.hpp"
#include "coxkit/diagram.hpp"
#include "coxkit/zigzag.hpp"

namespace coxkit {

struct RootedGraph {
  MultiGraph graph;
  MultiGraph::V root = 0;
};

// Disjoint union with the two roots identified; name clashes on the second
// factor are resolved by appending primes. The identified vertex becomes
// the root.
RootedGraph one_point_union(const RootedGraph& x, const RootedGraph& y);

struct AdeShape {
  char family = 'A';  // 'A', 'D' or 'E'
  int rank = 0;

  std::string name() const { return family + std::to_string(rank); }
  int coxeter_number() const;
};

// Recognizes simply laced Dynkin shapes (A_k, D_k for k >= 4, E6, E7, E8).
std::optional<AdeShape> recognize_ade(const MultiGraph& g);

// A simply laced Dynkin diagram with its two-coloring; every edge joins the
// two classes.
struct BipartiteADE {
  AdeShape shape;
  MultiGraph diagram;
  std::vector<bool> in_class_s;  // per vertex

  std::vector<std::string> class_names(bool class_s) const;
};

BipartiteADE make_bipartite_ade(const MultiGraph& g,
                                std::span<const std::string> class_s_names);

// All bipartite ADE diagrams whose Coxeter number equals n, each bipartition
// class assignment emitted once up to diagram automorphism. A_{n-1} always;
// D_{(n+2)/2} for even n >= 6; E6, E7, E8 for n = 12, 18, 30.
std::vector<BipartiteADE> ade_catalog(int n);

// Order of the product of the simple reflections in the integral reflection
// representation of the simply laced diagram; nullopt when no power up to
// max_order is the identity (or entries blow up, which settles it).
std::optional<int> coxeter_number(const MultiGraph& g, int max_order = 512);

// Canonical string form of a (multi)tree with vertex colors; equal strings
// characterize color-preserving isomorphism.
std::string canonical_tree_string(const MultiGraph& g, std::span<const int> colors);
std::string canonical_rooted_tree_string(const MultiGraph& g, MultiGraph::V root,
                                         std::span<const int> colors);

enum class ThetaOrigin { Omega, LambdaS, LambdaT };

// The glued graph: omega with a copy of the cell tree of s attached at every
// class_s vertex and a copy of the cell tree of t at every class_t vertex.
// Glued vertices are named "<word>@<omega vertex>".
struct ThetaGraph {
  MultiGraph graph;
  std::vector<ThetaOrigin> vertex_origin;
  std::vector<ThetaOrigin> edge_origin;
};

ThetaGraph build_theta(const CoxeterDiagram& d, const BipartiteADE& omega);

// The zig-zag presentation of the glued graph.
ZigzagPresentation two_rep_category(const CoxeterDiagram& d,
                                    const BipartiteADE& omega);

std::string theta_dot(const ThetaGraph& theta);
nlohmann::ordered_json theta_json(const ThetaGraph& theta);
nlohmann::ordered_json catalog_json(const std::vector<BipartiteADE>& entries,
                                    int n);
std::string catalog_text(const std::vector<BipartiteADE>& entries);

}  // namespace coxkit
