#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "coxkit/error.hpp"
#include "json.hpp"

namespace coxkit {

// A generator (vertex of the Coxeter-Dynkin diagram), identified by its
// declaration index. Declaration order is the canonical order everywhere.
using Gen = std::uint32_t;

// Bond label m(s,t) of an edge: a finite value >= 3, or infinity.
// m = 2 is encoded by the absence of an edge, m = 1 by equality.
struct EdgeLabel {
  int m = 3;  // 0 encodes infinity

  static EdgeLabel finite(int m) {
    if (m < 3) throw Error("edge label must be at least 3");
    return EdgeLabel{m};
  }
  static EdgeLabel infinity() { return EdgeLabel{0}; }

  bool infinite() const { return m == 0; }
  bool operator==(const EdgeLabel&) const = default;
};

struct DiagramEdge {
  Gen u = 0, v = 0;  // u < v in declaration order
  EdgeLabel label;

  // Labeled means m > 3 (an edge with m = 3 is unlabeled).
  bool labeled() const { return label.infinite() || label.m > 3; }
  bool operator==(const DiagramEdge&) const = default;
};

class CoxeterDiagram {
 public:
  Gen add_vertex(std::string name);
  void add_edge(Gen a, Gen b, EdgeLabel label = {});

  std::size_t rank() const { return names_.size(); }
  const std::string& name(Gen v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Gen> find(std::string_view name) const;
  Gen require(std::string_view name) const;
  void check_vertex(Gen v) const;

  bool adjacent(Gen a, Gen b) const { return edge_label(a, b).has_value(); }
  std::optional<EdgeLabel> edge_label(Gen a, Gen b) const;
  // Unchecked bond lookup for validated vertices: -1 when not adjacent
  // (or a == b), 0 for an infinite label, else the label m.
  int bond_raw(Gen a, Gen b) const { return bond_[a * stride_ + b]; }
  // Neighbors of v with bond labels, ascending by declaration index.
  std::span<const std::pair<Gen, EdgeLabel>> neighbors(Gen v) const;
  // All edges, sorted by (u, v).
  const std::vector<DiagramEdge>& edges() const { return edges_; }
  std::vector<DiagramEdge> labeled_edges() const;

  bool connected() const;
  void require_connected() const;
  bool is_tree() const;

  // True when every vertex name is a single character; words then print in
  // the compact concatenated form.
  bool compact_names() const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, Gen, std::less<>> index_;
  std::vector<DiagramEdge> edges_;
  std::vector<std::vector<std::pair<Gen, EdgeLabel>>> adj_;
  std::vector<int> bond_;  // stride x stride; -1 absent, 0 infinity, else m
  std::size_t stride_ = 0;
};

// Reads the line-based .cox format:
//   vertex <name>
//   edge <name> <name> [<m>]     # m: integer >= 3 or "inf"; omitted means 3
// '#' starts a comment; vertices may be declared implicitly by an edge line.
CoxeterDiagram parse_diagram(std::string_view text);
CoxeterDiagram parse_diagram_file(const std::string& path);

nlohmann::ordered_json diagram_json(const CoxeterDiagram& d);

// Witnesses for an infinite small cell; each is independently checkable.
struct CycleWitness {
  std::vector<Gen> cycle;  // distinct vertices, consecutive (and wrap) adjacent
};
struct InfiniteLabelWitness {
  DiagramEdge edge;
};
struct TwoLabeledEdgesWitness {
  DiagramEdge first, second;
};

struct FinitenessVerdict {
  std::variant<std::monostate, CycleWitness, InfiniteLabelWitness,
               TwoLabeledEdgesWitness>
      reason;

  bool finite() const {
    return std::holds_alternative<std::monostate>(reason);
  }
};

// The small cell is finite iff the diagram is a tree with at most one
// labeled edge and no infinite label. Requires a connected diagram.
FinitenessVerdict finiteness_check(const CoxeterDiagram& d);

nlohmann::ordered_json verdict_json(const CoxeterDiagram& d,
                                    const FinitenessVerdict& v);
std::string verdict_text(const CoxeterDiagram& d, const FinitenessVerdict& v);

// The two sides of the unique labeled edge {s, t}: gamma_s is the component
// of s after deleting t, gamma_t the component of t after deleting s, and
// pi maps every vertex to the side it lies on.
struct SplitData {
  Gen s = 0, t = 0;
  EdgeLabel label;
  CoxeterDiagram gamma_s, gamma_t;
  std::vector<Gen> pi;  // indexed by Gen of the ambient diagram; value s or t
};

SplitData split_at_labeled_edge(const CoxeterDiagram& d);

// Vertex sequence of the unique simple path from a to b, inclusive.
std::vector<Gen> tree_path(const CoxeterDiagram& d, Gen a, Gen b);

}  // namespace coxkit
