#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "coxkit/error.hpp"
#include "coxkit/matrix.hpp"
#include "json.hpp"

namespace coxkit {

// Loop-free multigraph: ordered vertices, edges as an indexed multiset of
// unordered pairs. Parallel edges are distinct edges.
class MultiGraph {
 public:
  using V = std::uint32_t;

  V add_vertex(std::string name);
  std::size_t add_edge(V a, V b);  // returns the edge index

  std::size_t n_vertices() const { return names_.size(); }
  std::size_t n_edges() const { return edges_.size(); }
  const std::string& name(V v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<V> find(std::string_view name) const;
  V require(std::string_view name) const;
  void check_vertex(V v) const;

  // Edge endpoints with the smaller index first.
  std::pair<V, V> edge(std::size_t index) const { return edges_[index]; }
  const std::vector<std::pair<V, V>>& edges() const { return edges_; }

  std::size_t degree(V v) const;       // with multiplicity
  bool incident(V v) const { return degree(v) > 0; }
  std::size_t multiplicity(V a, V b) const;
  std::vector<V> neighbors(V v) const;  // distinct, ascending
  bool connected() const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, V, std::less<>> index_;
  std::vector<std::pair<V, V>> edges_;
  std::vector<std::size_t> degree_;
};

// Same line format as .cox but without labels; repeated edge lines create
// parallel edges.
MultiGraph parse_multigraph(std::string_view text);
MultiGraph parse_multigraph_file(const std::string& path);

nlohmann::ordered_json multigraph_json(const MultiGraph& g);
std::string multigraph_dot(const MultiGraph& g);          // undirected
std::string doubled_quiver_dot(const MultiGraph& g);      // each edge doubled

// Basis of the zig-zag category: idempotents in degree 0, one arrow per
// edge and direction in degree 1, and one loop in degree 2 at every vertex
// incident to an edge.
struct Idempotent {
  MultiGraph::V v;
  bool operator==(const Idempotent&) const = default;
};
struct Arrow {
  std::size_t edge;
  bool forward;  // true: from edge.first to edge.second
  bool operator==(const Arrow&) const = default;
};
struct LoopElem {
  MultiGraph::V v;
  bool operator==(const LoopElem&) const = default;
};
using ZigzagBasisElement = std::variant<Idempotent, Arrow, LoopElem>;

class ZigzagPresentation {
 public:
  static constexpr std::int32_t kZero = -1;

  explicit ZigzagPresentation(MultiGraph g);

  const MultiGraph& graph() const { return graph_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<ZigzagBasisElement>& basis() const { return basis_; }
  MultiGraph::V source(std::size_t i) const { return src_[i]; }
  MultiGraph::V target(std::size_t i) const { return tgt_[i]; }
  int degree(std::size_t i) const;
  std::size_t index_of(const ZigzagBasisElement& e) const;

  // x after y; kZero when the composite vanishes. Throws when the source of
  // x differs from the target of y.
  std::int32_t compose(std::size_t x, std::size_t y) const;

  std::string element_name(std::size_t i) const;

 private:
  MultiGraph graph_;
  std::vector<ZigzagBasisElement> basis_;
  std::vector<MultiGraph::V> src_, tgt_;
  std::vector<std::int32_t> loop_at_;  // -1 when the vertex has no loop
  std::vector<std::int32_t> table_;    // dimension^2, kZero or an index
  std::vector<std::int32_t> idem_at_;
};

ZigzagPresentation build_zigzag(const MultiGraph& g);

// Element-level composition: nullopt encodes the zero composite.
std::optional<ZigzagBasisElement> compose(const ZigzagPresentation& p,
                                          const ZigzagBasisElement& x,
                                          const ZigzagBasisElement& y);

// C(v, v) = 2 when v is incident to an edge, else 1; C(u, v) counts edges.
IntMatrix cartan_matrix(const MultiGraph& g);

// Diagonal 1 + v^2 on incident vertices (1 on isolated ones), v times the
// multiplicity off the diagonal; evaluates at v = 1 to the Cartan matrix.
LaurentMatrix graded_cartan_matrix(const MultiGraph& g);

nlohmann::ordered_json zigzag_json(const ZigzagPresentation& p);
nlohmann::ordered_json int_matrix_json(const IntMatrix& m);
nlohmann::ordered_json laurent_json(const Laurent& p);
nlohmann::ordered_json laurent_matrix_json(const LaurentMatrix& m);
std::string int_matrix_text(const std::vector<std::string>& labels,
                            const IntMatrix& m);
std::string laurent_matrix_text(const std::vector<std::string>& labels,
                                const LaurentMatrix& m);

}  // namespace coxkit
