#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxkit/diagram.hpp"
#include "coxkit/matrix.hpp"
#include "coxkit/words.hpp"
#include "coxkit/zigzag.hpp"

namespace coxkit {

// The tree on the left cell of s: vertices are rigid words with rightmost
// letter s, edges join u = t.v to v and are labeled by that t. Each vertex
// carries its descent, the leftmost letter.
struct LambdaGraph {
  Gen cell = 0;

  struct Edge {
    std::size_t upper = 0, lower = 0;  // upper = t.lower, one letter longer
    Gen t = 0;
  };

  std::vector<RigidWord> vertices;  // shortlex order
  std::vector<Edge> edges;          // ascending by upper
  std::vector<Gen> descent;         // per vertex: its leftmost letter
  bool truncated = false;

  std::size_t vertex_index(const RigidWord& w) const;
};

// max_len is required when the left cell is infinite.
LambdaGraph lambda_graph(const CoxeterDiagram& d, Gen s,
                         std::optional<std::size_t> max_len = {});

// The underlying unlabeled tree, with word strings as vertex names.
MultiGraph lambda_multigraph(const CoxeterDiagram& d, const LambdaGraph& lg);

struct ShiftedProjective {
  std::size_t vertex;
  int shift;
};

// Action of the generator t on the simple at x: the projective at x with
// shift +1 when t is the descent of x, zero otherwise.
std::optional<ShiftedProjective> simple_action(const LambdaGraph& lg, Gen t,
                                               const RigidWord& x);

// Multiplicity matrix of the generator action on projectives: the rows with
// descent t of the Cartan matrix of the zig-zag category of the cell tree.
IntMatrix action_matrix(const CoxeterDiagram& d, const LambdaGraph& lg, Gen t);
IntMatrix action_matrix(const CoxeterDiagram& d, Gen s, Gen t);

// Graded refinement, normalized so that a fixed column shows v + v^-1 on the
// diagonal and shiftless 1 entries at the neighbors.
LaurentMatrix graded_action_matrix(const CoxeterDiagram& d,
                                   const LambdaGraph& lg, Gen t);
LaurentMatrix graded_action_matrix(const CoxeterDiagram& d, Gen s, Gen t);

struct CellActionReport {
  bool truncated = false;  // when true, checks were skipped
  bool cartan_consistent = false;
  bool hecke = false;
  bool graded_hecke = false;
  bool adjunction = false;
  bool entry_bounds = false;
  bool graded_matches_ungraded = false;

  bool all_passed() const {
    return !truncated && cartan_consistent && hecke && graded_hecke &&
           adjunction && entry_bounds && graded_matches_ungraded;
  }
  std::string summary() const;
};

// Runs the decategorified identity checks for every generator on the cell
// tree of s: Cartan reconstruction, the quadratic relation, adjunction
// symmetry, and the entry bounds.
CellActionReport verify_cell_action(const CoxeterDiagram& d, Gen s,
                                    std::optional<std::size_t> max_len = {});

std::string lambda_dot(const CoxeterDiagram& d, const LambdaGraph& lg);
nlohmann::ordered_json lambda_json(const CoxeterDiagram& d,
                                   const LambdaGraph& lg);

}  // namespace coxkit
