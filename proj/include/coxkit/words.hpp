#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxkit/diagram.hpp"
#include "json.hpp"

namespace coxkit {

// A word over the generators, printed left to right; the empty word is the
// identity. Letters are declaration indices, so lexicographic comparison of
// words follows declaration order.
using Word = std::vector<Gen>;

// A word with a unique reduced expression, i.e. an element of the small
// cell. Producers in this module guarantee the rigidity invariants:
// consecutive letters span an edge, and no finite-labeled edge {a,b} with
// label m admits a contiguous alternating factor abab... of length m.
struct RigidWord {
  Word word;
  bool operator==(const RigidWord&) const = default;
};

bool shortlex_less(const Word& a, const Word& b);
bool shortlex_less(const RigidWord& a, const RigidWord& b);

struct RigidityCheck {
  bool rigid;
  std::size_t violation;  // first violating position; meaningful iff !rigid
};

RigidityCheck check_rigidity(const CoxeterDiagram& d, const Word& w);
bool is_rigid(const CoxeterDiagram& d, const Word& w);

struct SmallCell {
  std::vector<RigidWord> words;  // shortlex order
  bool truncated = false;        // true when cut off by max_len
};

// All rigid words, by breadth-first extension on the left. A max_len cap is
// required when the cell is infinite.
SmallCell enumerate_small_cell(const CoxeterDiagram& d,
                               std::optional<std::size_t> max_len = {});

struct LeftMultiplyResult {
  enum class Kind { Shorter, Longer, LeavesCell };
  Kind kind;
  Word word;  // Shorter: may be empty (= identity); LeavesCell: empty
};

// Effect of left multiplication by t on a rigid word: strips the leftmost
// letter when it equals t, prepends t when that stays rigid, and otherwise
// leaves the cell.
LeftMultiplyResult left_multiply(const CoxeterDiagram& d, Gen t,
                                 const RigidWord& w);

// Rows are right cells (index t = leftmost letter), columns are left cells
// (index s = rightmost letter); entries partition the small cell.
class CellTable {
 public:
  CellTable(std::size_t rank) : rank_(rank), cells_(rank * rank) {}

  std::size_t rank() const { return rank_; }
  const std::vector<RigidWord>& cell(Gen t, Gen s) const {
    return cells_[t * rank_ + s];
  }
  std::vector<RigidWord>& cell(Gen t, Gen s) { return cells_[t * rank_ + s]; }
  std::size_t total() const;

 private:
  std::size_t rank_;
  std::vector<std::vector<RigidWord>> cells_;
};

CellTable cell_table(const CoxeterDiagram& d);

// The entry of the table at left cell s and right cell t: rigid words with
// rightmost letter s and leftmost letter t, shortlex sorted.
std::vector<RigidWord> intersection(const CoxeterDiagram& d, Gen s, Gen t,
                                    std::optional<std::size_t> max_len = {});

inline constexpr std::size_t kDefaultOrbitCap = 10000;

// Closure of w under commutation moves and braid moves (replacing an
// alternating factor of length m(a,b) by the swapped one). Words in the
// orbit all have the length of w; output is sorted.
std::vector<Word> braid_orbit(const CoxeterDiagram& d, const Word& w,
                              std::size_t cap = kDefaultOrbitCap);

struct OracleReport {
  enum class Status { NotReduced, ReducedUnique, ReducedMultiple };
  Status status;
  std::size_t orbit_size;
};

// Word-problem oracle: NotReduced when some orbit word has equal adjacent
// letters, ReducedUnique when the orbit is a singleton without them, and
// ReducedMultiple otherwise. Independent of the rigidity pattern check.
OracleReport oracle_unique_reduced(const CoxeterDiagram& d, const Word& w,
                                   std::size_t cap = kDefaultOrbitCap);

std::string oracle_status_name(OracleReport::Status s);

// The bijection from L_{pi(p)} cap R_{pi(q)} onto L_p cap R_q for a tree
// with one finite labeled edge: junction-identified concatenation with the
// path words q -> pi(q) and pi(p) -> p; a single-letter source whose image
// would not be rigid collapses to the plain path word from q to p.
std::vector<std::pair<RigidWord, RigidWord>> induced_bijection(
    const CoxeterDiagram& d, Gen p, Gen q);

// Every intersection indexed by the labeled edge {s, t} agrees with the one
// computed in the two-generator subsystem on {s, t}.
bool parabolic_core_check(const CoxeterDiagram& d);

// Space-separated generator names; the compact concatenated form is used
// when every name is a single character.
Word parse_word(const CoxeterDiagram& d, std::string_view text);
std::string format_word(const CoxeterDiagram& d, const Word& w);

std::string cell_table_text(const CoxeterDiagram& d, const CellTable& table);
nlohmann::ordered_json cell_table_json(const CoxeterDiagram& d,
                                       const CellTable& table);

}  // namespace coxkit
