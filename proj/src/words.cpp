#include "coxkit/words.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

namespace coxkit {

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool shortlex_less(const RigidWord& a, const RigidWord& b) {
  return shortlex_less(a.word, b.word);
}

/* --- rigidity ----------------------------------------------------------- */

RigidityCheck check_rigidity(const CoxeterDiagram& d, const Word& w) {
  for (Gen g : w) d.check_vertex(g);
  if (w.empty()) return {false, 0};  // the identity is not in the cell
  std::size_t run = 1;  // length of the alternating suffix ending here
  for (std::size_t i = 1; i < w.size(); ++i) {
    int m = d.bond_raw(w[i - 1], w[i]);
    if (m < 0) return {false, i};  // equal or commuting neighbors
    run = (i >= 2 && w[i] == w[i - 2]) ? run + 1 : 2;
    if (m != 0 && run >= static_cast<std::size_t>(m)) return {false, i};
  }
  return {true, 0};
}

bool is_rigid(const CoxeterDiagram& d, const Word& w) {
  return check_rigidity(d, w).rigid;
}

namespace {

// Whether t can be prepended to the rigid word w and stay rigid. Only the
// left end matters: the new pair {t, w[0]} and the alternating prefix of
// t.w over that pair.
bool extendable_left(const CoxeterDiagram& d, Gen t, const Word& w) {
  int m = d.bond_raw(t, w.front());
  if (m < 0) return false;
  if (m == 0) return true;
  std::size_t k = 0;
  while (k < w.size() && w[k] == (k % 2 == 0 ? w.front() : t)) ++k;
  return 1 + k < static_cast<std::size_t>(m);
}

Word prepended(Gen t, const Word& w) {
  Word out;
  out.reserve(w.size() + 1);
  out.push_back(t);
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

}  // namespace

/* --- enumeration -------------------------------------------------------- */

SmallCell enumerate_small_cell(const CoxeterDiagram& d,
                               std::optional<std::size_t> max_len) {
  d.require_connected();
  const bool capped = max_len.has_value();
  const std::size_t cap = max_len.value_or(0);
  if (!finiteness_check(d).finite() && !capped)
    throw Error("small cell is infinite; a max_len cap is required");
  SmallCell out;
  if (capped && cap == 0) {
    out.truncated = true;
    return out;
  }
  std::vector<Word> frontier;
  for (Gen g = 0; g < d.rank(); ++g) frontier.push_back({g});
  std::size_t len = 1;
  while (!frontier.empty()) {
    for (const Word& w : frontier) out.words.push_back({w});
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (const auto& [t, label] : d.neighbors(w.front()))
        if (extendable_left(d, t, w)) next.push_back(prepended(t, w));
    std::sort(next.begin(), next.end());
    if (capped && len == cap) {
      out.truncated = !next.empty();
      break;
    }
    frontier = std::move(next);
    ++len;
  }
  return out;
}

LeftMultiplyResult left_multiply(const CoxeterDiagram& d, Gen t,
                                 const RigidWord& w) {
  d.check_vertex(t);
  if (!check_rigidity(d, w.word).rigid) throw Error("word is not rigid");
  if (t == w.word.front())
    return {LeftMultiplyResult::Kind::Shorter,
            Word(w.word.begin() + 1, w.word.end())};
  if (extendable_left(d, t, w.word))
    return {LeftMultiplyResult::Kind::Longer, prepended(t, w.word)};
  return {LeftMultiplyResult::Kind::LeavesCell, {}};
}

std::size_t CellTable::total() const {
  std::size_t n = 0;
  for (const auto& c : cells_) n += c.size();
  return n;
}

CellTable cell_table(const CoxeterDiagram& d) {
  if (!finiteness_check(d).finite())
    throw Error("small cell is infinite; no complete table exists");
  auto cell = enumerate_small_cell(d);
  CellTable table(d.rank());
  for (auto& w : cell.words) {
    Gen t = w.word.front(), s = w.word.back();
    table.cell(t, s).push_back(std::move(w));
  }
  return table;  // enumeration is shortlex, so each entry already is
}

std::vector<RigidWord> intersection(const CoxeterDiagram& d, Gen s, Gen t,
                                    std::optional<std::size_t> max_len) {
  d.check_vertex(s);
  d.check_vertex(t);
  d.require_connected();
  const bool capped = max_len.has_value();
  const std::size_t cap = max_len.value_or(0);
  if (!finiteness_check(d).finite() && !capped)
    throw Error("small cell is infinite; a max_len cap is required");
  // Walk the left cell of s only: breadth-first left extension from the
  // single-letter word.
  std::vector<RigidWord> out;
  std::vector<Word> frontier{{s}};
  std::size_t len = 1;
  while (!frontier.empty() && !(capped && len > cap)) {
    for (const Word& w : frontier)
      if (w.front() == t) out.push_back({w});
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (const auto& [g, label] : d.neighbors(w.front()))
        if (extendable_left(d, g, w)) next.push_back(prepended(g, w));
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
    ++len;
  }
  return out;
}

/* --- the word-problem oracle -------------------------------------------- */

std::vector<Word> braid_orbit(const CoxeterDiagram& d, const Word& w,
                              std::size_t cap) {
  for (Gen g : w) d.check_vertex(g);
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word u = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
      Gen a = u[i], b = u[i + 1];
      if (a == b) continue;
      int bond = d.bond_raw(a, b);
      if (bond == 0) continue;  // no move across an infinite label
      std::size_t m = bond < 0 ? 2 : static_cast<std::size_t>(bond);
      if (i + m > u.size()) continue;
      bool alternating = true;
      for (std::size_t k = 0; k < m; ++k)
        if (u[i + k] != (k % 2 == 0 ? a : b)) {
          alternating = false;
          break;
        }
      if (!alternating) continue;
      Word v = u;
      for (std::size_t k = 0; k < m; ++k) v[i + k] = k % 2 == 0 ? b : a;
      if (seen.insert(v).second) {
        if (seen.size() > cap) throw Error("braid orbit cap exceeded");
        queue.push_back(std::move(v));
      }
    }
  }
  return std::vector<Word>(seen.begin(), seen.end());
}

namespace {

bool has_equal_adjacent(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1]) return true;
  return false;
}

}  // namespace

OracleReport oracle_unique_reduced(const CoxeterDiagram& d, const Word& w,
                                   std::size_t cap) {
  auto orbit = braid_orbit(d, w, cap);
  bool not_reduced = false;
  for (const Word& u : orbit)
    if (has_equal_adjacent(u)) {
      not_reduced = true;
      break;
    }
  OracleReport::Status status;
  if (not_reduced)
    status = OracleReport::Status::NotReduced;
  else if (orbit.size() == 1)
    status = OracleReport::Status::ReducedUnique;
  else
    status = OracleReport::Status::ReducedMultiple;
  return {status, orbit.size()};
}

std::string oracle_status_name(OracleReport::Status s) {
  switch (s) {
    case OracleReport::Status::NotReduced:
      return "NotReduced";
    case OracleReport::Status::ReducedUnique:
      return "ReducedUnique";
    default:
      return "ReducedMultiple";
  }
}

/* --- the junction bijection and the parabolic core ----------------------- */

std::vector<std::pair<RigidWord, RigidWord>> induced_bijection(
    const CoxeterDiagram& d, Gen p, Gen q) {
  d.check_vertex(p);
  d.check_vertex(q);
  auto split = split_at_labeled_edge(d);
  Gen pi_p = split.pi[p], pi_q = split.pi[q];
  auto domain = intersection(d, pi_p, pi_q);
  auto u1 = tree_path(d, q, pi_q);   // letters from q towards pi(q)
  auto u2 = tree_path(d, pi_p, p);   // letters from pi(p) towards p
  std::vector<std::pair<RigidWord, RigidWord>> out;
  for (auto& w : domain) {
    Word image(u1.begin(), u1.end() - 1);
    image.insert(image.end(), w.word.begin(), w.word.end());
    image.insert(image.end(), u2.begin() + 1, u2.end());
    if (w.word.size() == 1 && !is_rigid(d, image)) {
      // Both junctions consumed the single letter; fall back to the plain
      // path word, which is the minimal element of the target.
      image = tree_path(d, q, p);
    }
    out.emplace_back(std::move(w), RigidWord{std::move(image)});
  }
  return out;
}

bool parabolic_core_check(const CoxeterDiagram& d) {
  auto split = split_at_labeled_edge(d);
  CoxeterDiagram dihedral;
  Gen first = std::min(split.s, split.t), second = std::max(split.s, split.t);
  dihedral.add_vertex(d.name(first));
  dihedral.add_vertex(d.name(second));
  dihedral.add_edge(0, 1, split.label);
  auto names_of = [](const CoxeterDiagram& dg, const std::vector<RigidWord>& ws) {
    std::vector<std::vector<std::string>> out;
    for (const auto& w : ws) {
      std::vector<std::string> letters;
      for (Gen g : w.word) letters.push_back(dg.name(g));
      out.push_back(std::move(letters));
    }
    return out;
  };
  for (Gen p : {split.s, split.t})
    for (Gen q : {split.s, split.t}) {
      auto full = intersection(d, p, q);
      auto core = intersection(dihedral, dihedral.require(d.name(p)),
                               dihedral.require(d.name(q)));
      if (names_of(d, full) != names_of(dihedral, core)) return false;
    }
  return true;
}

/* --- word and table rendering ------------------------------------------- */

Word parse_word(const CoxeterDiagram& d, std::string_view text) {
  // Trim outer whitespace first.
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw Error("empty word");
  if (text.find(' ') != std::string_view::npos ||
      text.find('\t') != std::string_view::npos) {
    Word out;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) out.push_back(d.require(token));
    return out;
  }
  if (auto g = d.find(text)) return {*g};  // a single full vertex name
  if (!d.compact_names())
    throw Error("unknown generator '" + std::string(text) + "'");
  Word out;
  for (char c : text) out.push_back(d.require(std::string_view(&c, 1)));
  return out;
}

std::string format_word(const CoxeterDiagram& d, const Word& w) {
  std::string out;
  bool compact = d.compact_names();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && !compact) out += ' ';
    out += d.name(w[i]);
  }
  return out;
}

std::string cell_table_text(const CoxeterDiagram& d, const CellTable& table) {
  std::size_t n = table.rank();
  std::vector<std::vector<std::string>> grid(n + 1,
                                             std::vector<std::string>(n + 1));
  for (Gen s = 0; s < n; ++s) grid[0][s + 1] = d.name(s);
  for (Gen t = 0; t < n; ++t) {
    grid[t + 1][0] = d.name(t);
    for (Gen s = 0; s < n; ++s) {
      std::string entry;
      for (const auto& w : table.cell(t, s)) {
        if (!entry.empty()) entry += ',';
        entry += format_word(d, w.word);
      }
      grid[t + 1][s + 1] = std::move(entry);
    }
  }
  std::vector<std::size_t> width(n + 1, 0);
  for (const auto& row : grid)
    for (std::size_t j = 0; j <= n; ++j)
      width[j] = std::max(width[j], row[j].size());
  std::string out;
  for (std::size_t i = 0; i <= n; ++i) {
    std::string line;
    for (std::size_t j = 0; j <= n; ++j) {
      std::string cell = grid[i][j];
      cell.resize(width[j], ' ');
      line += cell;
      if (j == 0 || j < n) line += j == 0 ? " | " : "  ";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
    if (i == 0) {
      std::string rule(width[0], '-');
      rule += "-+-";
      std::size_t rest = 0;
      for (std::size_t j = 1; j <= n; ++j) rest += width[j] + (j < n ? 2 : 0);
      rule += std::string(rest, '-');
      out += rule;
      out += '\n';
    }
  }
  return out;
}

nlohmann::ordered_json cell_table_json(const CoxeterDiagram& d,
                                       const CellTable& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (Gen t = 0; t < table.rank(); ++t) {
    nlohmann::ordered_json row;
    row["t"] = d.name(t);
    auto cells = nlohmann::ordered_json::array();
    for (Gen s = 0; s < table.rank(); ++s) {
      auto entry = nlohmann::ordered_json::array();
      for (const auto& w : table.cell(t, s)) entry.push_back(format_word(d, w.word));
      cells.push_back(std::move(entry));
    }
    row["cells"] = std::move(cells);
    rows.push_back(std::move(row));
  }
  return nlohmann::ordered_json{{"rows", std::move(rows)}};
}

}  // namespace coxkit
