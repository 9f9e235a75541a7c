#include "coxkit/cellrep.hpp"

#include <algorithm>

namespace coxkit {

std::size_t LambdaGraph::vertex_index(const RigidWord& w) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), w,
                             [](const RigidWord& a, const RigidWord& b) {
                               return shortlex_less(a, b);
                             });
  if (it == vertices.end() || !(*it == w))
    throw Error("word is not a vertex of the cell tree");
  return static_cast<std::size_t>(it - vertices.begin());
}

LambdaGraph lambda_graph(const CoxeterDiagram& d, Gen s,
                         std::optional<std::size_t> max_len) {
  d.check_vertex(s);
  d.require_connected();
  const bool capped = max_len.has_value();
  const std::size_t cap = max_len.value_or(0);
  if (!finiteness_check(d).finite() && !capped)
    throw Error("left cell may be infinite; a max_len cap is required");

  LambdaGraph lg;
  lg.cell = s;
  // Breadth-first left extension from the single-letter word; a word and its
  // extension t.w give the tree edge labeled t.
  std::vector<Word> frontier{{s}};
  std::vector<std::pair<Word, Word>> edges;  // (upper, lower)
  std::size_t len = 1;
  while (!frontier.empty()) {
    for (const Word& w : frontier) lg.vertices.push_back({w});
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (const auto& [t, label] : d.neighbors(w.front())) {
        Word up;
        up.reserve(w.size() + 1);
        up.push_back(t);
        up.insert(up.end(), w.begin(), w.end());
        if (check_rigidity(d, up).rigid) {
          edges.emplace_back(up, w);
          next.push_back(std::move(up));
        }
      }
    std::sort(next.begin(), next.end());
    if (capped && len == cap) {
      lg.truncated = !next.empty();
      // Drop edges reaching past the cap.
      std::erase_if(edges, [&](const auto& e) { return e.first.size() > len; });
      break;
    }
    frontier = std::move(next);
    ++len;
  }
  std::sort(lg.vertices.begin(), lg.vertices.end(),
            [](const RigidWord& a, const RigidWord& b) {
              return shortlex_less(a, b);
            });
  for (const auto& [up, lo] : edges)
    lg.edges.push_back({lg.vertex_index({up}), lg.vertex_index({lo}), up.front()});
  std::sort(lg.edges.begin(), lg.edges.end(),
            [](const LambdaGraph::Edge& a, const LambdaGraph::Edge& b) {
              return a.upper < b.upper;
            });
  for (const auto& w : lg.vertices) lg.descent.push_back(w.word.front());
  return lg;
}

MultiGraph lambda_multigraph(const CoxeterDiagram& d, const LambdaGraph& lg) {
  MultiGraph g;
  for (const auto& w : lg.vertices) g.add_vertex(format_word(d, w.word));
  for (const auto& e : lg.edges)
    g.add_edge(static_cast<MultiGraph::V>(e.upper),
               static_cast<MultiGraph::V>(e.lower));
  return g;
}

std::optional<ShiftedProjective> simple_action(const LambdaGraph& lg, Gen t,
                                               const RigidWord& x) {
  std::size_t i = lg.vertex_index(x);
  if (lg.descent[i] != t) return std::nullopt;
  return ShiftedProjective{i, 1};
}

IntMatrix action_matrix(const CoxeterDiagram& d, const LambdaGraph& lg, Gen t) {
  d.check_vertex(t);
  IntMatrix c = cartan_matrix(lambda_multigraph(d, lg));
  IntMatrix m(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (lg.descent[i] != t) continue;
    for (std::size_t j = 0; j < c.size(); ++j) m(i, j) = c(i, j);
  }
  return m;
}

IntMatrix action_matrix(const CoxeterDiagram& d, Gen s, Gen t) {
  return action_matrix(d, lambda_graph(d, s), t);
}

LaurentMatrix graded_action_matrix(const CoxeterDiagram& d,
                                   const LambdaGraph& lg, Gen t) {
  d.check_vertex(t);
  LaurentMatrix c = graded_cartan_matrix(lambda_multigraph(d, lg));
  LaurentMatrix m(c.size());
  const Laurent shift = Laurent::v(-1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (lg.descent[i] != t) continue;
    for (std::size_t j = 0; j < c.size(); ++j) m(i, j) = shift * c(i, j);
  }
  return m;
}

LaurentMatrix graded_action_matrix(const CoxeterDiagram& d, Gen s, Gen t) {
  return graded_action_matrix(d, lambda_graph(d, s), t);
}

std::string CellActionReport::summary() const {
  if (truncated) return "skipped: truncated";
  auto yn = [](bool b) { return b ? "ok" : "FAILED"; };
  std::string out;
  out += std::string("cartan: ") + yn(cartan_consistent);
  out += std::string(", quadratic: ") + yn(hecke);
  out += std::string(", graded quadratic: ") + yn(graded_hecke);
  out += std::string(", adjunction: ") + yn(adjunction);
  out += std::string(", entries: ") + yn(entry_bounds);
  out += std::string(", grading: ") + yn(graded_matches_ungraded);
  return out;
}

CellActionReport verify_cell_action(const CoxeterDiagram& d, Gen s,
                                    std::optional<std::size_t> max_len) {
  CellActionReport report;
  auto lg = lambda_graph(d, s, max_len);
  if (lg.truncated) {
    report.truncated = true;
    return report;
  }
  const std::size_t n = lg.vertices.size();
  IntMatrix c = cartan_matrix(lambda_multigraph(d, lg));
  const Laurent two_shifts = Laurent::v(1) + Laurent::v(-1);

  report.cartan_consistent = true;
  report.hecke = true;
  report.graded_hecke = true;
  report.adjunction = true;
  report.entry_bounds = true;
  report.graded_matches_ungraded = true;

  IntMatrix sum(n);
  for (Gen t = 0; t < d.rank(); ++t) {
    IntMatrix m = action_matrix(d, lg, t);
    LaurentMatrix mv = graded_action_matrix(d, lg, t);
    sum = sum + m;
    if (m * m != m.scaled(2)) report.hecke = false;
    if (mv * mv != mv.scaled(two_shifts)) report.graded_hecke = false;
    if (m.transpose() * c != c * m) report.adjunction = false;
    if (at_one(mv) != m) report.graded_matches_ungraded = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto e = m(i, j);
        if (e < 0 || e > 2) report.entry_bounds = false;
        bool descent_diag = i == j && lg.descent[i] == t;
        if ((e == 2) != descent_diag) report.entry_bounds = false;
      }
  }
  if (sum != c) report.cartan_consistent = false;
  return report;
}

std::string lambda_dot(const CoxeterDiagram& d, const LambdaGraph& lg) {
  // Vertices colored by descent, one palette slot per generator.
  static const char* palette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                                  "#ff7f00", "#a65628", "#f781bf", "#999999",
                                  "#66c2a5", "#ffd92f"};
  constexpr std::size_t n_colors = sizeof(palette) / sizeof(palette[0]);
  std::string out = "graph {\n  node [style=filled];\n";
  for (std::size_t i = 0; i < lg.vertices.size(); ++i) {
    out += "  \"" + format_word(d, lg.vertices[i].word) + "\" [fillcolor=\"" +
           palette[lg.descent[i] % n_colors] + "\"];\n";
  }
  for (const auto& e : lg.edges)
    out += "  \"" + format_word(d, lg.vertices[e.upper].word) + "\" -- \"" +
           format_word(d, lg.vertices[e.lower].word) + "\" [label=\"" +
           d.name(e.t) + "\"];\n";
  out += "}\n";
  return out;
}

nlohmann::ordered_json lambda_json(const CoxeterDiagram& d,
                                   const LambdaGraph& lg) {
  nlohmann::ordered_json j;
  j["cell"] = d.name(lg.cell);
  auto vertices = nlohmann::ordered_json::array();
  for (const auto& w : lg.vertices) vertices.push_back(format_word(d, w.word));
  j["vertices"] = std::move(vertices);
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : lg.edges) {
    nlohmann::ordered_json je;
    je["u"] = format_word(d, lg.vertices[e.upper].word);
    je["v"] = format_word(d, lg.vertices[e.lower].word);
    je["t"] = d.name(e.t);
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  auto descents = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < lg.vertices.size(); ++i)
    descents[format_word(d, lg.vertices[i].word)] = d.name(lg.descent[i]);
  j["descents"] = std::move(descents);
  j["truncated"] = lg.truncated;
  return j;
}

}  // namespace coxkit
