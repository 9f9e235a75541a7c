#include "coxkit/theta.hpp"

#include <algorithm>
#include <set>

namespace coxkit {

/* --- rooted graphs -------------------------------------------------------- */

RootedGraph one_point_union(const RootedGraph& x, const RootedGraph& y) {
  x.graph.check_vertex(x.root);
  y.graph.check_vertex(y.root);
  RootedGraph out{x.graph, x.root};
  std::vector<MultiGraph::V> map(y.graph.n_vertices());
  for (MultiGraph::V v = 0; v < y.graph.n_vertices(); ++v) {
    if (v == y.root) {
      map[v] = x.root;
      continue;
    }
    std::string name = y.graph.name(v);
    while (out.graph.find(name)) name += '\'';
    map[v] = out.graph.add_vertex(std::move(name));
  }
  for (const auto& [a, b] : y.graph.edges()) out.graph.add_edge(map[a], map[b]);
  return out;
}

/* --- ADE shapes ------------------------------------------------------------ */

int AdeShape::coxeter_number() const {
  switch (family) {
    case 'A':
      return rank + 1;
    case 'D':
      return 2 * rank - 2;
    default:
      return rank == 6 ? 12 : rank == 7 ? 18 : 30;
  }
}

std::optional<AdeShape> recognize_ade(const MultiGraph& g) {
  const std::size_t n = g.n_vertices();
  if (n == 0 || !g.connected() || g.n_edges() != n - 1) return std::nullopt;
  for (const auto& [u, v] : g.edges())
    if (g.multiplicity(u, v) > 1) return std::nullopt;

  std::vector<MultiGraph::V> branch, big;
  for (MultiGraph::V v = 0; v < n; ++v) {
    if (g.degree(v) == 3) branch.push_back(v);
    if (g.degree(v) > 3) big.push_back(v);
  }
  if (!big.empty() || branch.size() > 1) return std::nullopt;
  if (branch.empty()) return AdeShape{'A', static_cast<int>(n)};

  // Arm lengths from the unique branch vertex.
  std::vector<int> arms;
  for (MultiGraph::V w : g.neighbors(branch[0])) {
    int len = 1;
    MultiGraph::V prev = branch[0], cur = w;
    while (g.degree(cur) == 2) {
      auto nb = g.neighbors(cur);
      MultiGraph::V nxt = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] != 1) return std::nullopt;
  if (arms[1] == 1) return AdeShape{'D', static_cast<int>(n)};
  if (arms[1] != 2) return std::nullopt;
  if (arms[2] >= 2 && arms[2] <= 4)
    return AdeShape{'E', static_cast<int>(n)};  // n is 6, 7 or 8
  return std::nullopt;
}

/* --- canonical tree forms --------------------------------------------------- */

namespace {

std::string rooted_canon(const MultiGraph& g, std::span<const int> colors,
                         MultiGraph::V v, MultiGraph::V parent) {
  std::vector<std::string> children;
  for (MultiGraph::V w : g.neighbors(v)) {
    if (w == parent) continue;
    children.push_back(std::to_string(g.multiplicity(v, w)) +
                       rooted_canon(g, colors, w, v));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(" + std::to_string(colors.empty() ? 0 : colors[v]);
  for (const auto& c : children) out += c;
  out += ')';
  return out;
}

std::vector<MultiGraph::V> tree_centers(const MultiGraph& g) {
  const std::size_t n = g.n_vertices();
  if (n == 1) return {0};
  std::vector<std::size_t> deg(n);
  for (MultiGraph::V v = 0; v < n; ++v) deg[v] = g.neighbors(v).size();
  std::vector<char> removed(n, 0);
  std::vector<MultiGraph::V> layer;
  for (MultiGraph::V v = 0; v < n; ++v)
    if (deg[v] <= 1) layer.push_back(v);
  std::size_t left = n;
  while (left > 2) {
    std::vector<MultiGraph::V> next;
    for (MultiGraph::V v : layer) {
      removed[v] = 1;
      --left;
      for (MultiGraph::V w : g.neighbors(v))
        if (!removed[w] && --deg[w] == 1) next.push_back(w);
    }
    layer = std::move(next);
  }
  std::vector<MultiGraph::V> centers;
  for (MultiGraph::V v = 0; v < n; ++v)
    if (!removed[v]) centers.push_back(v);
  return centers;
}

void require_tree_skeleton(const MultiGraph& g) {
  if (g.n_vertices() == 0) throw Error("empty graph");
  if (!g.connected()) throw Error("graph is not connected");
  std::set<std::pair<MultiGraph::V, MultiGraph::V>> skeleton(g.edges().begin(),
                                                             g.edges().end());
  if (skeleton.size() != g.n_vertices() - 1)
    throw Error("graph is not a tree");
}

}  // namespace

std::string canonical_rooted_tree_string(const MultiGraph& g, MultiGraph::V root,
                                         std::span<const int> colors) {
  require_tree_skeleton(g);
  g.check_vertex(root);
  return rooted_canon(g, colors, root, root);
}

std::string canonical_tree_string(const MultiGraph& g, std::span<const int> colors) {
  require_tree_skeleton(g);
  std::string best;
  for (MultiGraph::V c : tree_centers(g)) {
    std::string s = rooted_canon(g, colors, c, c);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

/* --- the Coxeter number oracle ----------------------------------------------- */

std::optional<int> coxeter_number(const MultiGraph& g, int max_order) {
  const std::size_t n = g.n_vertices();
  if (n == 0) throw Error("empty graph");
  for (const auto& [u, v] : g.edges())
    if (g.multiplicity(u, v) > 1) throw Error("graph is not simply laced");

  // Simple reflections act on the root lattice via the Cartan matrix 2I - A;
  // their product has order equal to the Coxeter number in finite type.
  IntMatrix cartan(n);
  for (MultiGraph::V v = 0; v < n; ++v) cartan(v, v) = 2;
  for (const auto& [u, v] : g.edges()) {
    cartan(u, v) = -1;
    cartan(v, u) = -1;
  }
  IntMatrix cox = IntMatrix::identity(n);
  for (MultiGraph::V i = 0; i < n; ++i) {
    IntMatrix refl = IntMatrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) refl(i, j) -= cartan(i, j);
    cox = cox * refl;
  }
  const IntMatrix id = IntMatrix::identity(n);
  constexpr std::int64_t kEntryCap = 500'000'000;  // keeps products in range
  IntMatrix power = cox;
  for (int m = 1; m <= max_order; ++m) {
    if (power == id) return m;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (power(i, j) > kEntryCap || power(i, j) < -kEntryCap)
          return std::nullopt;  // entries of a finite-order element stay small
    power = power * cox;
  }
  return std::nullopt;
}

/* --- the catalog -------------------------------------------------------------- */

std::vector<std::string> BipartiteADE::class_names(bool class_s) const {
  std::vector<std::string> out;
  for (MultiGraph::V v = 0; v < diagram.n_vertices(); ++v)
    if (in_class_s[v] == class_s) out.push_back(diagram.name(v));
  return out;
}

namespace {

// Two-coloring of a connected bipartite graph by parity from vertex 0.
std::optional<std::vector<bool>> two_coloring(const MultiGraph& g) {
  const std::size_t n = g.n_vertices();
  std::vector<int> color(n, -1);
  std::vector<MultiGraph::V> queue{0};
  color[0] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    MultiGraph::V v = queue[i];
    for (MultiGraph::V w : g.neighbors(v)) {
      if (color[w] == -1) {
        color[w] = 1 - color[v];
        queue.push_back(w);
      } else if (color[w] == color[v]) {
        return std::nullopt;
      }
    }
  }
  std::vector<bool> out(n);
  for (std::size_t v = 0; v < n; ++v) out[v] = color[v] == 0;
  return out;
}

MultiGraph path_graph(int k) {
  MultiGraph g;
  for (int i = 1; i <= k; ++i) g.add_vertex(std::to_string(i));
  for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
  return g;
}

MultiGraph d_graph(int k) {
  MultiGraph g = path_graph(k - 1);
  g.add_vertex(std::to_string(k));
  g.add_edge(static_cast<MultiGraph::V>(k - 3), static_cast<MultiGraph::V>(k - 1));
  return g;
}

MultiGraph e_graph(int k) {
  MultiGraph g = path_graph(k - 1);
  g.add_vertex(std::to_string(k));
  g.add_edge(2, static_cast<MultiGraph::V>(k - 1));
  return g;
}

// Both class assignments, deduplicated when an automorphism swaps the sides.
void emit_assignments(const MultiGraph& g, AdeShape shape,
                      std::vector<BipartiteADE>& out) {
  auto coloring = two_coloring(g);
  std::vector<bool> a = *coloring;
  std::vector<bool> b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) b[i] = !a[i];
  auto colors_of = [](const std::vector<bool>& cls) {
    std::vector<int> colors(cls.size());
    for (std::size_t i = 0; i < cls.size(); ++i) colors[i] = cls[i] ? 1 : 2;
    return colors;
  };
  out.push_back({shape, g, a});
  if (canonical_tree_string(g, colors_of(a)) != canonical_tree_string(g, colors_of(b)))
    out.push_back({shape, g, b});
}

}  // namespace

std::vector<BipartiteADE> ade_catalog(int n) {
  if (n < 3) throw Error("the edge label must be at least 3");
  std::vector<std::pair<MultiGraph, AdeShape>> diagrams;
  diagrams.emplace_back(path_graph(n - 1), AdeShape{'A', n - 1});
  if (n % 2 == 0 && n >= 6)
    diagrams.emplace_back(d_graph((n + 2) / 2), AdeShape{'D', (n + 2) / 2});
  if (n == 12) diagrams.emplace_back(e_graph(6), AdeShape{'E', 6});
  if (n == 18) diagrams.emplace_back(e_graph(7), AdeShape{'E', 7});
  if (n == 30) diagrams.emplace_back(e_graph(8), AdeShape{'E', 8});

  std::vector<BipartiteADE> out;
  for (auto& [g, shape] : diagrams) {
    if (coxeter_number(g) != n)
      throw Error("catalog entry failed the Coxeter number check");
    emit_assignments(g, shape, out);
  }
  return out;
}

BipartiteADE make_bipartite_ade(const MultiGraph& g,
                                std::span<const std::string> class_s_names) {
  auto shape = recognize_ade(g);
  if (!shape) throw Error("graph is not a simply laced Dynkin diagram");
  auto coloring = two_coloring(g);
  if (!coloring) throw Error("graph is not bipartite");
  std::set<std::string> wanted(class_s_names.begin(), class_s_names.end());
  std::set<std::string> side[2];
  for (MultiGraph::V v = 0; v < g.n_vertices(); ++v)
    side[(*coloring)[v] ? 0 : 1].insert(g.name(v));
  for (const auto& name : wanted) g.require(name);
  std::vector<bool> in_class_s(g.n_vertices());
  if (wanted == side[0]) {
    in_class_s = *coloring;
  } else if (wanted == side[1]) {
    for (std::size_t v = 0; v < g.n_vertices(); ++v) in_class_s[v] = !(*coloring)[v];
  } else {
    throw Error("class_s must be one full bipartition class");
  }
  return {*shape, g, in_class_s};
}

/* --- the glued graph ------------------------------------------------------------ */

ThetaGraph build_theta(const CoxeterDiagram& d, const BipartiteADE& omega) {
  auto split = split_at_labeled_edge(d);
  // Validate the bipartition on the supplied omega.
  for (const auto& [u, v] : omega.diagram.edges())
    if (omega.in_class_s[u] == omega.in_class_s[v])
      throw Error("omega classes do not form a bipartition");

  auto lam_s = lambda_graph(split.gamma_s, split.gamma_s.require(d.name(split.s)));
  auto lam_t = lambda_graph(split.gamma_t, split.gamma_t.require(d.name(split.t)));

  ThetaGraph theta;
  for (const auto& name : omega.diagram.names()) theta.graph.add_vertex(name);
  theta.vertex_origin.assign(omega.diagram.n_vertices(), ThetaOrigin::Omega);
  for (const auto& [u, v] : omega.diagram.edges()) {
    theta.graph.add_edge(u, v);
    theta.edge_origin.push_back(ThetaOrigin::Omega);
  }

  auto glue = [&](const CoxeterDiagram& side, const LambdaGraph& lam,
                  MultiGraph::V at, ThetaOrigin origin) {
    std::size_t root = lam.vertex_index({Word{lam.cell}});
    std::vector<MultiGraph::V> map(lam.vertices.size());
    for (std::size_t i = 0; i < lam.vertices.size(); ++i) {
      if (i == root) {
        map[i] = at;
        continue;
      }
      map[i] = theta.graph.add_vertex(format_word(side, lam.vertices[i].word) +
                                      "@" + theta.graph.name(at));
      theta.vertex_origin.push_back(origin);
    }
    for (const auto& e : lam.edges) {
      theta.graph.add_edge(map[e.upper], map[e.lower]);
      theta.edge_origin.push_back(origin);
    }
  };

  for (MultiGraph::V v = 0; v < omega.diagram.n_vertices(); ++v)
    if (omega.in_class_s[v]) glue(split.gamma_s, lam_s, v, ThetaOrigin::LambdaS);
  for (MultiGraph::V v = 0; v < omega.diagram.n_vertices(); ++v)
    if (!omega.in_class_s[v]) glue(split.gamma_t, lam_t, v, ThetaOrigin::LambdaT);
  return theta;
}

ZigzagPresentation two_rep_category(const CoxeterDiagram& d,
                                    const BipartiteADE& omega) {
  return build_zigzag(build_theta(d, omega).graph);
}

/* --- exports -------------------------------------------------------------------- */

namespace {

const char* origin_name(ThetaOrigin o) {
  switch (o) {
    case ThetaOrigin::Omega:
      return "omega";
    case ThetaOrigin::LambdaS:
      return "lambda_s";
    default:
      return "lambda_t";
  }
}

}  // namespace

std::string theta_dot(const ThetaGraph& theta) {
  std::string out = "graph {\n";
  for (MultiGraph::V v = 0; v < theta.graph.n_vertices(); ++v)
    out += "  \"" + theta.graph.name(v) + "\";\n";
  for (std::size_t e = 0; e < theta.graph.n_edges(); ++e) {
    auto [u, v] = theta.graph.edge(e);
    out += "  \"" + theta.graph.name(u) + "\" -- \"" + theta.graph.name(v) + "\"";
    switch (theta.edge_origin[e]) {
      case ThetaOrigin::Omega:
        break;
      case ThetaOrigin::LambdaS:
        out += " [style=dashed]";
        break;
      case ThetaOrigin::LambdaT:
        out += " [style=dotted]";
        break;
    }
    out += ";\n";
  }
  out += "}\n";
  return out;
}

nlohmann::ordered_json theta_json(const ThetaGraph& theta) {
  nlohmann::ordered_json j;
  auto vertices = nlohmann::ordered_json::array();
  for (MultiGraph::V v = 0; v < theta.graph.n_vertices(); ++v) {
    nlohmann::ordered_json jv;
    jv["name"] = theta.graph.name(v);
    jv["origin"] = origin_name(theta.vertex_origin[v]);
    vertices.push_back(std::move(jv));
  }
  j["vertices"] = std::move(vertices);
  auto edges = nlohmann::ordered_json::array();
  for (std::size_t e = 0; e < theta.graph.n_edges(); ++e) {
    auto [u, v] = theta.graph.edge(e);
    edges.push_back({theta.graph.name(u), theta.graph.name(v)});
  }
  j["edges"] = std::move(edges);
  return j;
}

nlohmann::ordered_json catalog_json(const std::vector<BipartiteADE>& entries,
                                    int n) {
  nlohmann::ordered_json j;
  j["coxeter_number"] = n;
  auto list = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json je;
    je["type"] = e.shape.name();
    je["vertices"] = e.diagram.names();
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [u, v] : e.diagram.edges())
      edges.push_back({e.diagram.name(u), e.diagram.name(v)});
    je["edges"] = std::move(edges);
    je["class_s"] = e.class_names(true);
    je["class_t"] = e.class_names(false);
    list.push_back(std::move(je));
  }
  j["entries"] = std::move(list);
  return j;
}

std::string catalog_text(const std::vector<BipartiteADE>& entries) {
  std::string out;
  for (const auto& e : entries) {
    out += e.shape.name() + "  class_s={";
    bool first = true;
    for (const auto& n : e.class_names(true)) {
      if (!first) out += ',';
      out += n;
      first = false;
    }
    out += "}  class_t={";
    first = true;
    for (const auto& n : e.class_names(false)) {
      if (!first) out += ',';
      out += n;
      first = false;
    }
    out += "}\n";
  }
  return out;
}

}  // namespace coxkit
