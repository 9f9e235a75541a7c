#include "coxkit/zigzag.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace coxkit {

MultiGraph::V MultiGraph::add_vertex(std::string name) {
  if (name.empty()) throw Error("empty vertex name");
  if (index_.count(name)) throw Error("duplicate vertex '" + name + "'");
  V v = static_cast<V>(names_.size());
  index_.emplace(name, v);
  names_.push_back(std::move(name));
  degree_.push_back(0);
  return v;
}

std::size_t MultiGraph::add_edge(V a, V b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw Error("loop at '" + names_[a] + "'");
  edges_.emplace_back(std::min(a, b), std::max(a, b));
  ++degree_[a];
  ++degree_[b];
  return edges_.size() - 1;
}

std::optional<MultiGraph::V> MultiGraph::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

MultiGraph::V MultiGraph::require(std::string_view name) const {
  auto v = find(name);
  if (!v) throw Error("unknown vertex '" + std::string(name) + "'");
  return *v;
}

void MultiGraph::check_vertex(V v) const {
  if (v >= names_.size()) throw Error("unknown vertex");
}

std::size_t MultiGraph::degree(V v) const {
  check_vertex(v);
  return degree_[v];
}

std::size_t MultiGraph::multiplicity(V a, V b) const {
  check_vertex(a);
  check_vertex(b);
  std::size_t n = 0;
  for (const auto& [u, v] : edges_)
    if ((u == a && v == b) || (u == b && v == a)) ++n;
  return n;
}

std::vector<MultiGraph::V> MultiGraph::neighbors(V v) const {
  check_vertex(v);
  std::vector<V> out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool MultiGraph::connected() const {
  if (names_.empty()) return true;
  std::vector<char> seen(names_.size(), 0);
  std::vector<V> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    V v = stack.back();
    stack.pop_back();
    for (const auto& [a, b] : edges_) {
      V w = a == v ? b : (b == v ? a : v);
      if (w != v && !seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == names_.size();
}

/* --- parsing and exports ------------------------------------------------- */

namespace {

std::vector<std::pair<std::string, int>> graph_tokens(std::string_view line) {
  std::vector<std::pair<std::string, int>> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
           line[j] != '#')
      ++j;
    out.emplace_back(std::string(line.substr(i, j - i)), static_cast<int>(i + 1));
    i = j;
  }
  return out;
}

MultiGraph::V graph_find_or_add(MultiGraph& g, const std::string& name, int lineno,
                                int column) {
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
      throw ParseError("invalid vertex name '" + name + "'", lineno, column);
  if (auto v = g.find(name)) return *v;
  return g.add_vertex(name);
}

}  // namespace

MultiGraph parse_multigraph(std::string_view text) {
  MultiGraph g;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto toks = graph_tokens(line);
    if (toks.empty()) continue;
    if (toks[0].first == "vertex") {
      if (toks.size() != 2)
        throw ParseError("expected: vertex <name>", lineno, toks[0].second);
      if (g.find(toks[1].first))
        throw ParseError("duplicate vertex '" + toks[1].first + "'", lineno,
                         toks[1].second);
      graph_find_or_add(g, toks[1].first, lineno, toks[1].second);
    } else if (toks[0].first == "edge") {
      if (toks.size() != 3)
        throw ParseError("expected: edge <name> <name>", lineno, toks[0].second);
      auto a = graph_find_or_add(g, toks[1].first, lineno, toks[1].second);
      auto b = graph_find_or_add(g, toks[2].first, lineno, toks[2].second);
      if (a == b)
        throw ParseError("loop at '" + toks[1].first + "'", lineno, toks[2].second);
      g.add_edge(a, b);
    } else {
      throw ParseError("expected 'vertex' or 'edge', got '" + toks[0].first + "'",
                       lineno, toks[0].second);
    }
  }
  return g;
}

MultiGraph parse_multigraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_multigraph(buf.str());
}

nlohmann::ordered_json multigraph_json(const MultiGraph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = g.names();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.edges())
    edges.push_back({g.name(u), g.name(v)});
  j["edges"] = std::move(edges);
  return j;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string multigraph_dot(const MultiGraph& g) {
  std::string out = "graph {\n";
  for (const auto& n : g.names()) out += "  " + dot_quote(n) + ";\n";
  for (const auto& [u, v] : g.edges())
    out += "  " + dot_quote(g.name(u)) + " -- " + dot_quote(g.name(v)) + ";\n";
  out += "}\n";
  return out;
}

std::string doubled_quiver_dot(const MultiGraph& g) {
  std::string out = "digraph {\n";
  for (const auto& n : g.names()) out += "  " + dot_quote(n) + ";\n";
  for (const auto& [u, v] : g.edges()) {
    out += "  " + dot_quote(g.name(u)) + " -> " + dot_quote(g.name(v)) + ";\n";
    out += "  " + dot_quote(g.name(v)) + " -> " + dot_quote(g.name(u)) + ";\n";
  }
  out += "}\n";
  return out;
}

/* --- the zig-zag presentation -------------------------------------------- */

ZigzagPresentation::ZigzagPresentation(MultiGraph g) : graph_(std::move(g)) {
  const std::size_t nv = graph_.n_vertices();
  idem_at_.assign(nv, -1);
  loop_at_.assign(nv, -1);
  for (MultiGraph::V v = 0; v < nv; ++v) {
    idem_at_[v] = static_cast<std::int32_t>(basis_.size());
    basis_.push_back(Idempotent{v});
    src_.push_back(v);
    tgt_.push_back(v);
  }
  for (std::size_t e = 0; e < graph_.n_edges(); ++e) {
    auto [u, v] = graph_.edge(e);
    basis_.push_back(Arrow{e, true});
    src_.push_back(u);
    tgt_.push_back(v);
    basis_.push_back(Arrow{e, false});
    src_.push_back(v);
    tgt_.push_back(u);
  }
  for (MultiGraph::V v = 0; v < nv; ++v)
    if (graph_.incident(v)) {
      loop_at_[v] = static_cast<std::int32_t>(basis_.size());
      basis_.push_back(LoopElem{v});
      src_.push_back(v);
      tgt_.push_back(v);
    }

  // Composition table for x after y. Degree-2 paths survive only as the
  // loop at their common endpoint; everything of degree >= 3 dies.
  const std::size_t n = basis_.size();
  table_.assign(n * n, kZero);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (src_[x] != tgt_[y]) continue;
      std::int32_t& slot = table_[x * n + y];
      int dx = degree(x), dy = degree(y);
      if (dx == 0) {
        slot = static_cast<std::int32_t>(y);
      } else if (dy == 0) {
        slot = static_cast<std::int32_t>(x);
      } else if (dx + dy >= 3) {
        slot = kZero;
      } else {  // two arrows
        MultiGraph::V start = src_[y], end = tgt_[x];
        slot = start == end ? loop_at_[start] : kZero;
      }
    }
}

int ZigzagPresentation::degree(std::size_t i) const {
  if (std::holds_alternative<Idempotent>(basis_[i])) return 0;
  if (std::holds_alternative<Arrow>(basis_[i])) return 1;
  return 2;
}

std::size_t ZigzagPresentation::index_of(const ZigzagBasisElement& e) const {
  if (const auto* i = std::get_if<Idempotent>(&e)) {
    graph_.check_vertex(i->v);
    return static_cast<std::size_t>(idem_at_[i->v]);
  }
  if (const auto* a = std::get_if<Arrow>(&e)) {
    if (a->edge >= graph_.n_edges()) throw Error("unknown edge index");
    return graph_.n_vertices() + 2 * a->edge + (a->forward ? 0 : 1);
  }
  const auto& l = std::get<LoopElem>(e);
  graph_.check_vertex(l.v);
  if (loop_at_[l.v] < 0)
    throw Error("no loop at isolated vertex '" + graph_.name(l.v) + "'");
  return static_cast<std::size_t>(loop_at_[l.v]);
}

std::int32_t ZigzagPresentation::compose(std::size_t x, std::size_t y) const {
  if (x >= basis_.size() || y >= basis_.size())
    throw Error("basis index out of range");
  if (src_[x] != tgt_[y]) throw Error("elements are not composable");
  return table_[x * basis_.size() + y];
}

std::string ZigzagPresentation::element_name(std::size_t i) const {
  if (const auto* e = std::get_if<Idempotent>(&basis_[i]))
    return "e(" + graph_.name(e->v) + ")";
  if (const auto* a = std::get_if<Arrow>(&basis_[i])) {
    auto [u, v] = graph_.edge(a->edge);
    if (!a->forward) std::swap(u, v);
    return "a" + std::to_string(a->edge) + "(" + graph_.name(u) + ">" +
           graph_.name(v) + ")";
  }
  return "c(" + graph_.name(std::get<LoopElem>(basis_[i]).v) + ")";
}

ZigzagPresentation build_zigzag(const MultiGraph& g) {
  return ZigzagPresentation(g);
}

std::optional<ZigzagBasisElement> compose(const ZigzagPresentation& p,
                                          const ZigzagBasisElement& x,
                                          const ZigzagBasisElement& y) {
  auto r = p.compose(p.index_of(x), p.index_of(y));
  if (r == ZigzagPresentation::kZero) return std::nullopt;
  return p.basis()[static_cast<std::size_t>(r)];
}

IntMatrix cartan_matrix(const MultiGraph& g) {
  const std::size_t n = g.n_vertices();
  IntMatrix c(n);
  for (MultiGraph::V v = 0; v < n; ++v) c(v, v) = g.incident(v) ? 2 : 1;
  for (const auto& [u, v] : g.edges()) {
    c(u, v) += 1;
    c(v, u) += 1;
  }
  return c;
}

LaurentMatrix graded_cartan_matrix(const MultiGraph& g) {
  const std::size_t n = g.n_vertices();
  LaurentMatrix c(n);
  for (MultiGraph::V v = 0; v < n; ++v)
    c(v, v) = g.incident(v) ? Laurent(1) + Laurent::v(2) : Laurent(1);
  for (const auto& [u, v] : g.edges()) {
    c(u, v) += Laurent::v(1);
    c(v, u) += Laurent::v(1);
  }
  return c;
}

/* --- JSON and text rendering ---------------------------------------------- */

nlohmann::ordered_json zigzag_json(const ZigzagPresentation& p) {
  nlohmann::ordered_json j;
  j["vertices"] = p.graph().names();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : p.graph().edges())
    edges.push_back({p.graph().name(u), p.graph().name(v)});
  j["edges"] = std::move(edges);
  j["dimension"] = p.dimension();
  auto basis = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    nlohmann::ordered_json e;
    if (const auto* idem = std::get_if<Idempotent>(&p.basis()[i])) {
      e["kind"] = "idempotent";
      e["vertex"] = p.graph().name(idem->v);
    } else if (const auto* a = std::get_if<Arrow>(&p.basis()[i])) {
      e["kind"] = "arrow";
      e["edge"] = a->edge;
      e["from"] = p.graph().name(p.source(i));
      e["to"] = p.graph().name(p.target(i));
    } else {
      e["kind"] = "loop";
      e["vertex"] = p.graph().name(std::get<LoopElem>(p.basis()[i]).v);
    }
    e["degree"] = p.degree(i);
    basis.push_back(std::move(e));
  }
  j["basis"] = std::move(basis);
  return j;
}

nlohmann::ordered_json int_matrix_json(const IntMatrix& m) {
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::ordered_json laurent_json(const Laurent& p) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [e, c] : p.coeffs()) j[std::to_string(e)] = c;
  return j;
}

nlohmann::ordered_json laurent_matrix_json(const LaurentMatrix& m) {
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(laurent_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string matrix_text(const std::vector<std::string>& labels,
                        const std::vector<std::vector<std::string>>& entries) {
  const std::size_t n = labels.size();
  std::vector<std::size_t> width(n + 1, 0);
  for (std::size_t j = 0; j < n; ++j) width[j + 1] = labels[j].size();
  for (std::size_t i = 0; i < n; ++i) {
    width[0] = std::max(width[0], labels[i].size());
    for (std::size_t j = 0; j < n; ++j)
      width[j + 1] = std::max(width[j + 1], entries[i][j].size());
  }
  auto pad = [](const std::string& s, std::size_t w) {
    return std::string(w - s.size(), ' ') + s;
  };
  std::string out = pad("", width[0]);
  for (std::size_t j = 0; j < n; ++j) out += "  " + pad(labels[j], width[j + 1]);
  out += '\n';
  for (std::size_t i = 0; i < n; ++i) {
    out += pad(labels[i], width[0]);
    for (std::size_t j = 0; j < n; ++j) out += "  " + pad(entries[i][j], width[j + 1]);
    out += '\n';
  }
  return out;
}

}  // namespace

std::string int_matrix_text(const std::vector<std::string>& labels,
                            const IntMatrix& m) {
  std::vector<std::vector<std::string>> entries(m.size(),
                                                std::vector<std::string>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      entries[i][j] = std::to_string(m(i, j));
  return matrix_text(labels, entries);
}

std::string laurent_matrix_text(const std::vector<std::string>& labels,
                                const LaurentMatrix& m) {
  std::vector<std::vector<std::string>> entries(m.size(),
                                                std::vector<std::string>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) entries[i][j] = m(i, j).str();
  return matrix_text(labels, entries);
}

}  // namespace coxkit
