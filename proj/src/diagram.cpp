#include "coxkit/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace coxkit {

Gen CoxeterDiagram::add_vertex(std::string name) {
  if (name.empty()) throw Error("empty vertex name");
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
      throw Error("invalid vertex name '" + name + "'");
  if (index_.count(name)) throw Error("duplicate vertex '" + name + "'");
  Gen v = static_cast<Gen>(names_.size());
  index_.emplace(name, v);
  names_.push_back(std::move(name));
  adj_.emplace_back();
  if (names_.size() > stride_) {
    // Regrow the flat bond matrix with amortized doubling.
    stride_ = std::max<std::size_t>(8, stride_ * 2);
    bond_.assign(stride_ * stride_, -1);
    for (const auto& e : edges_) {
      bond_[e.u * stride_ + e.v] = e.label.m;
      bond_[e.v * stride_ + e.u] = e.label.m;
    }
  }
  return v;
}

void CoxeterDiagram::add_edge(Gen a, Gen b, EdgeLabel label) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw Error("self-loop at '" + names_[a] + "'");
  if (!label.infinite() && label.m < 3) throw Error("edge label must be at least 3");
  if (adjacent(a, b))
    throw Error("duplicate edge " + names_[a] + " " + names_[b]);
  DiagramEdge e{std::min(a, b), std::max(a, b), label};
  edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), e,
                                 [](const DiagramEdge& x, const DiagramEdge& y) {
                                   return std::pair(x.u, x.v) < std::pair(y.u, y.v);
                                 }),
                e);
  auto link = [&](Gen from, Gen to) {
    auto& n = adj_[from];
    n.insert(std::upper_bound(n.begin(), n.end(), to,
                              [](Gen g, const std::pair<Gen, EdgeLabel>& p) {
                                return g < p.first;
                              }),
             {to, label});
  };
  link(a, b);
  link(b, a);
  bond_[a * stride_ + b] = label.m;
  bond_[b * stride_ + a] = label.m;
}

std::optional<Gen> CoxeterDiagram::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Gen CoxeterDiagram::require(std::string_view name) const {
  auto v = find(name);
  if (!v) throw Error("unknown generator '" + std::string(name) + "'");
  return *v;
}

void CoxeterDiagram::check_vertex(Gen v) const {
  if (v >= names_.size()) throw Error("unknown generator");
}

std::optional<EdgeLabel> CoxeterDiagram::edge_label(Gen a, Gen b) const {
  check_vertex(a);
  check_vertex(b);
  int m = bond_raw(a, b);
  if (m < 0) return std::nullopt;
  return EdgeLabel{m};
}

std::span<const std::pair<Gen, EdgeLabel>> CoxeterDiagram::neighbors(Gen v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<DiagramEdge> CoxeterDiagram::labeled_edges() const {
  std::vector<DiagramEdge> out;
  for (const auto& e : edges_)
    if (e.labeled()) out.push_back(e);
  return out;
}

bool CoxeterDiagram::connected() const {
  if (names_.empty()) return true;
  std::vector<char> seen(names_.size(), 0);
  std::vector<Gen> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Gen v = stack.back();
    stack.pop_back();
    for (const auto& [w, lab] : adj_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == names_.size();
}

void CoxeterDiagram::require_connected() const {
  if (names_.empty()) throw Error("empty diagram");
  if (!connected()) throw Error("diagram is not connected");
}

bool CoxeterDiagram::is_tree() const {
  return !names_.empty() && connected() && edges_.size() == names_.size() - 1;
}

bool CoxeterDiagram::compact_names() const {
  for (const auto& n : names_)
    if (n.size() != 1) return false;
  return !names_.empty();
}

/* --- parsing ----------------------------------------------------------- */

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
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
    out.push_back({std::string(line.substr(i, j - i)), static_cast<int>(i + 1)});
    i = j;
  }
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

Gen find_or_add(CoxeterDiagram& d, const Token& tok, int lineno) {
  if (!valid_name(tok.text))
    throw ParseError("invalid vertex name '" + tok.text + "'", lineno, tok.column);
  if (auto v = d.find(tok.text)) return *v;
  return d.add_vertex(tok.text);
}

EdgeLabel parse_label(const Token& tok, int lineno) {
  if (tok.text == "inf") return EdgeLabel::infinity();
  long long value = 0;
  for (char c : tok.text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("expected an integer >= 3 or 'inf', got '" + tok.text + "'",
                       lineno, tok.column);
    value = value * 10 + (c - '0');
    if (value > 1000000)
      throw ParseError("edge label too large", lineno, tok.column);
  }
  if (value < 3)
    throw ParseError("edge label must be at least 3 (m = 2 is encoded by omitting the edge)",
                     lineno, tok.column);
  return EdgeLabel::finite(static_cast<int>(value));
}

}  // namespace

CoxeterDiagram parse_diagram(std::string_view text) {
  CoxeterDiagram d;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0].text == "vertex") {
      if (toks.size() != 2)
        throw ParseError("expected: vertex <name>", lineno, toks[0].column);
      if (!valid_name(toks[1].text))
        throw ParseError("invalid vertex name '" + toks[1].text + "'", lineno,
                         toks[1].column);
      if (d.find(toks[1].text))
        throw ParseError("duplicate vertex '" + toks[1].text + "'", lineno,
                         toks[1].column);
      d.add_vertex(toks[1].text);
    } else if (toks[0].text == "edge") {
      if (toks.size() != 3 && toks.size() != 4)
        throw ParseError("expected: edge <name> <name> [<m>]", lineno, toks[0].column);
      Gen a = find_or_add(d, toks[1], lineno);
      Gen b = find_or_add(d, toks[2], lineno);
      if (a == b)
        throw ParseError("self-loop at '" + toks[1].text + "'", lineno, toks[2].column);
      EdgeLabel label = toks.size() == 4 ? parse_label(toks[3], lineno) : EdgeLabel{};
      if (d.adjacent(a, b))
        throw ParseError("duplicate edge " + toks[1].text + " " + toks[2].text, lineno,
                         toks[1].column);
      d.add_edge(a, b, label);
    } else {
      throw ParseError("expected 'vertex' or 'edge', got '" + toks[0].text + "'", lineno,
                       toks[0].column);
    }
  }
  return d;
}

CoxeterDiagram parse_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_diagram(buf.str());
}

nlohmann::ordered_json diagram_json(const CoxeterDiagram& d) {
  nlohmann::ordered_json j;
  j["vertices"] = d.names();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : d.edges()) {
    nlohmann::ordered_json je;
    je["u"] = d.name(e.u);
    je["v"] = d.name(e.v);
    if (e.label.infinite())
      je["m"] = "inf";
    else
      je["m"] = e.label.m;
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  return j;
}

/* --- finiteness --------------------------------------------------------- */

namespace {

// Any cycle in a connected simple graph, as a distinct-vertex list.
std::optional<std::vector<Gen>> find_cycle(const CoxeterDiagram& d) {
  std::vector<int> state(d.rank(), 0);  // 0 new, 1 on path, 2 done
  std::vector<Gen> parent(d.rank(), 0);
  std::vector<Gen> path;
  // Iterative DFS; neighbor order makes the witness deterministic.
  struct Frame {
    Gen v;
    std::size_t next;
  };
  std::vector<Frame> stack{{0, 0}};
  state[0] = 1;
  path.push_back(0);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    auto nbrs = d.neighbors(v);
    if (next >= nbrs.size()) {
      state[v] = 2;
      path.pop_back();
      stack.pop_back();
      continue;
    }
    Gen w = nbrs[next++].first;
    if (stack.size() > 1 && w == parent[v]) continue;
    if (state[w] == 1) {
      auto it = std::find(path.begin(), path.end(), w);
      return std::vector<Gen>(it, path.end());
    }
    if (state[w] == 0) {
      state[w] = 1;
      parent[w] = v;
      path.push_back(w);
      stack.push_back({w, 0});
    }
  }
  return std::nullopt;
}

}  // namespace

FinitenessVerdict finiteness_check(const CoxeterDiagram& d) {
  d.require_connected();
  if (auto cycle = find_cycle(d)) return {CycleWitness{std::move(*cycle)}};
  for (const auto& e : d.edges())
    if (e.label.infinite()) return {InfiniteLabelWitness{e}};
  auto labeled = d.labeled_edges();
  if (labeled.size() >= 2) return {TwoLabeledEdgesWitness{labeled[0], labeled[1]}};
  return {};
}

namespace {

std::string edge_str(const CoxeterDiagram& d, const DiagramEdge& e) {
  std::string m = e.label.infinite() ? "inf" : std::to_string(e.label.m);
  return d.name(e.u) + "-" + d.name(e.v) + " (" + m + ")";
}

nlohmann::ordered_json edge_json(const CoxeterDiagram& d, const DiagramEdge& e) {
  nlohmann::ordered_json j;
  j["u"] = d.name(e.u);
  j["v"] = d.name(e.v);
  if (e.label.infinite())
    j["m"] = "inf";
  else
    j["m"] = e.label.m;
  return j;
}

}  // namespace

nlohmann::ordered_json verdict_json(const CoxeterDiagram& d,
                                    const FinitenessVerdict& v) {
  nlohmann::ordered_json j;
  j["finite"] = v.finite();
  if (const auto* c = std::get_if<CycleWitness>(&v.reason)) {
    std::vector<std::string> names;
    for (Gen g : c->cycle) names.push_back(d.name(g));
    j["reason"] = {{"cycle", names}};
  } else if (const auto* i = std::get_if<InfiniteLabelWitness>(&v.reason)) {
    j["reason"] = {{"infinite_label", edge_json(d, i->edge)}};
  } else if (const auto* t = std::get_if<TwoLabeledEdgesWitness>(&v.reason)) {
    j["reason"] = {{"two_labeled_edges",
                    {edge_json(d, t->first), edge_json(d, t->second)}}};
  }
  return j;
}

std::string verdict_text(const CoxeterDiagram& d, const FinitenessVerdict& v) {
  if (v.finite()) return "finite";
  if (const auto* c = std::get_if<CycleWitness>(&v.reason)) {
    std::string out = "infinite: cycle";
    for (Gen g : c->cycle) out += " " + d.name(g);
    return out;
  }
  if (const auto* i = std::get_if<InfiniteLabelWitness>(&v.reason))
    return "infinite: edge " + edge_str(d, i->edge);
  const auto& t = std::get<TwoLabeledEdgesWitness>(v.reason);
  return "infinite: two labeled edges " + edge_str(d, t.first) + ", " +
         edge_str(d, t.second);
}

/* --- splitting and paths ------------------------------------------------ */

namespace {

CoxeterDiagram induced_subdiagram(const CoxeterDiagram& d,
                                  const std::vector<char>& keep) {
  CoxeterDiagram sub;
  std::vector<Gen> map(d.rank(), 0);
  for (Gen v = 0; v < d.rank(); ++v)
    if (keep[v]) map[v] = sub.add_vertex(d.name(v));
  for (const auto& e : d.edges())
    if (keep[e.u] && keep[e.v]) sub.add_edge(map[e.u], map[e.v], e.label);
  return sub;
}

std::vector<char> component_avoiding(const CoxeterDiagram& d, Gen start, Gen avoid) {
  std::vector<char> in(d.rank(), 0);
  std::vector<Gen> stack{start};
  in[start] = 1;
  while (!stack.empty()) {
    Gen v = stack.back();
    stack.pop_back();
    for (const auto& [w, lab] : d.neighbors(v))
      if (w != avoid && !in[w]) {
        in[w] = 1;
        stack.push_back(w);
      }
  }
  return in;
}

}  // namespace

SplitData split_at_labeled_edge(const CoxeterDiagram& d) {
  if (!d.is_tree()) throw Error("diagram is not a tree");
  auto labeled = d.labeled_edges();
  if (labeled.empty()) throw Error("diagram has no labeled edge");
  if (labeled.size() > 1) throw Error("diagram has more than one labeled edge");
  if (labeled[0].label.infinite())
    throw Error("the labeled edge has infinite label");
  SplitData out;
  out.s = labeled[0].u;
  out.t = labeled[0].v;
  out.label = labeled[0].label;
  auto side_s = component_avoiding(d, out.s, out.t);
  auto side_t = component_avoiding(d, out.t, out.s);
  out.gamma_s = induced_subdiagram(d, side_s);
  out.gamma_t = induced_subdiagram(d, side_t);
  out.pi.resize(d.rank());
  for (Gen v = 0; v < d.rank(); ++v) out.pi[v] = side_s[v] ? out.s : out.t;
  return out;
}

std::vector<Gen> tree_path(const CoxeterDiagram& d, Gen a, Gen b) {
  d.check_vertex(a);
  d.check_vertex(b);
  if (!d.is_tree()) throw Error("diagram is not a tree");
  std::vector<Gen> parent(d.rank(), a);
  std::vector<char> seen(d.rank(), 0);
  std::vector<Gen> queue{a};
  seen[a] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Gen v = queue[i];
    if (v == b) break;
    for (const auto& [w, lab] : d.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = v;
        queue.push_back(w);
      }
  }
  std::vector<Gen> path;
  for (Gen v = b;; v = parent[v]) {
    path.push_back(v);
    if (v == a) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace coxkit
