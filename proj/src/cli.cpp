#include "coxkit/cli.hpp"

#include <optional>

#include "CLI11.hpp"
#include "coxkit/cellrep.hpp"
#include "coxkit/diagram.hpp"
#include "coxkit/theta.hpp"
#include "coxkit/words.hpp"
#include "coxkit/zigzag.hpp"

namespace coxkit {

namespace {

void emit(std::ostream& out, const nlohmann::ordered_json& j) {
  out << j.dump() << '\n';
}

std::optional<std::size_t> to_cap(long long max_len) {
  if (max_len < 0) return std::nullopt;
  return static_cast<std::size_t>(max_len);
}

void print_words(std::ostream& out, const CoxeterDiagram& d,
                 const std::vector<RigidWord>& words) {
  for (const auto& w : words) out << format_word(d, w.word) << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"small Kazhdan-Lusztig cell toolkit"};
  app.name("coxkit");
  app.require_subcommand(1);

  int threads = 1;
  app.add_option("--threads", threads, "reserved; operations run single-threaded")
      ->check(CLI::PositiveNumber);

  std::string file, graphfile, omega_file, word_text, left, right, cell_gen, by_gen;
  long long max_len = -1;
  long long cap = static_cast<long long>(kDefaultOrbitCap);
  int coxeter_n = 0;
  bool json = false, dot = false, dot_plain = false, graded = false;
  bool want_cartan = false, want_graded_cartan = false;
  std::vector<std::string> class_s;

  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", json, "JSON output"); };

  auto* cmd_check = app.add_subcommand("check", "decide small-cell finiteness");
  cmd_check->add_option("file", file)->required();
  add_json(cmd_check);

  auto* cmd_cell = app.add_subcommand("cell", "enumerate the small cell");
  cmd_cell->add_option("file", file)->required();
  cmd_cell->add_option("--max-len", max_len, "length cap (required when infinite)");
  add_json(cmd_cell);

  auto* cmd_intersect =
      app.add_subcommand("intersect", "one left-by-right cell intersection");
  cmd_intersect->add_option("file", file)->required();
  cmd_intersect->add_option("--left", left, "left cell (rightmost letter)")->required();
  cmd_intersect->add_option("--right", right, "right cell (leftmost letter)")
      ->required();
  cmd_intersect->add_option("--max-len", max_len);
  add_json(cmd_intersect);

  auto* cmd_table = app.add_subcommand("table", "full cell table");
  cmd_table->add_option("file", file)->required();
  add_json(cmd_table);

  auto* cmd_oracle =
      app.add_subcommand("oracle", "word-problem oracle for unique reducedness");
  cmd_oracle->add_option("file", file)->required();
  cmd_oracle->add_option("--word", word_text)->required();
  cmd_oracle->add_option("--cap", cap, "orbit size cap")->check(CLI::PositiveNumber);
  add_json(cmd_oracle);

  auto* cmd_lambda = app.add_subcommand("lambda", "tree of a left cell");
  cmd_lambda->add_option("file", file)->required();
  cmd_lambda->add_option("--cell", cell_gen, "the generator s")->required();
  cmd_lambda->add_option("--max-len", max_len);
  cmd_lambda->add_flag("--dot", dot, "DOT output");
  add_json(cmd_lambda);

  auto* cmd_zigzag = app.add_subcommand("zigzag", "zig-zag category of a multigraph");
  cmd_zigzag->add_option("graphfile", graphfile)->required();
  cmd_zigzag->add_flag("--cartan", want_cartan, "Cartan matrix");
  cmd_zigzag->add_flag("--graded-cartan", want_graded_cartan, "graded Cartan matrix");
  cmd_zigzag->add_flag("--dot", dot, "DOT of the doubled quiver");
  cmd_zigzag->add_flag("--dot-plain", dot_plain, "DOT of the underlying graph");
  add_json(cmd_zigzag);

  auto* cmd_act = app.add_subcommand("act", "generator action matrix on a cell tree");
  cmd_act->add_option("file", file)->required();
  cmd_act->add_option("--cell", cell_gen, "the generator s")->required();
  cmd_act->add_option("--by", by_gen, "the acting generator t")->required();
  cmd_act->add_flag("--graded", graded, "include the graded matrix");
  add_json(cmd_act);

  auto* cmd_theta = app.add_subcommand("theta", "glue cell trees onto a Dynkin diagram");
  cmd_theta->add_option("file", file)->required();
  cmd_theta->add_option("--omega", omega_file, "Dynkin diagram file")->required();
  cmd_theta->add_option("--class-s", class_s, "comma-separated class_s vertices")
      ->required()
      ->delimiter(',');
  cmd_theta->add_flag("--dot", dot, "DOT output");
  add_json(cmd_theta);

  auto* cmd_catalog = app.add_subcommand("catalog", "Dynkin diagrams for an edge label");
  cmd_catalog->add_option("--coxeter-number", coxeter_n)->required();
  add_json(cmd_catalog);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "coxkit: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*cmd_check) {
      auto d = parse_diagram_file(file);
      auto v = finiteness_check(d);
      if (json)
        emit(out, verdict_json(d, v));
      else
        out << verdict_text(d, v) << '\n';
    } else if (*cmd_cell) {
      auto d = parse_diagram_file(file);
      auto cell = enumerate_small_cell(d, to_cap(max_len));
      if (json) {
        nlohmann::ordered_json j;
        auto words = nlohmann::ordered_json::array();
        for (const auto& w : cell.words) words.push_back(format_word(d, w.word));
        j["words"] = std::move(words);
        j["truncated"] = cell.truncated;
        emit(out, j);
      } else {
        print_words(out, d, cell.words);
        if (cell.truncated) out << "# truncated at length " << max_len << '\n';
      }
    } else if (*cmd_intersect) {
      auto d = parse_diagram_file(file);
      auto words =
          intersection(d, d.require(left), d.require(right), to_cap(max_len));
      if (json) {
        nlohmann::ordered_json j;
        j["left"] = left;
        j["right"] = right;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& w : words) arr.push_back(format_word(d, w.word));
        j["words"] = std::move(arr);
        emit(out, j);
      } else {
        print_words(out, d, words);
      }
    } else if (*cmd_table) {
      auto d = parse_diagram_file(file);
      auto table = cell_table(d);
      if (json)
        emit(out, cell_table_json(d, table));
      else
        out << cell_table_text(d, table);
    } else if (*cmd_oracle) {
      auto d = parse_diagram_file(file);
      auto w = parse_word(d, word_text);
      auto report = oracle_unique_reduced(d, w, static_cast<std::size_t>(cap));
      if (json) {
        nlohmann::ordered_json j;
        j["word"] = format_word(d, w);
        j["status"] = oracle_status_name(report.status);
        j["orbit_size"] = report.orbit_size;
        emit(out, j);
      } else {
        out << oracle_status_name(report.status) << " orbit_size="
            << report.orbit_size << '\n';
      }
    } else if (*cmd_lambda) {
      auto d = parse_diagram_file(file);
      auto lg = lambda_graph(d, d.require(cell_gen), to_cap(max_len));
      if (dot) {
        out << lambda_dot(d, lg);
      } else if (json) {
        emit(out, lambda_json(d, lg));
      } else {
        out << "cell: " << cell_gen << '\n';
        out << "vertices (" << lg.vertices.size() << "):";
        for (const auto& w : lg.vertices) out << ' ' << format_word(d, w.word);
        out << '\n';
        for (const auto& e : lg.edges)
          out << format_word(d, lg.vertices[e.upper].word) << " -- "
              << format_word(d, lg.vertices[e.lower].word) << "  [" << d.name(e.t)
              << "]\n";
        if (lg.truncated) out << "# truncated at length " << max_len << '\n';
      }
    } else if (*cmd_zigzag) {
      auto g = parse_multigraph_file(graphfile);
      if (dot) {
        out << doubled_quiver_dot(g);
      } else if (dot_plain) {
        out << multigraph_dot(g);
      } else if (want_cartan) {
        if (json)
          emit(out, nlohmann::ordered_json{{"vertices", g.names()},
                                           {"matrix", int_matrix_json(cartan_matrix(g))}});
        else
          out << int_matrix_text(g.names(), cartan_matrix(g));
      } else if (want_graded_cartan) {
        if (json)
          emit(out,
               nlohmann::ordered_json{{"vertices", g.names()},
                                      {"matrix", laurent_matrix_json(graded_cartan_matrix(g))}});
        else
          out << laurent_matrix_text(g.names(), graded_cartan_matrix(g));
      } else {
        auto p = build_zigzag(g);
        if (json) {
          emit(out, zigzag_json(p));
        } else {
          out << "vertices: " << g.n_vertices() << '\n';
          out << "edges: " << g.n_edges() << '\n';
          out << "dimension: " << p.dimension() << '\n';
          out << "basis:";
          for (std::size_t i = 0; i < p.dimension(); ++i)
            out << ' ' << p.element_name(i);
          out << '\n';
        }
      }
    } else if (*cmd_act) {
      auto d = parse_diagram_file(file);
      auto lg = lambda_graph(d, d.require(cell_gen));
      Gen t = d.require(by_gen);
      auto m = action_matrix(d, lg, t);
      std::vector<std::string> labels;
      for (const auto& w : lg.vertices) labels.push_back(format_word(d, w.word));
      if (json) {
        nlohmann::ordered_json j;
        j["cell"] = cell_gen;
        j["generator"] = by_gen;
        j["vertices"] = labels;
        j["ungraded"] = int_matrix_json(m);
        if (graded)
          j["graded"] = laurent_matrix_json(graded_action_matrix(d, lg, t));
        emit(out, j);
      } else {
        out << int_matrix_text(labels, m);
        if (graded) {
          out << '\n';
          out << laurent_matrix_text(labels, graded_action_matrix(d, lg, t));
        }
      }
    } else if (*cmd_theta) {
      auto d = parse_diagram_file(file);
      auto g = parse_multigraph_file(omega_file);
      auto omega = make_bipartite_ade(g, class_s);
      auto theta = build_theta(d, omega);
      if (dot) {
        out << theta_dot(theta);
      } else if (json) {
        emit(out, theta_json(theta));
      } else {
        for (MultiGraph::V v = 0; v < theta.graph.n_vertices(); ++v) {
          const char* origin = theta.vertex_origin[v] == ThetaOrigin::Omega
                                   ? "omega"
                                   : theta.vertex_origin[v] == ThetaOrigin::LambdaS
                                         ? "lambda_s"
                                         : "lambda_t";
          out << "vertex " << theta.graph.name(v) << " (" << origin << ")\n";
        }
        for (const auto& [u, v] : theta.graph.edges())
          out << "edge " << theta.graph.name(u) << ' ' << theta.graph.name(v) << '\n';
      }
    } else if (*cmd_catalog) {
      auto entries = ade_catalog(coxeter_n);
      if (json)
        emit(out, catalog_json(entries, coxeter_n));
      else
        out << catalog_text(entries);
    }
  } catch (const Error& e) {
    err << "coxkit: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "coxkit: internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace coxkit
