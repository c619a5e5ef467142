// Command-line workbench for the total domination game: exact solves,
// criticality spectra, theorem-verification suites and graph6 batch reports.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tdgame/tdgame.hpp"

namespace {

using namespace tdgame;

// Generator spec mini-grammar:
//   spec := family ':' arg
//   arg  := integer | '(' spec ',' spec ')'
// families: path, cycle, complete, one_plus_clique, join, union
class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  Graph parse() {
    Graph g = parse_spec();
    if (pos_ != text_.size())
      throw ParseError("generator spec: trailing characters at '" +
                       std::string(text_.substr(pos_)) + "'");
    return g;
  }

 private:
  Graph parse_spec() {
    std::string name;
    while (pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      name.push_back(text_[pos_++]);
    if (!consume(':'))
      throw ParseError("generator spec: expected ':' after '" + name + "'");
    if (name == "join" || name == "union") {
      if (!consume('('))
        throw ParseError("generator spec: expected '(' after '" + name + ":'");
      Graph a = parse_spec();
      if (!consume(','))
        throw ParseError("generator spec: expected ',' inside " + name);
      Graph b = parse_spec();
      if (!consume(')'))
        throw ParseError("generator spec: expected ')' closing " + name);
      return name == "join" ? join(a, b) : disjoint_union(a, b);
    }
    int param = parse_int();
    try {
      if (name == "path") return path_graph(param);
      if (name == "cycle") return cycle_graph(param);
      if (name == "complete") return complete_graph(param);
      if (name == "one_plus_clique") return one_plus_clique_graph(param);
    } catch (const Error& e) {
      throw ParseError(std::string("generator spec: ") + e.what());
    }
    throw ParseError("generator spec: unknown family '" + name + "'");
  }

  int parse_int() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) throw ParseError("generator spec: expected integer");
    try {
      return std::stoi(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::exception&) {
      throw ParseError("generator spec: integer out of range");
    }
  }

  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

struct SourceOptions {
  std::string gen_spec;
  std::string g6;
  std::string edges_path;
};

void add_source_flags(CLI::App* cmd, SourceOptions& src) {
  cmd->add_option("--gen", src.gen_spec,
                  "generator spec, e.g. path:4 or join:(complete:1,cycle:5)");
  cmd->add_option("--g6", src.g6, "graph6 string");
  cmd->add_option("--edges", src.edges_path,
                  "edge-list file: first line n, then one 'u v' per line");
}

Graph resolve_graph(const SourceOptions& src) {
  int sources = !src.gen_spec.empty() + !src.g6.empty() + !src.edges_path.empty();
  if (sources != 1)
    throw ParseError("exactly one graph source required (--gen, --g6 or --edges)");
  if (!src.gen_spec.empty()) return SpecParser(src.gen_spec).parse();
  if (!src.g6.empty()) return parse_g6(src.g6);
  std::ifstream in(src.edges_path);
  if (!in) throw ParseError("cannot open edge-list file " + src.edges_path);
  return parse_edge_list(in);
}

VertexSet parse_given(const std::string& text, int n) {
  VertexSet out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParseError("--given: bad vertex '" + item + "'");
    }
    if (used != item.size() || v < 0 || v >= n)
      throw ParseError("--given: vertex '" + item + "' invalid for order " +
                       std::to_string(n));
    out.insert(v);
  }
  return out;
}

class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int cmd_solve(const SourceOptions& src, const std::string& given_text) {
  Graph g = resolve_graph(src);
  VertexSet given = parse_given(given_text, g.order());
  GameSolver solver(g);
  std::cout << "gamma_tg=" << solver.gamma_tg(given)
            << " gamma_tg_staller=" << solver.gamma_tg_staller(given) << '\n';
  return 0;
}

int cmd_spectrum(const SourceOptions& src) {
  Graph g = resolve_graph(src);
  GameSolver solver(g);
  CriticalityProfile p = profile(solver);
  std::cout << "v\tgamma_tg_given_v\n";
  for (Vertex v = 0; v < g.order(); ++v)
    std::cout << v << '\t' << p.spectrum[static_cast<std::size_t>(v)] << '\n';
  std::cout << "base=" << p.base_value << '\n';
  if (p.is_critical)
    std::cout << "critical class=" << *p.class_k << '\n';
  else
    std::cout << "not critical\n";
  return 0;
}

int cmd_batch(const std::string& corpus_path, const std::string& out_path,
              int jobs) {
  std::ifstream in(corpus_path);
  if (!in) throw ParseError("cannot open corpus file " + corpus_path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }

  std::vector<std::string> rows(lines.size());
  parallel_chunks(0, lines.size(), jobs, [&](int, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      const std::string& g6 = lines[i];
      std::ostringstream row;
      row << g6 << '\t';
      try {
        Graph g = parse_g6(g6);
        row << g.order() << '\t';
        if (!isolated_vertices(g).empty()) {
          row << "-\t-\t-\t-\tunwinnable";
        } else {
          GameSolver solver(g);
          CriticalityProfile p = profile(solver);
          row << p.base_value << '\t' << solver.gamma_tg_staller() << '\t'
              << (p.is_critical ? "true" : "false") << '\t';
          if (p.class_k)
            row << *p.class_k;
          else
            row << '-';
          row << "\t-";
        }
      } catch (const Error& e) {
        std::string msg = e.what();
        for (char& c : msg)
          if (c == '\t' || c == '\n') c = ' ';
        row << "-\t-\t-\t-\t-\t" << msg;
      }
      rows[i] = row.str();
    }
  });

  OutputSink sink(out_path);
  sink.stream() << "g6\tn\tgamma_tg\tgamma_tg_staller\tcritical\tclass\terror\n";
  for (const std::string& r : rows) sink.stream() << r << '\n';
  return 0;
}

int emit_report(const std::vector<VerificationReport>& rows,
                const std::string& out_path, const std::string& label) {
  OutputSink sink(out_path);
  sink.stream() << to_tsv(rows);
  bool ok = all_agree(rows);
  std::cerr << label << ": " << rows.size() << " instances, "
            << (ok ? "all agree" : "DISAGREEMENTS FOUND") << '\n';
  return ok ? 0 : 1;
}

int emit_scan(const ScanSummary& summary, const std::string& out_path,
              const std::string& label, const std::string& unit) {
  OutputSink sink(out_path);
  sink.stream() << to_tsv(summary.disagreements);
  std::cerr << label << ": " << summary.disagreements.size()
            << " counterexamples / " << summary.scanned << ' ' << unit
            << " scanned\n";
  return summary.disagreements.empty() ? 0 : 1;
}

int cmd_verify(const std::string& suite, int max_n, int max_each,
               const std::string& out_path, int jobs) {
  if (suite == "cycles")
    return emit_report(verify_line_suite(true, max_n > 0 ? max_n : 15), out_path,
                       "cycles");
  if (suite == "paths")
    return emit_report(verify_line_suite(false, max_n > 0 ? max_n : 15), out_path,
                       "paths");
  if (suite == "char2")
    return emit_scan(verify_characterization(CharKind::two_critical,
                                             max_n > 0 ? max_n : 5, jobs),
                     out_path, "char2", "labeled graphs");
  if (suite == "char3")
    return emit_scan(verify_characterization(CharKind::three_critical,
                                             max_n > 0 ? max_n : 6, jobs),
                     out_path, "char3", "labeled graphs");
  if (suite == "join")
    return emit_scan(verify_join_characterization(max_each > 0 ? max_each : 4, jobs),
                     out_path, "join", "ordered pairs");
  if (suite == "strategy-cycle")
    return emit_report(verify_strategy_cycle(max_n > 0 ? max_n : 12), out_path,
                       "strategy-cycle");
  if (suite == "strategy-path-fmove")
    return emit_report(verify_path_first_moves(max_n > 0 ? max_n : 16), out_path,
                       "strategy-path-fmove");
  if (suite == "witnesses")
    return emit_report(verify_witnesses(max_n > 0 ? max_n : 16), out_path,
                       "witnesses");
  throw ParseError("unknown verify suite '" + suite + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"total domination game workbench"};
  app.require_subcommand(1);

  SourceOptions solve_src, spectrum_src;
  std::string given_text;

  CLI::App* solve = app.add_subcommand("solve", "gamma_tg and gamma_tg' of one graph");
  add_source_flags(solve, solve_src);
  solve->add_option("--given", given_text,
                    "comma-separated vertices already totally dominated");

  CLI::App* spectrum =
      app.add_subcommand("spectrum", "per-vertex gamma_tg(G|v) and criticality");
  add_source_flags(spectrum, spectrum_src);

  std::string suite, verify_out;
  int verify_max = -1, verify_max_each = -1;
  int jobs = tdgame::default_jobs();
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify
      ->add_option("suite", suite,
                   "cycles|paths|char2|char3|join|strategy-cycle|"
                   "strategy-path-fmove|witnesses")
      ->required();
  verify->add_option("--max,--max-n", verify_max, "largest order to check");
  verify->add_option("--max-each", verify_max_each,
                     "largest factor order for the join suite");
  verify->add_option("--out", verify_out, "TSV report path (default stdout)");
  verify->add_option("--jobs", jobs, "parallelism degree (default TDGAME_JOBS)");

  std::string corpus_path, batch_out;
  int batch_jobs = tdgame::default_jobs();
  CLI::App* batch = app.add_subcommand("batch", "solve a graph6 corpus into a TSV");
  batch->add_option("--corpus", corpus_path, "file with one graph6 string per line")
      ->required();
  batch->add_option("--out", batch_out, "TSV report path (default stdout)");
  batch->add_option("--jobs", batch_jobs, "parallelism degree (default TDGAME_JOBS)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_src, given_text);
    if (spectrum->parsed()) return cmd_spectrum(spectrum_src);
    if (verify->parsed())
      return cmd_verify(suite, verify_max, verify_max_each, verify_out, jobs);
    if (batch->parsed()) return cmd_batch(corpus_path, batch_out, batch_jobs);
  } catch (const tdgame::UnwinnableError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const tdgame::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
