// affconn: flat torsion-free invariant connections on Lie algebras.
//
//   affconn analyze <path> | --builtin NAME
//   affconn check-connection <path> --gamma <path>
//   affconn check-embedding <path> --map <path>
//   affconn search <path> [--starts N] [--seed S]
//   affconn classify-dim3
//
// Every subcommand accepts --format text|json. Exit status is 0 unless an
// error occurred; verdicts are reported in the output only.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "affconn/errors.hpp"
#include "affconn/report.hpp"

namespace {

using namespace affconn;

struct Options {
  std::string format = "text";
  std::string path;
  std::string builtin_name;
  std::string gamma_path;
  std::string map_path;
  std::size_t starts = SearchConfig{}.starts;
  std::uint64_t seed = SearchConfig{}.seed;
  std::size_t threads = SearchConfig{}.threads;
};

void add_format(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
}

void add_budget(CLI::App* cmd, Options& opt) {
  cmd->add_option("--starts", opt.starts, "Search start points")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opt.seed, "Search seed");
  cmd->add_option("--threads", opt.threads, "Search worker threads")->check(CLI::PositiveNumber);
}

SearchConfig budget(const Options& opt) {
  SearchConfig cfg;
  cfg.starts = opt.starts;
  cfg.seed = opt.seed;
  cfg.threads = opt.threads;
  return cfg;
}

NamedAlgebra input_algebra(const Options& opt) {
  if (!opt.builtin_name.empty()) return {opt.builtin_name, builtin(opt.builtin_name)};
  return load_algebra(opt.path);
}

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int run_analyze(const Options& opt) {
  const NamedAlgebra in = input_algebra(opt);
  const Report r = analyze(in.name, in.algebra, budget(opt));
  emit(opt, report_to_json(r), report_to_text(r));
  return 0;
}

int run_check_connection(const Options& opt) {
  const NamedAlgebra in = load_algebra(opt.path);
  const InvariantConnection conn = load_connection(opt.gamma_path, in.algebra);
  const ConnectionAnalysis a = analyze_connection("input", conn);
  json j{{"algebra", in.name},
         {"flat", a.flat},
         {"torsion_free", a.torsion_free},
         {"projectively_flat", a.projectively_flat ? json(*a.projectively_flat) : json(nullptr)},
         {"note", a.note}};
  std::string text = "connection on " + in.name + ": flat=" + (a.flat ? "yes" : "no") +
                     " torsion_free=" + (a.torsion_free ? "yes" : "no") + " projectively_flat=" +
                     (a.projectively_flat ? (*a.projectively_flat ? "yes" : "no") : "n/a") +
                     (a.note.empty() ? "" : " (" + a.note + ")") + "\n";
  emit(opt, j, text);
  return 0;
}

int run_check_embedding(const Options& opt) {
  const NamedAlgebra in = load_algebra(opt.path);
  const AffMap m = load_affmap(opt.map_path, in.algebra);
  const HomomorphismVerdict v = check_homomorphism(m);
  json j{{"algebra", in.name}, {"homomorphism", v.homomorphism}, {"injective", v.injective}};
  std::string text = "map on " + in.name + ": homomorphism=" + (v.homomorphism ? "yes" : "no");
  if (v.counterexample) {
    j["counterexample"] = {v.counterexample->first, v.counterexample->second};
    text += " (fails at basis pair " + std::to_string(v.counterexample->first) + "," +
            std::to_string(v.counterexample->second) + ")";
  } else {
    j["counterexample"] = nullptr;
  }
  text += std::string(" injective=") + (v.injective ? "yes" : "no");
  if (v.homomorphism) {
    const bool etale = is_etale(m);
    j["etale"] = etale;
    text += std::string(" etale=") + (etale ? "yes" : "no");
    if (etale) {
      const InvariantConnection conn = lsa_from_etale(m);
      j["induced_connection"] = connection_to_json(conn);
      j["induced_flat"] = is_flat(conn);
      j["induced_torsion_free"] = is_torsion_free(conn);
      text += std::string(" induced connection flat=") + (is_flat(conn) ? "yes" : "no") +
              " torsion_free=" + (is_torsion_free(conn) ? "yes" : "no");
    }
  } else {
    j["etale"] = nullptr;
  }
  emit(opt, j, text + "\n");
  return 0;
}

int run_search(const Options& opt) {
  const NamedAlgebra in = load_algebra(opt.path);
  const SearchOutcome out = search_flat_connection(in.algebra, budget(opt));
  emit(opt, search_to_json(in.name, out), search_to_text(in.name, out));
  return 0;
}

int run_classify(const Options& opt) {
  const auto rows = classify_dim3(budget(opt));
  emit(opt, classification_to_json(rows), classification_to_text(rows));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flat torsion-free invariant affine connections on complex Lie algebras"};
  app.require_subcommand(1);
  Options opt;

  auto* analyze_cmd = app.add_subcommand("analyze", "Structure, existence decision and connection analysis");
  auto* src = analyze_cmd->add_option("path", opt.path, "Algebra file");
  auto* bi = analyze_cmd->add_option("--builtin", opt.builtin_name, "Catalog algebra")
                 ->check(CLI::IsMember(builtin_names()));
  src->excludes(bi);
  add_format(analyze_cmd, opt);
  add_budget(analyze_cmd, opt);

  auto* conn_cmd = app.add_subcommand("check-connection", "Tensor checks for a Christoffel array");
  conn_cmd->add_option("path", opt.path, "Algebra file")->required();
  conn_cmd->add_option("--gamma", opt.gamma_path, "Connection file")->required();
  add_format(conn_cmd, opt);

  auto* emb_cmd = app.add_subcommand("check-embedding", "Check a map into aff(n)");
  emb_cmd->add_option("path", opt.path, "Algebra file")->required();
  emb_cmd->add_option("--map", opt.map_path, "Affine map file")->required();
  add_format(emb_cmd, opt);

  auto* search_cmd = app.add_subcommand("search", "Numeric search with exact verification");
  search_cmd->add_option("path", opt.path, "Algebra file")->required();
  add_format(search_cmd, opt);
  add_budget(search_cmd, opt);

  auto* classify_cmd = app.add_subcommand("classify-dim3", "Decide the four 3-dimensional unimodular algebras");
  add_format(classify_cmd, opt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze_cmd->parsed()) {
      if (opt.path.empty() && opt.builtin_name.empty()) {
        std::cerr << "analyze: give an algebra file or --builtin NAME\n";
        return 2;
      }
      return run_analyze(opt);
    }
    if (conn_cmd->parsed()) return run_check_connection(opt);
    if (emb_cmd->parsed()) return run_check_embedding(opt);
    if (search_cmd->parsed()) return run_search(opt);
    if (classify_cmd->parsed()) return run_classify(opt);
  } catch (const affconn::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
