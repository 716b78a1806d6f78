#include <chrono>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "zwdiag/io.hpp"
#include "zwdiag/oracle.hpp"
#include "zwdiag/pipeline.hpp"

namespace {

using namespace zwdiag;

void emit(std::string const &text, std::string const &path)
{
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out.flush())
    throw std::runtime_error("write to '" + path + "' failed");
}

std::string slurp(std::string const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string dot_with_counts(DiagramSet const &set)
{
  std::string out;
  std::istringstream counts(io::render_stage_counts(set.stats));
  for (std::string line; std::getline(counts, line);)
    out += "// " + line + "\n";
  out += "// total: " + std::to_string(set.diagrams.size()) + "\n";
  return out + io::render_dot(set.diagrams);
}

struct EnumerateArgs
{
  int n = 0;
  std::string format = "json";
  std::string out;
  bool stats = false;
  bool dedupe_swap = true;
  unsigned jobs = 1;
  std::string stage_dump;
};

int cmd_enumerate(EnumerateArgs const &a)
{
  PipelineOptions options;
  options.dedupe_swap = a.dedupe_swap;
  options.jobs = a.jobs;

  StageArtifacts artifacts;
  auto const start = std::chrono::steady_clock::now();
  DiagramSet const set = run_pipeline(a.n, options, a.stage_dump.empty() ? nullptr : &artifacts);
  double const wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (a.format == "json")
    emit(io::write_diagram_set(set), a.out);
  else if (a.format == "dot")
    emit(dot_with_counts(set), a.out);
  else
    emit(io::render_table(set), a.out);

  if (!a.stage_dump.empty())
    io::write_stage_dump(a.stage_dump, set, artifacts);

  if (a.stats) {
    unsigned const jobs = a.jobs ? a.jobs : std::max(1u, std::thread::hardware_concurrency());
    std::cerr << io::render_stage_counts(set.stats) << "final " << set.stats.final_count << "\n"
              << io::render_timings(set.stats, jobs) << "wall " << wall << "s\n";
  }
  return 0;
}

int cmd_oracle(int n, bool compare, bool dedupe_swap)
{
  DiagramSet const brute = oracle::brute_force_pipeline(n, dedupe_swap);
  std::cout << "oracle n=" << n << ": " << brute.diagrams.size() << " diagrams\n";
  if (!compare)
    return 0;

  PipelineOptions options;
  options.dedupe_swap = dedupe_swap;
  DiagramSet const staged = run_pipeline(n, options);
  std::cout << "pipeline n=" << n << ": " << staged.diagrams.size() << " diagrams\n";

  std::size_t i = 0, j = 0, differences = 0;
  while (i < brute.keys.size() || j < staged.keys.size()) {
    if (j == staged.keys.size() || (i < brute.keys.size() && brute.keys[i] < staged.keys[j])) {
      std::cout << "only in oracle:   " << brute.diagrams[i++].encode() << "\n";
      ++differences;
    } else if (i == brute.keys.size() || staged.keys[j] < brute.keys[i]) {
      std::cout << "only in pipeline: " << staged.diagrams[j++].encode() << "\n";
      ++differences;
    } else {
      ++i;
      ++j;
    }
  }
  std::cout << (differences ? "MISMATCH" : "MATCH") << "\n";
  return differences ? 1 : 0;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Enumerate two-colored zw-diagrams up to vertex relabeling"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  EnumerateArgs en;
  auto *enumerate = app.add_subcommand("enumerate", "run the staged enumeration pipeline");
  enumerate->add_option("--n", en.n, "number of vertices (3..8)")->required();
  enumerate->add_option("--format", en.format, "output format")
      ->check(CLI::IsMember({"json", "dot", "table"}))
      ->capture_default_str();
  enumerate->add_option("--out", en.out, "output file (default: stdout)");
  enumerate->add_flag("--stats", en.stats, "print stage counts and timings to stderr");
  enumerate->add_flag("--dedupe-swap,!--no-dedupe-swap", en.dedupe_swap,
                      "identify (A|B) with (B|A) when traces agree (default on)");
  enumerate->add_option("--jobs", en.jobs, "worker threads, 0 = all cores")->capture_default_str();
  enumerate->add_option("--stage-dump", en.stage_dump, "directory for per-stage matrix lists");

  int oracle_n = 0;
  bool compare = false;
  bool oracle_swap = true;
  auto *oracle_cmd = app.add_subcommand("oracle", "brute-force reference enumeration (n <= 4)");
  oracle_cmd->add_option("--n", oracle_n, "number of vertices (3..4)")->required();
  oracle_cmd->add_flag("--compare", compare, "diff against the staged pipeline; exit 1 on mismatch");
  oracle_cmd->add_flag("--dedupe-swap,!--no-dedupe-swap", oracle_swap, "identify (A|B) with (B|A)");

  std::string annotate_input;
  std::string annotate_format = "text";
  auto *annotate = app.add_subcommand("annotate", "emit vorticity constraints for each diagram");
  annotate->add_option("--input", annotate_input, "diagram JSON file")->required();
  annotate->add_option("--format", annotate_format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string render_input, render_out;
  auto *render = app.add_subcommand("render", "write DOT graphs for a diagram JSON file");
  render->add_option("--input", render_input, "diagram JSON file")->required();
  render->add_option("--out", render_out, "DOT output file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enumerate)
      return cmd_enumerate(en);
    if (*oracle_cmd)
      return cmd_oracle(oracle_n, compare, oracle_swap);
    if (*annotate) {
      std::cout << io::write_constraints(io::read_diagrams(slurp(annotate_input)), annotate_format == "json");
      return 0;
    }
    if (*render) {
      emit(io::render_dot(io::read_diagrams(slurp(render_input))), render_out);
      return 0;
    }
  } catch (std::exception const &e) {
    std::cerr << "zwdiag: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
