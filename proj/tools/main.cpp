#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/config.hpp"

namespace {

using rll::cli::RunConfig;

void add_common(CLI::App* sub, RunConfig& c, std::string& m_text) {
  sub->add_option("--m", m_text, "constraint order m >= 3 (dims also takes a:b or a,b,c)");
  sub->add_option("--p", c.p, "probability as num/den (exact) or decimal (float)");
  sub->add_option("--n", c.n, "length / horizon");
  sub->add_option("--depth", c.depth, "shift depth for gamma-check");
  sub->add_option("--kmax", c.kmax, "last k of a pullback series");
  sub->add_option("--k", c.k, "pullback order for measure");
  sub->add_option("--seed", c.seed, "64-bit seed");
  sub->add_option("--stream", c.stream, "generator stream index");
  sub->add_option("--mode", c.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  sub->add_option("--tol", c.tol, "root tolerance");
  sub->add_option("--format", c.format, "json, csv or text");
  sub->add_option("--out", c.out, "write output to this file");
  sub->add_option("--threads", c.threads, "worker threads (default: RLLSHIFT_THREADS)");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig c;
  std::string config_path;
  bool dump_config = false;
  std::string m_text;

  CLI::App app{"Run-length-constrained shifts: measures, invariant frequencies, dimensions"};
  app.require_subcommand(1);
  app.add_option("--config", config_path, "replay a saved RunConfig (JSON)");
  app.add_flag("--dump-config", dump_config, "print the parsed RunConfig as JSON and exit");

  auto* enumerate = app.add_subcommand("enumerate", "admissible words of length n");
  add_common(enumerate, c, m_text);
  enumerate->add_flag("--count", c.count_only, "print |Lambda_m^n| only");
  enumerate->add_flag("--occurrences", c.occurrences, "emit occurrence reports as JSON lines");

  auto* measure = app.add_subcommand("measure", "cylinder measures and pullbacks");
  add_common(measure, c, m_text);
  measure->add_option("--w", c.word, "word");
  measure->add_flag("--series", c.series, "CSV series k,a,b,c,d,cesaro_a up to --kmax");

  auto* lambda = app.add_subcommand("lambda", "invariant mass of [0] three ways");
  add_common(lambda, c, m_text);

  auto* sample = app.add_subcommand("sample", "seeded chain sample with frequency and local dimension");
  add_common(sample, c, m_text);
  sample->add_option("--stride", c.stride, "CSV thinning stride");

  auto* dims = app.add_subcommand("dims", "dimension table over an (m,p) grid");
  add_common(dims, c, m_text);

  auto* gamma = app.add_subcommand("gamma-check", "univoque condition on a window or periodic sequence");
  add_common(gamma, c, m_text);
  gamma->add_option("--w", c.word, "finite window of '0'/'1'");
  gamma->add_option("--periodic", c.periodic, "preperiod:period or period");
  gamma->add_option("--variant", c.variant, "strict (Gamma) or weak (Gamma')")
      ->check(CLI::IsMember({"strict", "weak"}));

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  add_common(verify, c, m_text);
  verify->add_flag("--quick", c.quick, "reduced exhaustive sizes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : rll::cli::kExitUsage;
  }

  c.subcommand = app.get_subcommands().front()->get_name();
  if (!m_text.empty()) {
    if (m_text.find_first_not_of("0123456789") == std::string::npos) {
      c.m = std::stoi(m_text);
    } else if (c.subcommand == "dims") {
      c.m_spec = m_text;
    } else {
      std::cerr << "error: --m must be an integer\n";
      return rll::cli::kExitUsage;
    }
  }
  if (c.subcommand == "dims" && c.p.find_first_of(":,") != std::string::npos) c.p_spec = c.p;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot read config '" << config_path << "'\n";
      return rll::cli::kExitUsage;
    }
    try {
      c = rll::cli::config_from_json(nlohmann::json::parse(in));
    } catch (const std::exception& e) {
      std::cerr << "error: bad config: " << e.what() << '\n';
      return rll::cli::kExitUsage;
    }
  }
  if (dump_config) {
    std::cout << rll::cli::to_json(c).dump(2) << '\n';
    return 0;
  }
  return rll::cli::run_command(c, std::cout, std::cerr);
}
