// nrlab — exact-arithmetic experiments on Riemann sums of a sequence-space
// path whose pointwise norm is the rational indicator. All randomness is
// seeded (flag --seed, env NR_SEED); identical invocations produce identical
// bytes. Numbers are exact rationals "p/q" unless a column says _approx.

#include "nr/experiments.hpp"
#include "nr/path.hpp"
#include "nr/rational.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("NR_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed NR_SEED '" << env << "'\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Riemann-integration laboratory for sequence-space "
               "paths (all arithmetic rational, all runs seed-reproducible)"};
  app.require_subcommand(1);

  nr::RunConfig cfg;
  cfg.seed = default_seed();
  std::string format = "csv";
  std::string out_path;
  std::string epsilon_text;
  std::vector<std::string> family_names;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "seed for all randomized content");
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out_path, "write output to a file instead of "
                                       "standard output");
  };

  CLI::App* converge = app.add_subcommand(
      "converge", "Riemann-sum sweep over partition sizes and tag strategies");
  add_common(converge);
  converge->add_option("--max-exp", cfg.max_exponent,
                       "largest partition size as a power of two")
      ->check(CLI::Range(0u, 16u));
  converge->add_flag("--approx", cfg.include_approx,
                     "append truncated-decimal columns (display only)");

  CLI::App* certify = app.add_subcommand(
      "certify", "epsilon-delta certificate: every Riemann sum of a "
                 "sub-epsilon-diameter partition has norm below epsilon");
  add_common(certify);
  certify->add_option("--epsilon", epsilon_text, "positive rational p/q")
      ->required();
  certify->add_option("--families", family_names,
                      "uniform,random,adversarial (default: all)")
      ->delimiter(',');
  certify->add_option("--count", cfg.count_per_family,
                      "tagged partitions per family");

  CLI::App* darboux = app.add_subcommand(
      "darboux", "upper/lower Darboux sums of an oracle-backed function");
  add_common(darboux);
  darboux->add_option("--oracle", cfg.oracle_name, "dirichlet | identity")
      ->required();
  darboux->add_option("--partition", cfg.partition_spec,
                      "uniform:N | random:N:SEED")
      ->required();

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "the canonical enumeration of the rationals in [0,1]");
  add_common(enumerate);
  enumerate->add_option("--count", cfg.enumerate_count, "rows to emit")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.format = format == "json" ? nr::OutputFormat::json
                                  : nr::OutputFormat::csv;
    if (certify->parsed()) {
      cfg.epsilon = nr::Rational::parse(epsilon_text);
      if (!family_names.empty()) {
        cfg.families.clear();
        for (const std::string& name : family_names)
          cfg.families.push_back(nr::partition_family_from_name(name));
      }
    }

    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file)
        throw std::invalid_argument("cannot open output file '" + out_path +
                                    "'");
    }
    std::ostream& out = out_path.empty() ? std::cout : file;

    if (converge->parsed()) return nr::run_converge(cfg, out);
    if (certify->parsed()) return nr::run_certify(cfg, out);
    if (darboux->parsed()) return nr::run_darboux(cfg, out);
    return nr::run_enumerate(cfg, out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
