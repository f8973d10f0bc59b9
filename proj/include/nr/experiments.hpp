#pragma once

#include "nr/path.hpp"
#include "nr/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace nr {

enum class OutputFormat { csv, json };

// One experiment run: seeds fully determine all randomized content, so
// identical configs reproduce identical output bytes. Every emitted number is
// an exact rational "p/q"; decimal columns are opt-in and labeled _approx.
struct RunConfig {
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::csv;

  // converge: partition sizes n = 1, 2, 4, ..., 2^max_exponent
  unsigned max_exponent = 8;
  bool include_approx = false;

  // certify
  Rational epsilon;
  std::vector<PartitionFamily> families = {PartitionFamily::uniform,
                                           PartitionFamily::random,
                                           PartitionFamily::adversarial};
  std::uint64_t count_per_family = 500;

  // darboux
  std::string oracle_name;     // "dirichlet" | "identity"
  std::string partition_spec;  // "uniform:N" | "random:N:SEED"

  // enumerate
  std::uint64_t enumerate_count = 0;
};

// Exit status 0 when every exact invariant encountered held, nonzero
// otherwise; std::invalid_argument signals a usage error.
int run_converge(const RunConfig& cfg, std::ostream& out);
int run_certify(const RunConfig& cfg, std::ostream& out);
int run_darboux(const RunConfig& cfg, std::ostream& out);
int run_enumerate(const RunConfig& cfg, std::ostream& out);

}  // namespace nr
