#include "nr/experiments.hpp"

#include "nr/darboux.hpp"
#include "nr/normed.hpp"
#include "nr/rng.hpp"

#include <json.hpp>

#include <exception>
#include <iostream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nr {

namespace {

constexpr unsigned kApproxDigits = 6;

constexpr TagStrategy kAllStrategies[] = {
    TagStrategy::all_rational_midpoint,
    TagStrategy::all_irrational,
    TagStrategy::mixed_random,
    TagStrategy::low_index_rational,
};

std::vector<std::uint64_t> schedule(unsigned max_exponent) {
  std::vector<std::uint64_t> ns;
  for (unsigned e = 0; e <= max_exponent; ++e)
    ns.push_back(std::uint64_t{1} << e);
  return ns;
}

std::uint64_t parse_u64(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const std::uint64_t value = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("malformed ") + what + " '" +
                                text + "'");
  }
}

TaggedPartition left_tagged(const Partition& p) {
  std::vector<AlgebraicTag> tags;
  tags.reserve(p.size());
  for (std::size_t j = 0; j < p.size(); ++j)
    tags.emplace_back(p.breakpoints()[j]);
  return TaggedPartition(p, std::move(tags));
}

}  // namespace

int run_converge(const RunConfig& cfg, std::ostream& out) {
  if (cfg.max_exponent > 16)
    throw std::invalid_argument("converge: max exponent limited to 16");

  RationalEnumeration enumeration;
  const CounterexamplePath path(enumeration);
  const auto identity = [](const AlgebraicTag& t) {
    return t.rational_part();
  };

  struct PathRow {
    std::uint64_t n;
    std::string partition;
    std::string strategy;
    RiemannSumReport report;
    bool bound_holds;
  };
  struct IdentityRow {
    std::uint64_t n;
    Rational value;
    Rational abs_error;
    Rational diameter;
  };

  std::vector<PathRow> path_rows;
  std::vector<IdentityRow> identity_rows;
  std::uint64_t stream = 0;
  bool all_held = true;

  try {
    for (const std::uint64_t n : schedule(cfg.max_exponent)) {
      const Partition uniform = Partition::uniform(Rational(0), Rational(1), n);
      const Partition random =
          Partition::random(Rational(0), Rational(1), n,
                            derive_seed(cfg.seed, stream++));
      for (const auto* kind : {&uniform, &random}) {
        for (const TagStrategy strategy : kAllStrategies) {
          const TaggedPartition tp =
              tag_with_strategy(*kind, strategy, derive_seed(cfg.seed, stream++));
          RiemannSumReport report = riemann_sum(path, tp);
          const bool holds = report.sum_norm <= report.diameter;
          all_held = all_held && holds &&
                     report.sum_norm == report.closed_form_norm;
          path_rows.push_back({n, kind == &uniform ? "uniform" : "random",
                               std::string(tag_strategy_name(strategy)),
                               std::move(report), holds});
        }
      }
      const Rational value = riemann_sum_value(left_tagged(uniform), identity);
      identity_rows.push_back({n, value, abs(value - Rational(1, 2)),
                               uniform.diameter()});
    }
  } catch (const std::logic_error& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return 1;
  }

  if (cfg.format == OutputFormat::csv) {
    out << "n,partition,strategy,diameter,sum_norm,closed_form_norm,"
           "bound_holds";
    if (cfg.include_approx) out << ",sum_norm_approx,diameter_approx";
    out << '\n';
    for (const PathRow& row : path_rows) {
      out << row.n << ',' << row.partition << ',' << row.strategy << ','
          << row.report.diameter << ',' << row.report.sum_norm << ','
          << row.report.closed_form_norm << ','
          << (row.bound_holds ? "true" : "false");
      if (cfg.include_approx)
        out << ',' << row.report.sum_norm.decimal(kApproxDigits) << ','
            << row.report.diameter.decimal(kApproxDigits);
      out << '\n';
    }
    out << "\nn,identity_value,abs_error,diameter";
    if (cfg.include_approx) out << ",identity_value_approx";
    out << '\n';
    for (const IdentityRow& row : identity_rows) {
      out << row.n << ',' << row.value << ',' << row.abs_error << ','
          << row.diameter;
      if (cfg.include_approx) out << ',' << row.value.decimal(kApproxDigits);
      out << '\n';
    }
  } else {
    nlohmann::ordered_json doc;
    auto& path_json = doc["path_rows"] = nlohmann::ordered_json::array();
    for (const PathRow& row : path_rows) {
      nlohmann::ordered_json r;
      r["n"] = row.n;
      r["partition"] = row.partition;
      r["strategy"] = row.strategy;
      r["diameter"] = row.report.diameter.str();
      r["sum_norm"] = row.report.sum_norm.str();
      r["closed_form_norm"] = row.report.closed_form_norm.str();
      r["bound_holds"] = row.bound_holds;
      if (cfg.include_approx) {
        r["sum_norm_approx"] = row.report.sum_norm.decimal(kApproxDigits);
        r["diameter_approx"] = row.report.diameter.decimal(kApproxDigits);
      }
      path_json.push_back(std::move(r));
    }
    auto& id_json = doc["identity_rows"] = nlohmann::ordered_json::array();
    for (const IdentityRow& row : identity_rows) {
      nlohmann::ordered_json r;
      r["n"] = row.n;
      r["identity_value"] = row.value.str();
      r["abs_error"] = row.abs_error.str();
      r["diameter"] = row.diameter.str();
      if (cfg.include_approx)
        r["identity_value_approx"] = row.value.decimal(kApproxDigits);
      id_json.push_back(std::move(r));
    }
    out << doc.dump(2) << '\n';
  }
  return all_held ? 0 : 1;
}

int run_certify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.epsilon.sign() <= 0)
    throw std::invalid_argument("certify: --epsilon must be a positive "
                                "rational, e.g. 1/10");
  RationalEnumeration enumeration;
  const Certificate cert =
      certify_epsilon_delta(enumeration, cfg.epsilon, cfg.families,
                            cfg.count_per_family, cfg.seed);
  out << cert.to_json().dump(2) << '\n';
  return cert.all_passed ? 0 : 1;
}

int run_darboux(const RunConfig& cfg, std::ostream& out) {
  BoundedFnOracle oracle;
  if (cfg.oracle_name == "dirichlet") {
    oracle = dirichlet_oracle();
  } else if (cfg.oracle_name == "identity") {
    oracle = identity_oracle();
  } else {
    throw std::invalid_argument("darboux: --oracle must be 'dirichlet' or "
                                "'identity', got '" + cfg.oracle_name + "'");
  }

  // "uniform:N" or "random:N:SEED"
  const std::string& spec = cfg.partition_spec;
  const std::size_t first = spec.find(':');
  if (first == std::string::npos)
    throw std::invalid_argument(
        "darboux: --partition must be uniform:N or random:N:SEED");
  const std::string kind = spec.substr(0, first);
  Partition p = Partition::uniform(Rational(0), Rational(1), 1);
  std::uint64_t label = 0;
  if (kind == "uniform") {
    const std::uint64_t n = parse_u64(spec.substr(first + 1), "interval count");
    p = Partition::uniform(Rational(0), Rational(1), n);
    label = n;
  } else if (kind == "random") {
    const std::size_t second = spec.find(':', first + 1);
    if (second == std::string::npos)
      throw std::invalid_argument("darboux: random partitions need a seed, "
                                  "random:N:SEED");
    const std::uint64_t n =
        parse_u64(spec.substr(first + 1, second - first - 1),
                  "interval count");
    const std::uint64_t seed = parse_u64(spec.substr(second + 1), "seed");
    p = Partition::random(Rational(0), Rational(1), n, seed);
    label = seed;
  } else {
    throw std::invalid_argument("darboux: unknown partition kind '" + kind +
                                "'");
  }

  const Rational lower = lower_sum(oracle, p);
  const Rational upper = upper_sum(oracle, p);
  const Rational gap = upper - lower;
  if (cfg.format == OutputFormat::csv) {
    out << "n_or_seed,lower,upper,gap\n"
        << label << ',' << lower << ',' << upper << ',' << gap << '\n';
  } else {
    nlohmann::ordered_json row;
    row["n_or_seed"] = label;
    row["lower"] = lower.str();
    row["upper"] = upper.str();
    row["gap"] = gap.str();
    nlohmann::ordered_json doc;
    doc["rows"] = nlohmann::ordered_json::array({row});
    out << doc.dump(2) << '\n';
  }
  return gap >= Rational(0) ? 0 : 1;
}

int run_enumerate(const RunConfig& cfg, std::ostream& out) {
  if (cfg.enumerate_count == 0)
    throw std::invalid_argument("enumerate: --count must be >= 1");
  RationalEnumeration enumeration;
  if (cfg.format == OutputFormat::csv) {
    out << "k,value\n";
    for (std::uint64_t k = 0; k < cfg.enumerate_count; ++k)
      out << k << ',' << enumeration.value_at(k) << '\n';
  } else {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::uint64_t k = 0; k < cfg.enumerate_count; ++k) {
      nlohmann::ordered_json r;
      r["k"] = k;
      r["value"] = enumeration.value_at(k).str();
      rows.push_back(std::move(r));
    }
    nlohmann::ordered_json doc;
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
  }
  return 0;
}

}  // namespace nr
