#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fideal/analysis.hpp"
#include "fideal/binomial.hpp"
#include "fideal/complex.hpp"
#include "fideal/decomposition.hpp"
#include "fideal/enumeration.hpp"
#include "json_io.hpp"

namespace fideal::cli {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const char* pass_fail(bool pass) { return pass ? "pass" : "FAIL"; }
const char* yes_no(bool value) { return value ? "true" : "false"; }

SquareFreeIdeal load_ideal(const CliConfig& config, std::ostream& err) {
  std::string text;
  if (config.inline_ideal) {
    text = *config.inline_ideal;
  } else if (config.input_path) {
    std::ifstream in(*config.input_path);
    if (!in) throw InputError("cannot read " + *config.input_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  } else {
    throw InputError("no ideal given; pass a file or --ideal \"n=...; ...\"");
  }
  const bool strict = config.strict.value_or(config.subcommand == Subcommand::kCheck);
  std::vector<std::string> warnings;
  SquareFreeIdeal ideal = parse_ideal(text, strict ? ParseMode::kStrict : ParseMode::kLenient, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  return ideal;
}

void print_report_text(const SquareFreeIdeal& ideal, const ConditionReport& r, std::ostream& out) {
  out << "ideal: " << to_string(ideal) << '\n';
  out << "n: " << r.n << '\n';
  out << "generators: " << r.generators << '\n';
  if (r.pure_degree) {
    out << "pure of degree: " << *r.pure_degree << '\n';
  } else {
    out << "pure: false (degree " << degree(ideal) << ")\n";
  }
  out << "f(facet complex): " << to_string(r.f_facet) << '\n';
  if (r.direct_computed) out << "f(non-face complex): " << to_string(r.f_nonface) << '\n';
  if (r.height) {
    out << "condition (1) unmixed of height n-d: " << pass_fail(r.height->pass) << " (height "
        << r.height->observed << ", expected " << r.height->expected << ", unmixed "
        << yes_no(r.height->unmixed) << ")\n";
  }
  if (r.parity_count) {
    const auto& pc = *r.parity_count;
    out << "condition (2) C(n,d) even and |Ass| = s = C(n,d)/2: " << pass_fail(pc.pass) << " (C("
        << r.n << "," << *r.pure_degree << ") = " << pc.binom << ", s = " << pc.generators
        << ", |Ass| = " << pc.associated_primes << ")\n";
  }
  if (r.skeleton) {
    out << "condition (3) f_{d-2}(facet complex) = C(n,d-1): " << pass_fail(r.skeleton->pass)
        << " (" << r.skeleton->observed << ", expected " << r.skeleton->expected << ")\n";
  }
  if (r.characterization_verdict) {
    out << "characterization: " << yes_no(*r.characterization_verdict) << '\n';
  }
  out << "f-ideal: " << yes_no(r.f_ideal()) << '\n';
}

void report_violation(const ConditionReport& r, std::ostream& err) {
  err << "THEOREM-VIOLATION: characterization says " << yes_no(*r.characterization_verdict)
      << " but f(facet complex) " << to_string(r.f_facet)
      << (r.direct_verdict ? " == " : " != ") << "f(non-face complex) " << to_string(r.f_nonface)
      << '\n';
}

int run_check(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const SquareFreeIdeal ideal = load_ideal(config, err);
  const ConditionReport report = analyze(ideal, {.trust_characterization = config.fast});
  if (config.format == Format::kJson) {
    out << to_json(ideal, report).dump() << '\n';
  } else {
    print_report_text(ideal, report, out);
  }
  if (report.theorem_violation()) {
    report_violation(report, err);
    return kExitTheoremViolation;
  }
  if (config.expect_f_ideal && !report.f_ideal()) return kExitNotFIdeal;
  return kExitOk;
}

int run_fvector(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const SquareFreeIdeal ideal = load_ideal(config, err);
  const SimplicialComplex facet = facet_complex(ideal);
  const SimplicialComplex nonface = nonface_complex(ideal);
  const FVector f_facet = f_vector(facet);
  const FVector f_nonface = f_vector(nonface);
  if (config.format == Format::kJson) {
    nlohmann::json j = {{"n", ideal.n()},
                        {"facet_complex", to_json(facet)},
                        {"nonface_complex", to_json(nonface)},
                        {"f_facet", to_json(f_facet)},
                        {"f_nonface", to_json(f_nonface)}};
    out << j.dump() << '\n';
  } else {
    out << "facet complex: " << to_string(facet) << '\n';
    out << "f(facet complex): " << to_string(f_facet) << '\n';
    out << "non-face complex: " << to_string(nonface) << '\n';
    out << "f(non-face complex): " << to_string(f_nonface) << '\n';
  }
  return kExitOk;
}

int run_decompose(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const SquareFreeIdeal ideal = load_ideal(config, err);
  const Decomposition decomposition = primary_decomposition(ideal);
  if (config.format == Format::kJson) {
    out << to_json(decomposition).dump() << '\n';
  } else {
    out << to_string(decomposition) << '\n';
    out << "components: " << decomposition.components.size() << '\n';
    out << "height: " << decomposition.height << '\n';
    out << "unmixed: " << yes_no(decomposition.unmixed) << '\n';
  }
  return kExitOk;
}

int run_hilbert(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const SquareFreeIdeal ideal = load_ideal(config, err);
  const HilbertSeries series = hilbert_series(f_vector(nonface_complex(ideal)), ideal.n());
  if (config.format == Format::kJson) {
    out << to_json(series, config.terms).dump() << '\n';
  } else {
    out << "H(t) = " << to_string(series) << '\n';
    out << "Hilbert function:";
    const auto values = series.expand(config.terms - 1);
    for (std::size_t j = 0; j < values.size(); ++j) out << (j == 0 ? " " : ", ") << values[j];
    out << '\n';
  }
  return kExitOk;
}

CensusOptions census_options(const CliConfig& config) {
  CensusOptions o;
  o.workers = config.workers;
  o.representatives = config.representatives;
  o.orbits = config.orbits;
  o.force = config.force;
  return o;
}

void print_census_text(const CensusEntry& e, std::ostream& out) {
  out << "census n=" << e.n << " d=" << e.d << " C(n,d)=" << e.binom;
  if (e.parity_pruned) {
    out << " (odd: parity-pruned, no f-ideals)\n";
  } else {
    out << " s=" << e.s << '\n';
  }
  out << "scanned: " << e.candidates_scanned << '\n';
  out << "full support: " << e.full_support << '\n';
  out << "f-ideals (direct): " << e.f_ideals_direct << '\n';
  out << "f-ideals (characterization): " << e.f_ideals_characterization << '\n';
  out << "disagreements: " << e.disagreements << '\n';
  out << "necessary conditions pass: " << e.necessary_pass << '\n';
  out << "f-ideals failing necessary conditions: " << e.necessity_violations << '\n';
  out << "necessary but not f-ideal: " << e.non_sufficiency_witnesses << '\n';
  out << "elapsed: " << e.elapsed.count() << " ms\n";
  if (!e.representatives.empty()) {
    out << "representatives:\n";
    for (const auto& i : e.representatives) out << render_ideal(i);
  }
  if (!e.orbit_representatives.empty()) {
    out << "orbits: " << e.orbit_representatives.size() << '\n';
    for (const auto& i : e.orbit_representatives) out << render_ideal(i);
  }
}

int run_census(const CliConfig& config, std::ostream& out, std::ostream& err) {
  const CensusEntry entry = census(config.n, config.d, census_options(config));
  if (config.format == Format::kJson) {
    out << to_json(entry).dump() << '\n';
  } else {
    print_census_text(entry, out);
  }
  if (entry.disagreements != 0) {
    err << "THEOREM-VIOLATION: " << entry.disagreements
        << " candidates where the characterization and the direct f-vector comparison disagree\n";
    for (const auto& i : entry.disagreement_examples) err << "  " << to_string(i) << '\n';
    return kExitTheoremViolation;
  }
  return kExitOk;
}

int run_suite(const CliConfig& config, std::ostream& out, std::ostream& err) {
  SuiteOptions options;
  options.census = census_options(config);
  options.off_count_samples = config.samples;
  options.seed = config.seed;
  std::vector<std::pair<int, int>> pairs = config.pairs;
  if (pairs.empty()) pairs = {{4, 2}, {5, 2}, {5, 3}, {6, 3}};
  const SuiteReport report = equivalence_suite(pairs, options);
  if (config.format == Format::kJson) {
    out << to_json(report).dump() << '\n';
  } else {
    for (const PairReport& p : report.pairs) {
      out << "(" << p.census.n << "," << p.census.d << "): census scanned " << p.census.candidates_scanned
          << ", f-ideals " << p.census.f_ideals_direct << " direct / "
          << p.census.f_ideals_characterization << " characterization; "
          << (p.swept_all_sizes ? "all-sizes sweep " : "off-count sample ") << p.off_scanned
          << " (pure " << p.off_pure << "), off-count f-ideals " << p.off_count_f_ideals
          << "; disagreements " << p.disagreements() << '\n';
    }
    out << "total disagreements: " << report.total_disagreements() << '\n';
  }
  if (report.total_disagreements() != 0) {
    err << "THEOREM-VIOLATION: " << report.total_disagreements() << " disagreements\n";
    return kExitTheoremViolation;
  }
  return kExitOk;
}

}  // namespace

int default_workers() {
  if (const char* env = std::getenv("FIDEAL_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  return 1;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.subcommand) {
      case Subcommand::kCheck: return run_check(config, out, err);
      case Subcommand::kFvector: return run_fvector(config, out, err);
      case Subcommand::kDecompose: return run_decompose(config, out, err);
      case Subcommand::kHilbert: return run_hilbert(config, out, err);
      case Subcommand::kCensus: return run_census(config, out, err);
      case Subcommand::kSuite: return run_suite(config, out, err);
    }
  } catch (const NotPureError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Square-free monomial ideals: facet and Stanley-Reisner complexes, f-vectors, "
               "primary decompositions and the f-ideal property"};
  app.require_subcommand(1);
  CliConfig config;
  config.workers = default_workers();
  std::string format = "text";
  bool strict = false;
  bool lenient = false;
  std::vector<std::string> pair_args;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  const auto add_ideal_input = [&](CLI::App* sub) {
    sub->add_option("input", config.input_path, "Ideal file");
    sub->add_option("--ideal", config.inline_ideal, "Inline ideal, e.g. \"n=5; 124 125 345 145 235\"");
    sub->add_flag("--strict", strict, "Reject duplicate or non-minimal generators");
    sub->add_flag("--lenient", lenient, "Drop duplicate or non-minimal generators with a warning");
    add_common(sub);
  };
  const auto add_enumeration = [&](CLI::App* sub) {
    sub->add_option("--workers", config.workers, "Worker threads (default $FIDEAL_WORKERS or 1)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--representatives", config.representatives, "f-ideals to print")
        ->check(CLI::NonNegativeNumber);
    sub->add_flag("--orbits", config.orbits, "One canonical f-ideal per vertex-relabeling orbit (n <= 6)");
    sub->add_flag("--force", config.force, "Run above the 10^9 candidate limit");
    add_common(sub);
  };

  auto* check = app.add_subcommand("check", "Report the f-ideal conditions and verdict");
  add_ideal_input(check);
  check->add_flag("--expect-f-ideal", config.expect_f_ideal, "Exit 1 unless the ideal is an f-ideal");
  check->add_flag("--fast", config.fast, "Trust the characterization; skip the non-face f-vector");

  auto* fvector = app.add_subcommand("fvector", "Print both complexes and their f-vectors");
  add_ideal_input(fvector);

  auto* decompose = app.add_subcommand("decompose", "Print the primary decomposition");
  add_ideal_input(decompose);

  auto* hilbert = app.add_subcommand("hilbert", "Print the Hilbert series of S/I");
  add_ideal_input(hilbert);
  hilbert->add_option("--terms", config.terms, "Hilbert function values to print")
      ->check(CLI::PositiveNumber);

  auto* census_cmd = app.add_subcommand("census", "Enumerate f-ideals of degree d on n variables");
  census_cmd->add_option("--n", config.n, "Variables")->required();
  census_cmd->add_option("--d", config.d, "Degree")->required();
  add_enumeration(census_cmd);

  auto* suite = app.add_subcommand("suite", "Cross-check the characterization against the definition");
  suite->add_option("--pairs", pair_args, "n,d pairs (default 4,2 5,2 5,3 6,3)");
  suite->add_option("--seed", config.seed, "Seed for off-count sampling");
  suite->add_option("--samples", config.samples, "Off-count samples per pair")
      ->check(CLI::NonNegativeNumber);
  add_enumeration(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help lands here with exit code 0.
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  if (check->parsed()) config.subcommand = Subcommand::kCheck;
  if (fvector->parsed()) config.subcommand = Subcommand::kFvector;
  if (decompose->parsed()) config.subcommand = Subcommand::kDecompose;
  if (hilbert->parsed()) config.subcommand = Subcommand::kHilbert;
  if (census_cmd->parsed()) config.subcommand = Subcommand::kCensus;
  if (suite->parsed()) config.subcommand = Subcommand::kSuite;
  config.format = format == "json" ? Format::kJson : Format::kText;
  if (strict && lenient) {
    err << "error: --strict and --lenient are exclusive\n";
    return kExitInputError;
  }
  if (strict) config.strict = true;
  if (lenient) config.strict = false;
  if (config.input_path && config.inline_ideal) {
    err << "error: give either a file or --ideal, not both\n";
    return kExitInputError;
  }
  for (const std::string& p : pair_args) {
    int n = 0;
    int d = 0;
    char comma = 0;
    std::istringstream in(p);
    if (!(in >> n >> comma >> d) || comma != ',' || !in.eof()) {
      err << "error: malformed pair '" << p << "', expected n,d\n";
      return kExitInputError;
    }
    config.pairs.emplace_back(n, d);
  }
  return run(config, out, err);
}

}  // namespace fideal::cli
