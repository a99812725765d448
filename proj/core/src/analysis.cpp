#include "fideal/analysis.hpp"

#include "fideal/binomial.hpp"
#include "fideal/decomposition.hpp"

namespace fideal {

namespace {

int require_pure_degree(const SquareFreeIdeal& ideal) {
  const int d = pure_degree(ideal);
  if (d == 0) throw NotPureError("ideal is not pure (mixed degrees or partial support)");
  if (d < 2) throw NotPureError("characterization needs degree >= 2, got 1");
  return d;
}

void fill_direct(const SquareFreeIdeal& ideal, ConditionReport& report) {
  report.f_nonface = f_vector(nonface_complex(ideal));
  report.direct_verdict = report.f_facet == report.f_nonface;
  report.direct_computed = true;
}

ConditionReport necessary_part(const SquareFreeIdeal& ideal, int d) {
  ConditionReport report;
  report.n = ideal.n();
  report.generators = ideal.generator_count();
  report.pure_degree = d;
  report.f_facet = f_vector(facet_complex(ideal));

  const auto covers = minimal_vertex_covers(ideal);
  HeightCondition h;
  h.observed = covers.front().cardinality();
  h.expected = ideal.n() - d;
  h.unmixed = covers.front().cardinality() == covers.back().cardinality();
  h.pass = h.unmixed && h.observed == h.expected;
  report.height = h;

  ParityCountCondition pc;
  pc.binom = binomial(ideal.n(), d);
  pc.generators = ideal.generator_count();
  pc.associated_primes = static_cast<int>(covers.size());
  pc.parity = pc.binom % 2 == 0;
  pc.pass = pc.parity && static_cast<std::uint64_t>(pc.generators) == pc.binom / 2 &&
            pc.associated_primes == pc.generators;
  report.parity_count = pc;
  return report;
}

}  // namespace

bool is_f_ideal(const SquareFreeIdeal& ideal) {
  return f_vector(facet_complex(ideal)) == f_vector(nonface_complex(ideal));
}

ConditionReport check_necessary_conditions(const SquareFreeIdeal& ideal) {
  ConditionReport report = necessary_part(ideal, require_pure_degree(ideal));
  fill_direct(ideal, report);
  return report;
}

ConditionReport check_characterization(const SquareFreeIdeal& ideal,
                                       const CharacterizationOptions& options) {
  const int d = require_pure_degree(ideal);
  ConditionReport report = necessary_part(ideal, d);

  SkeletonCondition sk;
  sk.observed = report.f_facet.at(d - 2);
  sk.expected = binomial(ideal.n(), d - 1);
  sk.pass = sk.observed == sk.expected;
  report.skeleton = sk;

  report.characterization_verdict = report.height->pass && report.parity_count->pass && sk.pass;
  if (!options.trust_characterization) fill_direct(ideal, report);
  return report;
}

ConditionReport analyze(const SquareFreeIdeal& ideal, const CharacterizationOptions& options) {
  const int d = pure_degree(ideal);
  if (d >= 2) return check_characterization(ideal, options);
  ConditionReport report;
  report.n = ideal.n();
  report.generators = ideal.generator_count();
  if (d == 1) report.pure_degree = 1;
  report.f_facet = f_vector(facet_complex(ideal));
  fill_direct(ideal, report);
  return report;
}

}  // namespace fideal
