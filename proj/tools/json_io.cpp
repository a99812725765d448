#include "json_io.hpp"

namespace fideal::cli {

using nlohmann::json;

json to_json(VertexSet set) { return set.vertices(); }

json to_json(const FVector& fv) { return fv.counts; }

json to_json(const SimplicialComplex& complex) {
  json facets = json::array();
  for (VertexSet f : complex.facets()) facets.push_back(to_json(f));
  return facets;
}

json to_json(const Decomposition& decomposition) {
  json components = json::array();
  for (const PrimeComponent& p : decomposition.components) components.push_back(to_json(p.variables));
  return {{"components", components}, {"height", decomposition.height}, {"unmixed", decomposition.unmixed}};
}

json to_json(const HilbertSeries& series, int terms) {
  return {{"n", series.n},
          {"numerator", series.numerator},
          {"denominator_power", series.denominator_power},
          {"coefficients", series.expand(terms - 1)}};
}

json to_json(const SquareFreeIdeal& ideal, const ConditionReport& report) {
  json j;
  j["n"] = report.n;
  j["d"] = report.pure_degree ? *report.pure_degree : degree(ideal);
  j["s"] = report.generators;
  j["pure"] = report.pure_degree.has_value();
  if (report.height && report.parity_count) {
    json conditions;
    conditions["height"] = {{"pass", report.height->pass},
                            {"observed", report.height->observed},
                            {"expected", report.height->expected},
                            {"unmixed", report.height->unmixed}};
    conditions["parity_count"] = {{"pass", report.parity_count->pass},
                                  {"binom", report.parity_count->binom},
                                  {"s", report.parity_count->generators},
                                  {"ass", report.parity_count->associated_primes}};
    if (report.skeleton) {
      conditions["skeleton"] = {{"pass", report.skeleton->pass},
                                {"observed", report.skeleton->observed},
                                {"expected", report.skeleton->expected}};
    }
    j["conditions"] = conditions;
  } else {
    j["conditions"] = nullptr;
  }
  j["f_facet"] = to_json(report.f_facet);
  if (report.direct_computed) {
    j["f_nonface"] = to_json(report.f_nonface);
  } else {
    j["f_nonface"] = nullptr;
  }
  j["characterization"] = report.characterization_verdict
                              ? json(*report.characterization_verdict)
                              : json(nullptr);
  j["theorem_violation"] = report.theorem_violation();
  j["f_ideal"] = report.f_ideal();
  return j;
}

json to_json(const CensusEntry& entry) {
  json reps = json::array();
  for (const SquareFreeIdeal& i : entry.representatives) reps.push_back(render_ideal(i));
  json j = {{"n", entry.n},
            {"d", entry.d},
            {"s", entry.s},
            {"binom", entry.binom},
            {"parity_pruned", entry.parity_pruned},
            {"scanned", entry.candidates_scanned},
            {"full_support", entry.full_support},
            {"f_ideals", entry.f_ideals_direct},
            {"f_ideals_characterization", entry.f_ideals_characterization},
            {"disagreements", entry.disagreements},
            {"necessary_pass", entry.necessary_pass},
            {"necessity_violations", entry.necessity_violations},
            {"non_sufficiency_witnesses", entry.non_sufficiency_witnesses},
            {"elapsed_ms", entry.elapsed.count()},
            {"representatives", reps}};
  if (!entry.orbit_representatives.empty()) {
    json orbits = json::array();
    for (const SquareFreeIdeal& i : entry.orbit_representatives) orbits.push_back(render_ideal(i));
    j["orbits"] = orbits;
  }
  return j;
}

json to_json(const SuiteReport& report) {
  json pairs = json::array();
  for (const PairReport& p : report.pairs) {
    pairs.push_back({{"census", to_json(p.census)},
                     {"swept_all_sizes", p.swept_all_sizes},
                     {"off_scanned", p.off_scanned},
                     {"off_pure", p.off_pure},
                     {"off_f_ideals", p.off_f_ideals_direct},
                     {"off_f_ideals_characterization", p.off_f_ideals_characterization},
                     {"off_disagreements", p.off_disagreements},
                     {"nonpure_f_ideals", p.nonpure_f_ideals},
                     {"off_count_f_ideals", p.off_count_f_ideals},
                     {"disagreements", p.disagreements()}});
  }
  return {{"pairs", pairs},
          {"disagreements", report.total_disagreements()},
          {"off_count_f_ideals", report.total_off_count_f_ideals()}};
}

FVector fvector_from_json(const json& j) {
  return FVector{j.get<std::vector<std::uint64_t>>()};
}

Decomposition decomposition_from_json(const json& j) {
  Decomposition d;
  for (const auto& c : j.at("components")) {
    d.components.push_back(PrimeComponent{VertexSet::of(c.get<std::vector<int>>())});
  }
  d.height = j.at("height").get<int>();
  d.unmixed = j.at("unmixed").get<bool>();
  return d;
}

}  // namespace fideal::cli
