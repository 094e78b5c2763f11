#pragma once

// Property checks shared by the unit tests and the acceptance runner. Each
// returns the list of counterexamples found; empty means the property held.

#include <string>
#include <vector>

#include "admintm/engine.hpp"
#include "admintm/io_schema.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "rule_table_oracle.hpp"
#include "wildcard_oracle.hpp"

namespace admintm::testing {

using Failures = std::vector<std::string>;

inline Failures check_determinism(std::uint64_t seed, int profiles) {
  Failures failures;
  Rng rng(seed);
  for (int i = 0; i < profiles; ++i) {
    const SoftwareProfile p = random_profile(rng);
    const ThreatModelResult a = model_threats(p);
    const ThreatModelResult b = model_threats(SoftwareProfile(p));
    if (a != b || serialize(Document::of(a)) != serialize(Document::of(b))) {
      failures.push_back("profile " + std::to_string(i) + " (" + p.name + ") gave two different results");
    }
  }
  return failures;
}

inline Failures check_modality_monotonicity(std::uint64_t seed, int profiles) {
  Failures failures;
  Rng rng(seed);
  const auto all = enum_values<InputModality>();
  for (int i = 0; i < profiles; ++i) {
    const SoftwareProfile base = random_profile(rng);
    SoftwareProfile wider = base;
    for (InputModality m : all) {
      if (coin(rng)) wider.input_modalities.insert(m);
    }
    const ThreatModelResult before = model_threats(base);
    const ThreatModelResult after = model_threats(wider);
    for (const ThreatFinding& f : before.findings) {
      if (f.status() == Status::Applicable && after.find(f.attack)->status() == Status::NotApplicable) {
        failures.push_back(f.attack.value + " flipped to not_applicable when modalities grew (profile " +
                           std::to_string(i) + ")");
      }
    }
  }
  return failures;
}

inline Failures check_wildcard_graph(const ProcessGraph& g, const std::string& label) {
  Failures failures;
  const ProcessGraph expanded = expand_wildcards(g);
  if (edge_keys(expanded) != oracle_expand(g)) failures.push_back(label + ": expansion differs from the oracle");
  if (edge_keys(expanded).size() != expanded.edges().size()) failures.push_back(label + ": duplicate edges");
  if (expanded.wildcard_edge_count() != 0) failures.push_back(label + ": wildcard left after expansion");
  return failures;
}

inline Failures check_wildcard_expansion(std::uint64_t seed, int graphs) {
  Failures failures = check_wildcard_graph(default_graph(), "default graph");
  Rng rng(seed);
  for (int i = 0; i < graphs; ++i) {
    const ProcessGraph g = random_graph(rng);
    if (!validate(g).ok()) {
      failures.push_back("generator produced an invalid graph " + std::to_string(i));
      continue;
    }
    auto f = check_wildcard_graph(g, "random graph " + std::to_string(i));
    failures.insert(failures.end(), f.begin(), f.end());
  }
  return failures;
}

inline Failures check_truth_table() {
  Failures failures;
  const auto leaves = taxonomy().leaves();
  for (unsigned bits = 0; bits < 64; ++bits) {
    const Row row = row_of(bits);
    const ThreatModelResult r = enumerate_threats(default_graph(), profile_of(row));
    const auto expected = expected_row(row);
    for (std::size_t k = 0; k < leaves.size(); ++k) {
      const char got = letter(r.findings[k].status());
      if (got != expected[k]) {
        failures.push_back("row " + std::to_string(bits) + " " + leaves[k]->id.value + ": expected " + expected[k] +
                           ", got " + got);
      }
    }
  }
  return failures;
}

inline Failures check_round_trip_text(const std::string& text, DocumentKind kind, const std::string& label) {
  Failures failures;
  try {
    const Document doc = parse(text, kind);
    const std::string again = serialize(doc);
    if (again != text) failures.push_back(label + ": serialize(parse(text)) != text");
    if (parse(again, kind) != doc) failures.push_back(label + ": parse(serialize(doc)) != doc");
  } catch (const std::exception& e) {
    failures.push_back(label + ": " + e.what());
  }
  return failures;
}

inline Failures check_round_trip(std::uint64_t seed, int documents) {
  Failures failures;
  const std::pair<const char*, DocumentKind> fixtures[] = {
      {"cs1.profile.json", DocumentKind::Profile},       {"cs2.profile.json", DocumentKind::Profile},
      {"cs2.overlay.json", DocumentKind::GraphOverlay},  {"empty.overlay.json", DocumentKind::GraphOverlay},
      {"golden/cs1.result.json", DocumentKind::Result},  {"golden/cs2.result.json", DocumentKind::Result},
  };
  for (const auto& [name, kind] : fixtures) {
    auto f = check_round_trip_text(read_text(fixture(name)), kind, name);
    failures.insert(failures.end(), f.begin(), f.end());
  }
  Rng rng(seed);
  for (int i = 0; i < documents; ++i) {
    for (const Document& doc : {Document::of(random_profile(rng)), Document::of(random_overlay(rng)),
                                Document::of(random_result(rng))}) {
      auto f = check_round_trip_text(serialize(doc), doc.kind, "random " + std::string(enum_name(doc.kind)));
      failures.insert(failures.end(), f.begin(), f.end());
    }
  }
  return failures;
}

}  // namespace admintm::testing
