#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dowker/relation.hpp"

namespace dowker {

enum class Check {
  betti,         // integer homology of D(R), D(R^T), E(R) agree
  quasi_iso,     // both projections are quasi-isomorphisms
  fiber,         // contractible-fiber certificates on every small simplex
  naturality,    // projection squares commute strictly for a random morphism
  functorial,    // homology square over Q and Z/2 for k <= 2
  functor_laws,  // identities and composition under both functors
};

const char* check_name(Check c);
std::vector<Check> parse_checks(const std::string& csv);  // ParseError on unknown names
std::vector<Check> all_checks();

struct CampaignConfig {
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  std::size_t max_x = 4;
  std::size_t max_y = 4;
  std::vector<double> density_grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  std::vector<Check> checks = all_checks();
  int fiber_dim_cap = 6;
  int threads = 0;  // 0: library default
};

struct CheckFailure {
  std::size_t trial = 0;
  std::string check;
  std::uint64_t trial_seed = 0;
  std::string detail;
  std::string relation_json;  // minimal reproducer
  std::string morphism_json;  // empty when no morphism was involved

  bool operator==(const CheckFailure&) const = default;
};

struct VerificationReport {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> checks;
  std::size_t checks_run = 0;  // individual check evaluations
  std::vector<CheckFailure> failures;
  double elapsed_seconds = 0;  // informational; not part of the canonical JSON

  bool ok() const { return failures.empty(); }
};

// Per-trial seeds: splitmix64(campaign_seed + trial_index).
std::uint64_t splitmix64(std::uint64_t x);

// The morphism generator: the source relation and the two label maps are
// drawn first, the target starts as the image of the source (which makes the
// pair-preservation condition hold by construction) and gains random noise
// pairs on top.
RelationMorphism random_morphism(std::uint64_t seed, std::size_t max_x, std::size_t max_y,
                                 double density);

std::string morphism_to_json(const RelationMorphism& m);

// Trials are independent; the parallel runner farms them across OpenMP
// threads and aggregates by trial index, so both runners produce identical
// reports (elapsed aside).
VerificationReport run_campaign_serial(const CampaignConfig& cfg);
VerificationReport run_campaign_parallel(const CampaignConfig& cfg);
VerificationReport run_campaign(const CampaignConfig& cfg);

// Canonical JSON (stable across runs and thread counts; omits elapsed).
std::string report_to_json(const VerificationReport& rep);

}  // namespace dowker
