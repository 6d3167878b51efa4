#pragma once

// Batch property checks behind `plmonster verify`, and the monster-evidence
// report collecting every machine-checkable ingredient of the argument that
// the default amalgam has no type 2 actions.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "plmonster/amalgam.hpp"

namespace plm {

struct VerifyOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
};

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;  // empty when passed
};

struct SuiteReport {
  std::string suite;
  std::vector<PropertyResult> properties;

  bool passed() const;
};

// arith, centrality, rot-invariance, tuple, amalgam-oracle, monster-evidence
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite name ("all" is handled by
// the caller).
SuiteReport run_suite(std::string_view name, const VerifyOptions& options);

extern const char* const kMonsterDisclaimer;

struct EvidenceSection {
  std::string name;
  bool passed = true;
  std::vector<std::string> details;
};

struct MonsterEvidenceReport {
  std::vector<EvidenceSection> sections;
  std::string disclaimer;

  bool passed() const;
};

// (a) z projects to a map of rotation number exactly 0; (b) the edge element
// has no rational rotation number with denominator <= 50 and an exact bracket
// at depth 200; (c) z commutes with sampled lifts; (d) z^k g^-k is trivial in
// M; (e) project_to_G1 is multiplicative on sampled word pairs.
MonsterEvidenceReport monster_evidence_report(
    const std::shared_ptr<const AmalgamContext>& ctx, const VerifyOptions& options = {});

}  // namespace plm
