#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/szegedy.hpp"
#include "qwalk/validation.hpp"

namespace qwalk {

struct NamedInstance {
  std::string name;
  WalkInstance inst;
};

/// Dimensions of the seeded random instance: dim_H = 2 + (13 s mod 39),
/// dim_K = 1 + (7 s mod dim_H), so dim_K <= dim_H <= 40.
std::pair<Index, Index> random_dims(std::uint64_t seed);
WalkInstance seeded_random_instance(std::uint64_t seed);

/// Builtin fixtures by name: "cycle:N", "complete:N", "path-loops:N", "edge".
WalkInstance fixture_instance(const std::string& name);
Graph fixture_graph(const std::string& name);

/// Grover walks on cycle(3..8) and complete(3..5).
std::vector<NamedInstance> grover_fixtures();
/// grover_fixtures() followed by seeded random instances for seeds first..last.
std::vector<NamedInstance> standard_corpus(std::uint64_t first = 1, std::uint64_t last = 50);

struct SuiteResult {
  std::string check;
  ValidationReport report;
};

/// Runs every instance-level invariant: instance, atlas, spectral mapping,
/// d_+- identities, kernel decomposition, generator and point-spectrum split.
/// Exceptions raised by a stage are recorded as a violation of that stage.
std::vector<SuiteResult> invariant_suite(const WalkInstance& inst, double tol_ker = tol::kernel);

}  // namespace qwalk
