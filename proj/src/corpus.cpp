#include "qwalk/corpus.hpp"

#include <exception>
#include <optional>

#include "qwalk/errors.hpp"
#include "qwalk/generator.hpp"
#include "qwalk/spectral_map.hpp"

namespace qwalk {

std::pair<Index, Index> random_dims(std::uint64_t seed) {
  const auto h = static_cast<Index>(2 + (seed * 13) % 39);
  const auto k = static_cast<Index>(1 + (seed * 7) % static_cast<std::uint64_t>(h));
  return {h, k};
}

WalkInstance seeded_random_instance(std::uint64_t seed) {
  const auto [h, k] = random_dims(seed);
  return random_instance(h, k, seed);
}

namespace {

int parse_size(const std::string& name, const std::string& text) {
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw DomainError("fixture '" + name + "': bad size '" + text + "'");
  return n;
}

}  // namespace

Graph fixture_graph(const std::string& name) {
  if (name == "edge") return build_graph(EdgeListSpec{{"u", "v"}, {{"u", "v"}}});
  const auto colon = name.find(':');
  if (colon == std::string::npos) throw DomainError("unknown fixture '" + name + "'");
  const std::string kind = name.substr(0, colon);
  const int n = parse_size(name, name.substr(colon + 1));
  if (kind == "cycle") return build_graph(CycleSpec{n});
  if (kind == "complete") return build_graph(CompleteSpec{n});
  if (kind == "path-loops") return build_graph(PathWithLoopsSpec{n});
  throw DomainError("unknown fixture '" + name + "'");
}

WalkInstance fixture_instance(const std::string& name) { return grover_walk(fixture_graph(name)); }

std::vector<NamedInstance> grover_fixtures() {
  std::vector<NamedInstance> out;
  for (int n = 3; n <= 8; ++n) {
    const std::string name = "cycle:" + std::to_string(n);
    out.push_back({name, fixture_instance(name)});
  }
  for (int n = 3; n <= 5; ++n) {
    const std::string name = "complete:" + std::to_string(n);
    out.push_back({name, fixture_instance(name)});
  }
  return out;
}

std::vector<NamedInstance> standard_corpus(std::uint64_t first, std::uint64_t last) {
  auto out = grover_fixtures();
  for (std::uint64_t s = first; s <= last; ++s) out.push_back({"random:" + std::to_string(s), seeded_random_instance(s)});
  return out;
}

std::vector<SuiteResult> invariant_suite(const WalkInstance& inst, double tol_ker) {
  std::vector<SuiteResult> out;
  auto stage = [&out](const std::string& name, auto&& body) -> bool {
    try {
      out.push_back({name, body()});
      return true;
    } catch (const std::exception& e) {
      ValidationReport r;
      r.add("exception", e.what(), 0.0);
      out.push_back({name, std::move(r)});
      return false;
    }
  };

  stage("instance", [&] { return check_instance(inst); });

  std::optional<SpectralDecomposition> tdec;
  std::optional<SubspaceAtlas> atlas;
  if (!stage("atlas", [&] {
        tdec = hermitian_eig(inst.T(), tol_ker);
        atlas = boundary_subspaces(inst, *tdec, tol_ker);
        return check_atlas(inst, *atlas);
      }))
    return out;

  stage("spectral-mapping", [&] { return verify_spectral_mapping(inst, mapped_spectrum(*tdec, *atlas)); });

  std::optional<DPMOperators> dpm;
  if (!stage("d-plus-minus", [&] {
        dpm = build_dpm(inst, *tdec);
        return check_dpm(inst, *tdec, *dpm, *atlas);
      }))
    return out;

  std::optional<KernelBases> kernels;
  if (!stage("kernels", [&] {
        kernels = kernels_of_U(inst, *tdec, *atlas);
        return ValidationReport{};
      }))
    return out;

  std::optional<GeneratorDecomposition> gen;
  if (!stage("generator", [&] {
        gen = build_generator(inst, *dpm, *kernels);
        return verify_generator(inst, *gen);
      }))
    return out;

  stage("point-spectrum", [&] { return check_point_spectrum_split(inst, *gen, *dpm); });
  return out;
}

}  // namespace qwalk
