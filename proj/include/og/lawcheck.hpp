#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <og/compact.hpp>
#include <og/limits.hpp>
#include <og/serialize.hpp>

namespace og {

struct LawConfig {
    int max_nodes = 4;
    int max_edges = 5;
    std::uint64_t budget = k_universal_cap;  // cap for the search oracles

    friend bool operator==(const LawConfig&, const LawConfig&) = default;
};

struct LawIncident {
    std::uint64_t seed = 0;
    std::string detail;  // serialized instance for failures, message for errors

    friend bool operator==(const LawIncident&, const LawIncident&) = default;
};

struct LawReport {
    std::string law;
    std::uint64_t trials = 0;
    std::uint64_t passes = 0;
    std::uint64_t failures = 0;
    std::uint64_t budget_errors = 0;  // exhausted searches, distinct from failures
    std::optional<LawIncident> first_failure;
    std::optional<LawIncident> first_error;

    friend bool operator==(const LawReport&, const LawReport&) = default;
};

// interchange, associator_unitor, interchanger_coherence, companion_equations,
// mono_preservation, snake, dpo_soundness
const std::vector<std::string>& law_ids();

// One seeded instance per entry of seeds; deterministic given seeds and
// config. Unknown law ids raise InvariantError.
LawReport check_law(const std::string& law, const std::vector<std::uint64_t>& seeds,
                    const LawConfig& cfg = {});

// Every law over the same seeds, in law_ids() order.
std::vector<LawReport> run_law_suite(const std::vector<std::uint64_t>& seeds,
                                     const LawConfig& cfg = {});

// Seeded instance builders shared by the law harness and external sweeps.
// All are valid by construction and deterministic in the generator state.
Graph random_graph(std::mt19937_64& rng, const LawConfig& cfg);
Graph random_edgeless(std::mt19937_64& rng, int max_nodes);
GraphMorphism random_mono_into(std::mt19937_64& rng, const Graph& cod);
GraphMorphism random_morphism_from(std::mt19937_64& rng, const Graph& dom,
                                   const LawConfig& cfg);
GraphMorphism random_morphism_into(std::mt19937_64& rng, const Graph& cod,
                                   const LawConfig& cfg);
GraphMorphism random_morphism(std::mt19937_64& rng, const LawConfig& cfg);
Cospan random_open_cospan(std::mt19937_64& rng, const Graph& left_foot,
                          const Graph& right_foot, const LawConfig& cfg);
Cospan random_cospan(std::mt19937_64& rng, const LawConfig& cfg);
VerticalSpan random_monic_span(std::mt19937_64& rng, const LawConfig& cfg);
VerticalSpan random_iso_span(std::mt19937_64& rng, const LawConfig& cfg);
TwoCell random_globular_cell(std::mt19937_64& rng, const Cospan& top,
                             const LawConfig& cfg);
TwoCell random_cell(std::mt19937_64& rng, const LawConfig& cfg);
OpenGraphRule random_rule(std::mt19937_64& rng, const LawConfig& cfg);

}  // namespace og
