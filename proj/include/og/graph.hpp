#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "og/errors.hpp"

namespace og {

using Id = int;

struct EdgeEnds {
  Id src = 0;
  Id tgt = 0;
  friend auto operator<=>(const EdgeEnds&, const EdgeEnds&) = default;
};

/// Finite directed multigraph. Node and edge identifiers are nonnegative
/// integers drawn from separate namespaces; neither set needs to be contiguous.
struct Graph {
  std::set<Id> nodes;
  std::map<Id, EdgeEnds> edges;

  bool has_node(Id n) const { return nodes.count(n) != 0; }
  bool has_edge(Id e) const { return edges.count(e) != 0; }
  Id src(Id e) const { return edges.at(e).src; }
  Id tgt(Id e) const { return edges.at(e).tgt; }

  // id one past the largest in use; used for disjoint-union shifts
  Id node_bound() const { return nodes.empty() ? 0 : *nodes.rbegin() + 1; }
  Id edge_bound() const { return edges.empty() ? 0 : edges.rbegin()->first + 1; }

  friend auto operator<=>(const Graph&, const Graph&) = default;
};

/// Structure-preserving map between graphs. Carries its endpoints by value so
/// every morphism is a self-contained, comparable datum.
struct GraphMorphism {
  Graph dom;
  Graph cod;
  std::map<Id, Id> node_map;
  std::map<Id, Id> edge_map;

  Id on_node(Id n) const { return node_map.at(n); }
  Id on_edge(Id e) const { return edge_map.at(e); }

  friend auto operator<=>(const GraphMorphism&, const GraphMorphism&) = default;
};

struct MorphismClass {
  bool mono = false;
  bool epi = false;
  bool iso = false;
};

// throws SchemaError: negative ids, edge endpoints not among the nodes
void validate(const Graph& g);

// throws InvariantError: maps not total, images missing, src/tgt not preserved
void validate(const GraphMorphism& f);

Graph empty_graph();
GraphMorphism identity_morphism(const Graph& g);
GraphMorphism morphism_from_empty(const Graph& g);

// diagrammatic order: f first, then g; requires cod(f) == dom(g) exactly
GraphMorphism compose_morphisms(const GraphMorphism& f, const GraphMorphism& g);

MorphismClass classify_morphism(const GraphMorphism& f);
GraphMorphism inverse(const GraphMorphism& f);  // requires iso

bool is_identity(const GraphMorphism& f);

// subgraph with the given carrier sets, keeping ids; endpoints must be closed
Graph subgraph(const Graph& g, const std::set<Id>& nodes, const std::set<Id>& edges);
GraphMorphism subgraph_inclusion(const Graph& whole, const Graph& part);
Graph image_subgraph(const GraphMorphism& f);

// bijective relabeling; node_map/edge_map must be injective and total on g
Graph rename_graph(const Graph& g, const std::map<Id, Id>& node_map,
                   const std::map<Id, Id>& edge_map);

inline constexpr std::uint64_t k_enumeration_cap = 1'000'000;
inline constexpr std::uint64_t k_iso_budget = 1'000'000;

// all morphisms dom -> cod in lexicographic order of (node_map, edge_map).
// precondition: |cod.nodes|^|dom.nodes| * |cod.edges|^|dom.edges| <= cap,
// otherwise BudgetError; the bound is the raw assignment space, not the work done
std::vector<GraphMorphism> enumerate_morphisms(const Graph& dom, const Graph& cod,
                                               std::uint64_t cap = k_enumeration_cap);

// constraint pairs for iso search between graphs G and H:
//   incoming (u: W -> G, v: W -> H) demands theta(u(w)) = v(w)
//   outgoing (p: G -> W, q: H -> W) demands q(theta(x)) = p(x)
struct IsoConstraints {
  std::vector<std::pair<GraphMorphism, GraphMorphism>> incoming;
  std::vector<std::pair<GraphMorphism, GraphMorphism>> outgoing;
};

// first isomorphism G -> H (in deterministic search order) commuting with all
// constraints, or nullopt if none exists. Throws BudgetError when the
// backtracking budget runs out, which is reported distinctly from "none".
std::optional<GraphMorphism> find_commuting_isomorphism(
    const Graph& g, const Graph& h, const IsoConstraints& constraints = {},
    std::uint64_t budget = k_iso_budget);

// seeded generator: node count uniform in [0, max_nodes], then every ordered
// node pair gets up to two parallel edges, each present with probability 0.3,
// truncated at max_edges
Graph generate_random_graph(std::uint64_t seed, int max_nodes, int max_edges);

namespace detail {

// backtracking enumeration shared by enumerate_morphisms and the oracles.
// fn gets each hom as raw maps; return false from fn to stop early.
// work counts visited candidate assignments and is charged against cap.
void for_each_hom(const Graph& dom, const Graph& cod, std::uint64_t cap,
                  std::uint64_t& work,
                  const std::function<bool(const std::map<Id, Id>&, const std::map<Id, Id>&)>& fn,
                  bool monic_only = false);

std::uint64_t hom_space_bound(const Graph& dom, const Graph& cod);

}  // namespace detail

}  // namespace og
