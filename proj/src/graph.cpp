#include "og/graph.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>

namespace og {

namespace {

std::string id_str(Id x) { return std::to_string(x); }

}  // namespace

void validate(const Graph& g) {
  for (Id n : g.nodes) {
    if (n < 0) throw SchemaError("graph: negative node id " + id_str(n));
  }
  for (const auto& [e, ends] : g.edges) {
    if (e < 0) throw SchemaError("graph: negative edge id " + id_str(e));
    if (!g.has_node(ends.src)) {
      throw SchemaError("graph: edge " + id_str(e) + " has dangling src node " + id_str(ends.src));
    }
    if (!g.has_node(ends.tgt)) {
      throw SchemaError("graph: edge " + id_str(e) + " has dangling tgt node " + id_str(ends.tgt));
    }
  }
}

void validate(const GraphMorphism& f) {
  validate(f.dom);
  validate(f.cod);
  if (f.node_map.size() != f.dom.nodes.size() || f.edge_map.size() != f.dom.edges.size()) {
    throw InvariantError("morphism: maps are not total on the domain");
  }
  for (const auto& [n, img] : f.node_map) {
    if (!f.dom.has_node(n)) throw InvariantError("morphism: node_map key " + id_str(n) + " not in domain");
    if (!f.cod.has_node(img)) throw InvariantError("morphism: node " + id_str(n) + " maps outside the codomain");
  }
  for (const auto& [e, img] : f.edge_map) {
    if (!f.dom.has_edge(e)) throw InvariantError("morphism: edge_map key " + id_str(e) + " not in domain");
    if (!f.cod.has_edge(img)) throw InvariantError("morphism: edge " + id_str(e) + " maps outside the codomain");
    if (f.cod.src(img) != f.node_map.at(f.dom.src(e)) || f.cod.tgt(img) != f.node_map.at(f.dom.tgt(e))) {
      throw InvariantError("morphism: edge " + id_str(e) + " does not commute with src/tgt");
    }
  }
}

Graph empty_graph() { return Graph{}; }

GraphMorphism identity_morphism(const Graph& g) {
  GraphMorphism f;
  f.dom = g;
  f.cod = g;
  for (Id n : g.nodes) f.node_map[n] = n;
  for (const auto& [e, ends] : g.edges) {
    (void)ends;
    f.edge_map[e] = e;
  }
  return f;
}

GraphMorphism morphism_from_empty(const Graph& g) {
  GraphMorphism f;
  f.cod = g;
  return f;
}

GraphMorphism compose_morphisms(const GraphMorphism& f, const GraphMorphism& g) {
  if (f.cod != g.dom) throw BoundaryError("compose_morphisms: cod(f) != dom(g)");
  GraphMorphism h;
  h.dom = f.dom;
  h.cod = g.cod;
  for (const auto& [n, img] : f.node_map) h.node_map[n] = g.node_map.at(img);
  for (const auto& [e, img] : f.edge_map) h.edge_map[e] = g.edge_map.at(img);
  return h;
}

MorphismClass classify_morphism(const GraphMorphism& f) {
  std::set<Id> node_image, edge_image;
  for (const auto& [n, img] : f.node_map) {
    (void)n;
    node_image.insert(img);
  }
  for (const auto& [e, img] : f.edge_map) {
    (void)e;
    edge_image.insert(img);
  }
  MorphismClass c;
  c.mono = node_image.size() == f.node_map.size() && edge_image.size() == f.edge_map.size();
  c.epi = node_image.size() == f.cod.nodes.size() && edge_image.size() == f.cod.edges.size();
  c.iso = c.mono && c.epi;
  return c;
}

GraphMorphism inverse(const GraphMorphism& f) {
  if (!classify_morphism(f).iso) throw InvariantError("inverse: morphism is not an isomorphism");
  GraphMorphism g;
  g.dom = f.cod;
  g.cod = f.dom;
  for (const auto& [n, img] : f.node_map) g.node_map[img] = n;
  for (const auto& [e, img] : f.edge_map) g.edge_map[img] = e;
  return g;
}

bool is_identity(const GraphMorphism& f) {
  if (f.dom != f.cod) return false;
  for (const auto& [n, img] : f.node_map) {
    if (n != img) return false;
  }
  for (const auto& [e, img] : f.edge_map) {
    if (e != img) return false;
  }
  return true;
}

Graph subgraph(const Graph& g, const std::set<Id>& nodes, const std::set<Id>& edges) {
  Graph s;
  for (Id n : nodes) {
    if (!g.has_node(n)) throw InvariantError("subgraph: node " + id_str(n) + " not in the graph");
    s.nodes.insert(n);
  }
  for (Id e : edges) {
    if (!g.has_edge(e)) throw InvariantError("subgraph: edge " + id_str(e) + " not in the graph");
    const EdgeEnds& ends = g.edges.at(e);
    if (!s.has_node(ends.src) || !s.has_node(ends.tgt)) {
      throw InvariantError("subgraph: edge " + id_str(e) + " has an endpoint outside the node set");
    }
    s.edges[e] = ends;
  }
  return s;
}

GraphMorphism subgraph_inclusion(const Graph& whole, const Graph& part) {
  GraphMorphism f;
  f.dom = part;
  f.cod = whole;
  for (Id n : part.nodes) {
    if (!whole.has_node(n)) throw InvariantError("subgraph_inclusion: node " + id_str(n) + " not in the ambient graph");
    f.node_map[n] = n;
  }
  for (const auto& [e, ends] : part.edges) {
    if (!whole.has_edge(e) || whole.edges.at(e) != ends) {
      throw InvariantError("subgraph_inclusion: edge " + id_str(e) + " not in the ambient graph");
    }
    f.edge_map[e] = e;
  }
  return f;
}

Graph image_subgraph(const GraphMorphism& f) {
  Graph s;
  for (const auto& [n, img] : f.node_map) {
    (void)n;
    s.nodes.insert(img);
  }
  for (const auto& [e, img] : f.edge_map) {
    (void)e;
    s.edges[img] = f.cod.edges.at(img);
  }
  return s;
}

Graph rename_graph(const Graph& g, const std::map<Id, Id>& node_map, const std::map<Id, Id>& edge_map) {
  Graph r;
  for (Id n : g.nodes) r.nodes.insert(node_map.at(n));
  if (r.nodes.size() != g.nodes.size()) throw InvariantError("rename_graph: node relabeling is not injective");
  for (const auto& [e, ends] : g.edges) {
    Id re = edge_map.at(e);
    if (r.edges.count(re)) throw InvariantError("rename_graph: edge relabeling is not injective");
    r.edges[re] = EdgeEnds{node_map.at(ends.src), node_map.at(ends.tgt)};
  }
  return r;
}

namespace detail {

namespace {

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out *= base;
  }
  return out;
}

}  // namespace

std::uint64_t hom_space_bound(const Graph& dom, const Graph& cod) {
  std::uint64_t n = sat_pow(cod.nodes.size(), dom.nodes.size());
  std::uint64_t e = sat_pow(cod.edges.size(), dom.edges.size());
  if (e != 0 && n > std::numeric_limits<std::uint64_t>::max() / e) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return n * e;
}

void for_each_hom(const Graph& dom, const Graph& cod, std::uint64_t cap, std::uint64_t& work,
                  const std::function<bool(const std::map<Id, Id>&, const std::map<Id, Id>&)>& fn,
                  bool monic_only) {
  std::vector<Id> dnodes(dom.nodes.begin(), dom.nodes.end());
  std::vector<Id> dedges;
  dedges.reserve(dom.edges.size());
  for (const auto& [e, ends] : dom.edges) {
    (void)ends;
    dedges.push_back(e);
  }

  std::map<std::pair<Id, Id>, std::vector<Id>> cod_by_ends;
  for (const auto& [e, ends] : cod.edges) cod_by_ends[{ends.src, ends.tgt}].push_back(e);

  // dom edges become checkable at the depth where their later endpoint is assigned
  std::map<Id, std::size_t> node_depth;
  for (std::size_t i = 0; i < dnodes.size(); ++i) node_depth[dnodes[i]] = i;
  std::vector<std::vector<Id>> check_at(dnodes.size());
  for (Id e : dedges) {
    std::size_t d = std::max(node_depth[dom.src(e)], node_depth[dom.tgt(e)]);
    check_at[d].push_back(e);
  }

  std::map<Id, Id> nmap, emap;
  std::set<Id> used_nodes, used_edges;
  bool stop = false;

  auto charge = [&]() {
    if (++work > cap) throw BudgetError("morphism enumeration budget exceeded");
  };

  std::function<void(std::size_t)> assign_edge = [&](std::size_t j) {
    if (stop) return;
    if (j == dedges.size()) {
      if (!fn(nmap, emap)) stop = true;
      return;
    }
    Id e = dedges[j];
    auto key = std::make_pair(nmap.at(dom.src(e)), nmap.at(dom.tgt(e)));
    auto it = cod_by_ends.find(key);
    if (it == cod_by_ends.end()) return;
    for (Id ce : it->second) {
      if (monic_only && used_edges.count(ce)) continue;
      charge();
      emap[e] = ce;
      if (monic_only) used_edges.insert(ce);
      assign_edge(j + 1);
      if (monic_only) used_edges.erase(ce);
      emap.erase(e);
      if (stop) return;
    }
  };

  std::function<void(std::size_t)> assign_node = [&](std::size_t k) {
    if (stop) return;
    if (k == dnodes.size()) {
      assign_edge(0);
      return;
    }
    for (Id cn : cod.nodes) {
      if (monic_only && used_nodes.count(cn)) continue;
      charge();
      nmap[dnodes[k]] = cn;
      bool viable = true;
      for (Id e : check_at[k]) {
        auto key = std::make_pair(nmap.at(dom.src(e)), nmap.at(dom.tgt(e)));
        if (cod_by_ends.find(key) == cod_by_ends.end()) {
          viable = false;
          break;
        }
      }
      if (viable) {
        if (monic_only) used_nodes.insert(cn);
        assign_node(k + 1);
        if (monic_only) used_nodes.erase(cn);
      }
      nmap.erase(dnodes[k]);
      if (stop) return;
    }
  };

  assign_node(0);
}

}  // namespace detail

std::vector<GraphMorphism> enumerate_morphisms(const Graph& dom, const Graph& cod, std::uint64_t cap) {
  validate(dom);
  validate(cod);
  if (detail::hom_space_bound(dom, cod) > cap) {
    throw BudgetError("enumerate_morphisms: assignment space exceeds cap");
  }
  std::vector<GraphMorphism> out;
  std::uint64_t work = 0;
  detail::for_each_hom(dom, cod, std::numeric_limits<std::uint64_t>::max(), work,
                       [&](const std::map<Id, Id>& nmap, const std::map<Id, Id>& emap) {
                         GraphMorphism f;
                         f.dom = dom;
                         f.cod = cod;
                         f.node_map = nmap;
                         f.edge_map = emap;
                         out.push_back(std::move(f));
                         return true;
                       });
  return out;
}

namespace {

std::map<Id, std::pair<int, int>> degree_profile(const Graph& g) {
  std::map<Id, std::pair<int, int>> deg;
  for (Id n : g.nodes) deg[n] = {0, 0};
  for (const auto& [e, ends] : g.edges) {
    (void)e;
    deg[ends.src].second += 1;
    deg[ends.tgt].first += 1;
  }
  return deg;
}

}  // namespace

std::optional<GraphMorphism> find_commuting_isomorphism(const Graph& g, const Graph& h,
                                                        const IsoConstraints& constraints,
                                                        std::uint64_t budget) {
  if (g.nodes.size() != h.nodes.size() || g.edges.size() != h.edges.size()) return std::nullopt;

  for (const auto& [u, v] : constraints.incoming) {
    if (u.cod != g || v.cod != h || u.dom != v.dom) {
      throw BoundaryError("find_commuting_isomorphism: incoming constraint does not frame the two graphs");
    }
  }
  for (const auto& [p, q] : constraints.outgoing) {
    if (p.dom != g || q.dom != h || p.cod != q.cod) {
      throw BoundaryError("find_commuting_isomorphism: outgoing constraint does not frame the two graphs");
    }
  }

  // assignments forced by incoming constraints
  std::map<Id, Id> nforced, eforced;
  for (const auto& [u, v] : constraints.incoming) {
    for (const auto& [w, gu] : u.node_map) {
      Id hv = v.node_map.at(w);
      auto it = nforced.find(gu);
      if (it != nforced.end() && it->second != hv) return std::nullopt;
      nforced[gu] = hv;
    }
    for (const auto& [w, ge] : u.edge_map) {
      Id he = v.edge_map.at(w);
      auto it = eforced.find(ge);
      if (it != eforced.end() && it->second != he) return std::nullopt;
      eforced[ge] = he;
    }
  }
  {
    std::set<Id> seen;
    for (const auto& [gn, hn] : nforced) {
      (void)gn;
      if (!seen.insert(hn).second) return std::nullopt;
    }
    seen.clear();
    for (const auto& [ge, he] : eforced) {
      (void)ge;
      if (!seen.insert(he).second) return std::nullopt;
    }
  }

  auto gdeg = degree_profile(g);
  auto hdeg = degree_profile(h);
  {
    std::vector<std::pair<int, int>> gp, hp;
    for (const auto& [n, d] : gdeg) {
      (void)n;
      gp.push_back(d);
    }
    for (const auto& [n, d] : hdeg) {
      (void)n;
      hp.push_back(d);
    }
    std::sort(gp.begin(), gp.end());
    std::sort(hp.begin(), hp.end());
    if (gp != hp) return std::nullopt;
  }

  auto node_compatible = [&](Id gn, Id hn) {
    if (gdeg.at(gn) != hdeg.at(hn)) return false;
    auto it = nforced.find(gn);
    if (it != nforced.end() && it->second != hn) return false;
    for (const auto& [p, q] : constraints.outgoing) {
      if (q.node_map.at(hn) != p.node_map.at(gn)) return false;
    }
    return true;
  };
  auto edge_compatible = [&](Id ge, Id he) {
    auto it = eforced.find(ge);
    if (it != eforced.end() && it->second != he) return false;
    for (const auto& [p, q] : constraints.outgoing) {
      if (q.edge_map.at(he) != p.edge_map.at(ge)) return false;
    }
    return true;
  };

  std::vector<Id> gnodes(g.nodes.begin(), g.nodes.end());
  std::vector<Id> gedges;
  for (const auto& [e, ends] : g.edges) {
    (void)ends;
    gedges.push_back(e);
  }

  std::map<std::pair<Id, Id>, std::vector<Id>> h_by_ends;
  for (const auto& [e, ends] : h.edges) h_by_ends[{ends.src, ends.tgt}].push_back(e);

  std::map<Id, Id> nmap, emap;
  std::set<Id> used_nodes, used_edges;
  std::uint64_t work = 0;
  auto charge = [&]() {
    if (++work > budget) throw BudgetError("find_commuting_isomorphism: search budget exceeded");
  };

  std::optional<GraphMorphism> found;

  std::function<bool(std::size_t)> assign_edge = [&](std::size_t j) -> bool {
    if (j == gedges.size()) {
      GraphMorphism theta;
      theta.dom = g;
      theta.cod = h;
      theta.node_map = nmap;
      theta.edge_map = emap;
      found = std::move(theta);
      return true;
    }
    Id ge = gedges[j];
    auto key = std::make_pair(nmap.at(g.src(ge)), nmap.at(g.tgt(ge)));
    auto it = h_by_ends.find(key);
    if (it == h_by_ends.end()) return false;
    for (Id he : it->second) {
      if (used_edges.count(he)) continue;
      if (!edge_compatible(ge, he)) continue;
      charge();
      emap[ge] = he;
      used_edges.insert(he);
      if (assign_edge(j + 1)) return true;
      used_edges.erase(he);
      emap.erase(ge);
    }
    return false;
  };

  std::function<bool(std::size_t)> assign_node = [&](std::size_t k) -> bool {
    if (k == gnodes.size()) return assign_edge(0);
    Id gn = gnodes[k];
    for (Id hn : h.nodes) {
      if (used_nodes.count(hn)) continue;
      if (!node_compatible(gn, hn)) continue;
      charge();
      nmap[gn] = hn;
      used_nodes.insert(hn);
      if (assign_node(k + 1)) return true;
      used_nodes.erase(hn);
      nmap.erase(gn);
    }
    return false;
  };

  if (!assign_node(0)) return std::nullopt;

  if (!classify_morphism(*found).iso) {
    throw InternalError("find_commuting_isomorphism: produced a non-isomorphism");
  }
  return found;
}

Graph generate_random_graph(std::uint64_t seed, int max_nodes, int max_edges) {
  if (max_nodes < 0 || max_edges < 0) {
    throw InvariantError("generate_random_graph: bounds must be nonnegative");
  }
  std::mt19937_64 rng(seed);
  Graph g;
  int n = std::uniform_int_distribution<int>(0, max_nodes)(rng);
  for (Id i = 0; i < n; ++i) g.nodes.insert(i);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Id next_edge = 0;
  for (Id a : g.nodes) {
    for (Id b : g.nodes) {
      for (int slot = 0; slot < 2; ++slot) {
        if (static_cast<int>(g.edges.size()) >= max_edges) return g;
        if (coin(rng) < 0.3) g.edges[next_edge++] = EdgeEnds{a, b};
      }
    }
  }
  return g;
}

}  // namespace og
