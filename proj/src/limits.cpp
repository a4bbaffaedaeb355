#include "og/limits.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <utility>

namespace og {

namespace fault {
std::atomic<bool> disable_pushout_quotient{false};
std::atomic<bool> corrupt_pullback_pairing{false};
}  // namespace fault

CoconeResult coproduct(const Graph& g, const Graph& h) {
  const Id node_shift = g.node_bound();
  const Id edge_shift = g.edge_bound();

  Graph object = g;
  for (Id n : h.nodes) object.nodes.insert(n + node_shift);
  for (const auto& [e, ends] : h.edges) {
    object.edges[e + edge_shift] = EdgeEnds{ends.src + node_shift, ends.tgt + node_shift};
  }

  CoconeResult out;
  out.object = object;
  out.left_inclusion = identity_morphism(g);
  out.left_inclusion.cod = object;
  out.right_inclusion.dom = h;
  out.right_inclusion.cod = object;
  for (Id n : h.nodes) out.right_inclusion.node_map[n] = n + node_shift;
  for (const auto& [e, ends] : h.edges) {
    (void)ends;
    out.right_inclusion.edge_map[e] = e + edge_shift;
  }
  return out;
}

GraphMorphism coproduct_of_morphisms(const GraphMorphism& f, const GraphMorphism& g) {
  CoconeResult d = coproduct(f.dom, g.dom);
  CoconeResult c = coproduct(f.cod, g.cod);
  GraphMorphism h;
  h.dom = d.object;
  h.cod = c.object;
  for (const auto& [a, da] : d.left_inclusion.node_map) {
    h.node_map[da] = c.left_inclusion.node_map.at(f.node_map.at(a));
  }
  for (const auto& [b, db] : d.right_inclusion.node_map) {
    h.node_map[db] = c.right_inclusion.node_map.at(g.node_map.at(b));
  }
  for (const auto& [a, da] : d.left_inclusion.edge_map) {
    h.edge_map[da] = c.left_inclusion.edge_map.at(f.edge_map.at(a));
  }
  for (const auto& [b, db] : d.right_inclusion.edge_map) {
    h.edge_map[db] = c.right_inclusion.edge_map.at(g.edge_map.at(b));
  }
  return h;
}

GraphMorphism codiagonal(const Graph& g) {
  CoconeResult c = coproduct(g, g);
  GraphMorphism fold;
  fold.dom = c.object;
  fold.cod = g;
  for (const auto& [x, cx] : c.left_inclusion.node_map) fold.node_map[cx] = x;
  for (const auto& [x, cx] : c.right_inclusion.node_map) fold.node_map[cx] = x;
  for (const auto& [x, cx] : c.left_inclusion.edge_map) fold.edge_map[cx] = x;
  for (const auto& [x, cx] : c.right_inclusion.edge_map) fold.edge_map[cx] = x;
  return fold;
}

namespace {

// union-find with minimum-id representatives
class DisjointSet {
public:
  void add(Id x) { parent_.emplace(x, x); }

  Id find(Id x) {
    Id root = x;
    while (parent_.at(root) != root) root = parent_.at(root);
    while (parent_.at(x) != root) {
      Id next = parent_.at(x);
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  void unite(Id a, Id b) {
    Id ra = find(a);
    Id rb = find(b);
    if (ra == rb) return;
    if (ra < rb) {
      parent_[rb] = ra;
    } else {
      parent_[ra] = rb;
    }
  }

private:
  std::map<Id, Id> parent_;
};

GraphMorphism through_quotient(const GraphMorphism& inclusion, const Graph& quotient,
                               DisjointSet& nodes, DisjointSet& edges) {
  GraphMorphism out;
  out.dom = inclusion.dom;
  out.cod = quotient;
  for (const auto& [x, img] : inclusion.node_map) out.node_map[x] = nodes.find(img);
  for (const auto& [x, img] : inclusion.edge_map) out.edge_map[x] = edges.find(img);
  return out;
}

}  // namespace

CoconeResult pushout(const GraphMorphism& f, const GraphMorphism& g) {
  if (f.dom != g.dom) throw BoundaryError("pushout: f and g do not share their domain");

  CoconeResult co = coproduct(f.cod, g.cod);
  DisjointSet dn, de;
  for (Id n : co.object.nodes) dn.add(n);
  for (const auto& [e, ends] : co.object.edges) {
    (void)ends;
    de.add(e);
  }

  if (!fault::disable_pushout_quotient.load()) {
    for (Id a : f.dom.nodes) {
      dn.unite(co.left_inclusion.node_map.at(f.node_map.at(a)),
               co.right_inclusion.node_map.at(g.node_map.at(a)));
    }
    for (const auto& [e, ends] : f.dom.edges) {
      (void)ends;
      de.unite(co.left_inclusion.edge_map.at(f.edge_map.at(e)),
               co.right_inclusion.edge_map.at(g.edge_map.at(e)));
    }
  }

  Graph q;
  for (Id n : co.object.nodes) q.nodes.insert(dn.find(n));
  for (const auto& [e, ends] : co.object.edges) {
    Id re = de.find(e);
    EdgeEnds rends{dn.find(ends.src), dn.find(ends.tgt)};
    auto it = q.edges.find(re);
    if (it == q.edges.end()) {
      q.edges[re] = rends;
    } else if (it->second != rends) {
      throw InternalError("pushout: quotient does not respect src/tgt");
    }
  }

  CoconeResult out;
  out.object = q;
  out.left_inclusion = through_quotient(co.left_inclusion, q, dn, de);
  out.right_inclusion = through_quotient(co.right_inclusion, q, dn, de);

  if (compose_morphisms(f, out.left_inclusion) != compose_morphisms(g, out.right_inclusion)) {
    throw InternalError("pushout: inclusions do not agree on the shared domain");
  }
  return out;
}

ConeResult pullback(const GraphMorphism& f, const GraphMorphism& g) {
  if (f.cod != g.cod) throw BoundaryError("pullback: f and g do not share their codomain");

  const bool corrupt = fault::corrupt_pullback_pairing.load();

  std::map<std::pair<Id, Id>, Id> node_id, edge_id;
  Graph p;
  Id next = 0;
  for (Id x : f.dom.nodes) {
    for (Id y : g.dom.nodes) {
      if (f.node_map.at(x) != g.node_map.at(y)) continue;
      if (corrupt && x != y) continue;
      node_id[{x, y}] = next;
      p.nodes.insert(next);
      ++next;
    }
  }
  next = 0;
  for (const auto& [e1, ends1] : f.dom.edges) {
    for (const auto& [e2, ends2] : g.dom.edges) {
      if (f.edge_map.at(e1) != g.edge_map.at(e2)) continue;
      if (corrupt && e1 != e2) continue;
      auto s = node_id.find({ends1.src, ends2.src});
      auto t = node_id.find({ends1.tgt, ends2.tgt});
      if (s == node_id.end() || t == node_id.end()) {
        throw InternalError("pullback: endpoints of a matched edge pair are not matched nodes");
      }
      edge_id[{e1, e2}] = next;
      p.edges[next] = EdgeEnds{s->second, t->second};
      ++next;
    }
  }

  ConeResult out;
  out.object = p;
  out.left_projection.dom = p;
  out.left_projection.cod = f.dom;
  out.right_projection.dom = p;
  out.right_projection.cod = g.dom;
  for (const auto& [pair, id] : node_id) {
    out.left_projection.node_map[id] = pair.first;
    out.right_projection.node_map[id] = pair.second;
  }
  for (const auto& [pair, id] : edge_id) {
    out.left_projection.edge_map[id] = pair.first;
    out.right_projection.edge_map[id] = pair.second;
  }

  if (compose_morphisms(out.left_projection, f) != compose_morphisms(out.right_projection, g)) {
    throw InternalError("pullback: projections do not agree over the shared codomain");
  }
  return out;
}

GraphMorphism induced_from_pushout(const CoconeResult& po, const GraphMorphism& u,
                                   const GraphMorphism& v) {
  if (u.dom != po.left_inclusion.dom || v.dom != po.right_inclusion.dom || u.cod != v.cod) {
    throw BoundaryError("induced_from_pushout: cocone does not match the pushout feet");
  }
  GraphMorphism h;
  h.dom = po.object;
  h.cod = u.cod;
  auto force = [](std::map<Id, Id>& m, Id key, Id value) {
    auto it = m.find(key);
    if (it == m.end()) {
      m[key] = value;
    } else if (it->second != value) {
      throw InternalError("induced_from_pushout: cocone does not respect the gluing");
    }
  };
  for (const auto& [b, pb] : po.left_inclusion.node_map) force(h.node_map, pb, u.node_map.at(b));
  for (const auto& [c, pc] : po.right_inclusion.node_map) force(h.node_map, pc, v.node_map.at(c));
  for (const auto& [b, pb] : po.left_inclusion.edge_map) force(h.edge_map, pb, u.edge_map.at(b));
  for (const auto& [c, pc] : po.right_inclusion.edge_map) force(h.edge_map, pc, v.edge_map.at(c));
  if (h.node_map.size() != po.object.nodes.size() || h.edge_map.size() != po.object.edges.size()) {
    throw InternalError("induced_from_pushout: inclusions are not jointly surjective");
  }
  return h;
}

GraphMorphism induced_into_pullback(const ConeResult& pb, const GraphMorphism& u,
                                    const GraphMorphism& v) {
  if (u.cod != pb.left_projection.cod || v.cod != pb.right_projection.cod || u.dom != v.dom) {
    throw BoundaryError("induced_into_pullback: cone does not match the pullback feet");
  }
  std::map<std::pair<Id, Id>, Id> node_of_pair, edge_of_pair;
  for (const auto& [id, x] : pb.left_projection.node_map) {
    node_of_pair[{x, pb.right_projection.node_map.at(id)}] = id;
  }
  for (const auto& [id, x] : pb.left_projection.edge_map) {
    edge_of_pair[{x, pb.right_projection.edge_map.at(id)}] = id;
  }
  GraphMorphism h;
  h.dom = u.dom;
  h.cod = pb.object;
  for (Id q : u.dom.nodes) {
    auto it = node_of_pair.find({u.node_map.at(q), v.node_map.at(q)});
    if (it == node_of_pair.end()) {
      throw InternalError("induced_into_pullback: cone does not land in the pullback");
    }
    h.node_map[q] = it->second;
  }
  for (const auto& [q, ends] : u.dom.edges) {
    (void)ends;
    auto it = edge_of_pair.find({u.edge_map.at(q), v.edge_map.at(q)});
    if (it == edge_of_pair.end()) {
      throw InternalError("induced_into_pullback: cone does not land in the pullback");
    }
    h.edge_map[q] = it->second;
  }
  return h;
}

namespace {

Graph classifying_node_pairs() {
  Graph k;
  k.nodes = {0, 1};
  k.edges[0] = EdgeEnds{0, 0};
  k.edges[1] = EdgeEnds{0, 1};
  k.edges[2] = EdgeEnds{1, 0};
  k.edges[3] = EdgeEnds{1, 1};
  return k;
}

Graph classifying_edge_pairs() {
  Graph l;
  l.nodes = {0};
  l.edges[0] = EdgeEnds{0, 0};
  l.edges[1] = EdgeEnds{0, 0};
  return l;
}

struct Cap {
  std::uint64_t work = 0;
  std::uint64_t cap = 0;
  void charge(std::uint64_t amount = 1) {
    work += amount;
    if (work > cap) throw BudgetError("verify_universal_property: probe budget exceeded");
  }
};

// number of morphisms P -> Q agreeing with the given forced assignments,
// counted only up to 2 since the callers ask for "exactly one"
std::uint64_t count_completions(const Graph& p, const Graph& q, std::map<Id, Id> nmap,
                                std::map<Id, Id> emap, Cap& budget) {
  std::vector<Id> free_nodes;
  for (Id n : p.nodes) {
    if (!nmap.count(n)) free_nodes.push_back(n);
  }

  std::uint64_t found = 0;

  std::function<void(std::size_t)> fill_edges = [&](std::size_t j) {
    if (found >= 2) return;
    if (j == p.edges.size()) {
      ++found;
      return;
    }
    // iterate all edges so forced assignments get their endpoint check too
    auto it = p.edges.begin();
    std::advance(it, j);
    const auto& [e, ends] = *it;
    EdgeEnds want{nmap.at(ends.src), nmap.at(ends.tgt)};
    auto forced = emap.find(e);
    if (forced != emap.end()) {
      budget.charge();
      if (q.edges.at(forced->second) == want) fill_edges(j + 1);
      return;
    }
    for (const auto& [qe, qends] : q.edges) {
      if (qends != want) continue;
      budget.charge();
      emap[e] = qe;
      fill_edges(j + 1);
      emap.erase(e);
      if (found >= 2) return;
    }
  };

  std::function<void(std::size_t)> fill_nodes = [&](std::size_t k) {
    if (found >= 2) return;
    if (k == free_nodes.size()) {
      fill_edges(0);
      return;
    }
    for (Id qn : q.nodes) {
      budget.charge();
      nmap[free_nodes[k]] = qn;
      fill_nodes(k + 1);
      nmap.erase(free_nodes[k]);
      if (found >= 2) return;
    }
  };

  fill_nodes(0);
  return found;
}

// mediator count for a pushout-style cocone: morphisms h with h(h1(b)) = u(b)
// and h(h2(c)) = v(c), where u, v are given as raw maps into q
std::uint64_t count_pushout_mediators(const Graph& p, const GraphMorphism& h1,
                                      const GraphMorphism& h2, const Graph& q,
                                      const std::map<Id, Id>& u_nodes, const std::map<Id, Id>& u_edges,
                                      const std::map<Id, Id>& v_nodes, const std::map<Id, Id>& v_edges,
                                      Cap& budget) {
  std::map<Id, Id> nmap, emap;
  bool consistent = true;
  auto force = [&consistent](std::map<Id, Id>& m, Id key, Id value) {
    auto it = m.find(key);
    if (it == m.end()) {
      m[key] = value;
    } else if (it->second != value) {
      consistent = false;
    }
  };
  for (const auto& [b, pb] : h1.node_map) force(nmap, pb, u_nodes.at(b));
  for (const auto& [c, pc] : h2.node_map) force(nmap, pc, v_nodes.at(c));
  for (const auto& [b, pb] : h1.edge_map) force(emap, pb, u_edges.at(b));
  for (const auto& [c, pc] : h2.edge_map) force(emap, pc, v_edges.at(c));
  if (!consistent) return 0;
  return count_completions(p, q, std::move(nmap), std::move(emap), budget);
}

bool cocone_commutes(const Graph& a, const GraphMorphism& f, const GraphMorphism& g,
                     const std::map<Id, Id>& u_nodes, const std::map<Id, Id>& u_edges,
                     const std::map<Id, Id>& v_nodes, const std::map<Id, Id>& v_edges) {
  for (Id x : a.nodes) {
    if (u_nodes.at(f.node_map.at(x)) != v_nodes.at(g.node_map.at(x))) return false;
  }
  for (const auto& [e, ends] : a.edges) {
    (void)ends;
    if (u_edges.at(f.edge_map.at(e)) != v_edges.at(g.edge_map.at(e))) return false;
  }
  return true;
}

bool verify_pushout_square(const GraphMorphism& f, const GraphMorphism& g, const GraphMorphism& h1,
                           const GraphMorphism& h2, Cap& budget) {
  const Graph& p = h1.cod;

  // canonical cocone into the apex itself
  if (count_pushout_mediators(p, h1, h2, p, h1.node_map, h1.edge_map, h2.node_map, h2.edge_map,
                              budget) != 1) {
    return false;
  }

  // cocone into the joint image; separates apexes carrying extra material
  Graph joint = image_subgraph(h1);
  {
    Graph im2 = image_subgraph(h2);
    joint.nodes.insert(im2.nodes.begin(), im2.nodes.end());
    joint.edges.insert(im2.edges.begin(), im2.edges.end());
  }
  if (joint != p) {
    if (count_pushout_mediators(p, h1, h2, joint, h1.node_map, h1.edge_map, h2.node_map,
                                h2.edge_map, budget) != 1) {
      return false;
    }
  }

  // exhaustive cocones into the classifying targets; separates over-gluing
  for (const Graph& target : {classifying_node_pairs(), classifying_edge_pairs()}) {
    std::vector<std::pair<std::map<Id, Id>, std::map<Id, Id>>> into_b, into_c;
    detail::for_each_hom(h1.dom, target, budget.cap, budget.work,
                         [&](const std::map<Id, Id>& nm, const std::map<Id, Id>& em) {
                           into_b.emplace_back(nm, em);
                           return true;
                         });
    detail::for_each_hom(h2.dom, target, budget.cap, budget.work,
                         [&](const std::map<Id, Id>& nm, const std::map<Id, Id>& em) {
                           into_c.emplace_back(nm, em);
                           return true;
                         });
    for (const auto& [un, ue] : into_b) {
      for (const auto& [vn, ve] : into_c) {
        budget.charge();
        if (!cocone_commutes(f.dom, f, g, un, ue, vn, ve)) continue;
        if (count_pushout_mediators(p, h1, h2, target, un, ue, vn, ve, budget) != 1) return false;
      }
    }
  }
  return true;
}

bool verify_pullback_square(const GraphMorphism& f, const GraphMorphism& g, const GraphMorphism& h1,
                            const GraphMorphism& h2, Cap& budget) {
  const Graph& p = h1.dom;

  // representable probes: each commuting pair must be hit exactly once
  for (Id b : f.dom.nodes) {
    for (Id c : g.dom.nodes) {
      if (f.node_map.at(b) != g.node_map.at(c)) continue;
      budget.charge(p.nodes.size() + 1);
      int hits = 0;
      for (Id x : p.nodes) {
        if (h1.node_map.at(x) == b && h2.node_map.at(x) == c) ++hits;
      }
      if (hits != 1) return false;
    }
  }
  for (const auto& [b, bends] : f.dom.edges) {
    (void)bends;
    for (const auto& [c, cends] : g.dom.edges) {
      (void)cends;
      if (f.edge_map.at(b) != g.edge_map.at(c)) continue;
      budget.charge(p.edges.size() + 1);
      int hits = 0;
      for (const auto& [x, xends] : p.edges) {
        (void)xends;
        if (h1.edge_map.at(x) == b && h2.edge_map.at(x) == c) ++hits;
      }
      if (hits != 1) return false;
    }
  }

  // canonical cone: the identity must be the only endomorphism over (h1, h2)
  std::uint64_t mediators = 0;
  {
    std::map<std::pair<Id, Id>, std::vector<Id>> node_fibers, edge_fibers;
    for (Id x : p.nodes) node_fibers[{h1.node_map.at(x), h2.node_map.at(x)}].push_back(x);
    for (const auto& [x, ends] : p.edges) {
      (void)ends;
      edge_fibers[{h1.edge_map.at(x), h2.edge_map.at(x)}].push_back(x);
    }
    mediators = 1;
    for (const auto& [pair, xs] : node_fibers) {
      (void)pair;
      mediators *= xs.size();
    }
    for (const auto& [pair, xs] : edge_fibers) {
      (void)pair;
      mediators *= xs.size();
    }
    budget.charge(p.nodes.size() + p.edges.size());
  }
  return mediators == 1;
}

}  // namespace

bool verify_universal_property(SquareKind kind, const GraphMorphism& f, const GraphMorphism& g,
                               const GraphMorphism& h1, const GraphMorphism& h2,
                               std::uint64_t cap) {
  Cap budget;
  budget.cap = cap;
  if (kind == SquareKind::pushout) {
    if (f.dom != g.dom || h1.dom != f.cod || h2.dom != g.cod || h1.cod != h2.cod) {
      throw BoundaryError("verify_universal_property: pushout square boundaries do not line up");
    }
    if (compose_morphisms(f, h1) != compose_morphisms(g, h2)) {
      throw BoundaryError("verify_universal_property: pushout square does not commute");
    }
    return verify_pushout_square(f, g, h1, h2, budget);
  }
  if (f.cod != g.cod || h1.dom != h2.dom || h1.cod != f.dom || h2.cod != g.dom) {
    throw BoundaryError("verify_universal_property: pullback square boundaries do not line up");
  }
  if (compose_morphisms(h1, f) != compose_morphisms(h2, g)) {
    throw BoundaryError("verify_universal_property: pullback square does not commute");
  }
  return verify_pullback_square(f, g, h1, h2, budget);
}

}  // namespace og
