#include <og/rewrite.hpp>

#include <algorithm>
#include <string>

#include <og/errors.hpp>

namespace og {

bool is_open_graph(const Cospan& c) {
    return c.left_foot.edges.empty() && c.right_foot.edges.empty();
}

void validate(const OpenGraphRule& r) {
    validate(r.cell);
    if (!is_globular(r.cell)) {
        throw InvariantError("rule: cell must be globular");
    }
    if (!is_open_graph(r.cell.top)) {
        throw InvariantError("rule: interface feet must be edgeless");
    }
}

namespace {

void check_alignment(const GraphMorphism& alignment, const Graph& rule_foot,
                     const Graph& host_foot, const GraphMorphism& rule_leg,
                     const GraphMorphism& match, const GraphMorphism& host_leg,
                     const char* side) {
    validate(alignment);
    if (alignment.dom != rule_foot || alignment.cod != host_foot) {
        throw BoundaryError(std::string("apply_rule: ") + side +
                            " alignment does not connect the feet");
    }
    if (!classify_morphism(alignment).mono) {
        throw RewriteError(std::string("apply_rule: ") + side +
                           " alignment must be monic");
    }
    if (compose_morphisms(alignment, host_leg) != compose_morphisms(rule_leg, match)) {
        throw RewriteError(std::string("apply_rule: ") + side +
                           " alignment does not commute with the legs");
    }
}

}  // namespace

std::vector<MatchResult> find_matches(const OpenGraphRule& r, const Cospan& host,
                                      std::uint64_t cap) {
    validate(r);
    validate(host);
    if (!is_open_graph(host)) {
        throw InvariantError("find_matches: host feet must be edgeless");
    }

    const Cospan& pattern = r.cell.top;
    std::vector<GraphMorphism> embeddings;
    {
        std::uint64_t work = 0;
        detail::for_each_hom(
            pattern.apex, host.apex, cap, work,
            [&](const std::map<Id, Id>& nodes, const std::map<Id, Id>& edges) {
                GraphMorphism m;
                m.dom = pattern.apex;
                m.cod = host.apex;
                m.node_map = nodes;
                m.edge_map = edges;
                embeddings.push_back(std::move(m));
                return true;
            },
            /*monic_only=*/true);
    }

    auto alignments_for = [&](const GraphMorphism& m, const GraphMorphism& rule_leg,
                              const Graph& rule_foot, const Graph& host_foot,
                              const GraphMorphism& host_leg) {
        std::vector<GraphMorphism> out;
        GraphMorphism target = compose_morphisms(rule_leg, m);
        std::uint64_t work = 0;
        detail::for_each_hom(
            rule_foot, host_foot, cap, work,
            [&](const std::map<Id, Id>& nodes, const std::map<Id, Id>& edges) {
                GraphMorphism a;
                a.dom = rule_foot;
                a.cod = host_foot;
                a.node_map = nodes;
                a.edge_map = edges;
                if (compose_morphisms(a, host_leg) == target) {
                    out.push_back(std::move(a));
                }
                return true;
            },
            /*monic_only=*/true);
        return out;
    };

    std::vector<MatchResult> matches;
    for (const GraphMorphism& m : embeddings) {
        auto lefts = alignments_for(m, pattern.left_leg, pattern.left_foot,
                                    host.left_foot, host.left_leg);
        auto rights = alignments_for(m, pattern.right_leg, pattern.right_foot,
                                     host.right_foot, host.right_leg);
        for (const GraphMorphism& al : lefts) {
            for (const GraphMorphism& ar : rights) {
                matches.push_back({m, al, ar});
            }
        }
    }
    return matches;
}

ApplyResult apply_rule(const OpenGraphRule& r, const Cospan& host,
                       const MatchResult& at) {
    validate(r);
    validate(host);
    if (!is_open_graph(host)) {
        throw InvariantError("apply_rule: host feet must be edgeless");
    }

    const Cospan& pattern = r.cell.top;
    const GraphMorphism& m = at.match;
    validate(m);
    if (m.dom != pattern.apex || m.cod != host.apex) {
        throw BoundaryError("apply_rule: match does not map the pattern into the host");
    }
    if (!classify_morphism(m).mono) {
        throw RewriteError("apply_rule: match must be monic");
    }
    check_alignment(at.left_alignment, pattern.left_foot, host.left_foot,
                    pattern.left_leg, m, host.left_leg, "left");
    check_alignment(at.right_alignment, pattern.right_foot, host.right_foot,
                    pattern.right_leg, m, host.right_leg, "right");

    const GraphMorphism& keep_in_pattern = r.cell.up_apex;     // preserved -> pattern
    const GraphMorphism& keep_in_replacement = r.cell.down_apex;  // preserved -> replacement

    std::set<Id> kept_nodes;
    std::set<Id> kept_edges;
    for (const auto& [v, w] : keep_in_pattern.node_map) {
        (void)v;
        kept_nodes.insert(w);
    }
    for (const auto& [e, d] : keep_in_pattern.edge_map) {
        (void)e;
        kept_edges.insert(d);
    }
    std::set<Id> deleted_nodes;
    std::set<Id> deleted_edges;
    for (Id v : pattern.apex.nodes) {
        if (!kept_nodes.count(v)) {
            deleted_nodes.insert(m.on_node(v));
        }
    }
    for (const auto& [e, ends] : pattern.apex.edges) {
        (void)ends;
        if (!kept_edges.count(e)) {
            deleted_edges.insert(m.on_edge(e));
        }
    }

    // the retained context
    Graph context;
    for (Id v : host.apex.nodes) {
        if (!deleted_nodes.count(v)) {
            context.nodes.insert(v);
        }
    }
    for (const auto& [e, ends] : host.apex.edges) {
        if (deleted_edges.count(e)) {
            continue;
        }
        if (deleted_nodes.count(ends.src)) {
            throw DanglingError("apply_rule: deleting matched nodes leaves host edge " +
                                std::to_string(e) + " without its source");
        }
        if (deleted_nodes.count(ends.tgt)) {
            throw DanglingError("apply_rule: deleting matched nodes leaves host edge " +
                                std::to_string(e) + " without its target");
        }
        context.edges.emplace(e, ends);
    }

    GraphMorphism keep_in_context;  // preserved -> context
    keep_in_context.dom = r.cell.middle.apex;
    keep_in_context.cod = context;
    for (Id v : r.cell.middle.apex.nodes) {
        keep_in_context.node_map[v] = m.on_node(keep_in_pattern.on_node(v));
    }
    for (const auto& [e, ends] : r.cell.middle.apex.edges) {
        (void)ends;
        keep_in_context.edge_map[e] = m.on_edge(keep_in_pattern.on_edge(e));
    }
    validate(keep_in_context);
    GraphMorphism context_in_host = subgraph_inclusion(host.apex, context);

    {
        // the carved-out square must reassemble the host
        auto po = pushout(keep_in_pattern, keep_in_context);
        IsoConstraints cs;
        cs.incoming.push_back({po.left_inclusion, m});
        cs.incoming.push_back({po.right_inclusion, context_in_host});
        if (!find_commuting_isomorphism(po.object, host.apex, cs).has_value()) {
            throw InternalError("apply_rule: pattern and context do not rebuild the host");
        }
    }

    auto glued = pushout(keep_in_replacement, keep_in_context);
    const GraphMorphism& comatch = glued.left_inclusion;
    const GraphMorphism& context_in_result = glued.right_inclusion;

    auto lift_leg = [&](const GraphMorphism& host_leg, const char* side) {
        GraphMorphism lifted;
        lifted.dom = host_leg.dom;
        lifted.cod = context;
        for (const auto& [v, w] : host_leg.node_map) {
            if (deleted_nodes.count(w)) {
                throw RewriteError(std::string("apply_rule: rewrite would delete the "
                                               "image of host ") +
                                   side + " interface point " + std::to_string(v));
            }
            lifted.node_map[v] = w;
        }
        validate(lifted);
        return lifted;
    };
    GraphMorphism left_lift = lift_leg(host.left_leg, "left");
    GraphMorphism right_lift = lift_leg(host.right_leg, "right");

    ApplyResult out;
    out.result.left_foot = host.left_foot;
    out.result.right_foot = host.right_foot;
    out.result.apex = glued.object;
    out.result.left_leg = compose_morphisms(left_lift, context_in_result);
    out.result.right_leg = compose_morphisms(right_lift, context_in_result);
    validate(out.result);

    out.witness.top = host;
    out.witness.bottom = out.result;
    out.witness.middle.left_foot = host.left_foot;
    out.witness.middle.right_foot = host.right_foot;
    out.witness.middle.apex = context;
    out.witness.middle.left_leg = left_lift;
    out.witness.middle.right_leg = right_lift;
    out.witness.up_left = identity_morphism(host.left_foot);
    out.witness.up_apex = context_in_host;
    out.witness.up_right = identity_morphism(host.right_foot);
    out.witness.down_left = identity_morphism(host.left_foot);
    out.witness.down_apex = context_in_result;
    out.witness.down_right = identity_morphism(host.right_foot);
    validate(out.witness);

    out.comatch = comatch;
    return out;
}

OpenGraphRule dualize_rule(const OpenGraphRule& r) {
    validate(r);
    return {mirror_cell(r.cell)};
}

OpenGraphRule invert_rule(const OpenGraphRule& r) {
    validate(r);
    return {flip_cell(r.cell)};
}

}  // namespace og
