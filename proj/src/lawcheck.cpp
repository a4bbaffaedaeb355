#include <og/lawcheck.hpp>

#include <algorithm>
#include <functional>
#include <map>

#include <og/errors.hpp>

namespace og {

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng) { return pick(rng, 0, 1) == 1; }

Id pick_node(std::mt19937_64& rng, const Graph& g) {
    int index = pick(rng, 0, static_cast<int>(g.nodes.size()) - 1);
    auto it = g.nodes.begin();
    std::advance(it, index);
    return *it;
}

Id pick_edge(std::mt19937_64& rng, const Graph& g) {
    int index = pick(rng, 0, static_cast<int>(g.edges.size()) - 1);
    auto it = g.edges.begin();
    std::advance(it, index);
    return it->first;
}

}  // namespace

Graph random_graph(std::mt19937_64& rng, const LawConfig& cfg) {
    return generate_random_graph(rng(), cfg.max_nodes, cfg.max_edges);
}

Graph random_edgeless(std::mt19937_64& rng, int max_nodes) {
    Graph g;
    int n = pick(rng, 0, max_nodes);
    for (Id v = 0; v < n; ++v) g.nodes.insert(v);
    return g;
}

GraphMorphism random_mono_into(std::mt19937_64& rng, const Graph& cod) {
    std::set<Id> nodes;
    for (Id v : cod.nodes) {
        if (coin(rng)) nodes.insert(v);
    }
    std::set<Id> edges;
    for (const auto& [e, ends] : cod.edges) {
        if (nodes.count(ends.src) && nodes.count(ends.tgt) && coin(rng)) edges.insert(e);
    }
    Graph part = subgraph(cod, nodes, edges);

    // shift the domain ids so monos are not always literal inclusions
    Id offset = pick(rng, 0, 3);
    std::map<Id, Id> node_rename, edge_rename;
    for (Id v : part.nodes) node_rename[v] = v + offset;
    for (const auto& [e, ends] : part.edges) {
        (void)ends;
        edge_rename[e] = e + offset;
    }
    GraphMorphism f;
    f.dom = rename_graph(part, node_rename, edge_rename);
    f.cod = cod;
    for (const auto& [v, w] : node_rename) f.node_map[w] = v;
    for (const auto& [e, d] : edge_rename) f.edge_map[d] = e;
    return f;
}

GraphMorphism random_morphism_from(std::mt19937_64& rng, const Graph& dom,
                                   const LawConfig& cfg) {
    GraphMorphism f;
    f.dom = dom;

    int slots = std::max(1, cfg.max_nodes);
    for (Id v : dom.nodes) {
        Id label = pick(rng, 0, slots - 1);
        f.node_map[v] = label;
        f.cod.nodes.insert(label);
    }
    for (int extra = pick(rng, 0, 2); extra > 0; --extra) {
        f.cod.nodes.insert(pick(rng, 0, slots - 1));
    }

    Id next_edge = 0;
    for (const auto& [e, ends] : dom.edges) {
        EdgeEnds image{f.node_map.at(ends.src), f.node_map.at(ends.tgt)};
        std::vector<Id> reusable;
        for (const auto& [ce, cends] : f.cod.edges) {
            if (cends == image) reusable.push_back(ce);
        }
        if (!reusable.empty() && coin(rng)) {
            f.edge_map[e] = reusable[pick(rng, 0, static_cast<int>(reusable.size()) - 1)];
        } else {
            f.cod.edges[next_edge] = image;
            f.edge_map[e] = next_edge;
            ++next_edge;
        }
    }
    if (!f.cod.nodes.empty()) {
        for (int extra = pick(rng, 0, 2); extra > 0; --extra) {
            f.cod.edges[next_edge++] =
                EdgeEnds{pick_node(rng, f.cod), pick_node(rng, f.cod)};
        }
    }
    return f;
}

GraphMorphism random_morphism_into(std::mt19937_64& rng, const Graph& cod,
                                   const LawConfig& cfg) {
    GraphMorphism f;
    f.cod = cod;
    if (cod.nodes.empty()) {
        return f;  // only the empty graph maps into the empty graph
    }
    int n = pick(rng, 0, cfg.max_nodes);
    for (Id v = 0; v < n; ++v) {
        f.dom.nodes.insert(v);
        f.node_map[v] = pick_node(rng, cod);
    }
    if (!cod.edges.empty() && n > 0) {
        Id next_edge = 0;
        for (int tries = pick(rng, 0, cfg.max_edges); tries > 0; --tries) {
            Id e = pick_edge(rng, cod);
            EdgeEnds ends = cod.edges.at(e);
            std::vector<Id> sources, targets;
            for (const auto& [v, w] : f.node_map) {
                if (w == ends.src) sources.push_back(v);
                if (w == ends.tgt) targets.push_back(v);
            }
            if (sources.empty() || targets.empty()) continue;
            Id u = sources[pick(rng, 0, static_cast<int>(sources.size()) - 1)];
            Id v = targets[pick(rng, 0, static_cast<int>(targets.size()) - 1)];
            f.dom.edges[next_edge] = EdgeEnds{u, v};
            f.edge_map[next_edge] = e;
            ++next_edge;
        }
    }
    return f;
}

GraphMorphism random_morphism(std::mt19937_64& rng, const LawConfig& cfg) {
    return random_morphism_from(rng, random_graph(rng, cfg), cfg);
}

Cospan random_open_cospan(std::mt19937_64& rng, const Graph& left_foot,
                          const Graph& right_foot, const LawConfig& cfg) {
    Cospan c;
    c.left_foot = left_foot;
    c.right_foot = right_foot;
    c.apex = random_graph(rng, cfg);
    if (c.apex.nodes.empty() && (!left_foot.nodes.empty() || !right_foot.nodes.empty())) {
        c.apex.nodes.insert(0);
    }
    c.left_leg.dom = left_foot;
    c.left_leg.cod = c.apex;
    for (Id v : left_foot.nodes) c.left_leg.node_map[v] = pick_node(rng, c.apex);
    c.right_leg.dom = right_foot;
    c.right_leg.cod = c.apex;
    for (Id v : right_foot.nodes) c.right_leg.node_map[v] = pick_node(rng, c.apex);
    return c;
}

Cospan random_cospan(std::mt19937_64& rng, const LawConfig& cfg) {
    Graph lf = random_edgeless(rng, cfg.max_nodes);
    Graph rf = random_edgeless(rng, cfg.max_nodes);
    return random_open_cospan(rng, lf, rf, cfg);
}

VerticalSpan random_monic_span(std::mt19937_64& rng, const LawConfig& cfg) {
    VerticalSpan s;
    s.top_foot = random_graph(rng, cfg);
    s.up = random_mono_into(rng, s.top_foot);
    s.apex = s.up.dom;
    CoconeResult grown = coproduct(s.apex, random_graph(rng, cfg));
    s.bottom_foot = grown.object;
    s.down = grown.left_inclusion;
    return s;
}

VerticalSpan random_iso_span(std::mt19937_64& rng, const LawConfig& cfg) {
    Graph x = random_graph(rng, cfg);
    auto renaming = [&](Id offset) {
        GraphMorphism f;
        std::map<Id, Id> node_rename, edge_rename;
        for (Id v : x.nodes) node_rename[v] = v + offset;
        for (const auto& [e, ends] : x.edges) {
            (void)ends;
            edge_rename[e] = e + offset;
        }
        f.dom = x;
        f.cod = rename_graph(x, node_rename, edge_rename);
        f.node_map = node_rename;
        f.edge_map = edge_rename;
        return f;
    };
    VerticalSpan s;
    s.apex = x;
    s.up = renaming(pick(rng, 0, 3));
    s.top_foot = s.up.cod;
    s.down = renaming(pick(rng, 0, 3));
    s.bottom_foot = s.down.cod;
    return s;
}

TwoCell random_globular_cell(std::mt19937_64& rng, const Cospan& top,
                             const LawConfig& cfg) {
    std::set<Id> middle_nodes;
    for (const auto& [v, w] : top.left_leg.node_map) {
        (void)v;
        middle_nodes.insert(w);
    }
    for (const auto& [v, w] : top.right_leg.node_map) {
        (void)v;
        middle_nodes.insert(w);
    }
    for (Id v : top.apex.nodes) {
        if (coin(rng)) middle_nodes.insert(v);
    }
    std::set<Id> middle_edges;
    for (const auto& [e, d] : top.left_leg.edge_map) {
        (void)e;
        middle_edges.insert(d);
    }
    for (const auto& [e, d] : top.right_leg.edge_map) {
        (void)e;
        middle_edges.insert(d);
    }
    for (const auto& [e, ends] : top.apex.edges) {
        if (middle_nodes.count(ends.src) && middle_nodes.count(ends.tgt) && coin(rng)) {
            middle_edges.insert(e);
        }
    }
    Graph kept = subgraph(top.apex, middle_nodes, middle_edges);

    TwoCell c;
    c.top = top;
    c.middle.left_foot = top.left_foot;
    c.middle.right_foot = top.right_foot;
    c.middle.apex = kept;
    c.middle.left_leg = top.left_leg;
    c.middle.left_leg.cod = kept;
    c.middle.right_leg = top.right_leg;
    c.middle.right_leg.cod = kept;

    CoconeResult grown = coproduct(kept, random_graph(rng, cfg));
    Graph bottom_apex = grown.object;
    if (!bottom_apex.nodes.empty()) {
        Id next_edge = bottom_apex.edge_bound();
        for (int extra = pick(rng, 0, 2); extra > 0; --extra) {
            bottom_apex.edges[next_edge++] =
                EdgeEnds{pick_node(rng, bottom_apex), pick_node(rng, bottom_apex)};
        }
    }
    c.bottom.left_foot = top.left_foot;
    c.bottom.right_foot = top.right_foot;
    c.bottom.apex = bottom_apex;
    GraphMorphism into_bottom = grown.left_inclusion;
    into_bottom.cod = bottom_apex;
    c.bottom.left_leg = compose_morphisms(c.middle.left_leg, into_bottom);
    c.bottom.right_leg = compose_morphisms(c.middle.right_leg, into_bottom);

    c.up_left = identity_morphism(top.left_foot);
    c.up_apex = subgraph_inclusion(top.apex, kept);
    c.up_right = identity_morphism(top.right_foot);
    c.down_left = identity_morphism(top.left_foot);
    c.down_apex = into_bottom;
    c.down_right = identity_morphism(top.right_foot);
    return c;
}

TwoCell random_cell(std::mt19937_64& rng, const LawConfig& cfg) {
    return random_globular_cell(rng, random_cospan(rng, cfg), cfg);
}

OpenGraphRule random_rule(std::mt19937_64& rng, const LawConfig& cfg) {
    Graph pattern = random_graph(rng, cfg);
    GraphMorphism kept_in_pattern = random_mono_into(rng, pattern);
    const Graph& kept = kept_in_pattern.dom;

    CoconeResult grown = coproduct(kept, random_graph(rng, cfg));
    Graph replacement = grown.object;
    if (!replacement.nodes.empty()) {
        Id next_edge = replacement.edge_bound();
        for (int extra = pick(rng, 0, 2); extra > 0; --extra) {
            replacement.edges[next_edge++] =
                EdgeEnds{pick_node(rng, replacement), pick_node(rng, replacement)};
        }
    }
    GraphMorphism kept_in_replacement = grown.left_inclusion;
    kept_in_replacement.cod = replacement;

    auto foot_into = [&](const Graph& target) {
        int bound = kept.nodes.empty() ? 0 : 2;
        Graph foot = random_edgeless(rng, bound);
        GraphMorphism leg;
        leg.dom = foot;
        leg.cod = target;
        return std::pair{foot, leg};
    };
    auto [left_foot, left_mid] = foot_into(kept);
    for (Id v : left_foot.nodes) left_mid.node_map[v] = pick_node(rng, kept);
    auto [right_foot, right_mid] = foot_into(kept);
    for (Id v : right_foot.nodes) right_mid.node_map[v] = pick_node(rng, kept);

    OpenGraphRule r;
    r.cell.middle.left_foot = left_foot;
    r.cell.middle.right_foot = right_foot;
    r.cell.middle.apex = kept;
    r.cell.middle.left_leg = left_mid;
    r.cell.middle.right_leg = right_mid;

    r.cell.top.left_foot = left_foot;
    r.cell.top.right_foot = right_foot;
    r.cell.top.apex = pattern;
    r.cell.top.left_leg = compose_morphisms(left_mid, kept_in_pattern);
    r.cell.top.right_leg = compose_morphisms(right_mid, kept_in_pattern);

    r.cell.bottom.left_foot = left_foot;
    r.cell.bottom.right_foot = right_foot;
    r.cell.bottom.apex = replacement;
    r.cell.bottom.left_leg = compose_morphisms(left_mid, kept_in_replacement);
    r.cell.bottom.right_leg = compose_morphisms(right_mid, kept_in_replacement);

    r.cell.up_left = identity_morphism(left_foot);
    r.cell.up_apex = kept_in_pattern;
    r.cell.up_right = identity_morphism(right_foot);
    r.cell.down_left = identity_morphism(left_foot);
    r.cell.down_apex = kept_in_replacement;
    r.cell.down_right = identity_morphism(right_foot);
    return r;
}

namespace {

using Pieces = std::map<std::string, Document>;

bool law_interchange(std::mt19937_64& rng, const LawConfig& cfg, Pieces& pieces) {
    Graph f0 = random_edgeless(rng, cfg.max_nodes);
    Graph f1 = random_edgeless(rng, cfg.max_nodes);
    Graph f2 = random_edgeless(rng, cfg.max_nodes);
    TwoCell a = random_globular_cell(rng, random_open_cospan(rng, f0, f1, cfg), cfg);
    TwoCell c = random_globular_cell(rng, a.bottom, cfg);
    TwoCell b = random_globular_cell(rng, random_open_cospan(rng, f1, f2, cfg), cfg);
    TwoCell d = random_globular_cell(rng, b.bottom, cfg);
    pieces.emplace("a", Document{k_format_version, a});
    pieces.emplace("b", Document{k_format_version, b});
    pieces.emplace("c", Document{k_format_version, c});
    pieces.emplace("d", Document{k_format_version, d});

    TwoCell glue_first =
        vertical_compose(horizontal_compose(a, b), horizontal_compose(c, d));
    TwoCell stack_first =
        horizontal_compose(vertical_compose(a, c), vertical_compose(b, d));
    return cells_isomorphic(glue_first, stack_first);
}

bool law_associator_unitor(std::mt19937_64& rng, const LawConfig& cfg, Pieces& pieces) {
    Graph f0 = random_edgeless(rng, cfg.max_nodes);
    Graph f1 = random_edgeless(rng, cfg.max_nodes);
    Graph f2 = random_edgeless(rng, cfg.max_nodes);
    Graph f3 = random_edgeless(rng, cfg.max_nodes);
    Graph f4 = random_edgeless(rng, cfg.max_nodes);
    Cospan m = random_open_cospan(rng, f0, f1, cfg);
    Cospan n = random_open_cospan(rng, f1, f2, cfg);
    Cospan p = random_open_cospan(rng, f2, f3, cfg);
    Cospan q = random_open_cospan(rng, f3, f4, cfg);
    pieces.emplace("m", Document{k_format_version, m});
    pieces.emplace("n", Document{k_format_version, n});
    pieces.emplace("p", Document{k_format_version, p});
    pieces.emplace("q", Document{k_format_version, q});

    TwoCell two_step = vertical_compose(associator_cell(compose_cospans(m, n), p, q),
                                        associator_cell(m, n, compose_cospans(p, q)));
    TwoCell three_step = vertical_compose(
        vertical_compose(horizontal_compose(associator_cell(m, n, p), identity_cell(q)),
                         associator_cell(m, compose_cospans(n, p), q)),
        horizontal_compose(identity_cell(m), associator_cell(n, p, q)));
    if (two_step.top != three_step.top || two_step.bottom != three_step.bottom) {
        return false;
    }
    if (!cells_isomorphic(two_step, three_step)) return false;

    TwoCell bent = vertical_compose(
        associator_cell(m, identity_cospan(f1), n),
        horizontal_compose(identity_cell(m), left_unitor_cell(n)));
    TwoCell straight = horizontal_compose(right_unitor_cell(m), identity_cell(n));
    if (bent.top != straight.top || bent.bottom != straight.bottom) return false;
    if (!cells_isomorphic(bent, straight)) return false;

    return classify_morphism(left_unitor_cell(m).down_apex).iso &&
           classify_morphism(right_unitor_cell(n).down_apex).iso;
}

bool law_interchanger_coherence(std::mt19937_64& rng, const LawConfig& cfg,
                                Pieces& pieces) {
    std::vector<Graph> feet;
    for (int i = 0; i < 9; ++i) feet.push_back(random_edgeless(rng, cfg.max_nodes));
    Cospan m1 = random_open_cospan(rng, feet[0], feet[1], cfg);
    Cospan m2 = random_open_cospan(rng, feet[1], feet[2], cfg);
    Cospan n1 = random_open_cospan(rng, feet[3], feet[4], cfg);
    Cospan n2 = random_open_cospan(rng, feet[4], feet[5], cfg);
    Cospan p1 = random_open_cospan(rng, feet[6], feet[7], cfg);
    Cospan p2 = random_open_cospan(rng, feet[7], feet[8], cfg);
    pieces.emplace("m1", Document{k_format_version, m1});
    pieces.emplace("m2", Document{k_format_version, m2});
    pieces.emplace("n1", Document{k_format_version, n1});
    pieces.emplace("n2", Document{k_format_version, n2});
    pieces.emplace("p1", Document{k_format_version, p1});
    pieces.emplace("p2", Document{k_format_version, p2});

    TwoCell route_a = vertical_compose(
        interchanger_cell(m1, tensor_cospans(n1, p1), m2, tensor_cospans(n2, p2)),
        tensor_cells(identity_cell(compose_cospans(m1, m2)),
                     interchanger_cell(n1, p1, n2, p2)));
    TwoCell route_b = vertical_compose(
        interchanger_cell(tensor_cospans(m1, n1), p1, tensor_cospans(m2, n2), p2),
        tensor_cells(interchanger_cell(m1, n1, m2, n2),
                     identity_cell(compose_cospans(p1, p2))));
    if (route_a.top != route_b.top || route_a.bottom != route_b.bottom) return false;
    if (!cells_isomorphic(route_a, route_b)) return false;

    TwoCell unit_comparison = unit_interchanger_cell(feet[0], feet[3]);
    return unit_comparison == identity_cell(unit_comparison.top) &&
           unit_comparison.top ==
               identity_cospan(coproduct(feet[0], feet[3]).object);
}

bool law_companion_equations(std::mt19937_64& rng, const LawConfig& cfg,
                             Pieces& pieces) {
    VerticalSpan f = random_iso_span(rng, cfg);
    pieces.emplace("interface", Document{k_format_version, f});

    CompanionCells cc = companion_of(f);
    if (!cells_isomorphic(vertical_compose(cc.unit, cc.counit), unit_cell(f))) {
        return false;
    }
    TwoCell companion_loop = vertical_compose(
        vertical_compose(flip_cell(left_unitor_cell(cc.companion)),
                         horizontal_compose(cc.unit, cc.counit)),
        right_unitor_cell(cc.companion));
    if (!cells_isomorphic(companion_loop, identity_cell(cc.companion))) return false;

    CompanionCells cj = conjoint_of(f);
    if (!cells_isomorphic(vertical_compose(cj.unit, cj.counit), unit_cell(f))) {
        return false;
    }
    TwoCell conjoint_loop = vertical_compose(
        vertical_compose(flip_cell(right_unitor_cell(cj.companion)),
                         horizontal_compose(cj.counit, cj.unit)),
        left_unitor_cell(cj.companion));
    return cells_isomorphic(conjoint_loop, identity_cell(cj.companion));
}

bool law_mono_preservation(std::mt19937_64& rng, const LawConfig& cfg, Pieces& pieces) {
    Graph shared = random_graph(rng, cfg);
    GraphMorphism mono = random_mono_into(rng, shared);
    GraphMorphism any = random_morphism_from(rng, mono.dom, cfg);
    pieces.emplace("mono", Document{k_format_version, mono});
    pieces.emplace("other", Document{k_format_version, any});

    // the inclusion opposite the monic leg stays monic
    if (!classify_morphism(pushout(mono, any).right_inclusion).mono) return false;
    if (!classify_morphism(pushout(any, mono).left_inclusion).mono) return false;

    Graph target = random_graph(rng, cfg);
    GraphMorphism monic_leg = random_mono_into(rng, target);
    GraphMorphism other_leg = random_morphism_into(rng, target, cfg);
    pieces.emplace("cospan_mono", Document{k_format_version, monic_leg});
    pieces.emplace("cospan_other", Document{k_format_version, other_leg});

    // dually, the projection opposite the monic leg stays monic
    if (!classify_morphism(pullback(monic_leg, other_leg).right_projection).mono) {
        return false;
    }
    return classify_morphism(pullback(other_leg, monic_leg).left_projection).mono;
}

bool law_snake(std::mt19937_64& rng, const LawConfig& cfg, Pieces& pieces) {
    Graph x = random_graph(rng, cfg);
    pieces.emplace("wire", Document{k_format_version, x});

    if (!verify_fold_pushout(x, cfg.budget)) return false;
    TwoCell right = snake_right_cell(x);
    TwoCell left = snake_left_cell(x);
    Cospan wire = identity_cospan(x);
    return right.bottom == wire && left.bottom == wire &&
           cospans_isomorphic(right.top, wire) && cospans_isomorphic(left.top, wire);
}

bool law_dpo_soundness(std::mt19937_64& rng, const LawConfig& cfg, Pieces& pieces) {
    OpenGraphRule r = random_rule(rng, cfg);
    pieces.emplace("rule", Document{k_format_version, r});

    CoconeResult placed = coproduct(r.cell.top.apex, random_graph(rng, cfg));
    Cospan host;
    host.left_foot = r.cell.top.left_foot;
    host.right_foot = r.cell.top.right_foot;
    host.apex = placed.object;
    host.left_leg = compose_morphisms(r.cell.top.left_leg, placed.left_inclusion);
    host.right_leg = compose_morphisms(r.cell.top.right_leg, placed.left_inclusion);
    pieces.emplace("host", Document{k_format_version, host});

    MatchResult at;
    at.match = placed.left_inclusion;
    at.left_alignment = identity_morphism(host.left_foot);
    at.right_alignment = identity_morphism(host.right_foot);

    auto found = find_matches(r, host, cfg.budget);
    if (std::find(found.begin(), found.end(), at) == found.end()) return false;

    ApplyResult out = apply_rule(r, host, at);
    if (out.witness.top != host || out.witness.bottom != out.result) return false;
    if (!is_globular(out.witness)) return false;

    MatchResult back_at;
    back_at.match = out.comatch;
    back_at.left_alignment = identity_morphism(host.left_foot);
    back_at.right_alignment = identity_morphism(host.right_foot);
    ApplyResult back = apply_rule(invert_rule(r), out.result, back_at);
    return cospans_isomorphic(back.result, host);
}

using LawBody = bool (*)(std::mt19937_64&, const LawConfig&, Pieces&);

const std::vector<std::pair<std::string, LawBody>>& law_table() {
    static const std::vector<std::pair<std::string, LawBody>> table = {
        {"interchange", law_interchange},
        {"associator_unitor", law_associator_unitor},
        {"interchanger_coherence", law_interchanger_coherence},
        {"companion_equations", law_companion_equations},
        {"mono_preservation", law_mono_preservation},
        {"snake", law_snake},
        {"dpo_soundness", law_dpo_soundness},
    };
    return table;
}

std::string instance_detail(const std::string& law, const Pieces& pieces,
                            const std::string& error) {
    nlohmann::json j;
    j["law"] = law;
    if (!error.empty()) j["error"] = error;
    nlohmann::json inner = nlohmann::json::object();
    for (const auto& [name, doc] : pieces) {
        inner[name] = to_json(canonical_document(doc));
    }
    j["pieces"] = std::move(inner);
    return j.dump();
}

}  // namespace

const std::vector<std::string>& law_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& [name, body] : law_table()) {
            (void)body;
            out.push_back(name);
        }
        return out;
    }();
    return ids;
}

LawReport check_law(const std::string& law, const std::vector<std::uint64_t>& seeds,
                    const LawConfig& cfg) {
    LawBody body = nullptr;
    for (const auto& [name, candidate] : law_table()) {
        if (name == law) {
            body = candidate;
            break;
        }
    }
    if (body == nullptr) {
        throw InvariantError("check_law: unknown law id '" + law + "'");
    }

    LawReport report;
    report.law = law;
    for (std::uint64_t seed : seeds) {
        ++report.trials;
        std::mt19937_64 rng(seed);
        Pieces pieces;
        bool passed = false;
        try {
            passed = body(rng, cfg, pieces);
        } catch (const BudgetError& e) {
            ++report.budget_errors;
            if (!report.first_error) report.first_error = LawIncident{seed, e.what()};
            continue;
        } catch (const Error& e) {
            ++report.failures;
            if (!report.first_failure) {
                report.first_failure =
                    LawIncident{seed, instance_detail(law, pieces, e.what())};
            }
            continue;
        }
        if (passed) {
            ++report.passes;
        } else {
            ++report.failures;
            if (!report.first_failure) {
                report.first_failure = LawIncident{seed, instance_detail(law, pieces, "")};
            }
        }
    }
    return report;
}

std::vector<LawReport> run_law_suite(const std::vector<std::uint64_t>& seeds,
                                     const LawConfig& cfg) {
    std::vector<LawReport> out;
    for (const std::string& law : law_ids()) {
        out.push_back(check_law(law, seeds, cfg));
    }
    return out;
}

}  // namespace og
