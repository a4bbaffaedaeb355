// Acceptance gate: one line per criterion, PASS/FAIL, nonzero exit on any FAIL.
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include <og/compact.hpp>
#include <og/lawcheck.hpp>
#include <og/limits.hpp>
#include <og/rewrite.hpp>
#include <og/serialize.hpp>

using namespace og;

namespace {

struct FaultGuard {
    std::atomic<bool>& flag;
    explicit FaultGuard(std::atomic<bool>& f) : flag(f) { flag = true; }
    ~FaultGuard() { flag = false; }
};

std::vector<std::uint64_t> seeds(std::uint64_t from, std::uint64_t count) {
    std::vector<std::uint64_t> s(count);
    std::iota(s.begin(), s.end(), from);
    return s;
}

Graph nodes_only(std::initializer_list<Id> ids) {
    Graph g;
    g.nodes = ids;
    return g;
}

GraphMorphism node_morphism(const Graph& dom, const Graph& cod, std::map<Id, Id> nodes,
                            std::map<Id, Id> edges = {}) {
    GraphMorphism f;
    f.dom = dom;
    f.cod = cod;
    f.node_map = std::move(nodes);
    f.edge_map = std::move(edges);
    return f;
}

Cospan point_to_point(const Graph& apex, Id left_image, Id right_image) {
    Cospan c;
    c.left_foot = nodes_only({0});
    c.right_foot = nodes_only({0});
    c.apex = apex;
    c.left_leg = node_morphism(c.left_foot, apex, {{0, left_image}});
    c.right_leg = node_morphism(c.right_foot, apex, {{0, right_image}});
    return c;
}

// replaces the middle node of a 2-step path by a diamond of fresh nodes
OpenGraphRule split_rule() {
    Graph pattern;
    pattern.nodes = {0, 1, 2};
    pattern.edges = {{0, {0, 1}}, {1, {1, 2}}};

    Graph preserved = nodes_only({0, 2});

    Graph replacement;
    replacement.nodes = {0, 1, 2, 3, 4, 5};
    replacement.edges = {{0, {0, 1}}, {1, {1, 2}}, {2, {1, 3}},
                         {3, {2, 4}}, {4, {3, 4}}, {5, {4, 5}}};

    OpenGraphRule r;
    r.cell.top = point_to_point(pattern, 0, 2);
    r.cell.middle.left_foot = r.cell.top.left_foot;
    r.cell.middle.right_foot = r.cell.top.right_foot;
    r.cell.middle.apex = preserved;
    r.cell.middle.left_leg = node_morphism(r.cell.middle.left_foot, preserved, {{0, 0}});
    r.cell.middle.right_leg = node_morphism(r.cell.middle.right_foot, preserved, {{0, 2}});
    r.cell.bottom = point_to_point(replacement, 0, 5);
    r.cell.up_left = identity_morphism(r.cell.top.left_foot);
    r.cell.up_apex = node_morphism(preserved, pattern, {{0, 0}, {2, 2}});
    r.cell.up_right = identity_morphism(r.cell.top.right_foot);
    r.cell.down_left = identity_morphism(r.cell.top.left_foot);
    r.cell.down_apex = node_morphism(preserved, replacement, {{0, 0}, {2, 5}});
    r.cell.down_right = identity_morphism(r.cell.top.right_foot);
    return r;
}

// contracts two parallel 2-step paths to a single edge, interfaces at the ends
OpenGraphRule contract_rule() {
    Graph pattern;
    pattern.nodes = {0, 1, 2, 3, 4};
    pattern.edges = {{0, {0, 1}}, {1, {1, 4}}, {2, {2, 3}}, {3, {3, 4}}};

    Graph preserved = nodes_only({0, 4});

    Graph replacement;
    replacement.nodes = {0, 4};
    replacement.edges = {{0, {0, 4}}};

    OpenGraphRule r;
    r.cell.top = point_to_point(pattern, 0, 4);
    r.cell.middle.left_foot = r.cell.top.left_foot;
    r.cell.middle.right_foot = r.cell.top.right_foot;
    r.cell.middle.apex = preserved;
    r.cell.middle.left_leg = node_morphism(r.cell.middle.left_foot, preserved, {{0, 0}});
    r.cell.middle.right_leg = node_morphism(r.cell.middle.right_foot, preserved, {{0, 4}});
    r.cell.bottom = point_to_point(replacement, 0, 4);
    r.cell.up_left = identity_morphism(r.cell.top.left_foot);
    r.cell.up_apex = node_morphism(preserved, pattern, {{0, 0}, {4, 4}});
    r.cell.up_right = identity_morphism(r.cell.top.right_foot);
    r.cell.down_left = identity_morphism(r.cell.top.left_foot);
    r.cell.down_apex = node_morphism(preserved, replacement, {{0, 0}, {4, 4}});
    r.cell.down_right = identity_morphism(r.cell.top.right_foot);
    return r;
}

Cospan merge_cospan() {
    Graph apex;
    apex.nodes = {0, 1, 2};
    apex.edges = {{0, {0, 2}}, {1, {1, 2}}};
    Cospan c;
    c.left_foot = nodes_only({0, 1});
    c.right_foot = nodes_only({0});
    c.apex = apex;
    c.left_leg = node_morphism(c.left_foot, apex, {{0, 0}, {1, 1}});
    c.right_leg = node_morphism(c.right_foot, apex, {{0, 2}});
    return c;
}

Cospan wire_cospan() {
    Graph apex;
    apex.nodes = {0, 1};
    apex.edges = {{0, {0, 1}}};
    Cospan c;
    c.left_foot = nodes_only({0});
    c.right_foot = nodes_only({0});
    c.apex = apex;
    c.left_leg = node_morphism(c.left_foot, apex, {{0, 0}});
    c.right_leg = node_morphism(c.right_foot, apex, {{0, 1}});
    return c;
}

// every graph with at most `max_nodes` nodes and `max_edges` edges
std::vector<Graph> all_small_graphs(int max_nodes, int max_edges) {
    std::vector<Graph> out;
    for (int n = 0; n <= max_nodes; ++n) {
        Graph base;
        for (int v = 0; v < n; ++v) base.nodes.insert(v);
        int pairs = n * n;
        int top = n == 0 ? 0 : max_edges;
        for (int k = 0; k <= top; ++k) {
            // one graph per tuple of k (src,tgt) choices
            std::vector<int> choice(k, 0);
            while (true) {
                Graph g = base;
                for (int e = 0; e < k; ++e)
                    g.edges[e] = {choice[e] / n, choice[e] % n};
                out.push_back(g);
                int pos = k - 1;
                while (pos >= 0 && choice[pos] == pairs - 1) choice[pos--] = 0;
                if (pos < 0) break;
                ++choice[pos];
            }
        }
    }
    return out;
}

bool criterion_universal_oracle(std::string& detail) {
    LawConfig cfg;
    cfg.max_nodes = 5;
    cfg.max_edges = 6;
    int pushouts = 0;
    int pullbacks = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        std::mt19937_64 rng(seed);
        Graph a = random_graph(rng, cfg);
        GraphMorphism f = random_morphism_from(rng, a, cfg);
        GraphMorphism g = random_morphism_from(rng, a, cfg);
        CoconeResult po = pushout(f, g);
        if (!verify_universal_property(SquareKind::pushout, f, g, po.left_inclusion,
                                       po.right_inclusion)) {
            detail = "pushout oracle rejected seed " + std::to_string(seed);
            return false;
        }
        ++pushouts;
    }
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        std::mt19937_64 rng(seed);
        Graph d = random_graph(rng, cfg);
        GraphMorphism f = random_morphism_into(rng, d, cfg);
        GraphMorphism g = random_morphism_into(rng, d, cfg);
        ConeResult pb = pullback(f, g);
        if (!verify_universal_property(SquareKind::pullback, f, g, pb.left_projection,
                                       pb.right_projection)) {
            detail = "pullback oracle rejected seed " + std::to_string(seed);
            return false;
        }
        ++pullbacks;
    }
    detail = std::to_string(pushouts) + " pushouts and " + std::to_string(pullbacks) +
             " pullbacks satisfy the universal-property oracle";
    return true;
}

bool criterion_mono_preservation(std::string& detail) {
    LawConfig cfg;
    cfg.max_nodes = 5;
    cfg.max_edges = 6;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        std::mt19937_64 rng(seed);
        Graph b = random_graph(rng, cfg);
        GraphMorphism mono = random_mono_into(rng, b);
        GraphMorphism any = random_morphism_from(rng, mono.dom, cfg);
        if (!classify_morphism(pushout(mono, any).right_inclusion).mono) {
            detail = "pushout of a mono lost injectivity at seed " + std::to_string(seed);
            return false;
        }
        Graph d = random_graph(rng, cfg);
        GraphMorphism mono2 = random_mono_into(rng, d);
        GraphMorphism any2 = random_morphism_into(rng, d, cfg);
        if (!classify_morphism(pullback(mono2, any2).right_projection).mono) {
            detail = "pullback of a mono lost injectivity at seed " + std::to_string(seed);
            return false;
        }
    }
    detail = "200 pushouts and 200 pullbacks of a mono against an arbitrary morphism "
             "keep the opposite side monic";
    return true;
}

bool report_clean(const LawReport& r, std::uint64_t expected_trials, std::string& detail) {
    if (r.passes == expected_trials && r.failures == 0 && r.budget_errors == 0) return true;
    detail = r.law + ": " + std::to_string(r.passes) + "/" + std::to_string(r.trials) +
             " passed, " + std::to_string(r.failures) + " failed, " +
             std::to_string(r.budget_errors) + " out of budget";
    if (r.first_failure.has_value())
        detail += "; first failing seed " + std::to_string(r.first_failure->seed);
    return false;
}

bool criterion_interchange(std::string& detail) {
    LawReport r = check_law("interchange", seeds(1, 100));
    if (!report_clean(r, 100, detail)) return false;
    detail = "100 composable quadruples interchange up to cell isomorphism";
    return true;
}

bool criterion_companions(std::string& detail) {
    LawReport r = check_law("companion_equations", seeds(1, 50));
    if (!report_clean(r, 50, detail)) return false;
    detail = "both companion equations hold for 50 invertible-leg spans";
    return true;
}

bool criterion_fold_pushout(std::string& detail) {
    std::vector<Graph> corpus = all_small_graphs(2, 2);
    for (const Graph& g : corpus) {
        if (!verify_fold_pushout(g)) {
            detail = "fold square is not a pushout for an exhaustive-corpus graph";
            return false;
        }
    }
    LawConfig cfg;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        std::mt19937_64 rng(seed);
        Graph g = random_graph(rng, cfg);
        if (!verify_fold_pushout(g)) {
            detail = "fold square is not a pushout at seed " + std::to_string(seed);
            return false;
        }
    }
    detail = "fold square verified on all " + std::to_string(corpus.size()) +
             " graphs with <=2 nodes/<=2 edges plus 50 seeded graphs";
    return true;
}

bool criterion_snake(std::string& detail) {
    std::vector<Graph> corpus = all_small_graphs(2, 2);
    LawConfig cfg;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        std::mt19937_64 rng(seed);
        corpus.push_back(random_graph(rng, cfg));
    }
    for (const Graph& x : corpus) {
        Cospan unit = identity_cospan(x);
        if (!cospans_isomorphic(snake_right_cell(x).top, unit) ||
            !cospans_isomorphic(snake_left_cell(x).top, unit)) {
            detail = "a zig-zag composite is not isomorphic to the identity cospan";
            return false;
        }
    }
    detail = "both zig-zag composites are isomorphic to the identity cospan on " +
             std::to_string(corpus.size()) + " graphs";
    return true;
}

bool criterion_worked_examples(std::string& detail) {
    // node replacement: splitting the middle of a path into a diamond
    OpenGraphRule split = split_rule();
    validate(split);
    Cospan host = split.cell.top;
    std::vector<MatchResult> matches = find_matches(split, host);
    if (matches.empty()) {
        detail = "the node-replacement rule does not match its own pattern";
        return false;
    }
    ApplyResult applied = apply_rule(split, host, matches.front());
    if (!cospans_isomorphic(applied.result, split.cell.bottom)) {
        detail = "node replacement did not produce the diamond network";
        return false;
    }

    // swapping the boundary roles, and running the rule bottom-up
    OpenGraphRule dual = dualize_rule(split);
    validate(dual);
    bool roles_swapped = dual.cell.top.left_foot == split.cell.top.right_foot &&
                         dual.cell.top.right_foot == split.cell.top.left_foot &&
                         dual.cell.top.left_leg == split.cell.top.right_leg &&
                         dual.cell.top.right_leg == split.cell.top.left_leg &&
                         dual.cell.top.apex == split.cell.top.apex &&
                         dual.cell.bottom.apex == split.cell.bottom.apex;
    if (!roles_swapped) {
        detail = "dualizing did not swap the boundary roles";
        return false;
    }
    OpenGraphRule inverse = invert_rule(split);
    validate(inverse);
    bool rows_flipped = inverse.cell.top == split.cell.bottom &&
                        inverse.cell.bottom == split.cell.top &&
                        inverse.cell.up_apex == split.cell.down_apex &&
                        inverse.cell.down_apex == split.cell.up_apex &&
                        inverse.cell.middle == split.cell.middle;
    if (!rows_flipped) {
        detail = "inverting did not flip the rows";
        return false;
    }

    // composing two open graphs end to end: two wires into a node, then onward
    Cospan composite = compose_cospans(merge_cospan(), wire_cospan());
    Graph shown;
    shown.nodes = {0, 1, 2, 3};
    shown.edges = {{0, {0, 2}}, {1, {1, 2}}, {2, {2, 3}}};
    Cospan displayed;
    displayed.left_foot = nodes_only({0, 1});
    displayed.right_foot = nodes_only({0});
    displayed.apex = shown;
    displayed.left_leg = node_morphism(displayed.left_foot, shown, {{0, 0}, {1, 1}});
    displayed.right_leg = node_morphism(displayed.right_foot, shown, {{0, 3}});
    if (!cospans_isomorphic(composite, displayed)) {
        detail = "composing the two displayed open graphs missed the displayed composite";
        return false;
    }

    // contracting two parallel paths to one edge, interfaces preserved
    OpenGraphRule contract = contract_rule();
    validate(contract);
    if (!is_globular(contract.cell)) {
        detail = "the contraction cell is not globular";
        return false;
    }
    std::vector<MatchResult> cm = find_matches(contract, contract.cell.top);
    if (cm.empty()) {
        detail = "the contraction rule does not match its own pattern";
        return false;
    }
    if (!cospans_isomorphic(apply_rule(contract, contract.cell.top, cm.front()).result,
                            contract.cell.bottom)) {
        detail = "contracting the parallel paths missed the single-edge open graph";
        return false;
    }

    detail = "node replacement, its dual and inverse, the composition figure, and the "
             "path-contraction rewrite all reproduce the displayed results";
    return true;
}

bool criterion_reversibility(std::string& detail) {
    LawReport r = check_law("dpo_soundness", seeds(1, 50));
    if (!report_clean(r, 50, detail)) return false;
    detail = "50 seeded applications invert at the comatch back to the host up to iso";
    return true;
}

bool criterion_serialization(std::string& detail) {
    LawConfig cfg;
    int round_trips = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        std::mt19937_64 rng(seed);
        std::vector<Document> docs;
        auto add = [&docs](auto value) {
            Document d;
            d.payload = std::move(value);
            docs.push_back(std::move(d));
        };
        add(random_graph(rng, cfg));
        add(random_morphism(rng, cfg));
        add(random_cospan(rng, cfg));
        add(random_monic_span(rng, cfg));
        add(random_cell(rng, cfg));
        add(random_rule(rng, cfg));
        for (const Document& d : docs) {
            std::string text = serialize(d);
            Document parsed = parse(text);
            if (!(parsed == canonical_document(d))) {
                detail = "a " + document_kind(d) + " did not round-trip at seed " +
                         std::to_string(seed);
                return false;
            }
            if (serialize(parsed) != text) {
                detail = "second-pass bytes differ for a " + document_kind(d) + " at seed " +
                         std::to_string(seed);
                return false;
            }
            ++round_trips;
        }
    }
    detail = "100 seeded documents of each of the six kinds round-trip; second pass is "
             "byte-identical (" +
             std::to_string(round_trips) + " documents)";
    return true;
}

bool criterion_mutation_sensitivity(std::string& detail) {
    FaultGuard guard(fault::disable_pushout_quotient);
    LawReport r = check_law("interchange", seeds(1, 100));
    if (r.failures == 0) {
        detail = "disabling the pushout quotient went unnoticed across 100 seeds";
        return false;
    }
    detail = "disabling the pushout quotient produces " + std::to_string(r.failures) +
             " interchange failures in 100 seeds (first at seed " +
             std::to_string(r.first_failure.has_value() ? r.first_failure->seed : 0) + ")";
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        const char* name;
        std::function<bool(std::string&)> body;
        double time_limit_seconds;  // 0 = unlimited
    };
    const std::vector<Criterion> criteria = {
        {1, "universal-property oracle", criterion_universal_oracle, 60.0},
        {2, "mono preservation", criterion_mono_preservation, 0.0},
        {3, "interchange", criterion_interchange, 120.0},
        {4, "companion equations", criterion_companions, 0.0},
        {5, "fold pushout", criterion_fold_pushout, 0.0},
        {6, "snake", criterion_snake, 0.0},
        {7, "worked examples", criterion_worked_examples, 0.0},
        {8, "reversibility", criterion_reversibility, 0.0},
        {9, "serialization round-trip", criterion_serialization, 0.0},
        {10, "mutation sensitivity", criterion_mutation_sensitivity, 0.0},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        auto start = std::chrono::steady_clock::now();
        try {
            ok = c.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("unexpected error: ") + e.what();
            ok = false;
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && c.time_limit_seconds > 0 && elapsed > c.time_limit_seconds) {
            ok = false;
            detail = "finished but exceeded the " + std::to_string(c.time_limit_seconds) +
                     "s limit";
        }
        std::printf("%s criterion %2d (%s): %s [%.1fs]\n", ok ? "PASS" : "FAIL", c.number,
                    c.name, detail.c_str(), elapsed);
        std::fflush(stdout);
        if (!ok) ++failed;
    }
    if (failed == 0) {
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
        return 0;
    }
    std::printf("acceptance: %d of %zu criteria FAILED\n", failed, criteria.size());
    return 1;
}
