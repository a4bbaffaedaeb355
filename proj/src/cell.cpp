#include <og/cell.hpp>

#include <og/errors.hpp>

namespace og {

namespace {

void require_square(const GraphMorphism& leg, const GraphMorphism& apex_map,
                    const GraphMorphism& foot_map, const GraphMorphism& target_leg,
                    const char* what) {
    if (compose_morphisms(leg, apex_map) != compose_morphisms(foot_map, target_leg)) {
        throw InvariantError(what);
    }
}

void require_mono(const GraphMorphism& f, const char* what) {
    if (!classify_morphism(f).mono) {
        throw InvariantError(what);
    }
}

// Unique map u with u;pl == cone1 and u;pr == cone2, for jointly monic pl, pr.
GraphMorphism mediate(const GraphMorphism& pl, const GraphMorphism& pr,
                      const GraphMorphism& cone1, const GraphMorphism& cone2) {
    if (pl.dom != pr.dom || cone1.dom != cone2.dom || cone1.cod != pl.cod ||
        cone2.cod != pr.cod) {
        throw InternalError("mediate: cone boundaries do not line up");
    }
    std::map<std::pair<Id, Id>, Id> node_at;
    std::map<std::pair<Id, Id>, Id> edge_at;
    for (Id v : pl.dom.nodes) {
        auto key = std::make_pair(pl.on_node(v), pr.on_node(v));
        if (!node_at.emplace(key, v).second) {
            throw InternalError("mediate: projections are not jointly monic");
        }
    }
    for (const auto& [e, ends] : pl.dom.edges) {
        (void)ends;
        auto key = std::make_pair(pl.on_edge(e), pr.on_edge(e));
        if (!edge_at.emplace(key, e).second) {
            throw InternalError("mediate: projections are not jointly monic");
        }
    }
    GraphMorphism u;
    u.dom = cone1.dom;
    u.cod = pl.dom;
    for (Id v : u.dom.nodes) {
        auto it = node_at.find({cone1.on_node(v), cone2.on_node(v)});
        if (it == node_at.end()) {
            throw InternalError("mediate: cone does not factor through the apex");
        }
        u.node_map[v] = it->second;
    }
    for (const auto& [e, ends] : u.dom.edges) {
        (void)ends;
        auto it = edge_at.find({cone1.on_edge(e), cone2.on_edge(e)});
        if (it == edge_at.end()) {
            throw InternalError("mediate: cone does not factor through the apex");
        }
        u.edge_map[e] = it->second;
    }
    validate(u);
    return u;
}

CoconeResult as_cocone(const Graph& object, const GraphMorphism& left,
                       const GraphMorphism& right) {
    CoconeResult out;
    out.object = object;
    out.left_inclusion = left;
    out.right_inclusion = right;
    return out;
}

// Globular cell whose only non-identity map is a downward comparison
// isomorphism between the two apexes.
TwoCell comparison_cell(const Cospan& from, const Cospan& to, const GraphMorphism& iso) {
    if (!classify_morphism(iso).iso) {
        throw InternalError("comparison_cell: comparison map is not an isomorphism");
    }
    TwoCell c;
    c.top = from;
    c.bottom = to;
    c.middle = from;
    c.up_left = identity_morphism(from.left_foot);
    c.up_apex = identity_morphism(from.apex);
    c.up_right = identity_morphism(from.right_foot);
    c.down_left = identity_morphism(from.left_foot);
    c.down_apex = iso;
    c.down_right = identity_morphism(from.right_foot);
    validate(c);
    return c;
}

// The unique theta with theta;into2 == into1, when it exists; into2 is monic.
std::optional<GraphMorphism> forced_lift(const GraphMorphism& into1,
                                         const GraphMorphism& into2) {
    if (into1.cod != into2.cod) {
        return std::nullopt;
    }
    std::map<Id, Id> node_back;
    std::map<Id, Id> edge_back;
    for (const auto& [v, w] : into2.node_map) {
        node_back[w] = v;
    }
    for (const auto& [e, d] : into2.edge_map) {
        edge_back[d] = e;
    }
    GraphMorphism theta;
    theta.dom = into1.dom;
    theta.cod = into2.dom;
    for (Id v : theta.dom.nodes) {
        auto it = node_back.find(into1.on_node(v));
        if (it == node_back.end()) {
            return std::nullopt;
        }
        theta.node_map[v] = it->second;
    }
    for (const auto& [e, ends] : theta.dom.edges) {
        (void)ends;
        auto it = edge_back.find(into1.on_edge(e));
        if (it == edge_back.end()) {
            return std::nullopt;
        }
        theta.edge_map[e] = it->second;
    }
    validate(theta);
    return theta;
}

}  // namespace

void validate(const TwoCell& c) {
    validate(c.top);
    validate(c.bottom);
    validate(c.middle);

    auto check_map = [](const GraphMorphism& f, const Graph& dom, const Graph& cod,
                        const char* what) {
        validate(f);
        if (f.dom != dom || f.cod != cod) {
            throw InvariantError(what);
        }
        require_mono(f, what);
    };
    check_map(c.up_left, c.middle.left_foot, c.top.left_foot,
              "cell: upward left map is malformed");
    check_map(c.up_apex, c.middle.apex, c.top.apex,
              "cell: upward apex map is malformed");
    check_map(c.up_right, c.middle.right_foot, c.top.right_foot,
              "cell: upward right map is malformed");
    check_map(c.down_left, c.middle.left_foot, c.bottom.left_foot,
              "cell: downward left map is malformed");
    check_map(c.down_apex, c.middle.apex, c.bottom.apex,
              "cell: downward apex map is malformed");
    check_map(c.down_right, c.middle.right_foot, c.bottom.right_foot,
              "cell: downward right map is malformed");

    require_square(c.middle.left_leg, c.up_apex, c.up_left, c.top.left_leg,
                   "cell: upward left square does not commute");
    require_square(c.middle.right_leg, c.up_apex, c.up_right, c.top.right_leg,
                   "cell: upward right square does not commute");
    require_square(c.middle.left_leg, c.down_apex, c.down_left, c.bottom.left_leg,
                   "cell: downward left square does not commute");
    require_square(c.middle.right_leg, c.down_apex, c.down_right, c.bottom.right_leg,
                   "cell: downward right square does not commute");
}

VerticalSpan left_span(const TwoCell& c) {
    VerticalSpan s;
    s.top_foot = c.top.left_foot;
    s.bottom_foot = c.bottom.left_foot;
    s.apex = c.middle.left_foot;
    s.up = c.up_left;
    s.down = c.down_left;
    return s;
}

VerticalSpan right_span(const TwoCell& c) {
    VerticalSpan s;
    s.top_foot = c.top.right_foot;
    s.bottom_foot = c.bottom.right_foot;
    s.apex = c.middle.right_foot;
    s.up = c.up_right;
    s.down = c.down_right;
    return s;
}

VerticalSpan apex_span(const TwoCell& c) {
    VerticalSpan s;
    s.top_foot = c.top.apex;
    s.bottom_foot = c.bottom.apex;
    s.apex = c.middle.apex;
    s.up = c.up_apex;
    s.down = c.down_apex;
    return s;
}

bool is_globular(const TwoCell& c) {
    return is_identity_span(left_span(c)) && is_identity_span(right_span(c));
}

TwoCell identity_cell(const Cospan& m) {
    TwoCell c;
    c.top = m;
    c.bottom = m;
    c.middle = m;
    c.up_left = identity_morphism(m.left_foot);
    c.up_apex = identity_morphism(m.apex);
    c.up_right = identity_morphism(m.right_foot);
    c.down_left = c.up_left;
    c.down_apex = c.up_apex;
    c.down_right = c.up_right;
    return c;
}

TwoCell unit_cell(const VerticalSpan& f) {
    validate(f);
    TwoCell c;
    c.top = identity_cospan(f.top_foot);
    c.bottom = identity_cospan(f.bottom_foot);
    c.middle = identity_cospan(f.apex);
    c.up_left = f.up;
    c.up_apex = f.up;
    c.up_right = f.up;
    c.down_left = f.down;
    c.down_apex = f.down;
    c.down_right = f.down;
    return c;
}

TwoCell vertical_compose(const TwoCell& c, const TwoCell& d) {
    if (c.bottom != d.top) {
        throw BoundaryError("vertical_compose: boundary cospans do not match");
    }
    auto lc = compose_spans_tracked(left_span(c), left_span(d));
    auto rc = compose_spans_tracked(right_span(c), right_span(d));
    auto ac = compose_spans_tracked(apex_span(c), apex_span(d));

    TwoCell out;
    out.top = c.top;
    out.bottom = d.bottom;
    out.middle.left_foot = lc.span.apex;
    out.middle.right_foot = rc.span.apex;
    out.middle.apex = ac.span.apex;
    out.middle.left_leg =
        mediate(ac.left_part, ac.right_part,
                compose_morphisms(lc.left_part, c.middle.left_leg),
                compose_morphisms(lc.right_part, d.middle.left_leg));
    out.middle.right_leg =
        mediate(ac.left_part, ac.right_part,
                compose_morphisms(rc.left_part, c.middle.right_leg),
                compose_morphisms(rc.right_part, d.middle.right_leg));
    out.up_left = lc.span.up;
    out.up_apex = ac.span.up;
    out.up_right = rc.span.up;
    out.down_left = lc.span.down;
    out.down_apex = ac.span.down;
    out.down_right = rc.span.down;
    validate(out);
    return out;
}

TwoCell horizontal_compose(const TwoCell& c, const TwoCell& d) {
    if (right_span(c) != left_span(d)) {
        throw BoundaryError("horizontal_compose: shared boundary spans do not match");
    }
    auto tc = compose_cospans_tracked(c.top, d.top);
    auto bc = compose_cospans_tracked(c.bottom, d.bottom);
    auto mc = compose_cospans_tracked(c.middle, d.middle);

    TwoCell out;
    out.top = tc.cospan;
    out.bottom = bc.cospan;
    out.middle = mc.cospan;
    out.up_left = c.up_left;
    out.up_right = d.up_right;
    out.down_left = c.down_left;
    out.down_right = d.down_right;
    out.up_apex = induced_from_pushout(
        as_cocone(mc.cospan.apex, mc.left_part, mc.right_part),
        compose_morphisms(c.up_apex, tc.left_part),
        compose_morphisms(d.up_apex, tc.right_part));
    out.down_apex = induced_from_pushout(
        as_cocone(mc.cospan.apex, mc.left_part, mc.right_part),
        compose_morphisms(c.down_apex, bc.left_part),
        compose_morphisms(d.down_apex, bc.right_part));
    validate(out);
    return out;
}

TwoCell tensor_cells(const TwoCell& c, const TwoCell& d) {
    TwoCell out;
    out.top = tensor_cospans(c.top, d.top);
    out.bottom = tensor_cospans(c.bottom, d.bottom);
    out.middle = tensor_cospans(c.middle, d.middle);
    out.up_left = coproduct_of_morphisms(c.up_left, d.up_left);
    out.up_apex = coproduct_of_morphisms(c.up_apex, d.up_apex);
    out.up_right = coproduct_of_morphisms(c.up_right, d.up_right);
    out.down_left = coproduct_of_morphisms(c.down_left, d.down_left);
    out.down_apex = coproduct_of_morphisms(c.down_apex, d.down_apex);
    out.down_right = coproduct_of_morphisms(c.down_right, d.down_right);
    validate(out);
    return out;
}

TwoCell flip_cell(const TwoCell& c) {
    TwoCell out;
    out.top = c.bottom;
    out.bottom = c.top;
    out.middle = c.middle;
    out.up_left = c.down_left;
    out.up_apex = c.down_apex;
    out.up_right = c.down_right;
    out.down_left = c.up_left;
    out.down_apex = c.up_apex;
    out.down_right = c.up_right;
    return out;
}

Cospan mirror_cospan(const Cospan& m) {
    Cospan out;
    out.left_foot = m.right_foot;
    out.right_foot = m.left_foot;
    out.apex = m.apex;
    out.left_leg = m.right_leg;
    out.right_leg = m.left_leg;
    return out;
}

TwoCell mirror_cell(const TwoCell& c) {
    TwoCell out;
    out.top = mirror_cospan(c.top);
    out.bottom = mirror_cospan(c.bottom);
    out.middle = mirror_cospan(c.middle);
    out.up_left = c.up_right;
    out.up_apex = c.up_apex;
    out.up_right = c.up_left;
    out.down_left = c.down_right;
    out.down_apex = c.down_apex;
    out.down_right = c.down_left;
    return out;
}

bool cells_isomorphic(const TwoCell& c, const TwoCell& d) {
    if (c.top != d.top || c.bottom != d.bottom) {
        return false;
    }
    // The feet of a matching middle row are pinned down by the upward maps,
    // which are monic into a shared foot.
    auto theta_l = forced_lift(c.up_left, d.up_left);
    auto theta_r = forced_lift(c.up_right, d.up_right);
    if (!theta_l || !theta_r) {
        return false;
    }
    if (!classify_morphism(*theta_l).iso || !classify_morphism(*theta_r).iso) {
        return false;
    }
    if (compose_morphisms(*theta_l, d.down_left) != c.down_left ||
        compose_morphisms(*theta_r, d.down_right) != c.down_right) {
        return false;
    }
    IsoConstraints cs;
    cs.incoming.push_back(
        {c.middle.left_leg, compose_morphisms(*theta_l, d.middle.left_leg)});
    cs.incoming.push_back(
        {c.middle.right_leg, compose_morphisms(*theta_r, d.middle.right_leg)});
    cs.outgoing.push_back({c.up_apex, d.up_apex});
    cs.outgoing.push_back({c.down_apex, d.down_apex});
    return find_commuting_isomorphism(c.middle.apex, d.middle.apex, cs).has_value();
}

TwoCell associator_cell(const Cospan& m, const Cospan& n, const Cospan& p) {
    auto mn = compose_cospans_tracked(m, n);
    auto mn_p = compose_cospans_tracked(mn.cospan, p);
    auto np = compose_cospans_tracked(n, p);
    auto m_np = compose_cospans_tracked(m, np.cospan);

    GraphMorphism h = induced_from_pushout(
        as_cocone(mn.cospan.apex, mn.left_part, mn.right_part), m_np.left_part,
        compose_morphisms(np.left_part, m_np.right_part));
    GraphMorphism alpha = induced_from_pushout(
        as_cocone(mn_p.cospan.apex, mn_p.left_part, mn_p.right_part), h,
        compose_morphisms(np.right_part, m_np.right_part));
    return comparison_cell(mn_p.cospan, m_np.cospan, alpha);
}

TwoCell left_unitor_cell(const Cospan& m) {
    auto c = compose_cospans_tracked(identity_cospan(m.left_foot), m);
    GraphMorphism lambda = induced_from_pushout(
        as_cocone(c.cospan.apex, c.left_part, c.right_part), m.left_leg,
        identity_morphism(m.apex));
    return comparison_cell(c.cospan, m, lambda);
}

TwoCell right_unitor_cell(const Cospan& m) {
    auto c = compose_cospans_tracked(m, identity_cospan(m.right_foot));
    GraphMorphism rho = induced_from_pushout(
        as_cocone(c.cospan.apex, c.left_part, c.right_part),
        identity_morphism(m.apex), m.right_leg);
    return comparison_cell(c.cospan, m, rho);
}

TwoCell interchanger_cell(const Cospan& m1, const Cospan& n1, const Cospan& m2,
                          const Cospan& n2) {
    auto pa = compose_cospans_tracked(m1, m2);
    auto pb = compose_cospans_tracked(n1, n2);
    auto lhs = compose_cospans_tracked(tensor_cospans(m1, n1), tensor_cospans(m2, n2));
    Cospan rhs = tensor_cospans(pa.cospan, pb.cospan);

    GraphMorphism xi = induced_from_pushout(
        as_cocone(lhs.cospan.apex, lhs.left_part, lhs.right_part),
        coproduct_of_morphisms(pa.left_part, pb.left_part),
        coproduct_of_morphisms(pa.right_part, pb.right_part));
    return comparison_cell(lhs.cospan, rhs, xi);
}

TwoCell unit_interchanger_cell(const Graph& x, const Graph& y) {
    Graph xy = coproduct(x, y).object;
    if (tensor_cospans(identity_cospan(x), identity_cospan(y)) != identity_cospan(xy)) {
        throw InternalError(
            "unit_interchanger_cell: tensor of identity cospans is not strict");
    }
    return identity_cell(identity_cospan(xy));
}

CompanionCells companion_of(const VerticalSpan& f) {
    validate(f);
    if (!classify_morphism(f.up).iso) {
        throw InvariantError("companion_of: upper leg must be an isomorphism");
    }
    const Graph& x = f.top_foot;
    const Graph& y = f.bottom_foot;
    GraphMorphism g = compose_morphisms(inverse(f.up), f.down);  // x -> y

    CompanionCells out;
    out.companion.left_foot = x;
    out.companion.right_foot = y;
    out.companion.apex = y;
    out.companion.left_leg = g;
    out.companion.right_leg = identity_morphism(y);

    TwoCell& u = out.unit;
    u.top = identity_cospan(x);
    u.bottom = out.companion;
    u.middle.left_foot = x;
    u.middle.right_foot = f.apex;
    u.middle.apex = x;
    u.middle.left_leg = identity_morphism(x);
    u.middle.right_leg = f.up;
    u.up_left = identity_morphism(x);
    u.up_apex = identity_morphism(x);
    u.up_right = f.up;
    u.down_left = identity_morphism(x);
    u.down_apex = g;
    u.down_right = f.down;
    validate(u);

    TwoCell& e = out.counit;
    e.top = out.companion;
    e.bottom = identity_cospan(y);
    e.middle.left_foot = f.apex;
    e.middle.right_foot = y;
    e.middle.apex = y;
    e.middle.left_leg = f.down;
    e.middle.right_leg = identity_morphism(y);
    e.up_left = f.up;
    e.up_apex = identity_morphism(y);
    e.up_right = identity_morphism(y);
    e.down_left = f.down;
    e.down_apex = identity_morphism(y);
    e.down_right = identity_morphism(y);
    validate(e);
    return out;
}

CompanionCells conjoint_of(const VerticalSpan& f) {
    CompanionCells c = companion_of(f);
    CompanionCells out;
    out.companion = mirror_cospan(c.companion);
    out.unit = mirror_cell(c.unit);
    out.counit = mirror_cell(c.counit);
    return out;
}

}  // namespace og
