#include <og/cospan.hpp>

#include <og/errors.hpp>

namespace og {

void validate(const Cospan& c) {
    validate(c.left_leg);
    validate(c.right_leg);
    if (c.left_leg.dom != c.left_foot || c.right_leg.dom != c.right_foot) {
        throw InvariantError("cospan: legs do not start at the feet");
    }
    if (c.left_leg.cod != c.apex || c.right_leg.cod != c.apex) {
        throw InvariantError("cospan: legs do not end at the apex");
    }
}

void validate(const VerticalSpan& s) {
    validate(s.up);
    validate(s.down);
    if (s.up.dom != s.apex || s.down.dom != s.apex) {
        throw InvariantError("span: legs do not start at the apex");
    }
    if (s.up.cod != s.top_foot || s.down.cod != s.bottom_foot) {
        throw InvariantError("span: legs do not end at the feet");
    }
    if (!classify_morphism(s.up).mono || !classify_morphism(s.down).mono) {
        throw InvariantError("span: legs must be monomorphisms");
    }
}

Cospan identity_cospan(const Graph& x) {
    Cospan c;
    c.left_foot = x;
    c.right_foot = x;
    c.apex = x;
    c.left_leg = identity_morphism(x);
    c.right_leg = identity_morphism(x);
    return c;
}

VerticalSpan identity_span(const Graph& x) {
    VerticalSpan s;
    s.top_foot = x;
    s.bottom_foot = x;
    s.apex = x;
    s.up = identity_morphism(x);
    s.down = identity_morphism(x);
    return s;
}

bool is_identity_span(const VerticalSpan& s) {
    return is_identity(s.up) && is_identity(s.down);
}

VerticalSpan span_from_monomorphism(const GraphMorphism& f) {
    validate(f);
    if (!classify_morphism(f).mono) {
        throw InvariantError("span_from_monomorphism: map is not monic");
    }
    VerticalSpan s;
    s.top_foot = f.dom;
    s.bottom_foot = f.cod;
    s.apex = f.dom;
    s.up = identity_morphism(f.dom);
    s.down = f;
    return s;
}

CospanComposite compose_cospans_tracked(const Cospan& m, const Cospan& n) {
    if (m.right_foot != n.left_foot) {
        throw BoundaryError("compose_cospans: middle feet do not match");
    }
    auto po = pushout(m.right_leg, n.left_leg);
    CospanComposite out;
    out.left_part = po.left_inclusion;
    out.right_part = po.right_inclusion;
    out.cospan.left_foot = m.left_foot;
    out.cospan.right_foot = n.right_foot;
    out.cospan.apex = po.object;
    out.cospan.left_leg = compose_morphisms(m.left_leg, po.left_inclusion);
    out.cospan.right_leg = compose_morphisms(n.right_leg, po.right_inclusion);
    return out;
}

Cospan compose_cospans(const Cospan& m, const Cospan& n) {
    return compose_cospans_tracked(m, n).cospan;
}

SpanComposite compose_spans_tracked(const VerticalSpan& s, const VerticalSpan& t) {
    if (s.bottom_foot != t.top_foot) {
        throw BoundaryError("compose_spans: middle feet do not match");
    }
    SpanComposite out;
    if (is_identity_span(s)) {
        out.span = t;
        out.left_part = t.up;
        out.right_part = identity_morphism(t.apex);
        return out;
    }
    if (is_identity_span(t)) {
        out.span = s;
        out.left_part = identity_morphism(s.apex);
        out.right_part = s.down;
        return out;
    }
    auto pb = pullback(s.down, t.up);
    out.left_part = pb.left_projection;
    out.right_part = pb.right_projection;
    out.span.top_foot = s.top_foot;
    out.span.bottom_foot = t.bottom_foot;
    out.span.apex = pb.object;
    out.span.up = compose_morphisms(pb.left_projection, s.up);
    out.span.down = compose_morphisms(pb.right_projection, t.down);
    return out;
}

VerticalSpan compose_spans(const VerticalSpan& s, const VerticalSpan& t) {
    return compose_spans_tracked(s, t).span;
}

Cospan tensor_cospans(const Cospan& m, const Cospan& n) {
    Cospan out;
    out.left_foot = coproduct(m.left_foot, n.left_foot).object;
    out.right_foot = coproduct(m.right_foot, n.right_foot).object;
    out.apex = coproduct(m.apex, n.apex).object;
    out.left_leg = coproduct_of_morphisms(m.left_leg, n.left_leg);
    out.right_leg = coproduct_of_morphisms(m.right_leg, n.right_leg);
    return out;
}

VerticalSpan tensor_spans(const VerticalSpan& s, const VerticalSpan& t) {
    VerticalSpan out;
    out.top_foot = coproduct(s.top_foot, t.top_foot).object;
    out.bottom_foot = coproduct(s.bottom_foot, t.bottom_foot).object;
    out.apex = coproduct(s.apex, t.apex).object;
    out.up = coproduct_of_morphisms(s.up, t.up);
    out.down = coproduct_of_morphisms(s.down, t.down);
    return out;
}

GraphMorphism swap_morphism(const Graph& x, const Graph& y) {
    auto xy = coproduct(x, y);
    auto yx = coproduct(y, x);
    GraphMorphism f;
    f.dom = xy.object;
    f.cod = yx.object;
    for (Id v : x.nodes) {
        f.node_map[xy.left_inclusion.on_node(v)] = yx.right_inclusion.on_node(v);
    }
    for (const auto& [e, ends] : x.edges) {
        (void)ends;
        f.edge_map[xy.left_inclusion.on_edge(e)] = yx.right_inclusion.on_edge(e);
    }
    for (Id v : y.nodes) {
        f.node_map[xy.right_inclusion.on_node(v)] = yx.left_inclusion.on_node(v);
    }
    for (const auto& [e, ends] : y.edges) {
        (void)ends;
        f.edge_map[xy.right_inclusion.on_edge(e)] = yx.left_inclusion.on_edge(e);
    }
    validate(f);
    if (!classify_morphism(f).iso) {
        throw InternalError("swap_morphism: exchange map is not an isomorphism");
    }
    return f;
}

bool cospans_isomorphic(const Cospan& m, const Cospan& n) {
    if (m.left_foot != n.left_foot || m.right_foot != n.right_foot) {
        return false;
    }
    IsoConstraints cs;
    cs.incoming.push_back({m.left_leg, n.left_leg});
    cs.incoming.push_back({m.right_leg, n.right_leg});
    return find_commuting_isomorphism(m.apex, n.apex, cs).has_value();
}

std::optional<GraphMorphism> span_isomorphism(const VerticalSpan& s, const VerticalSpan& t) {
    if (s.top_foot != t.top_foot || s.bottom_foot != t.bottom_foot) {
        return std::nullopt;
    }
    IsoConstraints cs;
    cs.outgoing.push_back({s.up, t.up});
    cs.outgoing.push_back({s.down, t.down});
    return find_commuting_isomorphism(s.apex, t.apex, cs);
}

bool spans_isomorphic(const VerticalSpan& s, const VerticalSpan& t) {
    return span_isomorphism(s, t).has_value();
}

}  // namespace og
