#pragma once

#include <optional>

#include <og/graph.hpp>
#include <og/limits.hpp>

namespace og {

// An open graph: an apex with two interface feet mapped into it.
struct Cospan {
    Graph left_foot;
    Graph right_foot;
    Graph apex;
    GraphMorphism left_leg;   // left_foot -> apex
    GraphMorphism right_leg;  // right_foot -> apex

    friend auto operator<=>(const Cospan&, const Cospan&) = default;
};

// A vertical interface map: an apex included into two feet, both legs monic.
struct VerticalSpan {
    Graph top_foot;
    Graph bottom_foot;
    Graph apex;
    GraphMorphism up;    // apex -> top_foot
    GraphMorphism down;  // apex -> bottom_foot

    friend auto operator<=>(const VerticalSpan&, const VerticalSpan&) = default;
};

void validate(const Cospan& c);
void validate(const VerticalSpan& s);

Cospan identity_cospan(const Graph& x);
VerticalSpan identity_span(const Graph& x);
bool is_identity_span(const VerticalSpan& s);

// Span whose upper leg is the identity and whose lower leg is f; f must be monic.
VerticalSpan span_from_monomorphism(const GraphMorphism& f);

struct CospanComposite {
    Cospan cospan;
    GraphMorphism left_part;   // first apex -> composite apex
    GraphMorphism right_part;  // second apex -> composite apex
};

// Glue two cospans along the shared middle foot. The middle foot of the first
// must equal the left foot of the second on the nose.
CospanComposite compose_cospans_tracked(const Cospan& m, const Cospan& n);
Cospan compose_cospans(const Cospan& m, const Cospan& n);

struct SpanComposite {
    VerticalSpan span;
    GraphMorphism left_part;   // composite apex -> first apex
    GraphMorphism right_part;  // composite apex -> second apex
};

// Stack two spans along the shared middle foot by pullback. Composition with
// an identity span returns the other span unchanged so that identities are
// strict units.
SpanComposite compose_spans_tracked(const VerticalSpan& s, const VerticalSpan& t);
VerticalSpan compose_spans(const VerticalSpan& s, const VerticalSpan& t);

Cospan tensor_cospans(const Cospan& m, const Cospan& n);
VerticalSpan tensor_spans(const VerticalSpan& s, const VerticalSpan& t);

// The canonical isomorphism x + y -> y + x exchanging the two summands.
GraphMorphism swap_morphism(const Graph& x, const Graph& y);

// Both feet equal and the apexes related by an isomorphism commuting with the
// legs.
bool cospans_isomorphic(const Cospan& m, const Cospan& n);
std::optional<GraphMorphism> span_isomorphism(const VerticalSpan& s, const VerticalSpan& t);
bool spans_isomorphic(const VerticalSpan& s, const VerticalSpan& t);

}  // namespace og
