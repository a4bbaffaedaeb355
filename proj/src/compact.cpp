#include <og/compact.hpp>

#include <og/errors.hpp>

namespace og {

namespace {

CoconeResult as_cocone(const Graph& object, const GraphMorphism& left,
                       const GraphMorphism& right) {
    CoconeResult out;
    out.object = object;
    out.left_inclusion = left;
    out.right_inclusion = right;
    return out;
}

GraphMorphism fold_left(const Graph& x) {
    // (fold + id): x + x + x -> x + x
    return coproduct_of_morphisms(codiagonal(x), identity_morphism(x));
}

GraphMorphism fold_right(const Graph& x) {
    // (id + fold): x + x + x -> x + x
    return coproduct_of_morphisms(identity_morphism(x), codiagonal(x));
}

TwoCell snake_cell(const Cospan& first, const Cospan& second, const Graph& x) {
    auto composite = compose_cospans_tracked(first, second);
    GraphMorphism sigma = induced_from_pushout(
        as_cocone(composite.cospan.apex, composite.left_part, composite.right_part),
        codiagonal(x), codiagonal(x));
    if (!classify_morphism(sigma).iso) {
        throw InternalError("snake: zig-zag composite does not collapse to the wire");
    }
    TwoCell c;
    c.top = composite.cospan;
    c.bottom = identity_cospan(x);
    c.middle = composite.cospan;
    c.up_left = identity_morphism(composite.cospan.left_foot);
    c.up_apex = identity_morphism(composite.cospan.apex);
    c.up_right = identity_morphism(composite.cospan.right_foot);
    c.down_left = identity_morphism(composite.cospan.left_foot);
    c.down_apex = sigma;
    c.down_right = identity_morphism(composite.cospan.right_foot);
    validate(c);
    return c;
}

}  // namespace

Cospan counit_cospan(const Graph& x) {
    Cospan c;
    c.left_foot = coproduct(x, x).object;
    c.right_foot = empty_graph();
    c.apex = x;
    c.left_leg = codiagonal(x);
    c.right_leg = morphism_from_empty(x);
    return c;
}

Cospan unit_cospan(const Graph& x) {
    return mirror_cospan(counit_cospan(x));
}

bool verify_fold_pushout(const Graph& x, std::uint64_t cap) {
    GraphMorphism fold = codiagonal(x);
    return verify_universal_property(SquareKind::pushout, fold_right(x), fold_left(x),
                                     fold, fold, cap);
}

TwoCell snake_right_cell(const Graph& x) {
    Cospan first = tensor_cospans(identity_cospan(x), unit_cospan(x));
    Cospan second = tensor_cospans(counit_cospan(x), identity_cospan(x));
    return snake_cell(first, second, x);
}

TwoCell snake_left_cell(const Graph& x) {
    Cospan first = tensor_cospans(unit_cospan(x), identity_cospan(x));
    Cospan second = tensor_cospans(identity_cospan(x), counit_cospan(x));
    return snake_cell(first, second, x);
}

}  // namespace og
