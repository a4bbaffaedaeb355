#include <doctest.h>

#include <og/compact.hpp>
#include <og/errors.hpp>

using namespace og;

namespace {

Graph single_node() {
    Graph g;
    g.nodes = {0};
    return g;
}

Graph single_edge() {
    Graph g;
    g.nodes = {0, 1};
    g.edges = {{0, {0, 1}}};
    return g;
}

Graph single_loop() {
    Graph g;
    g.nodes = {0};
    g.edges = {{0, {0, 0}}};
    return g;
}

Graph triangle() {
    Graph g;
    g.nodes = {0, 1, 2};
    g.edges = {{0, {0, 1}}, {1, {1, 2}}, {2, {2, 0}}};
    return g;
}

}  // namespace

TEST_CASE("capping cospans have folded legs") {
    Graph x = single_edge();
    Cospan e = counit_cospan(x);
    validate(e);
    CHECK(e.left_foot.nodes == std::set<Id>{0, 1, 2, 3});
    CHECK(e.left_foot.edges.size() == 2);
    CHECK(e.apex == x);
    CHECK(e.right_foot == empty_graph());
    CHECK(e.left_leg.node_map == std::map<Id, Id>{{0, 0}, {1, 1}, {2, 0}, {3, 1}});
    CHECK(e.left_leg.edge_map == std::map<Id, Id>{{0, 0}, {1, 0}});

    Cospan u = unit_cospan(x);
    validate(u);
    CHECK(u.left_foot == empty_graph());
    CHECK(u.right_leg == e.left_leg);
}

TEST_CASE("the fold square is a pushout on small graphs") {
    CHECK(verify_fold_pushout(empty_graph()));
    CHECK(verify_fold_pushout(single_node()));
    CHECK(verify_fold_pushout(single_edge()));
    CHECK(verify_fold_pushout(single_loop()));
    CHECK(verify_fold_pushout(triangle()));

    Graph parallel;
    parallel.nodes = {0, 1};
    parallel.edges = {{0, {0, 1}}, {1, {0, 1}}};
    CHECK(verify_fold_pushout(parallel));
}

TEST_CASE("the oracle rejects a wrong fold square") {
    // both legs fold the same two copies: the claimed closure overshoots
    Graph x = single_node();
    GraphMorphism same =
        coproduct_of_morphisms(identity_morphism(x), codiagonal(x));
    CHECK_FALSE(verify_universal_property(SquareKind::pushout, same, same,
                                          codiagonal(x), codiagonal(x)));
}

TEST_CASE("fold verification respects its budget") {
    CHECK_THROWS_AS(verify_fold_pushout(triangle(), 3), BudgetError);
}

TEST_CASE("zig-zag composites collapse to the identity wire") {
    for (const Graph& x :
         {empty_graph(), single_node(), single_edge(), single_loop(), triangle()}) {
        TwoCell right = snake_right_cell(x);
        CHECK(is_globular(right));
        CHECK(right.bottom == identity_cospan(x));
        CHECK(cospans_isomorphic(right.top, identity_cospan(x)));

        TwoCell left = snake_left_cell(x);
        CHECK(left.bottom == identity_cospan(x));
        CHECK(cospans_isomorphic(left.top, identity_cospan(x)));

        CHECK(cells_isomorphic(vertical_compose(flip_cell(right), right),
                               identity_cell(identity_cospan(x))));
        CHECK(cells_isomorphic(vertical_compose(right, flip_cell(right)),
                               identity_cell(right.top)));
    }
}

TEST_CASE("zig-zag boundaries are the expected tensors") {
    Graph x = single_edge();
    TwoCell right = snake_right_cell(x);
    CHECK(right.top ==
          compose_cospans(tensor_cospans(identity_cospan(x), unit_cospan(x)),
                          tensor_cospans(counit_cospan(x), identity_cospan(x))));
    TwoCell left = snake_left_cell(x);
    CHECK(left.top ==
          compose_cospans(tensor_cospans(unit_cospan(x), identity_cospan(x)),
                          tensor_cospans(identity_cospan(x), counit_cospan(x))));
}
