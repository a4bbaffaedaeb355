#include <doctest.h>

#include <og/dot.hpp>
#include <og/errors.hpp>

using namespace og;

namespace {

Graph nodes_only(std::initializer_list<Id> ids) {
    Graph g;
    g.nodes = ids;
    return g;
}

Cospan merge_cospan() {
    Cospan m;
    m.left_foot = nodes_only({0, 1});
    m.right_foot = nodes_only({0});
    m.apex.nodes = {0, 1, 2};
    m.apex.edges = {{0, {0, 2}}, {1, {1, 2}}};
    m.left_leg.dom = m.left_foot;
    m.left_leg.cod = m.apex;
    m.left_leg.node_map = {{0, 0}, {1, 1}};
    m.right_leg.dom = m.right_foot;
    m.right_leg.cod = m.apex;
    m.right_leg.node_map = {{0, 2}};
    return m;
}

Cospan wire_cospan() {
    Cospan n;
    n.left_foot = nodes_only({0});
    n.right_foot = nodes_only({0});
    n.apex.nodes = {0, 1};
    n.apex.edges = {{0, {0, 1}}};
    n.left_leg.dom = n.left_foot;
    n.left_leg.cod = n.apex;
    n.left_leg.node_map = {{0, 0}};
    n.right_leg.dom = n.right_foot;
    n.right_leg.cod = n.apex;
    n.right_leg.node_map = {{0, 1}};
    return n;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("the empty graph renders as an empty digraph") {
    CHECK(export_dot(Document{k_format_version, Graph{}}) == "digraph G {\n}\n");
}

TEST_CASE("plain graphs list nodes then labeled edges") {
    Graph g;
    g.nodes = {0, 1};
    g.edges = {{0, {0, 1}}};
    CHECK(export_dot(Document{k_format_version, g}) ==
          "digraph G {\n"
          "  0;\n"
          "  1;\n"
          "  0 -> 1 [label=\"e0\"];\n"
          "}\n");
}

TEST_CASE("a composite open graph groups boundary images into clusters") {
    Cospan composite = compose_cospans(merge_cospan(), wire_cospan());
    std::string dot = export_dot(Document{k_format_version, composite});
    CHECK(dot ==
          "digraph G {\n"
          "  subgraph cluster_inputs {\n"
          "    label=\"inputs\";\n"
          "    0;\n"
          "    1;\n"
          "  }\n"
          "  subgraph cluster_outputs {\n"
          "    label=\"outputs\";\n"
          "    4;\n"
          "  }\n"
          "  2;\n"
          "  0 -> 2 [label=\"e0\"];\n"
          "  1 -> 2 [label=\"e1\"];\n"
          "  2 -> 4 [label=\"e2\"];\n"
          "}\n");
}

TEST_CASE("role coloring tints nodes by boundary membership") {
    std::string dot = export_dot(Document{k_format_version, wire_cospan()}, true);
    CHECK(contains(dot, "#2e7d32"));  // input
    CHECK(contains(dot, "#1565c0"));  // output

    // a single point serving as both interfaces gets the shared tint
    std::string both =
        export_dot(Document{k_format_version, identity_cospan(nodes_only({0}))}, true);
    CHECK(contains(both, "#6a1b9a"));
    CHECK_FALSE(contains(both, "#2e7d32"));
}

TEST_CASE("cells and rules render three stacked clusters") {
    TwoCell cell = identity_cell(merge_cospan());
    std::string dot = export_dot(Document{k_format_version, cell});
    CHECK(contains(dot, "subgraph cluster_top"));
    CHECK(contains(dot, "subgraph cluster_middle"));
    CHECK(contains(dot, "subgraph cluster_bottom"));
    CHECK(contains(dot, "t0 [label=\"0\"]"));
    CHECK(contains(dot, "m0 -> t0 [style=dashed"));
    CHECK(contains(dot, "m0 -> b0 [style=dashed"));
}

TEST_CASE("kinds without a drawing are refused") {
    Graph g = nodes_only({0});
    CHECK_THROWS_AS(export_dot(Document{k_format_version, identity_morphism(g)}),
                    InvariantError);
    CHECK_THROWS_AS(
        export_dot(Document{k_format_version, identity_span(g)}),
        InvariantError);
}
