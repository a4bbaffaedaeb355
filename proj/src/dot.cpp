#include <og/dot.hpp>

#include <set>
#include <sstream>

#include <og/errors.hpp>

namespace og {

namespace {

enum class Role { internal, input, output, both };

const char* role_color(Role r) {
    switch (r) {
        case Role::input: return "#2e7d32";
        case Role::output: return "#1565c0";
        case Role::both: return "#6a1b9a";
        default: return nullptr;
    }
}

std::set<Id> node_image(const GraphMorphism& f) {
    std::set<Id> out;
    for (const auto& [v, w] : f.node_map) {
        (void)v;
        out.insert(w);
    }
    return out;
}

Role role_of(Id v, const std::set<Id>& inputs, const std::set<Id>& outputs) {
    bool in = inputs.count(v) > 0;
    bool out = outputs.count(v) > 0;
    if (in && out) return Role::both;
    if (in) return Role::input;
    if (out) return Role::output;
    return Role::internal;
}

void emit_node(std::ostream& os, const std::string& indent, const std::string& prefix,
               Id v, Role role, bool role_coloring) {
    os << indent << prefix << v;
    std::string attrs;
    if (!prefix.empty()) attrs += "label=\"" + std::to_string(v) + "\"";
    if (role_coloring) {
        if (const char* color = role_color(role)) {
            if (!attrs.empty()) attrs += ", ";
            attrs += "color=\"" + std::string(color) + "\", style=filled, fillcolor=\"" +
                     color + "20\"";
        }
    }
    if (!attrs.empty()) os << " [" << attrs << "]";
    os << ";\n";
}

void emit_edges(std::ostream& os, const std::string& indent, const std::string& prefix,
                const Graph& g) {
    for (const auto& [e, ends] : g.edges) {
        os << indent << prefix << ends.src << " -> " << prefix << ends.tgt
           << " [label=\"e" << e << "\"];\n";
    }
}

void emit_plain_graph(std::ostream& os, const Graph& g) {
    for (Id v : g.nodes) emit_node(os, "  ", "", v, Role::internal, false);
    emit_edges(os, "  ", "", g);
}

void emit_cospan(std::ostream& os, const Cospan& c, bool role_coloring) {
    std::set<Id> inputs = node_image(c.left_leg);
    std::set<Id> outputs = node_image(c.right_leg);

    os << "  subgraph cluster_inputs {\n    label=\"inputs\";\n";
    for (Id v : c.apex.nodes) {
        if (role_of(v, inputs, outputs) == Role::input) {
            emit_node(os, "    ", "", v, Role::input, role_coloring);
        }
    }
    os << "  }\n";
    os << "  subgraph cluster_outputs {\n    label=\"outputs\";\n";
    for (Id v : c.apex.nodes) {
        if (role_of(v, inputs, outputs) == Role::output) {
            emit_node(os, "    ", "", v, Role::output, role_coloring);
        }
    }
    os << "  }\n";
    // nodes on both boundaries sit outside the clusters to keep membership honest
    for (Id v : c.apex.nodes) {
        Role r = role_of(v, inputs, outputs);
        if (r == Role::both || r == Role::internal) {
            emit_node(os, "  ", "", v, r, role_coloring);
        }
    }
    emit_edges(os, "  ", "", c.apex);
}

void emit_apex_cluster(std::ostream& os, const char* name, const std::string& prefix,
                       const Cospan& c, bool role_coloring) {
    std::set<Id> inputs = node_image(c.left_leg);
    std::set<Id> outputs = node_image(c.right_leg);
    os << "  subgraph cluster_" << name << " {\n    label=\"" << name << "\";\n";
    for (Id v : c.apex.nodes) {
        emit_node(os, "    ", prefix, v, role_of(v, inputs, outputs), role_coloring);
    }
    emit_edges(os, "    ", prefix, c.apex);
    os << "  }\n";
}

void emit_structure_map(std::ostream& os, const GraphMorphism& f,
                        const std::string& from_prefix, const std::string& to_prefix) {
    for (const auto& [v, w] : f.node_map) {
        os << "  " << from_prefix << v << " -> " << to_prefix << w
           << " [style=dashed, arrowhead=vee, constraint=false];\n";
    }
}

void emit_cell(std::ostream& os, const TwoCell& c, bool role_coloring) {
    emit_apex_cluster(os, "top", "t", c.top, role_coloring);
    emit_apex_cluster(os, "middle", "m", c.middle, role_coloring);
    emit_apex_cluster(os, "bottom", "b", c.bottom, role_coloring);
    emit_structure_map(os, c.up_apex, "m", "t");
    emit_structure_map(os, c.down_apex, "m", "b");
}

}  // namespace

std::string export_dot(const Document& d, bool role_coloring) {
    std::ostringstream os;
    os << "digraph G {\n";
    std::visit(
        [&](const auto& value) {
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, Graph>) {
                emit_plain_graph(os, value);
            } else if constexpr (std::is_same_v<T, Cospan>) {
                emit_cospan(os, value, role_coloring);
            } else if constexpr (std::is_same_v<T, TwoCell>) {
                emit_cell(os, value, role_coloring);
            } else if constexpr (std::is_same_v<T, OpenGraphRule>) {
                emit_cell(os, value.cell, role_coloring);
            } else {
                throw InvariantError("export_dot: unsupported kind " + document_kind(d));
            }
        },
        d.payload);
    os << "}\n";
    return os.str();
}

}  // namespace og
