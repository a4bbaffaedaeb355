#include <og/serialize.hpp>

#include <cctype>
#include <utility>

#include <og/errors.hpp>

namespace og {

namespace {

using nlohmann::json;

// ---- canonical renumbering ----

struct Renumbering {
    std::map<Id, Id> nodes;
    std::map<Id, Id> edges;
};

Renumbering renumbering_of(const Graph& g) {
    Renumbering r;
    Id next = 0;
    for (Id v : g.nodes) r.nodes[v] = next++;
    next = 0;
    for (const auto& [e, ends] : g.edges) {
        (void)ends;
        r.edges[e] = next++;
    }
    return r;
}

Graph renumber(const Graph& g, const Renumbering& r) {
    Graph out;
    for (Id v : g.nodes) out.nodes.insert(r.nodes.at(v));
    for (const auto& [e, ends] : g.edges) {
        out.edges[r.edges.at(e)] = EdgeEnds{r.nodes.at(ends.src), r.nodes.at(ends.tgt)};
    }
    return out;
}

GraphMorphism renumber(const GraphMorphism& f, const Renumbering& rd,
                       const Renumbering& rc) {
    GraphMorphism out;
    out.dom = renumber(f.dom, rd);
    out.cod = renumber(f.cod, rc);
    for (const auto& [a, b] : f.node_map) out.node_map[rd.nodes.at(a)] = rc.nodes.at(b);
    for (const auto& [a, b] : f.edge_map) out.edge_map[rd.edges.at(a)] = rc.edges.at(b);
    return out;
}

Cospan renumber(const Cospan& c, const Renumbering& rl, const Renumbering& rr,
                const Renumbering& ra) {
    Cospan out;
    out.left_foot = renumber(c.left_foot, rl);
    out.right_foot = renumber(c.right_foot, rr);
    out.apex = renumber(c.apex, ra);
    out.left_leg = renumber(c.left_leg, rl, ra);
    out.right_leg = renumber(c.right_leg, rr, ra);
    return out;
}

Graph canonical(const Graph& g) { return renumber(g, renumbering_of(g)); }

GraphMorphism canonical(const GraphMorphism& f) {
    return renumber(f, renumbering_of(f.dom), renumbering_of(f.cod));
}

Cospan canonical(const Cospan& c) {
    return renumber(c, renumbering_of(c.left_foot), renumbering_of(c.right_foot),
                    renumbering_of(c.apex));
}

VerticalSpan canonical(const VerticalSpan& s) {
    Renumbering rt = renumbering_of(s.top_foot);
    Renumbering rb = renumbering_of(s.bottom_foot);
    Renumbering ra = renumbering_of(s.apex);
    VerticalSpan out;
    out.top_foot = renumber(s.top_foot, rt);
    out.bottom_foot = renumber(s.bottom_foot, rb);
    out.apex = renumber(s.apex, ra);
    out.up = renumber(s.up, ra, rt);
    out.down = renumber(s.down, ra, rb);
    return out;
}

TwoCell canonical(const TwoCell& c) {
    Renumbering tl = renumbering_of(c.top.left_foot);
    Renumbering tr = renumbering_of(c.top.right_foot);
    Renumbering ta = renumbering_of(c.top.apex);
    Renumbering ml = renumbering_of(c.middle.left_foot);
    Renumbering mr = renumbering_of(c.middle.right_foot);
    Renumbering ma = renumbering_of(c.middle.apex);
    Renumbering bl = renumbering_of(c.bottom.left_foot);
    Renumbering br = renumbering_of(c.bottom.right_foot);
    Renumbering ba = renumbering_of(c.bottom.apex);

    TwoCell out;
    out.top = renumber(c.top, tl, tr, ta);
    out.middle = renumber(c.middle, ml, mr, ma);
    out.bottom = renumber(c.bottom, bl, br, ba);
    out.up_left = renumber(c.up_left, ml, tl);
    out.up_apex = renumber(c.up_apex, ma, ta);
    out.up_right = renumber(c.up_right, mr, tr);
    out.down_left = renumber(c.down_left, ml, bl);
    out.down_apex = renumber(c.down_apex, ma, ba);
    out.down_right = renumber(c.down_right, mr, br);
    return out;
}

// ---- value -> json ----

json graph_json(const Graph& g) {
    json nodes = json::array();
    for (Id v : g.nodes) nodes.push_back(v);
    json edges = json::array();
    for (const auto& [e, ends] : g.edges) {
        edges.push_back(json{{"id", e}, {"src", ends.src}, {"tgt", ends.tgt}});
    }
    return json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

json maps_json(const GraphMorphism& f) {
    json nm = json::object();
    for (const auto& [a, b] : f.node_map) nm[std::to_string(a)] = b;
    json em = json::object();
    for (const auto& [a, b] : f.edge_map) em[std::to_string(a)] = b;
    return json{{"node_map", std::move(nm)}, {"edge_map", std::move(em)}};
}

json morphism_json(const GraphMorphism& f) {
    json j = maps_json(f);
    j["dom"] = graph_json(f.dom);
    j["cod"] = graph_json(f.cod);
    return j;
}

json cospan_json(const Cospan& c) {
    return json{{"left_foot", graph_json(c.left_foot)},
                {"right_foot", graph_json(c.right_foot)},
                {"apex", graph_json(c.apex)},
                {"left_leg", maps_json(c.left_leg)},
                {"right_leg", maps_json(c.right_leg)}};
}

json span_json(const VerticalSpan& s) {
    return json{{"top_foot", graph_json(s.top_foot)},
                {"bottom_foot", graph_json(s.bottom_foot)},
                {"apex", graph_json(s.apex)},
                {"up", maps_json(s.up)},
                {"down", maps_json(s.down)}};
}

json cell_json(const TwoCell& c) {
    return json{{"top", cospan_json(c.top)},
                {"middle", cospan_json(c.middle)},
                {"bottom", cospan_json(c.bottom)},
                {"up",
                 json{{"left", maps_json(c.up_left)},
                      {"apex", maps_json(c.up_apex)},
                      {"right", maps_json(c.up_right)}}},
                {"down",
                 json{{"left", maps_json(c.down_left)},
                      {"apex", maps_json(c.down_apex)},
                      {"right", maps_json(c.down_right)}}}};
}

// ---- json -> value, with field-precise schema errors ----

const json& field(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(path + ": missing field '" + key + "'");
    return *it;
}

Id parse_id(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw SchemaError(path + ": expected an integer");
    return j.get<Id>();
}

Id parse_key(const std::string& key, const std::string& path) {
    if (key.empty()) throw SchemaError(path + ": empty map key");
    std::size_t i = key[0] == '-' ? 1 : 0;
    if (i == key.size()) throw SchemaError(path + ": map key '" + key + "' is not an integer");
    for (; i < key.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(key[i]))) {
            throw SchemaError(path + ": map key '" + key + "' is not an integer");
        }
    }
    return std::stoi(key);
}

Graph parse_graph(const json& j, const std::string& path) {
    Graph g;
    const json& nodes = field(j, "nodes", path);
    if (!nodes.is_array()) throw SchemaError(path + ".nodes: expected an array");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        Id v = parse_id(nodes[i], path + ".nodes[" + std::to_string(i) + "]");
        if (!g.nodes.insert(v).second) {
            throw SchemaError(path + ".nodes: duplicate node id " + std::to_string(v));
        }
    }
    const json& edges = field(j, "edges", path);
    if (!edges.is_array()) throw SchemaError(path + ".edges: expected an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        std::string epath = path + ".edges[" + std::to_string(i) + "]";
        Id e = parse_id(field(edges[i], "id", epath), epath + ".id");
        EdgeEnds ends{parse_id(field(edges[i], "src", epath), epath + ".src"),
                      parse_id(field(edges[i], "tgt", epath), epath + ".tgt")};
        if (!g.edges.emplace(e, ends).second) {
            throw SchemaError(path + ".edges: duplicate edge id " + std::to_string(e));
        }
    }
    validate(g);
    return g;
}

std::map<Id, Id> parse_id_map(const json& j, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path + ": expected an object");
    std::map<Id, Id> out;
    for (const auto& [key, value] : j.items()) {
        out[parse_key(key, path)] = parse_id(value, path + "." + key);
    }
    return out;
}

// maps with the endpoints implied by their position in the document
GraphMorphism parse_maps(const json& j, Graph dom, Graph cod, const std::string& path) {
    GraphMorphism f;
    f.dom = std::move(dom);
    f.cod = std::move(cod);
    f.node_map = parse_id_map(field(j, "node_map", path), path + ".node_map");
    f.edge_map = parse_id_map(field(j, "edge_map", path), path + ".edge_map");
    validate(f);
    return f;
}

GraphMorphism parse_morphism(const json& j, const std::string& path) {
    Graph dom = parse_graph(field(j, "dom", path), path + ".dom");
    Graph cod = parse_graph(field(j, "cod", path), path + ".cod");
    return parse_maps(j, std::move(dom), std::move(cod), path);
}

Cospan parse_cospan(const json& j, const std::string& path) {
    Cospan c;
    c.left_foot = parse_graph(field(j, "left_foot", path), path + ".left_foot");
    c.right_foot = parse_graph(field(j, "right_foot", path), path + ".right_foot");
    c.apex = parse_graph(field(j, "apex", path), path + ".apex");
    c.left_leg = parse_maps(field(j, "left_leg", path), c.left_foot, c.apex,
                            path + ".left_leg");
    c.right_leg = parse_maps(field(j, "right_leg", path), c.right_foot, c.apex,
                             path + ".right_leg");
    validate(c);
    return c;
}

VerticalSpan parse_span(const json& j, const std::string& path) {
    VerticalSpan s;
    s.top_foot = parse_graph(field(j, "top_foot", path), path + ".top_foot");
    s.bottom_foot = parse_graph(field(j, "bottom_foot", path), path + ".bottom_foot");
    s.apex = parse_graph(field(j, "apex", path), path + ".apex");
    s.up = parse_maps(field(j, "up", path), s.apex, s.top_foot, path + ".up");
    s.down = parse_maps(field(j, "down", path), s.apex, s.bottom_foot, path + ".down");
    validate(s);
    return s;
}

TwoCell parse_cell(const json& j, const std::string& path) {
    TwoCell c;
    c.top = parse_cospan(field(j, "top", path), path + ".top");
    c.middle = parse_cospan(field(j, "middle", path), path + ".middle");
    c.bottom = parse_cospan(field(j, "bottom", path), path + ".bottom");
    const json& up = field(j, "up", path);
    c.up_left = parse_maps(field(up, "left", path + ".up"), c.middle.left_foot,
                           c.top.left_foot, path + ".up.left");
    c.up_apex = parse_maps(field(up, "apex", path + ".up"), c.middle.apex, c.top.apex,
                           path + ".up.apex");
    c.up_right = parse_maps(field(up, "right", path + ".up"), c.middle.right_foot,
                            c.top.right_foot, path + ".up.right");
    const json& down = field(j, "down", path);
    c.down_left = parse_maps(field(down, "left", path + ".down"), c.middle.left_foot,
                             c.bottom.left_foot, path + ".down.left");
    c.down_apex = parse_maps(field(down, "apex", path + ".down"), c.middle.apex,
                             c.bottom.apex, path + ".down.apex");
    c.down_right = parse_maps(field(down, "right", path + ".down"), c.middle.right_foot,
                              c.bottom.right_foot, path + ".down.right");
    validate(c);
    return c;
}

}  // namespace

std::string document_kind(const Document& d) {
    switch (d.payload.index()) {
        case 0: return "graph";
        case 1: return "morphism";
        case 2: return "cospan";
        case 3: return "vertical_span";
        case 4: return "two_cell";
        default: return "rule";
    }
}

Document canonical_document(const Document& d) {
    Document out;
    out.format_version = d.format_version;
    std::visit(
        [&](const auto& value) {
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, OpenGraphRule>) {
                out.payload = OpenGraphRule{canonical(value.cell)};
            } else {
                out.payload = canonical(value);
            }
        },
        d.payload);
    return out;
}

nlohmann::json to_json(const Document& d) {
    json payload = std::visit(
        [](const auto& value) -> json {
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, Graph>) {
                return graph_json(value);
            } else if constexpr (std::is_same_v<T, GraphMorphism>) {
                return morphism_json(value);
            } else if constexpr (std::is_same_v<T, Cospan>) {
                return cospan_json(value);
            } else if constexpr (std::is_same_v<T, VerticalSpan>) {
                return span_json(value);
            } else if constexpr (std::is_same_v<T, TwoCell>) {
                return cell_json(value);
            } else {
                return cell_json(value.cell);
            }
        },
        d.payload);
    return json{{"format_version", d.format_version},
                {"kind", document_kind(d)},
                {"payload", std::move(payload)}};
}

std::string serialize(const Document& d) {
    return to_json(canonical_document(d)).dump() + "\n";
}

Document parse(const std::string& bytes) {
    json j;
    try {
        j = json::parse(bytes);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("document: malformed JSON: ") + e.what());
    }

    int version = static_cast<int>(parse_id(field(j, "format_version", "document"),
                                            "document.format_version"));
    if (version != k_format_version) {
        throw SchemaError("document: unsupported format_version " +
                          std::to_string(version));
    }
    const json& kind_field = field(j, "kind", "document");
    if (!kind_field.is_string()) throw SchemaError("document.kind: expected a string");
    std::string kind = kind_field.get<std::string>();
    const json& payload = field(j, "payload", "document");

    Document d;
    d.format_version = version;
    if (kind == "graph") {
        d.payload = parse_graph(payload, "payload");
    } else if (kind == "morphism") {
        d.payload = parse_morphism(payload, "payload");
    } else if (kind == "cospan") {
        d.payload = parse_cospan(payload, "payload");
    } else if (kind == "vertical_span") {
        d.payload = parse_span(payload, "payload");
    } else if (kind == "two_cell") {
        d.payload = parse_cell(payload, "payload");
    } else if (kind == "rule") {
        OpenGraphRule r{parse_cell(payload, "payload")};
        validate(r);
        d.payload = r;
    } else {
        throw SchemaError("document.kind: unknown kind '" + kind + "'");
    }
    return d;
}

}  // namespace og
