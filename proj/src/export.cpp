#include "mcc/export.hpp"

#include <json.hpp>
#include <sstream>

#include "mcc/counting.hpp"

namespace mcc {

namespace {

using nlohmann::json;

json component_value(const HyperbolicComponent& h, Family m) {
    return {{"label", edge_label(m, h)},
            {"period", h.period},
            {"angles", {h.pair.low().str(), h.pair.high().str()}},
            {"primitive", h.primitive},
            {"kneading", h.kneading.str()}};
}

json int_value(Int v) {
    if (v >= INT64_MIN && v <= INT64_MAX) return static_cast<std::int64_t>(v);
    return to_string(v);
}

std::string side_text(const CellComplex& c, const Side& s) {
    return std::to_string(c.edges.at(static_cast<std::size_t>(s.edge)).label) + (s.dir > 0 ? "+" : "-");
}

}  // namespace

std::string component_json(const HyperbolicComponent& h, Family m) { return component_value(h, m).dump(); }

std::string to_json(const CellComplex& c) {
    json doc;
    doc["family"] = to_string(c.family);
    doc["period"] = c.period;
    json vertices = json::array();
    for (const Vertex& v : c.vertices) vertices.push_back({{"id", v.id}, {"label", v.label}});
    doc["vertices"] = vertices;
    json edges = json::array();
    for (const Edge& e : c.edges) {
        edges.push_back({{"id", e.id},
                         {"label", e.label},
                         {"angles", {e.component.pair.low().str(), e.component.pair.high().str()}},
                         {"endpoints", {e.endpoints[0], e.endpoints[1]}},
                         {"kneading", e.component.kneading.str()}});
    }
    doc["edges"] = edges;
    json faces = json::array();
    for (const Face& f : c.faces) {
        json boundary = json::array();
        for (const Side& s : f.boundary) boundary.push_back({{"edge", s.edge}, {"dir", s.dir}});
        json face = {{"id", f.id}, {"class", f.cls.members()}, {"boundary", boundary}, {"local_degree", f.local_degree}};
        if (!f.attached_vertices.empty()) face["attached_vertices"] = f.attached_vertices;
        faces.push_back(face);
    }
    doc["faces"] = faces;
    json genus = json::array();
    for (Int g : genus_per_component(c)) genus.push_back(int_value(g));
    doc["stats"] = {{"V", c.vertices.size()},
                    {"E", c.edges.size()},
                    {"F", c.faces.size()},
                    {"euler", int_value(euler(c))},
                    {"components", components(c)},
                    {"genus_formula", int_value(counting::genus(c.family, c.period))},
                    {"genus_per_component", genus}};
    if (!c.metadata.empty()) doc["metadata"] = c.metadata;
    return doc.dump(2) + "\n";
}

std::string to_dot(const CellComplex& c) {
    std::ostringstream os;
    os << "graph sigma_" << c.period << "_" << family_index(c.family) << " {\n";
    for (const auto& [key, value] : c.metadata) os << "  // " << key << ": " << value << "\n";
    for (const Vertex& v : c.vertices) os << "  v" << v.id << " [label=\"" << v.label << "\"];\n";
    for (const Edge& e : c.edges) {
        os << "  v" << e.endpoints[0] << " -- v" << e.endpoints[1] << " [label=\"" << e.label << "\"];\n";
    }
    for (const Face& f : c.faces) {
        os << "  // face " << f.id << " " << f.cls.str() << " degree " << f.local_degree << ":";
        for (const Side& s : f.boundary) os << " " << side_text(c, s);
        os << "\n";
    }
    os << "}\n";
    return os.str();
}

std::string to_text(const CellComplex& c) {
    std::ostringstream os;
    os << to_string(c.family) << " period " << c.period << ": V=" << c.vertices.size() << " E=" << c.edges.size()
       << " F=" << c.faces.size() << " euler=" << to_string(euler(c)) << " components=" << components(c)
       << " genus_formula=" << to_string(counting::genus(c.family, c.period)) << "\n";
    for (const Face& f : c.faces) {
        os << "face " << f.id << " " << f.cls.str() << " size " << f.boundary.size() << " degree " << f.local_degree
           << ":";
        for (const Side& s : f.boundary) os << " " << side_text(c, s);
        os << "\n";
    }
    return os.str();
}

}  // namespace mcc
