#include "logdegen/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace logdegen {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw validation_error("malformed JSON document");
    return j;
}

void expect_schema(const json& j, const std::string& name) {
    if (!j.is_object() || j.value("schema", "") != name)
        throw validation_error("expected schema \"" + name + "\"");
}

Int to_int(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        Int x;
        if (x.set_str(j.get<std::string>(), 10) != 0)
            throw validation_error("bad integer literal");
        return x;
    }
    throw validation_error("expected an integer");
}

Vec to_vec(const json& j) {
    if (!j.is_array()) throw validation_error("expected an integer array");
    Vec v;
    for (const auto& x : j) v.push_back(to_int(x));
    return v;
}

json from_vec(const Vec& v) {
    json j = json::array();
    for (const auto& x : v) j.push_back(x.get_str());
    return j;
}

Rat to_rat(const json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()), 1);
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw validation_error("expected a rational as \"p/q\" string");
}

QMat to_rat_matrix(const json& j) {
    if (!j.is_array()) throw validation_error("expected a matrix");
    QMat m;
    for (const auto& row : j) {
        if (!row.is_array()) throw validation_error("expected a matrix row");
        QVec r;
        for (const auto& x : row) r.push_back(to_rat(x));
        m.push_back(std::move(r));
    }
    return m;
}

GradedBasis to_basis(const json& j, bool with_pairing) {
    GradedBasis b;
    if (!j.is_object() || !j.contains("basis"))
        throw validation_error("expected a graded basis object");
    for (const auto& el : j.at("basis")) {
        b.names.push_back(el.at("name").get<std::string>());
        b.degrees.push_back(el.at("degree").get<int>());
    }
    if (with_pairing) {
        if (!j.contains("pairing")) throw validation_error("graded basis: missing pairing");
        b.pairing = to_rat_matrix(j.at("pairing"));
    }
    b.validate();
    return b;
}

json from_basis(const GradedBasis& b) {
    json j;
    j["basis"] = json::array();
    for (size_t i = 0; i < b.size(); ++i)
        j["basis"].push_back({{"name", b.names[i]}, {"degree", b.degrees[i]}});
    if (b.has_pairing()) {
        json p = json::array();
        for (const auto& row : b.pairing) {
            json r = json::array();
            for (const auto& x : row) r.push_back(rat_to_string(x));
            p.push_back(r);
        }
        j["pairing"] = p;
    }
    return j;
}

int basis_index(const GradedBasis& b, const std::string& name) {
    for (size_t i = 0; i < b.size(); ++i)
        if (b.names[i] == name) return static_cast<int>(i);
    throw validation_error("unknown basis element \"" + name + "\"");
}

VertexType to_vertex_type(const std::string& s) {
    if (s == "rigid1") return VertexType::rigid1;
    if (s == "rigid2") return VertexType::rigid2;
    if (s == "free") return VertexType::free_vertex;
    throw validation_error("unknown vertex type \"" + s + "\"");
}

std::string from_vertex_type(VertexType t) {
    switch (t) {
        case VertexType::rigid1: return "rigid1";
        case VertexType::rigid2: return "rigid2";
        default: return "free";
    }
}

std::vector<CurveVertex> to_curve_vertices(const json& j) {
    std::vector<CurveVertex> out;
    for (const auto& vj : j) {
        CurveVertex v;
        v.type = to_vertex_type(vj.at("type").get<std::string>());
        v.g = vj.value("genus", 0);
        if (vj.contains("markings"))
            for (const auto& m : vj.at("markings")) v.markings.push_back(m.get<int>());
        if (vj.contains("class")) v.cls = to_vec(vj.at("class"));
        out.push_back(std::move(v));
    }
    return out;
}

json from_curve_vertices(const std::vector<CurveVertex>& vs) {
    json out = json::array();
    for (const auto& v : vs) {
        json vj{{"type", from_vertex_type(v.type)}, {"genus", v.g}};
        vj["markings"] = v.markings;
        if (!v.cls.empty()) vj["class"] = from_vec(v.cls);
        out.push_back(std::move(vj));
    }
    return out;
}

std::vector<CurveEdge> to_curve_edges(const json& j) {
    std::vector<CurveEdge> out;
    for (const auto& ej : j) {
        CurveEdge e;
        std::string kind = ej.value("kind", "weighted");
        e.contracted = kind == "contracted";
        if (!e.contracted && kind != "weighted")
            throw validation_error("unknown edge kind \"" + kind + "\"");
        e.tail = ej.at("tail").get<int>();
        e.head = ej.at("head").get<int>();
        if (!e.contracted) e.w = to_int(ej.at("weight"));
        out.push_back(e);
    }
    return out;
}

json from_curve_edges(const std::vector<CurveEdge>& es) {
    json out = json::array();
    for (const auto& e : es) {
        json ej{{"tail", e.tail}, {"head", e.head}};
        ej["kind"] = e.contracted ? "contracted" : "weighted";
        if (!e.contracted) ej["weight"] = e.w.get_str();
        out.push_back(std::move(ej));
    }
    return out;
}

}  // namespace

TargetModel load_target(const std::string& json_text) {
    json j = parse(json_text);
    expect_schema(j, "logdegen-target-v1");
    TargetModel t;
    t.ambient_rank = j.at("ambient_class_rank").get<int>();
    const json& comps = j.at("components");
    if (!comps.is_array() || comps.size() != 2)
        throw validation_error("target: exactly two components required");
    t.x_cohomology = to_basis(j.at("x_cohomology"), false);
    t.d_cohomology = to_basis(j.at("d_cohomology"), true);
    for (int s = 0; s < 2; ++s) {
        const json& cj = comps[s];
        TargetComponent& c = t.component[s];
        for (const auto& name : cj.at("generators")) c.generator_names.push_back(name);
        for (const auto& col : cj.at("pushforward")) c.pushforward_columns.push_back(to_vec(col));
        c.d_degree = to_vec(cj.at("d_degree"));
        c.size = to_vec(cj.at("size"));
        c.cohomology = to_basis(cj.at("cohomology"), false);
        c.restriction = to_rat_matrix(cj.at("restriction"));
    }
    t.validate();
    return t;
}

std::string save_target(const TargetModel& t) {
    json j;
    j["schema"] = "logdegen-target-v1";
    j["ambient_class_rank"] = t.ambient_rank;
    j["x_cohomology"] = from_basis(t.x_cohomology);
    j["d_cohomology"] = from_basis(t.d_cohomology);
    j["components"] = json::array();
    for (int s = 0; s < 2; ++s) {
        const TargetComponent& c = t.component[s];
        json cj;
        cj["generators"] = c.generator_names;
        cj["pushforward"] = json::array();
        for (const auto& col : c.pushforward_columns) cj["pushforward"].push_back(from_vec(col));
        cj["d_degree"] = from_vec(c.d_degree);
        cj["size"] = from_vec(c.size);
        cj["cohomology"] = from_basis(c.cohomology);
        json r = json::array();
        for (const auto& row : c.restriction) {
            json rr = json::array();
            for (const auto& x : row) rr.push_back(rat_to_string(x));
            r.push_back(rr);
        }
        cj["restriction"] = r;
        j["components"].push_back(std::move(cj));
    }
    return j.dump(2);
}

std::vector<InvariantRecord> load_invariant_table(const TargetModel& t,
                                                  const std::string& json_text) {
    json j = parse(json_text);
    expect_schema(j, "logdegen-table-v1");
    std::vector<InvariantRecord> out;
    for (const auto& rj : j.at("records")) {
        InvariantRecord rec;
        rec.r = rj.at("component").get<int>();
        if (rec.r != 1 && rec.r != 2) throw validation_error("table: bad component index");
        rec.g = rj.at("genus").get<int>();
        const TargetComponent& c = t.side(rec.r);
        rec.beta = Vec(c.class_rank(), 0);
        for (const auto& [name, coeff] : rj.at("class").items()) {
            bool hit = false;
            for (int k = 0; k < c.class_rank(); ++k)
                if (c.generator_names[k] == name) {
                    rec.beta[k] = to_int(coeff);
                    hit = true;
                }
            if (!hit) throw validation_error("table: unknown class generator \"" + name + "\"");
        }
        if (rj.contains("insertions"))
            for (const auto& ij : rj.at("insertions"))
                rec.absolute.push_back({ij.at(0).get<int>(),
                                        basis_index(c.cohomology, ij.at(1).get<std::string>())});
        if (rj.contains("relative"))
            for (const auto& ij : rj.at("relative"))
                rec.relative.push_back({to_int(ij.at(0)),
                                        basis_index(t.d_cohomology, ij.at(1).get<std::string>())});
        rec.value = to_rat(rj.at("value"));
        out.push_back(std::move(rec));
    }
    return out;
}

CurveGraph load_curve_graph(const std::string& json_text) {
    json j = parse(json_text);
    expect_schema(j, "logdegen-curve-v1");
    CurveGraph g;
    g.vertices = to_curve_vertices(j.at("vertices"));
    g.edges = to_curve_edges(j.at("edges"));
    validate_curve_graph(g);
    return g;
}

std::string save_curve_graph(const CurveGraph& g) {
    json j;
    j["schema"] = "logdegen-curve-v1";
    j["vertices"] = from_curve_vertices(g.vertices);
    j["edges"] = from_curve_edges(g.edges);
    return j.dump(2);
}

CurveHalf load_curve_half(const std::string& json_text) {
    json j = parse(json_text);
    expect_schema(j, "logdegen-half-v1");
    CurveHalf h;
    h.side = j.at("side").get<int>();
    if (h.side != 1 && h.side != 2) throw validation_error("half: side must be 1 or 2");
    h.vertices = to_curve_vertices(j.at("vertices"));
    h.edges = to_curve_edges(j.at("edges"));
    for (const auto& hj : j.at("half_edges"))
        h.half_edges.push_back(
            {hj.at("vertex").get<int>(), to_int(hj.at("weight")), hj.at("label").get<int>()});
    validate_curve_half(h);
    return h;
}

std::string save_curve_half(const CurveHalf& h) {
    json j;
    j["schema"] = "logdegen-half-v1";
    j["side"] = h.side;
    j["vertices"] = from_curve_vertices(h.vertices);
    j["edges"] = from_curve_edges(h.edges);
    j["half_edges"] = json::array();
    for (const auto& he : h.half_edges)
        j["half_edges"].push_back(
            {{"vertex", he.vertex}, {"weight", he.w.get_str()}, {"label", he.label}});
    return j.dump(2);
}

namespace {

json from_decorated(const DecoratedGraph& g) {
    json j;
    j["vertices"] = json::array();
    for (const auto& v : g.vertices)
        j["vertices"].push_back({{"component", v.r},
                                 {"genus", v.g},
                                 {"markings", v.markings},
                                 {"class", from_vec(v.beta)}});
    j["edges"] = json::array();
    for (const auto& e : g.edges)
        j["edges"].push_back({{"a", e.a}, {"b", e.b}, {"weight", e.w.get_str()}});
    return j;
}

}  // namespace

std::string save_decorated_graph(const DecoratedGraph& g) {
    json j = from_decorated(g);
    j["schema"] = "logdegen-graph-v1";
    return j.dump(2);
}

std::string save_ordered_graph(const OrderedGraph& g) {
    json j = from_decorated(g.graph);
    j["schema"] = "logdegen-graph-v1";
    j["ordered"] = true;
    return j.dump(2);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace logdegen
