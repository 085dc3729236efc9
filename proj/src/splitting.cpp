#include "logdegen/splitting.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace logdegen {

Cone half_dual_cone(const CurveHalf& h) {
    validate_curve_half(h);
    int nv = static_cast<int>(h.vertices.size());
    int ne = static_cast<int>(h.edges.size());
    int rank = nv + ne;
    Mat ineqs;
    auto eq = [&](Vec v) {
        ineqs.push_back(v);
        ineqs.push_back(negate(v));
    };
    for (int v = 0; v < nv; ++v) {
        ineqs.push_back(unit_vector(rank, v));
        if (h.vertices[v].type != VertexType::free_vertex) eq(unit_vector(rank, v));
    }
    for (int e = 0; e < ne; ++e) {
        ineqs.push_back(unit_vector(rank, nv + e));
        const auto& edge = h.edges[e];
        Vec rel(rank, 0);
        rel[edge.head] += 1;
        rel[edge.tail] -= 1;
        if (!edge.contracted) rel[nv + e] = -edge.w;
        eq(rel);
    }
    return Cone::from_inequalities(rank, std::move(ineqs));
}

namespace {

std::vector<std::vector<int>> half_components(const CurveHalf& h) {
    int nv = static_cast<int>(h.vertices.size());
    std::vector<int> comp(nv, -1);
    int nc = 0;
    for (int start = 0; start < nv; ++start) {
        if (comp[start] != -1) continue;
        std::vector<int> stack{start};
        comp[start] = nc;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& e : h.edges) {
                int o = -1;
                if (e.tail == v) o = e.head;
                if (e.head == v) o = e.tail;
                if (o >= 0 && comp[o] == -1) {
                    comp[o] = nc;
                    stack.push_back(o);
                }
            }
        }
        ++nc;
    }
    std::vector<std::vector<int>> out(nc);
    for (int v = 0; v < nv; ++v) out[comp[v]].push_back(v);
    return out;
}

CurveHalf component_half(const CurveHalf& h, const std::vector<int>& verts) {
    CurveHalf out;
    out.side = h.side;
    std::vector<int> local(h.vertices.size(), -1);
    for (int v : verts) {
        local[v] = static_cast<int>(out.vertices.size());
        out.vertices.push_back(h.vertices[v]);
    }
    for (const auto& e : h.edges)
        if (local[e.tail] != -1 && local[e.head] != -1)
            out.edges.push_back({local[e.tail], local[e.head], e.contracted, e.w});
    for (const auto& he : h.half_edges)
        if (local[he.vertex] != -1) out.half_edges.push_back({local[he.vertex], he.w, he.label});
    return out;
}

}  // namespace

SplitResult split_cones(const CurveGraph& cg, const SplittingRay& rho) {
    validate_curve_graph(cg);
    int nv = static_cast<int>(cg.vertices.size());
    SplitResult res;
    res.half1.side = 1;
    res.half2.side = 2;
    std::vector<int> side(nv), local(nv);
    for (int v = 0; v < nv; ++v) {
        if (rho.positions[v] == 0)
            side[v] = 1;
        else if (rho.positions[v] == rho.l)
            side[v] = 2;
        else
            throw validation_error("not a ray: vertex position strictly inside the interval");
        CurveHalf& h = side[v] == 1 ? res.half1 : res.half2;
        local[v] = static_cast<int>(h.vertices.size());
        h.vertices.push_back(cg.vertices[v]);
    }
    for (size_t e = 0; e < cg.edges.size(); ++e) {
        const auto& edge = cg.edges[e];
        if (rho.lengths[e] == 0) {
            if (side[edge.tail] != side[edge.head])
                throw validation_error("split: zero-length edge across the two ends");
            if (side[edge.tail] == 1) {
                res.half1.edges.push_back(
                    {local[edge.tail], local[edge.head], edge.contracted, edge.w});
            } else {
                // side 2 is reflected, so the orientation reverses
                res.half2.edges.push_back(
                    {local[edge.head], local[edge.tail], edge.contracted, edge.w});
            }
        } else {
            if (side[edge.tail] != 1 || side[edge.head] != 2)
                throw validation_error("split: splitting node not crossing the interval");
            res.half1.half_edges.push_back({local[edge.tail], edge.w, static_cast<int>(e)});
            res.half2.half_edges.push_back({local[edge.head], edge.w, static_cast<int>(e)});
        }
    }
    res.q1_dual = half_dual_cone(res.half1);
    res.q2_dual = half_dual_cone(res.half2);
    for (const auto& comp : half_components(res.half1))
        res.summands1.push_back(half_dual_cone(component_half(res.half1, comp)));
    for (const auto& comp : half_components(res.half2))
        res.summands2.push_back(half_dual_cone(component_half(res.half2, comp)));
    return res;
}

SplitFacetWitness verify_split_facet(const CurveGraph& cg, const SplittingRay& rho) {
    BasicMonoidDual b = basic_dual_cone(cg);
    Sublattice span{0, {}};
    Cone dual_full = restrict_to_span(b.cone, &span);
    Cone q_basic = dual(dual_full);
    // ray coordinates in the span basis
    QVec coords = solve_in_row_span(span.basis, rho.ray);
    Vec rho_local(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].get_den() != 1)
            throw validation_error("verify_split_facet: ray outside the span lattice");
        rho_local[i] = coords[i].get_num();
    }
    Cone facet = facet_of_ray(q_basic, rho_local);
    Cone facet_full = restrict_to_span(facet);

    SplitResult s = split_cones(cg, rho);
    Cone q1 = dual(restrict_to_span(s.q1_dual));
    Cone q2 = dual(restrict_to_span(s.q2_dual));
    Cone prod = product(q1, q2);

    SplitFacetWitness w;
    if (facet_full.ambient_rank() != prod.ambient_rank()) return w;
    auto m = find_lattice_isomorphism(facet_full, prod);
    if (!m) return w;
    w.verified = true;
    w.witness = *m;
    return w;
}

GlueResult glue_halves(const CurveHalf& h1, const CurveHalf& h2) {
    if (h1.side != 1 || h2.side != 2) throw validation_error("glue: halves must be sides 1 and 2");
    validate_curve_half(h1);
    validate_curve_half(h2);
    std::map<int, std::pair<int, Int>> ends1, ends2;  // label -> (vertex, w)
    for (const auto& he : h1.half_edges)
        if (!ends1.emplace(he.label, std::make_pair(he.vertex, he.w)).second)
            throw validation_error("glue: duplicate half-edge label");
    for (const auto& he : h2.half_edges)
        if (!ends2.emplace(he.label, std::make_pair(he.vertex, he.w)).second)
            throw validation_error("glue: duplicate half-edge label");
    if (ends1.size() != ends2.size()) throw validation_error("glue: label mismatch");
    for (const auto& [label, vw] : ends1) {
        auto it = ends2.find(label);
        if (it == ends2.end()) throw validation_error("glue: label mismatch");
        if (it->second.second != vw.second) throw validation_error("glue: weight mismatch");
    }

    GlueResult res;
    int off = static_cast<int>(h1.vertices.size());
    res.glued.vertices = h1.vertices;
    for (const auto& v : h2.vertices) res.glued.vertices.push_back(v);
    for (const auto& e : h1.edges) res.glued.edges.push_back(e);
    for (const auto& e : h2.edges)  // undo the reflection of side 2
        res.glued.edges.push_back({e.head + off, e.tail + off, e.contracted, e.w});
    std::vector<Int> glue_w;
    std::vector<size_t> glue_edge_index;
    for (const auto& [label, vw] : ends1) {
        glue_edge_index.push_back(res.glued.edges.size());
        res.glued.edges.push_back({vw.first, ends2[label].first + off, false, vw.second});
        glue_w.push_back(vw.second);
    }
    res.monoid = basic_dual_cone(res.glued);

    res.l = lcm_of(glue_w);
    int rank = res.monoid.rank();
    res.rho = Vec(rank, 0);
    for (size_t v = h1.vertices.size(); v < res.glued.vertices.size(); ++v)
        res.rho[v] = res.l;                 // side 2 sits at l
    res.rho[rank - 1] = res.l;
    std::vector<Int> lengths;
    for (size_t i = 0; i < glue_edge_index.size(); ++i) {
        Int le = res.l / glue_w[i];
        res.rho[res.monoid.nv + glue_edge_index[i]] = le;
        lengths.push_back(le);
    }
    if (!glue_w.empty() && gcd_of(lengths) != 1)
        throw validation_error("glue: length gcd is not 1");
    if (!res.monoid.cone.contains(res.rho))
        throw validation_error("glue: constructed ray outside the basic dual cone");
    return res;
}

Rat gluing_degree(const std::vector<Int>& weights) {
    if (weights.empty()) return 1;
    Int prod = 1;
    for (const auto& w : weights) {
        if (w < 1) throw validation_error("gluing_degree: nonpositive weight");
        prod *= w;
    }
    Rat d(prod, lcm_of(weights));
    d.canonicalize();
    return d;
}

}  // namespace logdegen
