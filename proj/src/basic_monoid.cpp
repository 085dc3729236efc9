#include "logdegen/basic_monoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace logdegen {

BasicMonoidDual basic_dual_cone(const CurveGraph& cg) {
    validate_curve_graph(cg);
    BasicMonoidDual b;
    b.nv = static_cast<int>(cg.vertices.size());
    b.ne = static_cast<int>(cg.edges.size());
    int rank = b.rank();
    int li = b.nv + b.ne;  // index of l
    Mat ineqs;
    auto eq = [&](Vec v) {
        ineqs.push_back(v);
        ineqs.push_back(negate(v));
    };
    for (int v = 0; v < b.nv; ++v) {
        ineqs.push_back(unit_vector(rank, v));  // x_V >= 0
        Vec upper = unit_vector(rank, li);
        upper[v] = -1;
        ineqs.push_back(upper);  // l - x_V >= 0
        if (cg.vertices[v].type == VertexType::rigid1) eq(unit_vector(rank, v));
        if (cg.vertices[v].type == VertexType::rigid2) {
            Vec pin = unit_vector(rank, v);
            pin[li] = -1;
            eq(pin);  // x_V = l
        }
    }
    for (int e = 0; e < b.ne; ++e) {
        ineqs.push_back(unit_vector(rank, b.nv + e));  // l_e >= 0
        const auto& edge = cg.edges[e];
        Vec rel(rank, 0);
        rel[edge.head] += 1;
        rel[edge.tail] -= 1;
        if (!edge.contracted) rel[b.nv + e] = -edge.w;  // x_head - x_tail = w l_e
        eq(rel);                                        // contracted: x_head = x_tail
        if (edge.contracted) b.contracted.push_back(e);
    }
    b.cone = Cone::from_inequalities(rank, std::move(ineqs));
    b.one_functional = unit_vector(rank, li);
    return b;
}

std::pair<BasicMonoidDual, int> decompose_q0(const CurveGraph& cg) {
    validate_curve_graph(cg);
    BasicMonoidDual b;
    b.nv = static_cast<int>(cg.vertices.size());
    int removed = 0;
    for (const auto& e : cg.edges)
        if (e.contracted) ++removed;
    b.ne = static_cast<int>(cg.edges.size()) - removed;
    int rank = b.rank();
    int li = b.nv + b.ne;
    Mat ineqs;
    auto eq = [&](Vec v) {
        ineqs.push_back(v);
        ineqs.push_back(negate(v));
    };
    for (int v = 0; v < b.nv; ++v) {
        ineqs.push_back(unit_vector(rank, v));
        Vec upper = unit_vector(rank, li);
        upper[v] = -1;
        ineqs.push_back(upper);
        if (cg.vertices[v].type == VertexType::rigid1) eq(unit_vector(rank, v));
        if (cg.vertices[v].type == VertexType::rigid2) {
            Vec pin = unit_vector(rank, v);
            pin[li] = -1;
            eq(pin);
        }
    }
    // contracted edges keep their identification x_head = x_tail; only
    // their free length coordinates are split off.
    int slot = 0;
    for (const auto& edge : cg.edges) {
        Vec rel(rank, 0);
        rel[edge.head] += 1;
        rel[edge.tail] -= 1;
        if (!edge.contracted) {
            ineqs.push_back(unit_vector(rank, b.nv + slot));
            rel[b.nv + slot] = -edge.w;
            ++slot;
        }
        eq(rel);
    }
    b.cone = Cone::from_inequalities(rank, std::move(ineqs));
    b.one_functional = unit_vector(rank, li);
    return {std::move(b), removed};
}

std::vector<SplittingRay> splitting_rays(const BasicMonoidDual& b) {
    std::vector<SplittingRay> out;
    for (const auto& r : rays(b.cone)) {
        Int l = dot(b.one_functional, r);
        if (l <= 0) continue;
        SplittingRay s;
        s.ray = r;
        s.l = l;
        s.positions.assign(r.begin(), r.begin() + b.nv);
        s.lengths.assign(r.begin() + b.nv, r.begin() + b.nv + b.ne);
        for (int e = 0; e < b.ne; ++e)
            if (s.lengths[e] != 0) s.splitting_nodes.push_back(e);
        out.push_back(std::move(s));
    }
    return out;
}

TropicalCurveInstance tropicalize(const BasicMonoidDual& b, const Vec& ray) {
    const Mat& rs = b.cone.extreme_rays();
    if (std::find(rs.begin(), rs.end(), primitivize(ray)) == rs.end())
        throw validation_error("tropicalize: not a ray of the basic dual cone");
    Vec r = primitivize(ray);
    TropicalCurveInstance t;
    t.positions.assign(r.begin(), r.begin() + b.nv);
    t.lengths.assign(r.begin() + b.nv, r.begin() + b.nv + b.ne);
    t.l = r[b.nv + b.ne];
    return t;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

DecoratedGraph trop_collapse(const TargetModel& t, const CurveGraph& cg, const SplittingRay& rho) {
    int nv = static_cast<int>(cg.vertices.size());
    int ne = static_cast<int>(cg.edges.size());
    for (int v = 0; v < nv; ++v)
        if (rho.positions[v] != 0 && rho.positions[v] != rho.l)
            throw validation_error("not a ray: vertex position strictly inside the interval");
    UnionFind uf(nv);
    for (int e = 0; e < ne; ++e)
        if (rho.lengths[e] == 0) uf.unite(cg.edges[e].tail, cg.edges[e].head);

    std::map<int, int> class_index;  // union-find root -> new vertex index
    DecoratedGraph out;
    std::vector<int> members_count, internal_edges;
    for (int v = 0; v < nv; ++v) {
        int root = uf.find(v);
        if (!class_index.count(root)) {
            class_index[root] = static_cast<int>(out.vertices.size());
            int r = rho.positions[v] == 0 ? 1 : 2;
            out.vertices.push_back({r, 0, {}, Vec(t.side(r).class_rank(), 0)});
            members_count.push_back(0);
            internal_edges.push_back(0);
        }
        int ci = class_index[root];
        GraphVertex& gv = out.vertices[ci];
        int r = rho.positions[v] == 0 ? 1 : 2;
        if (gv.r != r) throw validation_error("trop_collapse: collapsed piece spans both ends");
        const CurveVertex& cv = cg.vertices[v];
        if (cv.type == VertexType::rigid1 && r != 1)
            throw validation_error("trop_collapse: rigid vertex at the wrong end");
        if (cv.type == VertexType::rigid2 && r != 2)
            throw validation_error("trop_collapse: rigid vertex at the wrong end");
        gv.g += cv.g;
        for (int m : cv.markings) gv.markings.push_back(m);
        if (!cv.cls.empty()) {
            if (cv.cls.size() != gv.beta.size())
                throw validation_error("trop_collapse: class rank mismatch");
            for (size_t i = 0; i < cv.cls.size(); ++i) gv.beta[i] += cv.cls[i];
        }
        ++members_count[ci];
    }
    for (int e = 0; e < ne; ++e) {
        const auto& edge = cg.edges[e];
        if (rho.lengths[e] == 0) {
            ++internal_edges[class_index[uf.find(edge.tail)]];
        } else {
            int a = class_index[uf.find(edge.tail)];
            int b = class_index[uf.find(edge.head)];
            if (out.vertices[a].r != 1 || out.vertices[b].r != 2)
                throw validation_error("trop_collapse: splitting edge between equal ends");
            out.edges.push_back({a, b, edge.w});
        }
    }
    // first Betti number of each collapsed (connected) piece
    for (size_t ci = 0; ci < out.vertices.size(); ++ci) {
        out.vertices[ci].g += internal_edges[ci] - members_count[ci] + 1;
        std::sort(out.vertices[ci].markings.begin(), out.vertices[ci].markings.end());
    }
    // type (g, n, beta) carried by the curve graph itself
    int gsum = 0;
    std::set<int> marks;
    for (const auto& v : cg.vertices) {
        gsum += v.g;
        for (int m : v.markings) marks.insert(m);
    }
    int genus = 1 - (nv - ne) + gsum;
    int n = marks.empty() ? 0 : *marks.rbegin();
    Vec beta(t.ambient_rank, 0);
    for (const auto& gv : out.vertices) {
        Vec p = t.push(gv.r, gv.beta);
        for (int i = 0; i < t.ambient_rank; ++i) beta[i] += p[i];
    }
    validate_graph(t, out, genus, n, beta);
    return canonical_form(out);
}

}  // namespace logdegen
