#include "logdegen/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace logdegen {

int DecoratedGraph::valence(int v) const {
    int c = 0;
    for (const auto& e : edges)
        if (e.a == v || e.b == v) ++c;
    return c;
}

bool is_connected(const DecoratedGraph& g) {
    size_t nv = g.vertices.size();
    if (nv == 0) return false;
    std::vector<int> seen(nv, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& e : g.edges) {
            int other = -1;
            if (e.a == v) other = e.b;
            if (e.b == v) other = e.a;
            if (other >= 0 && !seen[other]) {
                seen[other] = 1;
                stack.push_back(other);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

void validate_graph(const TargetModel& t, const DecoratedGraph& g, int genus, int n,
                    const Vec& beta) {
    size_t nv = g.vertices.size();
    if (nv == 0) throw validation_error("graph: no vertices");
    for (const auto& v : g.vertices) {
        if (v.r != 1 && v.r != 2) throw validation_error("graph: bad component index");
        if (v.g < 0) throw validation_error("graph: negative genus");
        if (static_cast<int>(v.beta.size()) != t.side(v.r).class_rank())
            throw validation_error("graph: class rank mismatch");
        for (const auto& x : v.beta)
            if (x < 0) throw validation_error("graph: class not effective");
    }
    for (const auto& e : g.edges) {
        if (e.a < 0 || e.b < 0 || e.a >= static_cast<int>(nv) || e.b >= static_cast<int>(nv))
            throw validation_error("graph: edge endpoint out of range");
        if (g.vertices[e.a].r != 1 || g.vertices[e.b].r != 2)
            throw validation_error("graph: not bipartite");
        if (e.w < 1) throw validation_error("graph: nonpositive edge weight");
    }
    // curve class
    Vec total(t.ambient_rank, 0);
    for (const auto& v : g.vertices) {
        Vec p = t.push(v.r, v.beta);
        for (int i = 0; i < t.ambient_rank; ++i) total[i] += p[i];
    }
    if (total != beta) throw validation_error("graph: curve classes do not sum to beta");
    // contact order and stability
    for (size_t vi = 0; vi < nv; ++vi) {
        const auto& v = g.vertices[vi];
        Int wsum = 0;
        for (const auto& e : g.edges)
            if (e.a == static_cast<int>(vi) || e.b == static_cast<int>(vi)) wsum += e.w;
        if (t.d_deg(v.r, v.beta) != wsum)
            throw validation_error("graph: contact order violated at a vertex");
        int val = g.valence(static_cast<int>(vi));
        if (2 * v.g + static_cast<int>(v.markings.size()) + val < 3 && content(v.beta) == 0)
            throw validation_error("graph: unstable vertex with zero class");
    }
    // genus
    int chi = static_cast<int>(nv) - static_cast<int>(g.edges.size());
    int gsum = 0;
    for (const auto& v : g.vertices) gsum += v.g;
    if (1 - chi + gsum != genus) throw validation_error("graph: genus condition violated");
    // marking partition
    std::set<int> all;
    size_t count = 0;
    for (const auto& v : g.vertices) {
        for (int m : v.markings) all.insert(m);
        count += v.markings.size();
    }
    if (count != all.size()) throw validation_error("graph: repeated marking");
    if (static_cast<int>(all.size()) != n ||
        (!all.empty() && (*all.begin() < 1 || *all.rbegin() > n)))
        throw validation_error("graph: markings do not partition {1..n}");
    if (!is_connected(g)) throw validation_error("graph: not connected");
}

namespace {

using Key = std::vector<Int>;

Key vertex_invariant(const DecoratedGraph& g, int vi) {
    const auto& v = g.vertices[vi];
    Key k{Int(v.r), Int(v.g), Int(v.markings.size())};
    for (int m : v.markings) k.push_back(m);
    k.push_back(Int(v.beta.size()));
    for (const auto& x : v.beta) k.push_back(x);
    std::vector<Int> ws;
    for (const auto& e : g.edges)
        if (e.a == vi || e.b == vi) ws.push_back(e.w);
    std::sort(ws.begin(), ws.end());
    k.push_back(Int(ws.size()));
    for (const auto& w : ws) k.push_back(w);
    return k;
}

// Vertex classes sorted by invariant; isomorphisms only permute within a
// class, so canonicalization searches those permutations.
std::vector<std::vector<int>> invariant_classes(const DecoratedGraph& g) {
    std::map<Key, std::vector<int>> by_inv;
    for (size_t vi = 0; vi < g.vertices.size(); ++vi)
        by_inv[vertex_invariant(g, static_cast<int>(vi))].push_back(static_cast<int>(vi));
    std::vector<std::vector<int>> classes;
    for (auto& [k, vs] : by_inv) classes.push_back(std::move(vs));
    return classes;
}

// encode under relabeling newlabel[v]; edges sorted unless ordered
Key encode(const DecoratedGraph& g, const std::vector<int>& newlabel, bool ordered) {
    size_t nv = g.vertices.size();
    std::vector<int> oldlabel(nv);
    for (size_t v = 0; v < nv; ++v) oldlabel[newlabel[v]] = static_cast<int>(v);
    Key k;
    for (size_t nl = 0; nl < nv; ++nl) {
        const auto& v = g.vertices[oldlabel[nl]];
        k.push_back(Int(v.r));
        k.push_back(Int(v.g));
        k.push_back(Int(v.markings.size()));
        for (int m : v.markings) k.push_back(m);
        for (const auto& x : v.beta) k.push_back(x);
    }
    std::vector<Key> es;
    for (const auto& e : g.edges) es.push_back({Int(newlabel[e.a]), Int(newlabel[e.b]), e.w});
    if (!ordered) std::sort(es.begin(), es.end());
    for (const auto& e : es)
        for (const auto& x : e) k.push_back(x);
    return k;
}

// Enumerates all vertex relabelings that respect the invariant classes,
// invoking f(newlabel). Returns false if f ever returns false (early stop
// is not used; f returns void here — kept simple with a callback).
template <typename F>
void for_each_class_perm(const DecoratedGraph& g, const std::vector<std::vector<int>>& classes,
                         F&& f) {
    if (g.vertices.size() > 10) throw search_cap_error("instance too large");
    size_t nv = g.vertices.size();
    std::vector<std::vector<int>> perms = classes;  // working copy, permuted in place
    std::vector<int> newlabel(nv);
    // recursive product of within-class permutations
    auto assign = [&]() {
        int next = 0;
        for (const auto& cls : perms)
            for (int v : cls) newlabel[v] = next++;
        f(newlabel);
    };
    std::function<void(size_t)> rec = [&](size_t ci) {
        if (ci == perms.size()) {
            assign();
            return;
        }
        std::sort(perms[ci].begin(), perms[ci].end());
        do {
            rec(ci + 1);
        } while (std::next_permutation(perms[ci].begin(), perms[ci].end()));
    };
    rec(0);
}

DecoratedGraph apply_relabel(const DecoratedGraph& g, const std::vector<int>& newlabel,
                             bool sort_edges) {
    DecoratedGraph out;
    out.vertices.resize(g.vertices.size());
    for (size_t v = 0; v < g.vertices.size(); ++v) out.vertices[newlabel[v]] = g.vertices[v];
    for (const auto& e : g.edges) out.edges.push_back({newlabel[e.a], newlabel[e.b], e.w});
    if (sort_edges)
        std::sort(out.edges.begin(), out.edges.end(), [](const GraphEdge& x, const GraphEdge& y) {
            return std::tie(x.a, x.b, x.w) < std::tie(y.a, y.b, y.w);
        });
    return out;
}

std::vector<int> minimal_relabel(const DecoratedGraph& g, bool ordered) {
    auto classes = invariant_classes(g);
    std::optional<Key> best;
    std::vector<int> best_label;
    for_each_class_perm(g, classes, [&](const std::vector<int>& newlabel) {
        Key k = encode(g, newlabel, ordered);
        if (!best || k < *best) {
            best = std::move(k);
            best_label = newlabel;
        }
    });
    return best_label;
}

}  // namespace

DecoratedGraph canonical_form(const DecoratedGraph& g) {
    return apply_relabel(g, minimal_relabel(g, false), true);
}

OrderedGraph canonical_form(const OrderedGraph& g) {
    return OrderedGraph{apply_relabel(g.graph, minimal_relabel(g.graph, true), false)};
}

Int automorphism_count(const DecoratedGraph& g) {
    auto classes = invariant_classes(g);
    // multiset of parallel edge classes (a, b, w) -> multiplicity
    std::map<Key, Int> mult;
    for (const auto& e : g.edges) ++mult[{Int(e.a), Int(e.b), e.w}];
    Int parallel_factor = 1;
    for (const auto& [k, m] : mult) parallel_factor *= factorial(static_cast<int>(m.get_si()));
    // Two class-respecting labelings produce the same encoding iff they
    // differ by a decoration-and-edge-preserving vertex permutation, so the
    // number of labelings matching any fixed one is the vertex automorphism
    // count; each extends to the edge multiset in parallel_factor many ways.
    Int count = 0;
    std::optional<Key> base;
    for_each_class_perm(g, classes, [&](const std::vector<int>& newlabel) {
        Key k = encode(g, newlabel, false);
        if (!base) base = std::move(k);
        else if (k != *base) return;
        count += parallel_factor;
    });
    return count;
}

std::vector<OrderedGraph> edge_orderings(const DecoratedGraph& g) {
    std::vector<int> idx(g.edges.size());
    std::iota(idx.begin(), idx.end(), 0);
    if (g.edges.size() > 8) throw search_cap_error("instance too large");
    std::map<Key, OrderedGraph> reps;
    std::sort(idx.begin(), idx.end());
    do {
        OrderedGraph og;
        og.graph.vertices = g.vertices;
        for (int i : idx) og.graph.edges.push_back(g.edges[i]);
        OrderedGraph canon = canonical_form(og);
        Key k = encode(canon.graph, [&] {
            std::vector<int> id(canon.graph.vertices.size());
            std::iota(id.begin(), id.end(), 0);
            return id;
        }(), true);
        reps.emplace(std::move(k), std::move(canon));
    } while (std::next_permutation(idx.begin(), idx.end()));
    std::vector<OrderedGraph> out;
    for (auto& [k, og] : reps) out.push_back(std::move(og));
    return out;
}

std::pair<HalfGraph, HalfGraph> half_graphs(const OrderedGraph& g) {
    HalfGraph h1, h2;
    h1.side = 1;
    h2.side = 2;
    std::vector<int> local(g.graph.vertices.size(), -1);
    for (size_t v = 0; v < g.graph.vertices.size(); ++v) {
        HalfGraph& h = g.graph.vertices[v].r == 1 ? h1 : h2;
        local[v] = static_cast<int>(h.vertices.size());
        h.vertices.push_back(g.graph.vertices[v]);
    }
    for (size_t i = 0; i < g.graph.edges.size(); ++i) {
        const auto& e = g.graph.edges[i];
        h1.half_edges.push_back({local[e.a], e.w, static_cast<int>(i)});
        h2.half_edges.push_back({local[e.b], e.w, static_cast<int>(i)});
    }
    return {h1, h2};
}

MultiplicityData multiplicity_of_weights(const std::vector<Int>& weights) {
    MultiplicityData m;
    m.l_gamma = lcm_of(weights);
    Int prod = 1;
    for (const auto& w : weights) prod *= w;
    Int efact = factorial(static_cast<int>(weights.size()));
    m.cycle_coeff = Rat(m.l_gamma) / Rat(efact);
    m.numeric_coeff = Rat(prod) / Rat(efact);
    m.deg_phi = Rat(prod) / Rat(m.l_gamma);
    m.deg_f = Rat(efact) / Rat(m.l_gamma);
    m.cycle_coeff.canonicalize();
    m.numeric_coeff.canonicalize();
    m.deg_phi.canonicalize();
    m.deg_f.canonicalize();
    return m;
}

MultiplicityData multiplicity_data(const OrderedGraph& g) {
    std::vector<Int> ws;
    for (const auto& e : g.graph.edges) ws.push_back(e.w);
    MultiplicityData m = multiplicity_of_weights(ws);
    if (g.graph.vertices.size() == 1) m.numeric_coeff = 1;  // one-vertex convention
    return m;
}

}  // namespace logdegen
