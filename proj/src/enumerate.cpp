#include "logdegen/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace logdegen {

namespace {

using Key = std::vector<Int>;

Key graph_key(const DecoratedGraph& g) {
    Key k;
    for (const auto& v : g.vertices) {
        k.push_back(Int(v.r));
        k.push_back(Int(v.g));
        k.push_back(Int(v.markings.size()));
        for (int m : v.markings) k.push_back(m);
        k.push_back(Int(v.beta.size()));
        for (const auto& x : v.beta) k.push_back(x);
    }
    k.push_back(Int(-1));
    for (const auto& e : g.edges) {
        k.push_back(Int(e.a));
        k.push_back(Int(e.b));
        k.push_back(e.w);
    }
    return k;
}

// Rational covector lambda with lambda . (pushforward of each generator)
// equal to the generator's size, on both components.
QVec solve_size_functional(const TargetModel& t) {
    std::vector<Vec> cols;  // all generator images, length m each
    Vec sizes;
    for (int r = 1; r <= 2; ++r) {
        const auto& c = t.side(r);
        for (int j = 0; j < c.class_rank(); ++j) {
            cols.push_back(c.pushforward_columns[j]);
            sizes.push_back(c.size[j]);
        }
    }
    size_t kk = cols.size();
    // lambda satisfies M lambda = sizes with rows of M the columns above;
    // rewrite as sum_j lambda_j (j-th coordinate slice) = sizes.
    Mat slices(t.ambient_rank, Vec(kk));
    for (size_t i = 0; i < kk; ++i)
        for (int j = 0; j < t.ambient_rank; ++j) slices[j][i] = cols[i][j];
    try {
        return solve_in_row_span(slices, sizes);
    } catch (const validation_error&) {
        throw validation_error("enumeration not finite");
    }
}

// All x in N^k with size . x == budget, via bounded recursion.
void classes_of_size(const Vec& size, const Int& budget, std::vector<Vec>& out) {
    size_t k = size.size();
    Vec x(k, 0);
    std::function<void(size_t, Int)> rec = [&](size_t i, Int rem) {
        if (i == k) {
            if (rem == 0) out.push_back(x);
            return;
        }
        for (Int v = 0; v * size[i] <= rem; ++v) {
            x[i] = v;
            rec(i + 1, rem - v * size[i]);
        }
    };
    rec(0, budget);
}

struct VertexPlan {
    int r;
    Vec beta;
};

bool plan_less(const VertexPlan& a, const VertexPlan& b) {
    if (a.r != b.r) return a.r < b.r;
    return lex_less(a.beta, b.beta);
}

}  // namespace

std::vector<DecoratedGraph> enumerate_graphs(const TargetModel& t, int g, int n, const Vec& beta) {
    if (g < 0 || n < 0) throw validation_error("enumerate_graphs: negative genus or markings");
    if (static_cast<int>(beta.size()) != t.ambient_rank)
        throw validation_error("enumerate_graphs: beta has wrong rank");
    QVec lambda = solve_size_functional(t);
    Rat budget_q = qdot(lambda, to_qvec(beta));
    std::map<Key, DecoratedGraph> found;

    std::vector<int> all_markings(n);
    std::iota(all_markings.begin(), all_markings.end(), 1);

    auto record = [&](const DecoratedGraph& graph) {
        validate_graph(t, graph, g, n, beta);
        DecoratedGraph canon = canonical_form(graph);
        found.emplace(graph_key(canon), std::move(canon));
    };

    if (budget_q.get_den() != 1 || budget_q < 0) return {};
    Int budget = budget_q.get_num();

    // single-vertex graphs: no edges, so the class must have D-degree zero
    for (int r = 1; r <= 2; ++r) {
        std::vector<Vec> classes;
        classes_of_size(t.side(r).size, budget, classes);
        for (const auto& bv : classes) {
            if (t.push(r, bv) != beta) continue;
            if (t.d_deg(r, bv) != 0) continue;
            if (2 * g + n < 3 && content(bv) == 0) continue;  // stability
            DecoratedGraph graph;
            graph.vertices.push_back({r, g, all_markings, bv});
            try {
                record(graph);
            } catch (const validation_error&) {
            }
        }
    }

    // multi-vertex graphs: every vertex has a nonzero class (a zero class
    // would force zero incident weight, hence an isolated vertex)
    for (Int nvz = 2; nvz <= budget; ++nvz) {
        int nv = static_cast<int>(nvz.get_si());
        if (nv > 10) throw search_cap_error("instance too large");
        // nondecreasing tuples of (r, beta_V) with sizes summing to budget
        std::vector<VertexPlan> plan;
        std::vector<std::vector<VertexPlan>> tuples;
        std::vector<std::pair<VertexPlan, Int>> options;  // (plan, size)
        for (int r = 1; r <= 2; ++r) {
            for (Int s = 1; s <= budget; ++s) {
                std::vector<Vec> cs;
                classes_of_size(t.side(r).size, s, cs);
                for (auto& c : cs)
                    if (content(c) != 0) options.push_back({{r, c}, s});
            }
        }
        std::sort(options.begin(), options.end(),
                  [](const auto& a, const auto& b) { return plan_less(a.first, b.first); });
        std::function<void(size_t, int, Int)> rec = [&](size_t from, int left, Int rem) {
            if (left == 0) {
                if (rem == 0) tuples.push_back(plan);
                return;
            }
            for (size_t i = from; i < options.size(); ++i) {
                if (options[i].second > rem) continue;
                plan.push_back(options[i].first);
                rec(i, left - 1, rem - options[i].second);
                plan.pop_back();
            }
        };
        rec(0, nv, budget);

        for (const auto& tuple : tuples) {
            // curve class condition
            Vec total(t.ambient_rank, 0);
            bool side1 = false, side2 = false;
            std::vector<Int> dv(nv);
            Int w1 = 0, w2 = 0;
            bool ok = true;
            for (int v = 0; v < nv; ++v) {
                Vec p = t.push(tuple[v].r, tuple[v].beta);
                for (int i = 0; i < t.ambient_rank; ++i) total[i] += p[i];
                dv[v] = t.d_deg(tuple[v].r, tuple[v].beta);
                if (dv[v] < 1) ok = false;  // would be isolated
                (tuple[v].r == 1 ? side1 : side2) = true;
                (tuple[v].r == 1 ? w1 : w2) += dv[v];
            }
            if (!ok || !side1 || !side2 || total != beta || w1 != w2) continue;
            Int total_weight = w1;

            for (int gsum = 0; gsum <= g; ++gsum) {
                Int ne_z = Int(nv) - 1 + (g - gsum);
                if (ne_z < Int(nv) - 1 || ne_z > total_weight) continue;
                int ne = static_cast<int>(ne_z.get_si());
                // genus compositions
                std::vector<int> gv(nv, 0);
                std::function<void(int, int)> grec = [&](int v, int rem) {
                    if (v == nv) {
                        if (rem != 0) return;
                        // marking assignments
                        std::vector<int> owner(n, 0);
                        std::function<void(int)> mrec = [&](int mi) {
                            if (mi == n) {
                                // edge multisets
                                std::vector<int> s1, s2;
                                for (int v2 = 0; v2 < nv; ++v2)
                                    (tuple[v2].r == 1 ? s1 : s2).push_back(v2);
                                std::vector<Int> rem_d(dv);
                                std::vector<GraphEdge> edges;
                                std::function<void(size_t, Int, int)> erec =
                                    [&](size_t from, Int wmin, int left) {
                                        if (left == 0) {
                                            for (const auto& d : rem_d)
                                                if (d != 0) return;
                                            DecoratedGraph graph;
                                            for (int v3 = 0; v3 < nv; ++v3) {
                                                std::vector<int> mk;
                                                for (int m = 0; m < n; ++m)
                                                    if (owner[m] == v3) mk.push_back(m + 1);
                                                graph.vertices.push_back(
                                                    {tuple[v3].r, gv[v3], mk, tuple[v3].beta});
                                            }
                                            graph.edges = edges;
                                            if (!is_connected(graph)) return;
                                            try {
                                                record(graph);
                                            } catch (const validation_error&) {
                                            }
                                            return;
                                        }
                                        size_t npairs = s1.size() * s2.size();
                                        for (size_t p = from; p < npairs; ++p) {
                                            int a = s1[p / s2.size()];
                                            int b = s2[p % s2.size()];
                                            Int wlo = p == from ? wmin : Int(1);
                                            Int cap = rem_d[a] < rem_d[b] ? rem_d[a] : rem_d[b];
                                            for (Int w = wlo; w <= cap; ++w) {
                                                rem_d[a] -= w;
                                                rem_d[b] -= w;
                                                edges.push_back({a, b, w});
                                                erec(p, w, left - 1);
                                                edges.pop_back();
                                                rem_d[a] += w;
                                                rem_d[b] += w;
                                            }
                                        }
                                    };
                                erec(0, 1, ne);
                                return;
                            }
                            for (int v2 = 0; v2 < nv; ++v2) {
                                owner[mi] = v2;
                                mrec(mi + 1);
                            }
                        };
                        mrec(0);
                        return;
                    }
                    for (int x = 0; x <= rem; ++x) {
                        gv[v] = x;
                        grec(v + 1, rem - x);
                    }
                };
                grec(0, gsum);
            }
        }
    }

    std::vector<DecoratedGraph> out;
    for (auto& [k, graph] : found) out.push_back(std::move(graph));
    return out;
}

}  // namespace logdegen
