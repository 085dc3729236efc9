#include "logdegen/formula.hpp"

#include <sstream>

namespace logdegen {

std::string describe(const TargetModel& t, const CorrelatorQuery& q) {
    std::ostringstream os;
    os << "component " << q.r << " genus " << q.g << " class (";
    for (size_t i = 0; i < q.beta.size(); ++i)
        os << (i ? "," : "") << q.beta[i].get_str();
    os << ") absolute [";
    for (size_t i = 0; i < q.absolute.size(); ++i) {
        os << (i ? ", " : "") << "tau_" << q.absolute[i].m << "(";
        for (size_t j = 0; j < q.absolute[i].cls.coeffs.size(); ++j)
            os << (j ? "," : "") << rat_to_string(q.absolute[i].cls.coeffs[j]);
        os << ")";
    }
    os << "] relative [";
    for (size_t i = 0; i < q.relative.size(); ++i) {
        os << (i ? ", " : "") << "w=" << q.relative[i].w.get_str() << "(";
        for (size_t j = 0; j < q.relative[i].cls.coeffs.size(); ++j)
            os << (j ? "," : "") << rat_to_string(q.relative[i].cls.coeffs[j]);
        os << ")";
    }
    os << "]";
    (void)t;
    return os.str();
}

namespace {

constexpr long kEdgeSymbolBase = 1000000;

}  // namespace

Rat evaluate_graph_term(const TargetModel& t, const OrderedGraph& og,
                        const std::vector<Insertion>& insertions,
                        const InvariantProvider& provider) {
    const DecoratedGraph& g = og.graph;
    size_t ne = g.edges.size();
    size_t nv = g.vertices.size();
    size_t n = insertions.size();

    std::vector<int> gamma_degree(n);
    for (size_t i = 0; i < n; ++i) {
        auto d = homogeneous_degree(t.x_cohomology, insertions[i].cls);
        if (!d) throw validation_error("evaluate: insertion class is not homogeneous");
        gamma_degree[i] = *d;
    }
    auto summands = diagonal_summands(t.d_cohomology);
    size_t dsize = summands.size();
    std::vector<int> delta1_degree(dsize), delta2_degree(dsize);
    for (size_t j = 0; j < dsize; ++j) {
        delta1_degree[j] = t.d_cohomology.degrees[j];
        auto d2 = homogeneous_degree(t.d_cohomology, summands[j].second);
        if (!d2) throw validation_error("evaluate: dual basis class is not homogeneous");
        delta2_degree[j] = *d2;
    }

    // restricted absolute insertions per vertex, fixed across tuples
    std::vector<CorrelatorQuery> base(nv);
    for (size_t v = 0; v < nv; ++v) {
        base[v].r = g.vertices[v].r;
        base[v].g = g.vertices[v].g;
        base[v].beta = g.vertices[v].beta;
        for (int mk : g.vertices[v].markings) {
            if (mk < 1 || mk > static_cast<int>(n))
                throw validation_error("evaluate: marking out of range of insertions");
            base[v].absolute.push_back(
                {insertions[mk - 1].m, restrict(t, base[v].r, insertions[mk - 1].cls)});
        }
    }

    if (dsize == 0 && ne > 0) return 0;  // empty diagonal, no index tuples
    Rat total = 0;
    std::vector<size_t> tuple(ne, 0);
    while (true) {
        // Koszul sign of the regrouping by vertices
        std::vector<GradedSymbol> global, regrouped;
        for (size_t i = 0; i < n; ++i) global.push_back({static_cast<long>(i), gamma_degree[i]});
        for (size_t e = 0; e < ne; ++e) {
            global.push_back({kEdgeSymbolBase + 2 * static_cast<long>(e),
                              delta1_degree[tuple[e]]});
            global.push_back({kEdgeSymbolBase + 2 * static_cast<long>(e) + 1,
                              delta2_degree[tuple[e]]});
        }
        for (size_t v = 0; v < nv; ++v) {
            for (int mk : g.vertices[v].markings)
                regrouped.push_back({static_cast<long>(mk - 1), gamma_degree[mk - 1]});
            for (size_t e = 0; e < ne; ++e) {
                if (g.edges[e].a == static_cast<int>(v))
                    regrouped.push_back({kEdgeSymbolBase + 2 * static_cast<long>(e),
                                         delta1_degree[tuple[e]]});
                if (g.edges[e].b == static_cast<int>(v))
                    regrouped.push_back({kEdgeSymbolBase + 2 * static_cast<long>(e) + 1,
                                         delta2_degree[tuple[e]]});
            }
        }
        int sign = koszul_sign(global, regrouped);

        Rat prod = sign;
        for (size_t v = 0; v < nv && prod != 0; ++v) {
            CorrelatorQuery q = base[v];
            for (size_t e = 0; e < ne; ++e) {
                if (g.edges[e].a == static_cast<int>(v))
                    q.relative.push_back({g.edges[e].w, summands[tuple[e]].first});
                if (g.edges[e].b == static_cast<int>(v))
                    q.relative.push_back({g.edges[e].w, summands[tuple[e]].second});
            }
            auto val = provider.lookup(t, q);
            if (!val) throw unresolved_query_error("unresolved correlator: " + describe(t, q));
            prod *= *val;
        }
        total += prod;

        // next index tuple
        size_t e = 0;
        while (e < ne && ++tuple[e] == dsize) tuple[e++] = 0;
        if (e == ne && ne > 0) break;
        if (ne == 0) break;
    }
    Rat coeff = multiplicity_data(og).numeric_coeff;
    Rat out = coeff * total;
    out.canonicalize();
    return out;
}

std::vector<GraphTerm> evaluate_terms(const TargetModel& t, int g, int n, const Vec& beta,
                                      const std::vector<Insertion>& insertions,
                                      const InvariantProvider& provider) {
    if (static_cast<int>(insertions.size()) != n)
        throw validation_error("evaluate: need one insertion per marking");
    for (const auto& ins : insertions) {
        if (ins.m < 0) throw validation_error("evaluate: negative psi power");
        if (!homogeneous_degree(t.x_cohomology, ins.cls))
            throw validation_error("evaluate: insertion class is not homogeneous");
    }
    std::vector<GraphTerm> out;
    for (const auto& graph : enumerate_graphs(t, g, n, beta))
        for (const auto& og : edge_orderings(graph))
            out.push_back({og, evaluate_graph_term(t, og, insertions, provider)});
    return out;
}

Rat evaluate(const TargetModel& t, int g, int n, const Vec& beta,
             const std::vector<Insertion>& insertions, const InvariantProvider& provider) {
    Rat total = 0;
    for (const auto& term : evaluate_terms(t, g, n, beta, insertions, provider))
        total += term.value;
    total.canonicalize();
    return total;
}

}  // namespace logdegen
