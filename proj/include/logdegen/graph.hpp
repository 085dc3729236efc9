#pragma once

#include "logdegen/target.hpp"

namespace logdegen {

struct GraphVertex {
    int r = 1;                  // component, 1 or 2
    int g = 0;                  // genus
    std::vector<int> markings;  // sorted subset of {1..n}
    Vec beta;                   // class in N^{k_r}

    bool operator==(const GraphVertex&) const = default;
};

struct GraphEdge {
    int a = 0;  // endpoint on side 1
    int b = 0;  // endpoint on side 2
    Int w = 1;  // positive weight (contact order)

    bool operator==(const GraphEdge&) const = default;
};

/// Decorated bipartite graph indexing a stratum of the degeneration
/// formula. Edges form a multiset; in OrderedGraph their vector order is
/// the edge marking 1..|E|.
struct DecoratedGraph {
    std::vector<GraphVertex> vertices;
    std::vector<GraphEdge> edges;

    int valence(int v) const;
    bool operator==(const DecoratedGraph&) const = default;
};

struct OrderedGraph {
    DecoratedGraph graph;  // edge order = marking order

    bool operator==(const OrderedGraph&) const = default;
};

/// One side of a split graph: vertices of a single component with their
/// decorations and ordered half-edges labelled by the global edge marking.
struct HalfEdge {
    int vertex = 0;
    Int w = 1;
    int label = 0;  // global edge index (0-based)

    bool operator==(const HalfEdge&) const = default;
};

struct HalfGraph {
    int side = 1;
    std::vector<GraphVertex> vertices;
    std::vector<HalfEdge> half_edges;  // in global edge order

    bool operator==(const HalfGraph&) const = default;
};

/// Throws validation_error unless all seven defining conditions hold
/// (bipartite, curve class, contact order, stability, genus, marking
/// partition, connectivity).
void validate_graph(const TargetModel& t, const DecoratedGraph& g, int genus, int n,
                    const Vec& beta);

bool is_connected(const DecoratedGraph& g);

/// Canonical relabeling (deterministic representative of the isomorphism
/// class); also usable as a dedup key. Caps brute-force at 10 vertices.
DecoratedGraph canonical_form(const DecoratedGraph& g);

/// Canonical relabeling of an edge-ordered graph (vertices only; the edge
/// order is part of the structure).
OrderedGraph canonical_form(const OrderedGraph& g);

/// Order of the decoration-preserving automorphism group acting on
/// vertices and the edge multiset.
Int automorphism_count(const DecoratedGraph& g);

/// Representatives of edge orderings up to isomorphism; the count times
/// automorphism_count equals |E|!.
std::vector<OrderedGraph> edge_orderings(const DecoratedGraph& g);

/// Cuts every edge into two labelled half-edges.
std::pair<HalfGraph, HalfGraph> half_graphs(const OrderedGraph& g);

struct MultiplicityData {
    Int l_gamma;        // lcm of edge weights
    Rat cycle_coeff;    // l / |E|!
    Rat numeric_coeff;  // prod w / |E|!  (1 for a one-vertex graph)
    Rat deg_phi;        // prod w / l
    Rat deg_f;          // |E|! / l
};

MultiplicityData multiplicity_data(const OrderedGraph& g);
MultiplicityData multiplicity_of_weights(const std::vector<Int>& weights);

}  // namespace logdegen
