#pragma once

#include <memory>

#include "logdegen/enumerate.hpp"

namespace logdegen {

/// Raised when a provider cannot answer a generated correlator query.
struct unresolved_query_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AbsoluteInsertion {
    int m = 0;         // psi power
    GradedClass cls;   // over H*(X_r)
};

struct RelativeInsertion {
    Int w = 1;         // contact order
    GradedClass cls;   // over H*(D)
};

/// One vertex correlator of the degeneration formula: a relative invariant
/// of (X_r, D) of the given genus and class with absolute insertions (in
/// marking order) and relative insertions (in edge order).
struct CorrelatorQuery {
    int r = 1;
    int g = 0;
    Vec beta;
    std::vector<AbsoluteInsertion> absolute;
    std::vector<RelativeInsertion> relative;
};

std::string describe(const TargetModel& t, const CorrelatorQuery& q);

class InvariantProvider {
  public:
    virtual ~InvariantProvider() = default;
    /// Exact value, or nullopt when unknown.
    virtual std::optional<Rat> lookup(const TargetModel& t, const CorrelatorQuery& q) const = 0;
};

/// Insertion on X: psi power and a homogeneous class over H*(X).
struct Insertion {
    int m = 0;
    GradedClass cls;
};

/// Contribution of a single edge-ordered graph: the numeric coefficient
/// times the sum over diagonal index tuples of the signed product of
/// vertex correlators.
Rat evaluate_graph_term(const TargetModel& t, const OrderedGraph& og,
                        const std::vector<Insertion>& insertions,
                        const InvariantProvider& provider);

/// The full numerical degeneration formula: sum over edge-ordered graphs
/// of type (g, n, beta) of their terms. Insertions must be homogeneous.
Rat evaluate(const TargetModel& t, int g, int n, const Vec& beta,
             const std::vector<Insertion>& insertions, const InvariantProvider& provider);

/// Per-graph breakdown for reporting.
struct GraphTerm {
    OrderedGraph graph;
    Rat value;
};
std::vector<GraphTerm> evaluate_terms(const TargetModel& t, int g, int n, const Vec& beta,
                                      const std::vector<Insertion>& insertions,
                                      const InvariantProvider& provider);

}  // namespace logdegen
