#pragma once

#include "logdegen/graph.hpp"

namespace logdegen {

/// All decorated bipartite graphs of type (g, n, beta) up to isomorphism,
/// as canonical forms in a deterministic order.
///
/// Finiteness: a rational covector lambda on the ambient class lattice with
/// lambda . pushforward = size (on every generator of both components) is
/// solved for; then the total size of any vertex-class assignment equals
/// lambda . beta, which bounds everything. If no such lambda exists the
/// enumeration may be infinite and an error is raised.
std::vector<DecoratedGraph> enumerate_graphs(const TargetModel& t, int g, int n, const Vec& beta);

}  // namespace logdegen
