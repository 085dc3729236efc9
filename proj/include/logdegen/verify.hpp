#pragma once

#include <random>

#include "logdegen/enumerate.hpp"
#include "logdegen/splitting.hpp"

namespace logdegen {

struct VerifyReport {
    bool passed = false;
    std::string text;
};

/// Deterministic randomized property suite. Known suites: cones, koszul,
/// multiplicity, bipartition, split-facet, glue-split, ordering,
/// enumeration. Throws validation_error on an unknown suite name.
VerifyReport run_suite(const std::string& suite, unsigned long long seed, int size);

const std::vector<std::string>& suite_names();

using Rng = std::mt19937_64;

/// Small random target with unit pushforward columns (so a size functional
/// always exists); trivial cohomology apparatus.
TargetModel random_small_target(Rng& rng);

/// Random balanced curve graph (paths of constant weight through free
/// vertices, plus contracted edges).
CurveGraph random_curve_graph(Rng& rng);

/// Matched pair of curve halves with equal half-edge labels and weights.
std::pair<CurveHalf, CurveHalf> random_half_pair(Rng& rng);

/// Independent brute-force enumeration of decorated graphs (direct loop
/// over vertex counts, decorations and edge multisets with pairwise
/// isomorphism dedup). Requires unit pushforward columns.
std::vector<DecoratedGraph> brute_force_enumerate(const TargetModel& t, int g, int n,
                                                  const Vec& beta, int max_vertices);

/// Brute-force graph isomorphism over all decoration-compatible vertex
/// bijections.
bool graphs_isomorphic(const DecoratedGraph& a, const DecoratedGraph& b);

/// Koszul sign by moving one adjacent transposition at a time.
int koszul_sign_oracle(const std::vector<GradedSymbol>& from, const std::vector<GradedSymbol>& to);

/// Nested-loop enumeration of lattice points with height <= h_max for
/// cones contained in the positive orthant.
Mat lattice_points_oracle(const Cone& c, const Vec& height, const Int& h_max);

}  // namespace logdegen
