#pragma once

#include "logdegen/graded.hpp"

namespace logdegen {

/// Combinatorial model of a degeneration target X = X1 \cup_D X2:
/// effective-class monoids of the two components with their maps into a
/// common ambient class lattice, degree-against-D covectors, a positive size
/// functional used to bound enumeration, and the graded cohomology data of
/// D, X and the two components.
struct TargetComponent {
    std::vector<std::string> generator_names;  // basis of N^k
    Mat pushforward_columns;                   // k columns, each of ambient rank m
    Vec d_degree;                              // covector on Z^k, >= 0
    Vec size;                                  // covector, >= 1 entrywise
    GradedBasis cohomology;                    // H*(X_i), no pairing needed
    QMat restriction;                          // H*(X) -> H*(X_i)

    int class_rank() const { return static_cast<int>(generator_names.size()); }
};

struct TargetModel {
    int ambient_rank = 0;  // rank m of the common class lattice
    TargetComponent component[2];
    GradedBasis d_cohomology;  // H*(D), with pairing
    GradedBasis x_cohomology;  // H*(X), no pairing

    const TargetComponent& side(int r) const;  // r in {1,2}

    /// Push a component class into the ambient lattice.
    Vec push(int r, const Vec& beta_v) const;

    Int d_deg(int r, const Vec& beta_v) const;
    Int size_of(int r, const Vec& beta_v) const;

    void validate() const;
};

/// Restriction of a class on X to component r; degree preserved.
GradedClass restrict(const TargetModel& t, int r, const GradedClass& c);

}  // namespace logdegen
