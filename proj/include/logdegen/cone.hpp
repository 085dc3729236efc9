#pragma once

#include <optional>

#include "logdegen/linalg.hpp"

namespace logdegen {

/// Rational polyhedral cone with exact integer data. Both the generator side
/// and the inequality side are kept minimal and lexicographically sorted, so
/// equal cones have equal representations.
///
/// Lines are stored separately from extreme rays on each side: the primal
/// lineality space of the cone, and on the dual side the covectors vanishing
/// on the span of the cone (which encode the equations cutting out the span).
class Cone {
  public:
    static Cone from_generators(int ambient_rank, Mat generators);
    static Cone from_inequalities(int ambient_rank, Mat inequalities);
    static Cone zero(int ambient_rank);
    static Cone orthant(int ambient_rank);

    int ambient_rank() const { return rank_; }
    const Mat& extreme_rays() const { return rays_; }
    const Mat& lineality() const { return lin_; }
    const Mat& facet_inequalities() const { return dual_rays_; }
    const Mat& span_equations() const { return dual_lin_; }

    /// rays plus +-(lineality basis); the stored generating set.
    Mat generators() const;
    /// facet inequalities plus +-(span equations); the stored inequality set.
    Mat inequalities() const;

    bool is_pointed() const { return lin_.empty(); }
    int dim() const { return rank_ - static_cast<int>(dual_lin_.size()); }

    bool contains(const Vec& point) const;
    bool operator==(const Cone& other) const = default;

  private:
    int rank_ = 0;
    Mat rays_, lin_, dual_rays_, dual_lin_;
};

struct Sublattice {
    int ambient_rank = 0;
    Mat basis;  // linearly independent rows

    static Sublattice from_basis(int ambient_rank, Mat basis);
};

/// Dual cone {phi | phi(x) >= 0 for all x in c}.
Cone dual(const Cone& c);

/// Primitive generators of the rank-one faces; errors on non-pointed cones.
Mat rays(const Cone& c);

/// The facet c intersect rho^perp, for rho a ray of dual(c).
Cone facet_of_ray(const Cone& c, const Vec& rho);

/// (span_Q s) intersect Z^n, basis in Hermite normal form.
Sublattice saturate(const Sublattice& s);

/// Block direct sum.
Cone product(const Cone& a, const Cone& b);

/// Rewrites a cone in coordinates of the saturated lattice spanned by it,
/// so the result is full-dimensional of rank dim(c). The basis used is
/// returned through `span_basis` when non-null.
Cone restrict_to_span(const Cone& c, Sublattice* span_basis = nullptr);

/// Unimodular matrix mapping the ray set of a bijectively onto the ray set
/// of b (hence a onto b), by search over ray matchings. Cones must be
/// pointed and full-dimensional or at least have rays spanning the space.
std::optional<Mat> find_lattice_isomorphism(const Cone& a, const Cone& b,
                                            long matching_cap = 3628800);

/// All lattice points x of c with height(x) <= h_max, lexicographic order.
/// height must be positive on c minus the origin.
Mat lattice_points_box(const Cone& c, const Vec& height, const Int& h_max);

}  // namespace logdegen
