#include "logdegen/cone.hpp"

#include <algorithm>
#include <set>

#include "logdegen/normal_form.hpp"

namespace logdegen {

namespace {

struct DDRay {
    Vec v;
    std::vector<bool> tight;  // indexed by processed inequality
};

struct DDOut {
    Mat lin;
    Mat rays;
};

bool subset(const std::vector<bool>& a, const std::vector<bool>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] && !b[i]) return false;
    return true;
}

// Double description: minimal (lineality, extreme rays) of {x | ineqs . x >= 0}.
DDOut double_description(int rank, const Mat& ineqs) {
    Mat lin;
    for (int i = 0; i < rank; ++i) lin.push_back(unit_vector(rank, i));
    std::vector<DDRay> rays;
    size_t n = ineqs.size();

    for (size_t idx = 0; idx < n; ++idx) {
        const Vec& a = ineqs[idx];
        if (static_cast<int>(a.size()) != rank) throw validation_error("inequality size mismatch");

        size_t hit = lin.size();
        for (size_t i = 0; i < lin.size(); ++i)
            if (dot(a, lin[i]) != 0) {
                hit = i;
                break;
            }
        if (hit < lin.size()) {
            Vec w = lin[hit];
            Int aw = dot(a, w);
            if (aw < 0) {
                w = negate(w);
                aw = -aw;
            }
            Mat newlin;
            for (size_t i = 0; i < lin.size(); ++i) {
                if (i == hit) continue;
                Int au = dot(a, lin[i]);
                Vec u(rank);
                for (int j = 0; j < rank; ++j) u[j] = aw * lin[i][j] - au * w[j];
                newlin.push_back(primitivize(u));
            }
            lin = std::move(newlin);
            for (auto& r : rays) {
                Int ar = dot(a, r.v);
                if (ar != 0) {
                    Vec u(rank);
                    for (int j = 0; j < rank; ++j) u[j] = aw * r.v[j] - ar * w[j];
                    r.v = primitivize(u);
                }
                r.tight.push_back(true);
            }
            DDRay wr;
            wr.v = primitivize(w);
            wr.tight.assign(idx, true);  // w was in the lineality of all previous
            wr.tight.push_back(false);
            rays.push_back(std::move(wr));
            continue;
        }

        std::vector<Int> vals(rays.size());
        bool has_neg = false;
        for (size_t i = 0; i < rays.size(); ++i) {
            vals[i] = dot(a, rays[i].v);
            if (vals[i] < 0) has_neg = true;
        }
        if (!has_neg) {
            for (size_t i = 0; i < rays.size(); ++i) rays[i].tight.push_back(vals[i] == 0);
            continue;
        }
        std::vector<DDRay> next;
        for (size_t i = 0; i < rays.size(); ++i) {
            if (vals[i] < 0) continue;
            DDRay r = rays[i];
            r.tight.push_back(vals[i] == 0);
            next.push_back(std::move(r));
        }
        for (size_t p = 0; p < rays.size(); ++p) {
            if (vals[p] <= 0) continue;
            for (size_t q = 0; q < rays.size(); ++q) {
                if (vals[q] >= 0) continue;
                std::vector<bool> common(idx, false);
                for (size_t t = 0; t < idx; ++t)
                    common[t] = rays[p].tight[t] && rays[q].tight[t];
                bool adjacent = true;
                for (size_t r = 0; r < rays.size(); ++r) {
                    if (r == p || r == q) continue;
                    if (subset(common, rays[r].tight)) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                Vec u(rank);
                for (int j = 0; j < rank; ++j)
                    u[j] = vals[p] * rays[q].v[j] - vals[q] * rays[p].v[j];
                DDRay nr;
                nr.v = primitivize(u);
                nr.tight = std::move(common);
                nr.tight.push_back(true);
                next.push_back(std::move(nr));
            }
        }
        rays = std::move(next);
    }

    DDOut out;
    out.lin = hnf(std::move(lin));
    std::set<Vec, bool (*)(const Vec&, const Vec&)> uniq(lex_less);
    for (auto& r : rays) uniq.insert(std::move(r.v));
    out.rays.assign(uniq.begin(), uniq.end());
    return out;
}

// Canonical representative of a ray direction modulo a lineality space given
// by an HNF basis: zero out the pivot coordinates over Q, clear denominators.
Vec reduce_mod_lineality(const Vec& ray, const Mat& lin_hnf) {
    if (lin_hnf.empty()) return primitivize(ray);
    size_t n = ray.size();
    QVec x = to_qvec(ray);
    for (const auto& row : lin_hnf) {
        size_t p = 0;
        while (p < n && row[p] == 0) ++p;
        if (p == n) continue;
        Rat f = x[p] / Rat(row[p]);
        for (size_t j = 0; j < n; ++j) x[j] -= f * Rat(row[j]);
    }
    Int den = 1;
    for (const auto& q : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    Vec v(n);
    for (size_t j = 0; j < n; ++j) v[j] = Rat(x[j] * den).get_num();
    return primitivize(v);
}

Mat canonicalize_rays(Mat rays, const Mat& lin_hnf) {
    for (auto& r : rays) r = reduce_mod_lineality(r, lin_hnf);
    std::set<Vec, bool (*)(const Vec&, const Vec&)> uniq(lex_less);
    for (auto& r : rays)
        if (content(r) != 0) uniq.insert(std::move(r));
    return Mat(uniq.begin(), uniq.end());
}

}  // namespace

Cone Cone::from_inequalities(int ambient_rank, Mat inequalities) {
    if (ambient_rank < 0) throw validation_error("negative ambient rank");
    Cone c;
    c.rank_ = ambient_rank;
    DDOut primal = double_description(ambient_rank, inequalities);
    c.lin_ = primal.lin;
    c.rays_ = canonicalize_rays(primal.rays, c.lin_);
    Mat gens = c.rays_;
    for (const auto& l : c.lin_) {
        gens.push_back(l);
        gens.push_back(negate(l));
    }
    DDOut dualside = double_description(ambient_rank, gens);
    c.dual_lin_ = dualside.lin;
    c.dual_rays_ = canonicalize_rays(dualside.rays, c.dual_lin_);
    return c;
}

Cone Cone::from_generators(int ambient_rank, Mat generators) {
    if (ambient_rank < 0) throw validation_error("negative ambient rank");
    for (const auto& g : generators)
        if (static_cast<int>(g.size()) != ambient_rank)
            throw validation_error("generator size mismatch");
    Cone c;
    c.rank_ = ambient_rank;
    DDOut dualside = double_description(ambient_rank, generators);
    c.dual_lin_ = dualside.lin;
    c.dual_rays_ = canonicalize_rays(dualside.rays, c.dual_lin_);
    Mat ineqs = c.dual_rays_;
    for (const auto& l : c.dual_lin_) {
        ineqs.push_back(l);
        ineqs.push_back(negate(l));
    }
    DDOut primal = double_description(ambient_rank, ineqs);
    c.lin_ = primal.lin;
    c.rays_ = canonicalize_rays(primal.rays, c.lin_);
    return c;
}

Cone Cone::zero(int ambient_rank) { return from_generators(ambient_rank, {}); }

Cone Cone::orthant(int ambient_rank) {
    Mat gens;
    for (int i = 0; i < ambient_rank; ++i) gens.push_back(unit_vector(ambient_rank, i));
    return from_generators(ambient_rank, std::move(gens));
}

Mat Cone::generators() const {
    Mat g = rays_;
    for (const auto& l : lin_) {
        g.push_back(l);
        g.push_back(negate(l));
    }
    sort_rows_lex(g);
    return g;
}

Mat Cone::inequalities() const {
    Mat g = dual_rays_;
    for (const auto& l : dual_lin_) {
        g.push_back(l);
        g.push_back(negate(l));
    }
    sort_rows_lex(g);
    return g;
}

bool Cone::contains(const Vec& point) const {
    for (const auto& a : dual_rays_)
        if (dot(a, point) < 0) return false;
    for (const auto& a : dual_lin_)
        if (dot(a, point) != 0) return false;
    return true;
}

Sublattice Sublattice::from_basis(int ambient_rank, Mat basis) {
    if (rank_of(basis) != static_cast<int>(basis.size()))
        throw validation_error("sublattice basis not linearly independent");
    return Sublattice{ambient_rank, std::move(basis)};
}

Cone dual(const Cone& c) {
    Cone d;
    // swap the two sides; private access via friend-free reconstruction
    d = Cone::from_generators(c.ambient_rank(), c.inequalities());
    return d;
}

Mat rays(const Cone& c) {
    if (!c.is_pointed()) throw validation_error("cone contains a line");
    return c.extreme_rays();
}

Cone facet_of_ray(const Cone& c, const Vec& rho) {
    Vec r = primitivize(rho);
    const Mat& dr = c.facet_inequalities();
    if (std::find(dr.begin(), dr.end(), r) == dr.end())
        throw validation_error("covector is not a ray of the dual cone");
    Mat ineqs = c.inequalities();
    ineqs.push_back(negate(r));
    return Cone::from_inequalities(c.ambient_rank(), std::move(ineqs));
}

Sublattice saturate(const Sublattice& s) {
    Mat b = saturate_rows(s.basis, s.ambient_rank);
    return Sublattice{s.ambient_rank, std::move(b)};
}

Cone product(const Cone& a, const Cone& b) {
    int ra = a.ambient_rank(), rb = b.ambient_rank();
    Mat gens;
    for (const auto& g : a.generators()) {
        Vec v(ra + rb, 0);
        for (int j = 0; j < ra; ++j) v[j] = g[j];
        gens.push_back(std::move(v));
    }
    for (const auto& g : b.generators()) {
        Vec v(ra + rb, 0);
        for (int j = 0; j < rb; ++j) v[ra + j] = g[j];
        gens.push_back(std::move(v));
    }
    return Cone::from_generators(ra + rb, std::move(gens));
}

Cone restrict_to_span(const Cone& c, Sublattice* span_basis) {
    Mat basis = saturate_rows(c.generators(), c.ambient_rank());
    int d = static_cast<int>(basis.size());
    Mat newgens;
    for (const auto& g : c.generators()) {
        QVec coords = solve_in_row_span(basis, g);
        Vec v(d);
        for (int j = 0; j < d; ++j) {
            if (coords[j].get_den() != 1)
                throw validation_error("restrict_to_span: non-integral coordinates");
            v[j] = coords[j].get_num();
        }
        newgens.push_back(std::move(v));
    }
    if (span_basis) *span_basis = Sublattice{c.ambient_rank(), basis};
    return Cone::from_generators(d, std::move(newgens));
}

namespace {

struct IsoSearch {
    const Mat& ra;
    const Mat& rb;
    int rank;
    long cap;
    long visited = 0;
    std::vector<int> used;    // rb index -> 0/1
    std::vector<int> assign;  // ra index -> rb index
    std::optional<Mat> result;

    bool full_check() {
        // find rank independent assigned rays
        Mat sel_a, sel_b;
        std::vector<size_t> chosen;
        for (size_t i = 0; i < ra.size() && static_cast<int>(chosen.size()) < rank; ++i) {
            Mat test = sel_a;
            test.push_back(ra[i]);
            if (rank_of(test) == static_cast<int>(test.size())) {
                sel_a = std::move(test);
                sel_b.push_back(rb[assign[i]]);
                chosen.push_back(i);
            }
        }
        if (static_cast<int>(sel_a.size()) != rank) return false;
        // columns: solve M * sel_a[i] = sel_b[i]  =>  M = B A^{-1} with rays as columns
        QMat acols(rank, QVec(rank)), bcols(rank, QVec(rank));
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) {
                acols[j][i] = Rat(sel_a[i][j]);
                bcols[j][i] = Rat(sel_b[i][j]);
            }
        QMat ainv;
        try {
            ainv = qmat_inverse(acols);
        } catch (const validation_error&) {
            return false;
        }
        Mat m(rank, Vec(rank));
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) {
                Rat s = 0;
                for (int k = 0; k < rank; ++k) s += bcols[i][k] * ainv[k][j];
                if (s.get_den() != 1) return false;
                m[i][j] = s.get_num();
            }
        // unimodularity
        QMat qm = to_qmat(m);
        try {
            QMat minv = qmat_inverse(qm);
            for (const auto& row : minv)
                for (const auto& x : row)
                    if (x.get_den() != 1) return false;
        } catch (const validation_error&) {
            return false;
        }
        // all ray pairs must map exactly
        for (size_t i = 0; i < ra.size(); ++i) {
            Vec img(rank, 0);
            for (int r = 0; r < rank; ++r) img[r] = dot(m[r], ra[i]);
            if (img != rb[assign[i]]) return false;
        }
        result = std::move(m);
        return true;
    }

    bool rec(size_t i) {
        if (++visited > cap) throw search_cap_error("instance too large");
        if (i == ra.size()) return full_check();
        for (size_t j = 0; j < rb.size(); ++j) {
            if (used[j]) continue;
            used[j] = 1;
            assign[i] = static_cast<int>(j);
            if (rec(i + 1)) return true;
            used[j] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<Mat> find_lattice_isomorphism(const Cone& a, const Cone& b, long matching_cap) {
    if (a.ambient_rank() != b.ambient_rank())
        throw validation_error("find_lattice_isomorphism: rank mismatch");
    int rank = a.ambient_rank();
    Mat ra = rays(a), rb = rays(b);
    if (ra.size() != rb.size()) return std::nullopt;
    if (rank == 0) return Mat{};
    if (ra.empty()) return std::nullopt;  // zero cone in positive rank: no ray span
    if (rank_of(ra) != rank || rank_of(rb) != rank) return std::nullopt;
    IsoSearch s{ra, rb, rank, matching_cap};
    s.used.assign(rb.size(), 0);
    s.assign.assign(ra.size(), -1);
    if (s.rec(0)) return s.result;
    return std::nullopt;
}

Mat lattice_points_box(const Cone& c, const Vec& height, const Int& h_max) {
    int n = c.ambient_rank();
    if (!c.is_pointed()) throw validation_error("unbounded slice: cone contains a line");
    for (const auto& r : c.extreme_rays())
        if (dot(height, r) <= 0) throw validation_error("unbounded slice: height not positive on a ray");
    if (h_max < 0) return {};
    // bounding box from the polytope conv(0, (h_max/h(r)) r)
    std::vector<Int> lo(n, 0), hi(n, 0);
    for (const auto& r : c.extreme_rays()) {
        Int hr = dot(height, r);
        for (int j = 0; j < n; ++j) {
            Int f, cdiv;
            Int num = h_max * r[j];
            mpz_fdiv_q(f.get_mpz_t(), num.get_mpz_t(), hr.get_mpz_t());
            mpz_cdiv_q(cdiv.get_mpz_t(), num.get_mpz_t(), hr.get_mpz_t());
            if (f < lo[j]) lo[j] = f;
            if (cdiv > hi[j]) hi[j] = cdiv;
        }
    }
    Int cells = 1;
    for (int j = 0; j < n; ++j) cells *= hi[j] - lo[j] + 1;
    if (cells > 20000000) throw search_cap_error("instance too large");

    Mat out;
    Vec x = lo;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    while (true) {
        if (dot(height, x) <= h_max && c.contains(x)) out.push_back(x);
        int j = n - 1;
        while (j >= 0) {
            if (x[j] < hi[j]) {
                ++x[j];
                for (int k = j + 1; k < n; ++k) x[k] = lo[k];
                break;
            }
            --j;
        }
        if (j < 0) break;
    }
    return out;
}

}  // namespace logdegen
