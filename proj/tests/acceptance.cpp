// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 8 carries its own straight-line expansion of the
// degeneration sum that shares no graph or multiplicity code with the
// library.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>

#include "logdegen/io.hpp"
#include "logdegen/verify.hpp"

#include "fixtures.hpp"

using namespace logdegen;
using logdegen::testing::make_fiber_target;
using logdegen::testing::make_t2;
using logdegen::testing::make_t2_odd_d;

namespace {

int failures = 0;

void criterion(int num, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << "criterion " << num << " (" << name << "): " << (ok ? "PASS" : "FAIL");
    if (!ok && !detail.empty()) std::cout << " — " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// Straight-line expansion of the degeneration sum for the two-interval
// target (unit pushforwards, contact degree = total class degree per side,
// point-like divisor cohomology, no markings).
//
// The sum over edge-ordered graphs up to isomorphism with coefficient
// prod(w)/|E|! equals, by orbit-stabilizer over vertex labelings and edge
// sequences, the sum over vertex-labeled graphs with a chosen edge sequence
// of prod(w) * term / (nv! * ne!).
namespace straight {

struct Edge {
    int a, b;
    long w;
    auto operator<=>(const Edge&) const = default;
};

Rat expand(int g, long p, long q, bool multiplicative) {
    Rat total = 0;
    for (int nv1 = 0; nv1 <= p + 1; ++nv1) {
        for (int nv2 = 0; nv2 <= q + 1; ++nv2) {
            int nv = nv1 + nv2;
            if (nv < 1 || nv > 8) continue;
            long dmin = nv >= 2 ? 1 : 0;
            // compositions of p into nv1 parts >= dmin, then q into nv2 parts
            std::vector<long> deg(nv, 0);
            std::function<void()> after_degrees = [&]() {
                {
                    // genera summing to at most g
                    std::vector<int> gen(nv, 0);
                    std::function<void(int, int)> grec = [&](int v, int used) {
                        if (v == nv) {
                            int ne = nv - 1 + g - used;
                            if (ne < 0) return;
                            if (nv == 1 && ne != 0) return;  // no loops in a bipartite graph
                            // edge multisets: nondecreasing sequences of
                            // (a, b, w) whose weight sums match the degrees
                            std::vector<long> rem(deg);
                            std::vector<Edge> edges;
                            std::function<void(Edge, int)> erec = [&](Edge from, int left_e) {
                                if (left_e == 0) {
                                    for (long r : rem)
                                        if (r != 0) return;
                                    // stability at degree-zero vertices
                                    for (int v2 = 0; v2 < nv; ++v2) {
                                        if (deg[v2] != 0) continue;
                                        int val = 0;
                                        for (const auto& e : edges)
                                            if (e.a == v2 || e.b == v2) ++val;
                                        if (2 * gen[v2] - 2 + val <= 0) return;
                                    }
                                    // connectivity
                                    std::vector<int> root(nv);
                                    std::iota(root.begin(), root.end(), 0);
                                    std::function<int(int)> find = [&](int x) {
                                        return root[x] == x ? x : root[x] = find(root[x]);
                                    };
                                    for (const auto& e : edges) root[find(e.a)] = find(e.b);
                                    for (int v2 = 0; v2 < nv; ++v2)
                                        if (find(v2) != find(0)) return;
                                    // sequence count ne! / prod(mult!)
                                    Int seqs = factorial(ne);
                                    for (size_t i2 = 0; i2 < edges.size();) {
                                        size_t j2 = i2;
                                        while (j2 < edges.size() && edges[j2] == edges[i2]) ++j2;
                                        seqs /= factorial(static_cast<int>(j2 - i2));
                                        i2 = j2;
                                    }
                                    Rat prod_w = 1, term = 1;
                                    for (const auto& e : edges) {
                                        prod_w *= Rat(e.w);
                                        if (multiplicative) term *= Rat(e.w) * Rat(e.w);
                                    }
                                    // labels fix the side split, so the
                                    // orbit count divides by nv1! nv2! ne!
                                    Rat c = Rat(seqs) * prod_w * term /
                                            (Rat(factorial(nv1)) * Rat(factorial(nv2)) *
                                             Rat(factorial(ne)));
                                    c.canonicalize();
                                    total += c;
                                    return;
                                }
                                for (int a = from.a; a < nv1; ++a) {
                                    for (int b = a == from.a ? from.b : nv1; b < nv; ++b) {
                                        long wlo = (a == from.a && b == from.b) ? from.w : 1;
                                        long cap = std::min(rem[a], rem[b]);
                                        for (long w = wlo; w <= cap; ++w) {
                                            rem[a] -= w;
                                            rem[b] -= w;
                                            edges.push_back({a, b, w});
                                            erec({a, b, w}, left_e - 1);
                                            edges.pop_back();
                                            rem[a] += w;
                                            rem[b] += w;
                                        }
                                    }
                                }
                            };
                            erec({0, nv1, 1}, ne);
                            return;
                        }
                        for (int x = 0; used + x <= g; ++x) {
                            gen[v] = x;
                            grec(v + 1, used + x);
                        }
                    };
                    grec(0, 0);
                    return;
                }
            };
            // phase 1 fills side-1 degrees, phase 2 side-2 degrees
            std::function<void(int, int, long)> drec = [&](int phase, int i, long left) {
                int stop = phase == 1 ? nv1 : nv;
                if (i == stop) {
                    if (left != 0) return;
                    if (phase == 1)
                        drec(2, nv1, q);
                    else
                        after_degrees();
                    return;
                }
                for (long d = dmin; d <= left; ++d) {
                    deg[i] = d;
                    drec(phase, i + 1, left - d);
                    deg[i] = 0;
                }
            };
            drec(1, 0, p);
        }
    }
    total.canonicalize();
    return total;
}

}  // namespace straight

std::string run_cli(const std::string& args, const std::string& outfile) {
    std::string cmd = std::string(CLI_PATH) + " " + args + " > " + outfile + " 2>&1";
    std::system(cmd.c_str());
    std::ifstream in(outfile, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main() {
    unsigned long long seed = 20260823;

    // 1: enumeration against the independent brute-force oracle
    {
        auto start = std::chrono::steady_clock::now();
        VerifyReport rep = run_suite("enumeration", seed, 20);
        double secs = seconds_since(start);
        criterion(1, "enumeration oracle, 20 random targets", rep.passed && secs < 60.0,
                  rep.passed ? "too slow" : rep.text);
    }

    // 2: |orderings| x |Aut| = |E|! on every enumerated graph
    {
        bool ok = run_suite("ordering", seed, 100).passed;
        TargetModel t = make_t2();
        for (long p = 0; p <= 3 && ok; ++p)
            for (int g = 0; g <= 1 && ok; ++g)
                for (const auto& graph : enumerate_graphs(t, g, 0, {p, p}))
                    ok = ok && Int(static_cast<long>(edge_orderings(graph).size())) *
                                       automorphism_count(graph) ==
                                   factorial(static_cast<int>(graph.edges.size()));
        criterion(2, "ordering identity", ok);
    }

    // 3: multiplicity formulas on 100 random weight multisets
    criterion(3, "multiplicity formulas, 100 multisets",
              run_suite("multiplicity", seed, 100).passed);

    // 4: bipartition of splitting rays on 200 random curve graphs
    criterion(4, "bipartition of splitting rays, 200 curve graphs",
              run_suite("bipartition", seed, 200).passed);

    // 5: split-facet witnesses on >= 50 instances
    {
        auto start = std::chrono::steady_clock::now();
        VerifyReport rep = run_suite("split-facet", seed, 50);
        double secs = seconds_since(start);
        criterion(5, "split-facet witnesses, 50 instances", rep.passed && secs < 120.0,
                  rep.passed ? "too slow" : rep.text);
    }

    // 6: glue/split round trips on >= 50 matched half pairs
    criterion(6, "glue/split round trip, 50 pairs", run_suite("glue-split", seed, 50).passed);

    // 7: koszul signs on 500 random words
    {
        bool ok = run_suite("koszul", seed, 500).passed;
        std::vector<GradedSymbol> evens{{1, 2}, {2, 0}, {3, 4}};
        std::vector<GradedSymbol> shuffled{{3, 4}, {1, 2}, {2, 0}};
        ok = ok && koszul_sign(evens, shuffled) == 1;
        criterion(7, "koszul signs, 500 words", ok);
    }

    // 8: evaluator against the straight-line expansion
    {
        TargetModel t = make_t2();
        ConstantProvider ones{Rat(1)};
        bool anchored = evaluate(t, 0, 0, {1, 1}, {}, ones) == Rat(1) &&
                        straight::expand(0, 1, 1, false) == Rat(1);
        bool ok = anchored;
        std::string detail;
        for (long p = 0; p <= 3 && ok; ++p) {
            for (long q = 0; q <= 3 && ok; ++q) {
                for (int g = 0; g <= 1 && ok; ++g) {
                    Rat lib_c = evaluate(t, g, 0, {p, q}, {}, ConstantProvider{Rat(1)});
                    Rat lib_m = evaluate(t, g, 0, {p, q}, {}, MultiplicativeProvider{});
                    Rat ora_c = straight::expand(g, p, q, false);
                    Rat ora_m = straight::expand(g, p, q, true);
                    if (lib_c != ora_c || lib_m != ora_m) {
                        ok = false;
                        detail = "mismatch at g=" + std::to_string(g) + " beta=(" +
                                 std::to_string(p) + "," + std::to_string(q) + "): " +
                                 rat_to_string(lib_c) + " vs " + rat_to_string(ora_c) + ", " +
                                 rat_to_string(lib_m) + " vs " + rat_to_string(ora_m);
                    }
                }
            }
        }
        criterion(8, "formula evaluator vs straight-line expansion",
                  ok, anchored ? detail : "anchored value is not 1");
    }

    // 9: one-vertex graphs carry coefficient exactly 1
    {
        TargetModel t = make_fiber_target();
        Rat c(7, 3);
        ConstantProvider provider{c};
        auto graphs = enumerate_graphs(t, 2, 0, {0, 1});
        bool ok = graphs.size() == 2;
        for (const auto& graph : graphs) {
            ok = ok && graph.vertices.size() == 1;
            for (const auto& og : edge_orderings(graph)) {
                ok = ok && multiplicity_data(og).numeric_coeff == Rat(1);
                ok = ok && evaluate_graph_term(t, og, {}, provider) == c;
            }
        }
        ok = ok && evaluate(t, 2, 0, {0, 1}, {}, provider) == 2 * c;
        criterion(9, "one-vertex convention", ok);
    }

    // 10: invariance under 20 random changes of divisor-cohomology basis
    {
        TargetModel t = make_t2_odd_d();
        QVec fd{Rat(2), Rat(3)};
        FunctionalProvider f({Rat(1)}, {Rat(1)}, fd);
        Rat ref0 = evaluate(t, 0, 0, {2, 2}, {}, f);
        Rat ref1 = evaluate(t, 1, 0, {2, 2}, {}, f);
        Rng rng(seed);
        bool ok = true;
        int done = 0;
        while (done < 20 && ok) {
            QMat m(2, QVec(2));
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    m[i][j] = Rat(static_cast<long>(rng() % 7) - 3);
            if (m[0][0] * m[1][1] - m[0][1] * m[1][0] == 0) continue;
            ++done;
            TargetModel tb = t;
            QMat pm(2, QVec(2, Rat(0)));
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    for (int k = 0; k < 2; ++k)
                        for (int l = 0; l < 2; ++l)
                            pm[i][j] += m[k][i] * t.d_cohomology.pairing[k][l] * m[l][j];
            for (auto& row : pm)
                for (auto& x : row) x.canonicalize();
            tb.d_cohomology.pairing = pm;
            tb.validate();
            QVec fdb{fd[0] * m[0][0] + fd[1] * m[1][0], fd[0] * m[0][1] + fd[1] * m[1][1]};
            FunctionalProvider fb({Rat(1)}, {Rat(1)}, fdb);
            ok = evaluate(tb, 0, 0, {2, 2}, {}, fb) == ref0 &&
                 evaluate(tb, 1, 0, {2, 2}, {}, fb) == ref1;
        }
        criterion(10, "basis independence, 20 basis changes", ok);
    }

    // 11: byte-identical CLI output across repeated runs of every subcommand
    {
        std::string data = DATA_DIR;
        std::vector<std::string> commands = {
            "enumerate --target " + data + "/t2_target.json --genus 0 --markings 0 "
                "--beta 2,2 --format records",
            "enumerate --target " + data + "/t2_target.json --genus 1 --beta 2,2",
            "split " + data + "/e3_curve.json --format records",
            "split " + data + "/e1_curve.json",
            "glue " + data + "/half1.json " + data + "/half2.json --format records",
            "evaluate --target " + data + "/t2_target.json --table " + data +
                "/t2_table.json --genus 0 --markings 0 --beta 1,1 --format records",
            "verify --suite koszul --seed 7 --size 25",
            "verify --suite multiplicity --seed 7 --size 25",
        };
        bool ok = true;
        std::string detail;
        for (const auto& cmd : commands) {
            std::string a = run_cli(cmd, "acceptance_cli_a.txt");
            std::string b = run_cli(cmd, "acceptance_cli_b.txt");
            if (a.empty() || a != b) {
                ok = false;
                detail = "non-deterministic or empty output for: " + cmd;
                break;
            }
        }
        std::remove("acceptance_cli_a.txt");
        std::remove("acceptance_cli_b.txt");
        criterion(11, "CLI determinism", ok, detail);
    }

    if (failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
