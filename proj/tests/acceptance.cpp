// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Expected values are written out by hand or come from oracle.hpp; the
// library is only asked for the quantity under test.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "localhom/builtins.hpp"
#include "localhom/homology.hpp"
#include "localhom/io.hpp"
#include "localhom/linalg.hpp"
#include "localhom/mv.hpp"
#include "localhom/probe.hpp"
#include "oracle.hpp"

using namespace localhom;

namespace {

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
};

const HomologyGroup kZero{};
HomologyGroup free_of(std::size_t r) { return {r, {}}; }
HomologyGroup with_torsion(std::size_t r, int t) { return {r, {Integer(t)}}; }

std::string text(const HomologySummary& h, int lo, int hi) {
    std::string s = "(";
    for (int k = lo; k <= hi; ++k) s += (k > lo ? ", " : "") + h.at(k).to_string();
    return s + ")";
}

bool degreewise(const HomologySummary& h, const std::vector<HomologyGroup>& want, int from = 0) {
    for (int k = from - 1; k <= from + static_cast<int>(want.size()) + 1; ++k) {
        const auto i = k - from;
        const auto& expected = (i >= 0 && i < static_cast<int>(want.size())) ? want[static_cast<std::size_t>(i)] : kZero;
        if (!(h.at(k) == expected)) return false;
    }
    return true;
}

oracle::Facets int_facets(const SimplicialComplex& k) {
    oracle::Facets out;
    for (const auto& f : k.facets()) {
        std::vector<int> row;
        for (auto v : f.vertices()) row.push_back(static_cast<int>(v));
        out.push_back(row);
    }
    return out;
}

// Vertex sets of size m with no edge between members, enumerated from the
// edge list directly.
std::vector<std::vector<std::string>> separated_sets(const SimplicialComplex& k, std::size_t m) {
    const auto labels = k.vertex_labels();
    auto edge = [&](const std::string& a, const std::string& b) {
        for (const auto& f : canonical_facets(k))
            if (std::count(f.begin(), f.end(), a) && std::count(f.begin(), f.end(), b)) return true;
        return false;
    };
    std::vector<std::vector<std::string>> out;
    std::vector<std::string> cur;
    std::function<void(std::size_t)> go = [&](std::size_t start) {
        if (cur.size() == m) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < labels.size(); ++i) {
            if (std::any_of(cur.begin(), cur.end(), [&](const std::string& c) { return edge(c, labels[i]); }))
                continue;
            cur.push_back(labels[i]);
            go(i + 1);
            cur.pop_back();
        }
    };
    go(0);
    return out;
}

SimplicialComplex icosahedron() {
    return parse_complex(
        "0 1 2\n0 2 3\n0 3 4\n0 4 5\n0 1 5\n1 2 6\n2 3 7\n3 4 8\n4 5 9\n1 5 10\n"
        "2 6 7\n3 7 8\n4 8 9\n5 9 10\n1 6 10\n6 7 11\n7 8 11\n8 9 11\n9 10 11\n6 10 11\n");
}

Outcome criterion1() {
    Outcome o;
    struct Case {
        std::string name;
        std::vector<HomologyGroup> want;
    };
    std::vector<Case> cases;
    for (int n = 1; n <= 4; ++n) {
        std::vector<HomologyGroup> want(static_cast<std::size_t>(n + 1));
        want.front() = want.back() = free_of(1);
        cases.push_back({"sphere" + std::to_string(n), want});
    }
    cases.push_back({"torus7", {free_of(1), free_of(2), free_of(1)}});
    cases.push_back({"rp2_6", {free_of(1), with_torsion(0, 2), kZero}});
    cases.push_back({"klein8", {free_of(1), with_torsion(1, 2), kZero}});
    for (const auto& c : cases) {
        const auto k = builtin(c.name);
        const auto h = homology(k);
        o.require(degreewise(h, c.want), c.name + " gave " + text(h, 0, static_cast<int>(c.want.size()) - 1));
        // Rank oracle over F_p for a large prime, and Euler characteristic from the f-vector.
        const auto betti = oracle::betti_mod(int_facets(k), oracle::kLargePrime);
        long long chi = 0;
        for (std::size_t d = 0; d < betti.size(); ++d) {
            o.require(betti[d] == c.want[d].free_rank, c.name + ": oracle Betti number differs in degree " + std::to_string(d));
            chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(betti[d]);
        }
        o.require(chi == k.euler_characteristic(), c.name + ": oracle Euler characteristic differs");
        // Z/2 torsion in H_1 raises the F_2 Betti numbers of H_1 and H_2 by one.
        const auto b2 = oracle::betti_mod(int_facets(k), 2);
        auto even = [&](std::size_t d) -> std::size_t {
            if (d >= c.want.size()) return 0;
            std::size_t n = 0;
            for (const auto& t : c.want[d].torsion) n += t % 2 == 0;
            return n;
        };
        for (std::size_t d = 0; d < b2.size(); ++d)
            o.require(b2[d] == betti[d] + even(d) + (d > 0 ? even(d - 1) : 0),
                      c.name + ": F_2 Betti number disagrees with the torsion in degree " + std::to_string(d));
    }
    return o;
}

Outcome criterion2() {
    Outcome o;
    for (const std::string name : {"octahedron", "torus7", "rp2_6"}) {
        const auto m = builtin(name);
        const auto v = m.vertex_labels().front();
        const auto w = wedge(m, v, m, v);
        const auto local = local_homology(w.complex, w.wedge_vertex);
        o.require(degreewise(local, {kZero, kZero, free_of(2)}),
                  name + " v " + name + ": wedge point local homology " + text(local, 0, 3) +
                      ", expected (0, 0, Z^2, 0)");
        const auto r = obstruction_report(w.complex);
        o.require(r.overall == Overall::not_a_manifold && r.witness_vertex == w.wedge_vertex,
                  name + " v " + name + ": " + verdict_line(r));
    }
    return o;
}

Outcome criterion3() {
    Outcome o;
    std::size_t checked[4] = {0, 0, 0, 0};
    for (const auto& [name, k] : std::vector<std::pair<std::string, SimplicialComplex>>{
             {"octahedron", builtin("octahedron")}, {"sphere3", builtin("sphere3")}, {"icosahedron", icosahedron()}}) {
        const int n = k.dimension();
        for (std::size_t m = 1; m <= 3; ++m)
            for (const auto& s : separated_sets(k, m)) {
                ++checked[m];
                const auto h = local_homology_multi(k, s);
                std::vector<HomologyGroup> want(static_cast<std::size_t>(n + 1));
                want.back() = free_of(m);
                o.require(degreewise(h, want), name + " m=" + std::to_string(m) + ": " + text(h, 0, n));
            }
    }
    for (std::size_t m = 1; m <= 3; ++m)
        o.require(checked[m] > 0, "no separated vertex set of size " + std::to_string(m));
    o.notes.push_back("sets checked m=1,2,3: " + std::to_string(checked[1]) + ", " + std::to_string(checked[2]) +
                      ", " + std::to_string(checked[3]));
    return o;
}

Outcome criterion4() {
    Outcome o;
    const auto c = cone(builtin("rp2_6"), "apex");
    const auto local = local_homology(c, "apex");
    o.require(local.at(2) == with_torsion(0, 2), "apex H_2 = " + local.at(2).to_string());
    o.require(local.at(3).is_zero(), "apex H_3 = " + local.at(3).to_string());
    const auto r = obstruction_report(c);
    o.require(r.overall == Overall::not_a_manifold && r.witness_vertex == "apex", verdict_line(r));
    return o;
}

Outcome criterion5() {
    Outcome o;
    for (const auto& name : builtin_surfaces()) {
        const auto m = builtin(name);
        const auto p = prism_product(m).ambient();
        for (const auto& x : m.vertex_labels()) {
            const auto cyl = local_homology(p, bottom_label(x));
            const auto base = local_homology(m, x);
            bool same = true;
            for (int d = -1; d <= 4; ++d) same = same && cyl.at(d) == base.at(d);
            o.require(same, name + " at (" + x + ",0): " + text(cyl, 0, 3) + " vs base " + text(base, 0, 3));
        }
    }
    return o;
}

Outcome criterion6() {
    Outcome o;
    for (const auto& name : builtin_names()) {
        const auto m = builtin(name);
        const auto local = local_homology(cone(m, "apex"), "apex");
        o.require(local == apex_local_homology_formula(m), name + ": apex " + text(local, 0, 5));
        // Oracle: free ranks are the reduced Betti numbers of M shifted up by one.
        auto betti = oracle::betti_mod(int_facets(m), oracle::kLargePrime);
        if (!betti.empty()) betti[0] -= 1;
        for (std::size_t d = 0; d < betti.size(); ++d)
            o.require(local.at(static_cast<int>(d) + 1).free_rank == betti[d],
                      name + ": apex rank in degree " + std::to_string(d + 1));
    }
    return o;
}

Outcome criterion7() {
    Outcome o;
    std::vector<SimplicialComplex> ks;
    for (const auto& n : builtin_names()) ks.push_back(builtin(n));
    for (const auto& n : builtin_surfaces()) {
        const auto m = builtin(n);
        ks.push_back(cone(m, "apex"));
        ks.push_back(wedge(m, "1", m, "2").complex);
    }
    ks.push_back(prism_product(builtin("torus7")).ambient());
    ks.push_back(disjoint_union(builtin("interval"), builtin("sphere2")));
    ks.push_back(parse_complex("a b c\na d e\nf"));
    std::size_t vertices = 0;
    for (const auto& k : ks)
        for (const auto& v : k.vertex_labels()) {
            ++vertices;
            const auto a = local_homology(k, v);
            const auto b = local_homology_via_link(k, v);
            o.require(a == b, "mismatch at " + v + ": " + text(a, 0, 4) + " vs " + text(b, 0, 4));
        }
    o.require(vertices >= 50, "only " + std::to_string(vertices) + " vertices");
    o.notes.push_back(std::to_string(vertices) + " vertices");
    return o;
}

Outcome criterion8() {
    Outcome o;
    auto all_exact = [&](const std::string& name, const MvReport& r) {
        for (const auto& node : r.nodes) o.require(node.exact(), name + ": not exact at " + node.name);
    };
    const auto k1 = parse_complex("1 2 3\n2 3 4");
    all_exact("two triangles", mv_exactness_check(MvDecomposition(k1, parse_complex("1 2 3"), parse_complex("2 3 4")), 3));
    const auto oct = builtin("octahedron");
    all_exact("hemispheres", mv_exactness_check(MvDecomposition(oct, star(oct, "1"), star(oct, "6")), 3));

    const auto w = wedge(oct, "1", oct, "1");
    std::string left, right;
    for (const auto& f : canonical_facets(w.complex)) {
        std::string line;
        for (const auto& l : f) line += l + " ";
        (line.find("L.") != std::string::npos ? left : right) += line + "\n";
    }
    const auto a = parse_complex(left), b = parse_complex(right);
    const auto r = mv_exactness_check(MvDecomposition(w.complex, a, b, deleted(a, w.wedge_vertex), deleted(b, w.wedge_vertex)), 3);
    all_exact("wedge", r);
    const auto& beta = r.to_union[2];
    o.require(beta.source_dimension() == 2 && beta.target_dimension() == 2 && beta.rank() == 2,
              "wedge: degree-2 map is not a rank-2 isomorphism");
    return o;
}

Outcome criterion9() {
    Outcome o;
    std::mt19937 gen(20221);
    std::uniform_int_distribution<int> dim(1, 6), entry(-5, 5);
    auto to_ll = [](const IntegerMatrix& m) {
        std::vector<std::vector<long long>> out(m.rows(), std::vector<long long>(m.cols()));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).convert_to<long long>();
        return out;
    };
    std::size_t bad = 0;
    for (int s = 0; s < 1000; ++s) {
        IntegerMatrix a(static_cast<std::size_t>(dim(gen)), static_cast<std::size_t>(dim(gen)));
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = entry(gen);
        const auto snf = smith_normal_form(a);
        bool ok = multiply(multiply(snf.u, a), snf.v) == snf.d;
        ok = ok && std::abs(oracle::laplace_det(to_ll(snf.u))) == 1 && std::abs(oracle::laplace_det(to_ll(snf.v))) == 1;
        for (std::size_t i = 0; i < snf.d.rows(); ++i)
            for (std::size_t j = 0; j < snf.d.cols(); ++j)
                if (i != j && snf.d(i, j) != 0) ok = false;
        const auto diag = snf.diagonal();
        for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
            if (diag[i] < 0 || (diag[i] == 0 && diag[i + 1] != 0)) ok = false;
            if (diag[i] != 0 && diag[i + 1] % diag[i] != 0) ok = false;
        }
        if (!diag.empty() && diag.back() < 0) ok = false;
        ok = ok && smith_normal_form(transpose(a)).diagonal() == diag;
        ok = ok && diag[0] == oracle::gcd_of_minors(to_ll(a), 1);
        if (!ok) ++bad;
    }
    o.require(bad == 0, std::to_string(bad) + " of 1000 matrices failed");
    return o;
}

Outcome criterion10() {
    Outcome o;
    const auto r = obstruction_report(cone(builtin("sphere2"), "apex"));
    o.require(r.overall == Overall::consistent_with_n_manifold_with_boundary && r.inferred_dimension == 3,
              "cone(sphere2): " + verdict_line(r));
    const auto e = builtin("interval");
    for (const auto& v : e.vertex_labels())
        o.require(vertex_verdict(e, v).category == VertexCategory::boundary_like, "endpoint " + v + " not boundary_like");
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"builtin homology", criterion1},
        {"wedge point local homology and verdict", criterion2},
        {"separated vertex sets give Z^m on top", criterion3},
        {"cone on RP^2 apex", criterion4},
        {"bottom cylinder vertex versus base point", criterion5},
        {"apex formula", criterion6},
        {"deleted star versus link, >= 50 vertices", criterion7},
        {"Mayer-Vietoris exactness", criterion8},
        {"Smith normal form on 1000 random matrices", criterion9},
        {"negative controls", criterion10},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.notes.push_back(std::string("exception: ") + e.what());
        }
        std::cout << (o.ok ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << criteria[i].first << '\n';
        for (const auto& n : o.notes) std::cout << "         " << n << '\n';
        failed += !o.ok;
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
