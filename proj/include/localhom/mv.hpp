#pragma once

// Rational homology of pairs, inclusion-induced maps, and an exactness
// checker for the relative Mayer-Vietoris sequence.

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "localhom/complex.hpp"
#include "localhom/error.hpp"
#include "localhom/homology.hpp"
#include "localhom/linalg.hpp"

namespace localhom {

/// A chosen basis of H_k(C; Q), given by cycle representatives.
///
/// Representatives are kernel vectors of d_k (in the deterministic order of
/// kernel_basis_over_rationals) not already spanned by boundaries and
/// earlier representatives.
class RationalHomologyBasis {
public:
    RationalHomologyBasis(const ChainComplex& c, int degree) : degree_(degree), chain_dim_(c.rank(degree)) {
        const auto d_out = to_rational(c.boundary(degree));
        const auto d_in = to_rational(c.boundary(degree + 1));
        std::vector<RationalVector> cycles;
        if (degree == 0 || d_out.rows() == 0) {
            for (std::size_t j = 0; j < chain_dim_; ++j) {
                RationalVector e(chain_dim_);
                e[j] = 1;
                cycles.push_back(std::move(e));
            }
        } else {
            cycles = kernel_basis_over_rationals(d_out);
        }

        // Leftmost independent columns of [boundaries | cycles].
        RationalMatrix stacked(chain_dim_, d_in.cols() + cycles.size());
        for (std::size_t i = 0; i < chain_dim_; ++i) {
            for (std::size_t j = 0; j < d_in.cols(); ++j) stacked(i, j) = d_in(i, j);
            for (std::size_t j = 0; j < cycles.size(); ++j) stacked(i, d_in.cols() + j) = cycles[j][i];
        }
        auto reduced = stacked;
        const auto pivots = row_reduce(reduced);
        std::vector<std::size_t> chosen;
        for (auto p : pivots) {
            if (p < d_in.cols())
                ++boundary_rank_;
            else
                representatives_.push_back(cycles[p - d_in.cols()]);
            chosen.push_back(p);
        }
        system_ = RationalMatrix(chain_dim_, chosen.size());
        for (std::size_t i = 0; i < chain_dim_; ++i)
            for (std::size_t j = 0; j < chosen.size(); ++j) system_(i, j) = stacked(i, chosen[j]);
    }

    int degree() const noexcept { return degree_; }
    std::size_t dimension() const noexcept { return representatives_.size(); }
    std::size_t chain_dimension() const noexcept { return chain_dim_; }
    const std::vector<RationalVector>& representatives() const noexcept { return representatives_; }

    /// Coordinates of the class of a cycle in the representative basis.
    RationalVector coordinates(const RationalVector& cycle) const {
        if (cycle.size() != chain_dim_) throw DimensionMismatch("chain has the wrong length");
        if (system_.cols() == 0) {
            for (const auto& x : cycle)
                if (x != 0) throw ConsistencyError("chain is not a cycle");
            return {};
        }
        auto x = solve_full_column_rank(system_, cycle);
        if (!x) throw ConsistencyError("chain is not a cycle in degree " + std::to_string(degree_));
        return RationalVector(x->begin() + static_cast<std::ptrdiff_t>(boundary_rank_), x->end());
    }

private:
    int degree_;
    std::size_t chain_dim_;
    std::size_t boundary_rank_ = 0;
    std::vector<RationalVector> representatives_;
    RationalMatrix system_;
};

/// Map on rational homology in one degree; columns index the source basis.
struct RationalMap {
    int degree = 0;
    RationalMatrix matrix;

    std::size_t rank() const { return rank_over_rationals(matrix); }
    std::size_t source_dimension() const { return matrix.cols(); }
    std::size_t target_dimension() const { return matrix.rows(); }
};

namespace detail {

// Pushes a degree-k chain of `from` into `to` simplex by simplex; simplices
// absent from `to` (they lie in its subcomplex) are dropped.
inline RationalVector push_chain(const ChainComplex& from, const ChainComplex& to, int k,
                                 const RationalVector& chain) {
    RationalVector out(to.rank(k));
    for (std::size_t j = 0; j < chain.size(); ++j) {
        if (chain[j] == 0) continue;
        if (auto idx = to.index_of(k, from.bases[static_cast<std::size_t>(k)][j])) out[*idx] += chain[j];
    }
    return out;
}

inline RationalMatrix map_matrix(const ChainComplex& from, const RationalHomologyBasis& hs,
                                 const ChainComplex& to, const RationalHomologyBasis& ht) {
    RationalMatrix m(ht.dimension(), hs.dimension());
    for (std::size_t j = 0; j < hs.dimension(); ++j) {
        const auto image = push_chain(from, to, hs.degree(), hs.representatives()[j]);
        const auto coords = ht.coordinates(image);
        for (std::size_t i = 0; i < coords.size(); ++i) m(i, j) = coords[i];
    }
    return m;
}

}  // namespace detail

/// Map induced on rational homology by the inclusion of pairs source -> target.
inline RationalMap induced_map(const SubcomplexPair& source, const SubcomplexPair& target,
                               int degree) {
    SimplicialComplex ambient, sub;
    try {
        ambient = rebase(target.ambient(), source.ambient());
        sub = rebase(target.ambient(), source.sub());
    } catch (const UnknownVertex& e) {
        throw PreconditionError(std::string("source pair does not include into target: ") + e.what());
    }
    ambient.for_each_simplex([&](const Simplex& s) {
        if (!target.ambient().contains(s))
            throw PreconditionError("source pair does not include into target: ambient simplex missing");
    });
    sub.for_each_simplex([&](const Simplex& s) {
        if (!target.sub().contains(s))
            throw PreconditionError("source pair does not include into target: subcomplex simplex missing");
    });
    const auto cs = relative_chain_complex(SubcomplexPair(ambient, sub));
    const auto ct = relative_chain_complex(target);
    RationalHomologyBasis hs(cs, degree), ht(ct, degree);
    return {degree, detail::map_matrix(cs, hs, ct, ht)};
}

/// K = A u B with C in A and D in B. The sequence of chain complexes
/// 0 -> C(A n B, C n D) -> C(A, C) + C(B, D) -> C(K, C u D) -> 0 is exact
/// when additionally C n B lies in D and D n A lies in C; the constructor
/// enforces that as well.
class MvDecomposition {
public:
    MvDecomposition(SimplicialComplex k, const SimplicialComplex& a, const SimplicialComplex& b,
                    const SimplicialComplex& c = {}, const SimplicialComplex& d = {})
        : k_(std::move(k)) {
        try {
            a_ = rebase(k_, a);
            b_ = rebase(k_, b);
            c_ = rebase(k_, c);
            d_ = rebase(k_, d);
        } catch (const UnknownVertex& e) {
            throw PreconditionError(std::string("decomposition refers to a vertex outside K: ") + e.what());
        }
        auto require_sub = [](const SimplicialComplex& small, const SimplicialComplex& big,
                              const char* what) {
            small.for_each_simplex([&](const Simplex& s) {
                if (!big.contains(s)) throw PreconditionError(std::string("decomposition: ") + what);
            });
        };
        require_sub(a_, k_, "A is not a subcomplex of K");
        require_sub(b_, k_, "B is not a subcomplex of K");
        require_sub(c_, a_, "C is not a subcomplex of A");
        require_sub(d_, b_, "D is not a subcomplex of B");
        k_.for_each_simplex([&](const Simplex& s) {
            if (!a_.contains(s) && !b_.contains(s))
                throw PreconditionError("decomposition: K is not the union of A and B");
        });
        require_sub(intersection(c_, b_), d_, "C n B is not contained in D");
        require_sub(intersection(d_, a_), c_, "D n A is not contained in C");
    }

    const SimplicialComplex& k() const noexcept { return k_; }
    const SimplicialComplex& a() const noexcept { return a_; }
    const SimplicialComplex& b() const noexcept { return b_; }
    const SimplicialComplex& c() const noexcept { return c_; }
    const SimplicialComplex& d() const noexcept { return d_; }

private:
    SimplicialComplex k_, a_, b_, c_, d_;
};

/// One group of the long exact sequence with the ranks meeting there.
struct MvNode {
    std::string name;  // "H_n(A n B, C n D)", "H_n(A, C) + H_n(B, D)", "H_n(K, C u D)"
    int degree = 0;
    std::size_t dimension = 0;
    std::size_t incoming_rank = 0;
    std::size_t outgoing_rank = 0;

    std::size_t kernel_dimension() const { return dimension - outgoing_rank; }
    bool exact() const { return incoming_rank == kernel_dimension(); }
};

struct MvReport {
    int max_degree = 0;
    std::vector<MvNode> nodes;  // descending degree, sequence order
    std::vector<RationalMap> to_sum;       // H_n(A n B, C n D) -> H_n(A, C) + H_n(B, D)
    std::vector<RationalMap> to_union;     // H_n(A, C) + H_n(B, D) -> H_n(K, C u D)
    std::vector<RationalMap> connecting;   // H_n(K, C u D) -> H_{n-1}(A n B, C n D)

    bool exact() const {
        for (const auto& n : nodes)
            if (!n.exact()) return false;
        return true;
    }
};

/// Builds all three maps of the sequence over Q in degrees 0..max_degree+1
/// and compares image and kernel ranks at every node of degree <= max_degree.
inline MvReport mv_exactness_check(const MvDecomposition& m, int max_degree) {
    if (max_degree < 0) throw PreconditionError("max degree must be non-negative");
    const auto& k = m.k();
    const auto ab = intersection(m.a(), m.b());
    const auto cd = intersection(m.c(), m.d());
    const auto y = union_of(m.c(), m.d());

    const auto c0 = relative_chain_complex(SubcomplexPair(ab, cd));
    const auto ca = relative_chain_complex(SubcomplexPair(m.a(), m.c()));
    const auto cb = relative_chain_complex(SubcomplexPair(m.b(), m.d()));
    const auto cx = relative_chain_complex(SubcomplexPair(k, y));

    const int top = max_degree + 1;
    std::vector<RationalHomologyBasis> h0, ha, hb, hx;
    for (int n = 0; n <= top; ++n) {
        h0.emplace_back(c0, n);
        ha.emplace_back(ca, n);
        hb.emplace_back(cb, n);
        hx.emplace_back(cx, n);
    }

    MvReport report;
    report.max_degree = max_degree;
    for (int n = 0; n <= top; ++n) {
        const auto i = static_cast<std::size_t>(n);
        const auto ia = detail::map_matrix(c0, h0[i], ca, ha[i]);
        const auto ib = detail::map_matrix(c0, h0[i], cb, hb[i]);
        RationalMatrix alpha(ia.rows() + ib.rows(), h0[i].dimension());
        for (std::size_t c = 0; c < alpha.cols(); ++c) {
            for (std::size_t r = 0; r < ia.rows(); ++r) alpha(r, c) = ia(r, c);
            for (std::size_t r = 0; r < ib.rows(); ++r) alpha(ia.rows() + r, c) = -ib(r, c);
        }
        report.to_sum.push_back({n, std::move(alpha)});

        const auto ja = detail::map_matrix(ca, ha[i], cx, hx[i]);
        const auto jb = detail::map_matrix(cb, hb[i], cx, hx[i]);
        RationalMatrix beta(hx[i].dimension(), ja.cols() + jb.cols());
        for (std::size_t r = 0; r < beta.rows(); ++r) {
            for (std::size_t c = 0; c < ja.cols(); ++c) beta(r, c) = ja(r, c);
            for (std::size_t c = 0; c < jb.cols(); ++c) beta(r, ja.cols() + c) = jb(r, c);
        }
        report.to_union.push_back({n, std::move(beta)});

        // Zig-zag: split a relative cycle z = a + b with a carried by A, then
        // take the class of d(a) modulo C, which lives on A n B.
        RationalMatrix delta(n > 0 ? h0[i - 1].dimension() : 0, hx[i].dimension());
        if (n > 0) {
            for (std::size_t j = 0; j < hx[i].dimension(); ++j) {
                const auto& z = hx[i].representatives()[j];
                std::map<Simplex, Rational> boundary_of_a;
                for (std::size_t s = 0; s < z.size(); ++s) {
                    if (z[s] == 0) continue;
                    const auto& simplex = cx.bases[i][s];
                    if (!m.a().contains(simplex)) continue;
                    for (std::size_t f = 0; f < simplex.size(); ++f) {
                        auto face = simplex.facet_without(f);
                        if (m.c().contains(face)) continue;
                        boundary_of_a[std::move(face)] += (f % 2 == 0 ? z[s] : Rational(-z[s]));
                    }
                }
                RationalVector image(c0.rank(n - 1));
                for (const auto& [face, coef] : boundary_of_a) {
                    if (coef == 0) continue;
                    const auto idx = c0.index_of(n - 1, face);
                    if (!idx) throw ConsistencyError("connecting map: boundary leaves A n B");
                    image[*idx] = coef;
                }
                const auto coords = h0[i - 1].coordinates(image);
                for (std::size_t r = 0; r < coords.size(); ++r) delta(r, j) = coords[r];
            }
        }
        report.connecting.push_back({n, std::move(delta)});
    }

    auto rank_of = [](const std::vector<RationalMap>& maps, int n) -> std::size_t {
        if (n < 0 || n >= static_cast<int>(maps.size())) return 0;
        return maps[static_cast<std::size_t>(n)].rank();
    };
    for (int n = max_degree; n >= 0; --n) {
        const auto i = static_cast<std::size_t>(n);
        const std::string deg = std::to_string(n);
        report.nodes.push_back({"H_" + deg + "(K, C u D)", n, hx[i].dimension(),
                                rank_of(report.to_union, n), rank_of(report.connecting, n)});
        report.nodes.push_back({"H_" + deg + "(A, C) + H_" + deg + "(B, D)", n,
                                ha[i].dimension() + hb[i].dimension(), rank_of(report.to_sum, n),
                                rank_of(report.to_union, n)});
        report.nodes.push_back({"H_" + deg + "(A n B, C n D)", n, h0[i].dimension(),
                                rank_of(report.connecting, n + 1), rank_of(report.to_sum, n)});
    }
    return report;
}

inline std::string render(const MvReport& r) {
    std::ostringstream os;
    for (const auto& n : r.nodes) {
        os << n.name << ": dim " << n.dimension << ", image in " << n.incoming_rank
           << ", kernel out " << n.kernel_dimension() << (n.exact() ? "  exact" : "  NOT EXACT")
           << '\n';
    }
    os << (r.exact() ? "EXACT" : "NOT EXACT") << '\n';
    return os.str();
}

}  // namespace localhom
