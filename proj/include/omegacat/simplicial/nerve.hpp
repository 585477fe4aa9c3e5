#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>

#include "omegacat/parity/oriental.hpp"
#include "omegacat/pic/realize.hpp"
#include "omegacat/simplicial/dold_kan.hpp"

namespace omegacat {

// An n-simplex: the full table of an omega-functor O(simplex n) -> A, indexed by oriental cell.
struct NerveSimplex {
    std::vector<int> cells;
    bool thin = false;
};

struct NerveLevel {
    int n = 0;
    std::vector<NerveSimplex> simplices;
    std::map<std::vector<int>, std::size_t> lookup;

    std::size_t size() const { return simplices.size(); }
    std::optional<std::size_t> find(const std::vector<int>& cells) const {
        auto it = lookup.find(cells);
        if (it == lookup.end()) return std::nullopt;
        return it->second;
    }
};

namespace detail {

// Every composable pair of the oriental, with its composite.
struct OrientalTriple {
    int level, x, y, z;
};

inline std::vector<OrientalTriple> composable_triples(const FiniteOmegaCat& o) {
    std::vector<OrientalTriple> out;
    const int n = static_cast<int>(o.size());
    for (int k = 0; k <= o.stabilization(); ++k)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (int z = o.compose(k, x, y); z >= 0 && x != y) out.push_back({k, x, y, z});
    return out;
}

inline bool is_functor_table(const FiniteOmegaCat& o, const FiniteOmegaCat& a, const std::vector<int>& F,
                             const std::vector<OrientalTriple>& triples) {
    const int levels = std::max(o.stabilization(), a.stabilization());
    for (std::size_t x = 0; x < F.size(); ++x)
        for (int k = 0; k <= levels; ++k) {
            if (F[static_cast<std::size_t>(o.s(k, static_cast<int>(x)))] != a.s(k, F[x])) return false;
            if (F[static_cast<std::size_t>(o.t(k, static_cast<int>(x)))] != a.t(k, F[x])) return false;
        }
    for (const auto& tr : triples)
        if (a.compose(tr.level, F[static_cast<std::size_t>(tr.x)], F[static_cast<std::size_t>(tr.y)]) != F[static_cast<std::size_t>(tr.z)])
            return false;
    return true;
}

}  // namespace detail

// All omega-functors O(simplex n) -> a. Atoms are assigned dimension by dimension with
// boundaries fixed by the lower skeleton; the generation plan fills in the remaining cells.
inline NerveLevel nerve_enumerate(const FiniteOmegaCat& a, int n, std::size_t limit = 1u << 20) {
    const CellCategory& o = oriental(n);
    if (!o.freely_generated) throw InternalInconsistency("oriental is not generated by its atoms");
    const FiniteOmegaCat& oc = *o.cat;
    const auto triples = detail::composable_triples(oc);

    // candidates[k][(s,t)] = elements of dimension <= k with the given (k-1)-boundary
    std::vector<std::map<std::pair<int, int>, std::vector<int>>> candidates(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k)
        for (int y : a.cells_of_level(k)) {
            std::pair<int, int> key = k == 0 ? std::pair{-1, -1} : std::pair{a.s(k - 1, y), a.t(k - 1, y)};
            candidates[static_cast<std::size_t>(k)][key].push_back(y);
        }

    NerveLevel out;
    out.n = n;
    std::vector<int> F(oc.size(), -1);
    const int top = top_cell(o);
    std::function<void(std::size_t)> extend = [&](std::size_t step) {
        if (step == o.plan.size()) {
            if (!detail::is_functor_table(oc, a, F, triples)) throw InternalInconsistency("plan extension is not a functor");
            if (out.simplices.size() >= limit) throw TooLarge("nerve level " + std::to_string(n) + " exceeds " + std::to_string(limit) + " simplices");
            out.lookup.emplace(F, out.simplices.size());
            out.simplices.push_back({F, a.dimension(F[static_cast<std::size_t>(top)]) < n});
            return;
        }
        const GenerationStep& g = o.plan[step];
        const auto cell = static_cast<std::size_t>(g.cell);
        if (g.atom_of < 0) {
            int z = a.compose(g.level, F[static_cast<std::size_t>(g.left)], F[static_cast<std::size_t>(g.right)]);
            if (z < 0) throw InternalInconsistency("functor image not composable");
            F[cell] = z;
            extend(step + 1);
            F[cell] = -1;
            return;
        }
        const int k = o.complex.dim(g.atom_of);
        std::pair<int, int> key{-1, -1};
        if (k > 0) {
            int s = F[static_cast<std::size_t>(oc.s(k - 1, g.cell))], t = F[static_cast<std::size_t>(oc.t(k - 1, g.cell))];
            if (s < 0 || t < 0) throw InternalInconsistency("atom boundary not yet assigned");
            key = {s, t};
        }
        auto it = candidates[static_cast<std::size_t>(k)].find(key);
        if (it == candidates[static_cast<std::size_t>(k)].end()) return;
        for (int y : it->second) {
            F[cell] = y;
            extend(step + 1);
        }
        F[cell] = -1;
    };
    extend(0);
    return out;
}

// Levels 0..n of the nerve with face and degeneracy index tables.
struct NerveSimplexSet {
    std::shared_ptr<const FiniteOmegaCat> cat;
    std::vector<NerveLevel> levels;
    std::vector<std::vector<std::vector<std::size_t>>> faces;         // faces[n-1][i][x]
    std::vector<std::vector<std::vector<std::size_t>>> degeneracies;  // degeneracies[n][i][x]

    int top() const { return static_cast<int>(levels.size()) - 1; }
    std::size_t face(int n, int i, std::size_t x) const { return faces[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(i)][x]; }
    std::size_t degeneracy(int n, int i, std::size_t x) const { return degeneracies[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)][x]; }
};

// F o O(alpha) for a simplex F of dimension n and monotone alpha : [m] -> [n].
inline std::vector<int> nerve_act(const std::vector<int>& F, const MonotoneMap& alpha, int n) {
    OmegaFunctor f = induced_map(alpha, n);
    std::vector<int> out;
    for (int x : f.map) out.push_back(F[static_cast<std::size_t>(x)]);
    return out;
}

inline NerveSimplexSet nerve_simplices(std::shared_ptr<const FiniteOmegaCat> a, int n) {
    NerveSimplexSet s;
    s.cat = a;
    for (int k = 0; k <= n; ++k) s.levels.push_back(nerve_enumerate(*a, k));
    auto locate = [&](int k, const std::vector<int>& cells) {
        auto idx = s.levels[static_cast<std::size_t>(k)].find(cells);
        if (!idx) throw InternalInconsistency("simplicial operator leaves the nerve at level " + std::to_string(k));
        return *idx;
    };
    for (int k = 1; k <= n; ++k) {
        s.faces.emplace_back();
        for (int i = 0; i <= k; ++i) {
            const MonotoneMap delta = coface_map(k, i);
            std::vector<std::size_t> tab;
            for (const auto& x : s.levels[static_cast<std::size_t>(k)].simplices) tab.push_back(locate(k - 1, nerve_act(x.cells, delta, k)));
            s.faces.back().push_back(std::move(tab));
        }
    }
    for (int k = 0; k < n; ++k) {
        s.degeneracies.emplace_back();
        for (int i = 0; i <= k; ++i) {
            const MonotoneMap sigma = codegeneracy_map(k, i);
            std::vector<std::size_t> tab;
            for (const auto& x : s.levels[static_cast<std::size_t>(k)].simplices) tab.push_back(locate(k + 1, nerve_act(x.cells, sigma, k)));
            s.degeneracies.back().push_back(std::move(tab));
        }
    }
    return s;
}

// The nerve of a Picard omega-category through Dold-Kan: Gamma(Q(a)).
inline SimplicialAbGroup nerve_pic(const PicOmegaCat& a, int T) { return dk_inverse(q_of(a), T); }

// Comparison of the two nerve computations for P(c), c finite in degrees >= 0.
struct NerveComparison {
    std::vector<std::size_t> enumerated, via_dk;  // counts per level
    bool normalized_iso = true;  // top component identifies the enumerated normalized simplices with c_n
    bool bijective = true;
    bool faces = true, degeneracies = true, thin = true;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

// Psi : Gamma(c)_n -> N(P c)_n sends the summand of sigma : [n] ->> [k] to sigma^* phi_k, where
// phi_k : c_k -> normalized k-simplices inverts "degree-k part of the top cell".
inline NerveComparison compare_nerves(const ChainComplex& c, int n) {
    if (!c.empty() && c.min_degree() < 0) throw PreconditionViolated("nerve comparison needs a complex in degrees >= 0");
    NerveComparison r;
    auto fail = [&](std::string msg) { r.failures.push_back(std::move(msg)); };
    PicRealization real = from_pic(p_of(c));
    NerveSimplexSet N = nerve_simplices(real.cat, n);
    DoldKanInverse dk = dk_inverse_data(c, n);
    const GradedLayout L(c);

    std::vector<FiniteIndex> gidx;
    for (int k = 0; k <= n; ++k) {
        gidx.emplace_back(dk.group.level(k));
        r.enumerated.push_back(N.levels[static_cast<std::size_t>(k)].size());
        r.via_dk.push_back(gidx.back().size());
        if (r.enumerated.back() != r.via_dk.back())
            fail("level " + std::to_string(k) + ": " + std::to_string(r.enumerated.back()) + " simplices vs " + std::to_string(r.via_dk.back()));
    }
    if (!r.ok()) {
        r.bijective = false;
        return r;
    }

    // phi_k, tabulated by the canonical index of c_k.
    auto degree_part = [&](int k, int elem) {
        IntVector v = real.index.element(static_cast<std::size_t>(elem));
        if (k < L.lo || k > L.hi) return std::size_t{0};
        return FiniteIndex(c.group(k)).index_of(graded_component(c, k, v));
    };
    std::vector<std::vector<std::size_t>> phi(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) {
        const bool present = k >= L.lo && k <= L.hi;
        const std::size_t ck = present ? FiniteIndex(c.group(k)).size() : 1;
        auto& tab = phi[static_cast<std::size_t>(k)];
        tab.assign(ck, SIZE_MAX);
        const NerveLevel& lev = N.levels[static_cast<std::size_t>(k)];
        const std::size_t zero_below = k > 0 ? *N.levels[static_cast<std::size_t>(k - 1)].find(std::vector<int>(oriental(k - 1).cells.size(), 0)) : 0;
        for (std::size_t x = 0; x < lev.size(); ++x) {
            bool normalized = true;
            for (int i = 0; i < k && normalized; ++i) normalized = N.face(k, i, x) == zero_below;
            if (!normalized) continue;
            std::size_t part = degree_part(k, lev.simplices[x].cells[static_cast<std::size_t>(top_cell(oriental(k)))]);
            if (tab[part] != SIZE_MAX) {
                r.normalized_iso = false;
                fail("two normalized " + std::to_string(k) + "-simplices share a top component");
            }
            tab[part] = x;
        }
        for (std::size_t part = 0; part < ck; ++part)
            if (tab[part] == SIZE_MAX) {
                r.normalized_iso = false;
                fail("no normalized " + std::to_string(k) + "-simplex with top component #" + std::to_string(part));
                break;
            }
    }
    if (!r.ok()) {
        r.bijective = false;
        return r;
    }

    // Pointwise sum of simplices (A is Picard, so sums of functors are functors).
    auto add_cells = [&](std::vector<int> a, const std::vector<int>& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            a[i] = static_cast<int>(real.add(static_cast<std::size_t>(a[i]), static_cast<std::size_t>(b[i])));
        return a;
    };
    std::vector<std::vector<std::size_t>> psi(static_cast<std::size_t>(n + 1));
    for (int m = 0; m <= n; ++m) {
        const NerveLevel& lev = N.levels[static_cast<std::size_t>(m)];
        const FiniteIndex& gi = gidx[static_cast<std::size_t>(m)];
        auto& tab = psi[static_cast<std::size_t>(m)];
        std::vector<char> hit(lev.size(), 0);
        for (std::size_t e = 0; e < gi.size(); ++e) {
            IntVector v = gi.element(e);
            std::vector<int> F(oriental(m).cells.size(), 0);
            const auto& sums = dk.summands[static_cast<std::size_t>(m)];
            for (std::size_t j = 0; j < sums.size(); ++j) {
                const int k = sums[j].back();
                if (k < L.lo || k > L.hi) continue;
                const std::size_t off = dk.summand_offset[static_cast<std::size_t>(m)][j];
                IntVector x(v.begin() + static_cast<std::ptrdiff_t>(off),
                            v.begin() + static_cast<std::ptrdiff_t>(off + c.group(k).num_generators()));
                const std::size_t simplex = phi[static_cast<std::size_t>(k)][FiniteIndex(c.group(k)).index_of(x)];
                F = add_cells(F, nerve_act(N.levels[static_cast<std::size_t>(k)].simplices[simplex].cells, sums[j], k));
            }
            auto idx = lev.find(F);
            if (!idx) throw InternalInconsistency("Dold-Kan image is not a simplex of the nerve");
            if (hit[*idx]) r.bijective = false;
            hit[*idx] = 1;
            tab.push_back(*idx);
            // thin iff the identity summand vanishes (positive levels)
            const std::size_t id_off = dk.summand_offset[static_cast<std::size_t>(m)].back();
            bool id_zero = m < L.lo || m > L.hi ||
                           FiniteIndex(c.group(m)).index_of(IntVector(v.begin() + static_cast<std::ptrdiff_t>(id_off),
                                                                      v.begin() + static_cast<std::ptrdiff_t>(id_off + c.group(m).num_generators()))) == 0;
            if (m > 0 && lev.simplices[*idx].thin != id_zero) r.thin = false;
        }
    }
    if (!r.bijective) fail("Psi is not injective");
    if (!r.thin) fail("thin flags disagree with the identity summand");

    for (int m = 1; m <= n && r.faces; ++m)
        for (int i = 0; i <= m && r.faces; ++i) {
            FiniteHomTable d(dk.group.face(m, i), gidx[static_cast<std::size_t>(m)], gidx[static_cast<std::size_t>(m - 1)]);
            for (std::size_t e = 0; e < gidx[static_cast<std::size_t>(m)].size(); ++e)
                if (N.face(m, i, psi[static_cast<std::size_t>(m)][e]) != psi[static_cast<std::size_t>(m - 1)][d(e)]) {
                    r.faces = false;
                    fail("d_" + std::to_string(i) + " at level " + std::to_string(m) + " does not commute with Psi");
                    break;
                }
        }
    for (int m = 0; m < n && r.degeneracies; ++m)
        for (int i = 0; i <= m && r.degeneracies; ++i) {
            FiniteHomTable s(dk.group.degeneracy(m, i), gidx[static_cast<std::size_t>(m)], gidx[static_cast<std::size_t>(m + 1)]);
            for (std::size_t e = 0; e < gidx[static_cast<std::size_t>(m)].size(); ++e)
                if (N.degeneracy(m, i, psi[static_cast<std::size_t>(m)][e]) != psi[static_cast<std::size_t>(m + 1)][s(e)]) {
                    r.degeneracies = false;
                    fail("s_" + std::to_string(i) + " at level " + std::to_string(m) + " does not commute with Psi");
                    break;
                }
        }
    return r;
}

}  // namespace omegacat
