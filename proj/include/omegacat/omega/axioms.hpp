#pragma once

#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include "omegacat/omega/finite_omega_cat.hpp"

namespace omegacat {

struct AxiomViolation {
    std::string axiom;
    std::vector<int> levels;
    std::vector<int> elements;
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomViolation> violations;
    bool ok() const { return violations.empty(); }
};

namespace detail {

class ViolationSink {
public:
    ViolationSink(AxiomReport& r, std::size_t per_axiom) : r_(r), cap_(per_axiom) {}
    bool full(const std::string& ax) const {
        auto it = count_.find(ax);
        return it != count_.end() && it->second >= cap_;
    }
    void add(std::string ax, std::vector<int> levels, std::vector<int> elems, std::string detail) {
        if (full(ax)) return;
        ++count_[ax];
        r_.violations.push_back({std::move(ax), std::move(levels), std::move(elems), std::move(detail)});
    }

private:
    AxiomReport& r_;
    std::size_t cap_;
    std::map<std::string, std::size_t> count_;
};

}  // namespace detail

// Exhaustive check of the strict omega-category axioms.
inline AxiomReport validate_axioms(const FiniteOmegaCat& a, std::size_t witnesses_per_axiom = 1) {
    AxiomReport rep;
    detail::ViolationSink sink(rep, witnesses_per_axiom);
    const int n = static_cast<int>(a.size());
    const int N = a.stabilization();

    for (int i = 0; i <= N; ++i)
        for (int x = 0; x < n; ++x) {
            int sx = a.s(i, x), tx = a.t(i, x);
            if (sx < 0 || sx >= n || tx < 0 || tx >= n) {
                sink.add("closure", {i}, {x}, "source or target out of range");
                return rep;
            }
        }

    // Composition is defined exactly on composable pairs and lands in range.
    for (int i = 0; i <= N; ++i)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                int z = a.compose(i, x, y);
                bool composable = a.s(i, x) == a.t(i, y);
                if (composable && (z < 0 || z >= n))
                    sink.add("composition domain", {i}, {x, y}, "composable pair has no composite");
                else if (!composable && z != FiniteOmegaCat::undefined)
                    sink.add("composition domain", {i}, {x, y}, "non-composable pair has a composite");
            }
    if (!rep.ok()) return rep;

    auto comp = [&](int i, int x, int y) { return a.compose(i, x, y); };
    // right[i][x] = all y with x *_i y defined
    std::vector<std::vector<std::vector<int>>> right(static_cast<std::size_t>(N + 1), std::vector<std::vector<int>>(a.size()));
    for (int i = 0; i <= N; ++i)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (comp(i, x, y) >= 0) right[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)].push_back(y);
    auto fiber = [&](int i, int x) -> const std::vector<int>& { return right[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)]; };

    for (int i = 0; i <= N; ++i)
        for (int x = 0; x < n; ++x) {
            int sx = a.s(i, x), tx = a.t(i, x);
            if (a.s(i, sx) != sx || a.t(i, sx) != sx || a.s(i, tx) != tx || a.t(i, tx) != tx)
                sink.add("1a", {i}, {x}, "rho_i sigma_i != sigma_i");
            if (comp(i, x, sx) != x) sink.add("1b", {i}, {x}, "x *_i s_i x != x");
            if (comp(i, tx, x) != x) sink.add("1b", {i}, {x}, "t_i x *_i x != x");
        }

    for (int i = 0; i <= N; ++i)
        for (int x = 0; x < n; ++x)
            for (int y : fiber(i, x)) {
                int xy = comp(i, x, y);
                if (a.s(i, xy) != a.s(i, y) || a.t(i, xy) != a.t(i, x))
                    sink.add("1d", {i}, {x, y}, "boundary of composite");
                if (!sink.full("1c"))
                    for (int z : fiber(i, y)) {
                        int l = comp(i, xy, z), r = comp(i, x, comp(i, y, z));
                        if (l != r) sink.add("1c", {i}, {x, y, z}, "associativity");
                    }
            }

    for (int i = 0; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            for (int x = 0; x < n; ++x) {
                int si = a.s(i, x), ti = a.t(i, x);
                if (a.s(j, si) != si || a.t(j, si) != si || a.s(j, ti) != ti || a.t(j, ti) != ti)
                    sink.add("2a", {i, j}, {x}, "rho_j sigma_i != sigma_i");
                int sj = a.s(j, x), tj = a.t(j, x);
                if (a.s(i, sj) != si || a.s(i, tj) != si || a.t(i, sj) != ti || a.t(i, tj) != ti)
                    sink.add("2b", {i, j}, {x}, "sigma_i rho_j != sigma_i");
            }
            for (int x = 0; x < n; ++x)
                for (int y : fiber(i, x)) {
                    int xy = comp(i, x, y);
                    int l = comp(i, a.s(j, x), a.s(j, y));
                    int r = comp(i, a.t(j, x), a.t(j, y));
                    if (l < 0 || a.s(j, xy) != l) sink.add("2c", {i, j}, {x, y}, "s_j of composite");
                    if (r < 0 || a.t(j, xy) != r) sink.add("2c", {i, j}, {x, y}, "t_j of composite");
                }
            // Interchange: (a *_j b) *_i (c *_j d) == (a *_i c) *_j (b *_i d) when both sides are defined.
            if (sink.full("2d")) continue;
            for (int p = 0; p < n; ++p)
                for (int c = 0; c < n; ++c) {
                    if (a.s(i, p) != a.t(i, c)) continue;
                    for (int q : fiber(j, p)) {
                        int pq = comp(j, p, q);
                        for (int d : fiber(j, c)) {
                            int cd = comp(j, c, d);
                            int lhs = comp(i, pq, cd);
                            int pc = comp(i, p, c), qd = comp(i, q, d);
                            int rhs = (pc < 0 || qd < 0) ? -1 : comp(j, pc, qd);
                            if (lhs >= 0 && rhs >= 0 && lhs != rhs)
                                sink.add("2d", {i, j}, {p, q, c, d}, "interchange law");
                        }
                    }
                }
        }

    for (int x = 0; x < n; ++x)
        if (a.s(N, x) != x || a.t(N, x) != x) sink.add("3", {N}, {x}, "s_N x or t_N x differs from x");
    return rep;
}

inline std::string describe(const AxiomReport& r, const FiniteOmegaCat& a) {
    std::ostringstream os;
    for (const auto& v : r.violations) {
        os << "axiom " << v.axiom << " levels [";
        for (std::size_t k = 0; k < v.levels.size(); ++k) os << (k ? "," : "") << v.levels[k];
        os << "] elements [";
        for (std::size_t k = 0; k < v.elements.size(); ++k) os << (k ? "," : "") << a.name(v.elements[k]);
        os << "]: " << v.detail << "\n";
    }
    return os.str();
}

// Checks that f commutes with all structure maps and compositions.
inline AxiomReport validate_functor(const OmegaFunctor& f) {
    AxiomReport rep;
    detail::ViolationSink sink(rep, 1);
    const auto& A = *f.source;
    const auto& B = *f.target;
    const int N = std::max(A.stabilization(), B.stabilization());
    const int n = static_cast<int>(A.size());
    if (f.map.size() != A.size()) {
        sink.add("functor", {}, {}, "map size does not match source");
        return rep;
    }
    for (int x = 0; x < n; ++x)
        if (f(x) < 0 || f(x) >= static_cast<int>(B.size())) {
            sink.add("functor", {}, {x}, "image out of range");
            return rep;
        }
    for (int i = 0; i <= N; ++i) {
        for (int x = 0; x < n; ++x) {
            if (f(A.s(i, x)) != B.s(i, f(x))) sink.add("functor preserves s", {i}, {x}, "");
            if (f(A.t(i, x)) != B.t(i, f(x))) sink.add("functor preserves t", {i}, {x}, "");
        }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                int xy = A.compose(i, x, y);
                if (xy < 0) continue;
                if (B.compose(i, f(x), f(y)) != f(xy)) sink.add("functor preserves composition", {i}, {x, y}, "");
            }
    }
    return rep;
}

inline FiniteOmegaCat product(const FiniteOmegaCat& a, const FiniteOmegaCat& b) {
    const int N = std::max(a.stabilization(), b.stabilization());
    const int nb = static_cast<int>(b.size());
    FiniteOmegaCat p(a.size() * b.size(), N);
    auto id = [nb](int x, int y) { return x * nb + y; };
    for (int x = 0; x < static_cast<int>(a.size()); ++x)
        for (int y = 0; y < nb; ++y) {
            p.set_name(id(x, y), "(" + a.name(x) + "," + b.name(y) + ")");
            for (int i = 0; i <= N; ++i) {
                p.set_s(i, id(x, y), id(a.s(i, x), b.s(i, y)));
                p.set_t(i, id(x, y), id(a.t(i, x), b.t(i, y)));
            }
        }
    fill_compositions(p, [&](int i, int u, int v) {
        int x = a.compose(i, u / nb, v / nb), y = b.compose(i, u % nb, v % nb);
        return (x < 0 || y < 0) ? FiniteOmegaCat::undefined : id(x, y);
    });
    return p;
}

// The inverse of x for *_level, if any.
inline int inverse_at(const FiniteOmegaCat& a, int level, int x) {
    const int sx = a.s(level, x), tx = a.t(level, x);
    for (int y = 0; y < static_cast<int>(a.size()); ++y) {
        if (a.s(level, y) != tx || a.t(level, y) != sx) continue;
        if (a.compose(level, x, y) == tx && a.compose(level, y, x) == sx) return y;
    }
    return -1;
}

inline bool is_groupoid(const FiniteOmegaCat& a, std::vector<int>* witness = nullptr) {
    for (int j = 0; j < a.stabilization(); ++j)
        for (int x = 0; x < static_cast<int>(a.size()); ++x) {
            if (a.s(j, x) == x) continue;
            if (inverse_at(a, j, x) < 0) {
                if (witness) *witness = {j, x};
                return false;
            }
        }
    return true;
}

// Elements z with s_{k-1} z = x and t_{k-1} z = y, with structure shifted down by k.
struct HomSubcategory {
    FiniteOmegaCat cat;
    std::vector<int> embedding;  // element of the sub-category -> element of the parent
};

inline HomSubcategory hom_sub(const FiniteOmegaCat& a, int k, int x, int y) {
    if (k < 1) throw PreconditionViolated("hom_sub needs k >= 1");
    if (a.s(k - 1, x) != x || a.s(k - 1, y) != y)
        throw PreconditionViolated("endpoints must be (k-1)-cells");
    if (k >= 2 && (a.s(k - 2, x) != a.s(k - 2, y) || a.t(k - 2, x) != a.t(k - 2, y)))
        throw PreconditionViolated("endpoints must be parallel");
    std::vector<int> emb, back(a.size(), -1);
    for (int z = 0; z < static_cast<int>(a.size()); ++z)
        if (a.s(k - 1, z) == x && a.t(k - 1, z) == y) {
            back[static_cast<std::size_t>(z)] = static_cast<int>(emb.size());
            emb.push_back(z);
        }
    const int N = std::max(0, a.stabilization() - k);
    FiniteOmegaCat h(emb.size(), N);
    for (std::size_t u = 0; u < emb.size(); ++u) {
        h.set_name(static_cast<int>(u), a.name(emb[u]));
        for (int j = 0; j <= N; ++j) {
            h.set_s(j, static_cast<int>(u), back[static_cast<std::size_t>(a.s(j + k, emb[u]))]);
            h.set_t(j, static_cast<int>(u), back[static_cast<std::size_t>(a.t(j + k, emb[u]))]);
        }
    }
    fill_compositions(h, [&](int j, int u, int v) {
        int z = a.compose(j + k, emb[static_cast<std::size_t>(u)], emb[static_cast<std::size_t>(v)]);
        return z < 0 ? FiniteOmegaCat::undefined : back[static_cast<std::size_t>(z)];
    });
    return {std::move(h), std::move(emb)};
}

namespace detail {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[static_cast<std::size_t>(x)] != x) x = p[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) p[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

}  // namespace detail

// Isomorphism classes of level-i cells: a ~ a' iff there are mutually inverse (i+1)-cells between them.
// Returns the class representative for each element (meaningful for level-i cells only).
inline std::vector<int> iso_classes(const FiniteOmegaCat& a, int level) {
    detail::UnionFind uf(a.size());
    for (int u = 0; u < static_cast<int>(a.size()); ++u) {
        if (a.s(level + 1, u) != u) continue;
        int x = a.s(level, u), y = a.t(level, u);
        if (x == y || uf.find(x) == uf.find(y)) continue;
        if (inverse_at(a, level, u) >= 0) uf.unite(x, y);
    }
    std::vector<int> cls(a.size());
    for (int x = 0; x < static_cast<int>(a.size()); ++x) cls[static_cast<std::size_t>(x)] = uf.find(x);
    return cls;
}

struct EquivalenceReport {
    bool essentially_surjective = true;  // (a)
    bool full = true;                    // (b)
    bool faithful = true;                // (c)
    std::string witness;
    bool ok() const { return essentially_surjective && full && faithful; }
};

// Equivalence test for omega-functors. Levels above the larger stabilization repeat the top level.
inline EquivalenceReport equivalence_check(const OmegaFunctor& f, bool include_faithfulness = true) {
    EquivalenceReport rep;
    const auto& A = *f.source;
    const auto& B = *f.target;
    const int N = std::max(A.stabilization(), B.stabilization());
    const int na = static_cast<int>(A.size()), nb = static_cast<int>(B.size());

    std::vector<std::vector<int>> clsA, clsB;
    for (int i = 0; i <= N + 1; ++i) {
        clsA.push_back(iso_classes(A, i));
        clsB.push_back(iso_classes(B, i));
    }

    // (a)
    {
        std::vector<char> hit(B.size(), 0);
        for (int x = 0; x < na; ++x)
            if (A.s(0, x) == x) hit[static_cast<std::size_t>(clsB[0][static_cast<std::size_t>(f(x))])] = 1;
        for (int y = 0; y < nb; ++y)
            if (B.s(0, y) == y && !hit[static_cast<std::size_t>(clsB[0][static_cast<std::size_t>(y)])]) {
                rep.essentially_surjective = false;
                rep.witness = "object " + B.name(y) + " is not isomorphic to any image";
                break;
            }
    }

    // (b)
    for (int i = 0; i <= N && rep.full; ++i) {
        // A_{i+1} and B_{i+1} indexed by their level-i endpoints.
        std::map<std::pair<int, int>, std::vector<int>> homA, homB;
        for (int u = 0; u < na; ++u)
            if (A.s(i + 1, u) == u) homA[{A.s(i, u), A.t(i, u)}].push_back(u);
        for (int v = 0; v < nb; ++v)
            if (B.s(i + 1, v) == v) homB[{B.s(i, v), B.t(i, v)}].push_back(v);
        std::vector<int> cells = A.cells_of_level(i);
        for (std::size_t p = 0; p < cells.size() && rep.full; ++p)
            for (std::size_t q = 0; q < cells.size() && rep.full; ++q) {
                int x = cells[p], y = cells[q];
                if (i > 0 && (A.s(i - 1, x) != A.s(i - 1, y) || A.t(i - 1, x) != A.t(i - 1, y))) continue;
                auto itB = homB.find({f(x), f(y)});
                if (itB == homB.end()) continue;
                std::vector<char> reach(B.size(), 0);
                auto itA = homA.find({x, y});
                if (itA != homA.end())
                    for (int u : itA->second) reach[static_cast<std::size_t>(clsB[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(f(u))])] = 1;
                for (int v : itB->second)
                    if (!reach[static_cast<std::size_t>(clsB[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(v)])]) {
                        rep.full = false;
                        rep.witness = "level " + std::to_string(i + 1) + " cell " + B.name(v) + " between images of " +
                                      A.name(x) + " and " + A.name(y) + " has no preimage up to isomorphism";
                        break;
                    }
            }
    }

    // (c)
    if (include_faithfulness)
        for (int i = 0; i <= N && rep.faithful; ++i) {
            // only parallel cells are compared: (B-class, source, target) -> A-class
            std::map<std::tuple<int, int, int>, int> seen;
            for (int x : A.cells_of_level(i)) {
                int cb = clsB[static_cast<std::size_t>(i)][static_cast<std::size_t>(f(x))];
                int ca = clsA[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)];
                const int sx = i > 0 ? A.s(i - 1, x) : -1, tx = i > 0 ? A.t(i - 1, x) : -1;
                auto [it, inserted] = seen.emplace(std::make_tuple(cb, sx, tx), ca);
                if (!inserted && it->second != ca) {
                    rep.faithful = false;
                    rep.witness = "level " + std::to_string(i) + " cells " + A.name(it->second) + " and " + A.name(x) +
                                  " become isomorphic only after applying the functor";
                    break;
                }
            }
        }
    return rep;
}

}  // namespace omegacat
