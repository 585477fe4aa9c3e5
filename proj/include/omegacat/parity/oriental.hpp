#pragma once

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>

#include "omegacat/omega/axioms.hpp"
#include "omegacat/parity/parity_complex.hpp"

namespace omegacat {

struct CellPair {
    CellSet M = 0, P = 0;
    friend bool operator==(const CellPair& a, const CellPair& b) { return a.M == b.M && a.P == b.P; }
    friend bool operator<(const CellPair& a, const CellPair& b) { return a.M != b.M ? a.M < b.M : a.P < b.P; }
};

// Structure of the omega-category N(C) of pairs of subsets.
inline CellPair cell_source(const ParityComplex& c, const CellPair& x, int n) {
    return {c.up_to(x.M, n), c.exactly(x.M, n) | c.up_to(x.P, n - 1)};
}
inline CellPair cell_target(const ParityComplex& c, const CellPair& x, int n) {
    return {c.up_to(x.M, n - 1) | c.exactly(x.P, n), c.up_to(x.P, n)};
}
// (N,Q) *_n (M,P) = (M u (N \ N_n), Q u (P \ P_n))
inline CellPair cell_compose(const ParityComplex& c, const CellPair& x, const CellPair& y, int n) {
    return {y.M | (x.M & ~c.exactly(x.M, n)), x.P | (y.P & ~c.exactly(y.P, n))};
}

inline bool is_cell(const ParityComplex& c, const CellPair& x) {
    if (x.M == 0 || x.P == 0) return false;
    if (!well_formed(c, x.M) || !well_formed(c, x.P)) return false;
    const CellSet Mm = c.minus_of(x.M), Mp = c.plus_of(x.M), Pm = c.minus_of(x.P), Pp = c.plus_of(x.P);
    return x.P == ((x.M | Mp) & ~Mm) && x.P == ((x.M | Pp) & ~Pm) && x.M == ((x.P | Mm) & ~Mp) &&
           x.M == ((x.P | Pm) & ~Pp);
}

inline int cell_dim(const ParityComplex& c, const CellPair& x) {
    int d = 0;
    for (int i = 0; i < c.size(); ++i)
        if (has(x.M | x.P, i)) d = std::max(d, c.dim(i));
    return d;
}

// <x> = (mu(x), pi(x))
inline CellPair atom(const ParityComplex& c, int x) {
    CellSet mu = bit(x), pi = bit(x), mcur = bit(x), pcur = bit(x);
    for (int m = c.dim(x) - 1; m >= 0; --m) {
        mcur = c.minus_only(mcur);
        pcur = c.plus_only(pcur);
        mu |= mcur;
        pi |= pcur;
    }
    return {mu, pi};
}

inline std::vector<CellPair> atoms(const ParityComplex& c) {
    std::vector<CellPair> out;
    for (int x = 0; x < c.size(); ++x) out.push_back(atom(c, x));
    return out;
}

// How to evaluate a functor on every cell from the images of atoms.
struct GenerationStep {
    int cell = -1;
    int atom_of = -1;  // parity element, when the cell is an atom
    int level = -1, left = -1, right = -1;  // otherwise cell = left *_level right
};

// Omega-category O(C) with its cells enumerated explicitly.
struct CellCategory {
    ParityComplex complex;
    std::vector<CellPair> cells;
    std::map<CellPair, int> lookup;
    std::shared_ptr<FiniteOmegaCat> cat;
    std::vector<int> atom_cell;  // parity element -> cell index
    std::vector<GenerationStep> plan;
    bool freely_generated = false;

    int find(const CellPair& x) const {
        auto it = lookup.find(x);
        return it == lookup.end() ? -1 : it->second;
    }
};

namespace detail {

inline void well_formed_subsets(const ParityComplex& c, int i, CellSet cur, int vertices, std::vector<CellSet>& out) {
    if (i == c.size()) {
        if (cur) out.push_back(cur);
        return;
    }
    well_formed_subsets(c, i + 1, cur, vertices, out);
    if (c.dim(i) == 0 && vertices >= 1) return;
    for (int j = 0; j < i; ++j)
        if (has(cur, j) && ((c.plus(i) & c.plus(j)) || (c.minus(i) & c.minus(j)))) return;
    well_formed_subsets(c, i + 1, cur | bit(i), vertices + (c.dim(i) == 0), out);
}

}  // namespace detail

// Enumerates O(C): P is determined by M, so it suffices to range over well-formed M.
inline CellCategory cell_category(const ParityComplex& c) {
    CellCategory cc;
    cc.complex = c;
    std::vector<CellSet> ms;
    detail::well_formed_subsets(c, 0, 0, 0, ms);
    for (CellSet M : ms) {
        CellPair x{M, (M | c.plus_of(M)) & ~c.minus_of(M)};
        if (is_cell(c, x)) cc.cells.push_back(x);
    }
    std::stable_sort(cc.cells.begin(), cc.cells.end(), [&](const CellPair& a, const CellPair& b) {
        int da = cell_dim(c, a), db = cell_dim(c, b);
        return da != db ? da < db : a < b;
    });
    for (std::size_t i = 0; i < cc.cells.size(); ++i) cc.lookup[cc.cells[i]] = static_cast<int>(i);

    const int N = std::max(0, c.max_dim());
    auto cat = std::make_shared<FiniteOmegaCat>(cc.cells.size(), N);
    auto must = [&](const CellPair& x, const char* what) {
        int i = cc.find(x);
        if (i < 0) throw InternalInconsistency(std::string(what) + " leaves the cell set");
        return i;
    };
    for (std::size_t i = 0; i < cc.cells.size(); ++i) {
        const CellPair& x = cc.cells[i];
        cat->set_name(static_cast<int>(i), c.describe(x.M) + "|" + c.describe(x.P));
        for (int k = 0; k <= N; ++k) {
            cat->set_s(k, static_cast<int>(i), must(cell_source(c, x, k), "source"));
            cat->set_t(k, static_cast<int>(i), must(cell_target(c, x, k), "target"));
        }
    }
    fill_compositions(*cat, [&](int k, int x, int y) {
        return must(cell_compose(c, cc.cells[static_cast<std::size_t>(x)], cc.cells[static_cast<std::size_t>(y)], k),
                    "composite");
    });
    cc.cat = cat;
    for (int x = 0; x < c.size(); ++x) cc.atom_cell.push_back(must(atom(c, x), "atom"));

    // Closure from atoms, one dimension at a time; record a derivation for every cell reached.
    std::vector<char> known(cc.cells.size(), 0);
    std::vector<int> order;
    for (int k = 0; k <= N; ++k) {
        for (int x = 0; x < c.size(); ++x)
            if (c.dim(x) == k && !known[static_cast<std::size_t>(cc.atom_cell[static_cast<std::size_t>(x)])]) {
                int cell = cc.atom_cell[static_cast<std::size_t>(x)];
                known[static_cast<std::size_t>(cell)] = 1;
                order.push_back(cell);
                cc.plan.push_back({cell, x, -1, -1, -1});
            }
        for (bool grew = true; grew;) {
            grew = false;
            const std::vector<int> snapshot = order;
            for (int j = 0; j < k; ++j)
                for (int x : snapshot)
                    for (int y : snapshot) {
                        int z = cat->compose(j, x, y);
                        if (z < 0 || known[static_cast<std::size_t>(z)]) continue;
                        known[static_cast<std::size_t>(z)] = 1;
                        order.push_back(z);
                        cc.plan.push_back({z, -1, j, x, y});
                        grew = true;
                    }
        }
    }
    cc.freely_generated = order.size() == cc.cells.size();
    return cc;
}

inline int oriental_limit() {
    if (const char* e = std::getenv("OMEGA_DK_NMAX")) return std::atoi(e);
    return 3;
}

// O(simplex n), cached. n = 4 needs OMEGA_DK_NMAX >= 4.
inline const CellCategory& oriental(int n, int limit = oriental_limit()) {
    if (n < 0) throw PreconditionViolated("negative oriental dimension");
    if (n > limit || n > 4) throw TooLarge("oriental(" + std::to_string(n) + ") exceeds the enabled limit " + std::to_string(limit));
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CellCategory>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<CellCategory>(cell_category(simplex_parity(n)));
    return *slot;
}

inline std::vector<int> simplex_vertices(const std::string& label) {
    std::vector<int> v;
    for (char ch : label) v.push_back(ch - '0');
    return v;
}

// O(alpha) for a monotone alpha : [m] -> [n], given by its values.
inline OmegaFunctor induced_map(const std::vector<int>& alpha, int n) {
    const int m = static_cast<int>(alpha.size()) - 1;
    for (int i = 0; i + 1 < static_cast<int>(alpha.size()); ++i)
        if (alpha[static_cast<std::size_t>(i)] > alpha[static_cast<std::size_t>(i + 1)]) throw PreconditionViolated("map is not monotone");
    const CellCategory& src = oriental(m, std::max(m, n));
    const CellCategory& tgt = oriental(n, std::max(m, n));
    std::vector<int> elem(static_cast<std::size_t>(src.complex.size()), -1);
    for (int x = 0; x < src.complex.size(); ++x) {
        std::vector<int> img;
        bool degenerate = false;
        for (int v : simplex_vertices(src.complex.label(x))) {
            int a = alpha[static_cast<std::size_t>(v)];
            if (!img.empty() && img.back() == a) degenerate = true;
            img.push_back(a);
        }
        if (!degenerate) elem[static_cast<std::size_t>(x)] = tgt.complex.find(simplex_label(img));
    }
    auto push = [&](CellSet s) {
        CellSet r = 0;
        for (int x = 0; x < src.complex.size(); ++x)
            if (has(s, x) && elem[static_cast<std::size_t>(x)] >= 0) r |= bit(elem[static_cast<std::size_t>(x)]);
        return r;
    };
    OmegaFunctor f{src.cat, tgt.cat, {}};
    for (const CellPair& x : src.cells) {
        int i = tgt.find({push(x.M), push(x.P)});
        if (i < 0) throw InternalInconsistency("induced map leaves the oriental");
        f.map.push_back(i);
    }
    return f;
}

inline OmegaFunctor compose(const OmegaFunctor& g, const OmegaFunctor& f) {
    OmegaFunctor h{f.source, g.target, {}};
    for (int x : f.map) h.map.push_back(g(x));
    return h;
}

// Index of the top atom <01..n>.
inline int top_cell(const CellCategory& o) { return o.atom_cell.back(); }

}  // namespace omegacat
