#pragma once

#include "omegacat/simplicial/simplicial_group.hpp"

namespace omegacat {

// Monotone map [m] -> [k], by its values.
using MonotoneMap = std::vector<int>;

// Monotone surjections [n] ->> [k] for all k <= n, ordered by k then lexicographically.
inline std::vector<MonotoneMap> surjections_from(int n) {
    std::vector<MonotoneMap> out;
    for (int k = 0; k <= n; ++k) {
        // choose the k positions i in 1..n where the value steps up
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (std::popcount(mask) != k) continue;
            MonotoneMap f{0};
            for (int i = 1; i <= n; ++i) f.push_back(f.back() + ((mask >> (i - 1)) & 1u ? 1 : 0));
            out.push_back(std::move(f));
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const MonotoneMap& a, const MonotoneMap& b) {
        return a.back() != b.back() ? a.back() < b.back() : a < b;
    });
    return out;
}

inline MonotoneMap coface_map(int n, int i) {  // [n-1] -> [n] skipping i
    MonotoneMap f;
    for (int j = 0; j < n; ++j) f.push_back(j < i ? j : j + 1);
    return f;
}

inline MonotoneMap codegeneracy_map(int n, int i) {  // [n+1] -> [n] hitting i twice
    MonotoneMap f;
    for (int j = 0; j <= n + 1; ++j) f.push_back(j <= i ? j : j - 1);
    return f;
}

inline MonotoneMap compose_maps(const MonotoneMap& g, const MonotoneMap& f) {
    MonotoneMap h;
    for (int x : f) h.push_back(g[static_cast<std::size_t>(x)]);
    return h;
}

// Epi-mono factorization f = eta o tau; returns tau and the image of eta.
inline std::pair<MonotoneMap, std::vector<int>> epi_mono(const MonotoneMap& f) {
    std::vector<int> image;
    MonotoneMap tau;
    for (int x : f) {
        if (image.empty() || image.back() != x) image.push_back(x);
        tau.push_back(static_cast<int>(image.size()) - 1);
    }
    return {tau, image};
}

// Gamma(c)_n = sum over surjections sigma : [n] ->> [k] of c_k. Input: complex in degrees >= 0.
struct DoldKanInverse {
    SimplicialAbGroup group;
    std::vector<std::vector<MonotoneMap>> summands;        // per level
    std::vector<std::vector<std::size_t>> summand_offset;  // per level

    std::size_t find(int n, const MonotoneMap& s) const {
        const auto& v = summands[static_cast<std::size_t>(n)];
        return static_cast<std::size_t>(std::find(v.begin(), v.end(), s) - v.begin());
    }
};

inline DoldKanInverse dk_inverse_data(const ChainComplex& c, int T) {
    if (!c.empty() && c.min_degree() < 0) throw PreconditionViolated("dk_inverse needs a complex in degrees >= 0");
    DoldKanInverse dk;
    std::vector<FgAbGroup> levels;
    for (int n = 0; n <= T; ++n) {
        dk.summands.push_back(surjections_from(n));
        dk.summand_offset.emplace_back();
        IntMatrix rel(0, 0);
        for (const auto& s : dk.summands.back()) {
            dk.summand_offset.back().push_back(rel.rows());
            rel = IntMatrix::direct_sum(rel, c.group(s.back()).relations());
        }
        levels.emplace_back(std::move(rel));
    }
    // theta^* : Gamma_n -> Gamma_m for theta : [m] -> [n]
    auto op = [&](int n, int m, const MonotoneMap& theta) {
        IntMatrix M(levels[static_cast<std::size_t>(m)].num_generators(), levels[static_cast<std::size_t>(n)].num_generators());
        const auto& src = dk.summands[static_cast<std::size_t>(n)];
        for (std::size_t a = 0; a < src.size(); ++a) {
            const int k = src[a].back();
            auto [tau, image] = epi_mono(compose_maps(src[a], theta));
            const int j = tau.back();
            const std::size_t so = dk.summand_offset[static_cast<std::size_t>(n)][a];
            const std::size_t to = dk.summand_offset[static_cast<std::size_t>(m)][dk.find(m, tau)];
            if (j == k) {
                M.set_block(to, so, IntMatrix::identity(c.group(k).num_generators()));
            } else if (j == k - 1 && image.back() == k - 1) {
                // eta is the coface omitting k
                M.set_block(to, so, c.d(k).matrix().scaled(k % 2 == 0 ? 1 : -1));
            }
        }
        return GroupHom(levels[static_cast<std::size_t>(n)], levels[static_cast<std::size_t>(m)], std::move(M));
    };
    std::vector<std::vector<GroupHom>> faces, degens;
    for (int n = 1; n <= T; ++n) {
        faces.emplace_back();
        for (int i = 0; i <= n; ++i) faces.back().push_back(op(n, n - 1, coface_map(n, i)));
    }
    for (int n = 0; n < T; ++n) {
        degens.emplace_back();
        for (int i = 0; i <= n; ++i) degens.back().push_back(op(n, n + 1, codegeneracy_map(n, i)));
    }
    dk.group = SimplicialAbGroup(std::move(levels), std::move(faces), std::move(degens));
    return dk;
}

inline SimplicialAbGroup dk_inverse(const ChainComplex& c, int T) { return dk_inverse_data(c, T).group; }

// c -> K(Gamma c), x |-> x in the identity summand. An isomorphism of complexes in degrees <= T.
inline ChainMap dk_unit(const ChainComplex& c, int T) {
    DoldKanInverse dk = dk_inverse_data(c, T);
    NormalizedChains K = normalized_chains_data(dk.group);
    std::map<int, GroupHom> comps;
    ChainComplex ct = c;
    if (!c.empty() && c.max_degree() > T) {
        std::vector<FgAbGroup> gs;
        std::vector<IntMatrix> ds;
        for (int n = 0; n <= T; ++n) gs.push_back(c.group(n));
        for (int n = 1; n <= T; ++n) ds.push_back(c.d(n).matrix());
        ct = ChainComplex(0, gs, ds);
    }
    for (int n = 0; n <= T; ++n) {
        const FgAbGroup g = ct.group(n);
        const std::size_t off = dk.summand_offset[static_cast<std::size_t>(n)].back();  // identity surjection is last
        IntMatrix m(K.complex.group(n).num_generators(), g.num_generators());
        for (std::size_t j = 0; j < g.num_generators(); ++j) {
            IntVector x(dk.group.level(n).num_generators(), 0);
            x[off + j] = 1;
            IntVector img = K.from_level(n, x);
            for (std::size_t r = 0; r < m.rows(); ++r) m(r, j) = img[r];
        }
        comps.emplace(n, GroupHom(g, K.complex.group(n), std::move(m)));
    }
    return ChainMap(ct, K.complex, std::move(comps));
}

// W-bar: level n = G_{n-1} + ... + G_0 (level 0 trivial). Classical bar construction.
inline SimplicialAbGroup wbar(const SimplicialAbGroup& g) {
    const int T = g.truncation() + 1;
    std::vector<FgAbGroup> levels;
    std::vector<std::vector<std::size_t>> off;  // off[n][p] = offset of the G_{n-1-p} block
    for (int n = 0; n <= T; ++n) {
        IntMatrix rel(0, 0);
        off.emplace_back();
        for (int p = 0; p < n; ++p) {
            off.back().push_back(rel.rows());
            rel = IntMatrix::direct_sum(rel, g.level(n - 1 - p).relations());
        }
        levels.emplace_back(std::move(rel));
    }
    auto O = [&](int n, int p) { return off[static_cast<std::size_t>(n)][static_cast<std::size_t>(p)]; };
    auto dim = [&](int lvl) { return g.level(lvl).num_generators(); };
    std::vector<std::vector<GroupHom>> faces, degens;
    for (int n = 1; n <= T; ++n) {
        faces.emplace_back();
        for (int i = 0; i <= n; ++i) {
            IntMatrix M(levels[static_cast<std::size_t>(n - 1)].num_generators(), levels[static_cast<std::size_t>(n)].num_generators());
            // source entries: p = 0..n-1 holds g_{n-1-p}; target entries q = 0..n-2 hold G_{n-2-q}
            if (i == 0) {
                for (int q = 0; q < n - 1; ++q) M.set_block(O(n - 1, q), O(n, q + 1), IntMatrix::identity(dim(n - 2 - q)));
            } else if (i == n) {
                for (int q = 0; q < n - 1; ++q) M.set_block(O(n - 1, q), O(n, q), g.face(n - 1 - q, n - 1 - q).matrix());
            } else {
                for (int q = 0; q < n - 1; ++q) {
                    if (q < i - 1) {
                        M.set_block(O(n - 1, q), O(n, q), g.face(n - 1 - q, i - 1 - q).matrix());
                    } else if (q == i - 1) {
                        M.set_block(O(n - 1, q), O(n, q), g.face(n - 1 - q, 0).matrix());
                        M.set_block(O(n - 1, q), O(n, q + 1), IntMatrix::identity(dim(n - 2 - q)));
                    } else {
                        M.set_block(O(n - 1, q), O(n, q + 1), IntMatrix::identity(dim(n - 2 - q)));
                    }
                }
            }
            faces.back().emplace_back(levels[static_cast<std::size_t>(n)], levels[static_cast<std::size_t>(n - 1)], std::move(M));
        }
    }
    for (int n = 0; n < T; ++n) {
        degens.emplace_back();
        for (int i = 0; i <= n; ++i) {
            IntMatrix M(levels[static_cast<std::size_t>(n + 1)].num_generators(), levels[static_cast<std::size_t>(n)].num_generators());
            // target entries q = 0..n hold G_{n-q}; entry q = i is the identity element
            for (int q = 0; q <= n; ++q) {
                if (q < i) M.set_block(O(n + 1, q), O(n, q), g.degeneracy(n - 1 - q, i - 1 - q).matrix());
                else if (q > i) M.set_block(O(n + 1, q), O(n, q - 1), IntMatrix::identity(dim(n - q)));
            }
            degens.back().emplace_back(levels[static_cast<std::size_t>(n)], levels[static_cast<std::size_t>(n + 1)], std::move(M));
        }
    }
    return SimplicialAbGroup(std::move(levels), std::move(faces), std::move(degens));
}

}  // namespace omegacat
