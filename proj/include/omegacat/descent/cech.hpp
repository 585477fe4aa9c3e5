#pragma once

#include "omegacat/descent/presheaf.hpp"

namespace omegacat {

// Index tuples i_0 < ... < i_p into a cover.
inline std::vector<std::vector<std::vector<int>>> increasing_tuples(int m) {
    std::vector<std::vector<std::vector<int>>> out(static_cast<std::size_t>(m));
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> t;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1u) t.push_back(i);
        out[t.size() - 1].push_back(t);
    }
    for (auto& level : out) std::sort(level.begin(), level.end());
    return out;
}

// Tuples of length p+1 over {0..m-1} with no two adjacent entries equal, for p <= p_max.
inline std::vector<std::vector<std::vector<int>>> nondegenerate_tuples(int m, int p_max) {
    std::vector<std::vector<std::vector<int>>> out(static_cast<std::size_t>(p_max + 1));
    for (int i = 0; i < m; ++i) out[0].push_back({i});
    for (int p = 1; p <= p_max; ++p)
        for (const auto& t : out[static_cast<std::size_t>(p - 1)])
            for (int i = 0; i < m; ++i)
                if (i != t.back()) {
                    auto u = t;
                    u.push_back(i);
                    out[static_cast<std::size_t>(p)].push_back(std::move(u));
                }
    return out;
}

struct CechComplex {
    BigradedComplex bigraded;
    TotalComplex total;
    ChainMap augmentation;  // F(V) -> Tot
    std::vector<std::vector<std::vector<int>>> tuples;  // tuples[p], indices into the cover
    std::vector<int> cover;
};

namespace detail {

// Builds rows over the given tuples; the face j of a tuple drops entry j (zero if it is not listed).
inline CechComplex cech_from_tuples(const Presheaf& f, int v, const std::vector<int>& cover,
                                    std::vector<std::vector<std::vector<int>>> tuples) {
    const FiniteSite& s = f.site();
    CechComplex out;
    out.cover = cover;
    auto open_of = [&](const std::vector<int>& t) {
        std::vector<int> opens;
        for (int i : t) opens.push_back(cover[static_cast<std::size_t>(i)]);
        return s.meet(opens);
    };
    const int P = static_cast<int>(tuples.size()) - 1;
    const int Q = std::max(0, f.max_degree());
    std::vector<std::map<std::vector<int>, std::size_t>> index(tuples.size());
    std::vector<std::vector<int>> opens(tuples.size());
    for (int p = 0; p <= P; ++p)
        for (std::size_t k = 0; k < tuples[static_cast<std::size_t>(p)].size(); ++k) {
            index[static_cast<std::size_t>(p)][tuples[static_cast<std::size_t>(p)][k]] = k;
            opens[static_cast<std::size_t>(p)].push_back(open_of(tuples[static_cast<std::size_t>(p)][k]));
        }
    // per (p, q): offsets of each tuple's block
    auto offsets = [&](int p, int q) {
        std::vector<std::size_t> off;
        std::size_t acc = 0;
        for (int w : opens[static_cast<std::size_t>(p)]) {
            off.push_back(acc);
            acc += f.at(w).group(q).num_generators();
        }
        off.push_back(acc);
        return off;
    };
    BigradedComplex& b = out.bigraded;
    for (int p = 0; p <= P; ++p)
        for (int q = 0; q <= Q; ++q) {
            IntMatrix rel(0, 0);
            for (int w : opens[static_cast<std::size_t>(p)]) rel = IntMatrix::direct_sum(rel, f.at(w).group(q).relations());
            b.set_group(p, q, FgAbGroup(std::move(rel)));
        }
    for (int p = 0; p <= P; ++p)
        for (int q = 0; q <= Q; ++q) {
            const auto off = offsets(p, q);
            if (q >= 1) {
                const auto off_below = offsets(p, q - 1);
                IntMatrix d(off_below.back(), off.back());
                for (std::size_t k = 0; k < opens[static_cast<std::size_t>(p)].size(); ++k)
                    d.set_block(off_below[k], off[k], f.at(opens[static_cast<std::size_t>(p)][k]).d(q).matrix());
                b.set_vertical(p, q, std::move(d));
            }
            if (p < P) {
                const auto off_next = offsets(p + 1, q);
                IntMatrix delta(off_next.back(), off.back());
                const auto& next = tuples[static_cast<std::size_t>(p + 1)];
                for (std::size_t k = 0; k < next.size(); ++k)
                    for (std::size_t j = 0; j < next[k].size(); ++j) {
                        std::vector<int> face = next[k];
                        face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
                        auto it = index[static_cast<std::size_t>(p)].find(face);
                        if (it == index[static_cast<std::size_t>(p)].end()) continue;
                        const int src = opens[static_cast<std::size_t>(p)][it->second];
                        IntMatrix r = f.restriction(opens[static_cast<std::size_t>(p + 1)][k], src).at(q).matrix();
                        if (j % 2 == 1) r = r.scaled(-1);
                        IntMatrix acc = delta.block(off_next[k], off[it->second], r.rows(), r.cols());
                        delta.set_block(off_next[k], off[it->second], acc + r);
                    }
                b.set_horizontal(p, q, std::move(delta));
            }
        }
    out.total = total_complex(b);
    std::map<int, GroupHom> aug;
    for (int q = 0; q <= Q; ++q) {
        const FgAbGroup src = f.at(v).group(q);
        const FgAbGroup tgt = out.total.complex.group(q);
        IntMatrix m(tgt.num_generators(), src.num_generators());
        const std::size_t base = out.total.offset(q, 0);
        const auto off = offsets(0, q);
        for (std::size_t k = 0; k < opens[0].size(); ++k)
            m.set_block(base + off[k], 0, f.restriction(opens[0][k], v).at(q).matrix());
        aug.emplace(q, GroupHom(src, tgt, std::move(m)));
    }
    out.augmentation = ChainMap(f.at(v), out.total.complex, std::move(aug));
    out.tuples = std::move(tuples);
    return out;
}

}  // namespace detail

// Alternating Cech double complex of f over the cover u of v, its total complex and augmentation.
inline CechComplex cech_total(const Presheaf& f, int v, const std::vector<int>& u) {
    if (u.empty()) throw PreconditionViolated("empty cover");
    return detail::cech_from_tuples(f, v, u, increasing_tuples(static_cast<int>(u.size())));
}

// Normalized Cech complex over all ordered tuples without repeated neighbours, rows p <= p_max.
inline CechComplex cech_total_full(const Presheaf& f, int v, const std::vector<int>& u, int p_max) {
    if (u.empty()) throw PreconditionViolated("empty cover");
    return detail::cech_from_tuples(f, v, u, nondegenerate_tuples(static_cast<int>(u.size()), p_max));
}

struct CechVerdict {
    int open = -1;
    std::size_t cover = 0;
    std::vector<int> failing_degrees;
    bool ok() const { return failing_degrees.empty(); }
};

struct CechDescentReport {
    std::vector<CechVerdict> entries;
    bool ok() const {
        return std::all_of(entries.begin(), entries.end(), [](const CechVerdict& v) { return v.ok(); });
    }
};

// Augmentation iso on H_n for n >= 0, at every open and cover.
inline CechVerdict cech_descent_at(const Presheaf& f, int v, std::size_t ci) {
    CechVerdict verdict{v, ci, {}};
    CechComplex c = cech_total(f, v, f.site().covers(v)[ci]);
    int top = std::max(f.at(v).empty() ? 0 : f.at(v).max_degree(), c.total.complex.max_degree());
    for (int n = 0; n <= top; ++n)
        if (!is_isomorphism(induced_on_homology(c.augmentation, n))) verdict.failing_degrees.push_back(n);
    return verdict;
}

inline CechDescentReport cech_descent_check(const Presheaf& f) {
    CechDescentReport r;
    for (int v = 0; v < static_cast<int>(f.site().size()); ++v)
        for (std::size_t ci = 0; ci < f.site().covers(v).size(); ++ci) r.entries.push_back(cech_descent_at(f, v, ci));
    return r;
}

// H^n of the alternating Cech cochains of a degree-0 presheaf.
inline FgAbGroup cech_cohomology(const Presheaf& g, int n, int v, const std::vector<int>& u) {
    if (n < 0) throw PreconditionViolated("negative cohomological degree");
    const FiniteSite& s = g.site();
    const int m = static_cast<int>(u.size());
    if (n >= m) return FgAbGroup::trivial();
    (void)v;
    const auto tuples = increasing_tuples(m);
    auto open_of = [&](const std::vector<int>& t) {
        std::vector<int> opens;
        for (int i : t) opens.push_back(u[static_cast<std::size_t>(i)]);
        return s.meet(opens);
    };
    // cochain degree p sits in homological degree -p
    std::vector<FgAbGroup> groups;
    std::vector<std::vector<std::size_t>> offs;
    for (int p = m - 1; p >= 0; --p) {
        IntMatrix rel(0, 0);
        offs.emplace_back();
        for (const auto& t : tuples[static_cast<std::size_t>(p)]) {
            offs.back().push_back(rel.rows());
            rel = IntMatrix::direct_sum(rel, g.at(open_of(t)).group(0).relations());
        }
        groups.emplace_back(std::move(rel));
    }
    std::reverse(offs.begin(), offs.end());  // offs[p]
    std::vector<IntMatrix> ds;                // d_{-p+1} = delta^{p-1}
    for (int p = m - 1; p >= 1; --p) {
        const auto& src_t = tuples[static_cast<std::size_t>(p - 1)];
        const auto& tgt_t = tuples[static_cast<std::size_t>(p)];
        IntMatrix d(groups[static_cast<std::size_t>(m - 1 - p)].num_generators(), groups[static_cast<std::size_t>(m - p)].num_generators());
        for (std::size_t k = 0; k < tgt_t.size(); ++k)
            for (std::size_t j = 0; j < tgt_t[k].size(); ++j) {
                std::vector<int> face = tgt_t[k];
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
                std::size_t fk = static_cast<std::size_t>(std::find(src_t.begin(), src_t.end(), face) - src_t.begin());
                IntMatrix r = g.restriction(open_of(tgt_t[k]), open_of(face)).at(0).matrix();
                d.set_block(offs[static_cast<std::size_t>(p)][k], offs[static_cast<std::size_t>(p - 1)][fk], j % 2 == 1 ? r.scaled(-1) : r);
            }
        ds.push_back(std::move(d));
    }
    ChainComplex cochains(-(m - 1), std::move(groups), std::move(ds));
    return homology(cochains, -n);
}

}  // namespace omegacat
