#pragma once

#include <random>

#include "omegacat/algebra/finite_index.hpp"
#include "omegacat/descent/presheaf.hpp"

namespace omegacat::verify {

// Seeded generator; draws avoid distribution objects so sequences match across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : gen_() % n; }
    long long range(long long lo, long long hi) { return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
    bool chance(unsigned num, unsigned den) { return below(den) < num; }
    template <class T>
    const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

private:
    std::mt19937_64 gen_;
};

enum class Palette {
    Mixed,   // Z, Z/2, Z/3, Z/4, Z/2 + Z/2
    Finite,  // the finite ones above
    Small,   // Z/2, Z/3, Z/4
};

inline FgAbGroup random_group(Rng& rng, Palette p) {
    std::vector<std::vector<Integer>> options;
    switch (p) {
        case Palette::Mixed: options = {{0}, {2}, {3}, {4}, {2, 2}}; break;
        case Palette::Finite: options = {{2}, {3}, {4}, {2, 2}}; break;
        case Palette::Small: options = {{2}, {3}, {4}}; break;
    }
    return FgAbGroup::from_orders(rng.pick(options));
}

// Random element of a subgroup presented as a kernel, as an ambient vector.
inline IntVector random_element(Rng& rng, const Subquotient& sub) {
    const FgAbGroup& g = sub.group();
    IntVector c;
    for (const auto& m : g.moduli()) c.push_back(m == 0 ? Integer(rng.range(-2, 2)) : Integer(static_cast<long long>(rng.below(static_cast<std::uint64_t>(m)))));
    return sub.section(c);
}

// Random hom src -> tgt with image in the subgroup `into` (a kernel inside tgt). src must have diagonal relations.
inline GroupHom random_hom(Rng& rng, const FgAbGroup& src, const FgAbGroup& tgt, const Subquotient& into, unsigned zero_bias = 4) {
    IntMatrix m(tgt.num_generators(), src.num_generators());
    const IntMatrix& rel = src.relations();
    for (std::size_t j = 0; j < src.num_generators(); ++j) {
        Integer order = 0;
        for (std::size_t r = 0; r < rel.cols(); ++r)
            if (rel(j, r) != 0) order = abs_value(rel(j, r));
        for (int attempt = 0; attempt < 8; ++attempt) {
            if (rng.chance(1, zero_bias)) break;
            IntVector x = random_element(rng, into);
            if (order != 0 && !tgt.is_zero(scale_vector(x, order))) continue;
            for (std::size_t i = 0; i < x.size(); ++i) m(i, j) = x[i];
            break;
        }
    }
    return GroupHom(src, tgt, std::move(m));
}

inline GroupHom random_hom(Rng& rng, const FgAbGroup& src, const FgAbGroup& tgt) {
    return random_hom(rng, src, tgt, kernel_of(GroupHom::zero(tgt, FgAbGroup::trivial())));
}

// Complex on degrees lo..lo+len-1 with random differentials satisfying d^2 = 0.
inline ChainComplex random_complex(Rng& rng, Palette p, int max_len, int lo = 0) {
    const int len = static_cast<int>(rng.range(1, max_len));
    std::vector<FgAbGroup> groups;
    for (int i = 0; i < len; ++i) groups.push_back(random_group(rng, p));
    std::vector<IntMatrix> ds;
    GroupHom prev = GroupHom::zero(groups[0], FgAbGroup::trivial());
    for (int i = 1; i < len; ++i) {
        GroupHom d = random_hom(rng, groups[static_cast<std::size_t>(i)], groups[static_cast<std::size_t>(i - 1)], kernel_of(prev), 3);
        ds.push_back(d.matrix());
        prev = d;
    }
    return ChainComplex(lo, std::move(groups), std::move(ds));
}

inline Integer total_order(const ChainComplex& c) {
    Integer n = 1;
    for (const auto& g : c.groups()) n *= g.order();
    return n;
}

// Finite complex whose graded group has at most `max_order` elements.
inline ChainComplex random_finite_complex(Rng& rng, Palette p, int max_len, const Integer& max_order) {
    for (;;) {
        ChainComplex c = random_complex(rng, p, max_len);
        if (total_order(c) <= max_order) return c;
    }
}

// Every hom src -> tgt between finite groups with diagonal relations on src.
inline std::vector<GroupHom> all_homs(const FgAbGroup& src, const FgAbGroup& tgt) {
    FiniteIndex ti(tgt);
    const IntMatrix& rel = src.relations();
    std::vector<std::vector<IntVector>> options;
    for (std::size_t j = 0; j < src.num_generators(); ++j) {
        Integer order = 0;
        for (std::size_t r = 0; r < rel.cols(); ++r)
            if (rel(j, r) != 0) order = abs_value(rel(j, r));
        options.emplace_back();
        for (std::size_t e = 0; e < ti.size(); ++e) {
            IntVector x = ti.element(e);
            if (order == 0 || tgt.is_zero(scale_vector(x, order))) options.back().push_back(x);
        }
    }
    std::vector<GroupHom> out;
    std::vector<std::size_t> pick(options.size(), 0);
    for (;;) {
        IntMatrix m(tgt.num_generators(), src.num_generators());
        for (std::size_t j = 0; j < options.size(); ++j)
            for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = options[j][pick[j]][i];
        out.emplace_back(src, tgt, std::move(m));
        std::size_t j = 0;
        while (j < pick.size() && ++pick[j] == options[j].size()) pick[j++] = 0;
        if (j == pick.size()) break;
    }
    return out;
}

// Random chain map between finite complexes, chosen degree by degree among all valid components.
inline ChainMap random_chain_map(Rng& rng, const ChainComplex& a, const ChainComplex& b) {
    auto [lo, hi] = degree_span({&a, &b});
    // greedy choice can reach a degree with no admissible hom; retry, then fall back to zero
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::map<int, GroupHom> comps;
        GroupHom prev = GroupHom::zero(a.group(lo - 1), b.group(lo - 1));
        bool stuck = false;
        for (int n = lo; n <= hi && !stuck; ++n) {
            std::vector<GroupHom> ok;
            for (const auto& f : all_homs(a.group(n), b.group(n)))
                if (compose(b.d(n), f).equals(compose(prev, a.d(n)))) ok.push_back(f);
            if (ok.empty()) {
                stuck = true;
                break;
            }
            GroupHom f = rng.pick(ok);
            comps.emplace(n, f);
            prev = f;
        }
        if (!stuck) return ChainMap(a, b, std::move(comps));
    }
    return ChainMap(a, b, {});
}

// Random degree +1 maps h_n : a_n -> b_{n+1}.
inline std::map<int, GroupHom> random_degree_one(Rng& rng, const ChainComplex& a, const ChainComplex& b) {
    std::map<int, GroupHom> h;
    for (int n = a.min_degree(); n <= a.max_degree() && !a.empty(); ++n) h.emplace(n, random_hom(rng, a.group(n), b.group(n + 1)));
    return h;
}

// F + d h + h d.
inline ChainMap add_null_homotopic(const ChainMap& f, const std::map<int, GroupHom>& h) {
    auto get = [&](int n) {
        auto it = h.find(n);
        return it != h.end() ? it->second : GroupHom::zero(f.source().group(n), f.target().group(n + 1));
    };
    auto [lo, hi] = f.span();
    std::map<int, GroupHom> comps;
    for (int n = lo; n <= hi; ++n)
        comps.emplace(n, f.at(n) + compose(f.target().d(n + 1), get(n)) + compose(get(n - 1), f.source().d(n)));
    return ChainMap(f.source(), f.target(), std::move(comps));
}

// --- presheaves -------------------------------------------------------------------------------

// Opens on the point set {0,1,2}: X, up to three further nonempty opens closed under meets, and the empty open.
// Each open receives covers by proper subopens whose union is the open.
inline FiniteSite random_site(Rng& rng) {
    const unsigned full = 0b111;
    std::vector<unsigned> opens;
    for (;;) {
        opens = {full};
        const int extra = static_cast<int>(rng.range(1, 3));
        for (int i = 0; i < extra; ++i) {
            unsigned m = static_cast<unsigned>(rng.range(1, 6));
            if (std::find(opens.begin(), opens.end(), m) == opens.end()) opens.push_back(m);
        }
        for (bool grew = true; grew;) {
            grew = false;
            for (std::size_t i = 0; i < opens.size(); ++i)
                for (std::size_t j = 0; j < opens.size(); ++j) {
                    unsigned m = opens[i] & opens[j];
                    if (m && std::find(opens.begin(), opens.end(), m) == opens.end()) {
                        opens.push_back(m);
                        grew = true;
                    }
                }
        }
        if (opens.size() <= 4) break;
    }
    std::vector<std::pair<std::string, unsigned>> named;
    for (unsigned m : opens) {
        std::string name = m == full ? "X" : "U";
        if (m != full)
            for (int p = 0; p < 3; ++p)
                if (m >> p & 1u) name += std::to_string(p);
        named.emplace_back(name, m);
    }
    named.emplace_back("empty", 0u);
    FiniteSite s = point_set_site(named);
    for (std::size_t v = 0; v < opens.size(); ++v) {
        std::vector<int> below;
        unsigned cover_union = 0;
        for (std::size_t u = 0; u < opens.size(); ++u)
            if (u != v && (opens[u] & ~opens[v]) == 0) {
                below.push_back(static_cast<int>(u));
                cover_union |= opens[u];
            }
        if (!below.empty() && cover_union == opens[v]) {
            s.add_cover(static_cast<int>(v), below);
            // a smaller cover when one exists
            for (std::size_t drop = 0; drop < below.size(); ++drop) {
                unsigned rest = 0;
                std::vector<int> smaller;
                for (std::size_t k = 0; k < below.size(); ++k)
                    if (k != drop) {
                        smaller.push_back(below[k]);
                        rest |= opens[static_cast<std::size_t>(below[k])];
                    }
                if (!smaller.empty() && rest == opens[v] && rng.chance(1, 2)) {
                    s.add_cover(static_cast<int>(v), smaller);
                    break;
                }
            }
        }
        if (s.covers(static_cast<int>(v)).empty() && opens[v] == full) s.add_cover(static_cast<int>(v), {static_cast<int>(v)});
    }
    return s;
}

// Bitmask of points of each open, recovered from the order (points are the minimal nonempty opens' labels).
inline unsigned open_points(const FiniteSite& s, int a) {
    const std::string& n = s.name(a);
    if (n == "X") return 0b111;
    if (n == "empty") return 0;
    unsigned m = 0;
    for (std::size_t i = 1; i < n.size(); ++i) m |= 1u << (n[i] - '0');
    return m;
}

inline ChainMap block_projection(const ChainComplex& c, int copies_from, const std::vector<int>& keep) {
    // c^{copies_from} -> c^{keep.size()}, selecting copies by index
    ChainComplex src, tgt;
    for (int i = 0; i < copies_from; ++i) src = direct_sum(src, c);
    for (std::size_t i = 0; i < keep.size(); ++i) tgt = direct_sum(tgt, c);
    std::map<int, GroupHom> comps;
    for (int n = c.min_degree(); n <= c.max_degree() && !c.empty(); ++n) {
        const std::size_t g = c.group(n).num_generators();
        IntMatrix m(g * keep.size(), g * static_cast<std::size_t>(copies_from));
        for (std::size_t k = 0; k < keep.size(); ++k) m.set_block(k * g, static_cast<std::size_t>(keep[k]) * g, IntMatrix::identity(g));
        comps.emplace(n, GroupHom(src.group(n), tgt.group(n), std::move(m)));
    }
    return ChainMap(src, tgt, std::move(comps));
}

// F(U) = c^{points of U in S}, restrictions project onto the surviving points. Levelwise a sheaf.
inline Presheaf point_presheaf(std::shared_ptr<const FiniteSite> site, const ChainComplex& c, unsigned S) {
    const int n = static_cast<int>(site->size());
    std::vector<std::vector<int>> pts(static_cast<std::size_t>(n));
    std::vector<ChainComplex> cs;
    for (int a = 0; a < n; ++a) {
        ChainComplex x;
        for (int p = 0; p < 3; ++p)
            if (open_points(*site, a) & S & (1u << p)) {
                pts[static_cast<std::size_t>(a)].push_back(p);
                x = direct_sum(x, c);
            }
        cs.push_back(x);
    }
    std::map<std::pair<int, int>, ChainMap> given;
    for (auto [a, b] : site->covering_relations()) {
        const auto& pb = pts[static_cast<std::size_t>(b)];
        std::vector<int> keep;
        for (int p : pts[static_cast<std::size_t>(a)]) keep.push_back(static_cast<int>(std::find(pb.begin(), pb.end(), p) - pb.begin()));
        ChainMap m = block_projection(c, static_cast<int>(pb.size()), keep);
        std::map<int, GroupHom> comps;
        for (int k = c.min_degree(); k <= c.max_degree() && !c.empty(); ++k) comps.emplace(k, m.at(k));
        given.emplace(std::pair{a, b}, ChainMap(cs[static_cast<std::size_t>(b)], cs[static_cast<std::size_t>(a)], std::move(comps)));
    }
    return Presheaf(std::move(site), std::move(cs), given);
}

// F(U) = c for lo <= U <= hi, zero otherwise; identity restrictions inside the interval.
inline Presheaf interval_presheaf(std::shared_ptr<const FiniteSite> site, const ChainComplex& c, int lo, int hi) {
    const int n = static_cast<int>(site->size());
    std::vector<ChainComplex> cs;
    auto inside = [&](int a) { return a != site->empty_open() && site->leq(lo, a) && site->leq(a, hi); };
    for (int a = 0; a < n; ++a) cs.push_back(inside(a) ? c : ChainComplex());
    std::map<std::pair<int, int>, ChainMap> given;
    for (auto [a, b] : site->covering_relations())
        given.emplace(std::pair{a, b}, inside(a) && inside(b) ? ChainMap::identity(c)
                                                             : ChainMap(cs[static_cast<std::size_t>(b)], cs[static_cast<std::size_t>(a)], {}));
    return Presheaf(std::move(site), std::move(cs), given);
}

inline Presheaf direct_sum(const Presheaf& f, const Presheaf& g) {
    const int n = static_cast<int>(f.site().size());
    std::vector<ChainComplex> cs;
    for (int a = 0; a < n; ++a) cs.push_back(direct_sum(f.at(a), g.at(a)));
    std::map<std::pair<int, int>, ChainMap> given;
    for (auto [a, b] : f.site().covering_relations()) {
        ChainMap x = f.restriction(a, b), y = g.restriction(a, b);
        std::map<int, GroupHom> comps;
        const ChainComplex &src = cs[static_cast<std::size_t>(b)], &tgt = cs[static_cast<std::size_t>(a)];
        for (int k = src.min_degree(); k <= src.max_degree() && !src.empty(); ++k) {
            // blocks follow direct_sum(ChainComplex) layout: f part first
            IntMatrix m(tgt.group(k).num_generators(), src.group(k).num_generators());
            m.set_block(0, 0, x.at(k).matrix());
            m.set_block(x.at(k).matrix().rows(), x.at(k).matrix().cols(), y.at(k).matrix());
            comps.emplace(k, GroupHom(src.group(k), tgt.group(k), std::move(m)));
        }
        given.emplace(std::pair{a, b}, ChainMap(src, tgt, std::move(comps)));
    }
    return Presheaf(f.site_ptr(), std::move(cs), given);
}

// Sum of one or two point sheaves and interval presheaves with coefficients in Z/2, Z/3, Z/4, degrees <= 3.
inline Presheaf random_presheaf(Rng& rng, std::shared_ptr<const FiniteSite> site, int max_len = 3) {
    std::vector<int> nonempty;
    for (int a = 0; a < static_cast<int>(site->size()); ++a)
        if (a != site->empty_open()) nonempty.push_back(a);
    auto piece = [&]() {
        ChainComplex c = random_complex(rng, Palette::Small, max_len);
        if (rng.chance(1, 2)) return point_presheaf(site, c, static_cast<unsigned>(rng.range(1, 7)));
        for (;;) {
            int lo = rng.pick(nonempty), hi = rng.pick(nonempty);
            if (site->leq(lo, hi)) return interval_presheaf(site, c, lo, hi);
        }
    };
    Presheaf f = piece();
    if (rng.chance(1, 2)) f = direct_sum(f, piece());
    return f;
}

}  // namespace omegacat::verify
