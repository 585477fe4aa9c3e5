#pragma once

#include "omegacat/algebra/finite_index.hpp"
#include "omegacat/omega/axioms.hpp"
#include "omegacat/pic/seq_pair.hpp"

namespace omegacat {

// Lookup-table realization of a finite Picard omega-category. Elements are indexed by the
// canonical order of the underlying group. Level k of the table is level k + offset of `a`
// (offset = min_level - 1 for Z-indexed categories, where everything below collapses to 0).
struct PicRealization {
    std::shared_ptr<const FiniteOmegaCat> cat;
    FiniteIndex index;
    int offset = 0;

    std::size_t add(std::size_t x, std::size_t y) const { return index.add(x, y); }
    std::size_t neg(std::size_t x) const { return index.neg(x); }
};

inline PicRealization from_pic(const PicOmegaCat& a) {
    PicRealization r;
    r.index = FiniteIndex(a.group());
    r.offset = a.z_indexed() ? a.min_level() - 1 : 0;
    const int N = a.max_level() - r.offset;
    const std::size_t n = r.index.size();
    auto cat = std::make_shared<FiniteOmegaCat>(n, N);
    for (int k = 0; k <= N; ++k) {
        FiniteHomTable s(a.s(k + r.offset), r.index, r.index), t(a.t(k + r.offset), r.index, r.index);
        for (std::size_t x = 0; x < n; ++x) {
            cat->set_s(k, static_cast<int>(x), static_cast<int>(s(x)));
            cat->set_t(k, static_cast<int>(x), static_cast<int>(t(x)));
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        std::string nm;
        for (auto c : r.index.canonical_of_index(x)) nm += (nm.empty() ? "" : ",") + std::to_string(c);
        cat->set_name(static_cast<int>(x), "[" + nm + "]");
    }
    const FiniteIndex& idx = r.index;
    fill_compositions(*cat, [&](int k, int x, int y) {
        return static_cast<int>(idx.sub(idx.add(static_cast<std::size_t>(x), static_cast<std::size_t>(y)),
                                        static_cast<std::size_t>(cat->s(k, x))));
    });
    r.cat = std::move(cat);
    return r;
}

// Functor between realizations induced by a structure-preserving group map.
inline OmegaFunctor realize_map(const GroupHom& f, const PicRealization& a, const PicRealization& b) {
    FiniteHomTable tab(f, a.index, b.index);
    OmegaFunctor F{a.cat, b.cat, std::vector<int>(a.index.size())};
    for (std::size_t x = 0; x < a.index.size(); ++x) F.map[x] = static_cast<int>(tab(x));
    return F;
}

// A[k]^{0,0}: kernel of s_{k-1} and t_{k-1}, structure maps shifted by k. Picard again.
struct PicHomSub {
    PicOmegaCat cat;
    Subquotient inclusion;  // presents the subgroup inside the parent group
};

inline PicHomSub hom_sub_pic(const PicOmegaCat& a, int k) {
    const FgAbGroup& A = a.group();
    FgAbGroup AA = FgAbGroup::direct_sum(A, A);
    IntMatrix st = IntMatrix::vstack(a.s(k - 1).matrix(), a.t(k - 1).matrix());
    Subquotient sub = kernel_of(GroupHom(A, AA, st));
    const FgAbGroup& H = sub.group();
    auto restrict = [&](const GroupHom& f) {
        IntMatrix m(H.num_generators(), H.num_generators());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            IntVector img = sub.project(f.matrix().apply(sub.section(H.generator(j))));
            for (std::size_t r = 0; r < m.rows(); ++r) m(r, j) = img[r];
        }
        return GroupHom(H, H, std::move(m));
    };
    std::vector<GroupHom> s, t;
    const int lo = a.z_indexed() ? a.min_level() - k : 0;
    for (int j = lo; j <= std::max(lo, a.max_level() - k); ++j) {
        s.push_back(restrict(a.s(j + k)));
        t.push_back(restrict(a.t(j + k)));
    }
    return {PicOmegaCat(H, lo, std::move(s), std::move(t), a.z_indexed()), std::move(sub)};
}

// Translation A[k]^{x,y} -> A[k]^{0,0}, z |-> z - w for any fixed w in A[k]^{x,y}.
// Returns the realization-level map (as element indices), or empty when A[k]^{x,y} is empty.
inline std::vector<int> hom_sub_translation(const PicRealization& r, const HomSubcategory& xy, const HomSubcategory& zero) {
    std::vector<int> out;
    if (xy.embedding.empty()) return out;
    const std::size_t w = static_cast<std::size_t>(xy.embedding.front());
    std::vector<int> back(r.index.size(), -1);
    for (std::size_t u = 0; u < zero.embedding.size(); ++u) back[static_cast<std::size_t>(zero.embedding[u])] = static_cast<int>(u);
    for (int z : xy.embedding) out.push_back(back[r.index.sub(static_cast<std::size_t>(z), w)]);
    return out;
}

// Free Picard category on a finite omega-category, with composites forced to x + y - s x.
struct FreePic {
    PicOmegaCat cat;
    std::vector<IntVector> unit;  // x |-> e_x
};

inline FreePic free_pic(const FiniteOmegaCat& a) {
    const std::size_t n = a.size();
    const int N = a.stabilization();
    std::vector<IntVector> rels;
    for (int i = 0; i <= N; ++i)
        for (int x = 0; x < static_cast<int>(n); ++x)
            for (int y = 0; y < static_cast<int>(n); ++y) {
                int z = a.compose(i, x, y);
                if (z < 0) continue;
                IntVector v(n, 0);
                v[static_cast<std::size_t>(z)] += 1;
                v[static_cast<std::size_t>(x)] -= 1;
                v[static_cast<std::size_t>(y)] -= 1;
                v[static_cast<std::size_t>(a.s(i, x))] += 1;
                if (!is_zero_vector(v)) rels.push_back(std::move(v));
            }
    FgAbGroup G(IntMatrix::from_columns(n, rels));
    std::vector<GroupHom> s, t;
    for (int i = 0; i <= N; ++i) {
        IntMatrix sm(n, n), tm(n, n);
        for (std::size_t x = 0; x < n; ++x) {
            sm(static_cast<std::size_t>(a.s(i, static_cast<int>(x))), x) = 1;
            tm(static_cast<std::size_t>(a.t(i, static_cast<int>(x))), x) = 1;
        }
        s.emplace_back(G, G, std::move(sm));
        t.emplace_back(G, G, std::move(tm));
    }
    FreePic f{PicOmegaCat(G, 0, std::move(s), std::move(t), false), {}};
    for (std::size_t x = 0; x < n; ++x) f.unit.push_back(unit_vector(n, x));
    return f;
}

// Homotopy between P(F) and P(G) as a degree +1 map of graded groups.
inline GroupHom homotopy_to_pic(const ChainHomotopy& h) {
    const ChainComplex& A = h.F.source();
    const ChainComplex& B = h.F.target();
    GradedLayout La(A), Lb(B);
    IntMatrix m(Lb.total, La.total);
    for (int n = La.lo; n <= La.hi; ++n)
        if (n + 1 >= Lb.lo && n + 1 <= Lb.hi) m.set_block(Lb.at(n + 1), La.at(n), h.at(n).matrix());
    return GroupHom(graded_group(A), graded_group(B), std::move(m));
}

// Inverse conversion; H must send A_n into B_{n+1} and satisfy s_n H (s_n - s_{n-1}) = 0.
inline ChainHomotopy homotopy_from_pic(const ChainMap& F, const ChainMap& G, const GroupHom& H) {
    const ChainComplex& A = F.source();
    const ChainComplex& B = F.target();
    PicOmegaCat pa = p_of(A), pb = p_of(B);
    const int lo = std::min(pa.min_level(), pb.min_level());
    const int hi = std::max(pa.max_level(), pb.max_level());
    for (int n = lo; n <= hi; ++n) {
        if (!compose(pb.s(n + 1), compose(H, pa.s(n))).equals(compose(H, pa.s(n))))
            throw NotAHomotopy("H does not send level " + std::to_string(n) + " into level " + std::to_string(n + 1));
        GroupHom below = (n == 0 && !pa.z_indexed()) ? GroupHom::zero(pa.group(), pa.group()) : pa.s(n - 1);
        if (!compose(pb.s(n), compose(H, pa.s(n) - below)).is_zero())
            throw NotAHomotopy("s_n H (s_n - s_{n-1}) != 0 at level " + std::to_string(n));
    }
    ChainHomotopy out{F, G, {}};
    for (int n = A.min_degree(); n <= A.max_degree() && !A.empty(); ++n) {
        const FgAbGroup src = A.group(n), tgt = B.group(n + 1);
        IntMatrix m(tgt.num_generators(), src.num_generators());
        for (std::size_t j = 0; j < src.num_generators(); ++j) {
            IntVector img = H.matrix().apply(graded_embed(A, n, src.generator(j)));
            if (tgt.num_generators() == 0) continue;
            IntVector comp = graded_component(B, n + 1, img);
            for (std::size_t r = 0; r < m.rows(); ++r) m(r, j) = comp[r];
        }
        out.h.emplace(n, GroupHom(src, tgt, std::move(m)));
    }
    return out;
}

// D H + H D == P(G) - P(F), with D computed from the structure maps.
inline bool pic_homotopy_identity(const ChainHomotopy& h, const GroupHom& H) {
    GroupHom Da = pic_differential(p_of(h.F.source()));
    GroupHom Db = pic_differential(p_of(h.F.target()));
    return (compose(Db, H) + compose(H, Da)).equals(p_of_map(h.G) - p_of_map(h.F));
}

struct PicardIdentityReport {
    bool inverse_sum = true;    // f + f^{-1} = id_{x+y}
    bool composite_sum = true;  // id_b + g o f = g + f
    bool additive_inverse = true;
    std::string witness;
    bool ok() const { return inverse_sum && composite_sum && additive_inverse; }
};

// Exhaustive check of the strict Picard identities on level-1 cells of a finite realization.
inline PicardIdentityReport strict_picard_identities(const PicRealization& r) {
    PicardIdentityReport rep;
    const FiniteOmegaCat& a = *r.cat;
    const int n = static_cast<int>(a.size());
    const int zero = static_cast<int>(r.index.index_of_canonical(std::vector<std::int64_t>(r.index.dim(), 0)));
    for (int f = 0; f < n; ++f) {
        if (a.s(1, f) != f) continue;
        int x = a.s(0, f), y = a.t(0, f);
        int inv = inverse_at(a, 0, f);
        if (inv < 0 || static_cast<int>(r.add(static_cast<std::size_t>(f), static_cast<std::size_t>(inv))) !=
                           static_cast<int>(r.add(static_cast<std::size_t>(x), static_cast<std::size_t>(y)))) {
            rep.inverse_sum = false;
            rep.witness = "f + f^-1 != id_{x+y} at " + a.name(f);
        }
        int mf = static_cast<int>(r.neg(static_cast<std::size_t>(f)));
        if (static_cast<int>(r.add(static_cast<std::size_t>(f), static_cast<std::size_t>(mf))) != zero ||
            static_cast<int>(r.add(static_cast<std::size_t>(f), static_cast<std::size_t>(zero))) != f) {
            rep.additive_inverse = false;
            rep.witness = "additive inverse fails at " + a.name(f);
        }
        for (int g = 0; g < n; ++g) {
            if (a.s(1, g) != g || a.s(0, g) != y) continue;
            int gf = a.compose(0, g, f);
            if (gf < 0 || r.add(static_cast<std::size_t>(y), static_cast<std::size_t>(gf)) !=
                              r.add(static_cast<std::size_t>(g), static_cast<std::size_t>(f))) {
                rep.composite_sum = false;
                rep.witness = "id_b + g o f != g + f at " + a.name(g) + " o " + a.name(f);
            }
        }
    }
    return rep;
}

}  // namespace omegacat
