#include <gtest/gtest.h>

#include "omegacat/pic/realize.hpp"
#include "omegacat/verify/random.hpp"
#include "oracle.hpp"

using namespace omegacat;

namespace {

const FgAbGroup Z2 = FgAbGroup::cyclic(2);

// Counts sequences of pairs (x_i^-, x_i^+) by brute force: d x_i^a = x_{i-1}^+ - x_{i-1}^-, top pair diagonal.
std::size_t count_seq_pairs(const ChainComplex& c) {
    if (c.empty()) return 1;
    std::vector<oracle::Group> g;
    std::vector<oracle::Hom> d;  // d[i - lo] : c_i -> c_{i-1}
    for (int i = c.min_degree(); i <= c.max_degree(); ++i) {
        g.push_back(oracle::from_library(c.group(i)));
        if (i > c.min_degree()) d.push_back(oracle::from_library(c.d(i)));
    }
    const std::size_t L = g.size();
    std::size_t count = 0;
    std::vector<std::size_t> minus(L), plus(L);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == L) {
            if (minus[L - 1] == plus[L - 1]) ++count;
            return;
        }
        for (std::size_t m = 0; m < g[i].size(); ++m)
            for (std::size_t p = 0; p < g[i].size(); ++p) {
                if (i > 0) {
                    const auto& G = g[i - 1];
                    std::size_t diff = G.add(plus[i - 1], G.times(minus[i - 1], -1));
                    if (d[i - 1](m) != diff || d[i - 1](p) != diff) continue;
                }
                minus[i] = m;
                plus[i] = p;
                rec(i + 1);
            }
    };
    rec(0);
    return count;
}

}  // namespace

TEST(PicOf, ElementCounts) {
    EXPECT_EQ(p_of(ChainComplex::concentrated(0, Z2)).group().order(), 2);
    EXPECT_EQ(p_of(ChainComplex(0, {Z2, Z2}, {IntMatrix(1, 1)})).group().order(), 4);
    EXPECT_EQ(p_of(ChainComplex()).group().order(), 1);
}

TEST(PicOf, SeqPairCountsMatchBruteForce) {
    verify::Rng rng(31);
    for (int i = 0; i < 40; ++i) {
        ChainComplex c = verify::random_finite_complex(rng, verify::Palette::Finite, 3, 32);
        const std::size_t expected = count_seq_pairs(c);
        ASSERT_EQ(SeqPairPic(c).cat().group().order(), Integer(expected));
        ASSERT_EQ(p_of(c).group().order(), Integer(expected));
    }
}

TEST(QOf, RoundTrips) {
    ChainComplex doubling(0, {FgAbGroup::free(1), FgAbGroup::free(1)}, {IntMatrix::from_rows({{2}})});
    EXPECT_TRUE(is_chain_iso(qp_unit(doubling)));
    EXPECT_EQ(homology(q_of(p_of(doubling)), 0).describe(), "Z/2");
    ChainComplex trivial_q = q_of(p_of(ChainComplex()));
    for (int n = trivial_q.min_degree(); n <= trivial_q.max_degree() && !trivial_q.empty(); ++n)
        EXPECT_TRUE(trivial_q.group(n).is_trivial());
    ChainComplex z4 = ChainComplex::concentrated(2, FgAbGroup::cyclic(4));
    ChainComplex q = q_of(p_of(z4));
    EXPECT_EQ(q.group(2).describe(), "Z/4");
    for (int n = q.min_degree(); n <= q.max_degree(); ++n)
        if (n != 2) {
            EXPECT_TRUE(q.group(n).is_trivial()) << n;
        }
}

TEST(Elements, UnitLaw) {
    ChainComplex c(0, {FgAbGroup::from_orders({2, 2}), Z2}, {IntMatrix::from_rows({{1}, {0}})});
    PicOmegaCat a = p_of(c);
    for (const auto& x : enumerate_elements(a.group()))
        for (int n = 0; n <= a.max_level(); ++n) {
            EXPECT_TRUE(a.group().equal(a.compose(x, a.source(x, n), n), x));
            EXPECT_TRUE(a.group().equal(a.compose(a.target(x, n), x, n), x));
        }
}

TEST(Elements, InterchangeExhaustive) {
    ChainComplex c(0, {Z2, Z2, Z2}, {IntMatrix(1, 1), IntMatrix(1, 1)});
    PicOmegaCat a = p_of(c);
    const auto els = enumerate_elements(a.group());
    const FgAbGroup& G = a.group();
    std::size_t checked = 0;
    for (const auto& p : els)
        for (const auto& q : els)
            for (const auto& u : els)
                for (const auto& v : els) {
                    // (p *_1 q) *_0 (u *_1 v) = (p *_0 u) *_1 (q *_0 v)
                    if (!a.composable(p, q, 1) || !a.composable(u, v, 1) || !a.composable(p, u, 0) || !a.composable(q, v, 0)) continue;
                    ++checked;
                    ASSERT_TRUE(G.equal(a.compose(a.compose(p, q, 1), a.compose(u, v, 1), 0),
                                        a.compose(a.compose(p, u, 0), a.compose(q, v, 0), 1)));
                }
    EXPECT_GT(checked, 0u);
}

TEST(Elements, MismatchedCompositionThrows) {
    PicOmegaCat a = p_of(ChainComplex(0, {Z2, Z2}, {IntMatrix::identity(1)}));
    // a 1-cell from 0 to 1 composed with itself at level 0
    IntVector f = graded_embed(ChainComplex(0, {Z2, Z2}, {IntMatrix::identity(1)}), 1, {1});
    EXPECT_THROW(a.compose(f, f, 0), NotComposable);
}

TEST(GradedIso, Formula) {
    ChainComplex c(0, {FgAbGroup::cyclic(4), FgAbGroup::cyclic(4)}, {IntMatrix::from_rows({{2}})});
    IntVector x = add_vectors(graded_embed(c, 0, {1}), graded_embed(c, 1, {3}));
    SeqPairElement p = graded_to_seqpair(c, x);
    EXPECT_TRUE(c.group(0).equal(p.at(0).first, {1}));
    EXPECT_TRUE(c.group(0).equal(p.at(0).second, {1 + 2 * 3}));
    EXPECT_TRUE(c.group(1).equal(p.at(1).first, {3}));
    EXPECT_TRUE(c.group(1).equal(p.at(1).second, {3}));
    SeqPairElement zero = graded_to_seqpair(c, graded_group(c).zero());
    EXPECT_TRUE(seqpair_equal(c, zero, seqpair_zero(c)));
}

TEST(GradedIso, RoundTripOnEightElements) {
    ChainComplex c(0, {Z2, Z2, Z2}, {IntMatrix(1, 1), IntMatrix(1, 1)});
    const auto els = enumerate_elements(graded_group(c));
    ASSERT_EQ(els.size(), 8u);
    for (const auto& x : els) {
        SeqPairElement p = graded_to_seqpair(c, x);
        ASSERT_TRUE(seqpair_valid(c, p));
        ASSERT_TRUE(graded_group(c).equal(seqpair_to_graded(c, p), x));
    }
    SeqPairPic sp(c);
    GroupHom phi = graded_iso(c, sp);
    EXPECT_TRUE(is_isomorphism(phi));
    EXPECT_TRUE(preserves_structure(phi, p_of(c), sp.cat()));
}

TEST(HomSub, LoopsAtZeroAreTheLoopComplex) {
    verify::Rng rng(12);
    for (int i = 0; i < 30; ++i) {
        ChainComplex c = verify::random_complex(rng, verify::Palette::Mixed, 4);
        PicOmegaCat a = p_of(c);
        ChainComplex lhs = q_of(hom_sub_pic(a, 1).cat), rhs = loop(q_of(a));
        for (int n = 0; n <= std::max(lhs.max_degree(), rhs.max_degree()); ++n)
            ASSERT_TRUE(group_iso_test(lhs.group(n), rhs.group(n)));
        for (int n = 0; n <= std::max(lhs.max_degree(), rhs.max_degree()); ++n)
            ASSERT_TRUE(group_iso_test(homology(lhs, n), homology(rhs, n)));
    }
}

TEST(HomSub, TrivialAndPrescribedEndpoints) {
    PicRealization t = from_pic(p_of(ChainComplex()));
    EXPECT_EQ(hom_sub(*t.cat, 1, 0, 0).cat.size(), 1u);
    ChainComplex c(0, {Z2, Z2}, {IntMatrix::identity(1)});
    PicRealization r = from_pic(p_of(c));
    const int zero = static_cast<int>(r.index.index_of(graded_embed(c, 0, {0})));
    const int one = static_cast<int>(r.index.index_of(graded_embed(c, 0, {1})));
    HomSubcategory h = hom_sub(*r.cat, 1, zero, one);
    // direct count: (a0, a1) with a0 = 0 and a0 + a1 = 1 over Z/2
    std::size_t expected = 0;
    for (int a0 = 0; a0 < 2; ++a0)
        for (int a1 = 0; a1 < 2; ++a1) expected += a0 == 0 && (a0 + a1) % 2 == 1;
    EXPECT_EQ(expected, 1u);
    EXPECT_EQ(h.embedding.size(), expected);
    EXPECT_EQ(hom_sub(*r.cat, 1, zero, zero).embedding.size(), 1u);
}

TEST(HomSub, EmbeddingSizesMatchDefinition) {
    verify::Rng rng(13);
    for (int i = 0; i < 20; ++i) {
        ChainComplex c = verify::random_finite_complex(rng, verify::Palette::Finite, 2, 32);
        PicRealization r = from_pic(p_of(c));
        const FiniteOmegaCat& a = *r.cat;
        for (int x : a.cells_of_level(0))
            for (int y : a.cells_of_level(0)) {
                std::size_t expected = 0;
                for (int z = 0; z < static_cast<int>(a.size()); ++z) expected += a.s(0, z) == x && a.t(0, z) == y;
                ASSERT_EQ(hom_sub(a, 1, x, y).embedding.size(), expected);
            }
    }
}

TEST(FreePicTest, OneObject) {
    FiniteOmegaCat a(1, 0);
    fill_compositions(a, [](int, int x, int) { return x; });
    FreePic f = free_pic(a);
    ChainComplex q = q_of(f.cat);
    EXPECT_EQ(homology(q, 0).describe(), "Z");
    FiniteOmegaCat empty(0, 0);
    EXPECT_TRUE(free_pic(empty).cat.group().is_trivial());
}

TEST(FreePicTest, UnitIsAFunctor) {
    // object o and an invertible loop f with f * f = o
    FiniteOmegaCat a(2, 1);
    a.set_s(0, 1, 0);
    a.set_t(0, 1, 0);
    a.set_compose(0, 0, 0, 0);
    a.set_compose(0, 0, 1, 1);
    a.set_compose(0, 1, 0, 1);
    a.set_compose(0, 1, 1, 0);
    for (int x = 0; x < 2; ++x) a.set_compose(1, x, x, x);
    ASSERT_TRUE(validate_axioms(a).ok());
    FreePic f = free_pic(a);
    const FgAbGroup& G = f.cat.group();
    for (int i = 0; i <= 1; ++i)
        for (int x = 0; x < 2; ++x) {
            EXPECT_TRUE(G.equal(f.cat.source(f.unit[x], i), f.unit[static_cast<std::size_t>(a.s(i, x))]));
            for (int y = 0; y < 2; ++y) {
                const int z = a.compose(i, x, y);
                if (z < 0) continue;
                EXPECT_TRUE(G.equal(f.cat.compose(f.unit[x], f.unit[y], i), f.unit[static_cast<std::size_t>(z)]));
            }
        }
}

TEST(Homotopies, ZeroAndRoundTrip) {
    ChainComplex z4(0, {FgAbGroup::cyclic(4), FgAbGroup::cyclic(4)}, {IntMatrix::from_rows({{2}})});
    ChainHomotopy zero{ChainMap::identity(z4), ChainMap::identity(z4), {}};
    EXPECT_TRUE(homotopy_to_pic(zero).is_zero());
    verify::Rng rng(44);
    for (int i = 0; i < 25; ++i) {
        auto h = verify::random_degree_one(rng, z4, z4);
        ChainMap F = verify::random_chain_map(rng, z4, z4);
        ChainHomotopy hh{F, verify::add_null_homotopic(F, h), h};
        GroupHom H = homotopy_to_pic(hh);
        ChainHomotopy back = homotopy_from_pic(hh.F, hh.G, H);
        for (int n = 0; n <= 1; ++n) ASSERT_TRUE(back.at(n).equals(hh.at(n)));
        ASSERT_TRUE(pic_homotopy_identity(hh, H));
    }
}

TEST(Homotopies, ElementwiseIdentity) {
    ChainComplex c(0, {FgAbGroup::cyclic(4), FgAbGroup::cyclic(2)}, {IntMatrix::from_rows({{2}})});
    verify::Rng rng(45);
    auto h = verify::random_degree_one(rng, c, c);
    ChainMap F = ChainMap::identity(c);
    ChainHomotopy hh{F, verify::add_null_homotopic(F, h), h};
    GroupHom H = homotopy_to_pic(hh);
    PicOmegaCat p = p_of(c);
    GroupHom D = pic_differential(p), PF = p_of_map(hh.F), PG = p_of_map(hh.G);
    for (const auto& x : enumerate_elements(p.group()))
        EXPECT_TRUE(p.group().equal(add_vectors(D.apply(H.apply(x)), H.apply(D.apply(x))), sub_vectors(PG.apply(x), PF.apply(x))));
}

TEST(StrictPicard, Identities) {
    EXPECT_TRUE(strict_picard_identities(from_pic(p_of(ChainComplex(0, {Z2, Z2}, {IntMatrix(1, 1)})))).ok());
    EXPECT_TRUE(strict_picard_identities(from_pic(p_of(ChainComplex()))).ok());
    EXPECT_TRUE(strict_picard_identities(from_pic(p_of(ChainComplex::concentrated(1, FgAbGroup::cyclic(3))))).ok());
}

TEST(Realization, Counts) {
    PicRealization r0 = from_pic(p_of(ChainComplex::concentrated(0, Z2)));
    EXPECT_EQ(r0.cat->size(), 2u);
    EXPECT_TRUE(validate_axioms(*r0.cat).ok());
    PicRealization r1 = from_pic(p_of(ChainComplex(0, {Z2, Z2}, {IntMatrix(1, 1)})));
    EXPECT_EQ(r1.cat->size(), 4u);
    EXPECT_EQ(r1.cat->cells_of_level(0).size(), 2u);
    EXPECT_THROW(from_pic(p_of(ChainComplex::concentrated(0, FgAbGroup::free(1)))), InfiniteGroup);
}
