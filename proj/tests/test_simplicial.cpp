#include <gtest/gtest.h>

#include "omegacat/simplicial/nerve.hpp"
#include "omegacat/verify/acceptance.hpp"
#include "oracle.hpp"

using namespace omegacat;

namespace {

const FgAbGroup Z2 = FgAbGroup::cyclic(2);

std::vector<std::size_t> orders(const ChainComplex& c, int n) {
    std::vector<std::size_t> out;
    for (int k = 0; k <= n; ++k)
        out.push_back(c.empty() || k > c.max_degree() ? 1 : static_cast<std::size_t>(c.group(k).order()));
    return out;
}

// Simplicial identities checked elementwise on a finite simplicial group.
bool identities_hold_elementwise(const SimplicialAbGroup& g) {
    const int T = g.truncation();
    for (int n = 0; n <= T; ++n) {
        const FgAbGroup& G = g.level(n);
        for (const IntVector& x : enumerate_elements(G)) {
            for (int j = 0; j <= n && n >= 2; ++j)
                for (int i = 0; i < j; ++i)
                    if (!g.level(n - 2).equal(g.face(n - 1, i).apply(g.face(n, j).apply(x)), g.face(n - 1, j - 1).apply(g.face(n, i).apply(x))))
                        return false;
            if (n < T) {
                for (int j = 0; j <= n; ++j) {
                    IntVector sx = g.degeneracy(n, j).apply(x);
                    for (int i = 0; i <= n + 1; ++i) {
                        IntVector lhs = g.face(n + 1, i).apply(sx);
                        if (i == j || i == j + 1) {
                            if (!G.equal(lhs, x)) return false;
                        } else if (n >= 1) {
                            IntVector rhs = i < j ? g.degeneracy(n - 1, j - 1).apply(g.face(n, i).apply(x))
                                                  : g.degeneracy(n - 1, j).apply(g.face(n, i - 1).apply(x));
                            if (!G.equal(lhs, rhs)) return false;
                        }
                    }
                }
            }
            if (n + 2 <= T)
                for (int j = 0; j <= n; ++j)
                    for (int i = 0; i <= j; ++i)
                        if (!g.level(n + 2).equal(g.degeneracy(n + 1, i).apply(g.degeneracy(n, j).apply(x)),
                                                  g.degeneracy(n + 1, j + 1).apply(g.degeneracy(n, i).apply(x))))
                            return false;
        }
    }
    return true;
}

// Same groups in degrees 0..hi and same homology below hi (the top degree lacks boundaries).
bool agree_up_to(const ChainComplex& a, const ChainComplex& b, int hi) {
    auto grp = [](const ChainComplex& c, int n) {
        return c.empty() || n < c.min_degree() || n > c.max_degree() ? FgAbGroup::trivial() : c.group(n);
    };
    for (int n = 0; n <= hi; ++n) {
        if (!group_iso_test(grp(a, n), grp(b, n))) return false;
        if (n < hi && !group_iso_test(homology(a, n), homology(b, n))) return false;
    }
    return true;
}

}  // namespace

TEST(Simplicial, ConstantIsValid) {
    SimplicialAbGroup g = constant_simplicial(Z2, 3);
    EXPECT_TRUE(validate_simplicial(g).ok());
    EXPECT_TRUE(identities_hold_elementwise(g));
}

TEST(Simplicial, CorruptedFaceReported) {
    SimplicialAbGroup g = constant_simplicial(FgAbGroup::cyclic(3), 2);
    std::vector<FgAbGroup> levels = {g.level(0), g.level(1), g.level(2)};
    std::vector<std::vector<GroupHom>> faces = {{g.face(1, 0), g.face(1, 1)}, {g.face(2, 0), g.face(2, 1), g.face(2, 2)}};
    std::vector<std::vector<GroupHom>> degens = {{g.degeneracy(0, 0)}, {g.degeneracy(1, 0), g.degeneracy(1, 1)}};
    faces[0][0] = GroupHom(levels[1], levels[0], IntMatrix::from_rows({{2}}));
    SimplicialAbGroup bad(levels, faces, degens);
    EXPECT_FALSE(validate_simplicial(bad).ok());
    EXPECT_FALSE(identities_hold_elementwise(bad));
}

TEST(Simplicial, DkInverseSatisfiesIdentitiesElementwise) {
    verify::Rng rng(6);
    for (int i = 0; i < 15; ++i) {
        ChainComplex c = verify::random_finite_complex(rng, verify::Palette::Finite, 3, 12);
        SimplicialAbGroup g = dk_inverse(c, 3);
        ASSERT_TRUE(validate_simplicial(g).ok());
        ASSERT_TRUE(identities_hold_elementwise(g));
    }
}

TEST(Normalized, ConstantAndZero) {
    ChainComplex k = normalized_chains(constant_simplicial(FgAbGroup::cyclic(5), 3));
    EXPECT_EQ(k.group(0).describe(), "Z/5");
    for (int n = 1; n <= k.max_degree(); ++n) EXPECT_TRUE(k.group(n).is_trivial());
    ChainComplex z = normalized_chains(constant_simplicial(FgAbGroup::trivial(), 2));
    for (int n = 0; !z.empty() && n <= z.max_degree(); ++n) EXPECT_TRUE(z.group(n).is_trivial());
}

TEST(DoldKan, RoundTrip) {
    verify::Rng rng(7);
    for (int i = 0; i < 30; ++i) {
        ChainComplex c = verify::random_complex(rng, verify::Palette::Mixed, 3);
        const int T = 4;
        ChainComplex k = normalized_chains(dk_inverse(c, T));
        ASSERT_TRUE(is_chain_iso(dk_unit(c, T)));
        for (int n = 0; n <= c.max_degree(); ++n) ASSERT_TRUE(group_iso_test(k.group(n), c.group(n)));
    }
}

TEST(DoldKan, LevelSizesMatchOracle) {
    ChainComplex c1 = ChainComplex::concentrated(1, Z2);
    SimplicialAbGroup g = dk_inverse(c1, 4);
    for (int n = 0; n <= 4; ++n) {
        EXPECT_EQ(g.level(n).order(), Integer(1) << n);
        EXPECT_EQ(g.level(n).order(), Integer(oracle::gamma_level_size(orders(c1, n), n)));
    }
    // Z/3 in degrees 0 and 1 with d = 0: |c_0| * |c_1|^n
    const FgAbGroup Z3 = FgAbGroup::cyclic(3);
    ChainComplex c(0, {Z3, Z3}, {IntMatrix(1, 1)});
    SimplicialAbGroup h = dk_inverse(c, 3);
    const std::size_t expected[] = {3, 9, 27, 81};
    for (int n = 0; n <= 3; ++n) {
        EXPECT_EQ(h.level(n).order(), Integer(expected[n]));
        EXPECT_EQ(h.level(n).order(), Integer(oracle::gamma_level_size(orders(c, n), n)));
    }
    verify::Rng rng(8);
    for (int i = 0; i < 30; ++i) {
        ChainComplex r = verify::random_finite_complex(rng, verify::Palette::Finite, 3, 16);
        SimplicialAbGroup s = dk_inverse(r, 3);
        for (int n = 0; n <= 3; ++n) ASSERT_EQ(s.level(n).order(), Integer(oracle::gamma_level_size(orders(r, n), n)));
    }
}

TEST(DoldKan, ConstantInDegreeZero) {
    SimplicialAbGroup g = dk_inverse(ChainComplex::concentrated(0, FgAbGroup::cyclic(4)), 3);
    for (int n = 0; n <= 3; ++n) EXPECT_EQ(g.level(n).describe(), "Z/4");
    for (int n = 1; n <= 3; ++n)
        for (int i = 0; i <= n; ++i) EXPECT_TRUE(is_isomorphism(g.face(n, i)));
}

TEST(HomotopyGroups, Examples) {
    SimplicialAbGroup c = constant_simplicial(Z2, 3);
    EXPECT_EQ(homotopy_groups(c, 0).describe(), "Z/2");
    EXPECT_TRUE(homotopy_groups(c, 1).is_trivial());
    EXPECT_THROW(homotopy_groups(c, 3), TruncationTooLow);
    ChainComplex doubling(0, {FgAbGroup::free(1), FgAbGroup::free(1)}, {IntMatrix::from_rows({{2}})});
    EXPECT_EQ(homotopy_groups(dk_inverse(doubling, 3), 0).describe(), "Z/2");
    EXPECT_TRUE(homotopy_groups(dk_inverse(doubling, 3), 1).is_trivial());
}

TEST(HomotopyGroups, MatchHomology) {
    verify::Rng rng(9);
    for (int i = 0; i < 20; ++i) {
        ChainComplex c = verify::random_complex(rng, verify::Palette::Mixed, 3);
        SimplicialAbGroup g = dk_inverse(c, 4);
        for (int n = 0; n < 4; ++n) ASSERT_TRUE(group_iso_test(homotopy_groups(g, n), homology(c, n)));
    }
}

TEST(LoopPath, ShiftsHomotopyAndMatchesChainLevel) {
    verify::Rng rng(10);
    for (int i = 0; i < 15; ++i) {
        SimplicialAbGroup g = verify::random_simplicial(rng, 4);
        SimplicialAbGroup L = simplicial_loop(g), S = simplicial_shift(g), P = simplicial_path(g);
        ASSERT_TRUE(validate_simplicial(L).ok());
        ASSERT_TRUE(validate_simplicial(S).ok());
        for (int n = 0; n + 1 < g.truncation() && n < L.truncation(); ++n)
            ASSERT_TRUE(group_iso_test(homotopy_groups(g, n + 1), homotopy_groups(L, n)));
        ChainComplex kg = normalized_chains(g);
        ASSERT_TRUE(agree_up_to(normalized_chains(L), loop(kg), L.truncation()));
        ASSERT_TRUE(validate_simplicial(P).ok());
        ASSERT_TRUE(agree_up_to(normalized_chains(P), path(kg), P.truncation()));
        // S alone drops A_0: degree n holds A_{n+1}
        ChainComplex ks = normalized_chains(S);
        for (int n = 0; n <= S.truncation() && n + 1 <= kg.max_degree(); ++n) ASSERT_TRUE(group_iso_test(ks.group(n), kg.group(n + 1)));
    }
}

TEST(Nerve, PicLevelsZeroAndOne) {
    ChainComplex c(0, {FgAbGroup::cyclic(4), Z2}, {IntMatrix::from_rows({{2}})});
    PicOmegaCat a = p_of(c);
    SimplicialAbGroup n = nerve_pic(a, 2);
    PicRealization r = from_pic(a);
    EXPECT_EQ(n.level(0).order(), Integer(r.cat->cells_of_level(0).size()));
    EXPECT_EQ(n.level(1).order(), Integer(r.cat->cells_of_level(1).size()));
    SimplicialAbGroup t = nerve_pic(p_of(ChainComplex()), 3);
    for (int k = 0; k <= 3; ++k) EXPECT_TRUE(t.level(k).is_trivial());
}

TEST(Nerve, EnumerationSmallCases) {
    PicRealization r = from_pic(p_of(ChainComplex::concentrated(1, Z2)));
    EXPECT_EQ(nerve_enumerate(*r.cat, 0).size(), r.cat->cells_of_level(0).size());
    EXPECT_EQ(nerve_enumerate(*r.cat, 1).size(), r.cat->cells_of_level(1).size());
    EXPECT_EQ(nerve_enumerate(*r.cat, 2).size(), 4u);
    EXPECT_EQ(nerve_pic(p_of(ChainComplex::concentrated(1, Z2)), 2).level(2).order(), 4);
}

TEST(Nerve, EnumerationAgreesWithDoldKan) {
    verify::Rng rng(11);
    for (int i = 0; i < 12; ++i) {
        ChainComplex c = verify::random_finite_complex(rng, verify::Palette::Finite, 3, 12);
        NerveComparison cmp = compare_nerves(c, 3);
        ASSERT_TRUE(cmp.ok()) << cmp.failures.front();
        for (int k = 0; k <= 3; ++k) ASSERT_EQ(cmp.enumerated[static_cast<std::size_t>(k)], oracle::gamma_level_size(orders(c, k), k));
    }
}

TEST(Nerve, ThinSimplicesAreDegenerateInLowDimension) {
    PicRealization r = from_pic(p_of(ChainComplex::concentrated(0, Z2)));
    NerveLevel l = nerve_enumerate(*r.cat, 1);
    for (const auto& s : l.simplices) EXPECT_TRUE(s.thin);
}

TEST(WBar, ConstantAndTrivial) {
    SimplicialAbGroup w = wbar(constant_simplicial(Z2, 3));
    ASSERT_TRUE(validate_simplicial(w).ok());
    EXPECT_TRUE(homotopy_groups(w, 0).is_trivial());
    EXPECT_EQ(homotopy_groups(w, 1).describe(), "Z/2");
    EXPECT_TRUE(homotopy_groups(w, 2).is_trivial());
    SimplicialAbGroup t = wbar(constant_simplicial(FgAbGroup::trivial(), 2));
    for (int n = 0; n <= t.truncation(); ++n) EXPECT_TRUE(t.level(n).is_trivial());
}

TEST(WBar, ShiftsHomologyUp) {
    verify::Rng rng(12);
    for (int i = 0; i < 10; ++i) {
        SimplicialAbGroup g = verify::random_simplicial(rng, 3);
        SimplicialAbGroup w = wbar(g);
        ASSERT_TRUE(validate_simplicial(w).ok());
        ASSERT_TRUE(identities_hold_elementwise(wbar(dk_inverse(ChainComplex::concentrated(0, Z2), 2))));
        ChainComplex kg = normalized_chains(g);
        for (int n = 1; n < w.truncation(); ++n) ASSERT_TRUE(group_iso_test(homotopy_groups(w, n), homology(kg, n - 1)));
    }
}
