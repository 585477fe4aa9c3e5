#include <gtest/gtest.h>

#include "omegacat/pic/realize.hpp"
#include "omegacat/verify/random.hpp"

using namespace omegacat;

namespace {

const FgAbGroup Z2 = FgAbGroup::cyclic(2);

std::shared_ptr<const FiniteOmegaCat> share(FiniteOmegaCat a) { return std::make_shared<const FiniteOmegaCat>(std::move(a)); }

FiniteOmegaCat discrete(std::size_t n) {
    FiniteOmegaCat a(n, 0);
    fill_compositions(a, [](int, int x, int) { return x; });
    return a;
}

// o --f--> p, non-invertible
FiniteOmegaCat arrow() {
    FiniteOmegaCat a(3, 1);
    a.set_s(0, 2, 0);
    a.set_t(0, 2, 1);
    fill_compositions(a, [&](int i, int x, int y) {
        if (i == 0) return x == a.s(0, x) ? y : x;
        return x;
    });
    return a;
}

OmegaFunctor identity_functor(std::shared_ptr<const FiniteOmegaCat> a) {
    std::vector<int> m(a->size());
    std::iota(m.begin(), m.end(), 0);
    return {a, a, m};
}

OmegaFunctor compose_functors(const OmegaFunctor& g, const OmegaFunctor& f) {
    OmegaFunctor h{f.source, g.target, std::vector<int>(f.map.size())};
    for (std::size_t x = 0; x < f.map.size(); ++x) h.map[x] = g(f(static_cast<int>(x)));
    return h;
}

}  // namespace

TEST(Axioms, RealizationsAreValid) {
    EXPECT_TRUE(validate_axioms(*from_pic(p_of(ChainComplex::concentrated(1, Z2))).cat).ok());
    EXPECT_TRUE(validate_axioms(discrete(1)).ok());
    EXPECT_TRUE(validate_axioms(arrow()).ok());
}

TEST(Axioms, BrokenUnitReported) {
    FiniteOmegaCat a = discrete(2);
    a.set_compose(0, 1, 1, 0);
    AxiomReport r = validate_axioms(a);
    ASSERT_FALSE(r.ok());
    bool unit = false;
    for (const auto& v : r.violations)
        if (v.axiom == "1b") {
            unit = true;
            EXPECT_FALSE(v.elements.empty());
        }
    EXPECT_TRUE(unit) << describe(r, a);
}

TEST(Axioms, CorpusRealizationsValidate) {
    verify::Rng rng(2);
    for (int i = 0; i < 40; ++i) {
        ChainComplex c = verify::random_finite_complex(rng, verify::Palette::Finite, 3, 48);
        PicRealization r = from_pic(p_of(c));
        ASSERT_TRUE(validate_axioms(*r.cat).ok());
        ASSERT_TRUE(is_groupoid(*r.cat));
    }
}

TEST(Product, SizeUnitAndValidity) {
    FiniteOmegaCat a = *from_pic(p_of(ChainComplex::concentrated(1, Z2))).cat;
    FiniteOmegaCat b = *from_pic(p_of(ChainComplex::concentrated(0, Z2))).cat;
    FiniteOmegaCat ab = product(a, b);
    EXPECT_EQ(ab.size(), a.size() * b.size());
    EXPECT_TRUE(validate_axioms(ab).ok());
    EXPECT_TRUE(is_groupoid(ab));
    FiniteOmegaCat at = product(a, discrete(1));
    ASSERT_EQ(at.size(), a.size());
    // same tables up to the evident relabelling
    for (int i = 0; i <= a.stabilization(); ++i)
        for (int x = 0; x < static_cast<int>(a.size()); ++x) {
            EXPECT_EQ(at.s(i, x), a.s(i, x));
            EXPECT_EQ(at.t(i, x), a.t(i, x));
            for (int y = 0; y < static_cast<int>(a.size()); ++y) EXPECT_EQ(at.compose(i, x, y), a.compose(i, x, y));
        }
}

TEST(Groupoid, Examples) {
    EXPECT_TRUE(is_groupoid(*from_pic(p_of(ChainComplex(0, {Z2, FgAbGroup::cyclic(4)}, {IntMatrix::from_rows({{1}})}))).cat));
    std::vector<int> witness;
    EXPECT_FALSE(is_groupoid(arrow(), &witness));
    EXPECT_FALSE(witness.empty());
    EXPECT_TRUE(is_groupoid(discrete(3)));
}

TEST(Equivalence, Identity) {
    auto a = from_pic(p_of(ChainComplex(0, {Z2, Z2}, {IntMatrix(1, 1)}))).cat;
    EXPECT_TRUE(equivalence_check(identity_functor(a)).ok());
    EXPECT_TRUE(equivalence_check(identity_functor(share(arrow()))).ok());
}

TEST(Equivalence, QuotientAgreesWithQuasiIso) {
    const FgAbGroup Z4 = FgAbGroup::cyclic(4);
    ChainComplex src(0, {Z4, Z4}, {IntMatrix::from_rows({{2}})});
    ChainComplex tgt(0, {Z2, Z2}, {IntMatrix(1, 1)});
    ChainMap q = ChainMap::from_matrices(src, tgt, 0, {IntMatrix::from_rows({{1}}), IntMatrix::from_rows({{1}})});
    ASSERT_TRUE(validate(q).ok());
    PicRealization a = from_pic(p_of(src)), b = from_pic(p_of(tgt));
    OmegaFunctor F = realize_map(p_of_map(q), a, b);
    ASSERT_TRUE(validate_functor(F).ok());
    EXPECT_EQ(equivalence_check(F).ok(), is_quasi_iso(q));
}

TEST(Equivalence, TwoObjectsToTerminalFailsFullness) {
    OmegaFunctor F{share(discrete(2)), share(discrete(1)), {0, 0}};
    EquivalenceReport r = equivalence_check(F);
    EXPECT_TRUE(r.essentially_surjective);
    EXPECT_FALSE(r.full);
    EXPECT_FALSE(r.ok());
}

TEST(Equivalence, ZeroFunctorOnAcyclicComplex) {
    // Z/2 --id--> Z/2 is acyclic, so the map to zero is a quasi-iso
    ChainComplex c(0, {Z2, Z2}, {IntMatrix::identity(1)});
    PicRealization a = from_pic(p_of(c)), z = from_pic(p_of(ChainComplex()));
    OmegaFunctor F{a.cat, z.cat, std::vector<int>(a.cat->size(), 0)};
    EXPECT_TRUE(equivalence_check(F).ok());
}

TEST(Equivalence, CompositesAndGroupoidClauseRedundancy) {
    verify::Rng rng(17);
    for (int i = 0; i < 30; ++i) {
        ChainComplex a = verify::random_finite_complex(rng, verify::Palette::Finite, 2, 16);
        ChainComplex b = verify::random_finite_complex(rng, verify::Palette::Finite, 2, 16);
        ChainMap f = verify::random_chain_map(rng, a, b);
        ChainMap g = verify::random_chain_map(rng, b, a);
        PicRealization ra = from_pic(p_of(a)), rb = from_pic(p_of(b));
        OmegaFunctor F = realize_map(p_of_map(f), ra, rb), G = realize_map(p_of_map(g), rb, ra);
        const bool ef = equivalence_check(F).ok(), eg = equivalence_check(G).ok();
        ASSERT_EQ(ef, equivalence_check(F, false).ok());
        ASSERT_EQ(ef, is_quasi_iso(f));
        if (ef && eg) {
            ASSERT_TRUE(equivalence_check(compose_functors(G, F)).ok());
        }
    }
}

TEST(FromPic, Examples) {
    PicRealization r0 = from_pic(p_of(ChainComplex::concentrated(0, Z2)));
    EXPECT_EQ(r0.cat->size(), 2u);
    EXPECT_EQ(r0.cat->cells_of_level(0).size(), 2u);
    PicRealization r1 = from_pic(p_of(ChainComplex(0, {Z2, Z2}, {IntMatrix(1, 1)})));
    EXPECT_EQ(r1.cat->size(), 4u);
    EXPECT_EQ(r1.cat->cells_of_level(0).size(), 2u);
    EXPECT_THROW(from_pic(p_of(ChainComplex::concentrated(0, FgAbGroup::free(1)))), InfiniteGroup);
}
