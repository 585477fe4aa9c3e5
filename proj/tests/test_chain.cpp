#include <gtest/gtest.h>

#include "omegacat/chain/constructions.hpp"
#include "omegacat/verify/random.hpp"
#include "oracle.hpp"

using namespace omegacat;

namespace {

const FgAbGroup Z = FgAbGroup::free(1);

ChainComplex doubling() { return ChainComplex(0, {Z, Z}, {IntMatrix::from_rows({{2}})}); }

}  // namespace

TEST(Complex, Validation) {
    EXPECT_TRUE(validate(doubling()).ok());
    ChainComplex bad(0, {Z, Z, Z}, {IntMatrix::identity(1), IntMatrix::identity(1)});
    ValidationReport r = validate(bad);
    ASSERT_FALSE(r.ok());
    EXPECT_NE(r.issues.front().detail.find("2"), std::string::npos);
    EXPECT_TRUE(validate(ChainComplex()).ok());
}

TEST(Complex, ShapeMismatchRejected) {
    EXPECT_THROW(ChainComplex(0, {Z, Z}, {IntMatrix(2, 1)}), ShapeMismatch);
}

TEST(Homology, Doubling) {
    EXPECT_EQ(homology(doubling(), 0).describe(), "Z/2");
    EXPECT_TRUE(homology(doubling(), 1).is_trivial());
    EXPECT_TRUE(homology(ChainComplex(), 3).is_trivial());
    EXPECT_EQ(homology(ChainComplex::concentrated(0, FgAbGroup::cyclic(2)), 0).describe(), "Z/2");
}

TEST(Homology, MatchesBruteForceOnRandomFiniteComplexes) {
    verify::Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        ChainComplex c = verify::random_finite_complex(rng, verify::Palette::Finite, 4, 64);
        for (int n = c.min_degree(); n <= c.max_degree(); ++n) {
            auto sig = oracle::subquotient_signature(oracle::from_library(c.d(n + 1)), oracle::from_library(c.d(n)), 12);
            ASSERT_EQ(oracle::signature_of(homology(c, n), 12), sig) << "degree " << n;
        }
    }
}

TEST(QuasiIso, QuotientOfDoubling) {
    ChainComplex z2 = ChainComplex::concentrated(0, FgAbGroup::cyclic(2));
    ChainMap q = ChainMap::from_matrices(doubling(), z2, 0, {IntMatrix::from_rows({{1}})});
    ASSERT_TRUE(validate(q).ok());
    EXPECT_TRUE(is_quasi_iso(q));
    EXPECT_TRUE(is_quasi_iso(ChainMap::identity(doubling())));
    EXPECT_FALSE(is_quasi_iso(ChainMap(z2, ChainComplex(), {})));
}

TEST(Translation, ShiftLoopPath) {
    ChainComplex s = translation(ChainComplex::concentrated(0, Z), TranslationKind::ShiftUp);
    EXPECT_EQ(s.min_degree(), 1);
    EXPECT_EQ(homology(s, 1).describe(), "Z");
    // Ker(x2) = 0
    ChainComplex l = translation(doubling(), TranslationKind::Loop);
    EXPECT_TRUE(l.empty() || homology(l, 0).is_trivial());
    // degree 0 keeps A_1 + A_0
    ChainComplex p = translation(doubling(), TranslationKind::Path);
    EXPECT_TRUE(group_iso_test(homology(p, 0), FgAbGroup::free(2)));
}

TEST(Translation, PathShiftsHigherHomologyDown) {
    verify::Rng rng(9);
    for (int i = 0; i < 50; ++i) {
        ChainComplex c = verify::random_complex(rng, verify::Palette::Mixed, 5);
        ChainComplex p = path(c);
        for (int n = 1; n < c.max_degree(); ++n) ASSERT_TRUE(group_iso_test(homology(p, n), homology(c, n + 1)));
    }
}

TEST(Translation, LoopOfShiftIsIdentityOnPresentations) {
    verify::Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        ChainComplex c = verify::random_complex(rng, verify::Palette::Mixed, 4);
        ChainComplex back = loop(shift_up(c));
        ASSERT_EQ(back.length(), c.length());
        for (int n = c.min_degree(); n <= c.max_degree(); ++n) {
            EXPECT_EQ(back.group(n).relations(), c.group(n).relations());
            EXPECT_EQ(back.d(n).matrix(), c.d(n).matrix());
        }
    }
}

TEST(Translation, LoopShiftsHomologyDown) {
    verify::Rng rng(8);
    for (int i = 0; i < 50; ++i) {
        ChainComplex c = verify::random_complex(rng, verify::Palette::Mixed, 4);
        ChainComplex l = loop(c);
        for (int n = 1; n <= c.max_degree(); ++n) ASSERT_TRUE(group_iso_test(homology(c, n), homology(l, n - 1)));
    }
}

TEST(Cone, IdentityIsAcyclic) {
    ChainComplex a = ChainComplex::concentrated(0, FgAbGroup::cyclic(4));
    Cone c = mapping_cone(ChainMap::identity(a));
    for (int n = c.complex.min_degree(); n <= c.complex.max_degree(); ++n) EXPECT_TRUE(homology(c.complex, n).is_trivial());
}

TEST(Cone, OfZeroSourceAndOfDoubling) {
    ChainComplex a = ChainComplex::concentrated(0, FgAbGroup::cyclic(4));
    Cone c0 = mapping_cone(ChainMap(ChainComplex(), a, {}));
    EXPECT_EQ(homology(c0.complex, 0).describe(), "Z/4");
    EXPECT_TRUE(homology(c0.complex, 1).is_trivial());
    ChainComplex z = ChainComplex::concentrated(0, Z);
    Cone c2 = mapping_cone(ChainMap::from_matrices(z, z, 0, {IntMatrix::from_rows({{2}})}));
    EXPECT_EQ(homology(c2.complex, 0).describe(), "Z/2");
    EXPECT_TRUE(homology(c2.complex, 1).is_trivial());
}

TEST(Cone, LongExactSequenceDetectsQuasiIsos) {
    // f is a quasi-iso iff its cone is acyclic
    verify::Rng rng(21);
    for (int i = 0; i < 60; ++i) {
        ChainComplex a = verify::random_finite_complex(rng, verify::Palette::Finite, 3, 32);
        ChainComplex b = i % 2 ? a : verify::random_finite_complex(rng, verify::Palette::Finite, 3, 32);
        ChainMap f = verify::random_chain_map(rng, a, b);
        ASSERT_TRUE(validate(f).ok());
        Cone c = mapping_cone(f);
        ASSERT_TRUE(validate(c.complex).ok());
        bool acyclic = true;
        for (int n = c.complex.min_degree(); n <= c.complex.max_degree() && !c.complex.empty(); ++n)
            acyclic = acyclic && homology(c.complex, n).is_trivial();
        ASSERT_EQ(acyclic, is_quasi_iso(f));
    }
}

TEST(Homotopy, Checks) {
    ChainComplex z0(0, {Z, Z}, {IntMatrix(1, 1)});
    ChainMap zero(z0, z0, {});
    EXPECT_TRUE(check_homotopy({zero, zero, {}}).ok());
    EXPECT_TRUE(check_homotopy({zero, zero, {{0, GroupHom::identity(Z)}}}).ok());
    ChainComplex z2 = ChainComplex::concentrated(0, FgAbGroup::cyclic(2));
    EXPECT_FALSE(check_homotopy({ChainMap::identity(z2), ChainMap(z2, z2, {}), {}}).ok());
}

TEST(Homotopy, NullHomotopicPerturbationIsHomotopic) {
    verify::Rng rng(4);
    for (int i = 0; i < 30; ++i) {
        ChainComplex a = verify::random_complex(rng, verify::Palette::Mixed, 3);
        auto h = verify::random_degree_one(rng, a, a);
        ChainMap g = verify::add_null_homotopic(ChainMap::identity(a), h);
        ASSERT_TRUE(validate(g).ok());
        ASSERT_TRUE(check_homotopy({ChainMap::identity(a), g, h}).ok());
        ASSERT_TRUE(is_quasi_iso(g));
    }
}

TEST(Total, SingleColumnAndZero) {
    BigradedComplex b;
    b.set_group(0, 0, Z);
    b.set_group(0, 1, Z);
    b.set_vertical(0, 1, IntMatrix::from_rows({{3}}));
    TotalComplex t = total_complex(b);
    EXPECT_EQ(homology(t.complex, 0).describe(), "Z/3");
    EXPECT_TRUE(homology(t.complex, 1).is_trivial());
    EXPECT_TRUE(total_complex(BigradedComplex()).complex.empty());
}

TEST(Total, ExactRowIsAcyclic) {
    // Z -> Z + Z -> Z by (1, 1) then (1, -1) is exact
    BigradedComplex b;
    b.set_group(0, 0, Z);
    b.set_group(1, 0, FgAbGroup::free(2));
    b.set_group(2, 0, Z);
    b.set_horizontal(0, 0, IntMatrix::from_rows({{1}, {1}}));
    b.set_horizontal(1, 0, IntMatrix::from_rows({{1, -1}}));
    TotalComplex t = total_complex(b);
    for (int n = -2; n <= 0; ++n) EXPECT_TRUE(homology(t.complex, n).is_trivial()) << n;
}
