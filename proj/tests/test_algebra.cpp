#include <gtest/gtest.h>

#include "omegacat/algebra/finite_index.hpp"
#include "omegacat/verify/random.hpp"
#include "oracle.hpp"

using namespace omegacat;

namespace {

bool unimodular_identity(const SmithForm& s, const IntMatrix& m) {
    return s.U * m * s.V == s.D && s.U * s.U_inv == IntMatrix::identity(m.rows()) &&
           s.V * s.V_inv == IntMatrix::identity(m.cols());
}

bool divisibility_chain(const std::vector<Integer>& d) {
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        if (d[i] == 0 && d[i + 1] != 0) return false;
        if (d[i] != 0 && d[i + 1] % d[i] != 0) return false;
    }
    return true;
}

}  // namespace

TEST(Smith, DiagonalTwoThree) {
    IntMatrix m = IntMatrix::diagonal({2, 3});
    SmithForm s = smith_normal_form(m);
    EXPECT_EQ(s.D, IntMatrix::diagonal({1, 6}));
    EXPECT_TRUE(unimodular_identity(s, m));
}

TEST(Smith, IdentityAndZero) {
    EXPECT_EQ(smith_normal_form(IntMatrix::identity(3)).D, IntMatrix::identity(3));
    EXPECT_EQ(smith_normal_form(IntMatrix(2, 2)).D, IntMatrix(2, 2));
    EXPECT_EQ(smith_normal_form(IntMatrix(2, 2)).rank, 0u);
}

TEST(Smith, RandomMatricesSatisfyInvariants) {
    verify::Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        const std::size_t r = rng.range(0, 4), c = rng.range(0, 4);
        IntMatrix m(r, c);
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < c; ++b) m(a, b) = static_cast<long long>(rng.range(0, 12)) - 6;
        SmithForm s = smith_normal_form(m);
        ASSERT_TRUE(unimodular_identity(s, m));
        ASSERT_TRUE(divisibility_chain(s.diagonal()));
        for (std::size_t a = 0; a < s.D.rows(); ++a)
            for (std::size_t b = 0; b < s.D.cols(); ++b)
                if (a != b) {
                    ASSERT_EQ(s.D(a, b), 0);
                }
    }
}

TEST(Smith, LargeEntriesStayExact) {
    const Integer big = parse_integer("123456789012345678901234567890");
    IntMatrix m(2, 2);
    m(0, 0) = big;
    m(0, 1) = big * 2;
    m(1, 0) = 3;
    m(1, 1) = 5;
    SmithForm s = smith_normal_form(m);
    EXPECT_TRUE(unimodular_identity(s, m));
    EXPECT_EQ(s.diagonal()[0], 1);
    EXPECT_EQ(abs_value(s.diagonal()[1]), abs_value(big * 5 - big * 6));
}

TEST(Subquotient, CokernelOfDoubling) {
    FgAbGroup z = FgAbGroup::free(1);
    GroupHom to_zero = GroupHom::zero(z, FgAbGroup::trivial());
    GroupHom twice(z, z, IntMatrix::from_rows({{2}}));
    EXPECT_EQ(subquotient(to_zero, twice).group().describe(), "Z/2");
}

TEST(Subquotient, KernelOfIdentityAndOfZero) {
    FgAbGroup z = FgAbGroup::free(1);
    EXPECT_TRUE(subquotient(GroupHom::identity(z), GroupHom::zero(z, z)).group().is_trivial());
    EXPECT_EQ(subquotient(GroupHom::zero(z, z), GroupHom::zero(z, z)).group().describe(), "Z");
}

TEST(Subquotient, MatchesBruteForceOnRandomFiniteMaps) {
    verify::Rng rng(11);
    for (int i = 0; i < 150; ++i) {
        FgAbGroup a = verify::random_group(rng, verify::Palette::Finite);
        FgAbGroup b = verify::random_group(rng, verify::Palette::Finite);
        FgAbGroup c = verify::random_group(rng, verify::Palette::Finite);
        GroupHom g = verify::random_hom(rng, b, c);
        // in : A -> B landing in Ker g
        GroupHom in = verify::random_hom(rng, a, b);
        if (!compose(g, in).is_zero()) in = GroupHom::zero(a, b);
        FgAbGroup h = subquotient(g, in).group();
        ASSERT_EQ(oracle::signature_of(h, 12),
                  oracle::subquotient_signature(oracle::from_library(in), oracle::from_library(g), 12));
    }
}

TEST(GroupIso, ChineseRemainder) {
    EXPECT_TRUE(group_iso_test(FgAbGroup::from_orders({2, 3}), FgAbGroup::cyclic(6)));
    EXPECT_FALSE(group_iso_test(FgAbGroup::free(1), FgAbGroup::cyclic(2)));
    EXPECT_TRUE(group_iso_test(FgAbGroup::trivial(), FgAbGroup::trivial()));
    EXPECT_FALSE(group_iso_test(FgAbGroup::from_orders({2, 2}), FgAbGroup::cyclic(4)));
    EXPECT_TRUE(group_iso_test(FgAbGroup::from_orders({1, 4, 0}), FgAbGroup::from_orders({0, 4})));
}

TEST(GroupIso, NonDiagonalPresentation) {
    // relations 2a + 4b = 0, 6b = 0: determinant 12, entry gcd 2
    FgAbGroup g(IntMatrix::from_rows({{2, 0}, {4, 6}}));
    EXPECT_EQ(g.order(), 12);
    EXPECT_EQ(g.invariant_factors(), (std::vector<Integer>{2, 6}));
}

TEST(Elements, Enumeration) {
    EXPECT_EQ(enumerate_elements(FgAbGroup::cyclic(2)).size(), 2u);
    EXPECT_EQ(enumerate_elements(FgAbGroup::from_orders({2, 2})).size(), 4u);
    EXPECT_THROW(enumerate_elements(FgAbGroup::free(1)), InfiniteGroup);
    EXPECT_EQ(enumerate_elements(FgAbGroup::trivial()).size(), 1u);
}

TEST(Elements, FiniteIndexRoundTrip) {
    FgAbGroup g = FgAbGroup::from_orders({2, 4, 3});
    FiniteIndex idx(g);
    ASSERT_EQ(idx.size(), 24u);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        EXPECT_EQ(idx.index_of(idx.element(i)), i);
        EXPECT_EQ(idx.add(i, idx.neg(i)), 0u);
    }
}

TEST(Hom, IllDefinedRejected) {
    // Z/2 -> Z/3 sending the generator to 1 does not respect 2x = 0
    EXPECT_THROW(GroupHom(FgAbGroup::cyclic(2), FgAbGroup::cyclic(3), IntMatrix::from_rows({{1}})), IllDefinedHom);
    EXPECT_NO_THROW(GroupHom(FgAbGroup::cyclic(2), FgAbGroup::cyclic(4), IntMatrix::from_rows({{2}})));
}

TEST(Hom, InjectiveSurjective) {
    GroupHom twice(FgAbGroup::cyclic(2), FgAbGroup::cyclic(4), IntMatrix::from_rows({{2}}));
    EXPECT_TRUE(is_injective(twice));
    EXPECT_FALSE(is_surjective(twice));
    GroupHom reduce(FgAbGroup::cyclic(4), FgAbGroup::cyclic(2), IntMatrix::from_rows({{1}}));
    EXPECT_FALSE(is_injective(reduce));
    EXPECT_TRUE(is_surjective(reduce));
    EXPECT_TRUE(is_isomorphism(GroupHom(FgAbGroup::cyclic(5), FgAbGroup::cyclic(5), IntMatrix::from_rows({{2}}))));
}
