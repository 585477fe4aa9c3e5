#include <gtest/gtest.h>

#include "omegacat/io/formats.hpp"
#include "omegacat/pic/realize.hpp"
#include "omegacat/simplicial/dold_kan.hpp"
#include "omegacat/verify/acceptance.hpp"

using namespace omegacat;
using io::json;

namespace {

bool same_complex(const ChainComplex& a, const ChainComplex& b) {
    if (a.empty() || b.empty()) return a.empty() == b.empty();
    if (a.min_degree() != b.min_degree() || a.max_degree() != b.max_degree()) return false;
    for (int n = a.min_degree(); n <= a.max_degree(); ++n)
        if (a.group(n).relations() != b.group(n).relations() || a.d(n).matrix() != b.d(n).matrix()) return false;
    return true;
}

}  // namespace

TEST(Json, ComplexRoundTrip) {
    verify::Rng rng(1);
    for (int i = 0; i < 40; ++i) {
        ChainComplex c = verify::random_complex(rng, verify::Palette::Mixed, 4, static_cast<int>(rng.range(0, 2)));
        ChainComplex back = io::complex_from_json(json::parse(io::complex_to_json(c).dump()));
        ASSERT_TRUE(same_complex(c, back));
    }
}

TEST(Json, CompactComplexForm) {
    ChainComplex c = io::complex_from_json(io::parse_text(R"({"min_degree":0,"groups":[[4],[2]],"differentials":[[[2]]]})"));
    EXPECT_EQ(homology(c, 0).describe(), "Z/2");
    EXPECT_TRUE(homology(c, 1).is_trivial());  // 1 -> 2 is injective
}

TEST(Json, BigIntegersAsStrings) {
    const Integer big = parse_integer("340282366920938463463374607431768211457");
    IntMatrix m(1, 1);
    m(0, 0) = big;
    json j = io::matrix_to_json(m);
    EXPECT_TRUE(j[0][0].is_string());
    EXPECT_EQ(io::matrix_from_json(j)(0, 0), big);
}

TEST(Json, OmegaRoundTrip) {
    PicRealization r = from_pic(p_of(ChainComplex(0, {FgAbGroup::cyclic(2), FgAbGroup::cyclic(2)}, {IntMatrix::identity(1)})));
    FiniteOmegaCat back = io::omega_from_json(json::parse(io::omega_to_json(*r.cat).dump()));
    ASSERT_EQ(back.size(), r.cat->size());
    ASSERT_EQ(back.stabilization(), r.cat->stabilization());
    for (int i = 0; i <= back.stabilization(); ++i)
        for (int x = 0; x < static_cast<int>(back.size()); ++x) {
            EXPECT_EQ(back.s(i, x), r.cat->s(i, x));
            EXPECT_EQ(back.t(i, x), r.cat->t(i, x));
            for (int y = 0; y < static_cast<int>(back.size()); ++y) EXPECT_EQ(back.compose(i, x, y), r.cat->compose(i, x, y));
        }
}

TEST(Json, SimplicialRoundTrip) {
    SimplicialAbGroup g = dk_inverse(ChainComplex::concentrated(1, FgAbGroup::cyclic(3)), 3);
    SimplicialAbGroup back = io::simplicial_from_json(json::parse(io::simplicial_to_json(g).dump()));
    ASSERT_EQ(back.truncation(), g.truncation());
    for (int n = 1; n <= 3; ++n)
        for (int i = 0; i <= n; ++i) EXPECT_EQ(back.face(n, i).matrix(), g.face(n, i).matrix());
    EXPECT_TRUE(validate_simplicial(back).ok());
}

TEST(Json, PresheafRoundTrip) {
    verify::SeparatingExamples ex = verify::separating_examples();
    for (const Presheaf* f : {&ex.acyclic_at_top, &ex.delooped_constant}) {
        Presheaf back = io::presheaf_from_json(json::parse(io::presheaf_to_json(*f).dump()));
        ASSERT_EQ(back.site().size(), f->site().size());
        for (int a = 0; a < static_cast<int>(back.site().size()); ++a) {
            EXPECT_EQ(back.site().name(a), f->site().name(a));
            EXPECT_TRUE(same_complex(back.at(a), f->at(a)));
        }
        EXPECT_EQ(cech_descent_check(back).ok(), cech_descent_check(*f).ok());
    }
}

TEST(Json, MalformedInputRaisesParseError) {
    EXPECT_THROW(io::parse_text("{\"groups\": [[2]"), ParseError);
    EXPECT_THROW(io::complex_from_json(json::parse(R"({"min_degree": 0})")), ParseError);
    EXPECT_THROW(io::complex_from_json(json::parse(R"({"groups": [[2], [2]], "differentials": [[[1, 1]]]})")), ParseError);
    EXPECT_THROW(io::group_from_json(json::parse("[-3]")), ParseError);
    EXPECT_THROW(io::matrix_from_json(json::parse("[[1, 2], [3]]")), ParseError);
    EXPECT_THROW(io::read_file("/nonexistent/omegacat.json"), ParseError);
}
