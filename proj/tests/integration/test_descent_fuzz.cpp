// Seeded fuzzing of the two descent checkers against each other and against independent checks.

#include <gtest/gtest.h>

#include "omegacat/descent/deloop.hpp"
#include "omegacat/descent/glueing.hpp"
#include "omegacat/io/formats.hpp"
#include "omegacat/verify/random.hpp"

using namespace omegacat;

namespace {

struct FuzzStats {
    int presheaves = 0, passing = 0;
};

FuzzStats fuzz(std::uint64_t seed, int count) {
    verify::Rng rng(seed);
    FuzzStats st;
    for (int i = 0; i < count; ++i) {
        auto site = std::make_shared<const FiniteSite>(verify::random_site(rng));
        Presheaf f = verify::random_presheaf(rng, site);
        EXPECT_TRUE(validate_presheaf(f).ok());
        GlueingReport g = omega_descent_check(f, f.max_degree() + 1);  // throws on disagreement
        EXPECT_EQ(g.ok(), g.cech.ok()) << "seed " << seed << " case " << i;
        ++st.presheaves;
        st.passing += g.ok();
    }
    return st;
}

}  // namespace

TEST(DescentFuzz, CheckersAgreeAcrossSeeds) {
    FuzzStats total;
    for (std::uint64_t seed : {101u, 202u, 303u}) {
        FuzzStats s = fuzz(seed, 100);
        total.presheaves += s.presheaves;
        total.passing += s.passing;
    }
    EXPECT_EQ(total.presheaves, 300);
    // both outcomes occur, so agreement is not vacuous
    EXPECT_GT(total.passing, 0);
    EXPECT_LT(total.passing, total.presheaves);
}

TEST(DescentFuzz, ShiftMovesFailuresUpOneDegree) {
    verify::Rng rng(404);
    for (int i = 0; i < 60; ++i) {
        auto site = std::make_shared<const FiniteSite>(verify::random_site(rng));
        Presheaf f = verify::random_presheaf(rng, site);
        Presheaf s = shift_presheaf(f);
        CechDescentReport a = cech_descent_check(f), b = cech_descent_check(s);
        ASSERT_EQ(a.entries.size(), b.entries.size());
        for (std::size_t e = 0; e < a.entries.size(); ++e) {
            std::vector<int> shifted;
            for (int n : a.entries[e].failing_degrees) shifted.push_back(n + 1);
            // degree 0 of the shift compares 0 with H_0 of a complex concentrated in degrees >= 1
            std::vector<int> got;
            for (int n : b.entries[e].failing_degrees)
                if (n >= 1) got.push_back(n);
            ASSERT_EQ(got, shifted) << "case " << i;
        }
    }
}

TEST(DescentFuzz, AlternatingAndFullCechAgree) {
    verify::Rng rng(505);
    int compared = 0;
    for (int i = 0; i < 40; ++i) {
        auto site = std::make_shared<const FiniteSite>(verify::random_site(rng));
        Presheaf f = verify::random_presheaf(rng, site, 2);
        for (int v = 0; v < static_cast<int>(site->size()); ++v)
            for (const auto& u : site->covers(v)) {
                if (u.size() > 2) continue;
                CechComplex alt = cech_total(f, v, u), full = cech_total_full(f, v, u, f.max_degree() + 3);
                for (int n = 0; n <= f.max_degree(); ++n)
                    ASSERT_TRUE(group_iso_test(homology(alt.total.complex, n), homology(full.total.complex, n)));
                ++compared;
            }
    }
    EXPECT_GT(compared, 0);
}

TEST(DescentFuzz, SerializationPreservesVerdicts) {
    verify::Rng rng(606);
    for (int i = 0; i < 30; ++i) {
        auto site = std::make_shared<const FiniteSite>(verify::random_site(rng));
        Presheaf f = verify::random_presheaf(rng, site);
        Presheaf back = io::presheaf_from_json(io::json::parse(io::presheaf_to_json(f).dump()));
        ASSERT_EQ(cech_descent_check(back).ok(), cech_descent_check(f).ok());
    }
}

TEST(DescentFuzz, TorsorShiftIdentityOnDegreeZero) {
    verify::Rng rng(707);
    int towers = 0;
    for (int i = 0; i < 80 && towers < 25; ++i) {
        auto site = std::make_shared<const FiniteSite>(verify::random_site(rng));
        Presheaf f = verify::random_presheaf(rng, site, 1);
        if (f.max_degree() > 0) continue;
        ASSERT_TRUE(torsor_tower(f, 2).ok());
        ++towers;
    }
    EXPECT_GT(towers, 0);
}
