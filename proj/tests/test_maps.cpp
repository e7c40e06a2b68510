#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "topoideal/enumerate.hpp"
#include "topoideal/maps.hpp"

namespace {

using namespace topoideal;
using fixture::set;

TEST(Maps, IdentityOntoNuIsOnlyStarContinuous) {
    const MapClassVector v = map_classes(SpaceMap(fixture::s3_tau(), fixture::nu3(), fixture::identity(3)));
    EXPECT_TRUE(v[MapClass::star_i_continuous]);
    EXPECT_FALSE(v[MapClass::i_continuous]);
    EXPECT_FALSE(v[MapClass::pre_i_continuous]);
}

TEST(Maps, IdentityOnSigmaIsOnlyPreIContinuous) {
    const MapClassVector v = map_classes(SpaceMap(fixture::s3_sigma(), fixture::sigma3(), fixture::identity(3)));
    EXPECT_TRUE(v[MapClass::pre_i_continuous]);
    EXPECT_FALSE(v[MapClass::i_continuous]);
    EXPECT_FALSE(v[MapClass::star_i_continuous]);
}

TEST(Maps, IdentityOntoSigma4) {
    const MapClassVector v = map_classes(SpaceMap(fixture::s1(), fixture::sigma4(), fixture::identity(4)));
    EXPECT_TRUE(v[MapClass::pre_i_continuous]);
    EXPECT_FALSE(v[MapClass::i_continuous]);
}

TEST(Maps, PreimageAndImage) {
    const SpaceMap f(fixture::s1(), fixture::sigma4(), fixture::identity(4));
    EXPECT_EQ(preimage(f, set("acd")), set("acd"));
    EXPECT_EQ(image(f, set("ab")), set("ab"));
    const std::vector<int> constant = {1, 1, 1};
    EXPECT_EQ(preimage(constant, set("b")), set("abc"));
    EXPECT_EQ(preimage(constant, set("a")), set(""));
}

TEST(Maps, ValidatesTable) {
    EXPECT_THROW(SpaceMap(fixture::s2(), fixture::tau3(), {0, 1}), CarrierMismatch);
    EXPECT_THROW(SpaceMap(fixture::s2(), fixture::tau3(), {0, 1, 3}), CarrierMismatch);
    EXPECT_THROW(SpaceMap(fixture::s2(), fixture::tau3(), {0, 1, 2}, Ideal(2, set(""))), CarrierMismatch);
}

TEST(Maps, ImageClassesNeedCodomainIdeal) {
    const SpaceMap f(fixture::s2(), fixture::tau3(), fixture::identity(3));
    EXPECT_THROW(map_classes(f, ImageClasses::required), MissingCodomainIdeal);
    EXPECT_THROW(image_class_readings(f), MissingCodomainIdeal);
    const MapClassVector v = map_classes(f);
    EXPECT_FALSE(v[MapClass::i_open_map]);
}

TEST(Maps, ImageReadingsOnSameCarrier) {
    const SpaceMap f(fixture::s2(), fixture::tau2(), fixture::identity(3), Ideal(3, set("c")));
    const ImageReadings r = image_class_readings(f);
    ASSERT_TRUE(r.i_open_map_in_domain.has_value());
    // Identical domain and codomain: both readings agree.
    EXPECT_FALSE(r.readings_differ());
    EXPECT_EQ(r.i_open_map, map_classes(f)[MapClass::i_open_map]);
}

TEST(Maps, Compose) {
    const SpaceMap f(fixture::s2(), fixture::tau3(), {1, 2, 0});
    const SpaceMap g(IdealSpace(fixture::tau3(), Ideal(3, set(""))), fixture::nu3(), {2, 2, 0});
    const SpaceMap h = compose(f, g);
    EXPECT_EQ(h.table(), (std::vector<int>{2, 0, 2}));
    EXPECT_EQ(h.cod(), fixture::nu3());
    const SpaceMap wrong(IdealSpace(fixture::sigma4(), Ideal(4, set(""))), fixture::nu3(), {0, 0, 0, 0});
    EXPECT_THROW(compose(f, wrong), CarrierMismatch);
}

TEST(Maps, NamesRoundTrip) {
    for (MapClass c : all_map_classes()) EXPECT_EQ(map_class_from_name(name(c)), c);
}

// Every domain space, codomain topology, codomain ideal and map on n points.
TEST(Maps, AllMapsOnTwoPointsMatchDefinitions) {
    for (int n = 1; n <= 2; ++n) {
        for (int m = 1; m <= 2; ++m) {
            for (const IdealSpace& dom : oracle::all_spaces(n)) {
                const SpaceAnalysis analysis(dom);
                const auto table = analysis.class_table();
                for (const FiniteTopology& cod : topologies(m)) {
                    for (const Ideal& j : ideals(m)) {
                        for (const auto& f : maps(n, m)) {
                            const SpaceMap map(dom, cod, f, j);
                            const MapClassVector got = map_classes(map);
                            ASSERT_EQ(got, oracle::map_classes(dom, cod, f, j));
                            const MapClassVector fast = map_classes_from_table(table, cod, f);
                            for (MapClass c : all_map_classes()) {
                                if (c == MapClass::i_open_map || c == MapClass::i_closed_map) {
                                    ASSERT_FALSE(fast[c]);
                                } else {
                                    ASSERT_EQ(fast[c], got[c]);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

TEST(Maps, RandomMapsOnThreePointsMatchDefinitions) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const IdealSpace dom = oracle::random_space(3, rng);
        const IdealSpace cod = oracle::random_space(3, rng);
        const auto f = oracle::random_map(3, 3, rng);
        ASSERT_EQ(map_classes(SpaceMap(dom, cod.topology(), f, cod.ideal())),
                  oracle::map_classes(dom, cod.topology(), f, cod.ideal()));
    }
}

TEST(Maps, PreIContinuityCharacterisationsAgree) {
    for (int n = 1; n <= 2; ++n) {
        for (const IdealSpace& dom : oracle::all_spaces(n)) {
            for (const FiniteTopology& cod : topologies(n)) {
                for (const auto& f : maps(n, n)) {
                    const SpaceMap map(dom, cod, f);
                    const EquivalenceReport r = check_pre_i_continuity_equivalences(map);
                    ASSERT_TRUE(r.all_agree());
                    ASSERT_EQ(r.preimages_pre_i_open, map_classes(map)[MapClass::pre_i_continuous]);
                }
            }
        }
    }
}

} // namespace
