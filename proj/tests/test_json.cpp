#include <gtest/gtest.h>

#include "injword/injword.hpp"
#include "injword/json_io.hpp"

using namespace injword;

TEST(JsonIo, BigIntegersBecomeStrings) {
    const Integer big("123456789012345678901234567890");
    EXPECT_TRUE(to_json(big).is_string());
    EXPECT_TRUE(to_json(Integer(-42)).is_number_integer());
    EXPECT_EQ(integer_from_json(to_json(big)), big);
    EXPECT_EQ(integer_from_json(Json(-7)), -7);
    EXPECT_THROW(integer_from_json(Json("12x")), std::invalid_argument);
}

TEST(JsonIo, ChainComplexRoundTrip) {
    for (const auto& c : {inj_complex(GroundSet::standard(4)), inj2_complex(1, GroundSet::standard(5)),
                          twisted_inj_complex(SymmetricGroupRep::sign(2), GroundSet::standard(4))}) {
        const auto back = complex_from_json(Json::parse(to_json(c).dump()));
        EXPECT_EQ(back.lo(), c.lo());
        EXPECT_EQ(back.dims(), c.dims());
        for (int q = c.lo() + 1; q <= c.hi(); ++q) EXPECT_EQ(back.boundary(q), c.boundary(q));
    }
}

TEST(JsonIo, RejectsMalformedComplex) {
    auto j = to_json(inj_complex(GroundSet::standard(2)));
    auto shrunk = j;
    shrunk["dims"][1] = 1;
    EXPECT_ANY_THROW(complex_from_json(shrunk));
    auto flipped = j;
    flipped["boundaries"][0]["entries"][0][2] = -1;
    EXPECT_THROW(complex_from_json(flipped), std::invalid_argument);
}

TEST(JsonIo, PolynomialRoundTrip) {
    const auto p = bracket(left_nested({1, 2}).expand(), left_nested({3, 4, 5}).expand());
    EXPECT_EQ(polynomial_from_json(Json::parse(to_json(p).dump())), p);
}

TEST(JsonIo, SchurRoundTrip) {
    const auto e = decompose_free_fimplus(irreducible(Partition({1})), 7);
    const auto j = to_json(e);
    EXPECT_EQ(j["dimension"], 105);
    EXPECT_EQ(schur_from_json(Json::parse(j.dump())), e);
}

TEST(JsonIo, RepresentationAndModuleRoundTrip) {
    const auto w = SymmetricGroupRep::regular(3);
    const auto back = rep_from_json(to_json(w));
    EXPECT_EQ(back.generators(), w.generators());
    const auto v = PresentedFIModule::free_module(SymmetricGroupRep::sign(2), 4);
    const auto vb = fimodule_from_json(Json::parse(to_json(v).dump()));
    for (int k = 0; k <= 4; ++k) {
        EXPECT_EQ(vb.dim(k), v.dim(k));
        EXPECT_EQ(h0_fi(vb, k), h0_fi(v, k));
    }
}

TEST(JsonIo, FbDataRoundTrip) {
    FBData data = FBData::dims({{2, 5}});
    data.set_character(3, mn_character(Partition({2, 1})));
    data.set_matrices(1, SymmetricGroupRep::trivial(1));
    const auto back = fbdata_from_json(Json::parse(to_json(data).dump()));
    for (int k = 0; k <= 4; ++k) EXPECT_EQ(back.dim(k), data.dim(k));
    EXPECT_TRUE(back.entries().at(3).character.has_value());
    EXPECT_TRUE(back.entries().at(1).matrices.has_value());
}
