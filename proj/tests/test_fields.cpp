#include "projmp/fields.hpp"

#include <gtest/gtest.h>

using namespace projmp;

TEST(RationalField, ParsesAndCanonicalizes) {
    RationalField f;
    EXPECT_EQ(f.parse("2/4"), f.parse("1/2"));
    EXPECT_EQ(f.format(f.parse("-6/4")), "-3/2");
    EXPECT_EQ(f.format(f.parse("4/2")), "2");
    EXPECT_EQ(f.format(f.parse("-0")), "0");
    EXPECT_THROW(f.parse("1/0"), std::invalid_argument);
    EXPECT_THROW(f.parse("1/-2"), std::invalid_argument);
    EXPECT_THROW(f.parse("x"), std::invalid_argument);
    EXPECT_THROW(f.parse(""), std::invalid_argument);
    EXPECT_THROW(f.parse("-"), std::invalid_argument);
}

TEST(GaussianRationalField, ArithmeticAndConjugation) {
    GaussianRationalField f;
    auto z = f.parse("1/2,-3");
    EXPECT_EQ(f.format(z), "1/2,-3");
    EXPECT_EQ(f.conj(z), f.parse("1/2,3"));
    EXPECT_EQ(f.mul(z, f.inv(z)), f.one());
    // (1 + i)(1 - i) = 2
    EXPECT_EQ(f.mul(f.parse("1,1"), f.parse("1,-1")), f.from_int(2));
    EXPECT_THROW(f.parse("1/2"), std::invalid_argument);
}

TEST(PrimeField, RejectsCompositeModulus) {
    EXPECT_THROW(PrimeField(4), std::invalid_argument);
    EXPECT_THROW(PrimeField(1), std::invalid_argument);
    EXPECT_NO_THROW(PrimeField(7));
}

TEST(PrimeField, InversesExhaustive) {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u}) {
        PrimeField f(p);
        for (std::uint32_t v = 1; v < p; ++v)
            EXPECT_EQ(f.mul(Residue{v}, f.inv(Residue{v})), f.one()) << "p=" << p << " v=" << v;
    }
    PrimeField f(5);
    EXPECT_EQ(f.from_int(-1), Residue{4});
    EXPECT_EQ(f.parse("4"), Residue{4});
    EXPECT_THROW(f.parse("5"), std::invalid_argument);
}
