#include <doctest.h>

#include "infratag/bitmatrix.hpp"
#include "infratag/errors.hpp"

using infratag::BitMatrix;

TEST_CASE("rotation composes to identity") {
    BitMatrix m(5);
    m.set(0, 1, true);
    m.set(2, 3, true);
    m.set(4, 4, true);
    CHECK(m.rotated(4) == m);
    CHECK(m.rotated(1).rotated(3) == m);
    CHECK(m.rotated(2).rotated(2) == m);
}

TEST_CASE("rotation moves corners clockwise") {
    BitMatrix m(3);
    m.set(0, 0, true);  // top-left
    const BitMatrix r = m.rotated(1);
    CHECK(r.get(0, 2));  // -> top-right
    CHECK_FALSE(r.get(0, 0));
}

TEST_CASE("pbm round trip") {
    BitMatrix m = BitMatrix::checkerboard(7);
    const std::string text = m.to_pbm();
    CHECK(BitMatrix::from_pbm(text) == m);
    CHECK_THROWS_AS(BitMatrix::from_pbm("P2\n3 3\n"), infratag::BadImageFormat);
    CHECK_THROWS_AS(BitMatrix::from_pbm("P1\n2 2\n1 0 1"), infratag::BadImageFormat);
}

TEST_CASE("pad and crop are inverse") {
    BitMatrix m = BitMatrix::checkerboard(4);
    const BitMatrix p = m.padded(2, false);
    CHECK(p.size() == 8);
    CHECK(p.center_crop(4) == m);
}

TEST_CASE("count and invert") {
    BitMatrix m = BitMatrix::checkerboard(4);
    CHECK(m.count_dark() == 8);
    CHECK(m.inverted().count_dark() == 8);
    CHECK(m.inverted().inverted() == m);
}
