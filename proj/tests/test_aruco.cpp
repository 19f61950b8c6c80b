#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "infratag/aruco.hpp"
#include "infratag/errors.hpp"

using infratag::ArucoDictionary;
using infratag::BitMatrix;
namespace aruco = infratag::aruco;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("built-in dictionary matches the shipped asset") {
    const std::string asset = read_file(std::string(INFRATAG_SOURCE_DIR) + "/assets/dict_4x4_50.txt");
    const ArucoDictionary parsed = ArucoDictionary::parse(asset);
    const ArucoDictionary& builtin = ArucoDictionary::dict_4x4_50();
    REQUIRE(parsed.size() == 50);
    REQUIRE(builtin.size() == 50);
    for (int i = 0; i < 50; ++i) CHECK(parsed.entry(i) == builtin.entry(i));
    CHECK(builtin.serialize() == asset);
}

TEST_CASE("dictionary distance bound") {
    const ArucoDictionary& d = ArucoDictionary::dict_4x4_50();
    // frozen from the reference distribution: minimum pairwise rotated
    // Hamming distance of the 4x4_50 table is exactly 4
    CHECK(d.min_rotated_distance() == 4);
    CHECK(d.max_correction() == 1);
    CHECK(d.min_rotated_distance() >= 1 + 2 * d.max_correction());
}

TEST_CASE("marker 0 is the border-wrapped fixture entry") {
    const BitMatrix m = aruco::encode(0);
    REQUIRE(m.size() == 6);
    for (int i = 0; i < 6; ++i) {
        CHECK(m.get(0, i));
        CHECK(m.get(5, i));
        CHECK(m.get(i, 0));
        CHECK(m.get(i, 5));
    }
    // fixture entry 0: 0100101011001101 row-major, 1 = dark
    const char* expected = "0100101011001101";
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            CHECK(m.get(r + 1, c + 1) == (expected[r * 4 + c] == '1'));
}

TEST_CASE("all 50 markers are distinct and round trip") {
    std::set<std::string> seen;
    for (int id = 0; id < 50; ++id) {
        const BitMatrix m = aruco::encode(id);
        seen.insert(m.to_pbm());
        const auto res = aruco::decode(m);
        CHECK(res.id == id);
        CHECK(res.rotation == 0);
    }
    CHECK(seen.size() == 50);
}

TEST_CASE("rotation is recovered") {
    for (int id : {3, 7, 22, 49}) {
        const BitMatrix m = aruco::encode(id);
        for (int k = 0; k < 4; ++k) {
            const auto res = aruco::decode(m.rotated(k));
            CHECK(res.id == id);
            CHECK(res.rotation == k);
        }
    }
}

TEST_CASE("single flipped inner bit is corrected") {
    // oracle for this case is the exhaustive scan the decoder itself
    // performs; with dictionary distance 4 and one flip the nearest entry
    // is unique, so (id, rotation 0) must come back for every bit position
    for (int id : {3, 14, 31}) {
        for (int bit = 0; bit < 16; ++bit) {
            BitMatrix m = aruco::encode(id);
            const int r = bit / 4 + 1, c = bit % 4 + 1;
            m.set(r, c, !m.get(r, c));
            const auto res = aruco::decode(m);
            CHECK(res.id == id);
            CHECK(res.rotation == 0);
        }
    }
}

TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(aruco::decode(BitMatrix(6, true)), infratag::NoMatch);
    CHECK_THROWS_AS(aruco::decode(BitMatrix(6, false)), infratag::BorderViolation);
    CHECK_THROWS_AS(aruco::encode(50), infratag::IdOutOfRange);
    CHECK_THROWS_AS(aruco::encode(-1), infratag::IdOutOfRange);
}

TEST_CASE("border tolerance admits up to 20% light border modules") {
    BitMatrix m = aruco::encode(9);
    // flip 4 of the 20 border modules -> exactly 80%, still accepted
    m.set(0, 0, false);
    m.set(0, 3, false);
    m.set(5, 2, false);
    m.set(3, 5, false);
    CHECK(aruco::decode(m).id == 9);
    // a fifth flip crosses the bound
    m.set(5, 5, false);
    CHECK_THROWS_AS(aruco::decode(m), infratag::BorderViolation);
}
