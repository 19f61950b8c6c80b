#include "infratag/aruco.hpp"

#include <array>
#include <bit>
#include <limits>
#include <sstream>

#include "infratag/errors.hpp"

namespace infratag {

namespace {

// Standard 4x4 50-marker dictionary, row-major inner bits, MSB = cell (0,0),
// 1 = dark cell.
constexpr std::array<uint16_t, 50> kDict4x4_50{
    0x4acd, 0xf065, 0xccd2, 0x66b9, 0xab61, 0x8632, 0x61d1, 0x3b0d, 0x0125, 0x30a9,
    0x066e, 0xee58, 0xf148, 0xd5f0, 0xdb4e, 0xd9c1, 0xb99a, 0x99ff, 0x93a1, 0x8950,
    0x7974, 0x4fd4, 0x332a, 0x227d, 0x01b8, 0x6b8e, 0x531b, 0x5aab, 0xdedc, 0xcb90,
    0xbbea, 0xa84d, 0x6130, 0x0f34, 0xf751, 0xf6d6, 0xe78a, 0xfb00, 0xf209, 0xe3a5,
    0xe8e7, 0xd5d7, 0xcd73, 0xc74d, 0xdb17, 0xd114, 0xd2c0, 0xb49b, 0xafd1, 0xafec,
};

uint16_t rotate_pattern(uint16_t bits) {
    // one quarter turn clockwise of the 4x4 cell grid
    uint16_t out = 0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            const int src = (3 - c) * 4 + r;
            if (bits & (1 << (15 - src))) out |= 1 << (15 - (r * 4 + c));
        }
    return out;
}

}  // namespace

ArucoDictionary::ArucoDictionary(std::vector<uint16_t> entries, int max_correction)
    : entries_(std::move(entries)), max_correction_(max_correction) {
    if (entries_.empty()) throw BadDictionary("aruco: empty dictionary");
    const int min_dist = min_rotated_distance();
    if (min_dist < 1 + 2 * max_correction_)
        throw BadDictionary("aruco: dictionary distance too small for correction bound");
}

const ArucoDictionary& ArucoDictionary::dict_4x4_50() {
    static const ArucoDictionary dict{
        std::vector<uint16_t>(kDict4x4_50.begin(), kDict4x4_50.end()), 1};
    return dict;
}

ArucoDictionary ArucoDictionary::parse(const std::string& text, int max_correction) {
    std::istringstream is(text);
    std::vector<uint16_t> entries;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.size() != 16) throw BadDictionary("aruco: entry must have 16 bits");
        uint16_t v = 0;
        for (char ch : line) {
            if (ch != '0' && ch != '1') throw BadDictionary("aruco: entry must be binary");
            v = static_cast<uint16_t>((v << 1) | (ch == '1' ? 1 : 0));
        }
        entries.push_back(v);
    }
    return ArucoDictionary(std::move(entries), max_correction);
}

std::string ArucoDictionary::serialize() const {
    std::ostringstream os;
    for (uint16_t e : entries_) {
        for (int i = 15; i >= 0; --i) os << ((e >> i) & 1 ? '1' : '0');
        os << '\n';
    }
    return os.str();
}

uint16_t ArucoDictionary::entry(int id) const {
    if (id < 0 || id >= size()) throw IdOutOfRange("aruco: id out of range");
    return entries_[id];
}

BitMatrix ArucoDictionary::inner_pattern(int id) const {
    const uint16_t bits = entry(id);
    BitMatrix m(4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m.set(r, c, (bits >> (15 - (r * 4 + c))) & 1);
    return m;
}

int ArucoDictionary::min_rotated_distance() const {
    int best = std::numeric_limits<int>::max();
    for (size_t i = 0; i < entries_.size(); ++i) {
        std::array<uint16_t, 4> rots{entries_[i], 0, 0, 0};
        for (int k = 1; k < 4; ++k) rots[k] = rotate_pattern(rots[k - 1]);
        for (size_t j = 0; j < entries_.size(); ++j) {
            if (i == j) continue;
            for (uint16_t r : rots)
                best = std::min(best, std::popcount(static_cast<unsigned>(r ^ entries_[j])));
        }
    }
    return best;
}

namespace aruco {

BitMatrix encode(int id, const ArucoDictionary& dict) {
    const BitMatrix inner = dict.inner_pattern(id);
    BitMatrix m(6, true);  // dark border
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m.set(r + 1, c + 1, inner.get(r, c));
    return m;
}

DecodeResult decode(const BitMatrix& m, const ArucoDictionary& dict) {
    if (m.size() != 6) throw Error("aruco: expected 6x6 matrix");

    int border_dark = 0, border_total = 0;
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) {
            if (r != 0 && r != 5 && c != 0 && c != 5) continue;
            ++border_total;
            border_dark += m.get(r, c) ? 1 : 0;
        }
    if (border_dark * 5 < border_total * 4)  // < 80% dark
        throw BorderViolation("aruco: marker border not dark enough");

    uint16_t observed = 0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if (m.get(r + 1, c + 1)) observed |= 1 << (15 - (r * 4 + c));

    // candidate = rot_cw^k(entry); comparing against rotations of the
    // observed pattern instead is equivalent and cheaper to set up
    int best_id = -1, best_rot = 0, best_dist = std::numeric_limits<int>::max();
    std::array<uint16_t, 4> obs_rots{observed, 0, 0, 0};
    for (int k = 1; k < 4; ++k) obs_rots[k] = rotate_pattern(obs_rots[k - 1]);
    for (int id = 0; id < dict.size(); ++id) {
        const uint16_t entry = dict.entry(id);
        for (int k = 0; k < 4; ++k) {
            // observed == rot_cw^k(entry)  <=>  rot_cw^(4-k)(observed) == entry
            const int dist =
                std::popcount(static_cast<unsigned>(obs_rots[(4 - k) % 4] ^ entry));
            if (dist < best_dist) {
                best_dist = dist;
                best_id = id;
                best_rot = k;
            }
        }
    }
    if (best_dist > dict.max_correction()) throw NoMatch("aruco: no dictionary entry in range");
    return DecodeResult{best_id, best_rot};
}

}  // namespace aruco
}  // namespace infratag
