#include "infratag/qr.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <optional>

#include "infratag/errors.hpp"
#include "infratag/gf256.hpp"

namespace infratag::qr {

namespace {

constexpr int kMinVersion = 1;
constexpr int kMaxVersion = 3;

struct BlockSpec {
    int total;
    int ecc_l;
    int ecc_m;
};

// total codewords and parity counts per version (single RS block throughout)
constexpr std::array<BlockSpec, 4> kBlocks{{
    {0, 0, 0},
    {26, 7, 10},
    {44, 10, 16},
    {70, 15, 26},
}};

// remainder bits appended after the last codeword
constexpr std::array<int, 4> kRemainderBits{0, 0, 7, 7};

void check_version(int version) {
    if (version < kMinVersion || version > kMaxVersion)
        throw UnsupportedVersion("qr: version must be 1..3");
}

int ecc_format_value(QrEcc ecc) {
    return ecc == QrEcc::L ? 1 : 0;
}

bool mask_bit(int mask, int row, int col) {
    switch (mask) {
        case 0: return (row + col) % 2 == 0;
        case 1: return row % 2 == 0;
        case 2: return col % 3 == 0;
        case 3: return (row + col) % 3 == 0;
        case 4: return (row / 2 + col / 3) % 2 == 0;
        case 5: return row * col % 2 + row * col % 3 == 0;
        case 6: return (row * col % 2 + row * col % 3) % 2 == 0;
        case 7: return ((row + col) % 2 + row * col % 3) % 2 == 0;
        default: throw Error("qr: bad mask index");
    }
}

/// Function-module template: finder patterns, separators, timing, alignment,
/// dark module, and reserved format areas.
struct Layout {
    int size;
    BitMatrix modules;     // function modules pre-drawn, data area light
    std::vector<bool> is_function;  // row-major flags

    bool function_at(int r, int c) const { return is_function[static_cast<size_t>(r) * size + c]; }
};

Layout make_layout(int version) {
    const int s = symbol_size(version);
    Layout ly{s, BitMatrix(s), std::vector<bool>(static_cast<size_t>(s) * s, false)};

    auto set_function = [&](int r, int c, bool dark) {
        ly.modules.set(r, c, dark);
        ly.is_function[static_cast<size_t>(r) * s + c] = true;
    };

    auto draw_finder = [&](int top, int left) {
        for (int r = -1; r <= 7; ++r)
            for (int c = -1; c <= 7; ++c) {
                const int rr = top + r, cc = left + c;
                if (rr < 0 || rr >= s || cc < 0 || cc >= s) continue;
                const int d = std::max(std::abs(r - 3), std::abs(c - 3));
                set_function(rr, cc, d != 2 && d != 4);
            }
    };
    draw_finder(0, 0);
    draw_finder(0, s - 7);
    draw_finder(s - 7, 0);

    // timing patterns
    for (int i = 8; i < s - 8; ++i) {
        set_function(6, i, i % 2 == 0);
        set_function(i, 6, i % 2 == 0);
    }

    // alignment pattern (versions 2,3: single pattern at (p,p))
    if (version >= 2) {
        const int p = version == 2 ? 18 : 22;
        for (int r = -2; r <= 2; ++r)
            for (int c = -2; c <= 2; ++c)
                set_function(p + r, p + c, std::max(std::abs(r), std::abs(c)) != 1);
    }

    // reserve format info areas (values drawn later) and the dark module
    for (int i = 0; i <= 8; ++i) {
        if (i != 6) {
            if (!ly.function_at(8, i)) set_function(8, i, false);
            if (!ly.function_at(i, 8)) set_function(i, 8, false);
        }
    }
    for (int i = 0; i < 8; ++i) {
        if (!ly.function_at(s - 1 - i, 8)) set_function(s - 1 - i, 8, false);
        if (!ly.function_at(8, s - 8 + i)) set_function(8, s - 8 + i, false);
    }
    set_function(s - 8, 8, true);  // dark module

    return ly;
}

/// Zigzag order of data module coordinates (the standard two-column snake).
std::vector<std::pair<int, int>> data_module_order(const Layout& ly) {
    std::vector<std::pair<int, int>> order;
    const int s = ly.size;
    bool upward = true;
    for (int right = s - 1; right >= 1; right -= 2) {
        if (right == 6) right = 5;  // skip the timing column
        for (int i = 0; i < s; ++i) {
            const int row = upward ? s - 1 - i : i;
            for (int dc = 0; dc < 2; ++dc) {
                const int col = right - dc;
                if (!ly.function_at(row, col)) order.emplace_back(row, col);
            }
        }
        upward = !upward;
    }
    return order;
}

void draw_format(BitMatrix& m, int bits) {
    const int s = m.size();
    auto bit = [&](int i) { return ((bits >> i) & 1) != 0; };
    for (int i = 0; i <= 5; ++i) m.set(8, i, bit(i));
    m.set(8, 7, bit(6));
    m.set(8, 8, bit(7));
    m.set(7, 8, bit(8));
    for (int i = 9; i < 15; ++i) m.set(14 - i, 8, bit(i));
    for (int i = 0; i < 8; ++i) m.set(s - 1 - i, 8, bit(i));
    for (int i = 8; i < 15; ++i) m.set(8, s - 15 + i, bit(i));
    m.set(s - 8, 8, true);
}

int read_format_copy1(const BitMatrix& m) {
    int bits = 0;
    auto put = [&](int i, bool v) { bits |= (v ? 1 : 0) << i; };
    for (int i = 0; i <= 5; ++i) put(i, m.get(8, i));
    put(6, m.get(8, 7));
    put(7, m.get(8, 8));
    put(8, m.get(7, 8));
    for (int i = 9; i < 15; ++i) put(i, m.get(14 - i, 8));
    return bits;
}

int read_format_copy2(const BitMatrix& m) {
    const int s = m.size();
    int bits = 0;
    auto put = [&](int i, bool v) { bits |= (v ? 1 : 0) << i; };
    for (int i = 0; i < 8; ++i) put(i, m.get(s - 1 - i, 8));
    for (int i = 8; i < 15; ++i) put(i, m.get(8, s - 15 + i));
    return bits;
}

// penalty scoring per the standard mask-evaluation rules
int penalty_score(const BitMatrix& m) {
    const int s = m.size();
    int score = 0;

    // N1: runs of >= 5 equal modules, rows and columns
    for (int axis = 0; axis < 2; ++axis) {
        for (int a = 0; a < s; ++a) {
            int run = 1;
            for (int b = 1; b <= s; ++b) {
                const bool same =
                    b < s && (axis == 0 ? m.get(a, b) == m.get(a, b - 1)
                                        : m.get(b, a) == m.get(b - 1, a));
                if (same) {
                    ++run;
                } else {
                    if (run >= 5) score += 3 + (run - 5);
                    run = 1;
                }
            }
        }
    }

    // N2: 2x2 blocks of equal modules
    for (int r = 0; r + 1 < s; ++r)
        for (int c = 0; c + 1 < s; ++c) {
            const bool v = m.get(r, c);
            if (v == m.get(r, c + 1) && v == m.get(r + 1, c) && v == m.get(r + 1, c + 1))
                score += 3;
        }

    // N3: finder-like 1:1:3:1:1 pattern with 4 light modules on either side
    constexpr int kPat = 0b10111010000;
    constexpr int kPatRev = 0b00001011101;
    for (int axis = 0; axis < 2; ++axis) {
        for (int a = 0; a < s; ++a) {
            int window = 0;
            for (int b = 0; b < s; ++b) {
                const bool v = axis == 0 ? m.get(a, b) : m.get(b, a);
                window = ((window << 1) | (v ? 1 : 0)) & 0x7ff;
                if (b >= 10 && (window == kPat || window == kPatRev)) score += 40;
            }
        }
    }

    // N4: dark-module proportion
    const int dark = m.count_dark();
    const int total = s * s;
    const int percent = (dark * 100 + total / 2) / total;
    score += std::abs(percent - 50) / 5 * 10;
    return score;
}

std::vector<uint8_t> build_codewords(const std::string& payload, int version, QrEcc ecc) {
    const int cap = capacity_bytes(version, ecc);
    if (static_cast<int>(payload.size()) > cap) throw PayloadTooLong("qr: payload exceeds capacity");

    const int n_data = kBlocks[version].total - ecc_codewords(version, ecc);

    std::vector<bool> bits;
    auto push_bits = [&](int value, int count) {
        for (int i = count - 1; i >= 0; --i) bits.push_back(((value >> i) & 1) != 0);
    };
    push_bits(0b0100, 4);                                        // byte mode
    push_bits(static_cast<int>(payload.size()), 8);              // count (versions 1..9)
    for (unsigned char ch : payload) push_bits(ch, 8);
    const int capacity_bits = n_data * 8;
    const int terminator = std::min<int>(4, capacity_bits - static_cast<int>(bits.size()));
    push_bits(0, terminator);
    while (bits.size() % 8 != 0) bits.push_back(false);

    std::vector<uint8_t> data;
    for (size_t i = 0; i < bits.size(); i += 8) {
        int b = 0;
        for (int j = 0; j < 8; ++j) b = (b << 1) | (bits[i + j] ? 1 : 0);
        data.push_back(static_cast<uint8_t>(b));
    }
    const std::array<uint8_t, 2> pad{0xec, 0x11};
    for (int i = 0; static_cast<int>(data.size()) < n_data; ++i) data.push_back(pad[i % 2]);

    std::vector<uint8_t> parity = gf256::rs_encode(data, ecc_codewords(version, ecc));
    data.insert(data.end(), parity.begin(), parity.end());
    return data;
}

}  // namespace

int symbol_size(int version) {
    check_version(version);
    return 17 + 4 * version;
}

int total_codewords(int version) {
    check_version(version);
    return kBlocks[version].total;
}

int ecc_codewords(int version, QrEcc ecc) {
    check_version(version);
    return ecc == QrEcc::L ? kBlocks[version].ecc_l : kBlocks[version].ecc_m;
}

int capacity_bytes(int version, QrEcc ecc) {
    // 4 mode bits + 8 count bits leave (8*k - 12) payload bits
    return total_codewords(version) - ecc_codewords(version, ecc) - 2;
}

int format_bits(QrEcc ecc, int mask) {
    const int data = (ecc_format_value(ecc) << 3) | mask;
    int rem = data;
    for (int i = 0; i < 10; ++i) rem = (rem << 1) ^ ((rem >> 9) * 0x537);
    return ((data << 10) | rem) ^ 0x5412;
}

BitMatrix encode(const std::string& payload, int version, QrEcc ecc) {
    check_version(version);
    const Layout ly = make_layout(version);
    const std::vector<uint8_t> codewords = build_codewords(payload, version, ecc);
    const std::vector<std::pair<int, int>> order = data_module_order(ly);

    std::vector<bool> stream;
    stream.reserve(order.size());
    for (uint8_t cw : codewords)
        for (int i = 7; i >= 0; --i) stream.push_back(((cw >> i) & 1) != 0);
    stream.resize(order.size(), false);  // remainder bits

    std::optional<BitMatrix> best;
    int best_score = 0;
    for (int mask = 0; mask < 8; ++mask) {
        BitMatrix m = ly.modules;
        for (size_t i = 0; i < order.size(); ++i) {
            const auto [r, c] = order[i];
            m.set(r, c, stream[i] ^ mask_bit(mask, r, c));
        }
        draw_format(m, format_bits(ecc, mask));
        const int score = penalty_score(m);
        if (!best || score < best_score) {
            best = std::move(m);
            best_score = score;
        }
    }
    return *best;
}

namespace {

std::optional<qr::DecodeInfo> try_decode_oriented(const BitMatrix& m) {
    const int s = m.size();
    const int version = (s - 17) / 4;

    // Read both redundant format copies; keep the one with the lower BCH
    // distance, ties toward copy 1.
    int best_dist = 4, best_value = -1;
    for (int copy = 0; copy < 2; ++copy) {
        const int read = copy == 0 ? read_format_copy1(m) : read_format_copy2(m);
        for (int ecc_bits = 0; ecc_bits < 2; ++ecc_bits) {
            for (int mask = 0; mask < 8; ++mask) {
                const QrEcc ecc = ecc_bits == 1 ? QrEcc::L : QrEcc::M;
                const int cand = format_bits(ecc, mask);
                const int dist = std::popcount(static_cast<unsigned>(read ^ cand));
                if (dist < best_dist) {
                    best_dist = dist;
                    best_value = (ecc_bits << 3) | mask;
                }
            }
        }
    }
    if (best_value < 0) return std::nullopt;
    const QrEcc ecc = (best_value >> 3) == 1 ? QrEcc::L : QrEcc::M;
    const int mask = best_value & 7;

    const Layout ly = make_layout(version);
    const std::vector<std::pair<int, int>> order = data_module_order(ly);
    std::vector<bool> stream;
    stream.reserve(order.size());
    for (const auto& [r, c] : order) stream.push_back(m.get(r, c) ^ mask_bit(mask, r, c));

    const int n_total = total_codewords(version);
    std::vector<uint8_t> block;
    block.reserve(n_total);
    for (int i = 0; i < n_total; ++i) {
        int b = 0;
        for (int j = 0; j < 8; ++j) b = (b << 1) | (stream[i * 8 + j] ? 1 : 0);
        block.push_back(static_cast<uint8_t>(b));
    }

    int corrected = 0;
    try {
        corrected = gf256::rs_correct(block, ecc_codewords(version, ecc));
    } catch (const EccFailure&) {
        return std::nullopt;
    }

    // parse byte-mode segment
    const int n_data = n_total - ecc_codewords(version, ecc);
    std::vector<bool> data_bits;
    for (int i = 0; i < n_data; ++i)
        for (int j = 7; j >= 0; --j) data_bits.push_back(((block[i] >> j) & 1) != 0);
    size_t pos = 0;
    auto take = [&](int count) {
        int v = 0;
        for (int i = 0; i < count; ++i) v = (v << 1) | (data_bits[pos++] ? 1 : 0);
        return v;
    };
    if (data_bits.size() < 12) return std::nullopt;
    const int mode = take(4);
    if (mode != 0b0100) return std::nullopt;
    const int count = take(8);
    if (count < 0 || pos + 8 * count > data_bits.size()) return std::nullopt;
    std::string payload;
    payload.reserve(count);
    for (int i = 0; i < count; ++i) payload.push_back(static_cast<char>(take(8)));

    qr::DecodeInfo info;
    info.payload = std::move(payload);
    info.version = version;
    info.ecc = ecc;
    info.mask = mask;
    info.corrected_codewords = corrected;
    return info;
}

}  // namespace

DecodeInfo decode(const BitMatrix& m) {
    const int s = m.size();
    if (s != 21 && s != 25 && s != 29) throw FormatInfoUnreadable("qr: unsupported matrix size");

    bool any_format = false;
    for (int rot = 0; rot < 4; ++rot) {
        const BitMatrix r = m.rotated(rot);
        // cheap orientation gate: require a plausible format read
        int best = 16;
        for (int copy = 0; copy < 2; ++copy) {
            const int read = copy == 0 ? read_format_copy1(r) : read_format_copy2(r);
            for (int e = 0; e < 2; ++e)
                for (int msk = 0; msk < 8; ++msk) {
                    const int cand = format_bits(e == 1 ? QrEcc::L : QrEcc::M, msk);
                    best = std::min(best, std::popcount(static_cast<unsigned>(read ^ cand)));
                }
        }
        if (best > 3) continue;
        any_format = true;
        if (auto info = try_decode_oriented(r)) {
            info->rotation = rot;
            return *info;
        }
    }
    if (!any_format) throw FormatInfoUnreadable("qr: no readable format info in any rotation");
    throw EccFailure("qr: error correction failed in all rotations");
}

}  // namespace infratag::qr
