#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace infratag {

/// Square grid of tag modules. true = dark module (printed/opaque bit);
/// the convention is used consistently from encoding through embedding.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int size, bool fill = false)
        : size_(size), bits_(static_cast<size_t>(size) * size, fill) {}

    int size() const { return size_; }

    bool get(int row, int col) const { return bits_[idx(row, col)]; }
    void set(int row, int col, bool v) { bits_[idx(row, col)] = v; }

    /// Count of dark modules.
    int count_dark() const;

    /// Rotated copy, k quarter turns clockwise.
    BitMatrix rotated(int k) const;

    /// Bitwise inversion (dark <-> light).
    BitMatrix inverted() const;

    /// Central n x n sub-matrix; requires (size - n) even.
    BitMatrix center_crop(int n) const;

    /// Pads with `margin` rings of the given bit value.
    BitMatrix padded(int margin, bool value) const;

    bool operator==(const BitMatrix& o) const = default;

    /// PBM (P1) text serialization, used for fixtures. '1' = dark.
    std::string to_pbm() const;
    static BitMatrix from_pbm(const std::string& text);

    /// Alternating dark/light pattern, (0,0) dark.
    static BitMatrix checkerboard(int size);

private:
    size_t idx(int row, int col) const { return static_cast<size_t>(row) * size_ + col; }

    int size_ = 0;
    std::vector<bool> bits_;
};

}  // namespace infratag
