#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "infratag/bitmatrix.hpp"

namespace infratag {

/// 4x4 marker dictionary. Entries hold the 16 inner bits row-major, MSB
/// first, 1 = dark cell. The shipped asset is the standard 50-entry 4x4
/// dictionary; loaders for the line-per-marker asset format are provided so
/// alternative dictionaries can be dropped in.
class ArucoDictionary {
public:
    ArucoDictionary(std::vector<uint16_t> entries, int max_correction);

    /// The built-in DICT_4X4_50 table.
    static const ArucoDictionary& dict_4x4_50();

    /// Parses the asset format: one marker per line, 16 '0'/'1' characters,
    /// row-major inner bits, '1' = dark.
    static ArucoDictionary parse(const std::string& text, int max_correction = 1);

    std::string serialize() const;

    int size() const { return static_cast<int>(entries_.size()); }
    int max_correction() const { return max_correction_; }
    uint16_t entry(int id) const;

    /// Inner 4x4 pattern of an id as a BitMatrix.
    BitMatrix inner_pattern(int id) const;

    /// Minimum pairwise Hamming distance over all rotations; the shipped
    /// dictionary has distance 4 (hence max_correction 1).
    int min_rotated_distance() const;

private:
    std::vector<uint16_t> entries_;
    int max_correction_;
};

namespace aruco {

struct DecodeResult {
    int id = -1;
    int rotation = 0;  // quarter turns clockwise applied to the canonical marker
};

/// 6x6 marker: one-module dark border around the 4x4 dictionary pattern.
BitMatrix encode(int id, const ArucoDictionary& dict = ArucoDictionary::dict_4x4_50());

/// Identifies a sampled 6x6 candidate. Border modules must be >= 80% dark;
/// the inner pattern must match an entry within the dictionary's correction
/// bound under some rotation. Throws BorderViolation / NoMatch.
DecodeResult decode(const BitMatrix& m,
                    const ArucoDictionary& dict = ArucoDictionary::dict_4x4_50());

}  // namespace aruco
}  // namespace infratag
