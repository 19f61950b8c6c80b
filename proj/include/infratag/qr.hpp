#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "infratag/bitmatrix.hpp"

namespace infratag {

enum class QrEcc : uint8_t { L, M };

/// Byte-mode QR symbols, versions 1-3, ECC levels L and M. These are single
/// Reed-Solomon-block configurations, which covers every symbol size used by
/// the embedding pipeline (21/25/29 modules).
namespace qr {

int symbol_size(int version);                    // 17 + 4*version
int capacity_bytes(int version, QrEcc ecc);      // byte-mode payload capacity
int total_codewords(int version);
int ecc_codewords(int version, QrEcc ecc);

/// 15-bit masked format sequence for (ecc, mask), BCH(15,5)-protected.
int format_bits(QrEcc ecc, int mask);

/// Encodes payload into a symbol. Picks the best mask by the standard
/// penalty rules. Throws PayloadTooLong / UnsupportedVersion.
BitMatrix encode(const std::string& payload, int version = 1, QrEcc ecc = QrEcc::L);

struct DecodeInfo {
    std::string payload;
    int version = 0;
    QrEcc ecc = QrEcc::L;
    int mask = 0;
    int rotation = 0;        // quarter turns applied to the input before success
    int corrected_codewords = 0;
};

/// Decodes a sampled symbol matrix, trying all four rotations. Tolerates
/// codeword errors up to the Reed-Solomon bound. Throws
/// FormatInfoUnreadable / EccFailure.
DecodeInfo decode(const BitMatrix& m);

}  // namespace qr
}  // namespace infratag
