#pragma once

#include <cstdint>
#include <vector>

namespace infratag::gf256 {

// GF(2^8) with the QR reduction polynomial x^8+x^4+x^3+x^2+1 (0x11d),
// generator element 2.

uint8_t mul(uint8_t a, uint8_t b);
uint8_t inv(uint8_t a);
uint8_t pow_alpha(int e);  // 2^e, e may be negative

/// Reed-Solomon parity for `data`, `n_parity` codewords. Generator roots
/// alpha^0 .. alpha^(n_parity-1), matching the QR code convention.
std::vector<uint8_t> rs_encode(const std::vector<uint8_t>& data, int n_parity);

/// In-place Reed-Solomon error correction of a full codeword block
/// (data || parity) with `n_parity` parity bytes. Returns the number of
/// corrected codewords. Throws EccFailure when the error count exceeds
/// floor(n_parity / 2) or the corrected word is inconsistent.
int rs_correct(std::vector<uint8_t>& block, int n_parity);

}  // namespace infratag::gf256
