#include "infratag/gf256.hpp"

#include <array>

#include "infratag/errors.hpp"

namespace infratag::gf256 {

namespace {

struct Tables {
    std::array<uint8_t, 512> exp{};
    std::array<int, 256> log{};
    Tables() {
        int x = 1;
        for (int i = 0; i < 255; ++i) {
            exp[i] = static_cast<uint8_t>(x);
            log[x] = i;
            x <<= 1;
            if (x & 0x100) x ^= 0x11d;
        }
        for (int i = 255; i < 512; ++i) exp[i] = exp[i - 255];
        log[0] = -1;
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

}  // namespace

uint8_t mul(uint8_t a, uint8_t b) {
    if (a == 0 || b == 0) return 0;
    const Tables& t = tables();
    return t.exp[t.log[a] + t.log[b]];
}

uint8_t inv(uint8_t a) {
    if (a == 0) throw Error("gf256: inverse of zero");
    const Tables& t = tables();
    return t.exp[255 - t.log[a]];
}

uint8_t pow_alpha(int e) {
    e %= 255;
    if (e < 0) e += 255;
    return tables().exp[e];
}

std::vector<uint8_t> rs_encode(const std::vector<uint8_t>& data, int n_parity) {
    // generator poly g(x) = prod_{i=0}^{n_parity-1} (x - alpha^i)
    std::vector<uint8_t> gen{1};
    for (int i = 0; i < n_parity; ++i) {
        // multiply by (x + alpha^i)
        const uint8_t root = pow_alpha(i);
        std::vector<uint8_t> res(gen.size() + 1, 0);
        for (size_t j = 0; j < gen.size(); ++j) {
            res[j] ^= gen[j];
            res[j + 1] ^= mul(gen[j], root);
        }
        gen = std::move(res);
    }

    // polynomial long division: remainder of data * x^n_parity by gen
    std::vector<uint8_t> rem(n_parity, 0);
    for (uint8_t d : data) {
        const uint8_t factor = static_cast<uint8_t>(d ^ rem.front());
        rem.erase(rem.begin());
        rem.push_back(0);
        if (factor != 0)
            for (int j = 0; j < n_parity; ++j) rem[j] ^= mul(gen[j + 1], factor);
    }
    return rem;
}

namespace {

// Evaluate polynomial with coefficients coeff[0] = highest degree at x.
uint8_t poly_eval(const std::vector<uint8_t>& coeff, uint8_t x) {
    uint8_t y = 0;
    for (uint8_t c : coeff) y = static_cast<uint8_t>(mul(y, x) ^ c);
    return y;
}

}  // namespace

int rs_correct(std::vector<uint8_t>& block, int n_parity) {
    const int n = static_cast<int>(block.size());

    // syndromes S_j = r(alpha^j), j = 0 .. n_parity-1
    std::vector<uint8_t> synd(n_parity, 0);
    bool clean = true;
    for (int j = 0; j < n_parity; ++j) {
        synd[j] = poly_eval(block, pow_alpha(j));
        clean = clean && synd[j] == 0;
    }
    if (clean) return 0;

    // Berlekamp-Massey: error locator sigma (ascending powers, sigma[0] = 1)
    std::vector<uint8_t> sigma{1}, prev{1};
    int L = 0, m = 1;
    uint8_t b = 1;
    for (int i = 0; i < n_parity; ++i) {
        uint8_t delta = synd[i];
        for (int j = 1; j <= L; ++j)
            if (j < static_cast<int>(sigma.size()))
                delta ^= mul(sigma[j], synd[i - j]);
        if (delta == 0) {
            ++m;
        } else if (2 * L <= i) {
            std::vector<uint8_t> tmp = sigma;
            const uint8_t coef = mul(delta, inv(b));
            if (sigma.size() < prev.size() + m) sigma.resize(prev.size() + m, 0);
            for (size_t j = 0; j < prev.size(); ++j)
                sigma[j + m] ^= mul(coef, prev[j]);
            L = i + 1 - L;
            prev = std::move(tmp);
            b = delta;
            m = 1;
        } else {
            const uint8_t coef = mul(delta, inv(b));
            if (sigma.size() < prev.size() + m) sigma.resize(prev.size() + m, 0);
            for (size_t j = 0; j < prev.size(); ++j)
                sigma[j + m] ^= mul(coef, prev[j]);
            ++m;
        }
    }
    if (L == 0 || 2 * L > n_parity) throw EccFailure("rs: too many errors");

    // Chien search over valid positions: error at transmitted index i has
    // locator X = alpha^(n-1-i); sigma has roots at X^-1.
    std::vector<int> positions;
    std::vector<uint8_t> locators;
    for (int i = 0; i < n; ++i) {
        const int e = n - 1 - i;
        const uint8_t x_inv = pow_alpha(-e);
        uint8_t v = 0;
        for (int j = static_cast<int>(sigma.size()) - 1; j >= 0; --j)
            v = static_cast<uint8_t>(mul(v, x_inv) ^ sigma[j]);
        if (v == 0) {
            positions.push_back(i);
            locators.push_back(pow_alpha(e));
        }
    }
    if (static_cast<int>(positions.size()) != L) throw EccFailure("rs: locator degree mismatch");

    // Omega(x) = S(x) * sigma(x) mod x^n_parity  (S ascending powers)
    std::vector<uint8_t> omega(n_parity, 0);
    for (int i = 0; i < n_parity; ++i) {
        for (size_t j = 0; j < sigma.size() && j <= static_cast<size_t>(i); ++j)
            omega[i] ^= mul(sigma[j], synd[i - j]);
    }

    // Forney with first consecutive root alpha^0: e_k = X_k * Omega(X_k^-1) / sigma'(X_k^-1)
    for (size_t k = 0; k < positions.size(); ++k) {
        const uint8_t X = locators[k];
        const uint8_t Xi = inv(X);
        uint8_t om = 0;
        for (int j = n_parity - 1; j >= 0; --j) om = static_cast<uint8_t>(mul(om, Xi) ^ omega[j]);
        uint8_t dsig = 0;  // formal derivative: odd-power terms only
        for (size_t j = 1; j < sigma.size(); j += 2) {
            uint8_t term = sigma[j];
            // term * Xi^(j-1)
            for (size_t p = 1; p < j; ++p) term = mul(term, Xi);
            dsig ^= term;
        }
        if (dsig == 0) throw EccFailure("rs: forney division by zero");
        const uint8_t mag = mul(mul(X, om), inv(dsig));
        block[positions[k]] ^= mag;
    }

    // verify
    for (int j = 0; j < n_parity; ++j)
        if (poly_eval(block, pow_alpha(j)) != 0) throw EccFailure("rs: correction failed");
    return L;
}

}  // namespace infratag::gf256
