#include "infratag/bitmatrix.hpp"

#include <sstream>

#include "infratag/errors.hpp"

namespace infratag {

int BitMatrix::count_dark() const {
    int n = 0;
    for (bool b : bits_) n += b ? 1 : 0;
    return n;
}

BitMatrix BitMatrix::rotated(int k) const {
    k = ((k % 4) + 4) % 4;
    BitMatrix out = *this;
    for (int t = 0; t < k; ++t) {
        BitMatrix r(out.size_);
        for (int row = 0; row < out.size_; ++row)
            for (int col = 0; col < out.size_; ++col)
                r.set(row, col, out.get(out.size_ - 1 - col, row));
        out = r;
    }
    return out;
}

BitMatrix BitMatrix::inverted() const {
    BitMatrix out(size_);
    for (int r = 0; r < size_; ++r)
        for (int c = 0; c < size_; ++c) out.set(r, c, !get(r, c));
    return out;
}

BitMatrix BitMatrix::center_crop(int n) const {
    if (n > size_ || (size_ - n) % 2 != 0) throw Error("center_crop: bad target size");
    const int off = (size_ - n) / 2;
    BitMatrix out(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out.set(r, c, get(r + off, c + off));
    return out;
}

BitMatrix BitMatrix::padded(int margin, bool value) const {
    BitMatrix out(size_ + 2 * margin, value);
    for (int r = 0; r < size_; ++r)
        for (int c = 0; c < size_; ++c) out.set(r + margin, c + margin, get(r, c));
    return out;
}

std::string BitMatrix::to_pbm() const {
    std::ostringstream os;
    os << "P1\n" << size_ << " " << size_ << "\n";
    for (int r = 0; r < size_; ++r) {
        for (int c = 0; c < size_; ++c) {
            if (c) os << ' ';
            os << (get(r, c) ? '1' : '0');
        }
        os << '\n';
    }
    return os.str();
}

BitMatrix BitMatrix::from_pbm(const std::string& text) {
    std::istringstream is(text);
    std::string magic;
    is >> magic;
    if (magic != "P1") throw BadImageFormat("PBM: expected P1 header");
    int w = 0, h = 0;
    is >> w >> h;
    if (w <= 0 || w != h) throw BadImageFormat("PBM: BitMatrix must be square");
    BitMatrix out(w);
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
            char ch = 0;
            if (!(is >> ch) || (ch != '0' && ch != '1'))
                throw BadImageFormat("PBM: truncated or invalid bit");
            out.set(r, c, ch == '1');
        }
    return out;
}

BitMatrix BitMatrix::checkerboard(int size) {
    BitMatrix out(size);
    for (int r = 0; r < size; ++r)
        for (int c = 0; c < size; ++c) out.set(r, c, (r + c) % 2 == 0);
    return out;
}

}  // namespace infratag
