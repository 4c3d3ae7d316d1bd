#include "qs135/squares.hpp"

#include <cmath>
#include <stdexcept>

namespace qs135 {

int64_t isqrt(int64_t v) {
    if (v < 0) throw std::invalid_argument("isqrt: negative input");
    constexpr int64_t kRootMax = 3'037'000'499;  // floor(sqrt(INT64_MAX))
    int64_t r = static_cast<int64_t>(std::sqrt(static_cast<double>(v)));
    if (r > kRootMax) r = kRootMax;
    while (r > 0 && r * r > v) --r;
    while (r < kRootMax && (r + 1) * (r + 1) <= v) ++r;
    return r;
}

namespace {
// squares mod 64 as a bitmask; cheap reject before the exact test
constexpr uint64_t kSquareMask64 = [] {
    uint64_t m = 0;
    for (int i = 0; i < 64; ++i) m |= uint64_t{1} << ((i * i) & 63);
    return m;
}();
}  // namespace

bool is_perfect_square(int64_t v, int64_t* root) {
    if (v < 0) return false;
    if (!(kSquareMask64 >> (v & 63) & 1)) return false;
    const int64_t r = isqrt(v);
    if (r * r != v) return false;
    if (root) *root = r;
    return true;
}

bool is_three_square_representable(int64_t N) {
    if (N < 0) return false;
    while (N != 0 && (N & 3) == 0) N >>= 2;
    return (N & 7) != 7;
}

std::vector<ThreeSquares> three_square_decompositions(int64_t N, int limit) {
    if (!is_three_square_representable(N))
        throw std::invalid_argument("three_square_decompositions: N is of the form 4^r(8s+7)");
    std::vector<ThreeSquares> out;
    for (int64_t A = isqrt(N); A >= 0 && static_cast<int>(out.size()) < limit; --A) {
        const int64_t r = N - A * A;
        for (int64_t B = std::min(A, isqrt(r)); B >= 0; --B) {
            int64_t C = 0;
            if (!is_perfect_square(r - B * B, &C)) continue;
            if (C > B) break;  // C only grows as B decreases
            out.push_back({A, B, C, N});
            if (static_cast<int>(out.size()) >= limit) break;
        }
    }
    return out;
}

int64_t p4_partition_count(int64_t ell, int64_t cap) {
    if (ell <= 0) throw std::invalid_argument("p4_partition_count: ell must be positive");
    if (ell > cap) throw std::invalid_argument("p4_partition_count: ell exceeds enumeration cap");
    int64_t count = 0;
    for (int64_t a1 = isqrt(ell); a1 >= 1; --a1) {
        const int64_t r1 = ell - a1 * a1;
        if (3 * a1 * a1 < r1) break;  // a2,a3,a4 <= a1 can no longer reach ell
        for (int64_t a2 = std::min(a1, isqrt(r1)); a2 >= 0; --a2) {
            const int64_t r2 = r1 - a2 * a2;
            if (2 * a2 * a2 < r2) break;
            for (int64_t a3 = std::min(a2, isqrt(r2)); a3 >= 0; --a3) {
                const int64_t r3 = r2 - a3 * a3;
                if (a3 * a3 < r3) break;
                int64_t a4 = 0;
                if (is_perfect_square(r3, &a4) && a4 <= a3) ++count;
            }
        }
    }
    return count;
}

SquareTable::SquareTable(int64_t max_value, int64_t max_bytes) {
    if (max_value < 0) max_value = 0;
    limit_ = std::min(max_value, max_bytes * 8 - 1);
    bits_.assign(static_cast<size_t>(limit_ / 64 + 1), 0);
    for (int64_t r = 0; r * r <= limit_; ++r) {
        const int64_t v = r * r;
        bits_[static_cast<size_t>(v >> 6)] |= uint64_t{1} << (v & 63);
    }
}

}  // namespace qs135
