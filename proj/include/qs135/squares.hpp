#pragma once

#include <cstdint>
#include <vector>

namespace qs135 {

/// floor(sqrt(v)) for v >= 0. Hardware sqrt seed with exact integer correction.
int64_t isqrt(int64_t v);

/// True iff v = r^2 for some integer r >= 0; the root is written to *root.
bool is_perfect_square(int64_t v, int64_t* root = nullptr);

/// Legendre: N >= 0 is a sum of three squares iff it is not 4^r (8s + 7).
bool is_three_square_representable(int64_t N);

/// A canonical three-square decomposition A^2 + B^2 + C^2 = N with
/// A >= B >= C >= 0. Signed variants are produced by callers on demand.
struct ThreeSquares {
    int64_t A = 0;
    int64_t B = 0;
    int64_t C = 0;
    int64_t N = 0;
    friend bool operator==(const ThreeSquares&, const ThreeSquares&) = default;
};

/// Up to `limit` canonical decompositions of N, ordered by descending A then
/// descending B. Nonempty whenever is_three_square_representable(N) holds;
/// callers must filter with that test first.
std::vector<ThreeSquares> three_square_decompositions(int64_t N, int limit = 32);

/// Number of multisets a1 >= a2 >= a3 >= a4 >= 0 with sum of squares = ell.
int64_t p4_partition_count(int64_t ell, int64_t cap = 1'000'000);

/// Bitset-backed perfect-square membership for hot verification loops.
/// Values beyond the table limit fall back to the exact isqrt test.
class SquareTable {
public:
    /// Covers values in [0, max_value], truncated to the memory budget.
    explicit SquareTable(int64_t max_value, int64_t max_bytes = 64 << 20);

    bool test(int64_t v) const {
        if (v < 0) return false;
        if (v <= limit_) return bits_[static_cast<size_t>(v >> 6)] >> (v & 63) & 1;
        return is_perfect_square(v);
    }

private:
    int64_t limit_ = -1;
    std::vector<uint64_t> bits_;
};

}  // namespace qs135
