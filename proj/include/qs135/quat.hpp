#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qs135 {

/// A Lipschitz integer a + bi + cj + dk with exact 64-bit coordinates.
///
/// All arithmetic is exact. Coordinate magnitudes stay below 2^31 for every
/// supported workload (norms up to 35 * 10^14), so products of coordinates
/// never overflow a signed 64-bit intermediate.
struct Quat {
    int64_t a = 0;
    int64_t b = 0;
    int64_t c = 0;
    int64_t d = 0;

    constexpr Quat() = default;
    constexpr Quat(int64_t a_, int64_t b_ = 0, int64_t c_ = 0, int64_t d_ = 0)
        : a(a_), b(b_), c(c_), d(d_) {}

    static constexpr Quat from_array(const std::array<int64_t, 4>& v) {
        return Quat{v[0], v[1], v[2], v[3]};
    }
    constexpr std::array<int64_t, 4> coords() const { return {a, b, c, d}; }

    constexpr int64_t operator[](int i) const {
        return i == 0 ? a : i == 1 ? b : i == 2 ? c : d;
    }

    friend constexpr bool operator==(const Quat&, const Quat&) = default;
    // Lexicographic coordinate order; used for deterministic enumeration.
    friend constexpr auto operator<=>(const Quat& p, const Quat& q) {
        return p.coords() <=> q.coords();
    }

    friend constexpr Quat operator-(const Quat& q) { return {-q.a, -q.b, -q.c, -q.d}; }
    friend constexpr Quat operator+(const Quat& p, const Quat& q) {
        return {p.a + q.a, p.b + q.b, p.c + q.c, p.d + q.d};
    }
    friend constexpr Quat operator-(const Quat& p, const Quat& q) {
        return {p.a - q.a, p.b - q.b, p.c - q.c, p.d - q.d};
    }
};

/// Hamilton product under i^2 = j^2 = k^2 = ijk = -1.
constexpr Quat mul(const Quat& p, const Quat& q) {
    return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
            p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
            p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
            p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
}
constexpr Quat operator*(const Quat& p, const Quat& q) { return mul(p, q); }

constexpr Quat conj(const Quat& q) { return {q.a, -q.b, -q.c, -q.d}; }

/// N(q) = a^2 + b^2 + c^2 + d^2. Multiplicative: N(pq) = N(p) N(q).
constexpr int64_t norm(const Quat& q) {
    return q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d;
}

constexpr int64_t real(const Quat& q) { return q.a; }

/// Coordinate-wise inner product; equals Re(conj(p) * q).
constexpr int64_t dot(const Quat& p, const Quat& q) {
    return p.a * q.a + p.b * q.b + p.c * q.c + p.d * q.d;
}

/// gcd(a, b, c, d, k) == 1.
bool is_primitive(const Quat& q, int64_t k);

/// Exact right quotient: gamma with delta = gamma * zeta, or nullopt when
/// zeta is not a right divisor. Requires zeta != 0.
std::optional<Quat> exact_right_quotient(const Quat& delta, const Quat& zeta);

/// All Lipschitz integers of norm ell, in lexicographic coordinate order.
/// Throws when ell exceeds the cap.
std::vector<Quat> enumerate_norm(int64_t ell, int64_t cap = 1'000'000);

/// An element of the signed-permutation group on the four coordinate slots
/// (order 2^4 * 4! = 384). apply() sends slot i to slot perm[i] with sign[i],
/// so norms are always preserved.
struct SignedPerm {
    std::array<uint8_t, 4> perm = {0, 1, 2, 3};
    std::array<int8_t, 4> sign = {1, 1, 1, 1};

    friend constexpr bool operator==(const SignedPerm&, const SignedPerm&) = default;

    constexpr std::array<int64_t, 4> apply(const std::array<int64_t, 4>& v) const {
        std::array<int64_t, 4> out{};
        for (int i = 0; i < 4; ++i) out[perm[i]] = sign[i] * v[i];
        return out;
    }
    Quat apply(const Quat& q) const { return Quat::from_array(apply(q.coords())); }

    // (f.compose(g))(q) == f(g(q))
    constexpr SignedPerm compose(const SignedPerm& g) const {
        SignedPerm r;
        for (int i = 0; i < 4; ++i) {
            r.perm[i] = perm[g.perm[i]];
            r.sign[i] = static_cast<int8_t>(g.sign[i] * sign[g.perm[i]]);
        }
        return r;
    }
    constexpr SignedPerm inverse() const {
        SignedPerm r;
        for (int i = 0; i < 4; ++i) {
            r.perm[perm[i]] = static_cast<uint8_t>(i);
            r.sign[perm[i]] = sign[i];
        }
        return r;
    }
};

/// The full group, in the deterministic encoding order used for tie-breaks
/// (permutations lexicographic, then signs with + before -).
const std::vector<SignedPerm>& signed_perm_group();

/// The orbit {pi(q)} of q under the signed-permutation group, sorted, unique.
std::vector<Quat> orbit(const Quat& q);

/// First (lexicographically smallest encoding) pi with pi(from) == to, if any.
std::optional<SignedPerm> find_signed_perm(const Quat& from, const Quat& to);

// Named constants of the problem domain.
namespace consts {
inline constexpr Quat alpha{1, 3, 5, 0};
inline constexpr Quat beta{1, 3, 3, 4};
/// The eight units +-1, +-i, +-j, +-k.
inline constexpr std::array<Quat, 8> units{
    Quat{1, 0, 0, 0},  Quat{-1, 0, 0, 0}, Quat{0, 1, 0, 0},  Quat{0, -1, 0, 0},
    Quat{0, 0, 1, 0},  Quat{0, 0, -1, 0}, Quat{0, 0, 0, 1},  Quat{0, 0, 0, -1}};
/// Representatives of the eight right non-associate primes of norm 7.
inline constexpr std::array<Quat, 8> norm7_primes{
    Quat{1, 1, 1, 2},  Quat{1, -1, -1, -2}, Quat{1, -1, 1, -2}, Quat{1, 1, -1, 2},
    Quat{1, 1, 1, -2}, Quat{1, -1, -1, 2},  Quat{1, 1, -1, -2}, Quat{1, -1, 1, 2}};
}  // namespace consts

/// Compact human form, e.g. "1+3i+5j", "-3+4i+j+3k", "0".
std::string to_string(const Quat& q);
std::ostream& operator<<(std::ostream& os, const Quat& q);

}  // namespace qs135
