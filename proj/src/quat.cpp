#include "qs135/quat.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "qs135/squares.hpp"

namespace qs135 {

bool is_primitive(const Quat& q, int64_t k) {
    int64_t g = std::gcd(std::gcd(std::abs(q.a), std::abs(q.b)),
                         std::gcd(std::abs(q.c), std::abs(q.d)));
    return std::gcd(g, k) == 1;
}

std::optional<Quat> exact_right_quotient(const Quat& delta, const Quat& zeta) {
    if (zeta == Quat{}) throw std::invalid_argument("exact_right_quotient: zeta must be nonzero");
    const int64_t nz = norm(zeta);
    const Quat e = mul(delta, conj(zeta));
    if (e.a % nz || e.b % nz || e.c % nz || e.d % nz) return std::nullopt;
    return Quat{e.a / nz, e.b / nz, e.c / nz, e.d / nz};
}

std::vector<Quat> enumerate_norm(int64_t ell, int64_t cap) {
    if (ell < 0) throw std::invalid_argument("enumerate_norm: ell must be nonnegative");
    if (ell > cap) throw std::invalid_argument("enumerate_norm: ell exceeds enumeration cap");
    std::vector<Quat> out;
    const int64_t s = isqrt(ell);
    for (int64_t a = -s; a <= s; ++a) {
        const int64_t ra = ell - a * a;
        const int64_t sa = isqrt(ra);
        for (int64_t b = -sa; b <= sa; ++b) {
            const int64_t rb = ra - b * b;
            const int64_t sb = isqrt(rb);
            for (int64_t c = -sb; c <= sb; ++c) {
                int64_t d = 0;
                if (!is_perfect_square(rb - c * c, &d)) continue;
                if (d == 0) {
                    out.push_back({a, b, c, 0});
                } else {
                    out.push_back({a, b, c, -d});
                    out.push_back({a, b, c, d});
                }
            }
        }
    }
    return out;
}

const std::vector<SignedPerm>& signed_perm_group() {
    static const std::vector<SignedPerm> group = [] {
        std::vector<SignedPerm> g;
        g.reserve(384);
        std::array<uint8_t, 4> p = {0, 1, 2, 3};
        do {
            for (int s = 0; s < 16; ++s) {
                SignedPerm pi;
                pi.perm = p;
                for (int i = 0; i < 4; ++i)
                    pi.sign[i] = ((s >> (3 - i)) & 1) ? int8_t{-1} : int8_t{1};
                g.push_back(pi);
            }
        } while (std::next_permutation(p.begin(), p.end()));
        return g;
    }();
    return group;
}

std::vector<Quat> orbit(const Quat& q) {
    std::vector<Quat> out;
    out.reserve(384);
    for (const auto& pi : signed_perm_group()) out.push_back(pi.apply(q));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<SignedPerm> find_signed_perm(const Quat& from, const Quat& to) {
    for (const auto& pi : signed_perm_group())
        if (pi.apply(from) == to) return pi;
    return std::nullopt;
}

std::string to_string(const Quat& q) {
    static const char* basis[4] = {"", "i", "j", "k"};
    std::string s;
    for (int i = 0; i < 4; ++i) {
        const int64_t v = q[i];
        if (v == 0) continue;
        if (!s.empty() && v > 0) s += '+';
        if (v == -1 && i > 0)
            s += '-';
        else if (v != 1 || i == 0)
            s += std::to_string(v);
        s += basis[i];
    }
    return s.empty() ? "0" : s;
}

std::ostream& operator<<(std::ostream& os, const Quat& q) { return os << to_string(q); }

}  // namespace qs135
