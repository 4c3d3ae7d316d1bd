#include "qs135/solver.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qs135/squares.hpp"
#include "qs135/transfer.hpp"
#include "qs135/verifier.hpp"

namespace qs135 {

namespace {

constexpr int64_t kMaxM = 100'000'000'000'000;  // 10^14, the supported range

int64_t mod(int64_t v, int64_t p) { return ((v % p) + p) % p; }

// dot(gamma, epsilon) = 0 (mod p) <=> transfer by the identity succeeds
bool criterion_holds(const TransferIdentity& id, const std::array<int64_t, 4>& w) {
    return mod(dot(from_solution_tuple(w), id.epsilon), id.p) == 0;
}

std::array<int64_t, 4> swap_yz(const std::array<int64_t, 4>& w) {
    return {w[0], w[2], w[1], w[3]};
}

Solution make_solution(const Quat& gamma, int64_t n, int64_t m) {
    const auto w = solution_tuple(gamma);
    Solution s{w[0], w[1], w[2], w[3], n, consts::alpha};
    if (!s.valid_for(m)) throw std::logic_error("solver: produced an invalid solution");
    return s;
}

// Exit via an alpha-target identity: transfer then renormalize onto alpha.
Solution exit_to_solution(const TransferIdentity& id, const std::array<int64_t, 4>& w, int64_t n,
                          int64_t m) {
    const auto moved = transfer(from_solution_tuple(w), id.rho, id.sigma);
    if (!moved) throw std::logic_error("solver: exit criterion held but transfer failed");
    return make_solution(normalize_to(*moved, id.target, consts::alpha), n, m);
}

// The twelve exit checks, in fixed order: the two mod-3 conditions, the
// three mod-5 conditions, the same three on the y/z-swapped tuple, and the
// four mod-7 conditions.
std::optional<Solution> try_exits(const BetaSolution& b) {
    static const std::array<const char*, 2> mod3 = {"P3-1", "P3-0"};
    static const std::array<const char*, 3> mod5 = {"M5-5", "M5-4", "M5-6"};
    static const std::array<const char*, 4> mod7 = {"M7-5", "M7-6", "M7-7", "M7-8"};
    const auto w = b.tuple();
    const int64_t m = b.m();
    for (const char* id : mod3)
        if (criterion_holds(identity(id), w)) return exit_to_solution(identity(id), w, b.n, m);
    for (const char* id : mod5)
        if (criterion_holds(identity(id), w)) return exit_to_solution(identity(id), w, b.n, m);
    const auto ws = swap_yz(w);
    for (const char* id : mod5)
        if (criterion_holds(identity(id), ws)) return exit_to_solution(identity(id), ws, b.n, m);
    for (const char* id : mod7)
        if (criterion_holds(identity(id), w)) return exit_to_solution(identity(id), w, b.n, m);
    return std::nullopt;
}

BetaSolution checked(int64_t x, int64_t y, int64_t z, int64_t t, int64_t n) {
    BetaSolution b{x, y, z, t, n};
    if (!b.valid()) throw std::logic_error("solver: transformation broke the weighted form");
    return b;
}

std::optional<Solution> cascade_multi(const std::vector<BetaSolution>& seeds, int cap) {
    std::set<BetaSolution> seen;
    std::deque<BetaSolution> queue;
    for (const auto& s : seeds)
        if (seen.insert(s).second) queue.push_back(s);
    while (!queue.empty()) {
        const BetaSolution b = queue.front();
        queue.pop_front();
        if (auto s = try_exits(b)) return s;
        for (TransformKind kind : all_transform_kinds) {
            auto nb = apply_transformation(b, kind);
            if (!nb || static_cast<int>(seen.size()) >= cap) continue;
            if (seen.insert(*nb).second) queue.push_back(*nb);
        }
    }
    return std::nullopt;
}

bool conforming(int64_t m, int64_t n) {
    switch (m % 3) {
        case 0: return std::gcd(n, int64_t{15}) == 1;
        case 1: return n % 3 == 0 && n % 5 != 0;
        default: return std::gcd(n, int64_t{105}) == 1;
    }
}

// One pipeline round at a fixed n: decompose 35 m - n^4, factor each delta,
// take an alpha divisor if present, otherwise cascade from the beta ones.
std::optional<Solution> solve_round(int64_t m, int64_t n, int decomposition_limit = 32) {
    const int64_t residual = 35 * m - n * n * n * n;
    if (residual < 0 || !is_three_square_representable(residual)) return std::nullopt;
    for (const ThreeSquares& dec : three_square_decompositions(residual, decomposition_limit)) {
        const Quat delta{n * n, dec.A, dec.B, dec.C};
        const auto divisors = right_divisors_of_norm(delta, 35);
        std::vector<BetaSolution> seeds;
        for (const Quat& zeta : divisors) {
            const Quat gamma = *exact_right_quotient(delta, zeta);
            if (classify35(zeta) == Class35::Alpha)
                return make_solution(normalize_to(gamma, zeta, consts::alpha), n, m);
            const auto w = solution_tuple(normalize_to(gamma, zeta, consts::beta));
            seeds.push_back(checked(w[0], w[1], w[2], w[3], n));
        }
        if (auto s = cascade_multi(seeds, 64)) return s;
    }
    return std::nullopt;
}

Solution scale_16(Solution s, int k) {
    for (int i = 0; i < k; ++i) {
        s.x *= 4;
        s.y *= 4;
        s.z *= 4;
        s.t *= 4;
        s.n *= 2;
    }
    return s;
}

void check_m_range(int64_t m) {
    if (m < 1 || m > kMaxM) throw std::invalid_argument("solver: m must be in [1, 10^14]");
}

}  // namespace

const char* transform_kind_name(TransformKind k) {
    switch (k) {
        case TransformKind::P3_2: return "P3-2";
        case TransformKind::P3_3: return "P3-3";
        case TransformKind::M5_A: return "M5-A";
        case TransformKind::M5_Neg2A: return "M5-neg2A";
        case TransformKind::M7_4A: return "M7-4A";
        case TransformKind::M7_2A: return "M7-2A";
        case TransformKind::M7_NegA: return "M7-negA";
    }
    return "?";
}

std::optional<TransformationStep> transformation_step(const BetaSolution& b, TransformKind kind) {
    const int64_t x = b.x0, y = b.y0, z = b.z0, t = b.t0;
    int64_t v = 0, p = 0;
    switch (kind) {
        case TransformKind::M5_A: v = x - 2 * y - z + 2 * t, p = 5; break;
        case TransformKind::M5_Neg2A: v = y - 3 * x, p = 5; break;
        case TransformKind::M7_4A: v = x + 4 * z + 2 * t, p = 7; break;
        case TransformKind::M7_2A: v = x - y + 2 * z - t, p = 7; break;
        case TransformKind::M7_NegA: v = x + 4 * y - 2 * z, p = 7; break;
        case TransformKind::P3_2:
        case TransformKind::P3_3: {
            const char* id = kind == TransformKind::P3_2 ? "P3-2" : "P3-3";
            if (!criterion_holds(identity(id), b.tuple())) return std::nullopt;
            return TransformationStep{kind, 0};
        }
    }
    if (v % p != 0) return std::nullopt;
    return TransformationStep{kind, v / p};
}

std::optional<BetaSolution> apply_transformation(const BetaSolution& b, TransformKind kind) {
    const auto step = transformation_step(b, kind);
    if (!step) return std::nullopt;
    const int64_t x = b.x0, y = b.y0, z = b.z0, t = b.t0, q = step->shift;
    switch (kind) {
        case TransformKind::M5_A: return checked(x - q, y + 2 * q, z + q, t - 2 * q, b.n);
        case TransformKind::M5_Neg2A: return checked(x + 3 * q, y - q, z, t, b.n);
        case TransformKind::M7_4A:
            return checked(x + z - q, -2 * z + 3 * q, y, 2 * z + t - 2 * q, b.n);
        case TransformKind::M7_2A:
            return checked(x - 2 * q, y + 2 * q, z - 4 * q, t + 2 * q, b.n);
        case TransformKind::M7_NegA:
            return checked(2 * y - z - 2 * q, 2 * y - 3 * q, -3 * y + 2 * z + 6 * q, t, b.n);
        case TransformKind::P3_2:
        case TransformKind::P3_3: {
            const TransferIdentity& id = identity(kind == TransformKind::P3_2 ? "P3-2" : "P3-3");
            const auto moved = transfer(from_solution_tuple(b.tuple()), id.rho, id.sigma);
            if (!moved) return std::nullopt;
            const auto w = solution_tuple(normalize_to(*moved, id.target, consts::beta));
            return checked(w[0], w[1], w[2], w[3], b.n);
        }
    }
    return std::nullopt;
}

std::optional<Solution> cascade(const BetaSolution& b, int cap) {
    if (!b.valid()) throw std::invalid_argument("cascade: invalid 1-3-3-4 solution");
    return cascade_multi({b}, cap);
}

int64_t fourth_root_floor(int64_t limit) {
    if (limit < 0) return -1;
    constexpr int64_t kRootMax = 55'108;  // floor(INT64_MAX^(1/4))
    auto n = static_cast<int64_t>(std::pow(static_cast<double>(limit), 0.25));
    if (n > kRootMax) n = kRootMax;
    while (n > 0 && n * n * n * n > limit) --n;
    while (n < kRootMax && (n + 1) * (n + 1) * (n + 1) * (n + 1) <= limit) ++n;
    return n;
}

NWindow candidate_ns(int64_t m, Order order, std::optional<std::pair<int64_t, int64_t>> window) {
    check_m_range(m);
    NWindow out;
    out.m = m;
    int64_t lo = 1, hi = fourth_root_floor(35 * m);
    if (window) {
        lo = std::max(lo, window->first);
        hi = std::min(hi, window->second);
    }
    for (int64_t n = lo; n <= hi; ++n) {
        if (!conforming(m, n)) continue;
        if (!is_three_square_representable(35 * m - n * n * n * n)) continue;
        out.candidates.push_back({n, NFlags{n % 2 != 0, true}});
    }
    if (order == Order::Descending)
        std::reverse(out.candidates.begin(), out.candidates.end());
    return out;
}

Solution solve_135_integer(int64_t m, const SolveOptions& opts) {
    check_m_range(m);
    int k = 0;
    while (opts.descend && m % 16 == 0) {
        m /= 16;
        ++k;
    }
    for (const auto& [n, flags] : candidate_ns(m, Order::Ascending, opts.window).candidates)
        if (auto s = solve_round(m, n)) return scale_16(*s, k);
    if (!opts.oracle_fallback) throw std::logic_error("solve_135_integer: candidates exhausted");
    // small-m tail (and window misses): exhaustive search settles it
    auto s = oracle_solve(m, consts::alpha, false);
    if (!s) throw std::logic_error("solve_135_integer: oracle found no solution");
    return scale_16(*s, k);
}

std::optional<Solution> solve_135_at_n(int64_t m, int64_t n) {
    check_m_range(m);
    if (n < 0) throw std::invalid_argument("solve_135_at_n: n must be nonnegative");
    return solve_round(m, n);
}

std::optional<Solution> solve_135_natural(int64_t m) {
    check_m_range(m);
    int k = 0;
    while (m % 16 == 0) {
        m /= 16;
        ++k;
    }
    for (const auto& [n, flags] : candidate_ns(m, Order::Descending).candidates) {
        auto s = solve_round(m, n);
        if (!s) continue;
        s->t = std::abs(s->t);  // (x,y,z,-t) solves the system whenever (x,y,z,t) does
        if (s->x >= 0 && s->y >= 0 && s->z >= 0) return scale_16(*s, k);
    }
    if (m > 1'000'000'000)
        throw std::logic_error("solve_135_natural: descending scan failed beyond oracle range");
    auto s = oracle_solve(m, consts::alpha, true);
    if (!s) return std::nullopt;  // a true counterexample
    return scale_16(*s, k);
}

Solution solve_weighted(int64_t m, int64_t n, int64_t ell) {
    check_m_range(m);
    if (n < 0 || ell < 1) throw std::invalid_argument("solve_weighted: need n >= 0, ell >= 1");
    if (ell > 1'000'000 || m > 35 * kMaxM / ell)
        throw std::invalid_argument("solve_weighted: m * ell beyond the supported range");
    const int64_t residual = m * ell - n * n * n * n;
    if (residual < 0 || !is_three_square_representable(residual))
        throw std::invalid_argument("solve_weighted: m*ell - n^4 is not a sum of three squares");
    for (const ThreeSquares& dec : three_square_decompositions(residual, 32)) {
        const Quat delta{n * n, dec.A, dec.B, dec.C};
        for (const Quat& zeta : right_divisors_of_norm(delta, ell)) {
            const Quat gamma = *exact_right_quotient(delta, zeta);
            const auto w = solution_tuple(gamma);
            Solution s;
            // flip solution signs so the weight vector is nonnegative
            s.x = zeta.a < 0 ? -w[0] : w[0];
            s.y = zeta.b < 0 ? -w[1] : w[1];
            s.z = zeta.c < 0 ? -w[2] : w[2];
            s.t = zeta.d < 0 ? -w[3] : w[3];
            s.n = n;
            s.weights = {std::abs(zeta.a), std::abs(zeta.b), std::abs(zeta.c), std::abs(zeta.d)};
            if (!s.valid_for(m)) throw std::logic_error("solve_weighted: invalid solution");
            return s;
        }
    }
    throw std::logic_error("solve_weighted: no norm-ell right divisor found");
}

}  // namespace qs135
