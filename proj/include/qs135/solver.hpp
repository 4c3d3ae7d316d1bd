#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qs135/quat.hpp"

namespace qs135 {

/// A solution of m = x^2+y^2+z^2+t^2 with a*x+b*y+c*z+d*t = n^2, where
/// (a,b,c,d) are the weights (default 1,3,5,0).
struct Solution {
    int64_t x = 0;
    int64_t y = 0;
    int64_t z = 0;
    int64_t t = 0;
    int64_t n = 0;
    Quat weights = consts::alpha;

    int64_t weighted_form() const {
        return weights.a * x + weights.b * y + weights.c * z + weights.d * t;
    }
    bool valid_for(int64_t m) const {
        return x * x + y * y + z * z + t * t == m && weighted_form() == n * n;
    }
    friend bool operator==(const Solution&, const Solution&) = default;
};

/// An intermediate solution of the 1-3-3-4 system:
/// x0^2+y0^2+z0^2+t0^2 = m with x0 + 3 y0 + 3 z0 + 4 t0 = n^2.
struct BetaSolution {
    int64_t x0 = 0;
    int64_t y0 = 0;
    int64_t z0 = 0;
    int64_t t0 = 0;
    int64_t n = 0;

    int64_t m() const { return x0 * x0 + y0 * y0 + z0 * z0 + t0 * t0; }
    // Imaginary coordinates of gamma * beta; A^2 + B^2 + C^2 = 35 m - n^4.
    int64_t A() const { return 3 * x0 - y0 - 4 * z0 + 3 * t0; }
    int64_t B() const { return 3 * x0 + 4 * y0 - z0 - 3 * t0; }
    int64_t C() const { return 4 * x0 - 3 * y0 + 3 * z0 - t0; }

    std::array<int64_t, 4> tuple() const { return {x0, y0, z0, t0}; }
    bool valid() const { return x0 + 3 * y0 + 3 * z0 + 4 * t0 == n * n; }
    friend bool operator==(const BetaSolution&, const BetaSolution&) = default;
    friend auto operator<=>(const BetaSolution& p, const BetaSolution& q) {
        return p.tuple() <=> q.tuple();
    }
};

/// The seven solution-to-solution transformations of the cascade.
enum class TransformKind { P3_2, P3_3, M5_A, M5_Neg2A, M7_4A, M7_2A, M7_NegA };
inline constexpr std::array<TransformKind, 7> all_transform_kinds = {
    TransformKind::P3_2,  TransformKind::P3_3,  TransformKind::M5_A, TransformKind::M5_Neg2A,
    TransformKind::M7_4A, TransformKind::M7_2A, TransformKind::M7_NegA};
const char* transform_kind_name(TransformKind k);

/// An applicable transformation together with its exact quotient
/// (kappa, lambda, mu, nu or xi for the mod-5/7 kinds; 0 for the mod-3 ones).
struct TransformationStep {
    TransformKind kind;
    int64_t shift = 0;
};

/// The step for `kind` when its applicability congruence holds, else nullopt.
std::optional<TransformationStep> transformation_step(const BetaSolution& b, TransformKind kind);

/// Closed-form successor for the mod-5/7 kinds, generic transfer plus
/// renormalization for P3-2/P3-3; nullopt when inapplicable. Successors keep
/// both m and n.
std::optional<BetaSolution> apply_transformation(const BetaSolution& b, TransformKind kind);

/// Bounded worklist search from a 1-3-3-4 solution to a 1-3-5 solution.
/// nullopt = stall, a legitimate outcome for non-conforming n.
std::optional<Solution> cascade(const BetaSolution& b, int cap = 64);

struct NFlags {
    bool odd = false;
    bool conforming = true;
    friend bool operator==(const NFlags&, const NFlags&) = default;
};

/// Candidate n values for m: n^4 <= 35 m, 35 m - n^4 a sum of three squares,
/// and the congruence condition for m mod 3 (m=0: gcd(n,15)=1; m=1: 3|n and
/// 5 does not divide n; m=2: gcd(n,105)=1).
struct NWindow {
    int64_t m = 0;
    std::vector<std::pair<int64_t, NFlags>> candidates;
};

enum class Order { Ascending, Descending };

NWindow candidate_ns(int64_t m, Order order,
                     std::optional<std::pair<int64_t, int64_t>> window = std::nullopt);

/// Options for the integer pipeline; defaults give the published behavior.
struct SolveOptions {
    std::optional<std::pair<int64_t, int64_t>> window;  // restrict candidate n
    bool descend = true;                                // reduce m by factors of 16
    bool oracle_fallback = true;                        // brute force on exhaustion
};

/// Constructive solution of the 1-3-5 system over the integers.
/// Total for 1 <= m <= 10^14.
Solution solve_135_integer(int64_t m, const SolveOptions& opts = {});

/// Expert entry point: run the pipeline at exactly this n, bypassing the
/// candidate congruence filter. nullopt reports a stall.
std::optional<Solution> solve_135_at_n(int64_t m, int64_t n);

/// Natural (nonnegative) solution of the 1-3-5 system, scanning candidate n
/// downward from floor((35 m)^(1/4)); for m >= 1.06e11 acceptance inside
/// [ceil((34 m)^(1/4)), floor((35 m)^(1/4))] is guaranteed. nullopt only on
/// a true counterexample found by the oracle fallback.
std::optional<Solution> solve_135_natural(int64_t m);

/// Weighted generalization: picks a weight vector of norm ell and returns a
/// solution with all weights nonnegative. Requires n^4 <= m * ell and
/// m * ell - n^4 a sum of three squares.
Solution solve_weighted(int64_t m, int64_t n, int64_t ell);

/// Largest n >= 0 with n^4 <= limit.
int64_t fourth_root_floor(int64_t limit);

}  // namespace qs135
