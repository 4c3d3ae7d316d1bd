#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qs135/quat.hpp"

namespace qs135 {

/// The two decomposition classes of norm-35 Lipschitz integers: every such
/// element has sorted absolute coordinates (0,1,3,5) or (1,3,3,4).
enum class Class35 { Alpha, Beta };

/// Requires norm(zeta) == 35.
Class35 classify35(const Quat& zeta);

// Solution convention: a tuple (x, y, z, t) is stored in the quaternion
// gamma = x - yi - zj - tk, so Re(gamma * (a+bi+cj+dk)) = ax + by + cz + dt.
constexpr std::array<int64_t, 4> solution_tuple(const Quat& gamma) {
    return {gamma.a, -gamma.b, -gamma.c, -gamma.d};
}
constexpr Quat from_solution_tuple(const std::array<int64_t, 4>& w) {
    return {w[0], -w[1], -w[2], -w[3]};
}

/// Rank-one reduction of gamma -> conj(rho) * gamma * sigma (mod p):
/// the map is congruent to (dot(gamma, epsilon)) * delta_profile for all
/// gamma, so divisibility of the whole product reduces to one linear form.
/// epsilon is determined up to a nonzero scalar mod p; coordinates are kept
/// in the symmetric residue range.
struct RankOneProfile {
    Quat epsilon;
    Quat delta_profile;
    int64_t p = 0;
};

/// Requires norm(rho) == norm(sigma) == p for an odd prime p.
RankOneProfile rank_one_profile(const Quat& rho, const Quat& sigma);

/// conj(rho) * gamma * sigma / p when all four coordinates are divisible by
/// p = norm(rho) = norm(sigma), else nullopt. Preserves the norm of gamma.
std::optional<Quat> transfer(const Quat& gamma, const Quat& rho, const Quat& sigma);

/// All zeta of norm ell with exact_right_quotient(delta, zeta) != nullopt,
/// in deterministic (lexicographic) order. Requires ell | norm(delta).
std::vector<Quat> right_divisors_of_norm(const Quat& delta, int64_t ell);

/// gamma' with Re(gamma' * target) = Re(gamma * zeta) and the same norm,
/// obtained by applying the signed permutation that maps zeta onto target to
/// gamma's solution tuple. Requires zeta in the orbit of target.
Quat normalize_to(const Quat& gamma, const Quat& zeta, const Quat& target);

/// One row of the transfer table: mul(beta, rho) == mul(sigma, target) with
/// norm(rho) = norm(sigma) = p prime and norm(target) = 35. `epsilon` caches
/// the rank-one criterion: transfer(gamma, rho, sigma) succeeds iff
/// dot(gamma, epsilon) = 0 (mod p).
struct TransferIdentity {
    const char* id;
    Quat rho;
    Quat sigma;
    Quat target;
    int64_t p;
    Class35 target_class;
    Quat epsilon;
};

/// The 18 identities: four for the primes above 3, six above 5, eight above 7.
const std::vector<TransferIdentity>& identity_table();

/// Row lookup by id ("P3-0".."P3-3", "M5-1".."M5-6", "M7-1".."M7-8").
const TransferIdentity& identity(const std::string& id);

/// Text export, one identity per line: rho | sigma | target.
std::string identity_table_text();

}  // namespace qs135
