#include "qs135/transfer.hpp"

#include <algorithm>
#include <stdexcept>

namespace qs135 {

namespace {

std::array<int64_t, 4> sorted_abs(const Quat& q) {
    std::array<int64_t, 4> v = {std::abs(q.a), std::abs(q.b), std::abs(q.c), std::abs(q.d)};
    std::sort(v.begin(), v.end());
    return v;
}

constexpr int64_t symmetric_mod(int64_t v, int64_t p) {
    int64_t r = v % p;
    if (r < 0) r += p;
    if (2 * r > p) r -= p;
    return r;
}

constexpr bool is_small_prime(int64_t p) {
    if (p < 2) return false;
    for (int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Class35 classify35(const Quat& zeta) {
    if (norm(zeta) != 35) throw std::invalid_argument("classify35: norm must be 35");
    const auto v = sorted_abs(zeta);
    if (v == std::array<int64_t, 4>{0, 1, 3, 5}) return Class35::Alpha;
    return Class35::Beta;  // the only other coordinate multiset is (1,3,3,4)
}

RankOneProfile rank_one_profile(const Quat& rho, const Quat& sigma) {
    const int64_t p = norm(rho);
    if (p != norm(sigma) || p < 3 || p % 2 == 0 || !is_small_prime(p))
        throw std::invalid_argument("rank_one_profile: norms must be an equal odd prime");

    // Images of the basis 1, i, j, k under gamma -> conj(rho) gamma sigma.
    const std::array<Quat, 4> basis = {Quat{1, 0, 0, 0}, Quat{0, 1, 0, 0}, Quat{0, 0, 1, 0},
                                       Quat{0, 0, 0, 1}};
    std::array<Quat, 4> img;
    for (int i = 0; i < 4; ++i) img[i] = mul(mul(conj(rho), basis[i]), sigma);

    // delta_profile = first basis image that is nonzero mod p.
    int first = -1;
    for (int i = 0; i < 4 && first < 0; ++i)
        for (int j = 0; j < 4; ++j)
            if (img[i][j] % p != 0) {
                first = i;
                break;
            }
    if (first < 0) throw std::logic_error("rank_one_profile: all basis images vanish mod p");

    const Quat& prof = img[first];
    int pivot = 0;
    while (prof[pivot] % p == 0) ++pivot;
    // modular inverse of the pivot coordinate via Fermat
    int64_t inv = 1, base = ((prof[pivot] % p) + p) % p, e = p - 2;
    while (e) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
    }

    std::array<int64_t, 4> eps{};
    for (int i = 0; i < 4; ++i) {
        const int64_t c = ((img[i][pivot] % p + p) % p) * inv % p;
        for (int j = 0; j < 4; ++j)
            if ((img[i][j] - c * prof[j]) % p != 0)
                throw std::logic_error("rank_one_profile: images are not proportional mod p");
        eps[i] = symmetric_mod(c, p);
    }

    RankOneProfile out;
    out.epsilon = Quat::from_array(eps);
    out.delta_profile = {symmetric_mod(prof.a, p), symmetric_mod(prof.b, p),
                         symmetric_mod(prof.c, p), symmetric_mod(prof.d, p)};
    out.p = p;
    return out;
}

std::optional<Quat> transfer(const Quat& gamma, const Quat& rho, const Quat& sigma) {
    const int64_t p = norm(rho);
    if (p != norm(sigma) || p == 0)
        throw std::invalid_argument("transfer: rho and sigma must have equal nonzero norm");
    const Quat e = mul(mul(conj(rho), gamma), sigma);
    if (e.a % p || e.b % p || e.c % p || e.d % p) return std::nullopt;
    return Quat{e.a / p, e.b / p, e.c / p, e.d / p};
}

std::vector<Quat> right_divisors_of_norm(const Quat& delta, int64_t ell) {
    if (ell <= 0 || norm(delta) % ell != 0)
        throw std::invalid_argument("right_divisors_of_norm: ell must divide norm(delta)");
    std::vector<Quat> out;
    for (const Quat& zeta : enumerate_norm(ell))
        if (exact_right_quotient(delta, zeta)) out.push_back(zeta);
    return out;
}

Quat normalize_to(const Quat& gamma, const Quat& zeta, const Quat& target) {
    const auto pi = find_signed_perm(zeta, target);
    if (!pi) throw std::invalid_argument("normalize_to: zeta is not in the orbit of target");
    return from_solution_tuple(pi->apply(solution_tuple(gamma)));
}

const std::vector<TransferIdentity>& identity_table() {
    static const std::vector<TransferIdentity> table = [] {
        struct Row {
            const char* id;
            Quat rho, sigma, target;
        };
        // mul(beta, rho) == mul(sigma, target) for every row; checked below.
        const Row rows[] = {
            {"P3-0", {1, 1, -1, 0}, {1, 1, 1, 0}, {5, 3, 1, 0}},
            {"P3-1", {1, -1, -1, 0}, {1, 0, 1, 1}, {3, 0, -5, 1}},
            {"P3-2", {1, 1, 1, 0}, {1, 0, -1, 1}, {-3, 4, 1, 3}},
            {"P3-3", {1, -1, 1, 0}, {1, 1, 0, 1}, {3, -1, 4, 3}},
            {"M5-1", {1, 2, 0, 0}, {0, 0, 1, -2}, {3, -4, 3, -1}},
            {"M5-2", {1, 0, 2, 0}, {2, 1, 0, 0}, {-3, -1, 4, 3}},
            {"M5-3", {1, 0, 0, -2}, {1, -2, 0, 0}, {3, 3, 1, 4}},
            {"M5-4", {1, -2, 0, 0}, {2, 1, 0, 0}, {3, -1, 0, 5}},
            {"M5-5", {1, 0, -2, 0}, {-1, 2, 0, 0}, {3, -5, -1, 0}},
            {"M5-6", {1, 0, 0, 2}, {0, 0, 1, -2}, {-3, 0, 5, -1}},
            {"M7-1", {1, 1, 1, 2}, {1, -1, 2, -1}, {-3, -3, 4, 1}},
            {"M7-2", {1, -1, -1, -2}, {1, -1, 2, -1}, {3, 1, -4, 3}},
            {"M7-3", {1, -1, 1, -2}, {2, -1, -1, 1}, {4, 1, 3, 3}},
            {"M7-4", {1, 1, -1, 2}, {1, 1, -1, -2}, {1, 3, 3, -4}},
            {"M7-5", {1, 1, 1, -2}, {-2, 1, 1, -1}, {0, -1, -5, -3}},
            {"M7-6", {1, -1, -1, 2}, {-1, -2, -1, -1}, {-3, 0, 1, -5}},
            {"M7-7", {1, 1, -1, -2}, {-2, 1, 1, -1}, {0, -3, -5, 1}},
            {"M7-8", {1, -1, 1, 2}, {1, 1, -1, -2}, {-3, 5, 1, 0}},
        };
        std::vector<TransferIdentity> t;
        for (const Row& r : rows) {
            if (mul(consts::beta, r.rho) != mul(r.sigma, r.target))
                throw std::logic_error("identity_table: transfer identity does not hold");
            TransferIdentity e;
            e.id = r.id;
            e.rho = r.rho;
            e.sigma = r.sigma;
            e.target = r.target;
            e.p = norm(r.rho);
            e.target_class = classify35(r.target);
            e.epsilon = rank_one_profile(r.rho, r.sigma).epsilon;
            t.push_back(e);
        }
        return t;
    }();
    return table;
}

const TransferIdentity& identity(const std::string& id) {
    for (const auto& e : identity_table())
        if (id == e.id) return e;
    throw std::invalid_argument("identity: unknown id " + id);
}

std::string identity_table_text() {
    std::string s;
    for (const auto& e : identity_table()) {
        s += to_string(e.rho);
        s += " | ";
        s += to_string(e.sigma);
        s += " | ";
        s += to_string(e.target);
        s += '\n';
    }
    return s;
}

}  // namespace qs135
