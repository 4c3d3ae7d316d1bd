#include <doctest.h>
#include <stdexcept>

#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "qs135/quat.hpp"
#include "qs135/transfer.hpp"

using namespace qs135;

namespace {

Quat random_quat(std::mt19937_64& rng, int64_t span) {
    std::uniform_int_distribution<int64_t> d(-span, span);
    return {d(rng), d(rng), d(rng), d(rng)};
}

int64_t mod(int64_t v, int64_t p) { return ((v % p) + p) % p; }

// proportional mod p with a nonzero factor
bool proportional_mod(const Quat& u, const Quat& v, int64_t p) {
    for (int64_t c = 1; c < p; ++c) {
        bool all = true;
        for (int i = 0; i < 4; ++i)
            if (mod(u[i] - c * v[i], p) != 0) all = false;
        if (all) return true;
    }
    return false;
}

std::set<Quat> left_unit_multiples(const Quat& q) {
    std::set<Quat> s;
    for (const Quat& u : consts::units) s.insert(mul(u, q));
    return s;
}

}  // namespace

TEST_CASE("classify35") {
    CHECK(classify35(consts::alpha) == Class35::Alpha);
    CHECK(classify35(consts::beta) == Class35::Beta);
    CHECK(classify35(Quat{-3, 5, 1, 0}) == Class35::Alpha);
    CHECK(classify35(Quat{3, 3, 1, 4}) == Class35::Beta);
    CHECK_THROWS_AS((void)classify35(Quat{1, 2, 0, 0}), std::invalid_argument);

    // every norm-35 element lands in exactly one of the two classes
    int alpha_count = 0;
    for (const Quat& q : enumerate_norm(35))
        alpha_count += classify35(q) == Class35::Alpha;
    CHECK(alpha_count == 192);
}

TEST_CASE("identity table") {
    const auto& table = identity_table();
    REQUIRE(table.size() == 18);
    int p3 = 0, p5 = 0, p7 = 0;
    for (const auto& id : table) {
        CHECK(mul(consts::beta, id.rho) == mul(id.sigma, id.target));
        CHECK(norm(id.rho) == id.p);
        CHECK(norm(id.sigma) == id.p);
        CHECK(norm(id.target) == 35);
        p3 += id.p == 3;
        p5 += id.p == 5;
        p7 += id.p == 7;
    }
    CHECK(p3 == 4);
    CHECK(p5 == 6);
    CHECK(p7 == 8);

    // both sides of beta(1-2j) = (-1+2i)(3-5i-j) expand to 7+11i+j-2k
    CHECK(mul(consts::beta, Quat{1, 0, -2, 0}) == Quat{7, 11, 1, -2});
    CHECK(mul(Quat{-1, 2, 0, 0}, Quat{3, -5, -1, 0}) == Quat{7, 11, 1, -2});

    // the rho column of the norm-7 rows is exactly the named prime list
    for (int k = 1; k <= 8; ++k)
        CHECK(identity("M7-" + std::to_string(k)).rho == consts::norm7_primes[k - 1]);

    std::istringstream text(identity_table_text());
    std::string line;
    int lines = 0;
    while (std::getline(text, line)) {
        CHECK(line.find(" | ") != std::string::npos);
        ++lines;
    }
    CHECK(lines == 18);
}

TEST_CASE("right divisors of a given norm") {
    const auto d1 = right_divisors_of_norm(Quat{1, 8, 6, -2}, 35);
    CHECK(std::set<Quat>(d1.begin(), d1.end()) == left_unit_multiples(Quat{5, 3, 1, 0}));

    const auto d2 = right_divisors_of_norm(consts::beta, 35);
    CHECK(std::set<Quat>(d2.begin(), d2.end()) == left_unit_multiples(consts::beta));

    const auto d3 = right_divisors_of_norm(consts::beta, 1);
    CHECK(std::set<Quat>(d3.begin(), d3.end()) ==
          std::set<Quat>(consts::units.begin(), consts::units.end()));

    CHECK_THROWS_AS((void)right_divisors_of_norm(consts::beta, 3), std::invalid_argument);
}

TEST_CASE("pall uniqueness at desk scale") {
    // primitive delta of norm 35 q, q an odd prime coprime to 35:
    // exactly one left-unit orbit of norm-35 right divisors
    std::mt19937_64 rng(29);
    const int64_t primes[] = {3, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    const auto n35 = enumerate_norm(35);
    int checked = 0;
    while (checked < 200) {
        const int64_t q = primes[rng() % std::size(primes)];
        const auto nq = enumerate_norm(q);
        const Quat delta = mul(nq[rng() % nq.size()], n35[rng() % n35.size()]);
        if (!is_primitive(delta, 35 * q)) continue;
        CHECK(right_divisors_of_norm(delta, 35).size() == 8);
        ++checked;
    }
}

TEST_CASE("transfer") {
    const Quat rho{1, 1, -1, 0}, sigma{1, 1, 1, 0};
    CHECK(transfer(Quat{3}, rho, sigma) == Quat{1, 0, 2, -2});
    CHECK(transfer(Quat{1, 0, -1, -3}, rho, sigma) == Quat{3, 0, -1, -1});
    CHECK(!transfer(Quat{1}, rho, sigma).has_value());
    CHECK_THROWS_AS((void)transfer(Quat{1}, rho, Quat{1, 2, 0, 0}), std::invalid_argument);

    std::mt19937_64 rng(31);
    for (const auto& id : identity_table()) {
        for (int it = 0; it < 100; ++it) {
            const Quat gamma = random_quat(rng, 60);
            const auto moved = transfer(gamma, id.rho, id.sigma);
            if (!moved) continue;
            CHECK(norm(*moved) == norm(gamma));
            // Re(gamma' * target) = Re(gamma * beta): the weighted form carries over
            CHECK(real(mul(*moved, id.target)) == real(mul(gamma, consts::beta)));
        }
    }
}

TEST_CASE("rank one profile") {
    SUBCASE("rho = sigma = 2+i") {
        const auto prof = rank_one_profile(Quat{2, 1, 0, 0}, Quat{2, 1, 0, 0});
        CHECK(prof.p == 5);
        CHECK(proportional_mod(prof.epsilon, Quat{0, 0, 2, 1}, 5));
        CHECK(proportional_mod(prof.delta_profile, Quat{0, 0, 4, -2}, 5));
    }
    SUBCASE("rho = sigma = 1+i+j+2k") {
        const auto prof = rank_one_profile(Quat{1, 1, 1, 2}, Quat{1, 1, 1, 2});
        CHECK(prof.p == 7);
        CHECK(proportional_mod(prof.delta_profile, Quat{0, 2, -1, 3}, 7));
    }
    SUBCASE("criterion reduces to x - z - t mod 3") {
        const auto prof = rank_one_profile(Quat{1, 1, -1, 0}, Quat{1, 1, 1, 0});
        std::mt19937_64 rng(37);
        std::uniform_int_distribution<int64_t> d(-30, 30);
        for (int it = 0; it < 200; ++it) {
            const std::array<int64_t, 4> w{d(rng), d(rng), d(rng), d(rng)};
            const bool lhs = mod(dot(from_solution_tuple(w), prof.epsilon), 3) == 0;
            CHECK(lhs == (mod(w[0] - w[2] - w[3], 3) == 0));
        }
    }
    SUBCASE("congruence holds for every identity and random gamma") {
        std::mt19937_64 rng(41);
        for (const auto& id : identity_table()) {
            const auto prof = rank_one_profile(id.rho, id.sigma);
            for (int it = 0; it < 100; ++it) {
                const Quat g = random_quat(rng, 40);
                const Quat img = mul(mul(conj(id.rho), g), id.sigma);
                const int64_t coeff = dot(g, prof.epsilon);
                for (int i = 0; i < 4; ++i)
                    CHECK(mod(img[i] - coeff * prof.delta_profile[i], id.p) == 0);
            }
        }
    }
    CHECK_THROWS_AS((void)rank_one_profile(Quat{1, 1, 0, 0}, Quat{1, 1, 0, 0}),
                    std::invalid_argument);  // norm 2 is even
}

TEST_CASE("criterion equivalence") {
    std::mt19937_64 rng(43);
    for (const auto& id : identity_table()) {
        int applicable = 0;
        for (int it = 0; it < 1000; ++it) {
            const Quat gamma = random_quat(rng, 80);
            const bool moved = transfer(gamma, id.rho, id.sigma).has_value();
            CHECK(moved == (mod(dot(gamma, id.epsilon), id.p) == 0));
            applicable += moved;
        }
        CHECK(applicable > 0);
    }
}

TEST_CASE("normalize_to") {
    // worked example: gamma = 3-j-k against 5+3i+j renormalized onto alpha
    const Quat g2 = normalize_to(Quat{3, 0, -1, -1}, Quat{5, 3, 1, 0}, consts::alpha);
    CHECK(solution_tuple(g2) == std::array<int64_t, 4>{1, 0, 3, 1});
    CHECK(real(mul(g2, consts::alpha)) == 16);

    const Quat g{2, -1, 4, 3};
    CHECK(normalize_to(g, consts::beta, consts::beta) == g);

    CHECK_THROWS_AS((void)normalize_to(g, Quat{1, 2, 0, 0}, consts::alpha), std::invalid_argument);

    std::mt19937_64 rng(47);
    const auto& group = signed_perm_group();
    for (int it = 0; it < 1000; ++it) {
        const Quat gamma = random_quat(rng, 50);
        const Quat target = it % 2 ? consts::alpha : consts::beta;
        const Quat zeta = group[rng() % group.size()].apply(target);
        const Quat out = normalize_to(gamma, zeta, target);
        CHECK(real(mul(out, target)) == real(mul(gamma, zeta)));
        CHECK(norm(out) == norm(gamma));
    }
}
