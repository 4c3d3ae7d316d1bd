// Command-line front end: solving, range verification, exception hunting,
// identity self-checks and benchmarking.
//
// Exit codes: 0 success, 1 a counterexample/failure list is nonempty,
// 2 usage or configuration error, 3 internal invariant violation.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "qs135/quat.hpp"
#include "qs135/solver.hpp"
#include "qs135/squares.hpp"
#include "qs135/transfer.hpp"
#include "qs135/verifier.hpp"

using namespace qs135;
using nlohmann::ordered_json;

namespace {

Quat parse_weights(const std::string& s) {
    std::istringstream is(s);
    std::array<int64_t, 4> w{};
    char comma = 0;
    for (int i = 0; i < 4; ++i) {
        if (i && (!(is >> comma) || comma != ',')) throw CLI::ValidationError("weights", s);
        if (!(is >> w[i]) || w[i] < 0) throw CLI::ValidationError("weights", s);
    }
    std::string tail;
    if (is >> tail) throw CLI::ValidationError("weights", s);
    if (w[0] + w[1] + w[2] + w[3] == 0)
        throw CLI::ValidationError("weights", "must not be all zero");
    return Quat::from_array(w);
}

int default_jobs() {
    if (const char* env = std::getenv("QS135_JOBS")) {
        const int j = std::atoi(env);
        if (j >= 1) return j;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

ordered_json solution_json(int64_t m, const Solution& s, bool natural) {
    return ordered_json{{"m", m},
                        {"n", s.n},
                        {"x", s.x},
                        {"y", s.y},
                        {"z", s.z},
                        {"t", s.t},
                        {"weights", s.weights.coords()},
                        {"mode", natural ? "natural" : "integer"}};
}

int cmd_solve(int64_t m, bool natural, const Quat& weights, std::optional<int64_t> n_override) {
    std::optional<Solution> s;
    if (n_override) {
        s = weights == consts::alpha ? solve_135_at_n(m, *n_override)
                                     : oracle_solve_at_n(m, *n_override, weights, natural);
        if (!s) {
            std::cout << ordered_json{{"m", m},
                                      {"n", *n_override},
                                      {"stall", true},
                                      {"weights", weights.coords()},
                                      {"mode", natural ? "natural" : "integer"}}
                             .dump()
                      << '\n';
            return 1;
        }
        if (natural) s->t = std::llabs(s->t);
        if (natural && (s->x < 0 || s->y < 0 || s->z < 0 || s->t < 0)) {
            s = oracle_solve_at_n(m, *n_override, weights, true);
            if (!s) {
                std::cout << ordered_json{{"m", m},
                                          {"n", *n_override},
                                          {"stall", true},
                                          {"weights", weights.coords()},
                                          {"mode", "natural"}}
                                 .dump()
                          << '\n';
                return 1;
            }
        }
    } else if (weights == consts::alpha) {
        if (natural) {
            s = solve_135_natural(m);
            if (!s) {
                std::cout << ordered_json{{"m", m}, {"counterexample", true}}.dump() << '\n';
                return 1;
            }
        } else {
            s = solve_135_integer(m);
        }
    } else {
        s = oracle_solve(m, weights, natural);
        if (!s) {
            std::cout << ordered_json{{"m", m},
                                      {"counterexample", true},
                                      {"weights", weights.coords()},
                                      {"mode", natural ? "natural" : "integer"}}
                             .dump()
                      << '\n';
            return 1;
        }
    }
    std::cout << solution_json(m, *s, natural).dump() << '\n';
    return 0;
}

int cmd_verify(int64_t from, int64_t to, bool natural, const Quat& weights, int jobs,
               const std::string& checkpoint, const std::string& out_path) {
    const VerifyReport report = verify_range(from, to, weights, natural, jobs, checkpoint);
    if (out_path.empty()) {
        write_report_jsonl(report, std::cout);
    } else {
        std::ofstream out(out_path, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        write_report_jsonl(report, out);
    }
    return report.failures.empty() ? 0 : 1;
}

int cmd_exceptions(int64_t bound, const Quat& weights, int jobs) {
    const auto failures = find_exceptions(bound, weights, true, jobs);
    for (int64_t m : failures)
        std::cout << ordered_json{{"m", m}, {"weights", weights.coords()}, {"mode", "natural"}}
                         .dump()
                  << '\n';
    return failures.empty() ? 0 : 1;
}

int cmd_identities() {
    int failed = 0;
    for (const TransferIdentity& id : identity_table()) {
        const bool ok = mul(consts::beta, id.rho) == mul(id.sigma, id.target) &&
                        norm(id.rho) == id.p && norm(id.sigma) == id.p && norm(id.target) == 35;
        failed += !ok;
        std::cout << (ok ? "PASS " : "FAIL ") << to_string(id.rho) << " | " << to_string(id.sigma)
                  << " | " << to_string(id.target) << '\n';
    }
    const int64_t unique_p4[] = {1, 3, 5, 7, 11, 15, 23, 2, 8, 32, 6, 24, 96, 14, 56, 224};
    for (int64_t ell : unique_p4) {
        const bool ok = p4_partition_count(ell) == 1;
        failed += !ok;
        std::cout << (ok ? "PASS " : "FAIL ") << "P4(" << ell << ") = 1\n";
    }
    const bool ok35 = p4_partition_count(35) == 2;
    failed += !ok35;
    std::cout << (ok35 ? "PASS " : "FAIL ") << "P4(35) = 2\n";
    return failed ? 1 : 0;
}

int cmd_bench(int64_t count, int64_t max_m, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int64_t> dist(1, max_m);
    std::vector<int64_t> sample;
    for (int64_t i = 0; i < count; ++i) sample.push_back(dist(rng));

    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    for (int64_t m : sample) (void)solve_135_integer(m);
    auto t1 = clock::now();
    for (int64_t m : sample) (void)oracle_solve(m, consts::alpha, false);
    auto t2 = clock::now();

    const double solver_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    const double oracle_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
    std::cout << ordered_json{{"samples", count},
                              {"max_m", max_m},
                              {"solver_ms", solver_ms},
                              {"oracle_ms", oracle_ms},
                              {"solver_avg_us", 1000.0 * solver_ms / static_cast<double>(count)},
                              {"oracle_avg_us", 1000.0 * oracle_ms / static_cast<double>(count)}}
                     .dump()
              << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lipschitz-quaternion engine for the 1-3-5 system"};
    app.require_subcommand(1);

    std::string weights_str = "1,3,5,0";
    bool natural = false;
    int jobs = default_jobs();

    auto* solve = app.add_subcommand("solve", "solve the system for one m");
    int64_t solve_m = 0;
    std::optional<int64_t> n_override;
    int64_t n_value = -1;
    solve->add_option("m", solve_m, "target value")->required();
    solve->add_flag("--natural", natural, "require nonnegative x,y,z,t");
    solve->add_option("--weights", weights_str, "weight vector a,b,c,d");
    auto* nopt = solve->add_option("--n", n_value, "force this n (reports stall explicitly)");

    auto* verify = app.add_subcommand("verify", "verify a range [from, to)");
    int64_t from = 0, to = 0;
    std::string checkpoint, out_path;
    verify->add_option("--from", from, "range start")->required();
    verify->add_option("--to", to, "range end (exclusive)")->required();
    verify->add_flag("--natural", natural, "require nonnegative solutions");
    verify->add_option("--weights", weights_str, "weight vector a,b,c,d");
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_option("--checkpoint", checkpoint, "checkpoint file for resumable runs");
    verify->add_option("--out", out_path, "write the JSONL report here instead of stdout");

    auto* exceptions = app.add_subcommand("exceptions", "list m with no natural representation");
    int64_t bound = 0;
    exceptions->add_option("--bound", bound, "scan m in [1, bound)")->required();
    exceptions->add_option("--weights", weights_str, "weight vector a,b,c,d");
    exceptions->add_option("--jobs", jobs, "worker threads");

    auto* identities = app.add_subcommand("identities", "self-check the transfer identity table");
    auto* bench = app.add_subcommand("bench", "time the constructive solver against the oracle");
    int64_t bench_count = 200, bench_max_m = 100'000;
    uint64_t bench_seed = 1;
    bench->add_option("--count", bench_count, "sample size");
    bench->add_option("--max-m", bench_max_m, "sample m uniformly from [1, max-m]");
    bench->add_option("--seed", bench_seed, "RNG seed");

    try {
        app.parse(argc, argv);
        if (nopt->count()) n_override = n_value;
        const Quat weights = parse_weights(weights_str);
        if (solve->parsed()) return cmd_solve(solve_m, natural, weights, n_override);
        if (verify->parsed()) return cmd_verify(from, to, natural, weights, jobs, checkpoint, out_path);
        if (exceptions->parsed()) return cmd_exceptions(bound, weights, jobs);
        if (identities->parsed()) return cmd_identities();
        if (bench->parsed()) return cmd_bench(bench_count, bench_max_m, bench_seed);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
