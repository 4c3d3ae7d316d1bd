#include "qs135/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace qs135 {

namespace {

constexpr int64_t kOracleMaxM = 1'000'000'000;

struct SlotPlan {
    int e0, e1;  // enumerated slots: lightest weight, then heaviest
    int ds, qs;  // solved pair, heavier weight first (wd = 0 implies wq = 0)
};

// Enumerating the lightest and heaviest slots keeps the second loop inside a
// thin feasibility band in natural mode; the middle two weights are solved
// exactly from the linear form and a perfect-square test.
SlotPlan plan_slots(const Quat& w) {
    std::array<int, 4> order = {0, 1, 2, 3};
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return w[i] != w[j] ? w[i] < w[j] : i > j;
    });
    SlotPlan p{};
    p.e0 = order[0];
    std::array<int, 3> rest = {order[1], order[2], order[3]};
    std::sort(rest.begin(), rest.end(), [&](int i, int j) {
        return w[i] != w[j] ? w[i] > w[j] : i < j;
    });
    p.e1 = rest[0];
    p.ds = rest[1];
    p.qs = rest[2];
    return p;
}

// 0, 1, -1, 2, -2, ... for integer mode; 0, 1, 2, ... for natural mode.
int64_t enum_value(int64_t k, bool natural) {
    if (natural) return k;
    return k % 2 ? (k + 1) / 2 : -k / 2;
}

bool square_test(const SquareTable* table, int64_t v, int64_t* root) {
    if (v < 0) return false;
    if (table && !table->test(v)) return false;
    return is_perfect_square(v, root);
}

void validate_weights(const Quat& w) {
    if (w.a < 0 || w.b < 0 || w.c < 0 || w.d < 0 || norm(w) == 0)
        throw std::invalid_argument("oracle: weights must be nonnegative and not all zero");
}

std::optional<Solution> oracle_round(int64_t m, int64_t n, const Quat& weights, bool natural,
                                     const SquareTable* table, const SlotPlan& plan) {
    const int64_t n2 = n * n;
    const int64_t w0 = weights[plan.e0], w1 = weights[plan.e1];
    const int64_t wd = weights[plan.ds], wq = weights[plan.qs];
    const int64_t w2eff = wd * wd + wq * wq;  // Cauchy-Schwarz bound on the pair form
    const int64_t root_m = isqrt(m);

    auto emit = [&](int64_t c0, int64_t c1, int64_t cd, int64_t cq) {
        std::array<int64_t, 4> v{};
        v[plan.e0] = c0, v[plan.e1] = c1, v[plan.ds] = cd, v[plan.qs] = cq;
        Solution s{v[0], v[1], v[2], v[3], n, weights};
        return s;
    };

    for (int64_t k0 = 0;; ++k0) {
        const int64_t c0 = enum_value(k0, natural);
        if (c0 > root_m || -c0 > root_m) break;
        const int64_t S0 = m - c0 * c0;
        const int64_t R0 = n2 - w0 * c0;
        if (natural && R0 < 0) break;  // ascending c0, positive weight
        const int64_t root_s0 = isqrt(S0);
        int64_t k1_start = 0;
        if (natural) {
            // a hit needs R <= sqrt(w2eff S) <= sqrt(w2eff S0); skip the
            // prefix of c1 values that cannot reach that band
            const int64_t reach = isqrt(w2eff * S0);
            if (R0 > reach) {
                if (w1 == 0 || (k1_start = (R0 - reach + w1 - 1) / w1) > root_s0) {
                    // with w0 = 0 the band only narrows as c0 grows
                    if (w0 == 0) break;
                    continue;
                }
            }
        }
        for (int64_t k1 = k1_start;; ++k1) {
            const int64_t c1 = enum_value(k1, natural);
            if (c1 > root_s0 || -c1 > root_s0) break;
            const int64_t S = S0 - c1 * c1;
            const int64_t R = R0 - w1 * c1;
            if (natural && R < 0) break;
            if (wd == 0) {
                // two zero weights in the solved pair: the linear form is spent
                if (R != 0) continue;
                for (int64_t ku = 0;; ++ku) {
                    const int64_t u = enum_value(ku, natural);
                    if (u * u > S) break;
                    int64_t q = 0;
                    if (square_test(table, S - u * u, &q)) return emit(c0, c1, u, q);
                }
            } else if (wq == 0) {
                if (R % wd != 0) continue;
                const int64_t cd = R / wd;
                if (natural && cd < 0) continue;
                const int64_t rest = S - cd * cd;
                int64_t q = 0;
                if (!square_test(table, rest, &q)) continue;
                return emit(c0, c1, cd, q);  // +q first; -q never beats it
            } else {
                const int64_t W2 = wd * wd + wq * wq;
                const int64_t D = W2 * S - R * R;
                int64_t r = 0;
                if (!square_test(table, D, &r)) continue;
                for (int sgn : {1, -1}) {
                    const int64_t num_q = R * wq + sgn * wd * r;
                    if (num_q % W2 != 0) continue;
                    const int64_t cq = num_q / W2;
                    const int64_t num_d = R - wq * cq;
                    if (num_d % wd != 0) continue;
                    const int64_t cd = num_d / wd;
                    if (natural && (cd < 0 || cq < 0)) continue;
                    return emit(c0, c1, cd, cq);
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Solution> oracle_solve(int64_t m, const Quat& weights, bool natural,
                                     const SquareTable* table) {
    if (m < 0 || m > kOracleMaxM)
        throw std::invalid_argument("oracle_solve: m must be in [0, 10^9]");
    validate_weights(weights);
    const SlotPlan plan = plan_slots(weights);
    const int64_t ell = norm(weights);
    for (int64_t n = fourth_root_floor(ell * m); n >= 0; --n) {
        // any solution forces ell*m - n^4 to be a sum of three squares
        if (!is_three_square_representable(ell * m - n * n * n * n)) continue;
        if (auto s = oracle_round(m, n, weights, natural, table, plan)) return s;
    }
    return std::nullopt;
}

std::optional<Solution> oracle_solve_at_n(int64_t m, int64_t n, const Quat& weights, bool natural,
                                          const SquareTable* table) {
    if (m < 0 || m > kOracleMaxM)
        throw std::invalid_argument("oracle_solve_at_n: m must be in [0, 10^9]");
    validate_weights(weights);
    if (n < 0 || n * n * n * n > norm(weights) * m) return std::nullopt;
    if (!is_three_square_representable(norm(weights) * m - n * n * n * n)) return std::nullopt;
    return oracle_round(m, n, weights, natural, table, plan_slots(weights));
}

namespace {

std::string weights_token(const Quat& w) {
    std::ostringstream os;
    os << w.a << ',' << w.b << ',' << w.c << ',' << w.d;
    return os.str();
}

std::string header_line(int64_t lo, int64_t hi, const Quat& w, bool natural) {
    std::ostringstream os;
    os << "v1 " << lo << ' ' << hi << ' ' << weights_token(w) << ' '
       << (natural ? "natural" : "integer");
    return os.str();
}

// chunk_lo -> failures, parsed from an existing checkpoint file
std::map<int64_t, std::vector<int64_t>> load_checkpoint(const std::string& path,
                                                        const std::string& expected_header) {
    std::map<int64_t, std::vector<int64_t>> done;
    std::ifstream in(path);
    if (!in) return done;
    std::string header;
    if (!std::getline(in, header)) return done;
    if (header != expected_header)
        throw std::runtime_error("checkpoint header mismatch: \"" + header + "\" vs \"" +
                                 expected_header + "\"");
    int64_t clo = 0, chi = 0, count = 0;
    while (in >> clo >> chi >> count) {
        if (count < 0 || count > kVerifyChunk)
            throw std::runtime_error("checkpoint: implausible failure count");
        std::vector<int64_t> fails(static_cast<size_t>(count));
        for (auto& f : fails)
            if (!(in >> f)) throw std::runtime_error("checkpoint: truncated failure list");
        done[clo] = std::move(fails);
    }
    return done;
}

void store_checkpoint(const std::string& path, const std::string& header,
                      const std::map<int64_t, std::pair<int64_t, std::vector<int64_t>>>& done) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("checkpoint: cannot write " + tmp);
        out << header << '\n';
        for (const auto& [clo, entry] : done) {
            out << clo << ' ' << entry.first << ' ' << entry.second.size();
            for (int64_t f : entry.second) out << ' ' << f;
            out << '\n';
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("checkpoint: rename failed for " + path);
}

}  // namespace

VerifyReport verify_range(int64_t lo, int64_t hi, const Quat& weights, bool natural, int jobs,
                          const std::string& checkpoint) {
    if (lo < 0 || lo > hi) throw std::invalid_argument("verify_range: need 0 <= lo <= hi");
    if (hi > kOracleMaxM + 1) throw std::invalid_argument("verify_range: hi beyond oracle range");
    if (jobs < 1) throw std::invalid_argument("verify_range: jobs must be >= 1");
    validate_weights(weights);

    const auto start = std::chrono::steady_clock::now();
    VerifyReport report;
    report.lo = lo;
    report.hi = hi;
    report.weights = weights;
    report.natural = natural;

    const int64_t nchunks = (hi - lo + kVerifyChunk - 1) / kVerifyChunk;
    const std::string header = header_line(lo, hi, weights, natural);
    std::map<int64_t, std::vector<int64_t>> resumed;
    if (!checkpoint.empty()) resumed = load_checkpoint(checkpoint, header);

    std::vector<std::vector<int64_t>> failures(static_cast<size_t>(nchunks));
    std::vector<bool> was_resumed(static_cast<size_t>(nchunks), false);
    // chunk_lo -> (chunk_hi, failures); grows as chunks complete
    std::map<int64_t, std::pair<int64_t, std::vector<int64_t>>> done;

    for (int64_t i = 0; i < nchunks; ++i) {
        const int64_t clo = lo + i * kVerifyChunk;
        auto it = resumed.find(clo);
        if (it == resumed.end()) continue;
        failures[static_cast<size_t>(i)] = it->second;
        was_resumed[static_cast<size_t>(i)] = true;
        done[clo] = {std::min(hi, clo + kVerifyChunk), it->second};
    }

    const SquareTable table(hi > 0 ? hi - 1 : 0);
    std::atomic<int64_t> next{0};
    std::mutex sink;
    auto last_flush = std::chrono::steady_clock::now();
    std::exception_ptr worker_error;

    auto worker = [&] {
        try {
            for (;;) {
                const int64_t i = next.fetch_add(1);
                if (i >= nchunks) return;
                if (was_resumed[static_cast<size_t>(i)]) continue;
                const int64_t clo = lo + i * kVerifyChunk;
                const int64_t chi = std::min(hi, clo + kVerifyChunk);
                std::vector<int64_t> fails;
                for (int64_t m = clo; m < chi; ++m)
                    if (!oracle_solve(m, weights, natural, &table)) fails.push_back(m);
                std::lock_guard lock(sink);
                failures[static_cast<size_t>(i)] = fails;
                done[clo] = {chi, std::move(fails)};
                if (!checkpoint.empty()) {
                    const auto now = std::chrono::steady_clock::now();
                    if (now - last_flush > std::chrono::seconds(1)) {
                        store_checkpoint(checkpoint, header, done);
                        last_flush = now;
                    }
                }
            }
        } catch (...) {
            std::lock_guard lock(sink);
            if (!worker_error) worker_error = std::current_exception();
        }
    };

    const int nthreads = static_cast<int>(std::min<int64_t>(jobs, std::max<int64_t>(nchunks, 1)));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (worker_error) std::rethrow_exception(worker_error);
    if (!checkpoint.empty() && nchunks > 0) store_checkpoint(checkpoint, header, done);

    for (int64_t i = 0; i < nchunks; ++i) {
        const int64_t clo = lo + i * kVerifyChunk;
        const int64_t chi = std::min(hi, clo + kVerifyChunk);
        report.chunks.push_back({clo, chi, was_resumed[static_cast<size_t>(i)]});
        const auto& f = failures[static_cast<size_t>(i)];
        report.failures.insert(report.failures.end(), f.begin(), f.end());
    }
    report.verified_count = (hi - lo) - static_cast<int64_t>(report.failures.size());
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

std::vector<int64_t> find_exceptions(int64_t bound, const Quat& weights, bool natural, int jobs) {
    if (bound < 1 || bound > 10'000'000)
        throw std::invalid_argument("find_exceptions: bound must be in [1, 10^7]");
    return verify_range(1, bound, weights, natural, jobs).failures;
}

void write_report_jsonl(const VerifyReport& report, std::ostream& out) {
    const char* mode = report.natural ? "natural" : "integer";
    const auto w = report.weights.coords();
    for (int64_t m : report.failures) {
        nlohmann::ordered_json rec{{"m", m}, {"weights", w}, {"mode", mode}};
        out << rec.dump() << '\n';
    }
    nlohmann::ordered_json summary{
        {"summary", true},
        {"lo", report.lo},
        {"hi", report.hi},
        {"weights", w},
        {"mode", mode},
        {"verified", report.verified_count},
        {"failures", report.failures.size()},
        {"elapsed_ms", static_cast<int64_t>(report.elapsed.count() * 1000)}};
    out << summary.dump() << '\n';
}

}  // namespace qs135
