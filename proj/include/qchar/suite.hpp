#pragma once

#include <atomic>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "qchar/identities.hpp"
#include "qchar/json_io.hpp"

namespace qchar {

inline Json to_json(const FirstMismatch& m) {
    return Json{{"x_exponents", m.x_exponents},
                {"y_exponents", m.y_exponents},
                {"q_power", m.q_power},
                {"lhs", m.lhs},
                {"rhs", m.rhs}};
}

inline Json to_json(const IdentityReport& r) {
    Json params = Json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    Json j{{"identity", r.identity},
           {"params", params},
           {"verified", r.verified},
           {"inconclusive", r.inconclusive},
           {"first_mismatch", r.first_mismatch ? to_json(*r.first_mismatch) : Json(nullptr)},
           {"elapsed_ms", r.elapsed_ms}};
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

/// One entry of a verification grid.
struct SuiteJob {
    std::string identity;
    std::map<std::string, long> params;
};

inline const std::set<std::string>& known_identities() {
    static const std::set<std::string> tags{
        "cauchy-schur",   "cauchy-whittaker", "wedge",
        "schur-weyl-current", "bgg-gl2",      "kato-vs-whittaker",
        "dim-product",    "sign-multiplicity", "q0-schur", "q1-elementary"};
    return tags;
}

namespace detail {

inline long job_param(const SuiteJob& j, const std::string& key, long fallback) {
    auto it = j.params.find(key);
    return it == j.params.end() ? fallback : it->second;
}

inline long job_param_required(const SuiteJob& j, const std::string& key) {
    auto it = j.params.find(key);
    if (it == j.params.end())
        throw std::invalid_argument("suite job '" + j.identity + "': missing parameter " + key);
    return it->second;
}

}  // namespace detail

inline void validate_job(const SuiteJob& job) {
    if (!known_identities().count(job.identity))
        throw std::invalid_argument("unknown identity tag '" + job.identity + "'");
    for (const auto& [k, v] : job.params)
        if (v < 0)
            throw std::invalid_argument("suite job '" + job.identity + "': negative " + k);
}

inline IdentityReport run_job(const SuiteJob& job) {
    validate_job(job);
    const auto& id = job.identity;
    using detail::job_param;
    using detail::job_param_required;
    if (id == "cauchy-schur")
        return verify_cauchy_schur(static_cast<int>(job_param_required(job, "n")),
                                   static_cast<int>(job_param_required(job, "m")),
                                   static_cast<int>(job_param_required(job, "deg")));
    if (id == "cauchy-whittaker")
        return verify_cauchy_whittaker(static_cast<int>(job_param_required(job, "n")),
                                       static_cast<int>(job_param_required(job, "m")),
                                       static_cast<int>(job_param_required(job, "deg")),
                                       static_cast<int>(job_param_required(job, "qdeg")));
    if (id == "wedge")
        return verify_wedge_identity(static_cast<int>(job_param_required(job, "n")),
                                     static_cast<int>(job_param_required(job, "deg")),
                                     static_cast<int>(job_param_required(job, "qdeg")));
    if (id == "schur-weyl-current")
        return verify_schur_weyl_current(static_cast<int>(job_param_required(job, "n")),
                                         static_cast<int>(job_param_required(job, "m")),
                                         static_cast<int>(job_param_required(job, "qdeg")));
    if (id == "bgg-gl2") {
        Partition mu{std::vector<int>{static_cast<int>(job_param_required(job, "mu1")),
                                      static_cast<int>(job_param(job, "mu2", 0))}};
        return verify_bgg_gl2(mu, static_cast<int>(job_param_required(job, "qdeg")),
                              static_cast<int>(job_param(job, "cutoff", 64)));
    }
    if (id == "kato-vs-whittaker")
        return verify_kato_vs_whittaker(static_cast<int>(job_param_required(job, "max_size")));
    if (id == "dim-product")
        return verify_dim_product(static_cast<int>(job_param_required(job, "max_size")),
                                  static_cast<int>(job_param(job, "max_vars", 4)));
    if (id == "sign-multiplicity")
        return verify_sign_multiplicity(static_cast<int>(job_param_required(job, "max_size")));
    if (id == "q0-schur")
        return verify_q0_schur(static_cast<int>(job_param_required(job, "max_size")),
                               static_cast<int>(job_param(job, "max_vars", 4)));
    if (id == "q1-elementary")
        return verify_q1_elementary(static_cast<int>(job_param_required(job, "max_size")),
                                    static_cast<int>(job_param(job, "max_vars", 4)));
    throw std::invalid_argument("unknown identity tag '" + id + "'");
}

/// The fixed, versioned desk grid; every entry runs at desk scale.
inline std::vector<SuiteJob> desk_suite() {
    std::vector<SuiteJob> jobs;
    for (int n = 1; n <= 3; ++n)
        for (int m = n; m <= 3; ++m)
            jobs.push_back({"cauchy-schur", {{"n", n}, {"m", m}, {"deg", 8}}});
    jobs.push_back({"cauchy-whittaker", {{"n", 1}, {"m", 1}, {"deg", 4}, {"qdeg", 8}}});
    jobs.push_back({"cauchy-whittaker", {{"n", 2}, {"m", 2}, {"deg", 4}, {"qdeg", 8}}});
    jobs.push_back({"cauchy-whittaker", {{"n", 2}, {"m", 3}, {"deg", 4}, {"qdeg", 6}}});
    for (int n = 1; n <= 3; ++n)
        jobs.push_back({"wedge", {{"n", n}, {"deg", 6}, {"qdeg", 8}}});
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m)
            jobs.push_back({"schur-weyl-current", {{"n", n}, {"m", m}, {"qdeg", 8}}});
    for (auto [m1, m2] : {std::pair{1, 0}, {1, 1}, {2, 0}, {2, 1}})
        jobs.push_back({"bgg-gl2", {{"mu1", m1}, {"mu2", m2}, {"qdeg", 4}}});
    jobs.push_back({"kato-vs-whittaker", {{"max_size", 7}}});
    jobs.push_back({"dim-product", {{"max_size", 6}, {"max_vars", 4}}});
    jobs.push_back({"sign-multiplicity", {{"max_size", 6}}});
    jobs.push_back({"q0-schur", {{"max_size", 7}, {"max_vars", 4}}});
    jobs.push_back({"q1-elementary", {{"max_size", 7}, {"max_vars", 4}}});
    return jobs;
}

/// Desk grid plus a few heavier runs.
inline std::vector<SuiteJob> extended_suite() {
    auto jobs = desk_suite();
    jobs.push_back({"cauchy-whittaker", {{"n", 3}, {"m", 3}, {"deg", 4}, {"qdeg", 6}}});
    jobs.push_back({"wedge", {{"n", 4}, {"deg", 6}, {"qdeg", 8}}});
    jobs.push_back({"schur-weyl-current", {{"n", 5}, {"m", 4}, {"qdeg", 8}}});
    jobs.push_back({"kato-vs-whittaker", {{"max_size", 8}}});
    return jobs;
}

struct SuiteSummary {
    long total = 0;
    long verified = 0;
    long failed = 0;
    long inconclusive = 0;
    long wall_time_ms = 0;
};

/// Runs a grid with a small worker pool.  Scheduling never affects the
/// results: reports land at their job's index.
inline std::vector<IdentityReport> run_suite(const std::vector<SuiteJob>& jobs, int workers,
                                             SuiteSummary* summary = nullptr) {
    for (const auto& j : jobs) validate_job(j);
    detail::Stopwatch sw;
    std::vector<IdentityReport> reports(jobs.size());
    if (workers < 1) workers = 1;
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            reports[i] = run_job(jobs[i]);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (summary) {
        summary->total = static_cast<long>(reports.size());
        for (const auto& r : reports) {
            if (r.inconclusive) ++summary->inconclusive;
            else if (r.verified) ++summary->verified;
            else ++summary->failed;
        }
        summary->wall_time_ms = sw.ms();
    }
    return reports;
}

inline Json suite_document(const std::vector<IdentityReport>& reports,
                           const SuiteSummary& summary) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return Json{{"reports", arr},
                {"summary", Json{{"total", summary.total},
                                 {"verified", summary.verified},
                                 {"failed", summary.failed},
                                 {"inconclusive", summary.inconclusive},
                                 {"wall_time_ms", summary.wall_time_ms}}}};
}

}  // namespace qchar
