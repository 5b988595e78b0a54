#include "qv/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "qv/errors.hpp"

namespace qv {

const char* kind_name(CheckKind k) {
    switch (k) {
        case CheckKind::SeriesIdentity: return "SeriesIdentity";
        case CheckKind::NonlinearSystem: return "NonlinearSystem";
        case CheckKind::SchwarzianODE: return "SchwarzianODE";
        case CheckKind::LinearODE: return "LinearODE";
        case CheckKind::InversionFormula: return "InversionFormula";
        case CheckKind::JIdentity: return "JIdentity";
        case CheckKind::RecurrenceExpansion: return "RecurrenceExpansion";
        case CheckKind::DualRoute: return "DualRoute";
    }
    return "?";
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::InsufficientPrecision: return "INSUFFICIENT_PRECISION";
    }
    return "?";
}

std::optional<std::vector<const CheckSpec*>> select_all() {
    std::vector<const CheckSpec*> out;
    for (const auto& c : registry())
        if (c.group != "NC") out.push_back(&c);
    return out;
}

std::optional<std::vector<const CheckSpec*>> select_group(const std::string& group) {
    std::vector<const CheckSpec*> out;
    for (const auto& c : registry())
        if (c.group == group) out.push_back(&c);
    if (out.empty()) return std::nullopt;
    return out;
}

std::optional<std::vector<const CheckSpec*>> select_id(const std::string& id) {
    for (const auto& c : registry())
        if (c.id == id) return std::vector<const CheckSpec*>{&c};
    return std::nullopt;
}

CheckResult run_check(const CheckSpec& spec, const Rational& order) {
    CheckResult res;
    res.id = spec.id;
    res.group = spec.group;
    res.kind = spec.kind;
    const auto t0 = std::chrono::steady_clock::now();
    // working margins: identities lose a few orders to Laurent poles and
    // pole-cleared multiplications; retry larger before giving up
    for (long margin : {8L, 20L, 40L}) {
        std::vector<PuiseuxSeries> residuals;
        try {
            residuals = spec.residuals(order + margin);
        } catch (const Error& e) {
            res.verdict = Verdict::Fail;
            res.error = e.what();
            break;
        }
        Rational certified = order + margin;
        std::optional<FirstFailure> failure;
        for (const auto& r : residuals) {
            certified = std::min(certified, r.trunc());
            auto nz = r.first_nonzero();
            if (nz && (!failure || nz->first < failure->exponent))
                failure = FirstFailure{nz->first, nz->second};
        }
        if (failure) {
            res.verdict = Verdict::Fail;
            res.first_failure = failure;
            res.certified_order = certified;
            break;
        }
        res.certified_order = certified;
        if (certified >= order) {
            res.verdict = Verdict::Pass;
            break;
        }
        res.verdict = Verdict::InsufficientPrecision;
    }
    const auto t1 = std::chrono::steady_clock::now();
    res.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return res;
}

std::vector<CheckResult> run_checks(const std::vector<const CheckSpec*>& checks,
                                    const Rational& order, unsigned jobs) {
    std::vector<CheckResult> results(checks.size());
    if (jobs == 0) jobs = 1;
    if (jobs == 1 || checks.size() <= 1) {
        for (size_t i = 0; i < checks.size(); ++i) results[i] = run_check(*checks[i], order);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= checks.size()) return;
                results[i] = run_check(*checks[i], order);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::min<size_t>(jobs, checks.size()); ++t)
            pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::sort(results.begin(), results.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    return results;
}

}  // namespace qv
