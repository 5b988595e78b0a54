#include <doctest.h>

#include <set>

#include "qv/forms.hpp"

#include "qv/report.hpp"
#include "qv/verifier.hpp"

using namespace qv;

TEST_CASE("registry ids are unique and sorted by group prefix") {
    std::set<std::string> ids;
    for (const auto& c : registry()) {
        CHECK(ids.insert(c.id).second);
        CHECK(!c.statement.empty());
    }
    CHECK(registry().size() >= 140);
}

TEST_CASE("selection semantics") {
    CHECK(select_all().has_value());
    auto everything = *select_all();
    for (const auto* c : everything) CHECK(c->group != "NC");
    CHECK(select_group("G1").has_value());
    CHECK(select_group("NC")->size() == 3);
    CHECK(!select_group("G99").has_value());
    CHECK(select_id("g01-ramanujan-system").has_value());
    CHECK(!select_id("missing").has_value());
}

TEST_CASE("a passing check certifies at or above the requested order") {
    auto res = run_check(**select_id("g01-ramanujan-system")->begin(), rat(12));
    CHECK(res.verdict == Verdict::Pass);
    CHECK(res.certified_order >= rat(12));
    CHECK(!res.first_failure.has_value());
}

TEST_CASE("negative controls fail early") {
    auto controls = *select_group("NC");
    for (const auto* c : controls) {
        auto res = run_check(*c, rat(8));
        CHECK(res.verdict == Verdict::Fail);
        REQUIRE(res.first_failure.has_value());
        CHECK(res.first_failure->exponent <= rat(3));
        CHECK(!res.first_failure->residual.is_zero());
    }
}

TEST_CASE("parallel execution is deterministic") {
    auto checks = *select_group("G2");
    auto serial = run_checks(checks, rat(10), 1);
    auto parallel = run_checks(checks, rat(10), 4);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].id == parallel[i].id);
        CHECK(serial[i].verdict == parallel[i].verdict);
        CHECK(serial[i].certified_order == parallel[i].certified_order);
    }
    for (size_t i = 0; i + 1 < serial.size(); ++i) CHECK(serial[i].id < serial[i + 1].id);
}

TEST_CASE("report document is consistent and stable") {
    auto checks = *select_group("G1");
    auto results = run_checks(checks, rat(8), 1);
    auto doc = report_json(results, rat(8));
    CHECK(doc["summary"]["total"] == results.size());
    CHECK(doc["summary"]["pass"].get<size_t>() + doc["summary"]["fail"].get<size_t>() +
              doc["summary"]["insufficient_precision"].get<size_t>() ==
          results.size());
    // byte stability of the comparison-relevant fields
    auto strip = [](nlohmann::ordered_json d) {
        d.erase("timing");
        for (auto& c : d["checks"]) c.erase("elapsed_ms");
        return d.dump();
    };
    auto results2 = run_checks(checks, rat(8), 2);
    CHECK(strip(doc) == strip(report_json(results2, rat(8))));
}

TEST_CASE("insufficient precision is reported, not passed") {
    CheckSpec starved{"starved", "T", CheckKind::SeriesIdentity, "residual trunc stays low",
                      "",
                      [](const Rational&) {
                          return std::vector<PuiseuxSeries>{PuiseuxSeries::zero(rat(3))};
                      }};
    auto res = run_check(starved, rat(10));
    CHECK(res.verdict == Verdict::InsufficientPrecision);
    CHECK(res.certified_order == rat(3));
}

TEST_CASE("series serialization record") {
    PuiseuxSeries lam = build_form(FormId::Lambda, rat(2));
    auto doc = series_json(lam);
    CHECK(doc["field"] == "Q");
    CHECK(doc["denom"] == 2);
    CHECK(doc["terms"][0][0] == 1);
    CHECK(doc["terms"][0][1] == "16");
    PuiseuxSeries v = build_form(FormId::V5, rat(2));
    CHECK(series_json(v)["field"] == "Q(sqrt5)");
    CHECK(series_json(v)["terms"][1][1] == "-5/2-5/2*sqrt5");
}

TEST_CASE("registry map mirrors the registry") {
    auto doc = registry_map_json();
    CHECK(doc["entries"].size() == registry().size());
    size_t i = 0;
    for (const auto& c : registry()) {
        CHECK(doc["entries"][i]["id"] == c.id);
        CHECK(doc["entries"][i]["statement"] == c.statement);
        ++i;
    }
    auto md = registry_map_markdown();
    CHECK(md.find("g06-recurrence-a5-in-v") != std::string::npos);
    // the level-5 entries carry the V/W representative note
    for (const auto& c : registry())
        if (c.id == "g06-heun-S-on-V") CHECK(c.note.find("representatives") != std::string::npos);
}

TEST_CASE("registry shape matches the certified families") {
    size_t schwarzian = 0, inversions = 0, linear = 0, duals = 0, systems = 0;
    for (const auto& c : registry()) {
        if (c.group == "NC") continue;
        switch (c.kind) {
            case CheckKind::SchwarzianODE: ++schwarzian; break;
            case CheckKind::InversionFormula: ++inversions; break;
            case CheckKind::LinearODE: ++linear; break;
            case CheckKind::DualRoute: ++duals; break;
            case CheckKind::NonlinearSystem: ++systems; break;
            default: break;
        }
    }
    CHECK(schwarzian == 11);  // J, j, lambda, x3, f5, g5, f6, g6, t6, u6, x6
    CHECK(inversions == 9);
    CHECK(linear >= 30);
    CHECK(duals >= 10);
    CHECK(systems >= 12);
}
