#include <doctest.h>

#include <numeric>

#include <og/errors.hpp>
#include <og/lawcheck.hpp>

using namespace og;

namespace {

std::vector<std::uint64_t> seed_range(std::uint64_t from, std::uint64_t count) {
    std::vector<std::uint64_t> seeds(count);
    std::iota(seeds.begin(), seeds.end(), from);
    return seeds;
}

struct FaultGuard {
    std::atomic<bool>& flag;
    explicit FaultGuard(std::atomic<bool>& f) : flag(f) { flag = true; }
    ~FaultGuard() { flag = false; }
};

}  // namespace

TEST_CASE("generated instances satisfy their invariants") {
    LawConfig cfg;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        CAPTURE(seed);
        std::mt19937_64 rng(seed);
        CHECK_NOTHROW(validate(random_graph(rng, cfg)));
        CHECK_NOTHROW(validate(random_morphism(rng, cfg)));
        GraphMorphism mono = random_mono_into(rng, random_graph(rng, cfg));
        CHECK_NOTHROW(validate(mono));
        CHECK(classify_morphism(mono).mono);
        CHECK_NOTHROW(validate(random_cospan(rng, cfg)));
        CHECK_NOTHROW(validate(random_monic_span(rng, cfg)));
        VerticalSpan iso_span = random_iso_span(rng, cfg);
        CHECK_NOTHROW(validate(iso_span));
        CHECK(classify_morphism(iso_span.up).iso);
        CHECK_NOTHROW(validate(random_cell(rng, cfg)));
        OpenGraphRule rule = random_rule(rng, cfg);
        CHECK_NOTHROW(validate(rule));
    }
}

TEST_CASE("every law passes on a fresh seed sweep") {
    auto seeds = seed_range(1, 12);
    auto reports = run_law_suite(seeds);
    REQUIRE(reports.size() == law_ids().size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CAPTURE(reports[i].law);
        CHECK(reports[i].law == law_ids()[i]);
        CHECK(reports[i].trials == seeds.size());
        CHECK(reports[i].passes == seeds.size());
        CHECK(reports[i].failures == 0);
        CHECK(reports[i].budget_errors == 0);
        CHECK_FALSE(reports[i].first_failure.has_value());
        CHECK_FALSE(reports[i].first_error.has_value());
    }
}

TEST_CASE("identical configurations produce identical reports") {
    auto seeds = seed_range(7, 6);
    CHECK(run_law_suite(seeds) == run_law_suite(seeds));
    CHECK(check_law("snake", seeds) == check_law("snake", seeds));
}

TEST_CASE("an empty seed list is reported as zero trials, not hidden") {
    auto reports = run_law_suite({});
    for (const LawReport& r : reports) {
        CHECK(r.trials == 0);
        CHECK(r.passes == 0);
        CHECK(r.failures == 0);
        CHECK(r.budget_errors == 0);
        CHECK_FALSE(r.first_failure.has_value());
    }
}

TEST_CASE("unknown law ids are refused") {
    CHECK_THROWS_AS(check_law("flux_capacitor", seed_range(1, 1)), InvariantError);
}

TEST_CASE("a sabotaged pushout quotient shows up as law failures") {
    FaultGuard guard(fault::disable_pushout_quotient);
    LawReport report = check_law("interchange", seed_range(1, 8));
    CHECK(report.trials == 8);
    CHECK(report.failures > 0);
    CHECK(report.passes + report.failures + report.budget_errors == report.trials);
    REQUIRE(report.first_failure.has_value());

    // the failure carries the full instance for replay
    nlohmann::json detail = nlohmann::json::parse(report.first_failure->detail);
    CHECK(detail["law"] == "interchange");
    CHECK(detail.contains("pieces"));
    CHECK(detail["pieces"].contains("a"));
}

TEST_CASE("a corrupted pullback pairing shows up as law failures") {
    FaultGuard guard(fault::corrupt_pullback_pairing);
    LawReport report = check_law("interchange", seed_range(1, 8));
    CHECK(report.failures > 0);
    REQUIRE(report.first_failure.has_value());
}

TEST_CASE("exhausted search budgets are reported apart from failures") {
    LawConfig strangled;
    strangled.budget = 1;
    LawReport report = check_law("snake", seed_range(1, 6), strangled);
    CHECK(report.budget_errors > 0);
    CHECK(report.failures == 0);
    CHECK_FALSE(report.first_failure.has_value());
    REQUIRE(report.first_error.has_value());
    CHECK_FALSE(report.first_error->detail.empty());
    CHECK(report.passes + report.failures + report.budget_errors == report.trials);
}
