#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <og/dot.hpp>
#include <og/errors.hpp>
#include <og/lawcheck.hpp>
#include <og/limits.hpp>
#include <og/serialize.hpp>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw og::SchemaError("cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

og::Document load(const std::string& path) { return og::parse(read_file(path)); }

template <typename T>
void emit(T value) {
    std::cout << og::serialize(og::Document{og::k_format_version, std::move(value)});
}

template <typename T>
const T* as(const og::Document& d) {
    return std::get_if<T>(&d.payload);
}

void run_compose(const std::string& path_a, const std::string& path_b) {
    og::Document a = load(path_a);
    og::Document b = load(path_b);
    if (const auto* f = as<og::GraphMorphism>(a)) {
        if (const auto* g = as<og::GraphMorphism>(b)) return emit(og::compose_morphisms(*f, *g));
    } else if (const auto* m = as<og::Cospan>(a)) {
        if (const auto* n = as<og::Cospan>(b)) return emit(og::compose_cospans(*m, *n));
    } else if (const auto* s = as<og::VerticalSpan>(a)) {
        if (const auto* t = as<og::VerticalSpan>(b)) return emit(og::compose_spans(*s, *t));
    } else if (const auto* c = as<og::TwoCell>(a)) {
        if (const auto* d = as<og::TwoCell>(b)) return emit(og::horizontal_compose(*c, *d));
    }
    throw og::InvariantError("compose: cannot compose " + og::document_kind(a) + " with " +
                             og::document_kind(b));
}

void run_tensor(const std::string& path_a, const std::string& path_b) {
    og::Document a = load(path_a);
    og::Document b = load(path_b);
    if (const auto* g = as<og::Graph>(a)) {
        if (const auto* h = as<og::Graph>(b)) return emit(og::coproduct(*g, *h).object);
    } else if (const auto* f = as<og::GraphMorphism>(a)) {
        if (const auto* g2 = as<og::GraphMorphism>(b))
            return emit(og::coproduct_of_morphisms(*f, *g2));
    } else if (const auto* m = as<og::Cospan>(a)) {
        if (const auto* n = as<og::Cospan>(b)) return emit(og::tensor_cospans(*m, *n));
    } else if (const auto* s = as<og::VerticalSpan>(a)) {
        if (const auto* t = as<og::VerticalSpan>(b)) return emit(og::tensor_spans(*s, *t));
    } else if (const auto* c = as<og::TwoCell>(a)) {
        if (const auto* d = as<og::TwoCell>(b)) return emit(og::tensor_cells(*c, *d));
    }
    throw og::InvariantError("tensor: cannot tensor " + og::document_kind(a) + " with " +
                             og::document_kind(b));
}

int run_rewrite(const std::string& rule_path, const std::string& host_path,
                std::uint64_t match_index, bool all, std::uint64_t budget) {
    og::Document rule_doc = load(rule_path);
    const auto* rule = as<og::OpenGraphRule>(rule_doc);
    if (rule == nullptr)
        throw og::InvariantError("rewrite: --rule must be a rule document, got " +
                                 og::document_kind(rule_doc));
    og::Document host_doc = load(host_path);
    const auto* host = as<og::Cospan>(host_doc);
    if (host == nullptr)
        throw og::InvariantError("rewrite: --host must be a cospan document, got " +
                                 og::document_kind(host_doc));

    std::vector<og::MatchResult> matches = og::find_matches(*rule, *host, budget);
    if (all) {
        std::uint64_t refused = 0;
        for (std::size_t k = 0; k < matches.size(); ++k) {
            try {
                emit(og::apply_rule(*rule, *host, matches[k]).result);
            } catch (const og::RewriteError& e) {
                std::cerr << "og: match " << k << ": " << e.what() << "\n";
                ++refused;
            }
        }
        return refused == 0 ? 0 : 1;
    }
    if (match_index >= matches.size())
        throw og::RewriteError("rewrite: no match with index " + std::to_string(match_index) +
                               " (found " + std::to_string(matches.size()) + ")");
    emit(og::apply_rule(*rule, *host, matches[match_index]).result);
    return 0;
}

void run_dualize(const std::string& path) {
    og::Document d = load(path);
    if (const auto* m = as<og::Cospan>(d)) return emit(og::mirror_cospan(*m));
    if (const auto* c = as<og::TwoCell>(d)) return emit(og::mirror_cell(*c));
    if (const auto* r = as<og::OpenGraphRule>(d)) return emit(og::dualize_rule(*r));
    throw og::InvariantError("dualize: unsupported kind " + og::document_kind(d));
}

void run_invert(const std::string& path) {
    og::Document d = load(path);
    if (const auto* c = as<og::TwoCell>(d)) return emit(og::flip_cell(*c));
    if (const auto* r = as<og::OpenGraphRule>(d)) return emit(og::invert_rule(*r));
    throw og::InvariantError("invert: unsupported kind " + og::document_kind(d));
}

std::vector<std::uint64_t> parse_seed_range(const std::string& text) {
    auto number = [&](const std::string& part) {
        std::size_t used = 0;
        std::uint64_t value = 0;
        try {
            value = std::stoull(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (part.empty() || part[0] == '-' || used != part.size())
            throw og::SchemaError("check: bad seed range '" + text + "'");
        return value;
    };
    std::size_t dots = text.find("..");
    if (dots == std::string::npos) return {number(text)};
    std::uint64_t lo = number(text.substr(0, dots));
    std::uint64_t hi = number(text.substr(dots + 2));
    if (hi < lo) throw og::SchemaError("check: bad seed range '" + text + "'");
    if (hi - lo >= 1'000'000) throw og::SchemaError("check: seed range '" + text + "' is too wide");
    std::vector<std::uint64_t> seeds(hi - lo + 1);
    std::iota(seeds.begin(), seeds.end(), lo);
    return seeds;
}

nlohmann::json report_json(const og::LawReport& r) {
    nlohmann::json j{{"law", r.law},
                     {"trials", r.trials},
                     {"passes", r.passes},
                     {"failures", r.failures},
                     {"budget_errors", r.budget_errors}};
    if (r.first_failure.has_value())
        j["first_failure"] = {{"seed", r.first_failure->seed},
                              {"detail", nlohmann::json::parse(r.first_failure->detail)}};
    if (r.first_error.has_value())
        j["first_error"] = {{"seed", r.first_error->seed}, {"detail", r.first_error->detail}};
    return j;
}

int run_check(const std::string& law, const std::string& seed_text, const og::LawConfig& cfg) {
    std::vector<std::uint64_t> seeds = parse_seed_range(seed_text);
    std::vector<og::LawReport> reports;
    if (law.empty())
        reports = og::run_law_suite(seeds, cfg);
    else
        reports.push_back(og::check_law(law, seeds, cfg));

    nlohmann::json out;
    if (law.empty()) {
        out = nlohmann::json::array();
        for (const og::LawReport& r : reports) out.push_back(report_json(r));
    } else {
        out = report_json(reports.front());
    }
    std::cout << out.dump() << "\n";

    bool failed = false;
    bool exhausted = false;
    for (const og::LawReport& r : reports) {
        failed = failed || r.failures > 0;
        exhausted = exhausted || r.budget_errors > 0;
    }
    if (failed) return 1;
    if (exhausted) return 3;
    return 0;
}

void run_export_dot(const std::string& path, bool roles) {
    std::cout << og::export_dot(load(path), roles);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"operations on open graphs: cospans of graphs, monic spans between them, "
                 "double-pushout rewriting, and law checking"};
    app.require_subcommand(1);
    int rc = 0;

    std::string path_a;
    std::string path_b;
    CLI::App* compose = app.add_subcommand("compose", "compose two documents end to end");
    compose->add_option("A", path_a, "left document")->required();
    compose->add_option("B", path_b, "right document")->required();
    compose->callback([&] { run_compose(path_a, path_b); });

    CLI::App* tensor = app.add_subcommand("tensor", "place two documents side by side");
    tensor->add_option("A", path_a, "left document")->required();
    tensor->add_option("B", path_b, "right document")->required();
    tensor->callback([&] { run_tensor(path_a, path_b); });

    std::string rule_path;
    std::string host_path;
    std::uint64_t match_index = 0;
    bool all_matches = false;
    std::uint64_t rewrite_budget = og::k_enumeration_cap;
    CLI::App* rewrite = app.add_subcommand("rewrite", "apply a rewrite rule to a host cospan");
    rewrite->add_option("--rule", rule_path, "rule document")->required();
    rewrite->add_option("--host", host_path, "host cospan document")->required();
    CLI::Option* match_opt =
        rewrite->add_option("--match", match_index, "index into the match list (default 0)");
    CLI::Option* all_opt =
        rewrite->add_flag("--all", all_matches, "apply every match, one result per line");
    all_opt->excludes(match_opt);
    rewrite->add_option("--budget", rewrite_budget, "match search budget")->envname("OG_BUDGET");
    rewrite->callback(
        [&] { rc = run_rewrite(rule_path, host_path, match_index, all_matches, rewrite_budget); });

    CLI::App* dualize = app.add_subcommand("dualize", "swap the two boundaries");
    dualize->add_option("FILE", path_a, "cospan, two_cell, or rule document")->required();
    dualize->callback([&] { run_dualize(path_a); });

    CLI::App* invert = app.add_subcommand("invert", "turn a cell or rule upside down");
    invert->add_option("FILE", path_a, "two_cell or rule document")->required();
    invert->callback([&] { run_invert(path_a); });

    std::string law;
    std::string seed_text = "1..20";
    og::LawConfig cfg;
    CLI::App* check = app.add_subcommand("check", "search for counterexamples to a law");
    check->add_option("--law", law, "law id (omit to run the whole suite)");
    check->add_option("--seeds", seed_text, "seed range a..b or a single seed")
        ->envname("OG_SEEDS");
    check->add_option("--max-nodes", cfg.max_nodes, "node bound for generated instances")
        ->envname("OG_MAX_NODES");
    check->add_option("--max-edges", cfg.max_edges, "edge bound for generated instances")
        ->envname("OG_MAX_EDGES");
    check->add_option("--budget", cfg.budget, "search budget per trial")->envname("OG_BUDGET");
    check->callback([&] { rc = run_check(law, seed_text, cfg); });

    bool roles = false;
    CLI::App* export_dot = app.add_subcommand("export-dot", "render a document as DOT");
    export_dot->add_option("FILE", path_a, "graph, cospan, two_cell, or rule document")
        ->required();
    export_dot->add_flag("--roles", roles, "color nodes by boundary role");
    export_dot->callback([&] { run_export_dot(path_a, roles); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const og::SchemaError& e) {
        std::cerr << "og: " << e.what() << "\n";
        return 2;
    } catch (const og::InvariantError& e) {
        std::cerr << "og: " << e.what() << "\n";
        return 2;
    } catch (const og::BudgetError& e) {
        std::cerr << "og: " << e.what() << "\n";
        return 3;
    } catch (const og::Error& e) {
        // rewrite-condition and boundary failures land here
        std::cerr << "og: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
