// qverify: exact q-series verification of the modular-form identity registry.
//
// Subcommands:
//   verify        run registry checks, print a table, optionally write JSON
//   expand        print the q-expansion of a catalog form
//   sequence      print terms of a built-in or Zagier recurrence
//   registry-map  emit the check documentation table (markdown or json)
//
// Exit codes: 0 all selected checks pass, 1 verification failure or
// insufficient precision, 2 usage error (unknown id/group/form/name).

#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "qv/errors.hpp"
#include "qv/forms.hpp"
#include "qv/report.hpp"
#include "qv/sequences.hpp"
#include "qv/verifier.hpp"

namespace {

int cmd_verify(bool all, const std::string& group, const std::string& id, long order,
               const std::string& report_path, unsigned jobs) {
    std::optional<std::vector<const qv::CheckSpec*>> selected;
    if (!id.empty())
        selected = qv::select_id(id);
    else if (!group.empty())
        selected = qv::select_group(group);
    else if (all)
        selected = qv::select_all();
    else {
        std::cerr << "verify: one of --all, --group, --id is required\n";
        return 2;
    }
    if (!selected) {
        std::cerr << "verify: unknown " << (!id.empty() ? "id: " + id : "group: " + group)
                  << "\n";
        return 2;
    }
    auto results = qv::run_checks(*selected, qv::rat(order), jobs);
    qv::print_results_table(std::cout, results);
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) {
            std::cerr << "verify: cannot write report to " << report_path << "\n";
            return 2;
        }
        out << qv::report_json(results, qv::rat(order)).dump(2) << "\n";
    }
    return qv::all_passed(results) ? 0 : 1;
}

int cmd_expand(const std::string& name, long order, const std::string& format) {
    auto id = qv::form_by_name(name);
    if (!id) {
        std::cerr << "expand: unknown form: " << name << "\n";
        return 2;
    }
    qv::PuiseuxSeries s = qv::build_form(*id, qv::rat(order));
    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["form"] = name;
        doc.update(qv::series_json(s));
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << name << " = " << s.str() << "\n";
    }
    return 0;
}

int cmd_sequence(const std::string& name, long count, const std::string& alpha,
                 const std::string& beta, const std::string& gamma) {
    qv::RecurrenceSpec spec;
    if (name == "a5")
        spec = qv::seq_a5();
    else if (name == "b5")
        spec = qv::seq_b5();
    else if (name == "s5")
        spec = qv::seq_s5();
    else if (name == "t5")
        spec = qv::seq_t5();
    else if (name == "zagier")
        spec = qv::zagier_recurrence(qv::rat_parse(alpha), qv::rat_parse(beta),
                                     qv::rat_parse(gamma));
    else {
        std::cerr << "sequence: unknown name: " << name << "\n";
        return 2;
    }
    for (const auto& v : qv::run_recurrence(spec, static_cast<size_t>(count)))
        std::cout << v.str() << "\n";
    return 0;
}

int cmd_registry_map(const std::string& format, const std::string& output) {
    std::string text = format == "json" ? qv::registry_map_json().dump(2) + "\n"
                                        : qv::registry_map_markdown();
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) {
            std::cerr << "registry-map: cannot write " << output << "\n";
            return 2;
        }
        out << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series verification of modular-form identities"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run registry checks");
    bool all = false;
    std::string group, id, report_path;
    long order = 24;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    verify->add_flag("--all", all, "run every registry group (negative controls excluded)");
    verify->add_option("--group", group, "run one group (G0..G12, NC)");
    verify->add_option("--id", id, "run one check by id");
    verify->add_option("--order", order, "certification order in whole-q units")
        ->check(CLI::PositiveNumber);
    verify->add_option("--report", report_path, "write a JSON report to this path");
    verify->add_option("--jobs", jobs, "parallel check execution")
        ->check(CLI::PositiveNumber);

    auto* expand = app.add_subcommand("expand", "print a catalog form's q-expansion");
    std::string form_name, format = "table";
    long exp_order = 8;
    expand->add_option("--form", form_name, "catalog form name")->required();
    expand->add_option("--order", exp_order, "truncation order")->check(CLI::PositiveNumber);
    expand->add_option("--format", format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));

    auto* sequence = app.add_subcommand("sequence", "print recurrence terms");
    std::string seq_name, alpha = "0", beta = "0", gamma = "0";
    long count = 10;
    sequence->add_option("--name", seq_name, "a5, b5, s5, t5, or zagier")->required();
    sequence->add_option("--count", count, "number of terms")->check(CLI::PositiveNumber);
    sequence->add_option("--alpha", alpha, "zagier alpha");
    sequence->add_option("--beta", beta, "zagier beta");
    sequence->add_option("--gamma", gamma, "zagier gamma");

    auto* regmap = app.add_subcommand("registry-map", "emit the check documentation table");
    std::string map_format = "markdown", map_output;
    regmap->add_option("--format", map_format, "markdown or json")
        ->check(CLI::IsMember({"markdown", "json"}));
    regmap->add_option("--output", map_output, "write to file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(all, group, id, order, report_path, jobs);
        if (expand->parsed()) return cmd_expand(form_name, exp_order, format);
        if (sequence->parsed()) return cmd_sequence(seq_name, count, alpha, beta, gamma);
        if (regmap->parsed()) return cmd_registry_map(map_format, map_output);
    } catch (const qv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
