#include "zclass/cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zclass/verify.hpp"

namespace zclass::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string csv_field(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string tag_name(SplitTag tag) {
    switch (tag) {
        case SplitTag::Whole: return "whole";
        case SplitTag::SplitPos: return "split+";
        case SplitTag::SplitNeg: return "split-";
    }
    return "?";
}

std::string group_name(GroupKind g) { return g == GroupKind::Sym ? "sn" : "an"; }

ReportDocument finish_json(ordered_json j) {
    return {Format::Json, j.dump(2) + "\n"};
}

}  // namespace

ReportDocument cmd_tables(TableKind table, std::uint32_t max, Format format) {
    if (max < 1) throw DomainError("tables: max must be >= 1");
    std::ostringstream text;
    ordered_json rows = ordered_json::array();

    for (std::uint32_t m = 1; m <= max; ++m) {
        switch (table) {
            case TableKind::PTilde: {
                const std::string v = to_decimal(count_p_tilde(m));
                if (format == Format::Csv)
                    text << m << ',' << v << '\n';
                else
                    text << m << ' ' << v << '\n';
                rows.push_back({{"m", m}, {"p_tilde", v}});
                break;
            }
            case TableKind::QQtilde: {
                const std::string q = to_decimal(count_q(m));
                const std::string qt = to_decimal(count_q_tilde(m));
                if (format == Format::Csv)
                    text << m << ',' << q << ',' << qt << '\n';
                else
                    text << m << ' ' << q << ' ' << qt << '\n';
                rows.push_back({{"m", m}, {"q", q}, {"q_tilde", qt}});
                break;
            }
            case TableKind::EpsDelta: {
                const std::string eps = to_decimal(count_epsilon(m));
                const auto witnesses = delta_witnesses(m);
                const std::string delta = std::to_string(witnesses.size());
                std::string joined;
                ordered_json parts = ordered_json::array();
                for (const Partition& w : witnesses) {
                    const std::string rendered = render_partition_text(w, ExponentStyle::Explicit);
                    if (!joined.empty()) joined += ", ";
                    joined += rendered;
                    parts.push_back(rendered);
                }
                if (format == Format::Csv) {
                    text << m << ',' << eps << ',' << delta << ',' << csv_field(joined) << '\n';
                } else {
                    text << m << ' ' << eps << ' ' << delta;
                    if (!joined.empty()) text << ' ' << joined;
                    text << '\n';
                }
                rows.push_back(
                    {{"n", m}, {"epsilon", eps}, {"delta", delta}, {"partitions", parts}});
                break;
            }
        }
    }

    if (format == Format::Json) {
        const char* name = table == TableKind::PTilde    ? "p_tilde"
                           : table == TableKind::QQtilde ? "q_qtilde"
                                                         : "eps_delta";
        return finish_json({{"command", "tables"}, {"table", name}, {"max", max}, {"rows", rows}});
    }
    if (format == Format::Csv) {
        const char* header = table == TableKind::PTilde    ? "m,p_tilde\n"
                             : table == TableKind::QQtilde ? "m,q,q_tilde\n"
                                                           : "n,epsilon,delta,partitions\n";
        return {Format::Csv, header + text.str()};
    }
    return {Format::Text, text.str()};
}

namespace {

Partition parse_or_usage(const std::string& text) {
    try {
        return parse_partition_text(text);
    } catch (const PartitionParseError& e) {
        throw UsageError(std::string("cannot parse partition: ") + e.what());
    }
}

struct ClassifyReport {
    GroupKind group;
    Partition lambda;
    bool even;
    std::optional<bool> splits;                    // an only
    std::optional<bool> split_zclasses_distinct;   // an, split only
    std::optional<Partition> z_partner;
    bool rational;
    std::optional<bool> center_exception;          // an only
    BigCount centralizer_order;
};

ClassifyReport build_classify(GroupKind group, const Partition& lambda) {
    ClassifyReport r{group, lambda, is_even_partition(lambda), {}, {}, {}, true, {}, 0};
    if (group == GroupKind::Sym) {
        if (lambda.weight() < 3) throw DomainError("classify: sn requires weight >= 3");
        r.z_partner = zpartner_sym(lambda);
        r.rational = true;  // S_n is a rational group
        r.centralizer_order = centralizer_shape(lambda, GroupKind::Sym).order;
        return r;
    }
    if (lambda.weight() < 4) throw DomainError("classify: an requires weight >= 4");
    if (!r.even)
        throw DomainError("classify: " + render_partition_text(lambda) +
                          " is not an even partition: sigma_lambda lies in A_n only when "
                          "n - sum(e_i) is even");
    const bool split = splits_in_alt(lambda);
    r.splits = split;
    if (split) {
        bool all_square = true;
        for (const auto& [part, mult] : lambda.pairs())
            if (!is_perfect_square(std::uint64_t{part})) all_square = false;
        r.split_zclasses_distinct = all_square;
    }
    r.z_partner = zpartner_alt(lambda);
    r.rational = is_rational_conjugacy_class(
        {lambda, split ? SplitTag::SplitPos : SplitTag::Whole});
    r.center_exception = center_exception_in_alt(lambda);
    r.centralizer_order = centralizer_shape(lambda, GroupKind::Alt).order;
    return r;
}

}  // namespace

ReportDocument cmd_classify(GroupKind group, const std::string& partition_text, Format format) {
    const Partition lambda = parse_or_usage(partition_text);
    const ClassifyReport r = build_classify(group, lambda);

    const std::string partition = render_partition_text(r.lambda);
    const std::string parity = r.even ? "even" : "odd";
    const std::string partner = r.z_partner ? render_partition_text(*r.z_partner) : "";
    const auto opt_text = [](const std::optional<bool>& v) {
        return v ? (*v ? std::string("true") : std::string("false")) : std::string("-");
    };

    if (format == Format::Json) {
        ordered_json j{{"command", "classify"},
                       {"group", group_name(r.group)},
                       {"n", r.lambda.weight()},
                       {"partition", partition},
                       {"parity", parity}};
        j["splits"] = r.splits ? ordered_json(*r.splits) : ordered_json(nullptr);
        j["split_zclasses_distinct"] = r.split_zclasses_distinct
                                           ? ordered_json(*r.split_zclasses_distinct)
                                           : ordered_json(nullptr);
        j["z_partner"] = r.z_partner ? ordered_json(partner) : ordered_json(nullptr);
        j["rational"] = r.rational;
        j["center_exception"] =
            r.center_exception ? ordered_json(*r.center_exception) : ordered_json(nullptr);
        j["centralizer_order"] = to_decimal(r.centralizer_order);
        return finish_json(std::move(j));
    }
    if (format == Format::Csv) {
        std::ostringstream out;
        out << "group,n,partition,parity,splits,split_zclasses_distinct,z_partner,rational,"
               "center_exception,centralizer_order\n";
        out << group_name(r.group) << ',' << r.lambda.weight() << ',' << csv_field(partition)
            << ',' << parity << ',' << (r.splits ? (*r.splits ? "true" : "false") : "") << ','
            << (r.split_zclasses_distinct ? (*r.split_zclasses_distinct ? "true" : "false") : "")
            << ',' << csv_field(partner) << ',' << (r.rational ? "true" : "false") << ','
            << (r.center_exception ? (*r.center_exception ? "true" : "false") : "") << ','
            << to_decimal(r.centralizer_order) << '\n';
        return {Format::Csv, out.str()};
    }
    std::ostringstream out;
    out << "group: " << group_name(r.group) << '\n';
    out << "n: " << r.lambda.weight() << '\n';
    out << "partition: " << partition << '\n';
    out << "parity: " << parity << '\n';
    if (r.group == GroupKind::Alt) {
        out << "splits: " << opt_text(r.splits) << '\n';
        out << "split_zclasses_distinct: " << opt_text(r.split_zclasses_distinct) << '\n';
    }
    out << "z_partner: " << (r.z_partner ? partner : "-") << '\n';
    out << "rational: " << (r.rational ? "true" : "false") << '\n';
    if (r.group == GroupKind::Alt)
        out << "center_exception: " << opt_text(r.center_exception) << '\n';
    out << "centralizer_order: " << to_decimal(r.centralizer_order) << '\n';
    return {Format::Text, out.str()};
}

ReportDocument cmd_count(GroupKind group, std::uint32_t n, Format format) {
    if (group == GroupKind::Sym && n < 3) throw DomainError("count: sn requires n >= 3");
    if (group == GroupKind::Alt && n < 4) throw DomainError("count: an requires n >= 4");

    std::vector<std::pair<std::string, std::string>> fields;
    if (group == GroupKind::Sym) {
        fields.emplace_back("conjugacy_classes", to_decimal(count_p(n)));
        fields.emplace_back("z_classes", to_decimal(count_zclasses_sym(n)));
    } else {
        const RationalityReport report = rationality_report(n);
        fields.emplace_back("conjugacy_classes", to_decimal(count_conjugacy_classes_alt(n)));
        fields.emplace_back("z_classes", to_decimal(count_zclasses_alt(n)));
        fields.emplace_back("rational_conjugacy_classes",
                            to_decimal(report.rational_conjugacy_class_count));
        fields.emplace_back("rational_classes", to_decimal(report.rational_class_count));
        fields.emplace_back("rational_characters", to_decimal(report.rational_character_count));
    }

    if (format == Format::Json) {
        ordered_json j{{"command", "count"}, {"group", group_name(group)}, {"n", n}};
        for (const auto& [k, v] : fields) j[k] = v;
        return finish_json(std::move(j));
    }
    if (format == Format::Csv) {
        std::ostringstream out;
        out << "group,n";
        for (const auto& [k, v] : fields) out << ',' << k;
        out << '\n' << group_name(group) << ',' << n;
        for (const auto& [k, v] : fields) out << ',' << v;
        out << '\n';
        return {Format::Csv, out.str()};
    }
    std::ostringstream out;
    out << "group: " << group_name(group) << '\n' << "n: " << n << '\n';
    for (const auto& [k, v] : fields) out << k << ": " << v << '\n';
    return {Format::Text, out.str()};
}

namespace {

// Z-class label groups for either group kind, in deterministic order
// (groups by least member label, members in label order).
std::vector<std::vector<ClassLabel>> zclass_label_groups(GroupKind group, std::uint32_t n) {
    if (group == GroupKind::Alt) return classify_zclasses_alt(n).groups();
    std::vector<std::vector<ClassLabel>> groups;
    std::map<Partition, std::size_t> group_of;
    enumerate_visit(n, pred_all(), [&](const Partition& p) {
        const auto partner = zpartner_sym(p);
        if (partner && group_of.count(*partner)) {
            const std::size_t g = group_of[*partner];
            groups[g].push_back({p, SplitTag::Whole});
            group_of[p] = g;
        } else {
            group_of[p] = groups.size();
            groups.push_back({{p, SplitTag::Whole}});
        }
    });
    return groups;
}

}  // namespace

ReportDocument cmd_zclasses(GroupKind group, std::uint32_t n, Format format) {
    if (group == GroupKind::Sym && n < 3) throw DomainError("zclasses: sn requires n >= 3");
    if (group == GroupKind::Alt && n < 4) throw DomainError("zclasses: an requires n >= 4");
    const auto groups = zclass_label_groups(group, n);

    if (format == Format::Json) {
        ordered_json jgroups = ordered_json::array();
        for (const auto& g : groups) {
            ordered_json members = ordered_json::array();
            for (const ClassLabel& l : g)
                members.push_back({{"partition", render_partition_text(l.partition)},
                                   {"tag", tag_name(l.tag)}});
            jgroups.push_back(std::move(members));
        }
        return finish_json({{"command", "zclasses"},
                            {"group", group_name(group)},
                            {"n", n},
                            {"z_class_count", std::to_string(groups.size())},
                            {"z_classes", std::move(jgroups)}});
    }
    if (format == Format::Csv) {
        std::ostringstream out;
        out << "zclass_id,size,members\n";
        for (std::size_t i = 0; i < groups.size(); ++i) {
            std::string members;
            for (const ClassLabel& l : groups[i]) {
                if (!members.empty()) members += "; ";
                members += render_partition_text(l.partition);
            }
            out << i << ',' << groups[i].size() << ',' << csv_field(members) << '\n';
        }
        return {Format::Csv, out.str()};
    }
    std::ostringstream out;
    for (const auto& g : groups) {
        out << '{';
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (k) out << ", ";
            out << render_partition_text(g[k].partition);
        }
        out << "}\n";
    }
    return {Format::Text, out.str()};
}

ReportDocument cmd_rep(const std::string& partition_text, Format format) {
    const Partition lambda = parse_or_usage(partition_text);
    const std::string cycles = canonical_representative(lambda).cycle_string();
    const std::string partition = render_partition_text(lambda);
    if (format == Format::Json)
        return finish_json({{"command", "rep"},
                            {"partition", partition},
                            {"degree", lambda.weight()},
                            {"cycles", cycles}});
    if (format == Format::Csv)
        return {Format::Csv,
                "partition,degree,cycles\n" + csv_field(partition) + ',' +
                    std::to_string(lambda.weight()) + ',' + csv_field(cycles) + '\n'};
    return {Format::Text, cycles + "\n"};
}

VerifyOutcome cmd_verify(int n_max, const std::set<std::string>& checks, Format format) {
    if (n_max < 3 || n_max > 9) throw DomainError("verify: n_max must be in [3, 9]");
    for (const auto& name : checks)
        if (!verify::all_check_names().count(name))
            throw UsageError("verify: unknown check '" + name + "'");

    verify::Context ctx;
    const auto results = verify::run_checks(ctx, checks, n_max);
    bool all_passed = true;
    for (const auto& r : results) all_passed &= r.passed;

    if (format == Format::Json) {
        ordered_json jresults = ordered_json::array();
        for (const auto& r : results)
            jresults.push_back({{"check", r.check},
                                {"group", group_name(r.group)},
                                {"n", r.n},
                                {"passed", r.passed},
                                {"detail", r.detail}});
        return {finish_json({{"command", "verify"},
                             {"n_max", n_max},
                             {"all_passed", all_passed},
                             {"results", std::move(jresults)}}),
                all_passed};
    }
    if (format == Format::Csv) {
        std::ostringstream out;
        out << "check,group,n,passed,detail\n";
        for (const auto& r : results)
            out << r.check << ',' << group_name(r.group) << ',' << r.n << ','
                << (r.passed ? "true" : "false") << ',' << csv_field(r.detail) << '\n';
        return {{Format::Csv, out.str()}, all_passed};
    }
    std::ostringstream out;
    for (const auto& r : results)
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.check << ' ' << group_name(r.group)
            << " n=" << r.n << ": " << r.detail << '\n';
    out << (all_passed ? "verify: all checks passed\n" : "verify: MISMATCH\n");
    return {{Format::Text, out.str()}, all_passed};
}

namespace {

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    throw UsageError("unknown format '" + s + "'");
}

GroupKind parse_group(const std::string& s) {
    if (s == "sn") return GroupKind::Sym;
    if (s == "an") return GroupKind::Alt;
    throw UsageError("unknown group '" + s + "'");
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"z-classes, rational classes and rational characters of S_n and A_n"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "text";
    app.add_option("--format", format_name, "Output format: text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    std::string table_name;
    std::uint32_t max = 20;
    auto* tables = app.add_subcommand("tables", "Print a counting table");
    tables->add_option("table", table_name, "One of p_tilde, q_qtilde, eps_delta")
        ->required()
        ->check(CLI::IsMember({"p_tilde", "q_qtilde", "eps_delta"}));
    tables->add_option("--max", max, "Largest n to print")->required();

    std::string group_name_opt = "an";
    std::string partition_arg;
    auto* classify = app.add_subcommand("classify", "Classify one cycle type");
    classify->add_option("--group", group_name_opt, "sn or an")
        ->required()
        ->check(CLI::IsMember({"sn", "an"}));
    classify->add_option("partition", partition_arg, "Partition, e.g. \"1^3 5\"")->required();

    std::uint32_t n = 0;
    auto* count = app.add_subcommand("count", "Closed-form counts for one n");
    count->add_option("--group", group_name_opt, "sn or an")
        ->required()
        ->check(CLI::IsMember({"sn", "an"}));
    count->add_option("--n", n, "Degree")->required();

    auto* zclasses_cmd = app.add_subcommand("zclasses", "List every z-class");
    zclasses_cmd->add_option("--group", group_name_opt, "sn or an")
        ->required()
        ->check(CLI::IsMember({"sn", "an"}));
    zclasses_cmd->add_option("--n", n, "Degree")->required();

    auto* rep = app.add_subcommand("rep", "Print the canonical representative");
    rep->add_option("partition", partition_arg, "Partition, e.g. \"2 3\"")->required();

    int n_max = 8;
    std::string checks_arg;
    auto* verify_cmd = app.add_subcommand("verify", "Run the oracle verification suite");
    verify_cmd->add_option("--max", n_max, "Largest degree to verify (3..9)");
    verify_cmd->add_option("--checks", checks_arg,
                           "Comma-separated subset of zclass,rational,center,split,brison,counts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Format format = parse_format(format_name);
        if (tables->parsed()) {
            const TableKind kind = table_name == "p_tilde"    ? TableKind::PTilde
                                   : table_name == "q_qtilde" ? TableKind::QQtilde
                                                              : TableKind::EpsDelta;
            std::cout << cmd_tables(kind, max, format).body;
        } else if (classify->parsed()) {
            std::cout << cmd_classify(parse_group(group_name_opt), partition_arg, format).body;
        } else if (count->parsed()) {
            std::cout << cmd_count(parse_group(group_name_opt), n, format).body;
        } else if (zclasses_cmd->parsed()) {
            std::cout << cmd_zclasses(parse_group(group_name_opt), n, format).body;
        } else if (rep->parsed()) {
            std::cout << cmd_rep(partition_arg, format).body;
        } else if (verify_cmd->parsed()) {
            std::set<std::string> checks;
            std::istringstream in(checks_arg);
            std::string item;
            while (std::getline(in, item, ','))
                if (!item.empty()) checks.insert(item);
            const VerifyOutcome outcome = cmd_verify(n_max, checks, format);
            std::cout << outcome.doc.body;
            return outcome.all_passed ? 0 : 1;
        }
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        // Internal consistency checks surface as verification failures.
        std::cerr << "internal check failed: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace zclass::cli
