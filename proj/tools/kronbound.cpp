#include "kronbound/json.hpp"
#include "kronbound/kronbound.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace kronbound;

enum Exit { kOk = 0, kViolations = 1, kInput = 2, kLimit = 3 };

std::vector<Partition> parse_all(const std::vector<std::string>& args, std::size_t expected, const std::string& kind) {
    if (args.size() != expected)
        throw InputError(kind + " expects " + std::to_string(expected) + " partition argument(s), got " +
                         std::to_string(args.size()));
    std::vector<Partition> out;
    for (const auto& a : args) out.push_back(Partition::parse(a));
    return out;
}

int parse_size(const std::vector<std::string>& args, const std::string& kind) {
    if (args.size() != 1) throw InputError(kind + " expects one integer argument");
    std::size_t used = 0;
    int n = 0;
    try {
        n = std::stoi(args[0], &used);
    } catch (const std::exception&) {
        throw InputError("bad integer '" + args[0] + "'");
    }
    if (used != args[0].size() || n < 0) throw InputError("bad integer '" + args[0] + "'");
    return n;
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json inputs(const std::vector<std::string>& args) {
    Json j = Json::array();
    for (const auto& a : args) j.push_back(a);
    return j;
}

int cmd_exact(const std::string& kind, const std::vector<std::string>& args) {
    Count value;
    if (kind == "kronecker") {
        const auto p = parse_all(args, 3, kind);
        value = kronecker(p[0], p[1], p[2]);
    } else if (kind == "kostka") {
        const auto p = parse_all(args, 2, kind);
        value = kostka(p[0], p[1]);
    } else if (kind == "lr") {
        const auto p = parse_all(args, 3, kind);
        value = lr_coefficient(p[0], p[1], p[2]);
    } else if (kind == "char") {
        const auto p = parse_all(args, 2, kind);
        value = character(p[0], p[1]);
    } else if (kind == "dim") {
        const auto p = parse_all(args, 1, kind);
        value = dim_irrep(p[0]);
    } else if (kind == "reduced") {
        const auto p = parse_all(args, 3, kind);
        value = reduced_kronecker(p[0], p[1], p[2]);
    } else {
        throw InputError("unknown exact kind '" + kind + "'");
    }
    Json j;
    j["kind"] = kind;
    j["input"] = inputs(args);
    j["value"] = to_decimal(value);
    print(j);
    return kOk;
}

int cmd_count(const std::string& kind, const std::vector<std::string>& args, const Limits& limits) {
    Count value;
    if (kind == "t2") {
        const auto p = parse_all(args, 2, kind);
        value = count_tables_2d(p[0], p[1]);
    } else if (kind == "t3") {
        const auto p = parse_all(args, 3, kind);
        if (p[0].size() > limits.table_n) throw LimitError("t3 size exceeds table_n");
        value = count_tables_3d(p[0], p[1], p[2], limits);
    } else if (kind == "b3") {
        const auto p = parse_all(args, 3, kind);
        if (p[0].size() > limits.table_n) throw LimitError("b3 size exceeds table_n");
        value = count_binary_3d(p[0], p[1], p[2], limits);
    } else if (kind == "pyr") {
        const auto p = parse_all(args, 3, kind);
        if (p[0].size() > limits.pyramid_n) throw LimitError("pyr size exceeds pyramid_n");
        value = count_pyramids(p[0], p[1], p[2], limits);
    } else if (kind == "p") {
        value = count_partitions(parse_size(args, kind));
    } else if (kind == "p2") {
        value = count_plane_partitions(parse_size(args, kind));
    } else {
        throw InputError("unknown count kind '" + kind + "'");
    }
    Json j;
    j["kind"] = kind;
    j["input"] = inputs(args);
    j["value"] = to_decimal(value);
    j["approx"] = approx(value);
    print(j);
    return kOk;
}

std::vector<std::string> split_list(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (const auto& item : raw) {
        std::stringstream ss(item);
        std::string part;
        while (std::getline(ss, part, ','))
            if (!part.empty()) out.push_back(part);
    }
    return out;
}

std::string csv_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

int cmd_bound(const std::vector<std::string>& args, bool csv, const std::vector<std::string>& only,
              const Limits& limits) {
    const auto p = parse_all(args, 3, "bound");
    const BoundReport report = compare_all(p[0], p[1], p[2], limits, split_list(only));
    if (!csv) {
        print(to_json(report));
        return kOk;
    }
    const std::string triple = p[0].to_string() + " " + p[1].to_string() + " " + p[2].to_string();
    std::cout << "triple,bound_name,kind,log_value,exact_value,is_tightest\n";
    for (const auto& b : report.bounds) {
        std::cout << '"' << triple << "\"," << b.name << ',' << kind_name(b.kind) << ','
                  << (std::isfinite(b.value.log_value) ? csv_number(b.value.log_value) : "") << ','
                  << (b.value.exact ? to_decimal(*b.value.exact) : "") << ','
                  << (b.name == report.tightest ? "true" : "false") << "\n";
    }
    return kOk;
}

int cmd_verify(int n, const std::vector<std::string>& suites_raw, int workers, const Limits& limits) {
    std::vector<std::string> suites = split_list(suites_raw);
    if (suites.empty()) suites = suite_names();
    Json j;
    j["n"] = n;
    j["results"] = Json::array();
    std::size_t violations = 0;
    double seconds = 0.0;
    for (const auto& s : suites) {
        const SweepResult r = verify(n, s, workers, limits);
        violations += r.violations.size();
        seconds += r.wall_seconds;
        j["results"].push_back(to_json(r));
    }
    j["total_violations"] = violations;
    print(j);
    std::cerr << "wall time " << seconds << " s\n";
    return violations == 0 ? kOk : kViolations;
}

int cmd_construct(const std::string& kind, const std::vector<std::string>& args, bool diagonal,
                  const Limits& limits) {
    const int n = parse_size(args, kind);
    if (kind == "search") {
        print(to_json(equal_margin_pyramids_search(n, diagonal, limits)));
    } else if (kind == "staircase") {
        print(to_json(staircase_family(n, limits)));
    } else if (kind == "tspp") {
        Json j;
        j["n"] = n;
        j["count"] = to_decimal(totally_symmetric_count(n, limits));
        j["by_margin"] = Json::array();
        for (const auto& [margin, count] : totally_symmetric_by_margin(n, limits))
            j["by_margin"].push_back({{"margin", to_json(margin)}, {"count", to_decimal(count)}});
        print(j);
    } else if (kind == "cyclic") {
        const auto w = cyclic_not_total_witness(n, limits);
        print(w ? to_json(*w) : Json(nullptr));
    } else {
        throw InputError("unknown construction '" + kind + "'");
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kronecker coefficients, contingency tables and their bounds"};
    app.require_subcommand(1);

    std::string kind;
    std::vector<std::string> args;
    bool csv = false;
    std::vector<std::string> only;
    std::vector<std::string> suites;
    int workers = 1;
    int size = 0;
    bool diagonal = false;

    auto* exact = app.add_subcommand("exact", "exact values: kronecker, kostka, lr, char, dim, reduced");
    exact->add_option("kind", kind)->required();
    exact->add_option("args", args);

    auto* count = app.add_subcommand("count", "exact counts: t2, t3, b3, pyr, p, p2");
    count->add_option("kind", kind)->required();
    count->add_option("args", args);

    auto* bound = app.add_subcommand("bound", "every bound for a triple");
    bound->add_option("partitions", args)->required();
    bound->add_flag("--csv", csv, "one CSV row per bound");
    bound->add_option("--only", only, "comma-separated bound names");

    auto* verify_cmd = app.add_subcommand("verify", "invariant sweeps over all partitions of n");
    verify_cmd->add_option("n", size)->required();
    verify_cmd->add_option("--suite", suites, "sandwich, rsk, dominance, majorization, barvinok, vallejo, symmetry");
    verify_cmd->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);

    auto* construct = app.add_subcommand("construct", "pyramid constructions: search, staircase, tspp, cyclic");
    construct->add_option("kind", kind)->required();
    construct->add_option("args", args);
    construct->add_flag("--diagonal", diagonal, "search: only triples with equal margins");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInput;
    }

    try {
        const Limits limits = Limits::from_env();
        if (*exact) return cmd_exact(kind, args);
        if (*count) return cmd_count(kind, args, limits);
        if (*bound) return cmd_bound(args, csv, only, limits);
        if (*verify_cmd) return cmd_verify(size, suites, workers, limits);
        if (*construct) return cmd_construct(kind, args, diagonal, limits);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const LimitError& e) {
        std::cerr << "limit: " << e.what() << "\n";
        return kLimit;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return kViolations;
    }
    return kOk;
}
