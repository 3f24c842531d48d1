// Command-line front end over the tetrazero C API.
//
// Exit codes: 0 success, 2 usage error, 3 verification failure.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tetrazero.h"

namespace {

constexpr int kUsageError = 2;
constexpr int kVerifyError = 3;

int status_to_exit(tz_status st) {
    switch (st) {
        case TZ_OK: return 0;
        case TZ_EINVAL: return kUsageError;
        case TZ_EDEGENERATE: return 0;  // handled per command
        case TZ_EVERIFY: return kVerifyError;
        default: return 1;
    }
}

void print_error(tz_status st) {
    std::fprintf(stderr, "error: %s\n", tz_last_error());
    (void)st;
}

bool parse_edges(const std::vector<std::string>& args, int64_t out[6]) {
    if (args.size() != 6) return false;
    for (int i = 0; i < 6; ++i) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(args[i], &used);
            if (used != args[i].size() || v <= 0) return false;
            out[i] = v;
        } catch (...) {
            return false;
        }
    }
    return true;
}

struct ScanPrinter {
    bool csv = false;
    static int callback(const tz_report* r, void* user) {
        auto* self = static_cast<ScanPrinter*>(user);
        char* line = self->csv ? tz_report_csv_row(r) : tz_report_json(r);
        std::printf("%s\n", line);
        tz_string_free(line);
        return 0;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for Dehn-invariant-zero tetrahedra"};
    app.require_subcommand(1);

    std::vector<std::string> edge_args;
    bool cross_check = false;

    auto* cmd_check = app.add_subcommand("check", "Test one integer edge tuple");
    cmd_check->add_option("edges", edge_args, "e12 e34 e13 e24 e14 e23")->expected(6);
    cmd_check->add_flag("--cross-check", cross_check, "verify with the numeric angle-sum oracle");

    int64_t max_edge = 1;
    int workers = 1;
    std::string dedupe = "s4";
    std::string format = "json";
    bool emit_all = false;
    bool scan_cross = false;
    auto* cmd_scan = app.add_subcommand("scan", "Enumerate tuples up to a size bound");
    cmd_scan->add_option("--max-edge", max_edge, "largest edge length")->required();
    cmd_scan->add_option("--workers", workers, "worker threads")->default_val(1);
    cmd_scan->add_option("--dedupe", dedupe, "none | s4 | s4+regge")->default_val("s4");
    cmd_scan->add_option("--format", format, "json | csv")->default_val("json");
    cmd_scan->add_flag("--all", emit_all, "also report invalid and non-zero tuples");
    cmd_scan->add_flag("--cross-check", scan_cross, "verify reports with the numeric oracle");

    std::vector<std::string> dim_args;
    auto* cmd_dim = app.add_subcommand("dim", "Angle span dimension and valuation rows");
    cmd_dim->add_option("edges", dim_args, "e12 e34 e13 e24 e14 e23")->expected(6);

    std::vector<std::string> orbit_args;
    std::string group = "both";
    std::string up_to;
    auto* cmd_orbit = app.add_subcommand("orbit", "Symmetry orbit of a tuple");
    cmd_orbit->add_option("edges", orbit_args, "e12 e34 e13 e24 e14 e23")->expected(6);
    cmd_orbit->add_option("--group", group, "s4 | regge | both")->default_val("both");
    cmd_orbit->add_option("--up-to", up_to, "s4: report canonical representatives");

    std::string family;
    std::string parameter;
    int64_t max_denominator = 0;
    auto* cmd_family = app.add_subcommand("family", "Generate family instances");
    cmd_family->add_option("name", family, "h1 | h2 | h3 | new-t | new-tp")->required();
    cmd_family->add_option("--t", parameter, "rational parameter, e.g. 16 or 1/2");
    cmd_family->add_option("--max-denominator", max_denominator, "search bound for h2/h3");

    std::string bound_kind;
    int precision = 30;
    auto* cmd_bound = app.add_subcommand("bound", "Edge-length bound reports");
    cmd_bound->add_option("kind", bound_kind, "case5")->required();
    cmd_bound->add_option("--precision", precision, "working decimal digits")->default_val(30);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : kUsageError;
    }

    if (cmd_check->parsed()) {
        int64_t edges[6];
        if (!parse_edges(edge_args, edges)) {
            std::fprintf(stderr, "error: check needs six positive integers\n");
            return kUsageError;
        }
        tz_check_options opts{cross_check ? 1 : 0};
        tz_report* report = nullptr;
        tz_status st = tz_check(edges, &opts, &report);
        if (st == TZ_EDEGENERATE) {
            // Degenerate tuples are an ordinary verdict for check.
            std::printf("{\"edges\":[%" PRId64 ",%" PRId64 ",%" PRId64 ",%" PRId64 ",%" PRId64
                        ",%" PRId64 "],\"valid\":false}\n",
                        edges[0], edges[1], edges[2], edges[3], edges[4], edges[5]);
            return 0;
        }
        if (st != TZ_OK) {
            print_error(st);
            return status_to_exit(st);
        }
        char* json = tz_report_json(report);
        std::printf("%s\n", json);
        tz_string_free(json);
        tz_report_free(report);
        return 0;
    }

    if (cmd_scan->parsed()) {
        tz_scan_options opts{};
        opts.max_edge = max_edge;
        opts.workers = workers;
        if (dedupe == "none")
            opts.dedupe = 0;
        else if (dedupe == "s4")
            opts.dedupe = 1;
        else if (dedupe == "s4+regge")
            opts.dedupe = 2;
        else {
            std::fprintf(stderr, "error: --dedupe must be none, s4 or s4+regge\n");
            return kUsageError;
        }
        if (format != "json" && format != "csv") {
            std::fprintf(stderr, "error: --format must be json or csv\n");
            return kUsageError;
        }
        opts.emit_all = emit_all ? 1 : 0;
        opts.cross_check = scan_cross ? 1 : 0;
        ScanPrinter printer{format == "csv"};
        if (printer.csv) {
            char* header = tz_csv_header();
            std::printf("%s\n", header);
            tz_string_free(header);
        }
        tz_status st = tz_scan(&opts, &ScanPrinter::callback, &printer);
        if (st != TZ_OK) {
            print_error(st);
            return status_to_exit(st);
        }
        return 0;
    }

    auto run_json = [&](tz_status st, char* json) {
        if (st != TZ_OK) {
            print_error(st);
            return status_to_exit(st) == 0 ? 1 : status_to_exit(st);
        }
        std::printf("%s\n", json);
        tz_string_free(json);
        return 0;
    };

    if (cmd_dim->parsed()) {
        int64_t edges[6];
        if (!parse_edges(dim_args, edges)) {
            std::fprintf(stderr, "error: dim needs six positive integers\n");
            return kUsageError;
        }
        char* json = nullptr;
        return run_json(tz_dim_json(edges, &json), json);
    }

    if (cmd_orbit->parsed()) {
        int64_t edges[6];
        if (!parse_edges(orbit_args, edges)) {
            std::fprintf(stderr, "error: orbit needs six positive integers\n");
            return kUsageError;
        }
        int group_id;
        if (group == "s4")
            group_id = 0;
        else if (group == "regge")
            group_id = 1;
        else if (group == "both")
            group_id = 2;
        else {
            std::fprintf(stderr, "error: --group must be s4, regge or both\n");
            return kUsageError;
        }
        if (!up_to.empty() && up_to != "s4") {
            std::fprintf(stderr, "error: --up-to only supports s4\n");
            return kUsageError;
        }
        char* json = nullptr;
        return run_json(tz_orbit_json(edges, group_id, up_to == "s4" ? 1 : 0, &json), json);
    }

    if (cmd_family->parsed()) {
        char* json = nullptr;
        tz_status st = tz_family_json(family.c_str(), parameter.empty() ? nullptr : parameter.c_str(),
                                      max_denominator, &json);
        return run_json(st, json);
    }

    if (cmd_bound->parsed()) {
        if (bound_kind != "case5") {
            std::fprintf(stderr, "error: unknown bound '%s'\n", bound_kind.c_str());
            return kUsageError;
        }
        char* json = nullptr;
        return run_json(tz_bound_case5_json(precision, &json), json);
    }

    return kUsageError;
}
