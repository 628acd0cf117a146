// partfreq command-line interface. All computation goes through the C API in
// partfreq/partfreq.h; this file only parses arguments and formats reports.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "partfreq/partfreq.h"

using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VerdictFailure {};  // raised after the report is printed; exit 1

[[noreturn]] void fail_usage(const std::string& message) { throw UsageError(message); }

void check_status(pf_status status) {
    if (status != PF_OK) {
        fail_usage(std::string(pf_status_name(status)) + ": " + pf_last_error());
    }
}

/// "4", "1,2,5", "a..b", or "a..b:s+r" (the progression n ≡ r mod s
/// intersected with [a,b]).
std::vector<std::uint64_t> parse_n_spec(const std::string& text) {
    auto parse_u64 = [](const std::string& piece) {
        if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos) {
            fail_usage("invalid integer '" + piece + "' in --n");
        }
        try {
            return std::stoull(piece);
        } catch (const std::exception&) {
            fail_usage("integer out of range in --n: '" + piece + "'");
        }
    };

    std::vector<std::uint64_t> values;
    auto range = text.find("..");
    if (range != std::string::npos) {
        std::uint64_t lo = parse_u64(text.substr(0, range));
        std::string rest = text.substr(range + 2);
        std::uint64_t stride = 1;
        std::uint64_t residue = 0;
        bool progression = false;
        auto colon = rest.find(':');
        if (colon != std::string::npos) {
            std::string prog = rest.substr(colon + 1);
            rest = rest.substr(0, colon);
            auto plus = prog.find('+');
            if (plus == std::string::npos) fail_usage("range progression must look like s+r");
            stride = parse_u64(prog.substr(0, plus));
            residue = parse_u64(prog.substr(plus + 1));
            if (stride == 0) fail_usage("range stride must be positive");
            if (residue >= stride) fail_usage("range residue must be below the stride");
            progression = true;
        }
        std::uint64_t hi = parse_u64(rest);
        if (lo > hi) fail_usage("empty range in --n");
        for (std::uint64_t n = lo; n <= hi; ++n) {
            if (!progression || n % stride == residue) values.push_back(n);
        }
    } else {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto comma = text.find(',', pos);
            std::string piece =
                comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
            values.push_back(parse_u64(piece));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    if (values.empty()) fail_usage("--n selected no values");
    return values;
}

// ---- report rendering ----

std::string cell_text(const json& value) {
    return value.is_string() ? value.get<std::string>() : value.dump();
}

void print_tsv(const json& report) {
    std::string head = "# command=" + report.at("command").get<std::string>();
    for (const auto& [key, value] : report.at("params").items()) {
        head += '\t' + key + '=' + cell_text(value);
    }
    std::cout << head << '\n';
    if (report.contains("orbit_size")) {
        std::cout << "# orbit_size=" << report.at("orbit_size").dump() << '\n';
    }
    for (const auto& verdict : report.at("verdicts")) {
        std::cout << "# verdict\tname=" << verdict.at("name").get<std::string>() << "\tpass="
                  << (verdict.at("pass").get<bool>() ? 1 : 0);
        if (verdict.contains("witness")) {
            std::cout << "\twitness=" << verdict.at("witness").get<std::string>();
        }
        std::cout << '\n';
    }
    const json& rows = report.at("rows");
    if (rows.empty()) return;
    std::string header;
    for (const auto& [key, value] : rows.front().items()) {
        if (!header.empty()) header += '\t';
        header += key;
    }
    std::cout << header << '\n';
    for (const auto& row : rows) {
        std::string line;
        for (const auto& [key, value] : row.items()) {
            if (!line.empty()) line += '\t';
            line += cell_text(value);
        }
        std::cout << line << '\n';
    }
}

void emit(const json& report, const std::string& format) {
    if (format == "json") {
        std::cout << report.dump(2) << '\n';
    } else {
        print_tsv(report);
    }
}

json make_report(const std::string& command, json params) {
    json report;
    report["command"] = command;
    report["params"] = std::move(params);
    report["rows"] = json::array();
    report["verdicts"] = json::array();
    return report;
}

using Clock = std::chrono::steady_clock;

void finish(json& report, Clock::time_point started, const std::string& format) {
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started);
    report["elapsed_ms"] = elapsed.count();
    emit(report, format);
}

// ---- partition helpers ----

struct PartitionHandle {
    pf_partition* ptr = nullptr;
    ~PartitionHandle() { pf_partition_free(ptr); }
};

void parse_partition_arg(const std::string& text, PartitionHandle& out) {
    int reordered = 0;
    check_status(pf_partition_parse(text.c_str(), &reordered, &out.ptr));
    if (reordered) {
        std::cerr << "warning: parts were not nonincreasing; sorted " << text << " into "
                  << pf_partition_str(out.ptr) << '\n';
    }
}

// ---- subcommand bodies ----

void run_orbit_table(const std::string& n_spec, std::uint64_t m, const std::string& format) {
    auto started = Clock::now();
    std::vector<std::uint64_t> ns = parse_n_spec(n_spec);

    struct TableHandle {
        pf_orbit_table* ptr = nullptr;
        ~TableHandle() { pf_orbit_table_free(ptr); }
    };
    std::vector<std::unique_ptr<TableHandle>> tables;
    std::vector<std::uint64_t> sizes;  // union of occurring orbit sizes
    for (std::uint64_t n : ns) {
        auto handle = std::make_unique<TableHandle>();
        check_status(pf_orbit_table_compute(n, m, &handle->ptr));
        for (std::size_t i = 0; i < pf_orbit_table_rows(handle->ptr); ++i) {
            std::uint64_t k = pf_orbit_table_orbit_size(handle->ptr, i);
            auto at = std::lower_bound(sizes.begin(), sizes.end(), k);
            if (at == sizes.end() || *at != k) sizes.insert(at, k);
        }
        tables.push_back(std::move(handle));
    }

    json report = make_report("orbit-table", json{{"n", n_spec}, {"m", m}});
    for (std::size_t t = 0; t < tables.size(); ++t) {
        // Every requested n reports the same orbit-size columns; sizes that
        // do not occur for this n appear with zero counts.
        std::size_t i = 0;
        std::size_t row_count = pf_orbit_table_rows(tables[t]->ptr);
        for (std::uint64_t k : sizes) {
            std::uint64_t o = 0;
            std::uint64_t p = 0;
            if (i < row_count && pf_orbit_table_orbit_size(tables[t]->ptr, i) == k) {
                o = pf_orbit_table_o_count(tables[t]->ptr, i);
                p = pf_orbit_table_p_count(tables[t]->ptr, i);
                ++i;
            }
            report["rows"].push_back(
                json{{"n", ns[t]}, {"k", k}, {"o_count", o}, {"p_count", p}});
        }
    }
    finish(report, started, format);
}

struct CheckFlags {
    std::uint64_t m = 0;
    std::uint64_t b = 0;
    std::uint64_t A = 0;
    std::uint64_t B = 0;
    std::uint64_t C = 0;
    std::uint64_t order = 0;
    std::uint64_t nmax = 0;
    bool has_m = false, has_b = false, has_A = false, has_B = false, has_C = false;
    bool has_order = false, has_nmax = false;
};

json check_params(const std::string& name, const CheckFlags& flags) {
    auto require = [&](bool present, const char* flag) {
        if (!present) fail_usage("check " + name + " requires " + flag);
    };
    json params = json::object();
    auto order_or = [&](std::uint64_t fallback) {
        params["order"] = flags.has_order ? flags.order : fallback;
    };
    if (name == "pmm" || name == "orbit1" || name == "orbit2" || name == "corollary8") {
        require(flags.has_m, "--m");
        params["m"] = flags.m;
        order_or(name == "pmm" ? 40 : name == "orbit1" ? 35 : name == "orbit2" ? 30 : 50);
    } else if (name == "theorem4") {
        require(flags.has_b, "--b");
        params["b"] = flags.b;
        order_or(200);
    } else if (name == "remark4") {
        order_or(200);
    } else if (name == "congruence") {
        require(flags.has_A, "--A");
        require(flags.has_B, "--B");
        require(flags.has_C, "--C");
        require(flags.has_m, "--m");
        params["A"] = flags.A;
        params["B"] = flags.B;
        params["C"] = flags.C;
        params["m"] = flags.m;
        params["nmax"] = flags.has_nmax ? flags.nmax : 40;
    } else if (name == "ady") {
        require(flags.has_m, "--m");
        params["m"] = flags.m;
        params["nmax"] = flags.has_nmax ? flags.nmax : 40;
    } else {
        fail_usage("unknown check '" + name + "'");
    }
    return params;
}

void run_check(const std::string& name, const CheckFlags& flags, const std::string& format) {
    auto started = Clock::now();
    json params = check_params(name, flags);

    pf_report* handle = nullptr;
    pf_status status = pf_check_run(name.c_str(), params.dump().c_str(), &handle);
    check_status(status);
    json result = json::parse(pf_report_json(handle));
    bool pass = pf_report_pass(handle) != 0;
    pf_report_free(handle);

    json report = make_report("check", params);
    report["params"]["name"] = name;
    json verdict;
    verdict["name"] = result.at("name");
    verdict["pass"] = pass;
    std::string witness = result.at("witness").get<std::string>();
    if (!witness.empty()) verdict["witness"] = witness;
    if (!result.at("summary").empty()) verdict["summary"] = result.at("summary");
    report["verdicts"].push_back(verdict);
    if (!result.at("rows").empty()) {
        report["rows"] = result.at("rows");
    } else if (!pass) {
        for (const auto& mismatch : result.at("mismatches")) {
            report["rows"].push_back(mismatch);
        }
    }
    finish(report, started, format);
    if (!pass) throw VerdictFailure{};
}

void run_glaisher(const std::string& text, std::uint64_t m, const std::string& format) {
    auto started = Clock::now();
    PartitionHandle input;
    parse_partition_arg(text, input);
    PartitionHandle image;
    check_status(pf_glaisher(input.ptr, m, &image.ptr));
    json report = make_report("glaisher", json{{"partition", text}, {"m", m}});
    report["rows"].push_back(json{{"partition", pf_partition_str(image.ptr)}});
    finish(report, started, format);
}

void run_rotate(const std::string& text, std::uint64_t m, std::uint64_t steps,
                const std::string& format) {
    auto started = Clock::now();
    PartitionHandle input;
    parse_partition_arg(text, input);
    PartitionHandle image;
    check_status(pf_rotate(input.ptr, m, steps, &image.ptr));
    json report = make_report("rotate", json{{"partition", text}, {"m", m}, {"steps", steps}});
    report["rows"].push_back(json{{"step", steps}, {"partition", pf_partition_str(image.ptr)}});
    finish(report, started, format);
}

void run_orbit(const std::string& text, std::uint64_t m, const std::string& format) {
    auto started = Clock::now();
    PartitionHandle input;
    parse_partition_arg(text, input);
    pf_partition_list* cycle = nullptr;
    check_status(pf_orbit_cycle(input.ptr, m, &cycle));
    json report = make_report("orbit", json{{"partition", text}, {"m", m}});
    report["orbit_size"] = pf_partition_list_size(cycle);
    for (std::size_t i = 0; i < pf_partition_list_size(cycle); ++i) {
        report["rows"].push_back(
            json{{"step", i}, {"partition", pf_partition_str(pf_partition_list_get(cycle, i))}});
    }
    pf_partition_list_free(cycle);
    finish(report, started, format);
}

void run_expand(const std::string& spec, std::uint64_t order, std::uint64_t mod,
                const std::string& format) {
    auto started = Clock::now();
    pf_series* series = nullptr;
    check_status(pf_series_expand(spec.c_str(), order, &series));
    if (mod != 0) {
        pf_series* reduced = nullptr;
        pf_status status = pf_series_mod(series, mod, &reduced);
        pf_series_free(series);
        check_status(status);
        series = reduced;
    }
    json params = json{{"spec", spec}, {"order", order}};
    if (mod != 0) params["mod"] = mod;
    json report = make_report("expand", std::move(params));
    for (std::uint64_t e = 0; e <= pf_series_order(series); ++e) {
        report["rows"].push_back(
            json{{"exponent", e}, {"coefficient", pf_series_coeff(series, e)}});
    }
    pf_series_free(series);
    finish(report, started, format);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact partition transforms, orbit statistics and q-series checks"};
    app.require_subcommand(1);
    app.fallthrough();  // --format may follow the subcommand

    std::string format = "tsv";
    app.add_option("--format", format, "output format (tsv or json)")
        ->check(CLI::IsMember({"tsv", "json"}))
        ->capture_default_str();

    // orbit-table
    auto* table_cmd =
        app.add_subcommand("orbit-table", "orbit-size statistics over all partitions of n");
    std::string n_spec;
    std::uint64_t table_m = 0;
    table_cmd->add_option("--n", n_spec, "weights: 'a', 'a,b,c', 'a..b' or 'a..b:s+r'")
        ->required();
    table_cmd->add_option("--m", table_m, "modulus (>= 2)")->required();

    // check
    auto* check_cmd = app.add_subcommand(
        "check", "run an identity/congruence check (pmm, orbit1, orbit2, theorem4, remark4, "
                 "corollary8, congruence, ady)");
    std::string check_name;
    CheckFlags flags;
    check_cmd->add_option("name", check_name, "check name")->required();
    check_cmd->add_option("--m", flags.m, "modulus")->each([&](const std::string&) {
        flags.has_m = true;
    });
    check_cmd->add_option("--b", flags.b, "congruence base")->each([&](const std::string&) {
        flags.has_b = true;
    });
    check_cmd->add_option("--A", flags.A, "progression step")->each([&](const std::string&) {
        flags.has_A = true;
    });
    check_cmd->add_option("--B", flags.B, "progression residue")->each([&](const std::string&) {
        flags.has_B = true;
    });
    check_cmd->add_option("--C", flags.C, "divisor")->each([&](const std::string&) {
        flags.has_C = true;
    });
    check_cmd->add_option("--order", flags.order, "truncation order")
        ->each([&](const std::string&) { flags.has_order = true; });
    check_cmd->add_option("--nmax", flags.nmax, "largest weight to test")
        ->each([&](const std::string&) { flags.has_nmax = true; });

    // partition transforms
    std::string partition_text;
    std::uint64_t transform_m = 0;
    std::uint64_t steps = 1;
    auto* glaisher_cmd = app.add_subcommand("glaisher", "transpose the part-frequency matrices");
    glaisher_cmd->add_option("--partition", partition_text, "comma-separated parts")->required();
    glaisher_cmd->add_option("--m", transform_m, "modulus (>= 2)")->required();
    auto* rotate_cmd = app.add_subcommand("rotate", "rotate the matrix antidiagonals");
    rotate_cmd->add_option("--partition", partition_text, "comma-separated parts")->required();
    rotate_cmd->add_option("--m", transform_m, "modulus (>= 2)")->required();
    rotate_cmd->add_option("--steps", steps, "number of applications")->capture_default_str();
    auto* orbit_cmd = app.add_subcommand("orbit", "full rotation cycle and its size");
    orbit_cmd->add_option("--partition", partition_text, "comma-separated parts")->required();
    orbit_cmd->add_option("--m", transform_m, "modulus (>= 2)")->required();

    // expand
    auto* expand_cmd = app.add_subcommand("expand", "expand a q-product spec");
    std::string spec_text;
    std::uint64_t order = 20;
    std::uint64_t mod = 0;
    expand_cmd->add_option("--spec", spec_text, "e.g. \"(q^2;q^2)^2 / ((q;q) (q^4;q^4))\"")
        ->required();
    expand_cmd->add_option("--order", order, "truncation order")->capture_default_str();
    expand_cmd->add_option("--mod", mod, "reduce coefficients mod this")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (table_cmd->parsed()) {
            run_orbit_table(n_spec, table_m, format);
        } else if (check_cmd->parsed()) {
            run_check(check_name, flags, format);
        } else if (glaisher_cmd->parsed()) {
            run_glaisher(partition_text, transform_m, format);
        } else if (rotate_cmd->parsed()) {
            run_rotate(partition_text, transform_m, steps, format);
        } else if (orbit_cmd->parsed()) {
            run_orbit(partition_text, transform_m, format);
        } else if (expand_cmd->parsed()) {
            run_expand(spec_text, order, mod, format);
        }
    } catch (const VerdictFailure&) {
        return 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
