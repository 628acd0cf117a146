#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

using json = nlohmann::ordered_json;

namespace {

std::string run_cli(const std::string& args, int& exit_code, std::string* err_out = nullptr) {
    const std::string err_file = "/tmp/partfreq_test_cli_stderr.txt";
    std::string cmd = std::string(PARTFREQ_CLI_PATH) + " " + args + " 2>" + err_file;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (err_out) {
        std::ifstream err(err_file);
        std::stringstream collected;
        collected << err.rdbuf();
        *err_out = collected.str();
    }
    return out;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    for (;;) {
        auto at = line.find(sep, pos);
        if (at == std::string::npos) {
            out.push_back(line.substr(pos));
            return out;
        }
        out.push_back(line.substr(pos, at - pos));
        pos = at + 1;
    }
}

struct TsvReport {
    std::map<std::string, std::string> params;  // includes "command"
    std::vector<std::map<std::string, std::string>> verdicts;
    std::optional<std::string> orbit_size;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

TsvReport parse_tsv(const std::string& text) {
    TsvReport report;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("# verdict", 0) == 0) {
            std::map<std::string, std::string> verdict;
            for (const std::string& field : split(line, '\t')) {
                auto eq = field.find('=');
                if (eq != std::string::npos) {
                    verdict[field.substr(0, eq)] = field.substr(eq + 1);
                }
            }
            report.verdicts.push_back(std::move(verdict));
        } else if (line.rfind("# orbit_size=", 0) == 0) {
            report.orbit_size = line.substr(std::string("# orbit_size=").size());
        } else if (line.rfind("# ", 0) == 0) {
            for (const std::string& field : split(line.substr(2), '\t')) {
                auto eq = field.find('=');
                REQUIRE(eq != std::string::npos);
                report.params[field.substr(0, eq)] = field.substr(eq + 1);
            }
        } else if (report.header.empty()) {
            report.header = split(line, '\t');
        } else {
            report.rows.push_back(split(line, '\t'));
        }
    }
    return report;
}

std::string cell_text(const json& value) {
    return value.is_string() ? value.get<std::string>() : value.dump();
}

/// TSV and JSON must encode identical data (elapsed_ms is JSON-only timing).
void check_same_data(const std::string& args) {
    CAPTURE(args);
    int tsv_code = 0;
    int json_code = 0;
    TsvReport tsv = parse_tsv(run_cli(args + " --format tsv", tsv_code));
    json body = json::parse(run_cli(args + " --format json", json_code));
    CHECK(tsv_code == json_code);

    CHECK(tsv.params.at("command") == body.at("command").get<std::string>());
    for (const auto& [key, value] : body.at("params").items()) {
        CHECK(tsv.params.at(key) == cell_text(value));
    }
    // command + params account for every # key
    CHECK(tsv.params.size() == body.at("params").size() + 1);

    const json& rows = body.at("rows");
    REQUIRE(tsv.rows.size() == rows.size());
    for (std::size_t i = 0; i < tsv.rows.size(); ++i) {
        REQUIRE(tsv.rows[i].size() == tsv.header.size());
        REQUIRE(rows[i].size() == tsv.header.size());
        std::size_t column = 0;
        for (const auto& [key, value] : rows[i].items()) {
            CHECK(tsv.header[column] == key);
            CHECK(tsv.rows[i][column] == cell_text(value));
            ++column;
        }
    }

    const json& verdicts = body.at("verdicts");
    REQUIRE(tsv.verdicts.size() == verdicts.size());
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        CHECK(tsv.verdicts[i].at("name") == verdicts[i].at("name").get<std::string>());
        CHECK(tsv.verdicts[i].at("pass") == (verdicts[i].at("pass").get<bool>() ? "1" : "0"));
        if (verdicts[i].contains("witness")) {
            CHECK(tsv.verdicts[i].at("witness") ==
                  verdicts[i].at("witness").get<std::string>());
        }
    }

    if (body.contains("orbit_size")) {
        REQUIRE(tsv.orbit_size.has_value());
        CHECK(*tsv.orbit_size == body.at("orbit_size").dump());
    } else {
        CHECK_FALSE(tsv.orbit_size.has_value());
    }
    CHECK(body.contains("elapsed_ms"));
}

}  // namespace

TEST_CASE("orbit-table command") {
    int code = 0;
    TsvReport trivial = parse_tsv(run_cli("orbit-table --n 0 --m 2", code));
    CHECK(code == 0);
    REQUIRE(trivial.rows.size() == 1);
    CHECK(trivial.rows[0] == std::vector<std::string>{"0", "1", "1", "1"});
    CHECK(trivial.header == std::vector<std::string>{"n", "k", "o_count", "p_count"});

    TsvReport row29 = parse_tsv(run_cli("orbit-table --n 29 --m 5", code));
    CHECK(code == 0);
    REQUIRE(row29.rows.size() == 3);
    CHECK(row29.rows[0] == std::vector<std::string>{"29", "1", "1480", "1480"});
    CHECK(row29.rows[1] == std::vector<std::string>{"29", "2", "1535", "3070"});
    CHECK(row29.rows[2] == std::vector<std::string>{"29", "3", "5", "15"});

    // Ranges with a progression, plus zero-filled columns for absent sizes.
    TsvReport ranged = parse_tsv(run_cli("orbit-table --n 4..14:5+4 --m 5", code));
    CHECK(code == 0);
    REQUIRE(ranged.rows.size() == 6);  // k in {1,2} for each of n=4,9,14
    CHECK(ranged.rows[0] == std::vector<std::string>{"4", "1", "5", "5"});
    CHECK(ranged.rows[1] == std::vector<std::string>{"4", "2", "0", "0"});
    CHECK(ranged.rows[2] == std::vector<std::string>{"9", "1", "20", "20"});
    CHECK(ranged.rows[3] == std::vector<std::string>{"9", "2", "5", "10"});
    CHECK(ranged.rows[4] == std::vector<std::string>{"14", "1", "75", "75"});
    CHECK(ranged.rows[5] == std::vector<std::string>{"14", "2", "30", "60"});

    TsvReport listed = parse_tsv(run_cli("orbit-table --n 1,3 --m 2", code));
    CHECK(code == 0);
    CHECK(listed.rows.size() == 4);  // orbit sizes {1,2} reported for both weights

    run_cli("orbit-table --n 5..4 --m 2", code);
    CHECK(code == 2);
    run_cli("orbit-table --n 4..9:0+0 --m 2", code);
    CHECK(code == 2);
    run_cli("orbit-table --n 3 --m 1", code);
    CHECK(code == 2);
}

TEST_CASE("transform commands") {
    int code = 0;
    TsvReport glaisher = parse_tsv(run_cli("glaisher --partition 3,3,3 --m 2", code));
    CHECK(code == 0);
    REQUIRE(glaisher.rows.size() == 1);
    CHECK(glaisher.rows[0] == std::vector<std::string>{"6,3"});

    TsvReport rotate = parse_tsv(run_cli("rotate --partition 1 --m 2 --steps 7", code));
    CHECK(code == 0);
    REQUIRE(rotate.rows.size() == 1);
    CHECK(rotate.rows[0] == std::vector<std::string>{"7", "1"});

    TsvReport orbit =
        parse_tsv(run_cli("orbit --partition 20,5,5,4,2,2,1,1,1,1,1 --m 2", code));
    CHECK(code == 0);
    REQUIRE(orbit.orbit_size.has_value());
    CHECK(*orbit.orbit_size == "6");
    CHECK(orbit.rows.size() == 6);
    CHECK(orbit.rows[0][1] == "20,5,5,4,2,2,1,1,1,1,1");

    std::string err;
    TsvReport sorted = parse_tsv(run_cli("glaisher --partition 1,3,2 --m 2", code, &err));
    CHECK(code == 0);
    CHECK(err.find("warning") != std::string::npos);

    run_cli("glaisher --partition 3,x --m 2", code);
    CHECK(code == 2);
}

TEST_CASE("expand command") {
    int code = 0;
    TsvReport expanded = parse_tsv(run_cli("expand --spec '/ (q;q)' --order 10", code));
    CHECK(code == 0);
    REQUIRE(expanded.rows.size() == 11);
    CHECK(expanded.rows[9] == std::vector<std::string>{"9", "30"});

    TsvReport reduced =
        parse_tsv(run_cli("expand --spec '/ (q;q)' --order 10 --mod 5", code));
    CHECK(code == 0);
    CHECK(reduced.rows[4] == std::vector<std::string>{"4", "0"});
    CHECK(reduced.rows[9] == std::vector<std::string>{"9", "0"});

    run_cli("expand --spec '(q;' --order 5", code);
    CHECK(code == 2);
}

TEST_CASE("check command exit codes") {
    int code = 0;
    TsvReport trivially = parse_tsv(run_cli("check pmm --m 2 --order 0", code));
    CHECK(code == 0);
    REQUIRE(trivially.verdicts.size() == 1);
    CHECK(trivially.verdicts[0].at("pass") == "1");

    run_cli("check congruence --A 5 --B 4 --C 5 --m 5 --nmax 19", code);
    CHECK(code == 0);
    run_cli("check ady --m 2 --nmax 12", code);
    CHECK(code == 0);
    run_cli("check theorem4 --b 3 --order 60", code);
    CHECK(code == 0);

    TsvReport failing =
        parse_tsv(run_cli("check congruence --A 5 --B 3 --C 5 --m 5 --nmax 8", code));
    CHECK(code == 1);
    REQUIRE(failing.verdicts.size() == 1);
    CHECK(failing.verdicts[0].at("pass") == "0");
    CHECK_FALSE(failing.verdicts[0].at("witness").empty());

    run_cli("check congruence --A 5 --B 4 --C 5 --m 7 --nmax 9", code);
    CHECK(code == 2);  // A does not divide m
    run_cli("check congruence --B 4 --C 5 --m 5", code);
    CHECK(code == 2);  // missing --A
    run_cli("check no-such-identity --m 2", code);
    CHECK(code == 2);
    run_cli("definitely-not-a-command", code);
    CHECK(code == 2);
    run_cli("check pmm --m 2 --wrong-flag 1", code);
    CHECK(code == 2);
}

TEST_CASE("orbit2 report carries the comparison table") {
    int code = 0;
    TsvReport report = parse_tsv(run_cli("check orbit2 --m 2 --order 10", code));
    CHECK(code == 0);  // enumeration integrity is the verdict
    REQUIRE(report.rows.size() == 11);
    CHECK(report.header ==
          std::vector<std::string>{"n", "enumeration", "formula", "equal"});
    CHECK(report.rows[2] == std::vector<std::string>{"2", "2", "3", "0"});
    REQUIRE(report.verdicts.size() == 1);
    CHECK(report.verdicts[0].at("pass") == "1");
}

TEST_CASE("TSV and JSON encode identical data for every command") {
    check_same_data("orbit-table --n 4..14:5+4 --m 5");
    check_same_data("orbit-table --n 0 --m 2");
    check_same_data("glaisher --partition 3,3,3 --m 2");
    check_same_data("rotate --partition 2,1 --m 2 --steps 3");
    check_same_data("orbit --partition 20,5,5,4,2,2,1,1,1,1,1 --m 2");
    check_same_data("expand --spec '(q^2;q^2)^2 / ((q;q) (q^4;q^4))' --order 12");
    check_same_data("check pmm --m 2 --order 10");
    check_same_data("check orbit2 --m 2 --order 8");
    check_same_data("check congruence --A 5 --B 4 --C 5 --m 5 --nmax 14");
    check_same_data("check remark4 --order 40");
}

TEST_CASE("output bytes are deterministic") {
    int code = 0;
    std::string first = run_cli("orbit-table --n 9 --m 5", code);
    std::string second = run_cli("orbit-table --n 9 --m 5", code);
    CHECK(first == second);

    json a = json::parse(run_cli("check pmm --m 2 --order 15 --format json", code));
    json b = json::parse(run_cli("check pmm --m 2 --order 15 --format json", code));
    a.erase("elapsed_ms");
    b.erase("elapsed_ms");
    CHECK(a == b);
}
