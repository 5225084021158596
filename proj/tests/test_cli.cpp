#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>

#include <json.hpp>

// End-to-end tests driving the built binary as a subprocess. The binary
// location comes from the LOGDER_CLI environment variable (set by ctest);
// a sibling `logder` of this test executable is the fallback.

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

std::string cli_path() {
    if (const char* env = std::getenv("LOGDER_CLI")) return env;
    std::error_code ec;
    fs::path self = fs::read_symlink("/proc/self/exe", ec);
    if (!ec) {
        fs::path sibling = self.parent_path() / "logder";
        if (fs::exists(sibling)) return sibling.string();
    }
    throw std::runtime_error("cannot locate the logder binary; set LOGDER_CLI");
}

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout and stderr interleaved
};

RunResult run(const std::string& args) {
    RunResult r;
    std::string cmd = args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string cli() { return "'" + cli_path() + "'"; }

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / ("logder_cli_" + std::to_string(getpid()));
    fs::create_directories(dir);
    return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
    fs::path p = scratch_dir() / name;
    std::ofstream out(p);
    out << content;
    return p;
}

const std::string kGeneric4 =
    "field 1\ndim 3\n1 0 0\n0 1 0\n0 0 1\n1 1 1\n";

} // namespace

TEST_CASE("catalog emits the arrangement format") {
    RunResult r = run(cli() + " catalog --family braid --n 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "field 1\ndim 3\n1 -1 0\n1 0 -1\n0 1 -1\n");

    RunResult m = run(cli() + " catalog --family monomial --r 3 --p 3 --l 2");
    CHECK(m.exit_code == 0);
    CHECK(m.output == "field 3\ndim 2\n1 -1\n1 -z\n1 1+z\n");
}

TEST_CASE("verbs compose through pipes") {
    RunResult r = run(cli() + " catalog --family braid --n 4 | " + cli() + " free -");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("free: yes") != std::string::npos);
    CHECK(r.output.find("exponents: 0 1 2 3") != std::string::npos);

    RunResult e = run(cli() + " catalog --family braid --n 3 | " + cli() +
                      " restrict - --hyperplane 1 | " + cli() + " exponents -");
    CHECK(e.exit_code == 0);
    CHECK(e.output == "0 1\n");
}

TEST_CASE("decision exit codes") {
    fs::path nonfree = write_file("generic4.txt", kGeneric4);
    RunResult r = run(cli() + " free '" + nonfree.string() + "'");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("free: no") != std::string::npos);

    CHECK(run(cli() + " indfree '" + nonfree.string() + "'").exit_code == 1);
    CHECK(run(cli() + " exponents '" + nonfree.string() + "'").exit_code == 1);
}

TEST_CASE("usage and input errors exit 2") {
    CHECK(run(cli() + " free /no/such/file.txt").exit_code == 2);
    CHECK(run(cli() + " bogusverb").exit_code == 2);
    CHECK(run(cli() + " catalog").exit_code == 2);
    CHECK(run(cli() + " catalog --family octonion --n 3").exit_code == 2);
    fs::path zero = write_file("zero.txt", "field 1\ndim 2\n0 0\n");
    RunResult r = run(cli() + " free '" + zero.string() + "'");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("line 3") != std::string::npos);
    CHECK(run(cli() + " --help").exit_code == 0);
}

TEST_CASE("characteristic polynomial output") {
    RunResult r = run(cli() + " catalog --family braid --n 3 | " + cli() + " charpoly -");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "chi(t) = t^3 - 3t^2 + 2t\npi(t) = 2t^2 + 3t + 1\n");
}

TEST_CASE("json reports parse and are jobs-stable") {
    fs::path b3 = scratch_dir() / "b3.txt";
    REQUIRE(run(cli() + " catalog --family coxeterB --n 3 > '" + b3.string() + "'").exit_code == 0);

    RunResult one = run(cli() + " heredfree '" + b3.string() + "' --json --jobs 1");
    RunResult four = run(cli() + " heredfree '" + b3.string() + "' --json --jobs 4");
    CHECK(one.exit_code == 0);
    CHECK(four.exit_code == 0);
    CHECK(one.output == four.output);

    json j = json::parse(one.output);
    CHECK(j["hereditarily_free"] == true);
    CHECK(j["nodes"].is_array());
    CHECK(j["nodes"].size() == 24);
    for (const auto& node : j["nodes"]) {
        CHECK(node["free"] == true);
        CHECK(node.contains("key"));
        CHECK(node.contains("exponents"));
    }
}

TEST_CASE("free json carries the certificate data") {
    RunResult r = run(cli() + " catalog --family braid --n 3 | " + cli() + " free - --json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["free"] == true);
    CHECK(j["generator_count"] == 3);
    CHECK(j["exponents"] == json::array({0, 1, 2}));
    CHECK(j["saito_constant"].is_string());
}

TEST_CASE("basis certificates round-trip through saito") {
    fs::path arr = scratch_dir() / "b2.txt";
    fs::path basis = scratch_dir() / "b2_basis.txt";
    REQUIRE(run(cli() + " catalog --family coxeterB --n 2 > '" + arr.string() + "'").exit_code == 0);
    RunResult fr =
        run(cli() + " free '" + arr.string() + "' --certificate '" + basis.string() + "'");
    CHECK(fr.exit_code == 0);

    RunResult ok = run(cli() + " saito '" + arr.string() + "' --basis '" + basis.string() + "'");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("accepted: yes") != std::string::npos);

    // corrupt one generator: replace the first basis line by a non-member
    std::ifstream in(basis);
    std::string header, line1, rest, line;
    std::getline(in, header);
    std::getline(in, line1);
    while (std::getline(in, line)) rest += line + "\n";
    fs::path bad = write_file("b2_bad.txt", header + "\n1, 0\n" + rest);
    RunResult rej = run(cli() + " saito '" + arr.string() + "' --basis '" + bad.string() + "'");
    CHECK(rej.exit_code == 1);
    CHECK(rej.output.find("accepted: no") != std::string::npos);

    // dimension mismatch is an input error, not a verdict
    RunResult mix = run(cli() + " catalog --family braid --n 3 | " + cli() +
                        " saito - --basis '" + basis.string() + "'");
    CHECK(mix.exit_code == 2);
}

TEST_CASE("inductive chains are written as certificates") {
    fs::path arr = scratch_dir() / "ind_b2.txt";
    fs::path chain = scratch_dir() / "ind_b2_chain.json";
    REQUIRE(run(cli() + " catalog --family coxeterB --n 2 > '" + arr.string() + "'").exit_code == 0);
    RunResult r = run(cli() + " indfree '" + arr.string() + "' --audit --certificate '" +
                      chain.string() + "'");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("inductively free: yes") != std::string::npos);
    CHECK(r.output.find("verified: audit") != std::string::npos);

    std::ifstream in(chain);
    json j = json::parse(in);
    CHECK(j["ordering"].size() == 4);
    CHECK(j["step_exponents"].size() == 4);
    CHECK(j["step_exponents"].back() == json::array({1, 3}));
}

TEST_CASE("oracle agreement in json") {
    RunResult r = run(cli() + " catalog --family braid --n 3 | " + cli() +
                      " oracle - --max-degree 3 --json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["free"] == true);
    CHECK(j["all_agree"] == true);
    REQUIRE(j["degrees"].size() == 4);
    CHECK(j["degrees"][0]["dim"] == 1);
    CHECK(j["degrees"][1]["dim"] == 4);
    for (const auto& d : j["degrees"]) CHECK(d["agrees"] == true);
}

TEST_CASE("restriction emits parsable output with a map header") {
    RunResult r = run(cli() + " catalog --family braid --n 4 | " + cli() +
                      " restrict - --form '1 -1 0 0'");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("# restriction to x1 - x2") != std::string::npos);
    // three distinct traces survive
    RunResult count = run(cli() + " catalog --family braid --n 4 | " + cli() +
                          " restrict - --form '1 -1 0 0' | " + cli() + " lattice - --json");
    json j = json::parse(count.output);
    CHECK(j["dim"] == 3);
}

TEST_CASE("stdin and file inputs agree") {
    fs::path arr = write_file("stdin_d3.txt", "");
    REQUIRE(run(cli() + " catalog --family coxeterD --n 3 > '" + arr.string() + "'").exit_code == 0);
    RunResult from_file = run(cli() + " free '" + arr.string() + "' --json");
    RunResult from_stdin = run(cli() + " free - --json < '" + arr.string() + "'");
    RunResult via_option = run(cli() + " free --input '" + arr.string() + "' --json");
    CHECK(from_file.exit_code == 0);
    CHECK(from_file.output == from_stdin.output);
    CHECK(from_file.output == via_option.output);
    json j = json::parse(from_file.output);
    CHECK(j["exponents"] == json::array({1, 2, 3}));
}

TEST_CASE("derivations verb lists minimal generators") {
    RunResult r = run(cli() + " catalog --family braid --n 3 | " + cli() + " derivations - --json");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["generator_count"] == 3);
    REQUIRE(j["generators"].size() == 3);
    CHECK(j["generators"][0]["degree"] == 0);
    CHECK(j["generators"][0]["components"].size() == 3);
}
