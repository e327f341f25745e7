#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "qspectra/canonical.hpp"
#include "qspectra/graph.hpp"

using namespace qspectra;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

// Runs the installed binary with stderr dropped; tests read stdout only.
CliResult run_cli(const std::string& args) {
    const char* bin = std::getenv("QSPECTRA_BIN");
    REQUIRE(bin != nullptr);
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    std::array<char, 4096> buffer;
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content)
        : path("/tmp/" + name) {
        std::ofstream out(path, std::ios::trunc);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool have_binary() { return std::getenv("QSPECTRA_BIN") != nullptr; }

} // namespace

TEST_CASE("certify handles inline graphs", "[cli]") {
    if (!have_binary()) SKIP("QSPECTRA_BIN not set");
    const CliResult r = run_cli("certify --g A_");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("not-certified") != std::string::npos);
    CHECK(r.out.find("det W_Q=0") != std::string::npos);
}

TEST_CASE("certify stamps the chosen exponent variant", "[cli]") {
    if (!have_binary()) SKIP("QSPECTRA_BIN not set");
    const CliResult r = run_cli("certify --g @ --exponent-variant intro");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("floor((n-3)/2)") != std::string::npos);
    // K_1 under the intro variant: det 1 scaled by 2 gives an even value.
    CHECK(r.out.find("not-certified") != std::string::npos);

    const CliResult lemma = run_cli("certify --g @");
    CHECK(lemma.out.find("certified-DGQS") != std::string::npos);
}

TEST_CASE("certify keeps going past malformed lines and exits 2", "[cli]") {
    if (!have_binary()) SKIP("QSPECTRA_BIN not set");
    TempFile file("qspectra_cli_bad.g6", "A_\nC\nBw\n");
    const CliResult human = run_cli("certify --in " + file.path);
    CHECK(human.exit_code == 2);
    CHECK(human.out.find("MALFORMED") != std::string::npos);
    CHECK(human.out.find("graph A_") != std::string::npos);
    CHECK(human.out.find("graph Bw") != std::string::npos);

    const CliResult jsonl =
        run_cli("certify --in " + file.path + " --format jsonl");
    CHECK(jsonl.exit_code == 2);
    std::istringstream lines(jsonl.out);
    std::string line;
    int manifests = 0, certs = 0, errors = 0;
    while (std::getline(lines, line)) {
        const auto rec = nlohmann::json::parse(line);
        const std::string check = rec["key"]["check"];
        if (check == "manifest") ++manifests;
        if (check == "certify") ++certs;
        if (check == "certify-error") ++errors;
        CHECK(rec.contains("manifest_ref"));
    }
    CHECK(manifests == 1);
    CHECK(certs == 2);
    CHECK(errors == 1);
}

TEST_CASE("certify reads stdin when asked", "[cli]") {
    if (!have_binary()) SKIP("QSPECTRA_BIN not set");
    TempFile file("qspectra_cli_stdin.g6", "Bw\n");
    const CliResult r = run_cli("certify --in - < " + file.path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("graph Bw") != std::string::npos);
}

TEST_CASE("rooted-product emits graph6 that matches the library", "[cli]") {
    if (!have_binary()) SKIP("QSPECTRA_BIN not set");
    const CliResult r = run_cli("rooted-product --g Bw --k 2");
    CHECK(r.exit_code == 0);
    std::string line = r.out;
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.pop_back();
    CHECK(line == to_graph6(rooted_product(cycle_graph(3), 2)));

    const CliResult tower = run_cli("rooted-product --g Bw --k 2 --t 2");
    std::string tline = tower.out;
    while (!tline.empty() && (tline.back() == '\n' || tline.back() == '\r'))
        tline.pop_back();
    CHECK(tline == to_graph6(rooted_tower(cycle_graph(3), 2, 2)));
}

TEST_CASE("find-seeds reports an exhaustive empty scan as JSON", "[cli]") {
    if (!have_binary()) SKIP("QSPECTRA_BIN not set");
    const CliResult r = run_cli("find-seeds --n 4 --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["result"]["applicable"] == true);
    CHECK(j["result"]["classes_scanned"] == 11);
    CHECK(j["result"]["seeds"].empty());
    CHECK(j["manifest"]["parameters"].contains("catalog_hash"));

    const CliResult human = run_cli("find-seeds --n 4");
    CHECK(human.out.find("exhaustive over 11 classes") != std::string::npos);
}

TEST_CASE("mates names the claw's unique mate", "[cli]") {
    if (!have_binary()) SKIP("QSPECTRA_BIN not set");
    const std::string mate =
        canonical_form(disjoint_union(complete_graph(3), Graph(1)));
    const CliResult r = run_cli("mates --g Cs");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("mates: " + mate) != std::string::npos);
    CHECK(r.out.find("not determined") != std::string::npos);

    const CliResult lone = run_cli("mates --g @");
    CHECK(lone.out.find("DGQS within scope") != std::string::npos);
}

TEST_CASE("survey reports the infinite bucket", "[cli]") {
    if (!have_binary()) SKIP("QSPECTRA_BIN not set");
    const CliResult r = run_cli("survey --n 2 --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["result"]["infinite_valuation_count"] == 2);
    CHECK(j["result"]["min_valuation"].is_null());
}

TEST_CASE("audit quick run passes, stores, and reruns byte-identically",
          "[cli]") {
    if (!have_binary()) SKIP("QSPECTRA_BIN not set");
    const std::string store = "/tmp/qspectra_cli_store.jsonl";
    std::remove(store.c_str());

    const CliResult first = run_cli(
        "audit --quick --format json --store " + store);
    CHECK(first.exit_code == 0);
    const auto j = nlohmann::json::parse(first.out);
    CHECK(j["all_must_pass"] == true);
    CHECK(j["quick"] == true);

    const std::string store_once = slurp(store);
    CHECK_FALSE(store_once.empty());

    const CliResult second = run_cli(
        "audit --quick --format json --store " + store);
    CHECK(second.exit_code == 0);
    CHECK(second.out == first.out);
    CHECK(slurp(store) == store_once);
    std::remove(store.c_str());

    const CliResult human = run_cli("audit --quick");
    CHECK(human.exit_code == 0);
    CHECK(human.out.find("PASS") != std::string::npos);
    CHECK(human.out.find("all must-pass checks hold") != std::string::npos);
}

TEST_CASE("usage and input failures exit 1", "[cli]") {
    if (!have_binary()) SKIP("QSPECTRA_BIN not set");
    CHECK(run_cli("certify --in /tmp/qspectra_definitely_missing.g6")
              .exit_code == 1);
    CHECK(run_cli("no-such-subcommand").exit_code == 1);
    CHECK(run_cli("rooted-product --g Bw").exit_code == 1);
    CHECK(run_cli("mates --g not-graph6!").exit_code == 1);
    CHECK(run_cli("certify").exit_code == 1);
}

TEST_CASE("results can be routed to a file with --out", "[cli]") {
    if (!have_binary()) SKIP("QSPECTRA_BIN not set");
    const std::string out = "/tmp/qspectra_cli_out.txt";
    std::remove(out.c_str());
    const CliResult r = run_cli("certify --g A_ --out " + out);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(out).find("not-certified") != std::string::npos);
    std::remove(out.c_str());
}
