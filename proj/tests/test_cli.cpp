// End-to-end checks of the installed command-line surface: subcommands,
// exit codes, file outputs, determinism. Drives the real binary.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef IDEASIM_CLI_PATH
#error "IDEASIM_CLI_PATH must point at the CLI binary"
#endif

namespace {

namespace fs = std::filesystem;

struct CliOutcome {
    int exit_code;
    std::string output;  // stdout + stderr
};

fs::path scratch_dir(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "ideasim_cli" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

CliOutcome run_cli(const std::string& args) {
    const auto capture = fs::temp_directory_path() / "ideasim_cli" / "capture.txt";
    fs::create_directories(capture.parent_path());
    const std::string command =
        std::string(IDEASIM_CLI_PATH) + " " + args + " > " + capture.string() + " 2>&1";
    const int status = std::system(command.c_str());
    std::ifstream in(capture);
    std::ostringstream buf;
    buf << in.rdbuf();
    return {WEXITSTATUS(status), buf.str()};
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int data_lines(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int count = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        ++count;
    }
    return count;
}

const std::string kFast = " --M 6 --n 10 --k 5 --T 10 ";

}  // namespace

TEST_CASE("run with zero iterations writes a header-only event log") {
    const auto dir = scratch_dir("t0");
    const auto r = run_cli("run --seed 1 --T 0 --out " + dir.string());
    CHECK(r.exit_code == 0);
    CHECK(data_lines(slurp(dir / "events.log")) == 0);
    CHECK(data_lines(slurp(dir / "metrics.csv")) == 1);
    CHECK(slurp(dir / "config.txt").find("T=0\n") != std::string::npos);
}

TEST_CASE("identical invocations produce byte-identical outputs") {
    const auto dir_a = scratch_dir("det_a");
    const auto dir_b = scratch_dir("det_b");
    CHECK(run_cli("run --seed 4" + kFast + "--out " + dir_a.string()).exit_code == 0);
    CHECK(run_cli("run --seed 4" + kFast + "--out " + dir_b.string()).exit_code == 0);
    for (const char* name : {"metrics.csv", "events.log", "config.txt"})
        CHECK(slurp(dir_a / name) == slurp(dir_b / name));
}

TEST_CASE("config errors name the offending key and exit 1") {
    const auto dir = scratch_dir("bad");
    const auto r = run_cli("run --n 20 --M 4 --out " + dir.string());
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("n:") != std::string::npos);

    CHECK(run_cli("run --pm 1.5 --out " + dir.string()).exit_code == 1);
    CHECK(run_cli("nonsense").exit_code == 1);
}

TEST_CASE("config file plus flag overrides") {
    const auto dir = scratch_dir("cfgfile");
    const auto cfg = dir / "base.cfg";
    std::ofstream(cfg) << "M=6\nn=10\nk=5\nT=10\nseed=12\n";
    const auto r = run_cli("run --config " + cfg.string() + " --seed 13 --out " + dir.string());
    CHECK(r.exit_code == 0);
    const std::string resolved = slurp(dir / "config.txt");
    CHECK(resolved.find("M=6\n") != std::string::npos);
    CHECK(resolved.find("seed=13\n") != std::string::npos);  // flag wins
}

TEST_CASE("sweep outputs are jobs-invariant") {
    const auto dir_1 = scratch_dir("sweep_j1");
    const auto dir_8 = scratch_dir("sweep_j8");
    const std::string spec =
        "sweep --seed 5" + kFast +
        "--nu-values 0 --nu-values 0.6 --beta-values 0 --beta-values 0.6 -R 3 ";
    CHECK(run_cli(spec + "--jobs 1 --out " + dir_1.string()).exit_code == 0);
    CHECK(run_cli(spec + "--jobs 8 --out " + dir_8.string()).exit_code == 0);
    for (const char* name : {"raw.csv", "summary.csv", "trends.csv"})
        CHECK(slurp(dir_1 / name) == slurp(dir_8 / name));
    CHECK(data_lines(slurp(dir_1 / "raw.csv")) == 12);
    CHECK(data_lines(slurp(dir_1 / "summary.csv")) == 4);
}

TEST_CASE("groups writes one summary row per preset") {
    const auto dir = scratch_dir("groups");
    const auto r =
        run_cli("groups --seed 2" + kFast + "--groups G0,G7 -R 2 --out " + dir.string());
    CHECK(r.exit_code == 0);
    CHECK(data_lines(slurp(dir / "summary.csv")) == 2);
    CHECK(data_lines(slurp(dir / "comparisons.csv")) == 1);
}

TEST_CASE("oracle dumps the full enumeration") {
    const auto dir = scratch_dir("oracle");
    const auto r = run_cli("oracle --M 1 --n 2 --seed 3 --out " + dir.string());
    CHECK(r.exit_code == 0);
    CHECK(data_lines(slurp(dir / "enumeration.csv")) == 2);
    CHECK(slurp(dir / "true_landscape.txt").find("M=1 n=2") == 0);

    CHECK(run_cli("oracle --M 25 --n 10 --out " + dir.string()).exit_code == 1);
}

TEST_CASE("oracle dump is reproducible from the serialized representatives") {
    const auto dir = scratch_dir("oracle_rt");
    REQUIRE(run_cli("oracle --M 5 --n 8 --seed 9 --out " + dir.string()).exit_code == 0);

    // Re-read the anchor set and redo the inverse-squared-distance average.
    std::istringstream landscape(slurp(dir / "true_landscape.txt"));
    std::string header;
    std::getline(landscape, header);
    std::vector<std::pair<unsigned long long, double>> anchors;
    unsigned long long enc;
    double value;
    while (landscape >> enc >> value) anchors.emplace_back(enc, value);
    REQUIRE(anchors.size() == 8);

    std::istringstream enumeration(slurp(dir / "enumeration.csv"));
    std::string line;
    while (std::getline(enumeration, line) && (line.empty() || line[0] == '#')) {
    }
    REQUIRE(line == "encoding,true_utility,master_utility");
    int rows = 0;
    while (std::getline(enumeration, line)) {
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        const unsigned long long v = std::stoull(line.substr(0, c1));
        const double dumped = std::stod(line.substr(c1 + 1, c2 - c1 - 1));

        double recomputed = 0.0;
        bool exact = false;
        double num = 0.0, den = 0.0;
        for (const auto& [a_enc, a_val] : anchors) {
            unsigned long long diff = a_enc ^ v;
            int d = 0;
            for (; diff; diff >>= 1) d += static_cast<int>(diff & 1);
            if (d == 0) {
                recomputed = a_val;
                exact = true;
                break;
            }
            num += a_val / (static_cast<double>(d) * d);
            den += 1.0 / (static_cast<double>(d) * d);
        }
        if (!exact) recomputed = num / den;
        CHECK(dumped == doctest::Approx(recomputed).epsilon(1e-12));
        ++rows;
    }
    CHECK(rows == 32);
}

TEST_CASE("unwritable output locations exit with the runtime code") {
    const auto r = run_cli("run --seed 1" + kFast + "--out /dev/null/impossible");
    CHECK(r.exit_code == 2);
}

TEST_CASE("genealogy rebuilds stats from a log file") {
    const auto run_dir = scratch_dir("gen_run");
    REQUIRE(run_cli("run --seed 6" + kFast + "--out " + run_dir.string()).exit_code == 0);

    const auto out_dir = scratch_dir("gen_out");
    const auto r = run_cli("genealogy --log " + (run_dir / "events.log").string() +
                           " --out " + out_dir.string());
    CHECK(r.exit_code == 0);
    const std::string stats = slurp(out_dir / "stats.txt");
    CHECK(stats.find("nodes=") != std::string::npos);
    CHECK(stats.find("branching_ratio=") != std::string::npos);

    const auto rerun = run_cli("genealogy --log " + (run_dir / "events.log").string() +
                               " --out " + out_dir.string());
    CHECK(rerun.exit_code == 0);

    const auto bad = run_dir / "bad.log";
    std::ofstream(bad) << "garbage line\n";
    const auto fail = run_cli("genealogy --log " + bad.string() + " --out " + out_dir.string());
    CHECK(fail.exit_code == 1);
    CHECK(fail.output.find("line") != std::string::npos);
}
