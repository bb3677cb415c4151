#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

const char* cli_path() {
    const char* path = std::getenv("HARDYLAB_CLI");
    REQUIRE_MESSAGE(path != nullptr, "HARDYLAB_CLI must point at the binary");
    return path;
}

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("hardylab_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path fixture(const std::string& name, const std::string& content) {
    fs::path p = work_dir() / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
}

// Runs the binary through the shell so stdout/stderr land in files and
// environment prefixes work.
RunResult run(const std::string& args, const std::string& env = "") {
    fs::path out_path = work_dir() / "stdout.txt";
    fs::path err_path = work_dir() / "stderr.txt";
    std::string cmd = env + (env.empty() ? "" : " ") + "\"" +
                      std::string(cli_path()) + "\" " + args + " > \"" +
                      out_path.string() + "\" 2> \"" + err_path.string() + "\"";
    int raw = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    return r;
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char ch : s)
        if (ch == '\n') ++n;
    return n;
}

const char* kTwoStep =
    "{\"pieces\":[{\"lo\":0.0,\"hi\":0.5,\"coeff\":2.0,\"exp\":0.0},"
    "{\"lo\":0.5,\"hi\":1.0,\"coeff\":1.0,\"exp\":0.0}]}";
const char* kIncreasing =
    "{\"pieces\":[{\"lo\":0.0,\"hi\":0.5,\"coeff\":1.0,\"exp\":0.0},"
    "{\"lo\":0.5,\"hi\":1.0,\"coeff\":2.0,\"exp\":0.0}]}";
const char* kDivergent =
    "{\"pieces\":[{\"lo\":0.0,\"hi\":1.0,\"coeff\":1.0,\"exp\":0.6}]}";
const char* kPower =
    "{\"pieces\":[{\"lo\":0.0,\"hi\":1.0,\"coeff\":1.0,\"exp\":0.25}]}";
const char* kThreeStep =
    "{\"pieces\":[{\"lo\":0.0,\"hi\":0.25,\"coeff\":1.0,\"exp\":0.0},"
    "{\"lo\":0.25,\"hi\":0.5,\"coeff\":3.0,\"exp\":0.0},"
    "{\"lo\":0.5,\"hi\":1.0,\"coeff\":2.0,\"exp\":0.0}]}";

}  // namespace

TEST_CASE("no arguments is a usage error") {
    RunResult r = run("");
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("analyze passes on a sorted step weight and repeats byte for byte") {
    fs::path w = fixture("two_step.json", kTwoStep);
    std::string args = "analyze --weight \"" + w.string() + "\" --q 2 --grid 128 --p-grid 8";
    RunResult a = run(args);
    CHECK(a.code == 0);
    CHECK(a.out.find("\"p0\"") != std::string::npos);
    CHECK(a.out.find("\"table\"") != std::string::npos);
    RunResult b = run(args);
    CHECK(b.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("fractions are accepted wherever reals are") {
    fs::path w = fixture("two_step.json", kTwoStep);
    RunResult r = run("analyze --weight \"" + w.string() +
                      "\" --q 9/8 --grid 128 --p-grid 4");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"q\":1.125") != std::string::npos);
}

TEST_CASE("analyze on a divergent weight reports and exits 1") {
    fs::path w = fixture("divergent.json", kDivergent);
    RunResult r = run("analyze --weight \"" + w.string() + "\" --q 2 --grid 128");
    CHECK(r.code == 1);
    CHECK(r.out.find("\"divergent\":true") != std::string::npos);
}

TEST_CASE("malformed weight files exit 2 with a diagnostic") {
    fs::path w = fixture("bad.json", "{");
    RunResult r = run("analyze --weight \"" + w.string() + "\" --q 2");
    CHECK(r.code == 2);
    CHECK(r.err.find("parse") != std::string::npos);
}

TEST_CASE("verify theorem2 prints the worked example margin") {
    fs::path s = fixture("seq.csv", "lambda,a\n1,1\n1,0\n");
    RunResult r = run("verify theorem2 --sequence \"" + s.string() + "\" --p 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"margin\":0.25") != std::string::npos);
}

TEST_CASE("verify theorem1 rejects q above p as a usage error") {
    fs::path w = fixture("power.json", kPower);
    RunResult r = run("verify theorem1 --weight \"" + w.string() +
                      "\" --p 2 --q 3");
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("verify theorem1 passes at the closed-form anchor") {
    fs::path w = fixture("power.json", kPower);
    RunResult r = run("verify theorem1 --weight \"" + w.string() +
                      "\" --p 2 --q 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"status\":\"pass\"") != std::string::npos);
}

TEST_CASE("verify lemma1 refuses weights that break its premise") {
    fs::path w = fixture("increasing.json", kIncreasing);
    RunResult r = run("verify lemma1 --weight \"" + w.string() +
                      "\" --p 2 --delta 0.5");
    CHECK(r.code == 2);
    CHECK(r.err.find("non-increasing") != std::string::npos);
}

TEST_CASE("verify corollary1 and interpolation run clean") {
    fs::path w = fixture("power.json", kPower);
    RunResult c = run("verify corollary1 --weight \"" + w.string() + "\" --p 2");
    CHECK(c.code == 0);
    RunResult i = run("verify interpolation --weight \"" + w.string() +
                      "\" --p 3 --q 2");
    CHECK(i.code == 0);
}

TEST_CASE("extremal scan prints one csv row per k") {
    RunResult r = run("extremal --p 3 --q 2");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("k,a,L,margin\n", 0) == 0);
    CHECK(count_lines(r.out) == 5);  // header + k = 1..4
    CHECK(r.err.empty());
}

TEST_CASE("extremal scan warns about skipped steps on stderr") {
    RunResult r = run("extremal --p 12 --q 1.5 --k-min 1 --k-max 3");
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 3);  // header + k = 2, 3
    CHECK(r.err.find("skip") != std::string::npos);
}

TEST_CASE("reports can be redirected to a file") {
    fs::path w = fixture("two_step.json", kTwoStep);
    fs::path out = work_dir() / "report.json";
    std::error_code ec;
    fs::remove(out, ec);
    RunResult r = run("analyze --weight \"" + w.string() +
                      "\" --q 2 --grid 128 --p-grid 4 --out \"" +
                      out.string() + "\"");
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(out).find("\"table\"") != std::string::npos);
}

TEST_CASE("rearrange needs a step weight") {
    fs::path steps = fixture("three_step.json", kThreeStep);
    RunResult ok = run("rearrange --weight \"" + steps.string() +
                       "\" --q 2 --grid 128");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("\"rearranged\"") != std::string::npos);
    fs::path power = fixture("power.json", kPower);
    RunResult bad = run("rearrange --weight \"" + power.string() +
                        "\" --q 2 --grid 128");
    CHECK(bad.code == 2);
    CHECK(bad.err.find("step") != std::string::npos);
}

TEST_CASE("selftest is reproducible for a pinned seed") {
    RunResult a = run("selftest --suites sharpness --seed 7");
    RunResult b = run("selftest --suites sharpness --seed 7");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"seed\":7") != std::string::npos);
    RunResult bad = run("selftest --suites bogus");
    CHECK(bad.code == 2);
}

TEST_CASE("seed resolution: flag beats environment beats default") {
    RunResult env_only =
        run("selftest --suites sharpness", "HARDY_LAB_SEED=99");
    CHECK(env_only.code == 0);
    CHECK(env_only.out.find("\"seed\":99") != std::string::npos);
    RunResult flag_wins =
        run("selftest --suites sharpness --seed 7", "HARDY_LAB_SEED=99");
    CHECK(flag_wins.out.find("\"seed\":7") != std::string::npos);
}
