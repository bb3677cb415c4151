#include <cerrno>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hardylab.h"

namespace {

// Numeric flags accept plain decimals or simple fractions ("9/8") so
// exact rational constants survive the command line.
double parse_real(const std::string& text) {
    auto parse_part = [](const std::string& part) {
        std::size_t used = 0;
        double value = std::stod(part, &used);
        if (used != part.size())
            throw std::invalid_argument("trailing characters in number \"" +
                                        part + "\"");
        return value;
    };
    std::size_t slash = text.find('/');
    if (slash == std::string::npos) return parse_part(text);
    double num = parse_part(text.substr(0, slash));
    double den = parse_part(text.substr(slash + 1));
    if (den == 0.0) throw std::invalid_argument("zero denominator in \"" + text + "\"");
    return num / den;
}

std::uint64_t parse_seed(const std::string& text) {
    errno = 0;
    char* end = nullptr;
    unsigned long long value = std::strtoull(text.c_str(), &end, 10);
    if (errno != 0 || end == text.c_str() || *end != '\0')
        throw std::invalid_argument("bad seed \"" + text + "\"");
    return value;
}

std::uint64_t resolve_seed(const std::string& flag_value) {
    if (!flag_value.empty()) return parse_seed(flag_value);
    if (const char* env = std::getenv("HARDY_LAB_SEED")) return parse_seed(env);
    return 20240117ull;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Prints the report (or writes it to out_path) and folds the C-API
// status and the verdict into the exit-code contract: 0 pass, 1 checked
// and false, 2 anything that kept the check from running.
int finish(hl_status st, char* text, int pass, const std::string& out_path) {
    if (st != HL_OK) {
        std::fprintf(stderr, "error (%s): %s\n", hl_status_name(st),
                     hl_last_error());
        return 2;
    }
    std::string body(text ? text : "");
    hl_string_free(text);
    if (body.empty() || body.back() != '\n') body.push_back('\n');
    if (out_path.empty()) {
        std::fputs(body.c_str(), stdout);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out || !(out << body)) {
            std::fprintf(stderr, "error: cannot write %s\n", out_path.c_str());
            return 2;
        }
    }
    return pass ? 0 : 1;
}

struct WeightHandle {
    hl_weight* w = nullptr;
    ~WeightHandle() { hl_weight_free(w); }
};

struct SequenceHandle {
    hl_sequence* s = nullptr;
    ~SequenceHandle() { hl_sequence_free(s); }
};

int load_weight(const std::string& path, WeightHandle* out) {
    std::string text = read_file(path);
    hl_status st = hl_weight_from_json(text.c_str(), &out->w);
    if (st != HL_OK) {
        std::fprintf(stderr, "error (%s): %s\n", hl_status_name(st),
                     hl_last_error());
        return 2;
    }
    return 0;
}

int load_sequence(const std::string& path, SequenceHandle* out) {
    std::string text = read_file(path);
    hl_status st = hl_sequence_from_csv(text.c_str(), &out->s);
    if (st != HL_OK) {
        std::fprintf(stderr, "error (%s): %s\n", hl_status_name(st),
                     hl_last_error());
        return 2;
    }
    return 0;
}

// k values present in the scan CSV (first column, header skipped).
std::set<int> csv_k_column(const std::string& csv) {
    std::set<int> ks;
    std::istringstream in(csv);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (header) {
            header = false;
            continue;
        }
        if (line.empty()) continue;
        ks.insert(std::atoi(line.c_str()));
    }
    return ks;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical laboratory for Hardy-type averaging inequalities "
                 "and reverse Holder weight constants"};
    app.require_subcommand(1);

    std::string weight_path, sequence_path, out_path;
    std::string q_str, p_str, delta_str, tol_str = "1e-9", f_str = "1";
    std::string family = "prefix";
    std::string seed_str, suites;
    int grid = 256, p_grid = 16, k_min = 1, k_max = 4;

    CLI::App* analyze = app.add_subcommand(
        "analyze", "Reverse Holder constant, degeneration exponent and "
                   "verified promoted-constant table for a weight");
    analyze->add_option("--weight", weight_path, "weight JSON file")->required();
    analyze->add_option("--q", q_str, "exponent q > 1")->required();
    analyze->add_option("--family", family, "prefix, suffix or all");
    analyze->add_option("--grid", grid, "search grid size (>= 64)");
    analyze->add_option("--p-grid", p_grid, "rows in the p table");
    analyze->add_option("--out", out_path, "write the report here");

    CLI::App* verify = app.add_subcommand("verify", "Check one inequality");
    verify->require_subcommand(1);
    CLI::App* v_t1 = verify->add_subcommand(
        "theorem1", "Hardy-average power bound on a weight");
    v_t1->add_option("--weight", weight_path)->required();
    v_t1->add_option("--p", p_str)->required();
    v_t1->add_option("--q", q_str)->required();
    v_t1->add_option("--out", out_path);
    CLI::App* v_t2 = verify->add_subcommand(
        "theorem2", "weighted discrete Hardy bound on a sequence");
    v_t2->add_option("--sequence", sequence_path, "CSV with header lambda,a")
        ->required();
    v_t2->add_option("--p", p_str)->required();
    v_t2->add_option("--tol", tol_str, "pass tolerance (relative)");
    v_t2->add_option("--out", out_path);
    CLI::App* v_c1 = verify->add_subcommand(
        "corollary1", "q = 1 specialization of the power bound");
    v_c1->add_option("--weight", weight_path)->required();
    v_c1->add_option("--p", p_str)->required();
    v_c1->add_option("--out", out_path);
    CLI::App* v_l1 = verify->add_subcommand(
        "lemma1", "prefix identity for non-increasing weights");
    v_l1->add_option("--weight", weight_path)->required();
    v_l1->add_option("--p", p_str)->required();
    v_l1->add_option("--delta", delta_str)->required();
    v_l1->add_option("--out", out_path);
    CLI::App* v_ip = verify->add_subcommand(
        "interpolation", "Holder interpolation gap between mixed norms");
    v_ip->add_option("--weight", weight_path)->required();
    v_ip->add_option("--p", p_str)->required();
    v_ip->add_option("--q", q_str)->required();
    v_ip->add_option("--out", out_path);

    CLI::App* extremal = app.add_subcommand(
        "extremal", "Sharpness scan along the extremal weight family");
    extremal->add_option("--p", p_str)->required();
    extremal->add_option("--q", q_str)->required();
    extremal->add_option("--f", f_str, "total integral of the family");
    extremal->add_option("--k-min", k_min, "first k in a_k = 1/p - 10^-k");
    extremal->add_option("--k-max", k_max, "last k");
    extremal->add_option("--out", out_path);

    CLI::App* rearrange = app.add_subcommand(
        "rearrange", "Non-increasing rearrangement and constant comparison");
    rearrange->add_option("--weight", weight_path)->required();
    rearrange->add_option("--q", q_str)->required();
    rearrange->add_option("--grid", grid);
    rearrange->add_option("--out", out_path);

    CLI::App* selftest = app.add_subcommand(
        "selftest", "Run the seeded property suites");
    selftest->add_option("--seed", seed_str, "master seed (default: "
                         "HARDY_LAB_SEED env var, else 20240117)");
    selftest->add_option("--suites", suites,
                         "comma-separated subset of weight,discrete,"
                         "continuous,sharpness,rhi,rearrange");
    selftest->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) {
            WeightHandle w;
            if (int rc = load_weight(weight_path, &w)) return rc;
            char* text = nullptr;
            int pass = 0;
            hl_status st = hl_cmd_analyze(w.w, parse_real(q_str),
                                          family.c_str(), grid, p_grid, &text,
                                          &pass);
            return finish(st, text, pass, out_path);
        }
        if (verify->parsed()) {
            char* text = nullptr;
            int pass = 0;
            hl_status st = HL_OK;
            if (v_t2->parsed()) {
                SequenceHandle s;
                if (int rc = load_sequence(sequence_path, &s)) return rc;
                st = hl_cmd_verify_theorem2(s.s, parse_real(p_str),
                                            parse_real(tol_str), &text, &pass);
                return finish(st, text, pass, out_path);
            }
            WeightHandle w;
            if (int rc = load_weight(weight_path, &w)) return rc;
            if (v_t1->parsed())
                st = hl_cmd_verify_theorem1(w.w, parse_real(p_str),
                                            parse_real(q_str), &text, &pass);
            else if (v_c1->parsed())
                st = hl_cmd_verify_corollary1(w.w, parse_real(p_str), &text,
                                              &pass);
            else if (v_l1->parsed())
                st = hl_cmd_verify_lemma1(w.w, parse_real(p_str),
                                          parse_real(delta_str), &text, &pass);
            else
                st = hl_cmd_verify_interpolation(w.w, parse_real(p_str),
                                                 parse_real(q_str), &text,
                                                 &pass);
            return finish(st, text, pass, out_path);
        }
        if (extremal->parsed()) {
            char* text = nullptr;
            int pass = 0;
            hl_status st = hl_cmd_extremal_scan(parse_real(p_str),
                                                parse_real(q_str),
                                                parse_real(f_str), k_min,
                                                k_max, &text, &pass);
            if (st == HL_OK && text) {
                std::set<int> present = csv_k_column(text);
                for (int k = k_min; k <= k_max; ++k) {
                    if (!present.count(k))
                        std::fprintf(stderr,
                                     "warning: k=%d gives a <= 0; row skipped\n",
                                     k);
                }
            }
            return finish(st, text, pass, out_path);
        }
        if (rearrange->parsed()) {
            WeightHandle w;
            if (int rc = load_weight(weight_path, &w)) return rc;
            char* text = nullptr;
            int pass = 0;
            hl_status st = hl_cmd_rearrange(w.w, parse_real(q_str), grid,
                                            &text, &pass);
            return finish(st, text, pass, out_path);
        }
        if (selftest->parsed()) {
            char* text = nullptr;
            int pass = 0;
            hl_status st = hl_cmd_selftest(resolve_seed(seed_str),
                                           suites.c_str(), &text, &pass);
            return finish(st, text, pass, out_path);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    std::fprintf(stderr, "error: no subcommand\n");
    return 2;
}
