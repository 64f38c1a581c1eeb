// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Heavier than the unit suites; expected to run in minutes.

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <regex>
#include <string>
#include <thread>
#include <vector>

#include "monomial_oracle.hpp"
#include "schurlc/harness.hpp"
#include "schurlc/report.hpp"
#include "schurlc/tableau.hpp"

namespace fs = std::filesystem;
using namespace schurlc;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

LrCache g_cache;  // shared across criteria so later ones start warm

HarnessConfig config() {
    HarnessConfig c;
    c.workers = std::max(1u, std::thread::hardware_concurrency());
    return c;
}

bool all_hold(const VerdictReport& r) {
    for (const auto& v : r.verdicts)
        if (v.status == VerdictStatus::fails) return false;
    return true;
}

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args, const std::string& cache_dir) {
    const char* bin = std::getenv("SCHURLC_BIN");
    if (!bin) return {-1, "SCHURLC_BIN not set"};
    std::string cmd = "SCHURLC_CACHE_DIR=" + cache_dir + " " + bin + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path fresh_dir(const std::string& tag) {
    auto ticks = std::chrono::steady_clock::now().time_since_epoch().count();
    fs::path p = fs::temp_directory_path() /
                 ("schurlc-acceptance-" + tag + "-" + std::to_string(ticks));
    fs::create_directories(p);
    return p;
}

std::vector<Partition> subpartitions(const Partition& outer) {
    std::vector<Partition> subs;
    for (int m = 0; m <= outer.size(); ++m)
        for (const Partition& inner : enumerate_partitions(m))
            if (outer.contains(inner)) subs.push_back(inner);
    return subs;
}

bool criterion_1() {
    for (int n = 0; n <= 10; ++n)
        for (const Partition& shape : enumerate_partitions(n)) {
            mpz_class hook = syt_count(shape);
            if (hook != syt_count_frobenius(shape)) return false;
            if (hook != enumerate_syt_count(shape)) return false;
        }
    return true;
}

bool criterion_2() {
    for (int n = 1; n <= 8; ++n)
        for (CountKind kind : {CountKind::permutations, CountKind::involutions})
            for (ShapeClass cls : {ShapeClass::all, ShapeClass::theta})
                if (tabulate(n, kind, cls) != tabulate_by_formula(n, kind, cls))
                    return false;
    return true;
}

bool criterion_3() {
    for (int m = 1; m <= 4; ++m)
        for (int n = 2; n <= 12; ++n)
            for (bool hook : {false, true})
                if (!all_hold(verify_theorem_1_1(m, n, hook))) return false;
    return true;
}

bool criterion_4() {
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; a + b <= 8; ++b)
            for (const Partition& x : enumerate_partitions(a))
                for (const Partition& y : enumerate_partitions(b)) {
                    SchurVector got = lr_product(x, y, g_cache);
                    auto expected = oracle::lr_product_oracle(x, y);
                    if (got.term_count() != expected.size()) return false;
                    for (const auto& [nu, c] : expected)
                        if (got.coefficient(nu) != c) return false;
                }
    return true;
}

bool criterion_5() {
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b)
            for (const Partition& x : enumerate_partitions(a))
                for (const Partition& y : enumerate_partitions(b)) {
                    SchurVector prod = lr_product(x, y, g_cache);
                    mpz_class lhs = 0;
                    for (const auto& [nu, c] : prod.terms()) lhs += c * syt_count(nu);
                    if (lhs != binomial(a + b, a) * syt_count(x) * syt_count(y))
                        return false;
                }
    return true;
}

bool criterion_6() {
    // Theorem 3.2: finite family given by bounding the outer shapes, which
    // covers every skew instance with |lambda/mu| + |nu/rho| <= 10.
    for (int a = 0; a <= 10; ++a)
        for (int c = 0; a + c <= 10; ++c)
            for (const Partition& lam : enumerate_partitions(a))
                for (const Partition& nu : enumerate_partitions(c)) {
                    auto mus = subpartitions(lam);
                    auto rhos = subpartitions(nu);
                    for (const Partition& mu : mus)
                        for (const Partition& rho : rhos) {
                            SkewShape left(lam, mu), right(nu, rho);
                            auto [lo, hi] = midpoint_shapes(left, right);
                            SchurVector mid = vec_multiply(skew_expand(lo, g_cache),
                                                           skew_expand(hi, g_cache), g_cache);
                            SchurVector plain = vec_multiply(skew_expand(left, g_cache),
                                                             skew_expand(right, g_cache),
                                                             g_cache);
                            if (!is_schur_positive(vec_subtract(mid, plain)).positive)
                                return false;
                        }
                }
    // Theorem 3.3: sort-split products dominate the plain products.
    for (int a = 0; a <= 12; ++a)
        for (int b = 0; a + b <= 12; ++b)
            for (const Partition& x : enumerate_partitions(a))
                for (const Partition& y : enumerate_partitions(b)) {
                    auto [s1, s2] = sort_split(x, y);
                    SchurVector diff = vec_subtract(lr_product(s1, s2, g_cache),
                                                    lr_product(x, y, g_cache));
                    if (!is_schur_positive(diff).positive) return false;
                }
    return true;
}

bool criterion_7() {
    for (int m = 1; m <= 2; ++m)
        for (int n = 2; n <= 6; ++n)
            for (bool hook : {false, true})
                if (!all_hold(verify_theorem_3_1(m, n, hook, g_cache, config())))
                    return false;
    return true;
}

bool criterion_8() {
    for (int n = 2; n <= 12; ++n)
        if (!check_conjecture(ClassSumKind::g, n, g_cache, config()).ok()) return false;
    for (int n = 2; n <= 6; ++n)
        if (!check_conjecture(ClassSumKind::f, n, g_cache, config()).ok()) return false;
    for (int n = 4; n <= 16; n += 2)
        if (!check_conjecture(ClassSumKind::g_theta, n, g_cache, config()).ok())
            return false;
    return true;
}

bool criterion_9() {
    fs::path dir = fresh_dir("ce");
    CliResult r = run_cli("--format json verify counterexample-f-theta --n 10",
                          dir.string());
    fs::remove_all(dir);
    if (r.exit_code != 0) return false;
    auto j = nlohmann::json::parse(r.out, nullptr, false);
    if (j.is_discarded() || j["verdicts"].size() != 1) return false;
    const auto& v = j["verdicts"][0];
    // golden witness, derived once by the full degree-40 expansion
    return v["k"] == 3 && v["status"] == "fails" &&
           v["witness"]["partition"] == nlohmann::json::array({12, 11, 3, 3, 3, 3, 3, 2}) &&
           v["witness"]["coefficient"] == "-8";
}

bool criterion_10() {
    for (int n = 1; n <= 30; ++n)
        for (CountKind kind : {CountKind::permutations, CountKind::involutions})
            if (!numeric_log_concavity(n, kind, ShapeClass::theta).ok()) return false;
    return true;
}

bool criterion_11() {
    const std::regex elapsed("\"elapsed_ms\": *[0-9]+");
    for (const std::string& args :
         {std::string("verify conj-g --n 10"), std::string("verify thm3_1 --m 2 --n 5")}) {
        fs::path d1 = fresh_dir("w1"), d8 = fresh_dir("w8");
        CliResult a = run_cli("--format json --workers 1 " + args, d1.string());
        CliResult b = run_cli("--format json --workers 8 " + args, d8.string());
        fs::remove_all(d1);
        fs::remove_all(d8);
        if (a.exit_code != 0 || b.exit_code != 0) return false;
        std::string na = std::regex_replace(a.out, elapsed, "\"elapsed_ms\": 0");
        std::string nb = std::regex_replace(b.out, elapsed, "\"elapsed_ms\": 0");
        if (na != nb) return false;
    }
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        const char* description;
        std::function<bool()> check;
    };
    const std::vector<Criterion> criteria = {
        {1, "hook, Frobenius and enumeration SYT counts agree, |shape| <= 10", criterion_1},
        {2, "brute-force tables equal hook-formula tables, n <= 8", criterion_2},
        {3, "theorem 1.1 inequalities, m <= 4, n <= 12, both families", criterion_3},
        {4, "LR products match the monomial oracle, total size <= 8", criterion_4},
        {5, "homomorphism identity, |lambda|, |mu| <= 6", criterion_5},
        {6, "theorem 3.2 (size <= 10) and theorem 3.3 (size <= 12) positivity", criterion_6},
        {7, "theorem 3.1 expansions positive, m <= 2, n <= 6", criterion_7},
        {8, "conj-g n <= 12, conj-f n <= 6, conj-g-theta even n <= 16", criterion_8},
        {9, "n = 10 theta counterexample with pinned witness", criterion_9},
        {10, "numeric theta log-concavity, n <= 30, both kinds", criterion_10},
        {11, "JSON reports identical for 1 and 8 workers", criterion_11},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = c.check();
        } catch (const std::exception& e) {
            note = std::string(" (") + e.what() + ")";
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": "
                  << c.description << note << " [" << ms << " ms]\n";
        if (!ok) ++failures;
    }
    return failures;
}
