#include "schurlc/harness.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <thread>

#include "schurlc/tableau.hpp"

namespace schurlc {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
        .count();
}

// Runs fn(0..count-1) across up to `workers` threads. Exceptions propagate;
// callers index results by k so scheduling never affects output.
void parallel_for(int count, int workers, const std::function<void(int)>& fn) {
    if (count <= 0) return;
    int threads = std::min(workers, count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&]() {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

Partition family_shape(int m, int n, int k, bool hook_family) {
    return hook_family ? Partition::rectangle_pair(k, m, 1, m * (n - k))
                       : Partition::rectangle_pair(k, m, n - k, m);
}

Verdict positivity_verdict(int k, const SchurVector& difference) {
    Verdict v{k, VerdictStatus::holds, std::nullopt, std::nullopt};
    PositivityVerdict p = is_schur_positive(difference);
    if (!p.positive) {
        v.status = VerdictStatus::fails;
        v.schur_witness = p.witness;
    }
    return v;
}

}  // namespace

std::string statement_name(StatementId id) {
    switch (id) {
        case StatementId::thm1_1a: return "thm1_1a";
        case StatementId::thm1_1b: return "thm1_1b";
        case StatementId::cor2_3a: return "cor2_3a";
        case StatementId::cor2_3b: return "cor2_3b";
        case StatementId::thm3_1a: return "thm3_1a";
        case StatementId::thm3_1b: return "thm3_1b";
        case StatementId::conj_f: return "conj_f";
        case StatementId::conj_g: return "conj_g";
        case StatementId::conj_g_theta: return "conj_g_theta";
        case StatementId::conj_i_theta_numeric: return "conj_i_theta_numeric";
        case StatementId::conj_l_theta_numeric: return "conj_l_theta_numeric";
        case StatementId::chen_l_numeric: return "chen_l_numeric";
        case StatementId::bona_i_numeric: return "bona_i_numeric";
        case StatementId::counterexample_f_theta: return "counterexample_f_theta";
    }
    return "unknown";
}

bool VerdictReport::ok() const {
    for (const auto& v : verdicts)
        if (v.status == VerdictStatus::fails) return false;
    return true;
}

std::vector<Partition> class_shapes(int n, int k, ClassSumKind kind) {
    if (n < 0 || k < 1 || k > n) return {};
    std::vector<Partition> shapes = enumerate_partitions(n, k);
    if (kind == ClassSumKind::g_theta) {
        std::erase_if(shapes, [](const Partition& p) { return !is_column_even(p); });
    }
    return shapes;
}

SchurVector build_class_sum(int n, int k, ClassSumKind kind, LrCache& cache) {
    int degree = (kind == ClassSumKind::f) ? 2 * n : n;
    SchurVector sum(degree);
    for (const Partition& shape : class_shapes(n, k, kind)) {
        if (kind == ClassSumKind::f)
            sum.add_scaled(lr_product(shape, shape, cache), 1);
        else
            sum.add_term(shape, 1);
    }
    return sum;
}

VerdictReport verify_theorem_1_1(int m, int n, bool hook_family, bool as_corollary) {
    auto start = Clock::now();
    VerdictReport report;
    report.statement = as_corollary
                           ? (hook_family ? StatementId::cor2_3b : StatementId::cor2_3a)
                           : (hook_family ? StatementId::thm1_1b : StatementId::thm1_1a);
    report.params.m = m;
    report.params.n = n;
    int k_lo = hook_family ? 2 : (n + 1) / 2 + 1;
    for (int k = k_lo; k <= n - 1; ++k) {
        mpz_class mid = syt_count(family_shape(m, n, k, hook_family));
        mpz_class hi = syt_count(family_shape(m, n, k + 1, hook_family));
        mpz_class lo = syt_count(family_shape(m, n, k - 1, hook_family));
        Verdict v{k, VerdictStatus::holds, std::nullopt, std::nullopt};
        mpz_class square = mid * mid, product = hi * lo;
        if (square < product) {
            v.status = VerdictStatus::fails;
            v.numeric_witness = std::make_pair(square, product);
        }
        report.verdicts.push_back(std::move(v));
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

VerdictReport verify_theorem_3_1(int m, int n, bool hook_family, LrCache& cache,
                                 const HarnessConfig& config) {
    if (2 * m * n > config.max_product_degree)
        throw BudgetExceeded("verify_theorem_3_1: product degree " +
                             std::to_string(2 * m * n) + " exceeds budget");
    auto start = Clock::now();
    VerdictReport report;
    report.statement = hook_family ? StatementId::thm3_1b : StatementId::thm3_1a;
    report.params.m = m;
    report.params.n = n;
    int k_lo = hook_family ? 2 : (n + 1) / 2 + 1;
    int count = std::max(0, (n - 1) - k_lo + 1);
    report.verdicts.resize(count);
    parallel_for(count, config.workers, [&](int idx) {
        int k = k_lo + idx;
        Partition mid = family_shape(m, n, k, hook_family);
        Partition hi = family_shape(m, n, k + 1, hook_family);
        Partition lo = family_shape(m, n, k - 1, hook_family);
        SchurVector difference =
            vec_subtract(lr_product(mid, mid, cache), lr_product(hi, lo, cache));
        report.verdicts[idx] = positivity_verdict(k, difference);
    });
    report.elapsed_ms = ms_since(start);
    return report;
}

VerdictReport check_conjecture(ClassSumKind kind, int n, LrCache& cache,
                               const HarnessConfig& config) {
    int budget = (kind == ClassSumKind::f) ? config.budget_f : config.budget_g;
    if (n > budget)
        throw BudgetExceeded("check_conjecture: n = " + std::to_string(n) +
                             " exceeds budget " + std::to_string(budget));
    auto start = Clock::now();
    VerdictReport report;
    report.statement = kind == ClassSumKind::f   ? StatementId::conj_f
                       : kind == ClassSumKind::g ? StatementId::conj_g
                                                 : StatementId::conj_g_theta;
    report.params.n = n;
    int degree = (kind == ClassSumKind::f) ? 4 * n : 2 * n;
    report.verdicts.resize(n);
    parallel_for(n, config.workers, [&](int idx) {
        int k = idx + 1;
        std::vector<Partition> at_k = class_shapes(n, k, kind);
        std::vector<Partition> above = class_shapes(n, k + 1, kind);
        std::vector<Partition> below = class_shapes(n, k - 1, kind);
        if (at_k.empty() && (above.empty() || below.empty())) {
            report.verdicts[idx] = Verdict{k, VerdictStatus::vacuous, {}, {}};
            return;
        }
        SchurVector square, cross;
        if (kind == ClassSumKind::f) {
            square = square_sum_product(at_k, at_k, degree, cache);
            cross = square_sum_product(above, below, degree, cache);
        } else {
            square = sum_product(at_k, at_k, degree, cache);
            cross = sum_product(above, below, degree, cache);
        }
        report.verdicts[idx] = positivity_verdict(k, vec_subtract(square, cross));
    });
    report.elapsed_ms = ms_since(start);
    return report;
}

VerdictReport counterexample_f_theta(int n, LrCache& cache, const HarnessConfig& config) {
    if (4 * n > config.max_product_degree)
        throw BudgetExceeded("counterexample_f_theta: degree " + std::to_string(4 * n) +
                             " exceeds budget");
    auto start = Clock::now();
    VerdictReport report;
    report.statement = StatementId::counterexample_f_theta;
    report.params.n = n;
    std::vector<Partition> at_2 = class_shapes(n, 2, ClassSumKind::g_theta);
    std::vector<Partition> at_3 = class_shapes(n, 3, ClassSumKind::g_theta);
    std::vector<Partition> at_4 = class_shapes(n, 4, ClassSumKind::g_theta);
    SchurVector square = square_sum_product(at_3, at_3, 4 * n, cache);
    SchurVector cross = square_sum_product(at_2, at_4, 4 * n, cache);
    report.verdicts.push_back(positivity_verdict(3, vec_subtract(square, cross)));
    report.elapsed_ms = ms_since(start);
    return report;
}

VerdictReport numeric_log_concavity(int n, CountKind kind, ShapeClass cls) {
    auto start = Clock::now();
    VerdictReport report;
    if (cls == ShapeClass::theta)
        report.statement = (kind == CountKind::involutions)
                               ? StatementId::conj_i_theta_numeric
                               : StatementId::conj_l_theta_numeric;
    else
        report.statement = (kind == CountKind::involutions) ? StatementId::bona_i_numeric
                                                            : StatementId::chen_l_numeric;
    report.params.n = n;
    report.params.kind = (kind == CountKind::involutions) ? "involutions" : "permutations";
    report.params.shape_class = (cls == ShapeClass::theta) ? "theta" : "all";
    CountTable table = tabulate_by_formula(n, kind, cls);
    for (int k = 2; k <= n - 1; ++k) {
        const mpz_class& c = table.counts[k - 1];
        mpz_class square = c * c;
        mpz_class product = table.counts[k] * table.counts[k - 2];
        Verdict v{k, VerdictStatus::holds, std::nullopt, std::nullopt};
        if (square < product) {
            v.status = VerdictStatus::fails;
            v.numeric_witness = std::make_pair(square, product);
        }
        report.verdicts.push_back(std::move(v));
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

}  // namespace schurlc
