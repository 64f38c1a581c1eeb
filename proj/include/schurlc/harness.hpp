#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "schurlc/partition.hpp"
#include "schurlc/rsk.hpp"
#include "schurlc/schur.hpp"

namespace schurlc {

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class StatementId {
    thm1_1a,
    thm1_1b,
    cor2_3a,
    cor2_3b,
    thm3_1a,
    thm3_1b,
    conj_f,
    conj_g,
    conj_g_theta,
    conj_i_theta_numeric,
    conj_l_theta_numeric,
    chen_l_numeric,
    bona_i_numeric,
    counterexample_f_theta,
};

std::string statement_name(StatementId id);

enum class VerdictStatus { holds, fails, vacuous };

struct Verdict {
    int k = 0;
    VerdictStatus status = VerdictStatus::holds;
    // Negative Schur coefficient, when a positivity check fails.
    std::optional<std::pair<Partition, mpz_class>> schur_witness;
    // (c_k^2, c_{k+1} c_{k-1}), when a numeric inequality fails.
    std::optional<std::pair<mpz_class, mpz_class>> numeric_witness;
};

struct ReportParams {
    std::optional<int> m;
    std::optional<int> n;
    std::optional<std::string> kind;
    std::optional<std::string> shape_class;
};

struct VerdictReport {
    StatementId statement = StatementId::thm1_1a;
    ReportParams params;
    std::vector<Verdict> verdicts;
    long long elapsed_ms = 0;

    // True when every verdict holds or is vacuous. A confirmed
    // counterexample reports `fails` entries and ok() == false; callers
    // that expect non-positivity invert the check.
    bool ok() const;
};

struct HarnessConfig {
    int workers = 1;
    int budget_g = 20;               // max n for the g / g-theta conjectures
    int budget_f = 7;                // max n for the f conjecture
    int max_product_degree = 40;     // cap for thm3_1 and counterexample expansions
};

enum class ClassSumKind { f, g, g_theta };

// Partitions of n with first part k, filtered to the kind's shape class.
std::vector<Partition> class_shapes(int n, int k, ClassSumKind kind);

// The named vector: sum of s_lambda (kinds g, g_theta) or s_lambda^2
// expanded (kind f). Empty classes give the zero vector.
SchurVector build_class_sum(int n, int k, ClassSumKind kind, LrCache& cache);

// Theorem 1.1 inequalities via the hook-length formula; the same checks
// serve Corollary 2.3. hook_family false = (k^m,(n-k)^m), true = (k^m,1^...).
VerdictReport verify_theorem_1_1(int m, int n, bool hook_family,
                                 bool as_corollary = false);

// Theorem 3.1 Schur positivity via full LR expansion.
VerdictReport verify_theorem_3_1(int m, int n, bool hook_family, LrCache& cache,
                                 const HarnessConfig& config = {});

// The three section-3 conjectures: S_k^2 - S_{k+1} S_{k-1} Schur positive
// for k = 1..n, boundary sums read as zero.
VerdictReport check_conjecture(ClassSumKind kind, int n, LrCache& cache,
                               const HarnessConfig& config = {});

// (f^Theta_{n,3})^2 - f^Theta_{n,2} f^Theta_{n,4}; for n = 10 this is not
// Schur positive and the report carries the witness.
VerdictReport counterexample_f_theta(int n, LrCache& cache,
                                     const HarnessConfig& config = {});

// Log-concavity of the count table built by the hook-formula route.
VerdictReport numeric_log_concavity(int n, CountKind kind, ShapeClass cls);

}  // namespace schurlc
