#include "schurlc/tableau.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace schurlc {

namespace {

mpz_class exact_quotient(const mpz_class& num, const mpz_class& den, const char* what) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error(std::string("non-exact division in ") + what);
    return q;
}

}  // namespace

HookGrid::HookGrid(const Partition& shape) : shape_(shape) {
    Partition conj = conjugate(shape);
    rows_.resize(shape.length());
    for (int i = 1; i <= shape.length(); ++i) {
        rows_[i - 1].resize(shape.part(i));
        for (int j = 1; j <= shape.part(i); ++j)
            rows_[i - 1][j - 1] = (shape.part(i) - j) + (conj.part(j) - i) + 1;
    }
}

mpz_class HookGrid::product() const {
    mpz_class prod = 1;
    for (const auto& row : rows_)
        for (int h : row) prod *= h;
    return prod;
}

std::vector<int> HookGrid::first_column() const {
    std::vector<int> col;
    col.reserve(rows_.size());
    for (const auto& row : rows_) col.push_back(row[0]);
    return col;
}

HookGrid hook_grid(const Partition& shape) { return HookGrid(shape); }

mpz_class factorial(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

mpz_class binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return b;
}

mpz_class syt_count(const Partition& shape) {
    static std::map<Partition, mpz_class> memo;
    static std::shared_mutex memo_mutex;
    {
        std::shared_lock lock(memo_mutex);
        if (auto it = memo.find(shape); it != memo.end()) return it->second;
    }
    mpz_class count =
        exact_quotient(factorial(shape.size()), HookGrid(shape).product(), "syt_count");
    std::unique_lock lock(memo_mutex);
    return memo.emplace(shape, std::move(count)).first->second;
}

mpz_class syt_count_frobenius(const Partition& shape) {
    if (shape.empty()) return 1;
    std::vector<int> hooks = HookGrid(shape).first_column();
    mpz_class num = factorial(shape.size());
    for (std::size_t a = 0; a < hooks.size(); ++a)
        for (std::size_t b = a + 1; b < hooks.size(); ++b) num *= hooks[a] - hooks[b];
    // Divide factorials one at a time so intermediates stay near the result.
    for (int h : hooks) num = exact_quotient(num, factorial(h), "syt_count_frobenius");
    return num;
}

mpz_class enumerate_syt_count(const Partition& shape, int bound) {
    if (shape.size() > bound)
        throw std::invalid_argument("enumerate_syt_count: shape exceeds oracle bound");
    mpz_class count = 0;
    std::vector<int> filled(shape.length(), 0);
    std::function<void(int)> place = [&](int placed) {
        if (placed == shape.size()) {
            ++count;
            return;
        }
        for (int i = 0; i < shape.length(); ++i) {
            bool row_ok = filled[i] < shape.part(i + 1);
            bool col_ok = i == 0 || filled[i - 1] > filled[i];
            if (row_ok && col_ok) {
                ++filled[i];
                place(placed + 1);
                --filled[i];
            }
        }
    };
    place(0);
    return count;
}

mpz_class principal_specialization(const Partition& shape, int num_vars) {
    if (num_vars < 1) throw std::invalid_argument("principal_specialization: need N >= 1");
    if (shape.length() > num_vars) return 0;
    mpz_class num = 1;
    for (int i = 1; i <= shape.length(); ++i)
        for (int j = 1; j <= shape.part(i); ++j) num *= num_vars + j - i;
    return exact_quotient(num, HookGrid(shape).product(), "principal_specialization");
}

}  // namespace schurlc
