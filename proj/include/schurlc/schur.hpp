#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <map>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schurlc/partition.hpp"

namespace schurlc {

// Sparse homogeneous integer combination of Schur functions. Every key has
// size == degree; no stored coefficient is zero.
class SchurVector {
public:
    SchurVector() = default;
    explicit SchurVector(int degree) : degree_(degree) {}

    static SchurVector single(const Partition& p, mpz_class coeff = 1);

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Partition, mpz_class>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    mpz_class coefficient(const Partition& p) const;
    void add_term(const Partition& p, const mpz_class& coeff);
    void add_scaled(const SchurVector& other, const mpz_class& scale);

    friend bool operator==(const SchurVector&, const SchurVector&) = default;

private:
    int degree_ = 0;
    std::map<Partition, mpz_class> terms_;
};

// Product cache key, normalized so the order of the factors does not matter.
struct LrKey {
    Partition left, right;

    LrKey(Partition a, Partition b) {
        if (a.parts() < b.parts()) std::swap(a, b);  // keep left >= right
        left = std::move(a);
        right = std::move(b);
    }
    friend std::strong_ordering operator<=>(const LrKey&, const LrKey&) = default;
};

class CacheFormatError : public std::runtime_error {
public:
    CacheFormatError(std::size_t line, const std::string& what)
        : std::runtime_error("cache line " + std::to_string(line) + ": " + what),
          line_number(line) {}
    std::size_t line_number;
};

// Memoized Littlewood-Richardson products (and skew expansions). Concurrent
// readers, serialized writers.
class LrCache {
public:
    std::optional<SchurVector> find(const LrKey& key) const;
    const SchurVector& store(const LrKey& key, SchurVector value);

    std::optional<SchurVector> find_skew(const SkewShape& shape) const;
    const SchurVector& store_skew(const SkewShape& shape, SchurVector value);

    std::size_t product_count() const;
    void clear();

    // Versioned line format, one product per line:
    //   v1 <left-parts>|<right-parts> TAB <nu-parts>:<coeff>;...
    // with the empty partition written as "-". Export order is
    // deterministic (key order); round-trips bit-exactly.
    void export_products(std::ostream& out) const;
    // Parses the whole stream before merging anything; a corrupt line
    // raises CacheFormatError with its line number and imports nothing.
    std::size_t import_products(std::istream& in);

private:
    mutable std::shared_mutex mutex_;
    std::map<LrKey, SchurVector> products_;
    std::map<SkewShape, SchurVector> skews_;
};

// Schur expansion of s_a * s_b with exact non-negative coefficients.
SchurVector lr_product(const Partition& a, const Partition& b, LrCache& cache);

// Schur expansion of the skew Schur function s_{outer/inner}.
SchurVector skew_expand(const SkewShape& shape, LrCache& cache);

// vec * s_p, term by term.
SchurVector multiply_by_schur(const SchurVector& vec, const Partition& p, LrCache& cache);

// Bilinear extension of lr_product; degrees add.
SchurVector vec_multiply(const SchurVector& a, const SchurVector& b, LrCache& cache);

// Coefficient-wise difference; requires equal degrees unless one side is zero.
SchurVector vec_subtract(const SchurVector& a, const SchurVector& b);

struct PositivityVerdict {
    bool positive;
    // Canonically smallest partition with a negative coefficient, if any.
    std::optional<std::pair<Partition, mpz_class>> witness;
};

// Zero vector counts as positive by convention.
PositivityVerdict is_schur_positive(const SchurVector& vec);

// Exponential specialization at t = 1: sum of coeff * f^lambda / degree!.
mpq_class ex1(const SchurVector& vec);

// (sum_a s_a)(sum_b s_b); degree is required so empty sums stay typed.
SchurVector sum_product(const std::vector<Partition>& a, const std::vector<Partition>& b,
                        int degree, LrCache& cache);

// (sum_a s_a^2)(sum_b s_b^2), expanded one Schur factor at a time so no
// intermediate pairs of large partitions are multiplied directly.
SchurVector square_sum_product(const std::vector<Partition>& a,
                               const std::vector<Partition>& b, int degree, LrCache& cache);

}  // namespace schurlc
