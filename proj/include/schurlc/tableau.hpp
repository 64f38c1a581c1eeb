#pragma once

#include <gmpxx.h>

#include <vector>

#include "schurlc/partition.hpp"

namespace schurlc {

// Hook lengths of a Young diagram, row-major, 1-indexed via at(i, j).
class HookGrid {
public:
    explicit HookGrid(const Partition& shape);

    const Partition& shape() const { return shape_; }
    int at(int i, int j) const { return rows_[i - 1][j - 1]; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    // Product of all hook lengths in the diagram.
    mpz_class product() const;
    // Hook lengths of the first column, top to bottom.
    std::vector<int> first_column() const;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

HookGrid hook_grid(const Partition& shape);

mpz_class factorial(int n);
mpz_class binomial(int n, int k);

// Number of standard Young tableaux of the shape, by the hook-length
// formula n! / prod(hooks). Memoized; thread-safe.
mpz_class syt_count(const Partition& shape);

// Same count from first-column hooks only:
// n! / prod(h_i!) * prod_{i<j} (h_i - h_j).
mpz_class syt_count_frobenius(const Partition& shape);

inline constexpr int kDefaultEnumerationBound = 12;

// Independent oracle: counts standard fillings by backtracking. Rejects
// shapes above the bound (combinatorial explosion guard).
mpz_class enumerate_syt_count(const Partition& shape,
                              int bound = kDefaultEnumerationBound);

// s_shape(1,...,1) with num_vars ones: the number of semistandard tableaux
// of the shape with entries <= num_vars.
mpz_class principal_specialization(const Partition& shape, int num_vars);

}  // namespace schurlc
