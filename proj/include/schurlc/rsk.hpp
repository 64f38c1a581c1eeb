#pragma once

#include <gmpxx.h>

#include <functional>
#include <vector>

#include "schurlc/partition.hpp"

namespace schurlc {

// One-line notation, values 1..n.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);

    const std::vector<int>& word() const { return word_; }
    int size() const { return static_cast<int>(word_.size()); }
    bool is_involution() const;

private:
    std::vector<int> word_;
};

enum class CountKind { permutations, involutions };
enum class ShapeClass { all, theta };

bool shape_in_class(const Partition& shape, ShapeClass cls);

struct CountTable {
    int n = 0;
    CountKind kind = CountKind::permutations;
    ShapeClass shape_class = ShapeClass::all;
    std::vector<mpz_class> counts;  // counts[k-1] for k = 1..n

    friend bool operator==(const CountTable&, const CountTable&) = default;
};

// Common shape of the insertion/recording tableaux under Schensted row
// insertion; its first part is the LIS length.
Partition rs_shape(const Permutation& pi);

// Patience-sorting pile count; independent of rs_shape.
int lis_length(const Permutation& pi);

inline constexpr int kDefaultBruteForceBound = 9;

// Exhaustive tabulation of counts by LIS length, filtered by RS shape class.
CountTable tabulate(int n, CountKind kind, ShapeClass cls,
                    int bound = kDefaultBruteForceBound);

// Same table via the hook-length formula summed over shapes with first
// part k; scales far beyond the brute-force bound.
CountTable tabulate_by_formula(int n, CountKind kind, ShapeClass cls);

// Number of involutions in S_n.
mpz_class involution_count(int n);

// Calls fn for every involution of S_n, in lexicographic matching order.
void for_each_involution(int n, const std::function<void(const Permutation&)>& fn);

}  // namespace schurlc
