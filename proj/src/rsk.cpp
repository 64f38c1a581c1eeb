#include "schurlc/rsk.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "schurlc/tableau.hpp"

namespace schurlc {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size(), false);
    for (int v : word_) {
        if (v < 1 || v > static_cast<int>(word_.size()) || seen[v - 1])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    return Permutation(std::move(word));
}

bool Permutation::is_involution() const {
    for (int i = 0; i < size(); ++i)
        if (word_[word_[i] - 1] != i + 1) return false;
    return true;
}

bool shape_in_class(const Partition& shape, ShapeClass cls) {
    return cls == ShapeClass::all || is_column_even(shape);
}

Partition rs_shape(const Permutation& pi) {
    std::vector<std::vector<int>> rows;
    for (int value : pi.word()) {
        int v = value;
        for (auto& row : rows) {
            auto it = std::upper_bound(row.begin(), row.end(), v);
            if (it == row.end()) {
                row.push_back(v);
                v = 0;
                break;
            }
            std::swap(*it, v);  // bump the leftmost entry strictly greater
        }
        if (v != 0) rows.push_back({v});
    }
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

int lis_length(const Permutation& pi) {
    std::vector<int> pile_tops;
    for (int v : pi.word()) {
        auto it = std::lower_bound(pile_tops.begin(), pile_tops.end(), v);
        if (it == pile_tops.end())
            pile_tops.push_back(v);
        else
            *it = v;
    }
    return static_cast<int>(pile_tops.size());
}

mpz_class involution_count(int n) {
    // I(n) = I(n-1) + (n-1) I(n-2)
    mpz_class a = 1, b = 1;  // I(0), I(1)
    if (n <= 1) return 1;
    for (int i = 2; i <= n; ++i) {
        mpz_class next = b + (i - 1) * a;
        a = std::move(b);
        b = std::move(next);
    }
    return b;
}

void for_each_involution(int n, const std::function<void(const Permutation&)>& fn) {
    std::vector<int> word(n, 0);
    std::function<void()> rec = [&]() {
        int i = 0;
        while (i < n && word[i] != 0) ++i;
        if (i == n) {
            fn(Permutation(word));
            return;
        }
        word[i] = i + 1;  // fixed point
        rec();
        for (int j = i + 1; j < n; ++j) {
            if (word[j] != 0) continue;
            word[i] = j + 1;
            word[j] = i + 1;
            rec();
            word[j] = 0;
        }
        word[i] = 0;
    };
    rec();
}

CountTable tabulate(int n, CountKind kind, ShapeClass cls, int bound) {
    if (n < 1) throw std::invalid_argument("tabulate: n must be >= 1");
    if (n > bound) throw std::invalid_argument("tabulate: n exceeds brute-force bound");
    CountTable table{n, kind, cls, std::vector<mpz_class>(n, 0)};
    auto tally = [&](const Permutation& pi) {
        Partition shape = rs_shape(pi);
        if (shape_in_class(shape, cls)) table.counts[shape.first_part() - 1] += 1;
    };
    if (kind == CountKind::involutions) {
        for_each_involution(n, tally);
    } else {
        std::vector<int> word(n);
        std::iota(word.begin(), word.end(), 1);
        do {
            tally(Permutation(word));
        } while (std::next_permutation(word.begin(), word.end()));
    }
    return table;
}

CountTable tabulate_by_formula(int n, CountKind kind, ShapeClass cls) {
    if (n < 1) throw std::invalid_argument("tabulate_by_formula: n must be >= 1");
    CountTable table{n, kind, cls, std::vector<mpz_class>(n, 0)};
    for (int k = 1; k <= n; ++k) {
        mpz_class total = 0;
        for (const Partition& shape : enumerate_partitions(n, k)) {
            if (!shape_in_class(shape, cls)) continue;
            mpz_class f = syt_count(shape);
            total += (kind == CountKind::permutations) ? f * f : f;
        }
        table.counts[k - 1] = std::move(total);
    }
    return table;
}

}  // namespace schurlc
