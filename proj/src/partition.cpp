#include "schurlc/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schurlc {

namespace {

void strip_trailing_zeros(std::vector<int>& parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    strip_trailing_zeros(parts_);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::rectangle_pair(int a, int count_a, int b, int count_b) {
    std::vector<int> parts;
    if (a > 0) parts.insert(parts.end(), count_a, a);
    if (b > 0) parts.insert(parts.end(), count_b, b);
    return Partition(std::move(parts));
}

bool Partition::contains(const Partition& inner) const {
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    return out.str();
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
        throw std::invalid_argument("skew shape requires inner contained in outer");
}

std::string SkewShape::to_string() const {
    return outer_.to_string() + "/" + inner_.to_string();
}

Partition conjugate(const Partition& p) {
    std::vector<int> cols;
    cols.reserve(p.first_part());
    for (int j = 1; j <= p.first_part(); ++j) {
        int count = 0;
        for (int part : p.parts())
            if (part >= j) ++count;
        cols.push_back(count);
    }
    return Partition(std::move(cols));
}

bool is_column_even(const Partition& p) {
    Partition conj = conjugate(p);
    for (int col : conj.parts())
        if (col % 2 != 0) return false;
    return true;
}

std::vector<Partition> enumerate_partitions(int n, std::optional<int> first_part) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    if (first_part && (*first_part < 1 || *first_part > n))
        throw std::invalid_argument("enumerate_partitions: first_part out of range");

    std::vector<Partition> out;
    std::vector<int> current;
    // Largest-first recursion yields descending lexicographic order.
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    if (first_part) {
        current.push_back(*first_part);
        rec(n - *first_part, *first_part);
    } else {
        rec(n, n);
    }
    return out;
}

std::pair<Partition, Partition> sort_split(const Partition& a, const Partition& b) {
    std::vector<int> merged;
    merged.reserve(a.parts().size() + b.parts().size());
    merged.insert(merged.end(), a.parts().begin(), a.parts().end());
    merged.insert(merged.end(), b.parts().begin(), b.parts().end());
    std::sort(merged.begin(), merged.end(), std::greater<int>());

    std::vector<int> odd, even;
    for (std::size_t i = 0; i < merged.size(); ++i)
        (i % 2 == 0 ? odd : even).push_back(merged[i]);
    return {Partition(std::move(odd)), Partition(std::move(even))};
}

std::pair<SkewShape, SkewShape> midpoint_shapes(const SkewShape& a, const SkewShape& b) {
    auto average = [](const Partition& x, const Partition& y, bool ceil_mode) {
        int len = std::max(x.length(), y.length());
        std::vector<int> parts;
        parts.reserve(len);
        for (int i = 1; i <= len; ++i) {
            int s = x.part(i) + y.part(i);
            parts.push_back(ceil_mode ? (s + 1) / 2 : s / 2);
        }
        strip_trailing_zeros(parts);
        return Partition(std::move(parts));
    };
    SkewShape lo(average(a.outer(), b.outer(), false), average(a.inner(), b.inner(), false));
    SkewShape hi(average(a.outer(), b.outer(), true), average(a.inner(), b.inner(), true));
    return {lo, hi};
}

Partition parse_partition(const std::string& text) {
    if (text.empty() || text == "-") return Partition();
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string token = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                        : comma - pos);
        auto fail = [&]() -> void {
            throw std::invalid_argument("bad partition token '" + token + "' in '" + text + "'");
        };
        std::size_t caret = token.find('^');
        std::string base_str = token.substr(0, caret);
        std::string exp_str = caret == std::string::npos ? "1" : token.substr(caret + 1);
        auto to_int = [&](const std::string& s) {
            if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) fail();
            if (s.size() > 6) fail();
            return std::stoi(s);
        };
        int base = to_int(base_str);
        int exp = to_int(exp_str);
        if (base < 1 || exp < 1) fail();
        parts.insert(parts.end(), exp, base);
        if (comma == std::string::npos) break;
        pos = comma + 1;
        if (pos == text.size())
            throw std::invalid_argument("trailing comma in partition '" + text + "'");
    }
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1])
            throw std::invalid_argument("partition parts not weakly decreasing in '" + text + "'");
    return Partition(std::move(parts));
}

}  // namespace schurlc
