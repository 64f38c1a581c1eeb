#include "schurlc/schur.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>

#include "schurlc/tableau.hpp"

namespace schurlc {

SchurVector SchurVector::single(const Partition& p, mpz_class coeff) {
    SchurVector v(p.size());
    v.add_term(p, coeff);
    return v;
}

mpz_class SchurVector::coefficient(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void SchurVector::add_term(const Partition& p, const mpz_class& coeff) {
    if (coeff == 0) return;
    if (p.size() != degree_)
        throw std::invalid_argument("SchurVector term degree mismatch");
    auto [it, inserted] = terms_.emplace(p, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void SchurVector::add_scaled(const SchurVector& other, const mpz_class& scale) {
    if (scale == 0 || other.is_zero()) return;
    if (other.degree_ != degree_)
        throw std::invalid_argument("SchurVector degree mismatch in add_scaled");
    for (const auto& [p, c] : other.terms_) add_term(p, c * scale);
}

std::optional<SchurVector> LrCache::find(const LrKey& key) const {
    std::shared_lock lock(mutex_);
    auto it = products_.find(key);
    if (it == products_.end()) return std::nullopt;
    return it->second;
}

const SchurVector& LrCache::store(const LrKey& key, SchurVector value) {
    std::unique_lock lock(mutex_);
    return products_.emplace(key, std::move(value)).first->second;
}

std::optional<SchurVector> LrCache::find_skew(const SkewShape& shape) const {
    std::shared_lock lock(mutex_);
    auto it = skews_.find(shape);
    if (it == skews_.end()) return std::nullopt;
    return it->second;
}

const SchurVector& LrCache::store_skew(const SkewShape& shape, SchurVector value) {
    std::unique_lock lock(mutex_);
    return skews_.emplace(shape, std::move(value)).first->second;
}

std::size_t LrCache::product_count() const {
    std::shared_lock lock(mutex_);
    return products_.size();
}

void LrCache::clear() {
    std::unique_lock lock(mutex_);
    products_.clear();
    skews_.clear();
}

void LrCache::export_products(std::ostream& out) const {
    std::shared_lock lock(mutex_);
    for (const auto& [key, vec] : products_) {
        out << "v1 " << key.left.to_string() << '|' << key.right.to_string() << '\t';
        bool first = true;
        for (const auto& [nu, coeff] : vec.terms()) {
            if (!first) out << ';';
            first = false;
            out << nu.to_string() << ':' << coeff.get_str();
        }
        out << '\n';
    }
}

std::size_t LrCache::import_products(std::istream& in) {
    std::map<LrKey, SchurVector> staged;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        if (line.rfind("v1 ", 0) != 0) throw CacheFormatError(line_number, "missing v1 tag");
        std::size_t tab = line.find('\t');
        if (tab == std::string::npos) throw CacheFormatError(line_number, "missing TAB");
        std::string key_part = line.substr(3, tab - 3);
        std::size_t bar = key_part.find('|');
        if (bar == std::string::npos) throw CacheFormatError(line_number, "missing '|' in key");
        try {
            Partition left = parse_partition(key_part.substr(0, bar));
            Partition right = parse_partition(key_part.substr(bar + 1));
            SchurVector vec(left.size() + right.size());
            std::string body = line.substr(tab + 1);
            std::size_t pos = 0;
            while (pos < body.size()) {
                std::size_t semi = body.find(';', pos);
                std::string entry = body.substr(
                    pos, semi == std::string::npos ? std::string::npos : semi - pos);
                std::size_t colon = entry.rfind(':');
                if (colon == std::string::npos)
                    throw CacheFormatError(line_number, "term missing ':'");
                Partition nu = parse_partition(entry.substr(0, colon));
                std::string coeff_str = entry.substr(colon + 1);
                if (coeff_str.empty() ||
                    coeff_str.find_first_not_of("0123456789") != std::string::npos)
                    throw CacheFormatError(line_number,
                                           "non-numeric coefficient '" + coeff_str + "'");
                vec.add_term(nu, mpz_class(coeff_str));
                if (semi == std::string::npos) break;
                pos = semi + 1;
            }
            staged.emplace(LrKey(std::move(left), std::move(right)), std::move(vec));
        } catch (const CacheFormatError&) {
            throw;
        } catch (const std::exception& e) {
            throw CacheFormatError(line_number, e.what());
        }
    }
    std::unique_lock lock(mutex_);
    for (auto& [key, vec] : staged) products_.emplace(key, std::move(vec));
    return staged.size();
}

namespace {

// Enumerates Littlewood-Richardson tableaux on top of `base` with content
// `content`: letters added in increasing order, each as a horizontal strip,
// with the lattice condition tracked through cumulative row counts.
class LrEnumerator {
public:
    LrEnumerator(const Partition& base, const Partition& content, SchurVector& out)
        : content_(content.parts()), out_(out) {
        max_rows_ = base.length() + std::max(content.length(), 1);
        shape_.assign(max_rows_, 0);
        for (int i = 0; i < base.length(); ++i) shape_[i] = base.parts()[i];
        prev_cnt_.assign(max_rows_, 0);
        cur_cnt_.assign(max_rows_, 0);
    }

    void run() {
        if (content_.empty()) {
            record();
            return;
        }
        place(0, 1, content_[0], kUnbounded, 0, 0);
    }

private:
    static constexpr int kUnbounded = 1 << 28;

    void record() {
        std::vector<int> parts(shape_.begin(), shape_.end());
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        out_.add_term(Partition(std::move(parts)), 1);
    }

    void next_letter(int r) {
        if (r + 1 == static_cast<int>(content_.size())) {
            record();
            return;
        }
        std::vector<int> saved_prev = prev_cnt_;
        prev_cnt_ = cur_cnt_;
        std::fill(cur_cnt_.begin(), cur_cnt_.end(), 0);
        place(r + 1, 1, content_[r + 1], kUnbounded, 0, 0);
        cur_cnt_ = prev_cnt_;
        prev_cnt_ = std::move(saved_prev);
    }

    // Letter r at row i: old_prev is row i-1's length before this letter,
    // prev_cum / cur_cum are counts of letters r-1 and r in rows < i.
    void place(int r, int i, int rem, int old_prev, int prev_cum, int cur_cum) {
        if (rem == 0) {
            next_letter(r);
            return;
        }
        if (i > max_rows_) return;
        int old_len = shape_[i - 1];
        int cap = old_prev - old_len;                          // horizontal strip
        if (r > 0) cap = std::min(cap, prev_cum - cur_cum);    // lattice condition
        cap = std::min(cap, rem);
        for (int a = 0; a <= cap; ++a) {
            shape_[i - 1] = old_len + a;
            cur_cnt_[i - 1] = a;
            place(r, i + 1, rem - a, old_len, prev_cum + prev_cnt_[i - 1], cur_cum + a);
        }
        shape_[i - 1] = old_len;
        cur_cnt_[i - 1] = 0;
    }

    std::vector<int> content_;
    std::vector<int> shape_;
    std::vector<int> prev_cnt_, cur_cnt_;
    int max_rows_ = 0;
    SchurVector& out_;
};

// Counts LR fillings of a skew diagram grouped by content: cells visited in
// reverse reading order (rows top to bottom, each row right to left) so the
// lattice condition can be checked per placement.
class SkewEnumerator {
public:
    SkewEnumerator(const SkewShape& shape, SchurVector& out) : skew_(shape), out_(out) {
        rows_ = skew_.outer().length();
        values_.resize(rows_);
        for (int i = 1; i <= rows_; ++i) values_[i - 1].assign(skew_.outer().part(i), 0);
        counts_.assign(skew_.size() + 1, 0);
    }

    void run() { fill(1, skew_.outer().part(1)); }

private:
    void record() {
        std::vector<int> content;
        for (int c : counts_)
            if (c > 0) content.push_back(c);
        // lattice words have weakly decreasing letter counts
        out_.add_term(Partition(std::move(content)), 1);
    }

    void fill(int i, int j) {
        if (i > rows_) {
            record();
            return;
        }
        if (j <= skew_.inner().part(i)) {
            fill(i + 1, skew_.outer().part(i + 1));
            return;
        }
        int right = (j < skew_.outer().part(i)) ? values_[i - 1][j] : skew_.size();
        int above = (i > 1 && j > skew_.inner().part(i - 1) && j <= skew_.outer().part(i - 1))
                        ? values_[i - 2][j - 1]
                        : 0;
        int hi = std::min({right, i});
        for (int v = above + 1; v <= hi; ++v) {
            if (v > 1 && counts_[v] + 1 > counts_[v - 1]) continue;
            values_[i - 1][j - 1] = v;
            ++counts_[v];
            fill(i, j - 1);
            --counts_[v];
        }
        values_[i - 1][j - 1] = 0;
    }

    SkewShape skew_;
    int rows_ = 0;
    std::vector<std::vector<int>> values_;
    std::vector<int> counts_;  // counts_[v] = letters v placed so far
    SchurVector& out_;
};

}  // namespace

SchurVector lr_product(const Partition& a, const Partition& b, LrCache& cache) {
    LrKey key(a, b);
    if (auto hit = cache.find(key)) return *hit;
    // Enumerate with the smaller partition as content.
    const Partition& base = (a.size() >= b.size()) ? a : b;
    const Partition& content = (a.size() >= b.size()) ? b : a;
    SchurVector result(a.size() + b.size());
    LrEnumerator(base, content, result).run();
    return cache.store(key, std::move(result));
}

SchurVector skew_expand(const SkewShape& shape, LrCache& cache) {
    if (auto hit = cache.find_skew(shape)) return *hit;
    SchurVector result(shape.size());
    if (shape.inner().empty()) {
        result.add_term(shape.outer(), 1);
    } else {
        SkewEnumerator(shape, result).run();
    }
    return cache.store_skew(shape, std::move(result));
}

SchurVector multiply_by_schur(const SchurVector& vec, const Partition& p, LrCache& cache) {
    SchurVector result(vec.degree() + p.size());
    for (const auto& [lambda, coeff] : vec.terms())
        result.add_scaled(lr_product(lambda, p, cache), coeff);
    return result;
}

SchurVector vec_multiply(const SchurVector& a, const SchurVector& b, LrCache& cache) {
    const SchurVector& outer = (a.term_count() <= b.term_count()) ? a : b;
    const SchurVector& inner = (a.term_count() <= b.term_count()) ? b : a;
    SchurVector result(a.degree() + b.degree());
    for (const auto& [p, coeff] : outer.terms())
        result.add_scaled(multiply_by_schur(inner, p, cache), coeff);
    return result;
}

SchurVector vec_subtract(const SchurVector& a, const SchurVector& b) {
    if (!a.is_zero() && !b.is_zero() && a.degree() != b.degree())
        throw std::invalid_argument("vec_subtract: degree mismatch");
    SchurVector result(a.is_zero() ? b.degree() : a.degree());
    result.add_scaled(a, 1);
    result.add_scaled(b, -1);
    return result;
}

PositivityVerdict is_schur_positive(const SchurVector& vec) {
    // Map order is ascending lexicographic, so the first negative hit is the
    // canonically smallest witness.
    for (const auto& [p, coeff] : vec.terms())
        if (coeff < 0) return {false, std::make_pair(p, coeff)};
    return {true, std::nullopt};
}

mpq_class ex1(const SchurVector& vec) {
    if (vec.is_zero()) return 0;
    mpz_class total = 0;
    for (const auto& [p, coeff] : vec.terms()) total += coeff * syt_count(p);
    mpq_class value(total, factorial(vec.degree()));
    value.canonicalize();
    return value;
}

SchurVector sum_product(const std::vector<Partition>& a, const std::vector<Partition>& b,
                        int degree, LrCache& cache) {
    SchurVector result(degree);
    for (const auto& pa : a)
        for (const auto& pb : b) result.add_scaled(lr_product(pa, pb, cache), 1);
    return result;
}

SchurVector square_sum_product(const std::vector<Partition>& a,
                               const std::vector<Partition>& b, int degree, LrCache& cache) {
    SchurVector result(degree);
    for (const auto& pa : a) {
        SchurVector square = lr_product(pa, pa, cache);
        for (const auto& pb : b) {
            SchurVector triple = multiply_by_schur(square, pb, cache);
            result.add_scaled(multiply_by_schur(triple, pb, cache), 1);
        }
    }
    return result;
}

}  // namespace schurlc
