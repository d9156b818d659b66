#include "autdec/gf2.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace autdec {

BinaryVector BinaryVector::from_bits(std::initializer_list<int> bits) {
    return from_bits(std::vector<int>(bits));
}

BinaryVector BinaryVector::from_bits(const std::vector<int>& bits) {
    BinaryVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) v.set(i, true);
    return v;
}

BinaryVector BinaryVector::indicator(std::size_t len, std::initializer_list<std::size_t> ones) {
    BinaryVector v(len);
    for (std::size_t i : ones) {
        if (i >= len) throw std::invalid_argument("indicator: index out of range");
        v.set(i, true);
    }
    return v;
}

BinaryVector& BinaryVector::operator^=(const BinaryVector& other) {
    if (len_ != other.len_) throw std::invalid_argument("vector xor: length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

std::size_t BinaryVector::popcount() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += std::popcount(w);
    return n;
}

bool BinaryVector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BinaryVector::first_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
    return len_;
}

std::string BinaryVector::to_string() const {
    std::string s;
    s.reserve(len_);
    for (std::size_t i = 0; i < len_; ++i) s.push_back(get(i) ? '1' : '0');
    return s;
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
    BinaryMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BinaryMatrix BinaryMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<int>> v;
    v.reserve(rows.size());
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(v);
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) return {};
    const std::size_t cols = rows.front().size();
    BinaryMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c)
            if (rows[r][c]) m.set(r, c, true);
    }
    return m;
}

void BinaryMatrix::xor_rows(std::size_t dst, std::size_t src) {
    std::uint64_t* d = data_.data() + dst * wpr_;
    const std::uint64_t* s = data_.data() + src * wpr_;
    for (std::size_t w = 0; w < wpr_; ++w) d[w] ^= s[w];
}

void BinaryMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::uint64_t* pa = data_.data() + a * wpr_;
    std::uint64_t* pb = data_.data() + b * wpr_;
    for (std::size_t w = 0; w < wpr_; ++w) std::swap(pa[w], pb[w]);
}

BinaryVector BinaryMatrix::row(std::size_t r) const {
    BinaryVector v(cols_);
    std::copy_n(data_.data() + r * wpr_, wpr_, v.words().data());
    return v;
}

void BinaryMatrix::set_row(std::size_t r, const BinaryVector& v) {
    if (v.size() != cols_) throw std::invalid_argument("set_row: length mismatch");
    std::copy_n(v.words().data(), wpr_, data_.data() + r * wpr_);
}

BinaryVector BinaryMatrix::column(std::size_t c) const {
    BinaryVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (get(r, c)) v.set(r, true);
    return v;
}

std::size_t BinaryMatrix::row_popcount(std::size_t r) const {
    std::size_t n = 0;
    const std::uint64_t* p = data_.data() + r * wpr_;
    for (std::size_t w = 0; w < wpr_; ++w) n += std::popcount(p[w]);
    return n;
}

BinaryMatrix BinaryMatrix::transpose() const {
    BinaryMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t w = 0; w < wpr_; ++w) {
            std::uint64_t bits = data_[r * wpr_ + w];
            while (bits) {
                const std::size_t c = w * 64 + std::countr_zero(bits);
                t.set(c, r, true);
                bits &= bits - 1;
            }
        }
    return t;
}

BinaryMatrix BinaryMatrix::vstack(const BinaryMatrix& below) const {
    if (cols_ != below.cols_) throw std::invalid_argument("vstack: column mismatch");
    BinaryMatrix out(rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + rows_ * wpr_);
    return out;
}

BinaryMatrix BinaryMatrix::hstack(const BinaryMatrix& right) const {
    if (rows_ != right.rows_) throw std::invalid_argument("hstack: row mismatch");
    BinaryMatrix out(rows_, cols_ + right.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) out.set(r, c, true);
        for (std::size_t c = 0; c < right.cols_; ++c)
            if (right.get(r, c)) out.set(r, cols_ + c, true);
    }
    return out;
}

bool BinaryMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint64_t w) { return w == 0; });
}

std::string BinaryMatrix::to_string() const {
    std::string s;
    s.reserve(rows_ * (cols_ + 1));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) s.push_back(get(r, c) ? '1' : '0');
        s.push_back('\n');
    }
    return s;
}

Permutation::Permutation(std::vector<std::uint32_t> img) : image(std::move(img)) {
    std::vector<bool> seen(image.size(), false);
    for (std::uint32_t x : image) {
        if (x >= image.size() || seen[x]) throw std::invalid_argument("permutation: not a bijection");
        seen[x] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    Permutation p;
    p.image.resize(n);
    std::iota(p.image.begin(), p.image.end(), 0u);
    return p;
}

Permutation Permutation::from_cycles(std::size_t n,
                                     std::initializer_list<std::initializer_list<std::uint32_t>> cycles) {
    Permutation p = identity(n);
    for (const auto& cyc : cycles) {
        std::vector<std::uint32_t> c(cyc);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] >= n) throw std::invalid_argument("from_cycles: point out of range");
            p.image[c[i]] = c[(i + 1) % c.size()];
        }
    }
    return Permutation(std::move(p.image));  // revalidate
}

bool Permutation::is_identity() const {
    for (std::size_t j = 0; j < image.size(); ++j)
        if (image[j] != j) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation inv;
    inv.image.resize(image.size());
    for (std::size_t j = 0; j < image.size(); ++j) inv.image[image[j]] = std::uint32_t(j);
    return inv;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("permutation compose: size mismatch");
    Permutation out;
    out.image.resize(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) out.image[j] = a.image[b.image[j]];
    return out;
}

RrefResult rref(const BinaryMatrix& m) {
    RrefResult res;
    res.reduced = m;
    res.transform = BinaryMatrix::identity(m.rows());
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t r = pivot_row;
        while (r < m.rows() && !res.reduced.get(r, col)) ++r;
        if (r == m.rows()) continue;
        res.reduced.swap_rows(pivot_row, r);
        res.transform.swap_rows(pivot_row, r);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i != pivot_row && res.reduced.get(i, col)) {
                res.reduced.xor_rows(i, pivot_row);
                res.transform.xor_rows(i, pivot_row);
            }
        }
        res.pivots.push_back(col);
        ++pivot_row;
    }
    return res;
}

std::size_t rank(const BinaryMatrix& m) { return rref(m).rank(); }

BinaryMatrix kernel_basis(const BinaryMatrix& m) {
    const RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : rr.pivots) is_pivot[p] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    BinaryMatrix basis(free_cols.size(), m.cols());
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        const std::size_t f = free_cols[i];
        basis.set(i, f, true);
        for (std::size_t t = 0; t < rr.pivots.size(); ++t)
            if (rr.reduced.get(t, f)) basis.set(i, rr.pivots[t], true);
    }
    return basis;
}

BinaryVector IncrementalBasis::reduce(BinaryVector v) const {
    for (std::size_t t = 0; t < rows_.size(); ++t)
        if (v.get(pivots_[t])) v ^= rows_[t];
    return v;
}

bool IncrementalBasis::insert(const BinaryVector& v, BinaryVector* reduced_out) {
    BinaryVector w = reduce(v);
    if (w.is_zero()) return false;
    const std::size_t p = w.first_set();
    for (std::size_t t = 0; t < rows_.size(); ++t)
        if (rows_[t].get(p)) rows_[t] ^= w;
    pivots_.push_back(p);
    rows_.push_back(w);
    if (reduced_out) *reduced_out = std::move(w);
    return true;
}

BinaryMatrix permute_columns(const BinaryMatrix& m, const Permutation& a) {
    if (a.size() != m.cols()) throw std::invalid_argument("permute_columns: size mismatch");
    BinaryMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.get(r, a.image[j])) out.set(r, j, true);
    return out;
}

BinaryVector permute(const BinaryVector& v, const Permutation& a) {
    if (a.size() != v.size()) throw std::invalid_argument("permute: size mismatch");
    BinaryVector out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v.get(a.image[j])) out.set(j, true);
    return out;
}

BinaryVector mul(const BinaryMatrix& a, const BinaryVector& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("mul: dimension mismatch");
    BinaryVector out(a.rows());
    const auto vw = v.words();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        const auto rw = a.row_words(r);
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < rw.size(); ++w) acc ^= rw[w] & vw[w];
        if (std::popcount(acc) & 1) out.set(r, true);
    }
    return out;
}

BinaryMatrix mul(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mul: dimension mismatch");
    BinaryMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        const auto rw = a.row_words(r);
        auto ow = out.row_words(r);
        for (std::size_t w = 0; w < rw.size(); ++w) {
            std::uint64_t bits = rw[w];
            while (bits) {
                const std::size_t k = w * 64 + std::countr_zero(bits);
                const auto bw = b.row_words(k);
                for (std::size_t u = 0; u < ow.size(); ++u) ow[u] ^= bw[u];
                bits &= bits - 1;
            }
        }
    }
    return out;
}

bool in_rowspace(const RrefResult& rr, const BinaryVector& v) {
    if (v.size() != rr.reduced.cols()) throw std::invalid_argument("in_rowspace: length mismatch");
    BinaryVector residual = v;
    for (std::size_t t = 0; t < rr.pivots.size(); ++t) {
        if (residual.get(rr.pivots[t])) {
            const auto rw = rr.reduced.row_words(t);
            auto vw = residual.words();
            for (std::size_t w = 0; w < vw.size(); ++w) vw[w] ^= rw[w];
        }
    }
    return residual.is_zero();
}

}  // namespace autdec
