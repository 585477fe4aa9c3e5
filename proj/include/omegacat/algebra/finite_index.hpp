#pragma once

#include <cstdint>

#include "omegacat/algebra/group.hpp"

namespace omegacat {

// Mixed-radix indexing of a finite group through its canonical coordinates.
// Element index = sum c_k * stride_k, last coordinate fastest (matches FgAbGroup::elements()).
class FiniteIndex {
public:
    FiniteIndex() = default;
    explicit FiniteIndex(FgAbGroup g, std::uint64_t limit = 1u << 22) : group_(std::move(g)) {
        if (!group_.is_finite()) throw InfiniteGroup("finite index requested for " + group_.describe());
        std::uint64_t n = 1;
        for (const auto& m : group_.moduli()) {
            if (m > Integer(limit)) throw TooLarge("group " + group_.describe() + " too large to index");
            mod_.push_back(static_cast<std::int64_t>(m));
            n *= static_cast<std::uint64_t>(mod_.back());
            if (n > limit) throw TooLarge("group " + group_.describe() + " too large to index");
        }
        size_ = n;
        stride_.assign(mod_.size(), 1);
        for (std::size_t k = mod_.size(); k-- > 1;) stride_[k - 1] = stride_[k] * mod_[k];
    }

    const FgAbGroup& group() const { return group_; }
    std::size_t size() const { return size_; }
    std::size_t dim() const { return mod_.size(); }
    const std::vector<std::int64_t>& moduli() const { return mod_; }

    std::size_t index_of_canonical(const std::vector<std::int64_t>& c) const {
        std::size_t idx = 0;
        for (std::size_t k = 0; k < c.size(); ++k) idx += static_cast<std::size_t>(c[k] * stride_[k]);
        return idx;
    }

    std::vector<std::int64_t> canonical_of_index(std::size_t idx) const {
        std::vector<std::int64_t> c(mod_.size());
        for (std::size_t k = 0; k < mod_.size(); ++k) {
            c[k] = static_cast<std::int64_t>(idx / stride_[k]) % mod_[k];
        }
        return c;
    }

    std::size_t index_of(const IntVector& x) const {
        IntVector c = group_.canonical(x);
        std::size_t idx = 0;
        for (std::size_t k = 0; k < c.size(); ++k) idx += static_cast<std::size_t>(static_cast<std::int64_t>(c[k])) * stride_[k];
        return idx;
    }

    IntVector element(std::size_t idx) const {
        auto c = canonical_of_index(idx);
        IntVector v(c.begin(), c.end());
        return group_.lift(v);
    }

    std::size_t add(std::size_t a, std::size_t b) const {
        std::size_t r = 0;
        for (std::size_t k = 0; k < mod_.size(); ++k) {
            std::int64_t x = (static_cast<std::int64_t>(a / stride_[k]) % mod_[k]) +
                             (static_cast<std::int64_t>(b / stride_[k]) % mod_[k]);
            if (x >= mod_[k]) x -= mod_[k];
            r += static_cast<std::size_t>(x) * stride_[k];
        }
        return r;
    }

    std::size_t neg(std::size_t a) const {
        std::size_t r = 0;
        for (std::size_t k = 0; k < mod_.size(); ++k) {
            std::int64_t x = static_cast<std::int64_t>(a / stride_[k]) % mod_[k];
            r += static_cast<std::size_t>((mod_[k] - x) % mod_[k]) * stride_[k];
        }
        return r;
    }

    std::size_t sub(std::size_t a, std::size_t b) const { return add(a, neg(b)); }

private:
    FgAbGroup group_;
    std::vector<std::int64_t> mod_;
    std::vector<std::size_t> stride_;
    std::size_t size_ = 1;
};

// A hom between finite groups, evaluated on element indices with machine integers.
class FiniteHomTable {
public:
    FiniteHomTable(const GroupHom& f, const FiniteIndex& src, const FiniteIndex& tgt) : tgt_(&tgt) {
        IntMatrix cm = f.canonical_matrix();
        rows_ = cm.rows();
        cols_ = cm.cols();
        m_.resize(rows_ * cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m_[i * cols_ + j] = static_cast<std::int64_t>(cm(i, j));
        src_ = &src;
    }

    std::size_t operator()(std::size_t idx) const {
        auto c = src_->canonical_of_index(idx);
        std::vector<std::int64_t> out(rows_, 0);
        const auto& mod = tgt_->moduli();
        for (std::size_t i = 0; i < rows_; ++i) {
            std::int64_t s = 0;
            for (std::size_t j = 0; j < cols_; ++j) s = (s + (m_[i * cols_ + j] % mod[i]) * c[j]) % mod[i];
            out[i] = s;
        }
        return tgt_->index_of_canonical(out);
    }

private:
    const FiniteIndex* src_;
    const FiniteIndex* tgt_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::int64_t> m_;
};

}  // namespace omegacat
