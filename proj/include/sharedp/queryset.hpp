#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "sharedp/common.hpp"

namespace sharedp {

// Fixed-width bit vector over query ids. The width is fixed when the batch is
// created; all set operations are word-parallel. Mixing widths is a usage
// error.
class QuerySet {
public:
    QuerySet() = default;

    explicit QuerySet(std::uint32_t width)
        : width_(width), words_((width + 63) / 64, 0) {}

    static QuerySet full(std::uint32_t width) {
        QuerySet s(width);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    static QuerySet single(std::uint32_t width, std::uint32_t id) {
        QuerySet s(width);
        s.set(id);
        return s;
    }

    std::uint32_t width() const { return width_; }
    std::uint32_t word_count() const { return static_cast<std::uint32_t>(words_.size()); }

    void set(std::uint32_t i) {
        check_index(i);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(std::uint32_t i) {
        check_index(i);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    bool test(std::uint32_t i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool any() const { return !none(); }

    std::uint32_t count() const {
        std::uint32_t c = 0;
        for (auto w : words_) c += static_cast<std::uint32_t>(std::popcount(w));
        return c;
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    QuerySet& operator|=(const QuerySet& o) {
        check_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    QuerySet& operator&=(const QuerySet& o) {
        check_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    // this \= o
    QuerySet& andnot(const QuerySet& o) {
        check_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend QuerySet operator|(QuerySet a, const QuerySet& b) { return a |= b; }
    friend QuerySet operator&(QuerySet a, const QuerySet& b) { return a &= b; }

    // a \ b
    QuerySet minus(const QuerySet& o) const {
        QuerySet r = *this;
        r.andnot(o);
        return r;
    }

    bool intersects(const QuerySet& o) const {
        check_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const QuerySet& o) const {
        check_width(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const QuerySet& o) const {
        return width_ == o.width_ && words_ == o.words_;
    }
    bool operator!=(const QuerySet& o) const { return !(*this == o); }

    // Visits members in ascending id order.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                std::uint32_t bit = static_cast<std::uint32_t>(std::countr_zero(w));
                fn(static_cast<std::uint32_t>(wi * 64 + bit));
                w &= w - 1;
            }
        }
    }

    std::vector<std::uint32_t> members() const {
        std::vector<std::uint32_t> out;
        out.reserve(count());
        for_each([&](std::uint32_t q) { out.push_back(q); });
        return out;
    }

private:
    void check_index(std::uint32_t i) const {
        if (i >= width_) throw UsageError("query id " + std::to_string(i) + " out of queryset width " + std::to_string(width_));
    }

    void check_width(const QuerySet& o) const {
        if (width_ != o.width_) throw UsageError("queryset width mismatch: " + std::to_string(width_) + " vs " + std::to_string(o.width_));
    }

    void trim() {
        std::uint32_t tail = width_ & 63;
        if (tail && !words_.empty()) words_.back() &= (std::uint64_t{1} << tail) - 1;
    }

    std::uint32_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace sharedp
