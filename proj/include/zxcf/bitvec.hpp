#pragma once

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <vector>

namespace zxcf {

/// Packed GF(2) vector. Bit i lives in word i/64; row operations are
/// word-parallel XOR.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int n) : n_(n), w_((n + 63) / 64, 0) {
        if (n < 0) {
            throw std::invalid_argument("BitVec: negative size");
        }
    }

    int size() const { return n_; }

    bool get(int i) const { return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1; }

    void set(int i, bool v) {
        uint64_t mask = uint64_t{1} << (i & 63);
        if (v) {
            w_[static_cast<size_t>(i) >> 6] |= mask;
        } else {
            w_[static_cast<size_t>(i) >> 6] &= ~mask;
        }
    }

    void flip(int i) { w_[static_cast<size_t>(i) >> 6] ^= uint64_t{1} << (i & 63); }

    BitVec& operator^=(const BitVec& o) {
        for (size_t i = 0; i < w_.size(); ++i) {
            w_[i] ^= o.w_[i];
        }
        return *this;
    }

    bool none() const {
        for (uint64_t x : w_) {
            if (x != 0) {
                return false;
            }
        }
        return true;
    }

    bool any() const { return !none(); }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) {
            c += __builtin_popcountll(x);
        }
        return c;
    }

    /// Index of the first set bit at or after `from`, or -1.
    int first_set(int from = 0) const {
        if (from >= n_) {
            return -1;
        }
        size_t wi = static_cast<size_t>(from) >> 6;
        uint64_t cur = w_[wi] & (~uint64_t{0} << (from & 63));
        while (true) {
            if (cur != 0) {
                return static_cast<int>(wi * 64 + __builtin_ctzll(cur));
            }
            if (++wi >= w_.size()) {
                return -1;
            }
            cur = w_[wi];
        }
    }

    template <typename Fn>
    void for_each_set(Fn&& fn) const {
        for (size_t wi = 0; wi < w_.size(); ++wi) {
            uint64_t cur = w_[wi];
            while (cur != 0) {
                fn(static_cast<int>(wi * 64 + __builtin_ctzll(cur)));
                cur &= cur - 1;
            }
        }
    }

    /// Parity of the bitwise AND of two vectors: sum_i a_i b_i mod 2.
    static bool parity_and(const BitVec& a, const BitVec& b) {
        uint64_t acc = 0;
        for (size_t i = 0; i < a.w_.size(); ++i) {
            acc ^= a.w_[i] & b.w_[i];
        }
        return __builtin_parityll(acc);
    }

    friend bool operator==(const BitVec&, const BitVec&) = default;
    friend auto operator<=>(const BitVec& a, const BitVec& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) {
            return c;
        }
        return a.w_ <=> b.w_;
    }

    const std::vector<uint64_t>& words() const { return w_; }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace zxcf
