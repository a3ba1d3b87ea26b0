#ifndef NSWPD_BITSET_HPP
#define NSWPD_BITSET_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace nswpd {

// Fixed-universe dynamic bitset used for vertex sets; supports graphs with
// more than 64 vertices via multiple words.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int universe) : bits_((universe + 63) / 64, 0) {}

    void set(int i) { bits_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { bits_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t w : bits_) c += __builtin_popcountll(w);
        return c;
    }
    bool any() const {
        for (uint64_t w : bits_) if (w) return true;
        return false;
    }

    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
        return *this;
    }

    bool operator==(const Bitset& o) const { return bits_ == o.bits_; }

    // Vertices present, ascending.
    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (size_t w = 0; w < bits_.size(); ++w) {
            uint64_t word = bits_[w];
            while (word) {
                int b = __builtin_ctzll(word);
                out.push_back(static_cast<int>(w * 64 + b));
                word &= word - 1;
            }
        }
        return out;
    }

    size_t hash() const {
        size_t h = bits_.size();
        for (uint64_t w : bits_) h = h * 1000003u ^ static_cast<size_t>(w ^ (w >> 32));
        return h;
    }

private:
    std::vector<uint64_t> bits_;
};

struct BitsetHash {
    size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace nswpd

#endif
