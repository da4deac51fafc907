#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "moser/error.hpp"

namespace moser {

// Canonical subset of {0, ..., n-1}, stored as a bitset. Doubles as the
// element-set type for group subsets (universe = group order) and the
// vertex-set type for graphs (universe = vertex count). Equality is
// structural; all operations require matching universes.
class VertexSet {
  public:
    VertexSet() : n_(0) {}

    explicit VertexSet(int universe) : n_(universe), bits_((universe + 63) / 64, 0) {
        if (universe < 0) throw Error("VertexSet: negative universe");
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.bits_) w = ~uint64_t{0};
        s.trim();
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<int> xs) {
        VertexSet s(universe);
        for (int x : xs) s.insert(x);
        return s;
    }

    static VertexSet of(int universe, const std::vector<int>& xs) {
        VertexSet s(universe);
        for (int x : xs) s.insert(x);
        return s;
    }

    // Low 64 bits as a mask; only valid for universe <= 64.
    static VertexSet from_mask(int universe, uint64_t mask) {
        VertexSet s(universe);
        if (universe > 0) s.bits_[0] = mask;
        s.trim();
        return s;
    }

    int universe() const { return n_; }

    bool contains(int x) const {
        return x >= 0 && x < n_ && (bits_[x >> 6] >> (x & 63)) & 1;
    }

    void insert(int x) {
        check_index(x);
        bits_[x >> 6] |= uint64_t{1} << (x & 63);
    }

    void erase(int x) {
        check_index(x);
        bits_[x >> 6] &= ~(uint64_t{1} << (x & 63));
    }

    int size() const {
        int c = 0;
        for (uint64_t w : bits_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : bits_) {
            if (w) return false;
        }
        return true;
    }

    uint64_t word(size_t i) const { return i < bits_.size() ? bits_[i] : 0; }

    uint64_t low_mask() const { return word(0); }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(size());
        for_each([&](int x) { out.push_back(x); });
        return out;
    }

    template <class Fn>
    void for_each(Fn fn) const {
        for (size_t i = 0; i < bits_.size(); ++i) {
            uint64_t w = bits_[i];
            while (w) {
                int b = std::countr_zero(w);
                fn(int(i * 64) + b);
                w &= w - 1;
            }
        }
    }

    VertexSet operator|(const VertexSet& o) const { return zip(o, [](uint64_t a, uint64_t b) { return a | b; }); }
    VertexSet operator&(const VertexSet& o) const { return zip(o, [](uint64_t a, uint64_t b) { return a & b; }); }
    VertexSet operator-(const VertexSet& o) const { return zip(o, [](uint64_t a, uint64_t b) { return a & ~b; }); }

    VertexSet& operator|=(const VertexSet& o) { return zip_in(o, [](uint64_t a, uint64_t b) { return a | b; }); }
    VertexSet& operator&=(const VertexSet& o) { return zip_in(o, [](uint64_t a, uint64_t b) { return a & b; }); }
    VertexSet& operator-=(const VertexSet& o) { return zip_in(o, [](uint64_t a, uint64_t b) { return a & ~b; }); }

    VertexSet complement() const {
        VertexSet r(n_);
        for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = ~bits_[i];
        r.trim();
        return r;
    }

    bool subset_of(const VertexSet& o) const {
        check_universe(o);
        for (size_t i = 0; i < bits_.size(); ++i) {
            if (bits_[i] & ~o.bits_[i]) return false;
        }
        return true;
    }

    bool intersects(const VertexSet& o) const {
        check_universe(o);
        for (size_t i = 0; i < bits_.size(); ++i) {
            if (bits_[i] & o.bits_[i]) return true;
        }
        return false;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    // Lexicographic order on the ascending member sequences, e.g.
    // {1} < {1,2} < {2}. Used for deterministic witness tie-breaks.
    static bool lex_less(const VertexSet& a, const VertexSet& b) {
        a.check_universe(b);
        for (size_t i = 0; i < a.bits_.size(); ++i) {
            uint64_t diff = a.bits_[i] ^ b.bits_[i];
            if (!diff) continue;
            int bit = std::countr_zero(diff);
            bool in_a = (a.bits_[i] >> bit) & 1;
            // The set NOT owning the first differing element wins iff it has
            // no later element (it is a proper prefix); otherwise the owner
            // has the smaller element at that position.
            const VertexSet& other = in_a ? b : a;
            if (other.any_above(int(i * 64) + bit)) return in_a;
            return !in_a;
        }
        return false;
    }

    // "0,2,5" notation used in instance keys and reports.
    std::string to_string() const {
        std::string s;
        for_each([&](int x) {
            if (!s.empty()) s += ',';
            s += std::to_string(x);
        });
        return s;
    }

  private:
    int n_;
    std::vector<uint64_t> bits_;

    void check_index(int x) const {
        if (x < 0 || x >= n_) throw Error("VertexSet: index " + std::to_string(x) + " out of range [0," + std::to_string(n_) + ")");
    }

    void check_universe(const VertexSet& o) const {
        if (n_ != o.n_) throw Error("VertexSet: mismatched universes");
    }

    void trim() {
        if (n_ % 64 && !bits_.empty()) bits_.back() &= (uint64_t{1} << (n_ % 64)) - 1;
    }

    bool any_above(int x) const {
        size_t wi = size_t(x) >> 6;
        uint64_t w = bits_[wi] & ~((uint64_t{2} << (x & 63)) - 1);
        if (w) return true;
        for (size_t i = wi + 1; i < bits_.size(); ++i) {
            if (bits_[i]) return true;
        }
        return false;
    }

    template <class Op>
    VertexSet zip(const VertexSet& o, Op op) const {
        check_universe(o);
        VertexSet r(n_);
        for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = op(bits_[i], o.bits_[i]);
        return r;
    }

    template <class Op>
    VertexSet& zip_in(const VertexSet& o, Op op) {
        check_universe(o);
        for (size_t i = 0; i < bits_.size(); ++i) bits_[i] = op(bits_[i], o.bits_[i]);
        return *this;
    }
};

}  // namespace moser
