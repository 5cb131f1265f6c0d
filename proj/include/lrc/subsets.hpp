#pragma once

#include <cstddef>
#include <vector>

namespace lrc {

// Lexicographic k-subsets of {0..n-1}.
class Combinations {
public:
    Combinations(size_t n, size_t k) : n_(n), k_(k), idx_(k), done_(k > n) {
        for (size_t i = 0; i < k; ++i) idx_[i] = i;
    }

    bool done() const { return done_; }
    const std::vector<size_t>& current() const { return idx_; }

    void next() {
        size_t i = k_;
        while (i > 0 && idx_[i - 1] == n_ - k_ + i - 1) --i;
        if (i == 0) {
            done_ = true;
            return;
        }
        ++idx_[i - 1];
        for (size_t j = i; j < k_; ++j) idx_[j] = idx_[j - 1] + 1;
    }

private:
    size_t n_, k_;
    std::vector<size_t> idx_;
    bool done_;
};

// Calls fn(subset) for every k-subset; stops early when fn returns true.
// Returns true if stopped early.
template <class Fn>
bool for_each_subset(size_t n, size_t k, Fn&& fn) {
    for (Combinations c(n, k); !c.done(); c.next())
        if (fn(c.current())) return true;
    return false;
}

// Map a subset of positions into a base list.
inline std::vector<size_t> pick(const std::vector<size_t>& base, const std::vector<size_t>& positions) {
    std::vector<size_t> out;
    out.reserve(positions.size());
    for (size_t p : positions) out.push_back(base[p]);
    return out;
}

std::vector<size_t> complement(size_t n, const std::vector<size_t>& s);
std::vector<size_t> iota(size_t n, size_t start = 0);

}  // namespace lrc
