#include "lrc/bounds.hpp"

#include <algorithm>

#include "lrc/error.hpp"

namespace lrc::bounds {

int64_t ceil_div(int64_t a, int64_t b) {
    if (b <= 0) throw Error(Errc::PreconditionViolated, "ceil_div by non-positive value");
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

int64_t binom(int64_t n, int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    int64_t r = 1;
    for (int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

int64_t scalar_locality_bound(int64_t n, int64_t k, int64_t r, int64_t delta) {
    return n - k + 1 - (ceil_div(k, r) - 1) * (delta - 1);
}

ProfileCalculator::ProfileCalculator(std::vector<int64_t> a) : a_(std::move(a)) {
    if (a_.empty()) throw Error(Errc::PreconditionViolated, "empty rank profile");
    prefix_.assign(a_.size() + 1, 0);
    for (size_t i = 0; i < a_.size(); ++i) {
        if (a_[i] < 0) throw Error(Errc::PreconditionViolated, "negative rank increment");
        if (i && a_[i] > a_[i - 1]) throw Error(Errc::PreconditionViolated, "rank profile must be nonincreasing");
        prefix_[i + 1] = prefix_[i] + a_[i];
    }
    k_local_ = prefix_.back();
    if (k_local_ == 0) throw Error(Errc::PreconditionViolated, "rank profile sums to zero");
}

int64_t ProfileCalculator::P(int64_t s) const {
    if (s < 0) throw Error(Errc::PreconditionViolated, "P of negative argument");
    const int64_t nl = n_local();
    return (s / nl) * k_local_ + prefix_[size_t(s % nl)];
}

int64_t ProfileCalculator::Q(int64_t s) const {
    if (s < 0 || s > n_local()) throw Error(Errc::QOutOfRange, "Q defined only on [0, n_L]");
    return k_local_ - prefix_[size_t(n_local() - s)];
}

int64_t ProfileCalculator::p_inverse(int64_t nu) const {
    if (nu < 1) throw Error(Errc::PreconditionViolated, "P inverse needs nu >= 1");
    const int64_t v1 = (nu - 1) / k_local_;
    const int64_t v0 = nu - v1 * k_local_;  // in [1, K_L]
    int64_t s = 1;
    while (prefix_[size_t(s)] < v0) ++s;
    return v1 * n_local() + s;
}

bool ProfileCalculator::strictly_subadditive() const { return a_.size() == 1 || a_[0] > a_[1]; }

ProfileCalculator msr_profile(int64_t alpha, int64_t r, int64_t delta) {
    std::vector<int64_t> a(size_t(r), alpha);
    a.resize(size_t(r + delta - 1), 0);
    return ProfileCalculator(a);
}

ProfileCalculator mbr_profile(int64_t alpha, int64_t r, int64_t delta) {
    std::vector<int64_t> a;
    for (int64_t i = 1; i <= r; ++i) a.push_back(alpha - i + 1);
    a.resize(size_t(r + delta - 1), 0);
    return ProfileCalculator(a);
}

int64_t ura_bound(int64_t n, int64_t K, const ProfileCalculator& calc) { return n - calc.p_inverse(K) + 1; }

int64_t msr_k_bound(int64_t n, int64_t K, int64_t alpha, int64_t r, int64_t delta) {
    return (n - ceil_div(K, alpha) + 1) - (ceil_div(K, r * alpha) - 1) * (delta - 1);
}

int64_t rate_bound(int64_t n, int64_t dmin, const ProfileCalculator& calc) { return calc.P(n - dmin + 1); }

StructuralBounds structural_bounds(int64_t n, int64_t r, int64_t delta, int64_t K, int64_t alpha, int64_t kappa,
                                   int64_t i0) {
    auto f = [&](int64_t x) { return n - x + 1 - (ceil_div(x, r) - 1) * (delta - 1); };
    return {f(i0), f(kappa), msr_k_bound(n, K, alpha, r, delta)};
}

bool structural_inputs_valid(int64_t n, int64_t K, int64_t alpha, int64_t kappa, int64_t i0) {
    return K >= 1 && alpha >= 1 && ceil_div(K, alpha) <= kappa && kappa <= i0 && i0 <= n;
}

int64_t cutset_bound(int64_t k, int64_t d, int64_t alpha, int64_t beta) {
    int64_t b = 0;
    for (int64_t i = 0; i < k; ++i) b += std::min(alpha, (d - i) * beta);
    return b;
}

int64_t concatenated_bound(int64_t n1, int64_t k1, int64_t d1, int64_t n2, int64_t k2, int64_t /*d2*/) {
    const int64_t r = n1 - d1 + 1;
    return scalar_locality_bound(n1 * n2, k1 * k2, r, d1);
}

ErasureSingleton erasure_and_singleton(int64_t n, int64_t K, int64_t alpha, int64_t kappa) {
    return {n - ceil_div(K, alpha) + 1, n - kappa + 1};
}

}  // namespace lrc::bounds
