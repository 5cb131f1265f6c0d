#pragma once

#include <cstdint>
#include <vector>

namespace lrc::bounds {

int64_t ceil_div(int64_t a, int64_t b);
int64_t binom(int64_t n, int64_t k);

int64_t scalar_locality_bound(int64_t n, int64_t k, int64_t r, int64_t delta);

// Rank accumulation profile a_1..a_{n_L} of a local code, extended periodically.
class ProfileCalculator {
public:
    explicit ProfileCalculator(std::vector<int64_t> a);

    const std::vector<int64_t>& profile() const { return a_; }
    int64_t n_local() const { return int64_t(a_.size()); }
    int64_t k_local() const { return k_local_; }

    // Leading sum over the periodic extension, any s >= 0.
    int64_t P(int64_t s) const;
    // Trailing sum of the last s entries, 0 <= s <= n_L.
    int64_t Q(int64_t s) const;
    // Smallest s with P(s) >= nu.
    int64_t p_inverse(int64_t nu) const;
    // a_1 > a_2, vacuously true when n_L = 1.
    bool strictly_subadditive() const;

private:
    std::vector<int64_t> a_;
    std::vector<int64_t> prefix_;
    int64_t k_local_ = 0;
};

ProfileCalculator msr_profile(int64_t alpha, int64_t r, int64_t delta);
ProfileCalculator mbr_profile(int64_t alpha, int64_t r, int64_t delta);

int64_t ura_bound(int64_t n, int64_t K, const ProfileCalculator& calc);
int64_t msr_k_bound(int64_t n, int64_t K, int64_t alpha, int64_t r, int64_t delta);
int64_t rate_bound(int64_t n, int64_t dmin, const ProfileCalculator& calc);

struct StructuralBounds {
    int64_t i0;
    int64_t kappa;
    int64_t k;
};
// i0 is the quasi-dimension of the code punctured to the union of local supports.
StructuralBounds structural_bounds(int64_t n, int64_t r, int64_t delta, int64_t K, int64_t alpha, int64_t kappa,
                                   int64_t i0);
bool structural_inputs_valid(int64_t n, int64_t K, int64_t alpha, int64_t kappa, int64_t i0);

int64_t cutset_bound(int64_t k, int64_t d, int64_t alpha, int64_t beta);

int64_t concatenated_bound(int64_t n1, int64_t k1, int64_t d1, int64_t n2, int64_t k2, int64_t d2);

struct ErasureSingleton {
    int64_t singleton;
    int64_t erasure;
};
ErasureSingleton erasure_and_singleton(int64_t n, int64_t K, int64_t alpha, int64_t kappa);

// A distance bound is only achievable when it is at least the local distance.
inline bool feasible(int64_t bound, int64_t delta) { return bound >= delta; }

}  // namespace lrc::bounds
