#include "lrc/verify.hpp"

#include <sstream>

#include "lrc/bounds.hpp"
#include "lrc/local_regen.hpp"
#include "lrc/scalar_locality.hpp"
#include "lrc/subsets.hpp"

namespace lrc {

bool Certificate::ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

std::string Certificate::to_string() const {
    std::ostringstream os;
    for (const auto& c : checks) os << (c.ok ? "ok   " : "FAIL ") << c.name << ": " << c.detail << "\n";
    return os.str();
}

std::vector<BoundValue> applicable_bounds(const Construction& c, const OracleLimits& lim) {
    const auto& code = c.code;
    const int64_t n = int64_t(code.n()), K = int64_t(code.K()), alpha = int64_t(code.alpha());
    const int64_t kappa = int64_t(quasi_dimension(code, lim).kappa);
    std::vector<BoundValue> out;
    auto es = bounds::erasure_and_singleton(n, K, alpha, kappa);
    out.push_back({"singleton", es.singleton});
    out.push_back({"erasure", es.erasure});
    if (c.locality && !c.locality->supports.empty()) {
        const auto& l = *c.locality;
        const int64_t r = int64_t(l.r), delta = int64_t(l.delta);
        auto i0 = int64_t(quasi_dimension(puncture(code, l.covered()), lim).kappa);
        // the kappa and K bounds need the information symbols to be covered
        if (puncture(code, l.covered()).K() == code.K()) {
            auto sb = bounds::structural_bounds(n, r, delta, K, alpha, kappa, i0);
            out.push_back({"I0", sb.i0});
            out.push_back({"kappa", sb.kappa});
            out.push_back({"K", sb.k});
        }
    }
    return out;
}

namespace {

bool has_param(const Construction& c, const char* key) { return c.param(key, -1) >= 0; }

}  // namespace

Certificate verify_construction(const Construction& c, const OracleLimits& lim) {
    Certificate cert;
    const auto& code = c.code;
    cert.dmin = min_distance(code, lim);
    {
        CheckLine line{"d_min", true, {}};
        if (c.claim_exact) {
            line.ok = cert.dmin == c.claimed_dmin;
            line.detail = "d_min=" + std::to_string(cert.dmin) + (line.ok ? " == " : " != ") +
                          "bound=" + std::to_string(c.claimed_dmin);
        } else {
            const size_t floor = c.locality ? c.locality->delta : 1;
            line.ok = cert.dmin >= floor && cert.dmin <= c.claimed_dmin;
            line.detail = "d_min=" + std::to_string(cert.dmin) + " within [" + std::to_string(floor) + ", " +
                          std::to_string(c.claimed_dmin) + "]";
        }
        cert.checks.push_back(line);
    }
    {
        CheckLine line{"bounds", true, {}};
        for (const auto& b : applicable_bounds(c, lim)) {
            if (int64_t(cert.dmin) > b.value) line.ok = false;
            line.detail += b.name + "=" + std::to_string(b.value) + " ";
        }
        if (!line.detail.empty()) line.detail.pop_back();
        cert.checks.push_back(line);
    }
    if (c.locality) {
        auto bad = locality_violations(code, *c.locality, lim);
        CheckLine line{"locality", bad.empty(), {}};
        line.detail = bad.empty() ? "(" + std::to_string(c.locality->r) + "," + std::to_string(c.locality->delta) +
                                        ") " + lrc::to_string(c.locality->kind)
                                  : bad.front();
        cert.checks.push_back(line);
        if (c.claim_exact && c.locality->exact) {
            CheckLine s{"structure", true, {}};
            try {
                auto rep = check_optimal_structure(code, *c.locality, lim);
                s.ok = rep.passed();
                s.detail = s.ok ? "optimal structure confirmed" : rep.notes.front();
            } catch (const Error& e) {
                if (e.code() != Errc::NotOptimalInput) throw;
                s.detail = std::string("not applicable (") + e.what() + ")";
            }
            cert.checks.push_back(s);
        }
    }
    if (c.regen) {
        auto rep = check_regen_contracts(*c.regen);
        cert.checks.push_back({"regenerating", rep.ok,
                               rep.ok ? std::to_string(rep.collections) + " collections, " +
                                            std::to_string(rep.repairs) + " repairs"
                                      : rep.failure});
    }
    for (size_t i = 0; i < c.local_regen.size(); ++i) {
        if (!c.local_regen[i]) continue;
        auto rep = check_regen_contracts(*c.local_regen[i]);
        cert.checks.push_back({"local " + std::to_string(i), rep.ok,
                               rep.ok ? std::to_string(rep.collections) + " collections, " +
                                            std::to_string(rep.repairs) + " repairs"
                                      : rep.failure});
    }

    if (c.family == "random_msr_info" && c.locality) {
        const size_t r = c.locality->r, total = r * c.locality->supports.size();
        bool ok = info_sets_certified(code, c.locality->supports, r, total);
        cert.checks.push_back({"certificate", ok, "every admissible " + std::to_string(total) + "-set has full rank"});
    } else if (c.family == "random_msr_allsym" && c.locality && has_param(c, "ell")) {
        std::vector<Matrix> blocks;
        for (const auto& s : c.locality->supports) blocks.push_back(puncture(code, s).generator());
        VectorCode c0(block_diag(blocks), code.alpha(), "locality_only", false);
        const size_t ell = size_t(c.param("ell"));
        bool ok = thick_cores_preserved(code, c0, ell);
        cert.checks.push_back({"certificate", ok, "every " + std::to_string(ell) + "-core of the locality code kept"});
    } else if (c.family == "random_all_symbol" && c.locality) {
        Matrix g0 = local_parity_checks(code.field(), code.n(), c.locality->r, c.locality->delta).nullspace();
        bool ok = kcores_preserved(code.generator(), g0);
        cert.checks.push_back({"certificate", ok, "every k-core of the locality code kept"});
    }
    return cert;
}

}  // namespace lrc
