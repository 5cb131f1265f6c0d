#include "lrc/catalog.hpp"

#include <algorithm>

#include "lrc/local_regen.hpp"
#include "lrc/rs.hpp"
#include "lrc/scalar_locality.hpp"

namespace lrc {

const std::vector<FamilyInfo>& families() {
    static const std::vector<FamilyInfo> list = {
        {"rs", {"n", "k"}, {}},
        {"rbt_mbr", {"n", "k"}, {}},
        {"pm_msr", {"n", "k", "d"}, {}},
        {"trivial_msr", {"n", "k"}, {}},
        {"pyramid", {"k", "r", "delta", "d"}, {}},
        {"parity_split", {"k", "r", "delta"}, {}},
        {"random_all_symbol", {"n", "k", "r", "delta"}, {"attempts"}},
        {"sum_parity_msr", {"r", "delta", "m", "Delta"}, {"d"}},
        {"pyramid_msr", {"r", "delta", "m", "Delta"}, {"d"}},
        {"random_msr_info", {"r", "delta", "m", "Delta"}, {"d", "attempts"}},
        {"random_msr_allsym", {"r", "delta", "m", "ell"}, {"d", "n", "attempts"}},
        {"rbt_mbr_info", {"r", "delta", "m", "Delta"}, {}},
        {"rbt_mbr_allsym", {"r", "delta", "m", "ell"}, {"n", "attempts"}},
        {"product_cyclic", {"n", "kappa", "r", "delta"}, {}},
    };
    return list;
}

Field parse_field(const std::string& text) {
    try {
        auto caret = text.find('^');
        if (caret != std::string::npos)
            return Field::make(uint32_t(std::stoul(text.substr(0, caret))), uint32_t(std::stoul(text.substr(caret + 1))));
        uint64_t q = std::stoull(text);
        Field f = smallest_field_at_least(q);
        if (f.order() != q) throw Error(Errc::NonPrimeCharacteristic, text + " is not a prime power");
        return f;
    } catch (const std::logic_error&) {
        throw Error(Errc::PreconditionViolated, "cannot parse field '" + text + "'");
    }
}

Construction rs_construction(size_t n, size_t k, const Field& field) {
    Construction c;
    c.family = "rs";
    c.code = VectorCode(rs_generator(field, n, k), 1, "rs");
    c.claimed_dmin = n - k + 1;
    c.params = {{"n", int64_t(n)}, {"k", int64_t(k)}};
    c.provider = "rs";
    return c;
}

Construction regen_construction(RegenCode rc, std::string family) {
    Construction c;
    const auto& p = rc.params;
    c.family = std::move(family);
    c.code = rc.code;
    c.claimed_dmin = p.n - p.k + 1;
    c.params = {{"n", int64_t(p.n)},         {"k", int64_t(p.k)},       {"d", int64_t(p.d)},
                {"alpha", int64_t(p.alpha)}, {"beta", int64_t(p.beta)}, {"B", int64_t(p.B)}};
    c.provider = rc.provider;
    c.regen = std::move(rc);
    return c;
}

namespace {

size_t need(const ParamMap& p, const std::string& family, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) throw Error(Errc::PreconditionViolated, "family " + family + " needs parameter '" + key + "'");
    if (it->second < 0) throw Error(Errc::PreconditionViolated, "parameter '" + key + "' must be nonnegative");
    return size_t(it->second);
}

size_t opt(const ParamMap& p, const std::string& key, size_t fallback) {
    auto it = p.find(key);
    return it == p.end() ? fallback : size_t(std::max<int64_t>(0, it->second));
}

}  // namespace

Construction build_family(const std::string& family, const ParamMap& params, std::optional<Field> field,
                          uint64_t seed) {
    const FamilyInfo* info = nullptr;
    for (const auto& f : families())
        if (f.name == family) info = &f;
    if (!info) throw Error(Errc::PreconditionViolated, "unknown family '" + family + "'");
    for (const auto& [key, value] : params) {
        (void)value;
        auto known = [&](const std::vector<std::string>& v) { return std::find(v.begin(), v.end(), key) != v.end(); };
        if (!known(info->required) && !known(info->optional) && key != "stack_alpha")
            throw Error(Errc::PreconditionViolated, "family " + family + " takes no parameter '" + key + "'");
    }
    auto p = [&](const char* key) { return need(params, family, key); };
    const Field f = field ? *field : Field::make(257);

    Construction out;
    if (family == "rs") {
        out = rs_construction(p("n"), p("k"), f);
    } else if (family == "rbt_mbr") {
        out = regen_construction(rbt_mbr_construct(p("n"), p("k"), field), family);
    } else if (family == "pm_msr") {
        out = regen_construction(pm_msr_construct(p("n"), p("k"), p("d"), f, seed), family);
        out.seed = seed;
    } else if (family == "trivial_msr") {
        out = regen_construction(trivial_msr(p("n"), p("k"), f), family);
    } else if (family == "pyramid") {
        out = pyramid_construct(p("k"), p("r"), p("delta"), p("d"), f);
    } else if (family == "parity_split") {
        out = parity_split_construct(p("k"), p("r"), p("delta"), f);
    } else if (family == "random_all_symbol") {
        out = random_all_symbol_construct(p("n"), p("k"), p("r"), p("delta"), f, seed, opt(params, "attempts", 10));
    } else {
        LocalRegenSpec s;
        s.family = family;
        s.r = p("r");
        s.delta = p("delta");
        s.field = f;
        s.seed = seed;
        s.max_attempts = opt(params, "attempts", 10);
        if (family == "product_cyclic") {
            s.n = p("n");
            s.kappa = p("kappa");
        } else {
            s.m = p("m");
            s.Delta = opt(params, "Delta", 0);
            s.ell = opt(params, "ell", 0);
            s.n = opt(params, "n", 0);
            if (params.count("d")) s.d = p("d");
        }
        out = construct_local_regen(s);
    }
    const size_t stack_alpha = opt(params, "stack_alpha", 1);
    return stack_alpha > 1 ? stack(out, stack_alpha) : out;
}

}  // namespace lrc
