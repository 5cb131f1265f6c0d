#include "lrc/descriptor.hpp"

#include <fstream>
#include <sstream>

#include "lrc/oracle.hpp"

namespace lrc {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::InvalidDescriptor, what); }

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        auto r = m.row(i);
        rows.push_back(std::vector<uint32_t>(r.begin(), r.end()));
    }
    return rows;
}

Matrix matrix_from(const Field& f, const json& j, size_t cols) {
    if (!j.is_array()) bad("matrix must be an array of rows");
    Matrix m(f, j.size(), cols);
    for (size_t i = 0; i < j.size(); ++i) {
        const auto& row = j[i];
        if (!row.is_array() || row.size() != cols) bad("matrix row " + std::to_string(i) + " has the wrong length");
        for (size_t c = 0; c < cols; ++c) {
            if (!row[c].is_number_unsigned()) bad("matrix entries must be nonnegative integers");
            uint64_t v = row[c].get<uint64_t>();
            if (v >= f.order()) bad("matrix entry " + std::to_string(v) + " outside " + f.name());
            m(i, c) = uint32_t(v);
        }
    }
    return m;
}

template <class T>
T get(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        bad(std::string("key '") + key + "' has the wrong type");
    }
}

RegenPoint point_from(const std::string& s) {
    if (s == "MSR") return RegenPoint::MSR;
    if (s == "MBR") return RegenPoint::MBR;
    if (s == "other") return RegenPoint::Other;
    bad("unknown regenerating point '" + s + "'");
}

json regen_json(const RegenCode& rc) {
    const auto& p = rc.params;
    json j;
    j["params"] = {{"n", p.n},         {"k", p.k}, {"d", p.d}, {"alpha", p.alpha},
                   {"beta", p.beta},   {"B", p.B}, {"point", to_string(p.point)}};
    j["provider"] = rc.provider;
    json proj = json::array();
    for (const auto& row : rc.projections) {
        json r = json::array();
        for (const auto& m : row) r.push_back(m.rows() ? matrix_json(m) : json(nullptr));
        proj.push_back(r);
    }
    j["projections"] = proj;
    j["edge_map"] = rc.edge_map;
    return j;
}

RegenCode regen_from(const json& j, VectorCode code) {
    RegenCode rc;
    const json& p = j.at("params");
    rc.params.n = get<size_t>(p, "n");
    rc.params.k = get<size_t>(p, "k");
    rc.params.d = get<size_t>(p, "d");
    rc.params.alpha = get<size_t>(p, "alpha");
    rc.params.beta = get<size_t>(p, "beta");
    rc.params.B = get<size_t>(p, "B");
    rc.params.point = point_from(get<std::string>(p, "point"));
    if (rc.params.n != code.n() || rc.params.alpha != code.alpha()) bad("regenerating parameters do not match the code");
    rc.provider = get<std::string>(j, "provider");
    const json& proj = j.at("projections");
    if (!proj.is_array() || proj.size() != code.n()) bad("projections must list every node");
    rc.projections.assign(code.n(), std::vector<Matrix>(code.n()));
    for (size_t f = 0; f < code.n(); ++f) {
        if (!proj[f].is_array() || proj[f].size() != code.n()) bad("projection table is not square");
        for (size_t h = 0; h < code.n(); ++h) {
            if (proj[f][h].is_null()) continue;
            if (proj[f][h].size() != code.alpha()) bad("projection must have alpha rows");
            rc.projections[f][h] = matrix_from(code.field(), proj[f][h], rc.params.beta);
        }
    }
    rc.edge_map = get<std::vector<std::vector<size_t>>>(j, "edge_map");
    rc.code = std::move(code);
    return rc;
}

LocalityKind kind_from(const std::string& s) {
    if (s == "all-symbol") return LocalityKind::AllSymbol;
    if (s == "information") return LocalityKind::Information;
    bad("unknown locality kind '" + s + "'");
}

}  // namespace

json to_json(const Construction& c) {
    const Field& f = c.code.field();
    json j;
    j["field"] = {{"p", f.characteristic()}, {"m", f.degree()}, {"poly", f.poly()}};
    j["n"] = c.code.n();
    j["alpha"] = c.code.alpha();
    j["K"] = c.code.K();
    j["generator"] = matrix_json(c.code.generator());
    if (c.locality) {
        const auto& l = *c.locality;
        j["locality"] = {{"r", l.r},
                         {"delta", l.delta},
                         {"supports", l.supports},
                         {"kind", to_string(l.kind)},
                         {"exact", l.exact}};
    } else {
        j["locality"] = nullptr;
    }
    json meta;
    meta["family"] = c.family;
    json params = json::object();
    for (const auto& [k, v] : c.params) params[k] = v;
    meta["params"] = params;
    meta["seed"] = c.seed;
    meta["attempts"] = c.attempts;
    meta["provider"] = c.provider;
    meta["claimed_dmin"] = c.claimed_dmin;
    meta["claim_exact"] = c.claim_exact;
    meta["regen"] = c.regen ? regen_json(*c.regen) : json(nullptr);
    json locals = json::array();
    for (const auto& rc : c.local_regen) locals.push_back(rc ? regen_json(*rc) : json(nullptr));
    meta["local_regen"] = locals;
    j["metadata"] = meta;
    return j;
}

Construction from_json(const json& j) {
    if (!j.is_object()) bad("descriptor must be a JSON object");
    try {
        const json& fj = j.at("field");
        const auto p = get<uint32_t>(fj, "p");
        const auto m = get<uint32_t>(fj, "m");
        const Field f = Field::make(p, m, get<std::vector<uint32_t>>(fj, "poly"));
        const auto n = get<size_t>(j, "n");
        const auto alpha = get<size_t>(j, "alpha");
        const auto K = get<size_t>(j, "K");
        if (alpha < 1) bad("alpha must be positive");
        Matrix g = matrix_from(f, j.at("generator"), n * alpha);
        if (g.rows() != K) bad("generator has " + std::to_string(g.rows()) + " rows but K = " + std::to_string(K));

        Construction c;
        c.code = VectorCode(g, alpha, {}, false);
        const json& lj = j.at("locality");
        if (!lj.is_null()) {
            LocalityStructure l;
            l.r = get<size_t>(lj, "r");
            l.delta = get<size_t>(lj, "delta");
            l.supports = get<std::vector<std::vector<size_t>>>(lj, "supports");
            for (const auto& s : l.supports)
                for (size_t v : s)
                    if (v >= n) bad("support node " + std::to_string(v) + " out of range");
            l.kind = kind_from(get<std::string>(lj, "kind"));
            l.exact = get<bool>(lj, "exact");
            c.locality = l;
        }
        const json& meta = j.at("metadata");
        c.family = get<std::string>(meta, "family");
        c.code.set_tag(c.family);
        for (const auto& [k, v] : meta.at("params").items()) {
            if (!v.is_number_integer()) bad("parameter '" + k + "' must be an integer");
            c.params.emplace_back(k, v.get<int64_t>());
        }
        c.seed = get<uint64_t>(meta, "seed");
        c.attempts = get<size_t>(meta, "attempts");
        c.provider = get<std::string>(meta, "provider");
        c.claimed_dmin = get<size_t>(meta, "claimed_dmin");
        c.claim_exact = get<bool>(meta, "claim_exact");
        if (!meta.at("regen").is_null()) c.regen = regen_from(meta.at("regen"), c.code);
        const json& locals = meta.at("local_regen");
        if (!locals.is_array()) bad("local_regen must be an array");
        if (!locals.empty() && (!c.locality || locals.size() != c.locality->supports.size()))
            bad("local_regen must have one entry per support");
        for (size_t i = 0; i < locals.size(); ++i) {
            if (locals[i].is_null()) {
                c.local_regen.emplace_back();
                continue;
            }
            c.local_regen.emplace_back(regen_from(locals[i], puncture(c.code, c.locality->supports[i])));
        }
        return c;
    } catch (const json::exception& e) {
        bad(e.what());
    } catch (const Error& e) {
        if (e.code() == Errc::InvalidDescriptor) throw;
        bad(e.what());
    }
}

std::string dump_descriptor(const Construction& c) { return to_json(c).dump(2) + "\n"; }

Construction parse_descriptor(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        bad(std::string("not valid JSON: ") + e.what());
    }
    return from_json(j);
}

Construction load_descriptor(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_descriptor(ss.str());
}

void save_descriptor(const Construction& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::InvalidDescriptor, "cannot write " + path);
    out << dump_descriptor(c);
}

}  // namespace lrc
