#include "lrc/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lrc/bounds.hpp"
#include "lrc/catalog.hpp"
#include "lrc/descriptor.hpp"
#include "lrc/eval.hpp"
#include "lrc/verify.hpp"

namespace lrc {

using nlohmann::json;

namespace {

constexpr int kOk = 0, kFailed = 1, kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int64_t parse_int(const std::string& key, const std::string& text) {
    try {
        size_t used = 0;
        int64_t v = std::stoll(text, &used);
        if (used == text.size()) return v;
    } catch (const std::logic_error&) {
    }
    throw UsageError("parameter '" + key + "' needs an integer, got '" + text + "'");
}

std::map<std::string, std::string> parse_pairs(const std::vector<std::string>& pairs) {
    std::map<std::string, std::string> out;
    for (const auto& p : pairs) {
        auto eq = p.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("expected key=value, got '" + p + "'");
        out[p.substr(0, eq)] = p.substr(eq + 1);
    }
    return out;
}

ParamMap int_params(const std::map<std::string, std::string>& raw) {
    ParamMap out;
    for (const auto& [k, v] : raw) out[k] = parse_int(k, v);
    return out;
}

std::vector<int64_t> int_list(const std::string& key, const std::string& text) {
    std::vector<int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_int(key, item));
    return out;
}

int64_t need(const std::map<std::string, std::string>& raw, const std::string& bound, const std::string& key) {
    auto it = raw.find(key);
    if (it == raw.end()) throw UsageError("bound '" + bound + "' needs " + key + "=<integer>");
    return parse_int(key, it->second);
}

json bound_json(const std::string& name, const std::map<std::string, std::string>& raw) {
    auto n = [&](const char* key) { return need(raw, name, key); };
    json j{{"bound", name}};
    for (const auto& [k, v] : raw) j["inputs"][k] = v;
    if (name == "scalar") {
        j["value"] = bounds::scalar_locality_bound(n("n"), n("k"), n("r"), n("delta"));
    } else if (name == "msr_k") {
        j["value"] = bounds::msr_k_bound(n("n"), n("K"), n("alpha"), n("r"), n("delta"));
    } else if (name == "mbr") {
        j["value"] = bounds::ura_bound(n("n"), n("K"), bounds::mbr_profile(n("alpha"), n("r"), n("delta")));
    } else if (name == "ura" || name == "rate") {
        auto it = raw.find("profile");
        if (it == raw.end()) throw UsageError("bound '" + name + "' needs profile=a1,a2,...");
        bounds::ProfileCalculator calc(int_list("profile", it->second));
        j["value"] = name == "ura" ? bounds::ura_bound(n("n"), n("K"), calc) : bounds::rate_bound(n("n"), n("dmin"), calc);
    } else if (name == "structural") {
        if (!bounds::structural_inputs_valid(n("n"), n("K"), n("alpha"), n("kappa"), n("i0")))
            throw UsageError("structural bound needs ceil(K/alpha) <= kappa <= i0 <= n");
        auto s = bounds::structural_bounds(n("n"), n("r"), n("delta"), n("K"), n("alpha"), n("kappa"), n("i0"));
        j["value"] = {{"i0", s.i0}, {"kappa", s.kappa}, {"K", s.k}};
    } else if (name == "cutset") {
        j["value"] = bounds::cutset_bound(n("k"), n("d"), n("alpha"), n("beta"));
    } else if (name == "concatenated") {
        j["value"] = bounds::concatenated_bound(n("n1"), n("k1"), n("d1"), n("n2"), n("k2"), n("d2"));
    } else if (name == "erasure") {
        auto e = bounds::erasure_and_singleton(n("n"), n("K"), n("alpha"), n("kappa"));
        j["value"] = {{"singleton", e.singleton}, {"erasure", e.erasure}};
    } else {
        throw UsageError("unknown bound '" + name +
                         "' (scalar, msr_k, mbr, ura, rate, structural, cutset, concatenated, erasure)");
    }
    return j;
}

json transcript_json(const NodeRepair& r) {
    const auto& t = r.transcript;
    return {{"node", r.node},           {"policy", to_string(r.policy)}, {"helpers", t.helpers},
            {"downloads", t.downloads}, {"total", t.total},              {"success", t.success},
            {"by_transfer", t.by_transfer}};
}

json record_json(const ComparisonRecord& r) {
    return {{"family", r.family}, {"n", r.n},       {"K", r.K},   {"alpha", r.alpha},     {"dmin", r.dmin},
            {"omega_bar", r.omega_bar}, {"Omega", r.Omega}, {"xi", r.xi}, {"h", r.h},  {"gamma_K", r.gamma_K},
            {"gamma_S", r.gamma_S}, {"cost", r.cost}};
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Locally repairable and local regenerating codes"};
    app.require_subcommand(1);
    bool force = false;
    app.add_flag("--force", force, "lift the exhaustive-search guards (LRC_MAX_ORACLE_SUBSETS, n <= 20)");

    std::string family, field_text, output, spec_path;
    std::vector<std::string> pairs;
    uint64_t seed = 1;
    auto* construct = app.add_subcommand("construct", "build a code and write its descriptor");
    construct->add_option("family", family, "code family (see 'families')");
    construct->add_option("params", pairs, "key=value parameters");
    construct->add_option("--field", field_text, "field order, e.g. 11 or 2^4");
    construct->add_option("--seed", seed, "seed for randomized families");
    construct->add_option("--spec", spec_path, "JSON spec {family, params, field, seed}");
    construct->add_option("-o,--output", output, "descriptor path (default stdout)");

    std::string descriptor;
    auto* verify = app.add_subcommand("verify", "re-certify a descriptor");
    verify->add_option("descriptor", descriptor)->required();

    auto* dmin = app.add_subcommand("dmin", "oracle minimum distance of a descriptor");
    dmin->add_option("descriptor", descriptor)->required();

    std::string bound_name;
    auto* bnd = app.add_subcommand("bounds", "evaluate a named bound");
    bnd->add_option("name", bound_name)->required();
    bnd->add_option("params", pairs, "key=value inputs");

    double gamma_K = 1, gamma_S = 1;
    auto* sim = app.add_subcommand("repair-sim", "single-failure repair sweep");
    sim->add_option("descriptor", descriptor)->required();
    sim->add_option("--gamma-k", gamma_K, "weight of repair bandwidth");
    sim->add_option("--gamma-s", gamma_S, "weight of storage overhead");

    std::vector<std::string> files;
    auto* cmp = app.add_subcommand("compare", "CSV comparison of descriptors");
    cmp->add_option("descriptors", files);
    cmp->add_option("--gamma-k", gamma_K, "weight of repair bandwidth");
    cmp->add_option("--gamma-s", gamma_S, "weight of storage overhead");
    cmp->add_option("-o,--output", output, "CSV path (default stdout)");

    auto* fams = app.add_subcommand("families", "list constructible families and their parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
        return kUsage;
    }
    OracleLimits::set_process_force(force);
    const OracleLimits lim = OracleLimits::from_env();

    try {
        if (fams->parsed()) {
            for (const auto& f : families()) {
                out << f.name;
                for (const auto& k : f.required) out << " " << k << "=";
                for (const auto& k : f.optional) out << " [" << k << "=]";
                out << "\n";
            }
            return kOk;
        }
        if (construct->parsed()) {
            ParamMap params = int_params(parse_pairs(pairs));
            if (!spec_path.empty()) {
                std::ifstream in(spec_path);
                if (!in) throw UsageError("cannot read " + spec_path);
                json s;
                try {
                    s = json::parse(in);
                    if (s.contains("family") && family.empty()) family = s.at("family").get<std::string>();
                    if (s.contains("params"))
                        for (const auto& [k, v] : s.at("params").items()) params.emplace(k, v.get<int64_t>());
                    if (s.contains("field") && field_text.empty())
                        field_text = s.at("field").is_string() ? s.at("field").get<std::string>()
                                                               : std::to_string(s.at("field").get<uint64_t>());
                    if (s.contains("seed")) seed = s.at("seed").get<uint64_t>();
                } catch (const json::exception& e) {
                    throw UsageError(std::string("bad spec file: ") + e.what());
                }
            }
            if (family.empty()) throw UsageError("construct needs a family");
            std::optional<Field> field;
            if (!field_text.empty()) field = parse_field(field_text);
            Construction c = build_family(family, params, field, seed);
            write_text(output, dump_descriptor(c), out);
            return kOk;
        }
        if (bnd->parsed()) {
            out << bound_json(bound_name, parse_pairs(pairs)).dump(2) << "\n";
            return kOk;
        }
        if (cmp->parsed()) {
            err << "weights: gamma_K=" << gamma_K << " gamma_S=" << gamma_S << "\n";
            std::string csv = csv_header();
            int status = kOk;
            for (const auto& f : files) {
                try {
                    csv += csv_row(repair_sweep(load_descriptor(f), gamma_K, gamma_S, 7, lim));
                } catch (const Error& e) {
                    err << "error: " << f << ": " << e.what() << "\n";
                    status = kFailed;
                }
            }
            write_text(output, csv, out);
            return status;
        }

        Construction c;
        try {
            c = load_descriptor(descriptor);
        } catch (const Error& e) {
            err << "error: " << e.what() << "\n";
            return kUsage;
        }
        if (dmin->parsed()) {
            const size_t d = min_distance(c.code, lim);
            out << d << "\n";
            const bool ok = c.claim_exact ? d == c.claimed_dmin : d <= c.claimed_dmin;
            if (!ok) {
                err << "mismatch: oracle d_min=" << d << ", descriptor claims " << c.claimed_dmin << "\n";
                return kFailed;
            }
            return kOk;
        }
        if (verify->parsed()) {
            Certificate cert = verify_construction(c, lim);
            out << cert.to_string();
            out << (cert.ok() ? "verified\n" : "verification FAILED\n");
            return cert.ok() ? kOk : kFailed;
        }
        if (sim->parsed()) {
            ComparisonRecord rec = repair_sweep(c, gamma_K, gamma_S, 7, lim);
            json j{{"record", record_json(rec)}, {"repairs", json::array()}};
            for (const auto& r : rec.repairs) j["repairs"].push_back(transcript_json(r));
            out << j.dump(2) << "\n";
            return kOk;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.code()) {
        case Errc::TooLarge:
        case Errc::Unrecoverable:
        case Errc::RepairFailed:
        case Errc::RepairUndefined:
        case Errc::ExhaustedAttempts:
        case Errc::StageOneFailed:
            return kFailed;
        default:
            return kUsage;
        }
    }
    return kUsage;
}

}  // namespace lrc
