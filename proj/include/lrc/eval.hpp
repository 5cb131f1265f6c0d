#pragma once

#include <string>
#include <vector>

#include "lrc/construction.hpp"
#include "lrc/oracle.hpp"

namespace lrc {

// Single-failure repair policies, tried in this order.
enum class RepairPolicy { Regenerating, LocalRegenerating, LocalDecode, Reconstruct };
const char* to_string(RepairPolicy p);

struct NodeRepair {
    size_t node = 0;
    RepairPolicy policy = RepairPolicy::Reconstruct;
    RepairTranscript transcript;  // helper indices are global node indices
};

struct ComparisonRecord {
    std::string family;
    size_t n = 0, K = 0, alpha = 0, dmin = 0;
    double omega_bar = 0;  // average download per failure, in symbols
    double Omega = 0;      // storage overhead n alpha / K
    double xi = 0;         // normalized repair bandwidth n omega_bar / K
    size_t h = 0;          // repair degree
    double gamma_K = 1, gamma_S = 1;
    double cost = 0;
    std::vector<NodeRepair> repairs;
};

// Repairs every node once against a seeded random codeword.
ComparisonRecord repair_sweep(const Construction& c, double gamma_K, double gamma_S, uint64_t seed = 7,
                              const OracleLimits& lim = OracleLimits::from_env());

double repair_cost(double xi, double Omega, double gamma_K, double gamma_S);

std::string csv_header();
std::string csv_row(const ComparisonRecord& r);
std::string compare_csv(const std::vector<Construction>& codes, double gamma_K, double gamma_S,
                        const OracleLimits& lim = OracleLimits::from_env());

}  // namespace lrc
