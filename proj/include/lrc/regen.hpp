#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lrc/vector_code.hpp"

namespace lrc {

enum class RegenPoint { MSR, MBR, Other };
const char* to_string(RegenPoint p);

struct RegenParams {
    size_t n = 0, k = 0, d = 0;
    size_t alpha = 0, beta = 0;
    size_t B = 0;
    RegenPoint point = RegenPoint::Other;
};

// Checks the parameter invariants and fills in the point classification.
RegenParams make_regen_params(size_t n, size_t k, size_t d, size_t alpha, size_t beta, size_t B);

struct RegenCode {
    RegenParams params;
    VectorCode code;
    // projections[f][h] is the alpha x beta matrix helper h applies when node f
    // is repaired; empty when f == h.
    std::vector<std::vector<Matrix>> projections;
    // Repair-by-transfer codes: edge id stored at each position of each node.
    std::vector<std::vector<size_t>> edge_map;
    std::string provider;
};

struct RepairTranscript {
    size_t failed = 0;
    std::vector<size_t> helpers;
    std::vector<size_t> downloads;  // symbols per helper
    size_t total = 0;
    bool success = false;
    bool by_transfer = false;
    std::vector<uint32_t> recovered;
};

// Complete-graph layout: edges {i<j} numbered lexicographically; node v lists
// its incident edges ordered by the other endpoint.
std::vector<std::vector<size_t>> rbt_edge_map(size_t n_nodes);
// Rearranges one column per edge into n(n-1) node-ordered columns.
Matrix rbt_arrange(const Matrix& edge_columns, size_t n_nodes);

RegenCode rbt_mbr_construct(size_t n_nodes, size_t k, std::optional<Field> field = std::nullopt);
RepairTranscript rbt_repair(const RegenCode& code, size_t failed, const std::vector<uint32_t>& codeword);

RegenCode pm_msr_construct(size_t n, size_t k, size_t d, const Field& field, uint64_t seed = 1);
RegenCode trivial_msr(size_t n, size_t k, const Field& field);

std::vector<uint32_t> data_collect(const RegenCode& code, const std::vector<size_t>& nodes,
                                   const std::vector<uint32_t>& codeword);
RepairTranscript regen_repair(const RegenCode& code, size_t failed, const std::vector<size_t>& helpers,
                              const std::vector<uint32_t>& codeword);

// Restriction to a node subset larger than d, keeping the repair metadata.
RegenCode restrict_regen(const RegenCode& code, const std::vector<size_t>& nodes);

struct ContractReport {
    bool ok = true;
    size_t collections = 0;
    size_t repairs = 0;
    std::string failure;
};
// Exhaustive check: every k-subset collects, every (failed, d-subset) repairs exactly.
ContractReport check_regen_contracts(const RegenCode& code, uint64_t seed = 99);

std::vector<uint32_t> random_vector(const Field& f, size_t len, std::mt19937_64& rng);
Field smallest_field_at_least(uint64_t q);

}  // namespace lrc
