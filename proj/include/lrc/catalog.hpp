#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lrc/construction.hpp"

namespace lrc {

using ParamMap = std::map<std::string, int64_t>;

struct FamilyInfo {
    std::string name;
    std::vector<std::string> required;
    std::vector<std::string> optional;
};
const std::vector<FamilyInfo>& families();

// Builds any supported family from integer parameters. Field defaults to
// GF(257) except for rbt_mbr, which picks the smallest adequate field.
// "stack_alpha" > 1 stacks a scalar result.
Construction build_family(const std::string& family, const ParamMap& params, std::optional<Field> field,
                          uint64_t seed = 1);

// Parses "7", "2^4" or "16" (prime powers written out).
Field parse_field(const std::string& text);

Construction rs_construction(size_t n, size_t k, const Field& field);
Construction regen_construction(RegenCode rc, std::string family);

}  // namespace lrc
