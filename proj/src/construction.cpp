#include "lrc/construction.hpp"

namespace lrc {

int64_t Construction::param(const std::string& key, int64_t fallback) const {
    for (const auto& [k, v] : params)
        if (k == key) return v;
    return fallback;
}

}  // namespace lrc
