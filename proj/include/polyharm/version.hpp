#ifndef POLYHARM_VERSION_HPP
#define POLYHARM_VERSION_HPP

#include <string>

#ifndef POLYHARM_BUILD_HASH
#define POLYHARM_BUILD_HASH "unknown"
#endif

namespace polyharm {

inline constexpr const char* kVersion = "1.0.0";

inline std::string version_string() {
    return std::string(kVersion) + "+" + POLYHARM_BUILD_HASH;
}

} // namespace polyharm

#endif
