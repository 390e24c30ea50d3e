#include "qlcft/error.hpp"

namespace qlcft {

LevelError::LevelError(std::int64_t prime, int configured, int required)
    : Error("truncation level " + std::to_string(configured) + " for prime " +
            std::to_string(prime) + " is insufficient; level " +
            std::to_string(required) + " required"),
      prime_(prime), configured_(configured), required_(required) {}

ZeroModuleError::ZeroModuleError(std::int64_t prime)
    : Error("generators span a submodule of infinite index at prime " +
            std::to_string(prime)) {}

} // namespace qlcft
