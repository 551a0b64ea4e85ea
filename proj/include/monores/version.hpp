#ifndef MONORES_VERSION_HPP
#define MONORES_VERSION_HPP

namespace monores {

inline constexpr const char* kToolName = "monores";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace monores

#endif  // MONORES_VERSION_HPP
