#ifndef GWIDTH_VERSION_HPP
#define GWIDTH_VERSION_HPP

namespace gwidth {

inline constexpr const char* kToolName = "gwidth";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace gwidth

#endif // GWIDTH_VERSION_HPP
