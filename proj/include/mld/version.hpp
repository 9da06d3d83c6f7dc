#ifndef MLD_VERSION_HPP
#define MLD_VERSION_HPP

namespace mld {

inline constexpr const char* kToolName = "newton-mld";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace mld

#endif
