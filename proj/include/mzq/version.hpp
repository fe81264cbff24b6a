#ifndef MZQ_VERSION_HPP
#define MZQ_VERSION_HPP

namespace mzq {

inline constexpr const char* kVersion = "0.1.0";

} // namespace mzq

#endif
