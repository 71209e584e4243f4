#ifndef SATWALK_VERSION_HPP
#define SATWALK_VERSION_HPP

namespace satwalk {

inline constexpr const char *version = "1.0.0";

} // namespace satwalk

#endif
