#ifndef OPTSAT_VERSION_HPP
#define OPTSAT_VERSION_HPP

namespace optsat {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace optsat

#endif  // OPTSAT_VERSION_HPP
