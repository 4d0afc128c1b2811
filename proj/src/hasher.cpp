#include "zhash/hasher.hpp"

#include "zhash/error.hpp"

namespace zhash {

RandomOracle::RandomOracle(unsigned d, std::uint64_t range, std::uint64_t seed)
    : d_(d), range_(range), seed_(mix64(seed ^ 0x243f6a8885a308d3ULL)) {
    if (d_ < 1) throw ParameterError("RandomOracle: d must be >= 1");
    if (range_ < 1) throw ParameterError("RandomOracle: range must be >= 1");
}

}  // namespace zhash
