#include "coevolve/random.hpp"

#include <cmath>

namespace coevolve {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t RandomStream::mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

RandomStream RandomStream::substream(std::uint64_t seed, std::uint64_t key, std::uint64_t counter) {
  std::uint64_t h = mix(seed + kGolden);
  h = mix(h ^ (key + 0x632BE59BD9B4E019ULL));
  h = mix(h ^ (counter + 0x8CB92BA72F3D8DD7ULL));
  RandomStream stream(0);
  stream.state_ = h;
  return stream;
}

RandomStream::result_type RandomStream::operator()() {
  state_ += kGolden;
  return mix(state_);
}

double RandomStream::uniform() {
  // 53 random bits, shifted off zero.
  return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomStream::exponential(double rate) { return -std::log(uniform()) / rate; }

}  // namespace coevolve
