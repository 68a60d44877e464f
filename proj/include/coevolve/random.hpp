#ifndef COEVOLVE_RANDOM_HPP
#define COEVOLVE_RANDOM_HPP

#include <cstdint>
#include <limits>

namespace coevolve {

// Small counter-based generator (SplitMix64 output function). Streams are
// addressed by (seed, key, counter) so that every process dimension owns an
// independent, reproducible substream no matter in which order the scheduler
// visits the dimensions.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(std::uint64_t seed) : state_(mix(seed)) {}

  // Substream for one (key, counter) pair under a master seed.
  static RandomStream substream(std::uint64_t seed, std::uint64_t key, std::uint64_t counter);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  // Uniform on the open interval (0, 1).
  double uniform();

  // Exponential waiting time with the given rate (> 0).
  double exponential(double rate);

  static std::uint64_t mix(std::uint64_t z);

 private:
  std::uint64_t state_;
};

}  // namespace coevolve

#endif  // COEVOLVE_RANDOM_HPP
