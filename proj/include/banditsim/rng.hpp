#pragma once

#include <cstdint>

namespace banditsim {

// Which side of the game loop a stream feeds. Env and agent never share a
// stream within a run, so a policy's draw pattern cannot perturb the
// environment trajectory.
enum class StreamRole : std::uint64_t { env = 1, agent = 2 };

// Counter-based deterministic generator (splitmix64): the state walks a
// fixed odd stride and each output is a bijective mix of the state. A
// stream is keyed by (master_seed, run_index, role), so any run of an
// ensemble can be replayed in isolation and results are independent of
// thread scheduling.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t run_index, StreamRole role);

  std::uint64_t next_u64();

  // Uniform on [0, 1), 53-bit resolution.
  double next_double();

  // Uniform on (0, 1]; safe to feed into log().
  double next_double_pos();

  // Unbiased uniform integer on [0, n), n >= 1.
  std::uint64_t next_below(std::uint64_t n);

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t run_index() const { return run_index_; }
  StreamRole role() const { return role_; }

 private:
  std::uint64_t state_;
  std::uint64_t master_seed_;
  std::uint64_t run_index_;
  StreamRole role_;
};

RngStream derive_stream(std::uint64_t master_seed, std::uint64_t run_index, StreamRole role);

// 64-bit finalizer used for stream keying and sweep-cell seed derivation.
std::uint64_t mix64(std::uint64_t x);

// One Bernoulli(p) draw; consumes exactly one value from the stream.
int sample_bernoulli(RngStream& rng, double p);

// Standard normal via Box-Muller; consumes exactly two values.
double sample_normal(RngStream& rng);

// Gamma(shape, 1) via Marsaglia-Tsang rejection (shape boost below 1).
double sample_gamma(RngStream& rng, double shape);

// Beta(a, b) as the ratio of two Gamma draws; result lies in (0, 1).
double sample_beta(RngStream& rng, double a, double b);

}  // namespace banditsim
