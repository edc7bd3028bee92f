#include "banditsim/rng.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace banditsim {

namespace {

constexpr std::uint64_t kStride = 0x9E3779B97F4A7C15ull;

std::uint64_t finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) { return finalize(x + kStride); }

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t run_index, StreamRole role)
    : master_seed_(master_seed), run_index_(run_index), role_(role) {
  // Hash the key triple into the initial counter so distinct runs and roles
  // land in unrelated regions of the output sequence.
  std::uint64_t h = mix64(master_seed);
  h = mix64(h ^ (run_index * 0xD6E8FEB86659FD93ull + 0x2545F4914F6CDD1Dull));
  h = mix64(h ^ (static_cast<std::uint64_t>(role) * 0x9FB21C651E98DF25ull + 1ull));
  state_ = h;
}

RngStream derive_stream(std::uint64_t master_seed, std::uint64_t run_index, StreamRole role) {
  return RngStream(master_seed, run_index, role);
}

std::uint64_t RngStream::next_u64() {
  state_ += kStride;
  return finalize(state_);
}

double RngStream::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_double_pos() {
  return static_cast<double>((next_u64() >> 11) + 1ull) * 0x1.0p-53;
}

std::uint64_t RngStream::next_below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("next_below: n must be positive");
  // Rejection below 2^64 mod n keeps the modulus unbiased. For the arm
  // counts used here the rejection probability is ~n/2^64.
  const std::uint64_t min = (0ull - n) % n;
  std::uint64_t r = next_u64();
  while (r < min) r = next_u64();
  return r % n;
}

int sample_bernoulli(RngStream& rng, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("sample_bernoulli: p must lie in [0, 1]");
  return rng.next_double() < p ? 1 : 0;
}

double sample_normal(RngStream& rng) {
  const double u1 = rng.next_double_pos();
  const double u2 = rng.next_double();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double sample_gamma(RngStream& rng, double shape) {
  if (!(shape > 0.0)) throw std::domain_error("sample_gamma: shape must be positive");
  if (shape < 1.0) {
    // Shape boost: Gamma(a) = Gamma(a+1) * U^(1/a).
    const double u = rng.next_double_pos();
    return sample_gamma(rng, shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = sample_normal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.next_double_pos();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double sample_beta(RngStream& rng, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("sample_beta: shape parameters must be positive");
  const double x = sample_gamma(rng, a);
  const double y = sample_gamma(rng, b);
  double r = x / (x + y);
  // Keep the draw strictly inside (0, 1) even if a gamma draw underflows.
  if (!(r > 0.0)) r = std::numeric_limits<double>::min();
  if (!(r < 1.0)) r = 1.0 - std::numeric_limits<double>::epsilon() / 2.0;
  return r;
}

}  // namespace banditsim
