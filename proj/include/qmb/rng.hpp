#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace qmb {

// Counter-based deterministic random generator (Philox4x32-10).
//
// Stream semantics: a generator is identified by (seed, stream). Draws consume
// a single logical sequence, so two consecutive calls continue the stream: for
// a freshly seeded generator, gaussian_vector(3) followed by gaussian_vector(2)
// produces exactly the first five entries of gaussian_vector(5). Substreams
// derived with substream(id) are statistically independent of the parent and
// of each other; they are how parallel trials get their own randomness.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  // Independent stream keyed by (current stream, id).
  Rng substream(std::uint64_t id) const;

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  // Uniform on the open interval (0,1); 53-bit resolution.
  double uniform();

  // Standard normal via Box-Muller. Pairs are generated together and the
  // spare is cached, which keeps the stream-prefix property exact.
  double normal();

  // Uniform integer in [0, bound), bound >= 1; rejection sampling, no modulo bias.
  int uniform_int(int bound);

  // Raw Philox4x32-10 block (exposed for known-answer tests).
  static std::array<std::uint32_t, 4> philox_block(std::array<std::uint32_t, 4> counter,
                                                   std::array<std::uint32_t, 2> key);

 private:
  void refill();

  std::uint64_t seed_ = 0, stream_ = 0;
  std::uint64_t block_index_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  int buf_pos_ = 4;
  double spare_normal_ = 0.0;
  bool have_spare_ = false;
};

// Vector of dim i.i.d. standard normals drawn from rng's stream.
std::vector<double> gaussian_vector(int dim, Rng& rng);

}  // namespace qmb
