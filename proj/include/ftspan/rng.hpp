// Seeded random helpers. All sampling goes through these wrappers so that a
// fixed seed reproduces byte-identical artifacts across runs.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace ftspan {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1); implemented directly so the mapping from engine
  // output to double is fixed, not library-defined.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }

  // Lomax / Pareto-II with support [0, inf).
  double pareto(double scale, double alpha) {
    double u = uniform01();
    if (u >= 1.0) u = std::nextafter(1.0, 0.0);
    return scale * (std::pow(1.0 - u, -1.0 / alpha) - 1.0);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = engine_() % i;
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ftspan
