#ifndef PPC_RNG_HPP
#define PPC_RNG_HPP

#include <cstdint>
#include <random>

namespace ppc {

/// splitmix64 step; used to derive independent per-task seeds from a master
/// seed by counter, so adding replications never perturbs earlier ones.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 1));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() { return std::generate_canonical<double, 53>(gen_); }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  int poisson(double mean) {
    std::poisson_distribution<int> d(mean);
    return d(gen_);
  }
  std::size_t index(std::size_t n) {
    std::uniform_int_distribution<std::size_t> d(0, n - 1);
    return d(gen_);
  }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace ppc

#endif  // PPC_RNG_HPP
