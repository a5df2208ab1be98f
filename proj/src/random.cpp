#include "dreg/random.hpp"

namespace dreg {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> labels) {
  std::uint64_t h = splitmix(seed);
  for (auto l : labels) h = splitmix(h ^ splitmix(l + 0x632be59bd9b4e019ULL));
  return h;
}

std::int64_t Rng::integer(std::int64_t lo, std::int64_t hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

Rational Rng::rational(std::int64_t height) {
  Rational r(Integer(static_cast<long>(integer(-height, height))),
             Integer(static_cast<long>(integer(1, height))));
  r.canonicalize();
  return r;
}

}  // namespace dreg
