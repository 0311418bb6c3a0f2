#include "hiord/sobol.hpp"

#include <array>
#include <atomic>
#include <bit>
#include <vector>

#include "hiord/errors.hpp"

namespace hiord {

namespace {

// Joe–Kuo parameters (degree s, coefficient a, initial m_i) for dims 2..10
struct JoeKuoRow {
  int s;
  std::uint32_t a;
  std::array<std::uint32_t, 5> m;
};
constexpr std::array<JoeKuoRow, 9> kJoeKuo{{
    {1, 0, {1, 0, 0, 0, 0}},
    {2, 1, {1, 3, 0, 0, 0}},
    {3, 1, {1, 3, 1, 0, 0}},
    {3, 2, {1, 1, 1, 0, 0}},
    {4, 1, {1, 1, 3, 3, 0}},
    {4, 4, {1, 3, 5, 13, 0}},
    {5, 2, {1, 1, 5, 5, 17}},
    {5, 4, {1, 1, 5, 5, 5}},
    {5, 7, {1, 1, 7, 11, 19}},
}};

constexpr int kBits = 32;

std::atomic<std::uint64_t> g_multistart_seed{0};

}  // namespace

SobolSequence::SobolSequence(int dim) : dim_(dim) {
  if (dim < 1 || dim > static_cast<int>(kJoeKuo.size()) + 1)
    throw UnsupportedDimension("SobolSequence: dimension out of supported range");
  dirs_.resize(static_cast<std::size_t>(dim));
  state_.assign(static_cast<std::size_t>(dim), 0u);

  // first dimension: van der Corput in base 2
  for (int b = 0; b < kBits; ++b) dirs_[0][static_cast<std::size_t>(b)] = 1u << (31 - b);

  for (int d = 1; d < dim; ++d) {
    const JoeKuoRow& row = kJoeKuo[static_cast<std::size_t>(d - 1)];
    auto& v = dirs_[static_cast<std::size_t>(d)];
    const int s = row.s;
    std::array<std::uint32_t, 37> m{};
    for (int i = 0; i < s; ++i) m[static_cast<std::size_t>(i)] = row.m[static_cast<std::size_t>(i)];
    for (int i = s; i < kBits; ++i) {
      std::uint32_t mi = m[static_cast<std::size_t>(i - s)] ^ (m[static_cast<std::size_t>(i - s)] << s);
      for (int k = 1; k < s; ++k)
        if ((row.a >> (s - 1 - k)) & 1u) mi ^= m[static_cast<std::size_t>(i - k)] << k;
      m[static_cast<std::size_t>(i)] = mi;
    }
    for (int b = 0; b < kBits; ++b)
      v[static_cast<std::size_t>(b)] = m[static_cast<std::size_t>(b)] << (31 - b);
  }
}

Eigen::VectorXd SobolSequence::next() {
  // Gray-code update: flip the direction number of the lowest zero bit
  const std::uint64_t c = static_cast<std::uint64_t>(std::countr_one(index_));
  for (int d = 0; d < dim_; ++d)
    state_[static_cast<std::size_t>(d)] ^= dirs_[static_cast<std::size_t>(d)][static_cast<std::size_t>(c)];
  ++index_;
  Eigen::VectorXd p(dim_);
  for (int d = 0; d < dim_; ++d)
    p[d] = static_cast<double>(state_[static_cast<std::size_t>(d)]) / 4294967296.0;
  return p;
}

void SobolSequence::skip(std::uint64_t count) {
  for (std::uint64_t i = 0; i < count; ++i) next();
}

std::uint64_t multistart_seed() { return g_multistart_seed.load(); }
void set_multistart_seed(std::uint64_t seed) { g_multistart_seed.store(seed); }

}  // namespace hiord
