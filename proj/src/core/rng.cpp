#include "depthadapt/core/rng.hpp"

#include <cmath>
#include <cstring>
#include <numbers>
#include <sstream>

#include "depthadapt/core/error.hpp"

namespace depthadapt {

namespace {
uint64_t fnv1a(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}
}  // namespace

Rng::Rng(uint64_t seed, std::string_view stream_id) : seed_(seed), stream_id_(stream_id) {
  const uint64_t sid = fnv1a(stream_id);
  std::seed_seq seq{
      static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
      static_cast<uint32_t>(sid),  static_cast<uint32_t>(sid >> 32),
  };
  engine_.seed(seq);
}

uint64_t Rng::next_u64() { return engine_(); }

double Rng::uniform() {
  // 53 high bits -> double in [0, 1).
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
  if (has_spare_normal_) {
    has_spare_normal_ = false;
    return spare_normal_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_normal_ = r * std::sin(theta);
  has_spare_normal_ = true;
  return r * std::cos(theta);
}

double Rng::normal(double mean, double stddev) { return mean + stddev * normal(); }

int64_t Rng::uniform_int(int64_t n) {
  if (n <= 0) throw ArgumentError("uniform_int: bound must be positive");
  const uint64_t un = static_cast<uint64_t>(n);
  const uint64_t limit = UINT64_MAX - UINT64_MAX % un;
  uint64_t x = next_u64();
  while (x >= limit) x = next_u64();
  return static_cast<int64_t>(x % un);
}

std::string Rng::state() const {
  std::ostringstream os;
  os << engine_ << " " << (has_spare_normal_ ? 1 : 0) << " ";
  // Bit-exact round trip for the cached normal.
  uint64_t bits;
  static_assert(sizeof(bits) == sizeof(spare_normal_));
  std::memcpy(&bits, &spare_normal_, sizeof(bits));
  os << bits;
  return os.str();
}

void Rng::set_state(const std::string& s) {
  std::istringstream in(s);
  in >> engine_;
  int spare_flag = 0;
  uint64_t bits = 0;
  in >> spare_flag >> bits;
  if (!in) throw IoError("Rng::set_state: malformed state string");
  has_spare_normal_ = spare_flag != 0;
  std::memcpy(&spare_normal_, &bits, sizeof(bits));
}

}  // namespace depthadapt
