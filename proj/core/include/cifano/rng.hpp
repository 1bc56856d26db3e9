#pragma once

#include <cstdint>

#include "cifano/field.hpp"

namespace cifano {

/// Deterministic splitmix64 stream. All randomized choices in the toolkit
/// flow through one of these, so a (seed, label) pair pins every output
/// byte-for-byte across platforms.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = ~0ull - (~0ull % bound + 1) % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x > limit);
    return x % bound;
  }

  /// Independent substream labelled by a constant; forking never
  /// disturbs the parent stream.
  SeededRng fork(std::uint64_t label) const {
    SeededRng child(state_ ^ (0x6a09e667f3bcc909ull + label * 0x9e3779b97f4a7c15ull));
    child.next();
    return child;
  }

  /// Uniform residue over GF(p); over the rationals a small integer in
  /// [-span, span].
  FieldScalar uniform_scalar(const Field& f, long long span = 20) {
    if (f.is_rationals()) {
      return f.integer(static_cast<long long>(below(2 * static_cast<std::uint64_t>(span) + 1)) - span);
    }
    return f.integer(static_cast<long long>(below(f.characteristic())));
  }

  FieldScalar nonzero_scalar(const Field& f, long long span = 20) {
    for (;;) {
      FieldScalar s = uniform_scalar(f, span);
      if (!s.is_zero()) return s;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace cifano
