#pragma once

#include "ctk/region.hpp"

#include <random>

namespace ctk_test {

// Seeded generators so every run sees the same sample.
inline std::mt19937_64 make_rng(std::uint64_t salt = 0) {
  return std::mt19937_64(0xc7a05a11u + salt);
}

inline ctk::Scalar rand_rational(std::mt19937_64& rng, long num_span = 12,
                                 long den_max = 8) {
  const long num =
      static_cast<long>(rng() % static_cast<unsigned long>(2 * num_span + 1)) -
      num_span;
  const long den =
      static_cast<long>(rng() % static_cast<unsigned long>(den_max)) + 1;
  return ctk::Scalar(num, den);
}

inline ctk::Point rand_point(std::mt19937_64& rng) {
  return {rand_rational(rng), rand_rational(rng)};
}

// Random region expression tree of bounded depth over small rational
// anchors; exercises every node type.
inline ctk::Region rand_region(std::mt19937_64& rng, int depth = 3) {
  using ctk::Region;
  if (depth <= 0 || rng() % 3 == 0) {
    switch (rng() % 6) {
      case 0: return Region::all();
      case 1: return Region::empty();
      case 2: return Region::singleton(rand_point(rng));
      case 3: {
        ctk::Scalar r = rand_rational(rng, 4, 4);
        if (r <= 0) r = ctk::Scalar(1, 2);
        return Region::ball(rand_point(rng), r * r + 1);
      }
      default: {
        static const ctk::ConeKind kinds[] = {
            ctk::ConeKind::Time, ctk::ConeKind::Light, ctk::ConeKind::Space,
            ctk::ConeKind::Causal};
        const ctk::ConeKind kind = kinds[rng() % 4];
        ctk::Orientation orient;
        if (kind == ctk::ConeKind::Space) {
          static const ctk::Orientation os[] = {ctk::Orientation::Plus,
                                                ctk::Orientation::Minus,
                                                ctk::Orientation::Both};
          orient = os[rng() % 3];
        } else if (kind == ctk::ConeKind::Light) {
          static const ctk::Orientation os[] = {
              ctk::Orientation::Future, ctk::Orientation::Past,
              ctk::Orientation::Plus, ctk::Orientation::Minus,
              ctk::Orientation::Both};
          orient = os[rng() % 5];
        } else {
          static const ctk::Orientation os[] = {ctk::Orientation::Future,
                                                ctk::Orientation::Past,
                                                ctk::Orientation::Both};
          orient = os[rng() % 3];
        }
        return Region::cone({rand_point(rng), kind, orient, rng() % 2 == 0});
      }
    }
  }
  switch (rng() % 4) {
    case 0: return rand_region(rng, depth - 1) | rand_region(rng, depth - 1);
    case 1: return rand_region(rng, depth - 1) & rand_region(rng, depth - 1);
    case 2: return rand_region(rng, depth - 1) - rand_region(rng, depth - 1);
    default: return ~rand_region(rng, depth - 1);
  }
}

}  // namespace ctk_test
