#pragma once

#include <optional>
#include <string>

#include "wright/gamma.hpp"

namespace wright {

enum class Region { FullDisk, HalfDisk };

/// A geometric property paired with the disk it is asserted on.
struct PropertyRegion {
  enum class Kind {
    StarlikeDisk,    // Re(z f'/f) > 0 on the region
    StarlikeOrder,   // Re(z f'/f) > eta
    StarlikeHalf,    // starlike on |z| < 1/2
    ConvexHalf,      // Re(1 + z f''/f') > 0 on |z| < 1/2
    Ucv,             // uniformly convex
    SpClass,         // |z f'/f - 1| < 1/2 class
    CloseToConvex,   // Re(z f'/g) > 0 for a starlike witness g
    HalfPlaneRe,     // Re(series) > 1/2
  };
  Kind kind = Kind::StarlikeDisk;
  Region region = Region::FullDisk;
  double eta = 0.0;                      // StarlikeOrder only
  std::optional<WrightParams> witness;   // CloseToConvex only

  std::string describe() const;
  double region_radius() const { return region == Region::FullDisk ? 1.0 : 0.5; }
};

}  // namespace wright
