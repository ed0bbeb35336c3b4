#include "wright/property.hpp"

#include <sstream>

namespace wright {

std::string PropertyRegion::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::StarlikeDisk: os << "starlike in the unit disk"; break;
    case Kind::StarlikeOrder: os << "starlike of order " << eta << " in the unit disk"; break;
    case Kind::StarlikeHalf: os << "starlike in the half disk"; break;
    case Kind::ConvexHalf: os << "convex in the half disk"; break;
    case Kind::Ucv: os << "uniformly convex"; break;
    case Kind::SpClass: os << "in the S_p class"; break;
    case Kind::CloseToConvex: os << "close-to-convex"; break;
    case Kind::HalfPlaneRe: os << "real part above 1/2 on the unit disk"; break;
  }
  return os.str();
}

}  // namespace wright
