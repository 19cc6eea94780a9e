#include "catmaj/majorization.hpp"

namespace catmaj {

const char* to_string(Relation r) {
  switch (r) {
    case Relation::XMajorizedByY: return "XMajorizedByY";
    case Relation::YMajorizedByX: return "YMajorizedByX";
    case Relation::Equal: return "Equal";
    case Relation::Incomparable: return "Incomparable";
  }
  return "Unknown";
}

}  // namespace catmaj
