#include "adgibbs/state.hpp"

#include <cmath>

#include "adgibbs/errors.hpp"

namespace adgibbs {

void check_state(const SpaceDescriptor& space, const ProductState& state) {
  if (space.dimension() != state.dimension()) {
    throw Error(ErrorKind::DimensionMismatch,
                "state dimension does not match space descriptor");
  }
  for (int i = 0; i < space.dimension(); ++i) {
    const Axis& ax = space.axes[i];
    const double v = state.coords[i];
    if (ax.kind != AxisKind::RealLine && v != std::floor(v)) {
      throw Error(ErrorKind::BadArgument, "integer axis holds non-integer value");
    }
    if (ax.kind == AxisKind::FiniteRangeInt &&
        (v < static_cast<double>(ax.lo) || v > static_cast<double>(ax.hi))) {
      throw Error(ErrorKind::BadArgument, "value outside declared axis range");
    }
  }
}

}  // namespace adgibbs
