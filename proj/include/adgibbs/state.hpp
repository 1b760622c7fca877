#pragma once

#include <cstdint>
#include <vector>

namespace adgibbs {

enum class AxisKind {
  IntegerLattice,   // unbounded integers
  FiniteRangeInt,   // integers in [lo, hi]
  RealLine,
};

struct Axis {
  AxisKind kind = AxisKind::RealLine;
  long lo = 0;  // FiniteRangeInt only
  long hi = 0;
};

struct SpaceDescriptor {
  std::vector<Axis> axes;
  int dimension() const { return static_cast<int>(axes.size()); }
};

/// A point of a product space X_1 x ... x X_d. Integer axes store their
/// value as an exactly-representable double.
struct ProductState {
  std::vector<double> coords;

  int dimension() const { return static_cast<int>(coords.size()); }

  ProductState with_coord(int i, double value) const {
    ProductState out = *this;
    out.coords[i] = value;
    return out;
  }

  bool operator==(const ProductState& other) const {
    return coords == other.coords;
  }
};

/// Checks dimension and finite-range bounds; throws on violation.
void check_state(const SpaceDescriptor& space, const ProductState& state);

}  // namespace adgibbs
