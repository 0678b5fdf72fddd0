#pragma once

#include <ostream>

namespace slicereg::figures {

struct GridSpec {
  int n{100};          // cells per axis
  double bound{1.5};   // the grid covers [-bound, bound] on every axis
};

// Parabola, paraboloid and the sphere f(S/2) in the 3-space x3 = 0 containing
// the parabola, as "x,y,z,label" rows with (x, y, z) = (x0, x1, x2).  Both
// surfaces are invariant under rotations of the (x2, x3) plane, so this slice
// shows their full profile.
void write_fig1(std::ostream& out, int samples);

// Centers of the grid cells on which K(x, y, z, 1/4) changes sign, "x,y,z".
void write_fig2(std::ostream& out, const GridSpec& grid);

// Fiber class at the (n + 1)^4 nodes of a 4-dimensional grid, "x0,x1,x2,x3,class".
void write_fiber_scan(std::ostream& out, const GridSpec& grid);

}  // namespace slicereg::figures
