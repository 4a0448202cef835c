#pragma once

#include <string>

#include "torslab/catalogue.hpp"
#include "torslab/kernels.hpp"
#include "torslab/silting.hpp"

namespace torslab {

struct WallChamberOptions {
  int lo = -5, hi = 5;
  int resolution = 4;  // samples per unit
  int cell = 6;        // pixels per sample
};

struct WallChamberPicture {
  std::string svg;
  int samples = 0;
  int regions = 0;  // distinct (T, Tbar) pairs seen
};

/// Rank-2 picture: grid samples coloured by (T_theta, Tbar_theta) in the window, fan rays on top.
/// Throws invalid_argument unless the algebra has two vertices.
WallChamberPicture wallchamber_svg(const Catalogue& cat, const MutationGraph& fan, const WallChamberOptions& o,
                                   Exec exec = Exec::Parallel);

}  // namespace torslab
