#include "torslab/wallchamber.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "torslab/stability.hpp"

namespace torslab {

namespace {

const char* const kPalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
                                "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#1f77b4", "#aec7e8",
                                "#ffbb78", "#98df8a", "#c5b0d5", "#c49c94", "#dbdb8d", "#9edae5"};
constexpr int kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

}  // namespace

WallChamberPicture wallchamber_svg(const Catalogue& cat, const MutationGraph& fan, const WallChamberOptions& o,
                                   Exec exec) {
  if (cat.algebra().num_vertices() != 2) throw std::invalid_argument("wallchamber: algebra must have two vertices");
  if (o.lo >= o.hi || o.resolution < 1 || o.cell < 1) throw std::invalid_argument("wallchamber: bad window");
  const int steps = (o.hi - o.lo) * o.resolution;
  std::vector<StabilityVector> thetas;
  for (int i = 0; i <= steps; ++i)
    for (int j = 0; j <= steps; ++j) {
      StabilityVector t;
      t.coords = {Rational(o.lo * o.resolution + i, o.resolution), Rational(o.lo * o.resolution + j, o.resolution)};
      thetas.push_back(std::move(t));
    }
  const auto quads = semistable_quadruples(thetas, cat, exec);

  std::map<std::pair<boost::dynamic_bitset<>, boost::dynamic_bitset<>>, int> region;
  std::vector<int> colour(thetas.size());
  for (size_t k = 0; k < thetas.size(); ++k) {
    auto key = std::make_pair(quads[k].T.members, quads[k].Tbar.members);
    auto it = region.emplace(key, static_cast<int>(region.size())).first;
    colour[k] = it->second;
  }

  const int side = (steps + 1) * o.cell;
  auto px = [&](double x) { return static_cast<long>(std::lround((x - o.lo) * o.resolution * o.cell + o.cell / 2.0)); };
  auto py = [&](double y) { return static_cast<long>(side - std::lround((y - o.lo) * o.resolution * o.cell + o.cell / 2.0)); };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side << "\" viewBox=\"0 0 "
    << side << ' ' << side << "\">\n";
  s << "<rect width=\"" << side << "\" height=\"" << side << "\" fill=\"#ffffff\"/>\n";
  s << "<g stroke=\"none\">\n";
  for (size_t k = 0; k < thetas.size(); ++k) {
    const int i = static_cast<int>(k) / (steps + 1), j = static_cast<int>(k) % (steps + 1);
    s << "<rect x=\"" << i * o.cell << "\" y=\"" << side - (j + 1) * o.cell << "\" width=\"" << o.cell
      << "\" height=\"" << o.cell << "\" fill=\"" << kPalette[colour[k] % kPaletteSize] << "\"/>\n";
  }
  s << "</g>\n";

  std::set<IntVector> rays;
  for (const auto& v : fan.vertices)
    for (const auto& g : v.g_vectors) rays.insert(g);
  const double ox = 0.0, oy = 0.0;
  s << "<g stroke=\"#000000\" stroke-width=\"1\">\n";
  for (const auto& r : rays) {
    double t = 1e18;
    const double lim[2][2] = {{double(o.lo), double(o.hi)}, {double(o.lo), double(o.hi)}};
    for (int c = 0; c < 2; ++c) {
      if (r[c] > 0) t = std::min(t, lim[c][1] / r[c]);
      if (r[c] < 0) t = std::min(t, lim[c][0] / r[c]);
    }
    if (!(t > 0) || t >= 1e18) continue;
    s << "<line x1=\"" << px(ox) << "\" y1=\"" << py(oy) << "\" x2=\"" << px(t * r[0]) << "\" y2=\"" << py(t * r[1])
      << "\" data-ray=\"" << r[0] << ',' << r[1] << "\"/>\n";
  }
  s << "</g>\n</svg>\n";
  return {s.str(), static_cast<int>(thetas.size()), static_cast<int>(region.size())};
}

}  // namespace torslab
