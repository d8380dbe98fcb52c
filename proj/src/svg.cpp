#include "tiltcell/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "tiltcell/errors.hpp"

namespace tiltcell {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

// fixed palette, cycled
const char* kColors[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1",
                         "#edc948", "#76b7b2", "#ff9da7", "#9c755f", "#bab0ac"};

}  // namespace

std::string svg_alcoves(const AffineGroup& g, const std::vector<WfRep>& alcoves,
                        const std::vector<int>& class_of,
                        const std::vector<std::string>& class_names) {
  if (g.rank() != 2) throw ConfigError("alcove pictures are only drawn for rank 2");
  require(class_of.size() == alcoves.size(), "class vector size mismatch");
  const RootSystem& rs = g.root_system();
  int n = 2;

  // Gram matrix of the fundamental weights: B = D A^{-1} transposed entries
  double det = static_cast<double>(rs.cartan_det);
  double ainv[2][2] = {{rs.cartan_adjugate[0] / det, rs.cartan_adjugate[1] / det},
                       {rs.cartan_adjugate[2] / det, rs.cartan_adjugate[3] / det}};
  double B[2][2];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) B[i][j] = static_cast<double>(rs.symmetrizer[j]) * ainv[j][i];
  // embed weight coordinates into the Euclidean plane
  double e1x = std::sqrt(B[0][0]);
  double e2x = B[0][1] / e1x;
  double e2y = std::sqrt(std::max(0.0, B[1][1] - e2x * e2x));
  auto embed = [&](double c1, double c2) {
    return std::pair<double, double>{c1 * e1x + c2 * e2x, c2 * e2y};
  };

  // vertices of the fundamental alcove in the lambda+rho plane
  const Vec& tcv = rs.coroots[rs.highest_short_root];
  double l = static_cast<double>(g.level());
  double verts[3][2] = {{0, 0}, {l / tcv[0], 0}, {0, l / tcv[1]}};

  struct Poly {
    double pts[3][2];
    int cls;
  };
  std::vector<Poly> polys;
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  for (size_t i = 0; i < alcoves.size(); ++i) {
    const AffineElement& w = alcoves[i].elem;
    Poly poly;
    poly.cls = class_of[i];
    Vec twc = rs.root_to_weight(w.t);
    const Mat& m = rs.wf.matrix(w.u);
    for (int v = 0; v < 3; ++v) {
      double c1 = m[0] * verts[v][0] + m[1] * verts[v][1] + l * twc[0];
      double c2 = m[2] * verts[v][0] + m[3] * verts[v][1] + l * twc[1];
      auto [x, y] = embed(c1, c2);
      poly.pts[v][0] = x;
      poly.pts[v][1] = -y;  // svg y grows downward
      minx = std::min(minx, x);
      maxx = std::max(maxx, x);
      miny = std::min(miny, -y);
      maxy = std::max(maxy, -y);
    }
    polys.push_back(poly);
  }

  double pad = 1.0;
  double legend_w = class_names.empty() ? 0.0 : 10.0;
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt(minx - pad) + " " +
         fmt(miny - pad) + " " + fmt(maxx - minx + 2 * pad + legend_w) + " " +
         fmt(maxy - miny + 2 * pad) + "\">\n";
  for (const auto& poly : polys) {
    const char* color = kColors[poly.cls % (sizeof kColors / sizeof *kColors)];
    out += "  <polygon points=\"";
    for (int v = 0; v < 3; ++v) {
      if (v) out += " ";
      out += fmt(poly.pts[v][0]) + "," + fmt(poly.pts[v][1]);
    }
    out += "\" fill=\"" + std::string(color) + "\" stroke=\"#222\" stroke-width=\"0.05\"/>\n";
  }
  double ly = miny;
  for (size_t c = 0; c < class_names.size(); ++c) {
    const char* color = kColors[c % (sizeof kColors / sizeof *kColors)];
    out += "  <rect x=\"" + fmt(maxx + pad) + "\" y=\"" + fmt(ly) +
           "\" width=\"1.2\" height=\"1.2\" fill=\"" + color + "\"/>\n";
    out += "  <text x=\"" + fmt(maxx + pad + 1.6) + "\" y=\"" + fmt(ly + 1.0) +
           "\" font-size=\"1.1\">" + class_names[c] + "</text>\n";
    ly += 1.8;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace tiltcell
