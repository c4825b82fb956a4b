#include "cellres/render.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cellres/monomial.hpp"

namespace cellres {

namespace {

double to_d(const Rat& r) { return r.get_d(); }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

struct Pt {
  double x = 0, y = 0;
};

// Geometric endpoints of an edge cell: each incidence points at a vertex
// orbit representative plus an explicit lattice shift.
std::vector<std::pair<Pt, int>> edge_ends(const QuotientComplex& qc, int edge) {
  std::vector<std::pair<Pt, int>> out;
  for (const QuotientIncidence& inc : qc.incidence) {
    if (inc.from != edge) continue;
    const QuotientCell& v = qc.cells[inc.to];
    Pt p;
    p.x = to_d(v.rep[0]) + inc.shift[0].get_d();
    if (v.rep.size() > 1) p.y = to_d(v.rep[1]) + inc.shift[1].get_d();
    out.push_back({p, inc.sign});
  }
  return out;
}

std::string svg_rank2(const QuotientComplex& qc) {
  const IntMat& A = qc.translation.basis;
  // Corners of the half-open fundamental domain, in lattice coordinates.
  std::vector<Pt> corners;
  for (double sx : {-0.5, 0.5})
    for (double sy : {-0.5, 0.5})
      corners.push_back({A.at(0, 0).get_d() * sx + A.at(0, 1).get_d() * sy,
                         A.at(1, 0).get_d() * sx + A.at(1, 1).get_d() * sy});
  std::swap(corners[2], corners[3]);  // outline order

  double x0 = corners[0].x, x1 = corners[0].x, y0 = corners[0].y, y1 = corners[0].y;
  auto grow = [&](const Pt& p) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  };
  for (const Pt& c : corners) grow(c);
  for (const QuotientCell& c : qc.cells)
    if (c.dim == 1)
      for (const auto& [p, sign] : edge_ends(qc, c.id)) grow(p);
  x0 -= 0.6;
  y0 -= 0.6;
  x1 += 0.6;
  y1 += 0.6;

  const double scale = 110, margin = 30;
  double w = (x1 - x0) * scale + 2 * margin, h = (y1 - y0) * scale + 2 * margin;
  auto px = [&](const Pt& p) -> Pt {
    return {margin + (p.x - x0) * scale, margin + (y1 - p.y) * scale};
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\""
      << num(h) << "\" viewBox=\"0 0 " << num(w) << " " << num(h) << "\">\n";
  svg << "<defs><marker id=\"arr\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"3\" "
         "orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\" fill=\"#333\"/></marker></defs>\n";
  svg << "<rect width=\"" << num(w) << "\" height=\"" << num(h) << "\" fill=\"white\"/>\n";

  svg << "<g class=\"domain\"><path d=\"";
  for (size_t k = 0; k < corners.size(); ++k) {
    Pt p = px(corners[k]);
    svg << (k == 0 ? "M" : "L") << num(p.x) << "," << num(p.y) << " ";
  }
  svg << "Z\" fill=\"#f5f3ee\" stroke=\"#999\" stroke-dasharray=\"5,4\"/></g>\n";

  // Hyperplane traces b_i . t = j - eps_i crossing the view box.
  svg << "<g class=\"traces\" stroke-width=\"1\">\n";
  int nfam = qc.spec.B.rows;
  for (int i = 0; i < nfam; ++i) {
    double b1 = qc.spec.B.at(i, 0).get_d(), b2 = qc.spec.B.at(i, 1).get_d();
    double e = to_d(qc.spec.epsilon[i]);
    double cmin = 1e18, cmax = -1e18;
    for (double cx : {x0, x1})
      for (double cy : {y0, y1}) {
        cmin = std::min(cmin, b1 * cx + b2 * cy);
        cmax = std::max(cmax, b1 * cx + b2 * cy);
      }
    int hue = nfam > 0 ? (360 * i) / nfam : 0;
    for (long j = static_cast<long>(std::ceil(cmin + e)); j <= static_cast<long>(std::floor(cmax + e)); ++j) {
      double c = static_cast<double>(j) - e;
      std::vector<Pt> hits;
      auto keep = [&](double x, double y) {
        if (x >= x0 - 1e-9 && x <= x1 + 1e-9 && y >= y0 - 1e-9 && y <= y1 + 1e-9)
          hits.push_back({x, y});
      };
      if (b2 != 0) {
        keep(x0, (c - b1 * x0) / b2);
        keep(x1, (c - b1 * x1) / b2);
      }
      if (b1 != 0) {
        keep((c - b2 * y0) / b1, y0);
        keep((c - b2 * y1) / b1, y1);
      }
      if (hits.size() < 2) continue;
      size_t lo = 0, hi = 0;
      for (size_t k = 1; k < hits.size(); ++k) {
        auto key = [&](const Pt& p) { return -b2 * p.x + b1 * p.y; };
        if (key(hits[k]) < key(hits[lo])) lo = k;
        if (key(hits[k]) > key(hits[hi])) hi = k;
      }
      Pt p = px(hits[lo]), q = px(hits[hi]);
      svg << "<line class=\"trace\" x1=\"" << num(p.x) << "\" y1=\"" << num(p.y) << "\" x2=\""
          << num(q.x) << "\" y2=\"" << num(q.y) << "\" stroke=\"hsl(" << hue
          << ",65%,55%)\"/>\n";
    }
  }
  svg << "</g>\n";

  svg << "<g class=\"edges\" stroke=\"#333\" stroke-width=\"2\">\n";
  for (const QuotientCell& c : qc.cells) {
    if (c.dim != 1) continue;
    auto ends = edge_ends(qc, c.id);
    if (ends.size() != 2) continue;
    Pt tail = ends[0].second < 0 ? ends[0].first : ends[1].first;
    Pt head = ends[0].second < 0 ? ends[1].first : ends[0].first;
    Pt a = px(tail), b = px(head);
    svg << "<line class=\"edge\" x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\""
        << num(b.x) << "\" y2=\"" << num(b.y) << "\" marker-end=\"url(#arr)\"/>\n";
    Pt mid{0.75 * a.x + 0.25 * b.x, 0.75 * a.y + 0.25 * b.y};
    Pt mid2{0.25 * a.x + 0.75 * b.x, 0.25 * a.y + 0.75 * b.y};
    svg << "<text class=\"sign\" x=\"" << num(mid.x + 4) << "\" y=\"" << num(mid.y - 4)
        << "\" font-size=\"10\" stroke=\"none\" fill=\"#777\">-</text>\n";
    svg << "<text class=\"sign\" x=\"" << num(mid2.x + 4) << "\" y=\"" << num(mid2.y - 4)
        << "\" font-size=\"10\" stroke=\"none\" fill=\"#777\">+</text>\n";
  }
  svg << "</g>\n";

  svg << "<g class=\"vertices\" font-size=\"11\" font-family=\"monospace\">\n";
  for (const QuotientCell& c : qc.cells) {
    if (c.dim != 0) continue;
    Pt p = px({to_d(c.rep[0]), to_d(c.rep[1])});
    svg << "<circle class=\"vertex\" cx=\"" << num(p.x) << "\" cy=\"" << num(p.y)
        << "\" r=\"4\" fill=\"#222\"/>\n";
    svg << "<text x=\"" << num(p.x + 7) << "\" y=\"" << num(p.y - 7) << "\" fill=\"#222\">"
        << monomial_str(c.label, qc.n) << "</text>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

std::string svg_rank1(const QuotientComplex& qc) {
  double period = qc.translation.basis.at(0, 0).get_d();
  const double cx = 230, cy = 230, R = 150;
  auto angle = [&](double pos) {
    double frac = (pos + period / 2) / period;
    frac -= std::floor(frac);
    return 2 * M_PI * frac - M_PI / 2;
  };
  auto at = [&](double pos, double r) -> Pt {
    double t = angle(pos);
    return {cx + r * std::cos(t), cy + r * std::sin(t)};
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"460\" height=\"460\" "
         "viewBox=\"0 0 460 460\">\n";
  svg << "<defs><marker id=\"arr\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"3\" "
         "orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\" fill=\"#333\"/></marker></defs>\n";
  svg << "<rect width=\"460\" height=\"460\" fill=\"white\"/>\n";
  svg << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << num(R)
      << "\" fill=\"none\" stroke=\"#ddd\"/>\n";

  svg << "<g class=\"edges\" stroke=\"#333\" stroke-width=\"2\">\n";
  for (const QuotientCell& c : qc.cells) {
    if (c.dim != 1) continue;
    auto ends = edge_ends(qc, c.id);
    if (ends.size() != 2) continue;
    double tail = ends[0].second < 0 ? ends[0].first.x : ends[1].first.x;
    double head = ends[0].second < 0 ? ends[1].first.x : ends[0].first.x;
    Pt a = at(tail, R), b = at(head, R);
    svg << "<line class=\"edge\" x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\""
        << num(b.x) << "\" y2=\"" << num(b.y) << "\" marker-end=\"url(#arr)\"/>\n";
  }
  svg << "</g>\n";

  svg << "<g class=\"vertices\" font-size=\"11\" font-family=\"monospace\">\n";
  for (const QuotientCell& c : qc.cells) {
    if (c.dim != 0) continue;
    Pt p = at(to_d(c.rep[0]), R);
    Pt lp = at(to_d(c.rep[0]), R + 24);
    svg << "<circle class=\"vertex\" cx=\"" << num(p.x) << "\" cy=\"" << num(p.y)
        << "\" r=\"4\" fill=\"#222\"/>\n";
    svg << "<text x=\"" << num(lp.x - 14) << "\" y=\"" << num(lp.y + 4) << "\" fill=\"#222\">"
        << monomial_str(c.label, qc.n) << "</text>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace

std::string render_svg(const QuotientComplex& qc) {
  if (qc.m > 2) throw input_error("[E_RENDER_DIM] rendering supports lattice rank at most 2");
  if (qc.m < 1) throw input_error("[E_RENDER_DIM] nothing to draw in rank 0");
  return qc.m == 2 ? svg_rank2(qc) : svg_rank1(qc);
}

void render_svg_file(const QuotientComplex& qc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("[E_FILE_WRITE] cannot open " + path);
  out << render_svg(qc);
}

}  // namespace cellres
