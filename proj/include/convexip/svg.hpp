// SVG drawings of bodies, line segments/planes of bodies and reconstructed trees.
//
// Every body is polygonalized the same way: intersect the supporting
// half-planes for `directions` equally spaced normals. The outer polygon
// overshoots a smooth boundary by at most r (sec(pi/directions) - 1) for a
// disc of radius r, about 7.5e-5 r at 256 directions; polytopes whose edge
// normals are on the grid come out exact.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "convexip/body.hpp"
#include "convexip/hull.hpp"
#include "convexip/phylo.hpp"

namespace cvx {

struct Viewport {
  double xmin = -1.0, ymin = -1.0, xmax = 1.0, ymax = 1.0;
};

struct RenderSpec {
  int width = 800;
  int height = 600;
  std::optional<Viewport> viewport;  // fitted to the content when unset
  std::size_t directions = 256;
  std::string stroke = "black";
  std::string fill = "none";
  double stroke_width = 1.0;
};

inline void validate(const RenderSpec& spec) {
  if (spec.directions < 8) throw InputError("render: direction count must be at least 8");
  if (spec.width <= 0 || spec.height <= 0) throw InputError("render: canvas must be nonempty");
  if (spec.viewport && !(spec.viewport->xmax > spec.viewport->xmin && spec.viewport->ymax > spec.viewport->ymin))
    throw InputError("render: degenerate viewport");
}

/// Outer polygon from the supporting lines at `directions` equally spaced normals.
inline std::vector<Vec2> polygonalize(const Body& body, std::size_t directions = 256) {
  require_dim(body.dim(), 2, "polygonalize");
  if (directions < 8) throw InputError("polygonalize: direction count must be at least 8");
  std::vector<Vec2> normals;
  std::vector<double> h;
  for (std::size_t i = 0; i < directions; ++i) {
    normals.push_back(unit_at(kTwoPi * static_cast<double>(i) / static_cast<double>(directions)));
    h.push_back(support(body, normals.back()));
  }
  std::vector<Vec2> pts;
  for (std::size_t i = 0; i < directions; ++i) {
    const std::size_t j = (i + 1) % directions;
    const Vec2 u = normals[i], v = normals[j];
    const double det = cross(u, v);
    pts.push_back({(h[i] * v.y - h[j] * u.y) / det, (u.x * h[j] - v.x * h[i]) / det});
  }
  return convex_hull(std::move(pts), 1e-9);
}

/// Axis-aligned extent of a 2D body via its support function.
inline Viewport bounds(const Body& body) {
  return {-support(body, Vec2{-1, 0}), -support(body, Vec2{0, -1}), support(body, Vec2{1, 0}),
          support(body, Vec2{0, 1})};
}

inline Viewport merge(Viewport a, const Viewport& b) {
  return {std::min(a.xmin, b.xmin), std::min(a.ymin, b.ymin), std::max(a.xmax, b.xmax), std::max(a.ymax, b.ymax)};
}

class SvgCanvas {
 public:
  SvgCanvas(int width, int height, Viewport view, double margin = 20.0)
      : width_(width), height_(height), view_(view) {
    const double w = std::max(view.xmax - view.xmin, 1e-9), hgt = std::max(view.ymax - view.ymin, 1e-9);
    scale_ = std::min((width - 2 * margin) / w, (height - 2 * margin) / hgt);
    ox_ = 0.5 * (width - scale_ * w);
    oy_ = 0.5 * (height - scale_ * hgt);
  }

  Vec2 to_pixels(Vec2 p) const {
    return {ox_ + scale_ * (p.x - view_.xmin), height_ - (oy_ + scale_ * (p.y - view_.ymin))};
  }

  void polygon(const std::vector<Vec2>& pts, const std::string& stroke, const std::string& fill, double width) {
    if (pts.size() == 1) {
      dot(pts.front(), std::max(2.0, width), stroke);
      return;
    }
    out_ << "<polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Vec2 q = to_pixels(pts[i]);
      out_ << (i ? " " : "") << num(q.x) << ',' << num(q.y);
    }
    out_ << "\" stroke=\"" << stroke << "\" fill=\"" << fill << "\" stroke-width=\"" << num(width)
         << "\" stroke-linejoin=\"round\"/>\n";
  }

  void line(Vec2 a, Vec2 b, const std::string& stroke, double width) {
    const Vec2 p = to_pixels(a), q = to_pixels(b);
    out_ << "<line x1=\"" << num(p.x) << "\" y1=\"" << num(p.y) << "\" x2=\"" << num(q.x) << "\" y2=\"" << num(q.y)
         << "\" stroke=\"" << stroke << "\" stroke-width=\"" << num(width) << "\"/>\n";
  }

  void dot(Vec2 a, double radius, const std::string& fill) {
    const Vec2 p = to_pixels(a);
    out_ << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"" << num(radius) << "\" fill=\"" << fill
         << "\"/>\n";
  }

  void text(Vec2 a, const std::string& s) {
    const Vec2 p = to_pixels(a);
    out_ << "<text x=\"" << num(p.x) << "\" y=\"" << num(p.y) << "\" font-family=\"sans-serif\" font-size=\"12\">"
         << escape(s) << "</text>\n";
  }

  std::string str() const {
    std::ostringstream doc;
    doc << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_ << "\" height=\"" << height_
        << "\" viewBox=\"0 0 " << width_ << ' ' << height_ << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << out_.str() << "</svg>\n";
    return doc.str();
  }

 private:
  static std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
  }
  static std::string escape(const std::string& s) {
    std::string r;
    for (char c : s) {
      switch (c) {
        case '<': r += "&lt;"; break;
        case '>': r += "&gt;"; break;
        case '&': r += "&amp;"; break;
        case '"': r += "&quot;"; break;
        default: r += c;
      }
    }
    return r;
  }

  int width_, height_;
  Viewport view_;
  double scale_, ox_, oy_;
  std::ostringstream out_;
};

/// alpha of each frame along the segment from C (alpha = 0) to S (alpha = 1).
inline std::vector<double> segment_alphas(std::size_t frames) {
  if (frames == 0) throw InputError("segment: need at least one frame");
  if (frames == 1) return {0.0};
  std::vector<double> out;
  for (std::size_t k = 0; k < frames; ++k) out.push_back(static_cast<double>(k) / static_cast<double>(frames - 1));
  return out;
}

/// The body with support function alpha h_S + (1 - alpha) h_C.
inline Body interpolant(const Body& s, const Body& c, double alpha) {
  return Body::sum({scale(s, alpha), scale(c, 1.0 - alpha)});
}

/// A strip of interpolants from C to S, one cell per frame.
inline std::string render_segment(const Body& s, const Body& c, std::size_t frames, const RenderSpec& spec = {}) {
  validate(spec);
  require_dim(s.dim(), 2, "render_segment");
  require_dim(c.dim(), 2, "render_segment");
  const auto alphas = segment_alphas(frames);
  std::vector<std::vector<Vec2>> polys;
  Viewport cell = bounds(c);
  for (double a : alphas) {
    const Body b = interpolant(s, c, a);
    cell = merge(cell, bounds(b));
    polys.push_back(polygonalize(b, spec.directions));
  }
  const double w = cell.xmax - cell.xmin, gap = 0.15 * std::max(w, cell.ymax - cell.ymin);
  const double step = w + gap;
  Viewport view = spec.viewport.value_or(Viewport{cell.xmin - gap, cell.ymin - gap,
                                                  cell.xmin + step * static_cast<double>(polys.size()), cell.ymax + gap});
  SvgCanvas canvas(spec.width, spec.height, view);
  for (std::size_t k = 0; k < polys.size(); ++k) {
    auto pts = polys[k];
    for (auto& p : pts) p.x += step * static_cast<double>(k);
    canvas.polygon(pts, spec.stroke, spec.fill, spec.stroke_width);
  }
  return canvas.str();
}

/// Bodies alpha C + beta T for alpha, beta in {0, step, ..., (steps-1) step},
/// drawn in place.
inline std::string render_plane(const Body& c, const Body& t, std::size_t steps, double step,
                                const RenderSpec& spec = {}) {
  validate(spec);
  require_dim(c.dim(), 2, "render_plane");
  require_dim(t.dim(), 2, "render_plane");
  if (steps == 0) throw InputError("plane: need at least one lattice step");
  if (!(step > 0.0)) throw InputError("plane: lattice spacing must be positive");
  std::vector<std::vector<Vec2>> polys;
  std::optional<Viewport> view;
  for (std::size_t i = 0; i < steps; ++i)
    for (std::size_t j = 0; j < steps; ++j) {
      const Body b = Body::sum({scale(c, step * static_cast<double>(i)), scale(t, step * static_cast<double>(j))});
      view = view ? merge(*view, bounds(b)) : bounds(b);
      polys.push_back(polygonalize(b, spec.directions));
    }
  const double pad = 0.05 * std::max(view->xmax - view->xmin, view->ymax - view->ymin) + 1e-9;
  SvgCanvas canvas(spec.width, spec.height,
                   spec.viewport.value_or(Viewport{view->xmin - pad, view->ymin - pad, view->xmax + pad, view->ymax + pad}));
  for (const auto& p : polys) canvas.polygon(p, spec.stroke, spec.fill, spec.stroke_width);
  return canvas.str();
}

/// Tree drawing: leaves evenly spaced along the bottom, internal nodes above
/// the mean of their children. Every body is drawn at a common scale next to
/// its node; leaf bodies thin, reconstructed ancestors bold.
inline std::string render_tree(const Phylogeny& t, const Extension& ext, const RenderSpec& spec = {}) {
  validate(spec);
  if (ext.bodies.size() != t.size()) throw InputError("render_tree: extension does not cover the tree");
  for (const auto& b : ext.bodies) require_dim(b.dim(), 2, "render_tree");

  // Root at the internal neighbour of the first leaf (or that leaf for N = 2).
  const std::size_t root = t.neighbors(t.leaves().front()).front();
  std::vector<std::size_t> parent(t.size(), t.size());
  std::vector<double> x(t.size(), 0.0), depth(t.size(), 0.0);
  double next_leaf = 0.0, max_depth = 0.0;
  auto place = [&](auto&& self, std::size_t v, std::size_t p, double d) -> void {
    parent[v] = p;
    depth[v] = d;
    max_depth = std::max(max_depth, d);
    std::vector<std::size_t> kids;
    for (auto u : t.neighbors(v))
      if (u != p) kids.push_back(u);
    if (kids.empty()) {
      x[v] = next_leaf;
      next_leaf += 1.0;
      return;
    }
    double sum = 0.0;
    for (auto u : kids) {
      self(self, u, v, d + 1.0);
      sum += x[u];
    }
    x[v] = sum / static_cast<double>(kids.size());
  };
  place(place, root, t.size(), 0.0);

  double extent = 1e-9;
  std::vector<Viewport> boxes;
  for (const auto& b : ext.bodies) {
    boxes.push_back(bounds(b));
    extent = std::max({extent, boxes.back().xmax - boxes.back().xmin, boxes.back().ymax - boxes.back().ymin});
  }
  const double cell = 0.7 / extent;  // body units -> layout units
  auto pos = [&](std::size_t v) { return Vec2{x[v], max_depth - depth[v]}; };

  Viewport view{-1.0, -1.0, std::max(next_leaf, 1.0), max_depth + 1.0};
  SvgCanvas canvas(spec.width, spec.height, spec.viewport.value_or(view));
  for (std::size_t v = 0; v < t.size(); ++v)
    if (parent[v] < t.size()) canvas.line(pos(v), pos(parent[v]), "#888888", 1.0);
  for (std::size_t v = 0; v < t.size(); ++v) {
    const Vec2 centre{0.5 * (boxes[v].xmin + boxes[v].xmax), 0.5 * (boxes[v].ymin + boxes[v].ymax)};
    const Vec2 anchor = pos(v) + Vec2{0.0, t.is_leaf(v) ? -0.45 : 0.45};
    auto pts = polygonalize(ext.bodies[v], spec.directions);
    for (auto& p : pts) p = anchor + cell * (p - centre);
    canvas.polygon(pts, spec.stroke, spec.fill, t.is_leaf(v) ? spec.stroke_width : 3.0 * spec.stroke_width);
    canvas.text(pos(v) + Vec2{0.08, 0.05}, t.id(v));
  }
  return canvas.str();
}

}  // namespace cvx
