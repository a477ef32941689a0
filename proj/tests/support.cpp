#include "support.hpp"

#include <array>
#include <functional>

namespace sl2::testing {

namespace {

// Triangulations of the polygon on consecutive labels first..last, where
// (first, last) is an edge or a chord already present.
void enumerate(std::size_t first, std::size_t last, std::vector<Diagonal>& chosen,
               const std::function<void()>& done) {
  if (last - first < 2) {
    done();
    return;
  }
  for (std::size_t apex = first + 1; apex < last; ++apex) {
    const std::size_t added_before = chosen.size();
    if (apex - first >= 2) chosen.push_back({first, apex});
    if (last - apex >= 2) chosen.push_back({apex, last});
    enumerate(first, apex, chosen, [&] { enumerate(apex, last, chosen, done); });
    chosen.resize(added_before);
  }
}

void random_fill(std::size_t first, std::size_t last, std::vector<Diagonal>& out, std::mt19937_64& rng) {
  if (last - first < 2) return;
  std::uniform_int_distribution<std::size_t> pick(first + 1, last - 1);
  const std::size_t apex = pick(rng);
  if (apex - first >= 2) out.push_back({first, apex});
  if (last - apex >= 2) out.push_back({apex, last});
  random_fill(first, apex, out, rng);
  random_fill(apex, last, out, rng);
}

}  // namespace

std::vector<PolygonTriangulation> all_triangulations(std::size_t vertex_count) {
  std::vector<PolygonTriangulation> result;
  std::vector<Diagonal> chosen;
  enumerate(0, vertex_count - 1, chosen, [&] { result.emplace_back(vertex_count, chosen); });
  return result;
}

PolygonTriangulation random_triangulation(std::size_t vertex_count, std::mt19937_64& rng) {
  std::vector<Diagonal> diagonals;
  random_fill(0, vertex_count - 1, diagonals, rng);
  return PolygonTriangulation(vertex_count, std::move(diagonals));
}

PeriodicTriangulationSpec random_spec(std::mt19937_64& rng, int max_period, int max_step) {
  std::uniform_int_distribution<int> period_dist(2, max_period);
  std::uniform_int_distribution<int> step_dist(1, max_step);
  std::bernoulli_distribution coin;
  const int period = period_dist(rng);
  std::vector<bool> upper(static_cast<std::size_t>(period));
  for (auto&& u : upper) u = coin(rng);
  const std::size_t flip = std::uniform_int_distribution<std::size_t>(0, upper.size() - 1)(rng);
  upper[flip] = true;
  upper[(flip + 1) % upper.size()] = false;

  PeriodicTriangulationSpec spec;
  std::int64_t x = 0;
  std::int64_t y = 0;
  for (int alpha = 0; alpha < period; ++alpha) {
    spec.connecting.push_back(Arc::connecting(x, y));
    const int gap = step_dist(rng);
    std::vector<Arc> internal;
    // The shared vertex is an ear, so the run of gap + 1 vertices on the
    // moving edge is closed by one arc and triangulated freely.
    const std::int64_t start = upper[static_cast<std::size_t>(alpha)] ? x - gap : y;
    if (gap >= 2) {
      internal.push_back(upper[static_cast<std::size_t>(alpha)] ? Arc::upper(start, start + gap)
                                                                : Arc::lower(start, start + gap));
      const auto run = random_triangulation(static_cast<std::size_t>(gap) + 1, rng);
      for (const Diagonal& d : run.diagonals()) {
        const std::int64_t p = start + static_cast<std::int64_t>(d.a);
        const std::int64_t q = start + static_cast<std::int64_t>(d.b);
        internal.push_back(upper[static_cast<std::size_t>(alpha)] ? Arc::upper(p, q) : Arc::lower(p, q));
      }
    }
    spec.internal.push_back(std::move(internal));
    if (upper[static_cast<std::size_t>(alpha)]) {
      x -= gap;
    } else {
      y += gap;
    }
  }
  spec.shift = {x, y};
  return spec;
}

namespace {

struct Point {
  std::int64_t x;
  std::int64_t y;
  bool operator==(const Point&) const = default;
};

// Heights and depths chosen so that no two segments from one vertex are
// collinear and upper arcs never reach lower ones for indices in [-6, 6].
constexpr std::int64_t kHeight = 1000003;
constexpr std::int64_t kDepth = 3001;

Point vertex_point(const Vertex& v) {
  return v.edge == Edge::Upper ? Point{-2 * v.index, kHeight} : Point{2 * v.index, 0};
}

std::vector<Point> polyline(const Arc& arc) {
  const Point a = vertex_point(arc.start());
  const Point b = vertex_point(arc.end());
  if (arc.kind() == ArcKind::Connecting) return {a, b};
  const std::int64_t span = arc.second() - arc.first();
  const std::int64_t depth = kDepth * span * span;
  const Point apex{(a.x + b.x) / 2, arc.kind() == ArcKind::UpperInternal ? kHeight - depth : depth};
  return {a, apex, b};
}

int orientation(Point a, Point b, Point c) {
  const __int128 v = static_cast<__int128>(b.x - a.x) * (c.y - a.y) - static_cast<__int128>(b.y - a.y) * (c.x - a.x);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

bool on_segment(Point a, Point b, Point p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool segments_meet(Point a, Point b, Point c, Point d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
         (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

}  // namespace

bool polylines_cross(const Arc& a, const Arc& b) {
  if (a == b) return false;
  const auto pa = polyline(a);
  const auto pb = polyline(b);
  const std::array<Point, 2> ends_a{vertex_point(a.start()), vertex_point(a.end())};
  const std::array<Point, 2> ends_b{vertex_point(b.start()), vertex_point(b.end())};
  for (std::size_t s = 0; s + 1 < pa.size(); ++s) {
    for (std::size_t t = 0; t + 1 < pb.size(); ++t) {
      // Two segments leaving a shared arc endpoint meet only there.
      bool shared = false;
      for (const Point& p : {pa[s], pa[s + 1]}) {
        for (const Point& q : {pb[t], pb[t + 1]}) {
          if (p == q && (p == ends_a[0] || p == ends_a[1]) && (q == ends_b[0] || q == ends_b[1])) shared = true;
        }
      }
      if (shared) continue;
      if (segments_meet(pa[s], pa[s + 1], pb[t], pb[t + 1])) return true;
    }
  }
  return false;
}

std::vector<std::int64_t> triangle_counts(const PolygonTriangulation& pt) {
  // A triangle is a triple of pairwise adjacent labels (edge or diagonal).
  std::vector<std::int64_t> counts(pt.vertex_count(), 0);
  auto joined = [&](std::size_t a, std::size_t b) { return pt.is_edge(a, b) || pt.has_diagonal(a, b); };
  for (std::size_t a = 0; a < pt.vertex_count(); ++a) {
    for (std::size_t b = a + 1; b < pt.vertex_count(); ++b) {
      if (!joined(a, b)) continue;
      for (std::size_t c = b + 1; c < pt.vertex_count(); ++c) {
        if (joined(a, c) && joined(b, c)) {
          ++counts[a];
          ++counts[b];
          ++counts[c];
        }
      }
    }
  }
  return counts;
}

}  // namespace sl2::testing
