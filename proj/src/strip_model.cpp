#include "sl2tiling/strip_model.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace sl2 {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

enum class Step { AlongUpper, AlongLower, Invalid };

// AlongUpper: x decreases, y fixed. AlongLower: x fixed, y increases.
Step step_between(const Arc& from, const Arc& to) {
  if (from.kind() != ArcKind::Connecting || to.kind() != ArcKind::Connecting) return Step::Invalid;
  if (to.first() < from.first() && to.second() == from.second()) return Step::AlongUpper;
  if (to.first() == from.first() && to.second() > from.second()) return Step::AlongLower;
  return Step::Invalid;
}

std::int64_t min_position(const Arc& arc) { return std::min(arc.start().position(), arc.end().position()); }
std::int64_t max_position(const Arc& arc) { return std::max(arc.start().position(), arc.end().position()); }

}  // namespace

std::string to_string(const Vertex& v) {
  return std::to_string(v.index) + (v.edge == Edge::Upper ? "°" : "∘");
}

Arc Arc::connecting(std::int64_t i, std::int64_t j) { return Arc(ArcKind::Connecting, i, j); }

Arc Arc::upper(std::int64_t p, std::int64_t q) {
  if (p > q - 2) throw std::invalid_argument("internal arc needs p <= q - 2");
  return Arc(ArcKind::UpperInternal, p, q);
}

Arc Arc::lower(std::int64_t p, std::int64_t q) {
  if (p > q - 2) throw std::invalid_argument("internal arc needs p <= q - 2");
  return Arc(ArcKind::LowerInternal, p, q);
}

Vertex Arc::start() const {
  return {kind_ == ArcKind::LowerInternal ? Edge::Lower : Edge::Upper, first_};
}

Vertex Arc::end() const {
  return {kind_ == ArcKind::UpperInternal ? Edge::Upper : Edge::Lower, second_};
}

std::string to_string(const Arc& arc) {
  return "(" + to_string(arc.start()) + "," + to_string(arc.end()) + ")";
}

bool arcs_cross(const Arc& a, const Arc& b) {
  using K = ArcKind;
  auto strictly_inside = [](std::int64_t k, std::int64_t p, std::int64_t q) { return p < k && k < q; };
  auto interleave = [](const Arc& x, const Arc& y) {
    return (x.first() < y.first() && y.first() < x.second() && x.second() < y.second()) ||
           (y.first() < x.first() && x.first() < y.second() && y.second() < x.second());
  };
  if (a.kind() == K::Connecting && b.kind() == K::Connecting) {
    return (a.first() < b.first() && a.second() < b.second()) ||
           (a.first() > b.first() && a.second() > b.second());
  }
  if (a.kind() == K::Connecting) return arcs_cross(b, a);
  if (b.kind() == K::Connecting) {
    if (a.kind() == K::UpperInternal) return strictly_inside(b.first(), a.first(), a.second());
    return strictly_inside(b.second(), a.first(), a.second());
  }
  if (a.kind() != b.kind()) return false;
  return interleave(a, b);
}

Arc shifted(const Arc& arc, const Shift& shift, std::int64_t times) {
  switch (arc.kind()) {
    case ArcKind::Connecting:
      return Arc::connecting(arc.first() + times * shift.dx, arc.second() + times * shift.dy);
    case ArcKind::UpperInternal:
      return Arc::upper(arc.first() + times * shift.dx, arc.second() + times * shift.dx);
    case ArcKind::LowerInternal:
      return Arc::lower(arc.first() + times * shift.dy, arc.second() + times * shift.dy);
  }
  throw std::logic_error("unknown arc kind");
}

std::string to_string(SpecIssue::Kind kind) {
  switch (kind) {
    case SpecIssue::Kind::Malformed: return "malformed";
    case SpecIssue::Kind::ShiftSign: return "shift-sign";
    case SpecIssue::Kind::Staircase: return "staircase";
    case SpecIssue::Kind::Crossing: return "crossing";
    case SpecIssue::Kind::ArcOutsidePolygon: return "arc-outside-polygon";
    case SpecIssue::Kind::Triangulation: return "triangulation";
  }
  return "unknown";
}

ValidationReport validate_spec(const PeriodicTriangulationSpec& spec) {
  using K = SpecIssue::Kind;
  ValidationReport report;
  const std::size_t period = spec.period();
  if (period == 0) {
    report.push_back({K::Malformed, "the fundamental segment has no connecting arcs", {}});
    return report;
  }
  if (spec.internal.size() != period) {
    report.push_back({K::Malformed,
                      "expected internal arc lists for " + std::to_string(period) + " polygons, got " +
                          std::to_string(spec.internal.size()),
                      {}});
    return report;
  }
  bool malformed = false;
  for (const Arc& arc : spec.connecting) {
    if (arc.kind() != ArcKind::Connecting) {
      report.push_back({K::Malformed, "staircase arc " + to_string(arc) + " is not a connecting arc", {arc}});
      malformed = true;
    }
  }
  for (std::size_t alpha = 0; alpha < period; ++alpha) {
    for (const Arc& arc : spec.internal[alpha]) {
      if (arc.kind() == ArcKind::Connecting) {
        report.push_back({K::Malformed,
                          "polygon " + std::to_string(alpha) + " lists connecting arc " + to_string(arc) +
                              " as internal",
                          {arc}});
        malformed = true;
      }
    }
  }
  if (malformed) return report;

  const bool shift_ok = spec.shift.dx < 0 && spec.shift.dy > 0;
  if (!shift_ok) {
    report.push_back({K::ShiftSign,
                      "shift (" + std::to_string(spec.shift.dx) + "," + std::to_string(spec.shift.dy) +
                          ") must have dx < 0 < dy",
                      {}});
  }

  for (std::size_t alpha = 0; alpha < period; ++alpha) {
    const Arc& from = spec.connecting[alpha];
    const Arc to = alpha + 1 < period ? spec.connecting[alpha + 1] : shifted(spec.connecting[0], spec.shift, 1);
    const Step step = step_between(from, to);
    if (step == Step::Invalid) {
      report.push_back({K::Staircase,
                        "arcs " + to_string(from) + " and " + to_string(to) + " at alpha " +
                            std::to_string(alpha) + " do not form a staircase step",
                        {from, to}});
      continue;
    }
    const std::int64_t low = step == Step::AlongUpper ? to.first() : from.second();
    const std::int64_t high = step == Step::AlongUpper ? from.first() : to.second();
    const ArcKind expected = step == Step::AlongUpper ? ArcKind::UpperInternal : ArcKind::LowerInternal;
    const std::size_t vertex_count = static_cast<std::size_t>(high - low) + 2;
    std::vector<Diagonal> labels;
    bool all_inside = true;
    for (const Arc& arc : spec.internal[alpha]) {
      if (arc.kind() != expected || arc.first() < low || arc.second() > high) {
        report.push_back({K::ArcOutsidePolygon,
                          "arc " + to_string(arc) + " is not a diagonal of polygon " + std::to_string(alpha) +
                              " between " + to_string(from) + " and " + to_string(to),
                          {arc, from, to}});
        all_inside = false;
        continue;
      }
      labels.push_back({static_cast<std::size_t>(high - arc.second()) + 1,
                        static_cast<std::size_t>(high - arc.first()) + 1});
    }
    if (!all_inside) continue;
    auto problems = triangulation_problems(vertex_count, labels);
    // Crossings are reported below with strip coordinates.
    problems.erase(std::remove_if(problems.begin(), problems.end(),
                                  [](const std::string& p) { return p.find(" cross") != std::string::npos; }),
                   problems.end());
    for (const auto& p : problems) {
      report.push_back({K::Triangulation,
                        "polygon " + std::to_string(alpha) + " (" + std::to_string(vertex_count) +
                            " vertices): " + p,
                        {from, to}});
    }
  }

  // Crossings among the unrolled arc set. A pair (copy 0, copy -k) is the
  // translate of (copy k, copy 0), so copies 0..K cover every pair up to
  // translation.
  std::vector<Arc> base = spec.connecting;
  for (const auto& list : spec.internal) base.insert(base.end(), list.begin(), list.end());
  std::int64_t lo = std::numeric_limits<std::int64_t>::max();
  std::int64_t hi = std::numeric_limits<std::int64_t>::min();
  for (const Arc& arc : base) {
    lo = std::min(lo, min_position(arc));
    hi = std::max(hi, max_position(arc));
  }
  const std::int64_t copies = shift_ok ? (hi - lo) + 1 : 0;
  for (std::size_t a = 0; a < base.size(); ++a) {
    for (std::size_t b = a + 1; b < base.size(); ++b) {
      if (arcs_cross(base[a], base[b])) {
        report.push_back({K::Crossing, "arcs " + to_string(base[a]) + " and " + to_string(base[b]) + " cross",
                          {base[a], base[b]}});
      }
    }
  }
  for (std::int64_t k = 1; k <= copies; ++k) {
    for (const Arc& a : base) {
      for (const Arc& raw : base) {
        const Arc b = shifted(raw, spec.shift, k);
        if (arcs_cross(a, b)) {
          report.push_back({K::Crossing, "arcs " + to_string(a) + " and " + to_string(b) + " cross",
                            {a, b}});
        }
      }
    }
  }
  return report;
}

namespace {

std::string summarise(const ValidationReport& report) {
  std::string message = "invalid strip triangulation:";
  for (const auto& issue : report) message += "\n  [" + to_string(issue.kind) + "] " + issue.message;
  return message;
}

}  // namespace

SpecError::SpecError(ValidationReport report)
    : std::runtime_error(summarise(report)), report_(std::move(report)) {}

void require_valid(const PeriodicTriangulationSpec& spec) {
  auto report = validate_spec(spec);
  if (!report.empty()) throw SpecError(std::move(report));
}

Arc connecting_arc_at(const PeriodicTriangulationSpec& spec, std::int64_t alpha) {
  const auto period = static_cast<std::int64_t>(spec.period());
  const std::int64_t q = floor_div(alpha, period);
  return shifted(spec.connecting[static_cast<std::size_t>(alpha - q * period)], spec.shift, q);
}

std::vector<Arc> connecting_arcs_in(const PeriodicTriangulationSpec& spec, IndexRange alphas) {
  std::vector<Arc> arcs;
  if (alphas.empty()) return arcs;
  arcs.reserve(static_cast<std::size_t>(alphas.size()));
  for (std::int64_t alpha = alphas.first; alpha <= alphas.last; ++alpha) {
    arcs.push_back(connecting_arc_at(spec, alpha));
  }
  return arcs;
}

std::vector<Arc> internal_arcs_at(const PeriodicTriangulationSpec& spec, std::int64_t alpha) {
  const auto period = static_cast<std::int64_t>(spec.period());
  const std::int64_t q = floor_div(alpha, period);
  std::vector<Arc> arcs;
  for (const Arc& arc : spec.internal[static_cast<std::size_t>(alpha - q * period)]) {
    arcs.push_back(shifted(arc, spec.shift, q));
  }
  return arcs;
}

std::int64_t first_alpha_where(const PeriodicTriangulationSpec& spec,
                               const std::function<bool(const Arc&)>& pred) {
  auto holds = [&](std::int64_t alpha) { return pred(connecting_arc_at(spec, alpha)); };
  std::int64_t lo = 0;  // pred false at lo
  std::int64_t hi = 0;  // pred true at hi
  std::int64_t step = 1;
  if (holds(0)) {
    lo = -1;
    while (holds(lo)) {
      hi = lo;
      step *= 2;
      lo -= step;
    }
  } else {
    hi = 1;
    while (!holds(hi)) {
      lo = hi;
      step *= 2;
      hi += step;
    }
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (holds(mid) ? hi : lo) = mid;
  }
  return hi;
}

std::size_t StripPolygon::label_of(const Vertex& v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  if (it == vertices.end()) throw std::out_of_range("vertex " + to_string(v) + " is not on this polygon");
  return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<Arc> StripPolygon::internal_arcs() const {
  std::vector<Arc> arcs;
  for (const Diagonal& d : triangulation.diagonals()) {
    const Vertex& a = vertices[d.a];
    const Vertex& b = vertices[d.b];
    const std::int64_t p = std::min(a.index, b.index);
    const std::int64_t q = std::max(a.index, b.index);
    arcs.push_back(a.edge == Edge::Upper ? Arc::upper(p, q) : Arc::lower(p, q));
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

StripPolygon make_strip_polygon(const Arc& from, const Arc& to, const std::vector<Arc>& internal) {
  const Step step = step_between(from, to);
  if (step == Step::Invalid) {
    throw std::invalid_argument("arcs " + to_string(from) + " and " + to_string(to) + " are not consecutive");
  }
  std::vector<Vertex> vertices;
  std::vector<Diagonal> diagonals;
  if (step == Step::AlongUpper) {
    const std::int64_t high = from.first();
    const std::int64_t low = to.first();
    vertices.push_back({Edge::Lower, from.second()});
    for (std::int64_t x = high; x >= low; --x) vertices.push_back({Edge::Upper, x});
    for (const Arc& arc : internal) {
      if (arc.kind() != ArcKind::UpperInternal || arc.first() < low || arc.second() > high) {
        throw std::invalid_argument("arc " + to_string(arc) + " is not a diagonal of this polygon");
      }
      diagonals.push_back({static_cast<std::size_t>(high - arc.second()) + 1,
                           static_cast<std::size_t>(high - arc.first()) + 1});
    }
  } else {
    const std::int64_t high = to.second();
    const std::int64_t low = from.second();
    vertices.push_back({Edge::Upper, from.first()});
    for (std::int64_t y = high; y >= low; --y) vertices.push_back({Edge::Lower, y});
    for (const Arc& arc : internal) {
      if (arc.kind() != ArcKind::LowerInternal || arc.first() < low || arc.second() > high) {
        throw std::invalid_argument("arc " + to_string(arc) + " is not a diagonal of this polygon");
      }
      diagonals.push_back({static_cast<std::size_t>(high - arc.second()) + 1,
                           static_cast<std::size_t>(high - arc.first()) + 1});
    }
  }
  const std::size_t count = vertices.size();
  return StripPolygon{PolygonTriangulation(count, std::move(diagonals)), std::move(vertices)};
}

StripPolygon polygon_at(const PeriodicTriangulationSpec& spec, std::int64_t alpha) {
  return make_strip_polygon(connecting_arc_at(spec, alpha), connecting_arc_at(spec, alpha + 1),
                            internal_arcs_at(spec, alpha));
}

StripSegment segment_of(const PeriodicTriangulationSpec& spec, IndexRange alphas) {
  StripSegment segment;
  segment.first_alpha = alphas.first;
  segment.connecting = connecting_arcs_in(spec, alphas);
  for (std::int64_t alpha = alphas.first; alpha < alphas.last; ++alpha) {
    segment.polygons.push_back(polygon_at(spec, alpha));
  }
  return segment;
}

StripSegment make_segment(std::int64_t first_alpha, std::vector<Arc> connecting,
                          const std::vector<Arc>& internal) {
  const std::size_t polygon_count = connecting.empty() ? 0 : connecting.size() - 1;
  std::vector<std::vector<Arc>> grouped(polygon_count);
  for (const Arc& arc : internal) {
    bool placed = false;
    for (std::size_t k = 0; k < polygon_count && !placed; ++k) {
      const Arc& from = connecting[k];
      const Arc& to = connecting[k + 1];
      const Step step = step_between(from, to);
      if (step == Step::AlongUpper && arc.kind() == ArcKind::UpperInternal && arc.first() >= to.first() &&
          arc.second() <= from.first()) {
        placed = true;
      } else if (step == Step::AlongLower && arc.kind() == ArcKind::LowerInternal &&
                 arc.first() >= from.second() && arc.second() <= to.second()) {
        placed = true;
      }
      if (placed) grouped[k].push_back(arc);
    }
    if (!placed) throw std::invalid_argument("arc " + to_string(arc) + " lies in no polygon of the segment");
  }
  StripSegment segment;
  segment.first_alpha = first_alpha;
  for (std::size_t k = 0; k < polygon_count; ++k) {
    segment.polygons.push_back(make_strip_polygon(connecting[k], connecting[k + 1], grouped[k]));
  }
  segment.connecting = std::move(connecting);
  return segment;
}

StripSegment segment_of(const FinitePatch& patch) { return make_segment(0, patch.connecting, patch.internal); }

std::int64_t vertex_triangle_count(const PeriodicTriangulationSpec& spec, const Vertex& v) {
  // Polygons containing v form the contiguous range [lo, hi] of alpha.
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  if (v.edge == Edge::Upper) {
    // x_{alpha+1} <= x <= x_alpha
    lo = first_alpha_where(spec, [&](const Arc& a) { return a.first() <= v.index; }) - 1;
    hi = first_alpha_where(spec, [&](const Arc& a) { return a.first() < v.index; }) - 1;
  } else {
    // y_alpha <= y <= y_{alpha+1}
    lo = first_alpha_where(spec, [&](const Arc& a) { return a.second() >= v.index; }) - 1;
    hi = first_alpha_where(spec, [&](const Arc& a) { return a.second() > v.index; }) - 1;
  }
  std::int64_t total = 0;
  for (std::int64_t alpha = lo; alpha <= hi; ++alpha) {
    const StripPolygon polygon = polygon_at(spec, alpha);
    const Quiddity q = quiddity_of(polygon.triangulation);
    total += q[polygon.label_of(v)];
  }
  return total;
}

}  // namespace sl2
