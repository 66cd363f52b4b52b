#include "tetrad/pg3.hpp"

#include <algorithm>
#include <map>

#include "tetrad/errors.hpp"

namespace tetrad::pg3 {

namespace {

template <std::size_t N>
std::strong_ordering compare_coords(const std::array<gf::FieldElement, N>& a,
                                    const std::array<gf::FieldElement, N>& b) {
  for (std::size_t i = 0; i < N; ++i) {
    if (auto c = a[i].value() <=> b[i].value(); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// Scales so the first nonzero coordinate is 1; false if all are zero.
template <std::size_t N>
bool canonicalize(std::array<gf::FieldElement, N>& v) {
  auto lead = std::find_if(v.begin(), v.end(), [](auto e) { return !e.is_zero(); });
  if (lead == v.end()) return false;
  const gf::FieldElement s = gf::inv(*lead);
  for (auto& e : v) e = e * s;
  return true;
}

template <std::size_t N>
std::ostream& print_coords(std::ostream& os, const std::array<gf::FieldElement, N>& v) {
  os << '(';
  for (std::size_t i = 0; i < N; ++i) os << (i ? "," : "") << v[i].value();
  return os << ')';
}

gf::FieldElement minor(const ProjPoint& p, const ProjPoint& q, int i, int j) {
  return p.coords[i] * q.coords[j] - p.coords[j] * q.coords[i];
}

}  // namespace

std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b) {
  return compare_coords(a.coords, b.coords);
}

std::strong_ordering operator<=>(const PluckerLine& a, const PluckerLine& b) {
  return compare_coords(a.p, b.p);
}

std::ostream& operator<<(std::ostream& os, const ProjPoint& p) {
  return print_coords(os, p.coords);
}

std::ostream& operator<<(std::ostream& os, const PluckerLine& l) {
  return print_coords(os, l.p);
}

ProjPoint make_point(gf::PrimeField field, std::array<std::uint32_t, 4> c) {
  ProjPoint p{{gf::FieldElement(field, c[0]), gf::FieldElement(field, c[1]),
               gf::FieldElement(field, c[2]), gf::FieldElement(field, c[3])}};
  if (!canonicalize(p.coords)) throw DegenerateInput("zero vector is not a point");
  return p;
}

PluckerLine make_line(gf::PrimeField field, std::array<std::uint32_t, 6> c) {
  PluckerLine l{{gf::FieldElement(field, c[0]), gf::FieldElement(field, c[1]),
                 gf::FieldElement(field, c[2]), gf::FieldElement(field, c[3]),
                 gf::FieldElement(field, c[4]), gf::FieldElement(field, c[5])}};
  if (!canonicalize(l.p)) throw DegenerateInput("zero vector is not a line");
  return l;
}

std::vector<ProjPoint> enumerate_points(gf::PrimeField field) {
  const std::uint32_t q = field.modulus();
  std::vector<ProjPoint> out;
  // Odometer over all q^4 tuples in lexicographic order; keep the canonical ones.
  std::array<std::uint32_t, 4> c{};
  while (true) {
    auto lead = std::find_if(c.begin(), c.end(), [](auto v) { return v != 0; });
    if (lead != c.end() && *lead == 1) out.push_back(make_point(field, c));
    int i = 3;
    while (i >= 0 && ++c[i] == q) c[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

PluckerLine line_from_points(const ProjPoint& p, const ProjPoint& q) {
  if (p.coords[0].modulus() != q.coords[0].modulus()) {
    throw UsageError("points belong to different fields");
  }
  PluckerLine l{{minor(p, q, 0, 1), minor(p, q, 0, 2), minor(p, q, 0, 3),
                 minor(p, q, 2, 3), minor(p, q, 3, 1), minor(p, q, 1, 2)}};
  if (!canonicalize(l.p)) throw DegenerateInput("line through a single point");
  return l;
}

std::vector<PluckerLine> enumerate_lines(gf::PrimeField field) {
  const auto points = enumerate_points(field);
  std::vector<PluckerLine> lines;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      lines.push_back(line_from_points(points[i], points[j]));
    }
  }
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return lines;
}

bool lines_incident(const PluckerLine& l, const PluckerLine& m) {
  if (l.p[0].modulus() != m.p[0].modulus()) {
    throw UsageError("lines belong to different fields");
  }
  const auto& a = l.p;
  const auto& b = m.p;
  const gf::FieldElement form = a[0] * b[3] + a[1] * b[4] + a[2] * b[5] +
                                a[3] * b[0] + a[4] * b[1] + a[5] * b[2];
  return form.is_zero();
}

bool satisfies_quadric(const PluckerLine& l) {
  const auto& a = l.p;
  return (a[0] * a[3] + a[1] * a[4] + a[2] * a[5]).is_zero();
}

PluckerLine dual_line(const PluckerLine& l) {
  PluckerLine d{{l.p[3], l.p[4], l.p[5], l.p[0], l.p[1], l.p[2]}};
  canonicalize(d.p);
  return d;
}

bool point_on_plane(const ProjPoint& point, const ProjPoint& plane) {
  gf::FieldElement s(point.coords[0].field(), 0);
  for (int i = 0; i < 4; ++i) s = s + point.coords[i] * plane.coords[i];
  return s.is_zero();
}

std::optional<LineId> Pg3Model::find_line(const PluckerLine& l) const {
  auto it = std::lower_bound(lines.begin(), lines.end(), l);
  if (it == lines.end() || *it != l) return std::nullopt;
  return static_cast<LineId>(it - lines.begin());
}

std::vector<LineId> Pg3Model::dual_permutation() const {
  std::vector<LineId> perm(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) perm[i] = *find_line(dual_line(lines[i]));
  return perm;
}

Pg3Model build_model(gf::PrimeField field) {
  Pg3Model m{field, enumerate_points(field), {}, {}, {}, {}, {}};
  m.planes = m.points;  // plane coordinate vectors range over the same set

  // Lines with the points that span them.
  std::map<PluckerLine, std::vector<std::size_t>> spans;
  for (std::size_t i = 0; i < m.points.size(); ++i) {
    for (std::size_t j = i + 1; j < m.points.size(); ++j) {
      auto& pts = spans[line_from_points(m.points[i], m.points[j])];
      pts.push_back(i);
      pts.push_back(j);
    }
  }
  for (auto& [line, pts] : spans) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    m.lines.push_back(line);
    m.line_points.push_back(std::move(pts));
  }

  const std::size_t n = m.lines.size();
  std::vector<LineBits> rows(n, LineBits(n));
  for (LineId i = 0; i < n; ++i) {
    rows[i].set(i);
    for (LineId j = i + 1; j < n; ++j) {
      if (lines_incident(m.lines[i], m.lines[j])) {
        rows[i].set(j);
        rows[j].set(i);
      }
    }
  }
  m.structure = IncidenceStructure(std::move(rows));

  std::vector<std::vector<LineId>> stars(m.points.size());
  std::vector<std::vector<LineId>> plane_sets(m.planes.size());
  for (LineId l = 0; l < n; ++l) {
    for (std::size_t p : m.line_points[l]) stars[p].push_back(l);
    const auto& p0 = m.points[m.line_points[l][0]];
    const auto& p1 = m.points[m.line_points[l][1]];
    for (std::size_t u = 0; u < m.planes.size(); ++u) {
      if (point_on_plane(p0, m.planes[u]) && point_on_plane(p1, m.planes[u])) {
        plane_sets[u].push_back(l);
      }
    }
  }
  for (auto& s : stars) m.truth.point_stars.emplace_back(std::move(s));
  for (auto& s : plane_sets) m.truth.plane_sets.emplace_back(std::move(s));
  return m;
}

}  // namespace tetrad::pg3
