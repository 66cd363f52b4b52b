#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "tetrad/gf.hpp"
#include "tetrad/incidence.hpp"

// Concrete models: the projective 3-space over a prime field, with lines in
// Plücker coordinates.
namespace tetrad::pg3 {

// Homogeneous 4-vector scaled so its first nonzero coordinate is 1. Also used
// for planes (as the coefficient vector of the plane equation).
struct ProjPoint {
  std::array<gf::FieldElement, 4> coords;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b);
};

// (p01, p02, p03, p23, p31, p12), first nonzero coordinate 1.
struct PluckerLine {
  std::array<gf::FieldElement, 6> p;

  friend bool operator==(const PluckerLine&, const PluckerLine&) = default;
  friend std::strong_ordering operator<=>(const PluckerLine& a, const PluckerLine& b);
};

std::ostream& operator<<(std::ostream& os, const ProjPoint& p);
std::ostream& operator<<(std::ostream& os, const PluckerLine& l);

ProjPoint make_point(gf::PrimeField field, std::array<std::uint32_t, 4> coords);
PluckerLine make_line(gf::PrimeField field, std::array<std::uint32_t, 6> coords);

// Lexicographic list of all q^3+q^2+q+1 canonical points.
std::vector<ProjPoint> enumerate_points(gf::PrimeField field);

// Throws DegenerateInput when P and Q are the same projective point.
PluckerLine line_from_points(const ProjPoint& p, const ProjPoint& q);

// All (q^2+1)(q^2+q+1) lines sorted by canonical coordinates; the position in
// this list is the line id.
std::vector<PluckerLine> enumerate_lines(gf::PrimeField field);

// Vanishing of the polarized Klein quadric form.
bool lines_incident(const PluckerLine& l, const PluckerLine& m);

bool satisfies_quadric(const PluckerLine& l);

// Swaps the two coordinate halves: a correlation exchanging points and planes.
PluckerLine dual_line(const PluckerLine& l);

bool point_on_plane(const ProjPoint& point, const ProjPoint& plane);

// Coordinate-derived pencils, used only to validate the abstract pipeline.
struct GroundTruth {
  std::vector<LineSet> point_stars;  // indexed like Pg3Model::points
  std::vector<LineSet> plane_sets;   // indexed like Pg3Model::planes
};

struct Pg3Model {
  gf::PrimeField field;
  std::vector<ProjPoint> points;
  std::vector<ProjPoint> planes;
  std::vector<PluckerLine> lines;
  std::vector<std::vector<std::size_t>> line_points;  // point indices on each line
  IncidenceStructure structure;
  GroundTruth truth;

  std::optional<LineId> find_line(const PluckerLine& l) const;
  // dual_permutation()[i] is the id of dual_line(lines[i]).
  std::vector<LineId> dual_permutation() const;
};

Pg3Model build_model(gf::PrimeField field);

}  // namespace tetrad::pg3
