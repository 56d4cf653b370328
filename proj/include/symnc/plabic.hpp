#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "symnc/noncross.hpp"

namespace symnc {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline constexpr double kGeometryTolerance = 1e-9;

/// v_i = (sin(2*pi*i/n), cos(2*pi*i/n)): the regular n-gon on the unit
/// circle, labelled clockwise from the top.
Point polygon_vertex(int i, int n);
/// Sum of v_i over the members of `set`.
Point embed_set(const IndexSet& set, int n);
/// Clockwise rotation about the origin.
Point rotate_clockwise(Point p, double radians);

/// One point per member, in canonical order. Throws DegenerateEmbedding when
/// two members land on the same point.
std::vector<Point> embed(const Collection& c);

enum class FaceColour {
  Black,  ///< label of size k-1; members contain the label
  White,  ///< label of size k+1; members are contained in the label
};

struct Face {
  IndexSet label;
  FaceColour colour = FaceColour::Black;
  /// Boundary vertices: clockwise for black faces, anticlockwise for white.
  std::vector<std::size_t> cycle;
  /// +1 clockwise, -1 anticlockwise (the sign the face carries in the potential).
  int sign = 0;
  Point centroid;
};

struct Edge {
  std::size_t a = 0;  ///< a < b
  std::size_t b = 0;
  std::optional<std::size_t> black_face;
  std::optional<std::size_t> white_face;
  int black_discoveries = 0;
  int white_discoveries = 0;

  bool internal() const { return black_face.has_value() && white_face.has_value(); }
};

/// The planar complex of a maximal noncrossing collection: members embedded
/// as points, faces from black and white cliques of size at least three.
struct EmbeddedComplex {
  int n = 0;
  int k = 0;
  std::vector<IndexSet> vertices;  ///< canonical order
  std::vector<Point> points;
  std::vector<bool> frozen;        ///< the vertex is a cyclic interval of [n]
  std::vector<Edge> edges;         ///< sorted by (a, b)
  std::vector<Face> faces;         ///< black faces by label, then white faces by label
  /// Pairs adjacent in one clique colour that turned out to be diagonals of a
  /// face of the other colour; they are not edges.
  std::size_t dropped_chords = 0;

  long long euler_characteristic() const {
    return static_cast<long long>(vertices.size()) - static_cast<long long>(edges.size()) +
           static_cast<long long>(faces.size());
  }
  std::optional<std::size_t> vertex_index(const IndexSet& s) const;
};

/// Throws DegenerateEmbedding or ComplexInconsistent.
EmbeddedComplex build_complex(const Collection& c);

/// True iff I -> I (+)_n shift maps vertices, edges and faces onto themselves.
bool complex_shift_invariant(const EmbeddedComplex& complex, int shift);

struct Arrow {
  std::size_t tail = 0;
  std::size_t head = 0;
  std::optional<IndexSet> right_label;  ///< black face on the right, if any
  std::optional<IndexSet> left_label;   ///< white face on the left, if any
};

struct PotentialTerm {
  int sign = 0;
  IndexSet label;
  std::vector<std::size_t> arrows;    ///< consecutive arrows forming the cycle
  std::vector<std::size_t> vertices;  ///< tail of each arrow, same order
};

struct QuiverWithPotential {
  int n = 0;
  int k = 0;
  std::vector<IndexSet> vertices;
  std::vector<bool> frozen;
  std::vector<Point> points;
  std::vector<Arrow> arrows;  ///< sorted by (tail, head)
  std::vector<PotentialTerm> potential;

  std::optional<std::size_t> vertex_index(const IndexSet& s) const;
  std::size_t frozen_count() const;
};

/// Orients every edge so that the black (size k-1) face lies on its right.
/// Throws OrientationInconsistent if a face boundary is not a directed cycle.
QuiverWithPotential orient(const EmbeddedComplex& complex);

/// Removes frozen vertices, their arrows, and every potential term meeting them.
QuiverWithPotential jacobian_quiver(const QuiverWithPotential& qp);

/// True iff I -> I (+)_n shift is an automorphism of the quiver with potential.
bool quiver_shift_automorphism(const QuiverWithPotential& qp, int shift);

struct NakayamaResult {
  std::vector<std::size_t> permutation;  ///< vertex v -> permutation[v]
  int order = 0;              ///< order of a -> a - k on Z/nZ, i.e. n / gcd(k, n)
  int permutation_order = 0;  ///< lcm of the cycle lengths; divides `order`
  std::size_t fixed_vertices = 0;
};

/// The permutation I -> I - k. Throws NotAnAutomorphism if it does not
/// preserve the vertices, arrows and signed potential.
NakayamaResult nakayama(const QuiverWithPotential& qp, int k, int n);

}  // namespace symnc
