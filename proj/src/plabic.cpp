#include "symnc/plabic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <tuple>
#include <string>
#include <utility>

#include "symnc/cyclic.hpp"
#include "symnc/error.hpp"

namespace symnc {

namespace {

using VertexPair = std::pair<std::size_t, std::size_t>;

VertexPair ordered(std::size_t a, std::size_t b) { return a < b ? VertexPair{a, b} : VertexPair{b, a}; }

double cross(Point o, Point a, Point b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double signed_area(const std::vector<Point>& pts, const std::vector<std::size_t>& cycle) {
  double twice = 0.0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Point& p = pts[cycle[i]];
    const Point& q = pts[cycle[(i + 1) % cycle.size()]];
    twice += p.x * q.y - q.x * p.y;
  }
  return twice / 2.0;
}

/// Clockwise angle of `p` seen from `centre`, measured from straight up, in [0, 2pi).
double clockwise_angle(Point centre, Point p) {
  double a = std::atan2(p.x - centre.x, p.y - centre.y);
  if (a < 0) a += 2 * std::numbers::pi;
  return a;
}

struct Clique {
  IndexSet label;
  Point centre;
  std::vector<std::size_t> members;  // clockwise around the centre
};

void sort_clockwise(Clique& clique, const std::vector<Point>& pts) {
  std::vector<std::pair<double, std::size_t>> keyed;
  keyed.reserve(clique.members.size());
  for (std::size_t v : clique.members) {
    const Point& p = pts[v];
    const double r = std::hypot(p.x - clique.centre.x, p.y - clique.centre.y);
    if (std::abs(r - 1.0) > 1e-6) {
      throw Error(ErrorCode::DegenerateEmbedding,
                  "clique " + clique.label.to_string() + " member off the unit circle");
    }
    keyed.emplace_back(clockwise_angle(clique.centre, p), v);
  }
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 0; i + 1 < keyed.size(); ++i) {
    if (keyed[i + 1].first - keyed[i].first < kGeometryTolerance) {
      throw Error(ErrorCode::DegenerateEmbedding,
                  "angle tie in clique " + clique.label.to_string());
    }
  }
  clique.members.clear();
  for (const auto& [angle, v] : keyed) clique.members.push_back(v);
}

/// Pairs of angularly consecutive members (one pair for a 2-clique).
std::vector<VertexPair> consecutive_pairs(const Clique& clique) {
  std::vector<VertexPair> out;
  const auto& m = clique.members;
  if (m.size() == 2) {
    out.push_back(ordered(m[0], m[1]));
  } else if (m.size() >= 3) {
    for (std::size_t i = 0; i < m.size(); ++i) out.push_back(ordered(m[i], m[(i + 1) % m.size()]));
  }
  return out;
}

Point centroid(const std::vector<Point>& pts, const std::vector<std::size_t>& cycle) {
  Point c;
  for (std::size_t v : cycle) {
    c.x += pts[v].x;
    c.y += pts[v].y;
  }
  c.x /= static_cast<double>(cycle.size());
  c.y /= static_cast<double>(cycle.size());
  return c;
}

std::vector<std::size_t> canonical_rotation(std::vector<std::size_t> cycle) {
  if (cycle.empty()) return cycle;
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  return cycle;
}

template <class Vertices>
std::optional<std::size_t> find_vertex(const Vertices& vertices, const IndexSet& s) {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), s);
  if (it == vertices.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

}  // namespace

Point polygon_vertex(int i, int n) {
  const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
  return {std::sin(t), std::cos(t)};
}

Point embed_set(const IndexSet& set, int n) {
  Point p;
  set.for_each([&](int i) {
    const Point v = polygon_vertex(i, n);
    p.x += v.x;
    p.y += v.y;
  });
  return p;
}

Point rotate_clockwise(Point p, double radians) {
  const double c = std::cos(radians);
  const double s = std::sin(radians);
  return {p.x * c + p.y * s, -p.x * s + p.y * c};
}

std::vector<Point> embed(const Collection& c) {
  std::vector<Point> pts;
  pts.reserve(c.size());
  for (const auto& s : c) pts.push_back(embed_set(s, c.n()));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (std::hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y) < kGeometryTolerance) {
        throw Error(ErrorCode::DegenerateEmbedding,
                    c[i].to_string() + " and " + c[j].to_string() + " embed to the same point");
      }
    }
  }
  return pts;
}

std::optional<std::size_t> EmbeddedComplex::vertex_index(const IndexSet& s) const {
  return find_vertex(vertices, s);
}

EmbeddedComplex build_complex(const Collection& c) {
  EmbeddedComplex cx;
  cx.n = c.n();
  cx.k = c.k();
  cx.vertices = c.sets();
  cx.points = embed(c);
  for (const auto& v : cx.vertices) cx.frozen.push_back(is_interval_of_ground(v, c.n()));

  std::map<IndexSet, Clique> black;
  std::map<IndexSet, Clique> white;
  const IndexSet ground = IndexSet::full(c.n());
  for (std::size_t v = 0; v < cx.vertices.size(); ++v) {
    const IndexSet& s = cx.vertices[v];
    s.for_each([&](int i) { black[s.without(i)].members.push_back(v); });
    (ground - s).for_each([&](int j) { white[s.with(j)].members.push_back(v); });
  }

  std::map<VertexPair, const Clique*> black_pairs;
  std::map<VertexPair, const Clique*> white_pairs;
  auto prepare = [&](std::map<IndexSet, Clique>& cliques, std::map<VertexPair, const Clique*>& pairs) {
    for (auto& [label, clique] : cliques) {
      clique.label = label;
      clique.centre = embed_set(label, c.n());
      if (clique.members.size() < 2) continue;
      sort_clockwise(clique, cx.points);
      for (const auto& pr : consecutive_pairs(clique)) pairs.emplace(pr, &clique);
    }
  };
  prepare(black, black_pairs);
  prepare(white, white_pairs);

  std::map<IndexSet, std::size_t> black_face_index;
  std::map<IndexSet, std::size_t> white_face_index;
  for (const auto& [label, clique] : black) {
    if (clique.members.size() < 3) continue;
    Face f;
    f.label = label;
    f.colour = FaceColour::Black;
    f.cycle = clique.members;
    black_face_index[label] = cx.faces.size();
    cx.faces.push_back(std::move(f));
  }
  for (const auto& [label, clique] : white) {
    if (clique.members.size() < 3) continue;
    Face f;
    f.label = label;
    f.colour = FaceColour::White;
    f.cycle.assign(clique.members.rbegin(), clique.members.rend());
    white_face_index[label] = cx.faces.size();
    cx.faces.push_back(std::move(f));
  }
  for (auto& f : cx.faces) {
    f.centroid = centroid(cx.points, f.cycle);
    f.sign = signed_area(cx.points, f.cycle) < 0 ? 1 : -1;
  }

  // An edge is a pair consecutive around both its black and its white clique.
  // A side of a face must be recovered from the opposite colour as well.
  std::set<VertexPair> edge_pairs;
  auto reconcile = [&](const std::map<VertexPair, const Clique*>& mine,
                       const std::map<VertexPair, const Clique*>& other, const char* colour) {
    for (const auto& [pr, clique] : mine) {
      if (other.contains(pr)) {
        edge_pairs.insert(pr);
      } else if (clique->members.size() >= 3) {
        throw Error(ErrorCode::ComplexInconsistent,
                    std::string(colour) + " face " + clique->label.to_string() + " side " +
                        cx.vertices[pr.first].to_string() + "-" + cx.vertices[pr.second].to_string() +
                        " is not recovered from the opposite clique");
      } else {
        ++cx.dropped_chords;
      }
    }
  };
  reconcile(black_pairs, white_pairs, "black");
  reconcile(white_pairs, black_pairs, "white");

  for (const auto& [a, b] : edge_pairs) {
    Edge e;
    e.a = a;
    e.b = b;
    const IndexSet meet = cx.vertices[a] & cx.vertices[b];
    const IndexSet join = cx.vertices[a] | cx.vertices[b];
    e.black_discoveries = black_pairs.contains({a, b}) ? 1 : 0;
    e.white_discoveries = white_pairs.contains({a, b}) ? 1 : 0;
    if (auto it = black_face_index.find(meet); it != black_face_index.end()) e.black_face = it->second;
    if (auto it = white_face_index.find(join); it != white_face_index.end()) e.white_face = it->second;
    cx.edges.push_back(e);
  }
  return cx;
}

bool complex_shift_invariant(const EmbeddedComplex& cx, int shift) {
  const int n = cx.n;
  std::vector<std::size_t> image(cx.vertices.size());
  for (std::size_t v = 0; v < cx.vertices.size(); ++v) {
    auto idx = cx.vertex_index(shift_set(cx.vertices[v], shift, n));
    if (!idx) return false;
    image[v] = *idx;
  }
  std::set<VertexPair> edges;
  for (const auto& e : cx.edges) edges.insert({e.a, e.b});
  for (const auto& e : cx.edges) {
    if (!edges.contains(ordered(image[e.a], image[e.b]))) return false;
  }
  std::map<std::pair<int, IndexSet>, std::vector<std::size_t>> faces;
  for (const auto& f : cx.faces) faces[{static_cast<int>(f.colour), f.label}] = canonical_rotation(f.cycle);
  for (const auto& f : cx.faces) {
    auto it = faces.find({static_cast<int>(f.colour), shift_set(f.label, shift, n)});
    if (it == faces.end()) return false;
    std::vector<std::size_t> mapped;
    for (std::size_t v : f.cycle) mapped.push_back(image[v]);
    if (canonical_rotation(mapped) != it->second) return false;
  }
  return true;
}

std::optional<std::size_t> QuiverWithPotential::vertex_index(const IndexSet& s) const {
  return find_vertex(vertices, s);
}

std::size_t QuiverWithPotential::frozen_count() const {
  return static_cast<std::size_t>(std::count(frozen.begin(), frozen.end(), true));
}

QuiverWithPotential orient(const EmbeddedComplex& cx) {
  QuiverWithPotential qp;
  qp.n = cx.n;
  qp.k = cx.k;
  qp.vertices = cx.vertices;
  qp.frozen = cx.frozen;
  qp.points = cx.points;

  for (const auto& e : cx.edges) {
    const Point& pa = cx.points[e.a];
    const Point& pb = cx.points[e.b];
    bool forward = false;
    if (e.black_face) {
      const double side = cross(pa, pb, cx.faces[*e.black_face].centroid);
      if (std::abs(side) < kGeometryTolerance) {
        throw Error(ErrorCode::OrientationInconsistent, "black face centre on an edge");
      }
      forward = side < 0;  // centre on the right of a -> b
    } else if (e.white_face) {
      const double side = cross(pa, pb, cx.faces[*e.white_face].centroid);
      if (std::abs(side) < kGeometryTolerance) {
        throw Error(ErrorCode::OrientationInconsistent, "white face centre on an edge");
      }
      forward = side > 0;  // white face on the left of a -> b
    } else {
      // Isolated segment (only when the complex has no faces): orient by index.
      forward = true;
    }
    Arrow arrow;
    arrow.tail = forward ? e.a : e.b;
    arrow.head = forward ? e.b : e.a;
    if (e.black_face) arrow.right_label = cx.faces[*e.black_face].label;
    if (e.white_face) arrow.left_label = cx.faces[*e.white_face].label;
    qp.arrows.push_back(arrow);
  }
  std::sort(qp.arrows.begin(), qp.arrows.end(), [](const Arrow& x, const Arrow& y) {
    return std::tie(x.tail, x.head) < std::tie(y.tail, y.head);
  });
  std::map<VertexPair, std::size_t> arrow_index;
  for (std::size_t i = 0; i < qp.arrows.size(); ++i) arrow_index[{qp.arrows[i].tail, qp.arrows[i].head}] = i;

  for (const auto& f : cx.faces) {
    PotentialTerm term;
    term.label = f.label;
    term.vertices = f.cycle;
    for (std::size_t i = 0; i < f.cycle.size(); ++i) {
      const std::size_t from = f.cycle[i];
      const std::size_t to = f.cycle[(i + 1) % f.cycle.size()];
      auto it = arrow_index.find({from, to});
      if (it == arrow_index.end()) {
        throw Error(ErrorCode::OrientationInconsistent,
                    "face " + f.label.to_string() + " boundary is not a directed cycle at " +
                        cx.vertices[from].to_string() + "->" + cx.vertices[to].to_string());
      }
      term.arrows.push_back(it->second);
    }
    term.sign = signed_area(cx.points, f.cycle) < 0 ? 1 : -1;
    const int expected = f.colour == FaceColour::Black ? 1 : -1;
    if (term.sign != expected) {
      throw Error(ErrorCode::OrientationInconsistent,
                  "face " + f.label.to_string() + " has unexpected orientation");
    }
    qp.potential.push_back(std::move(term));
  }
  return qp;
}

QuiverWithPotential jacobian_quiver(const QuiverWithPotential& qp) {
  QuiverWithPotential out;
  out.n = qp.n;
  out.k = qp.k;
  std::vector<std::optional<std::size_t>> remap(qp.vertices.size());
  for (std::size_t v = 0; v < qp.vertices.size(); ++v) {
    if (qp.frozen[v]) continue;
    remap[v] = out.vertices.size();
    out.vertices.push_back(qp.vertices[v]);
    out.frozen.push_back(false);
    out.points.push_back(qp.points[v]);
  }
  std::vector<std::optional<std::size_t>> arrow_remap(qp.arrows.size());
  for (std::size_t i = 0; i < qp.arrows.size(); ++i) {
    const Arrow& a = qp.arrows[i];
    if (!remap[a.tail] || !remap[a.head]) continue;
    Arrow copy = a;
    copy.tail = *remap[a.tail];
    copy.head = *remap[a.head];
    arrow_remap[i] = out.arrows.size();
    out.arrows.push_back(copy);
  }
  for (const auto& term : qp.potential) {
    const bool survives = std::all_of(term.vertices.begin(), term.vertices.end(),
                                      [&](std::size_t v) { return remap[v].has_value(); });
    if (!survives) continue;
    PotentialTerm copy;
    copy.sign = term.sign;
    copy.label = term.label;
    for (std::size_t v : term.vertices) copy.vertices.push_back(*remap[v]);
    for (std::size_t a : term.arrows) copy.arrows.push_back(*arrow_remap[a]);
    out.potential.push_back(std::move(copy));
  }
  return out;
}

namespace {

std::optional<std::vector<std::size_t>> shift_image(const QuiverWithPotential& qp, int shift) {
  std::vector<std::size_t> image(qp.vertices.size());
  for (std::size_t v = 0; v < qp.vertices.size(); ++v) {
    auto idx = qp.vertex_index(shift_set(qp.vertices[v], shift, qp.n));
    if (!idx) return std::nullopt;
    image[v] = *idx;
  }
  return image;
}

bool preserves_structure(const QuiverWithPotential& qp, const std::vector<std::size_t>& image) {
  std::multiset<VertexPair> arrows;
  std::multiset<VertexPair> mapped;
  for (const auto& a : qp.arrows) {
    arrows.insert({a.tail, a.head});
    mapped.insert({image[a.tail], image[a.head]});
  }
  if (arrows != mapped) return false;
  std::multiset<std::pair<int, std::vector<std::size_t>>> terms;
  std::multiset<std::pair<int, std::vector<std::size_t>>> mapped_terms;
  for (const auto& t : qp.potential) {
    terms.insert({t.sign, canonical_rotation(t.vertices)});
    std::vector<std::size_t> m;
    for (std::size_t v : t.vertices) m.push_back(image[v]);
    mapped_terms.insert({t.sign, canonical_rotation(std::move(m))});
  }
  return terms == mapped_terms;
}

}  // namespace

bool quiver_shift_automorphism(const QuiverWithPotential& qp, int shift) {
  auto image = shift_image(qp, shift);
  return image && preserves_structure(qp, *image);
}

NakayamaResult nakayama(const QuiverWithPotential& qp, int k, int n) {
  if (n < 1 || k < 0 || k > n) {
    throw Error(ErrorCode::InvalidRange, "(k,n) = (" + std::to_string(k) + "," + std::to_string(n) + ")");
  }
  auto image = shift_image(qp, n - k);
  if (!image) {
    throw Error(ErrorCode::NotAnAutomorphism, "I -> I - k leaves the vertex set");
  }
  if (!preserves_structure(qp, *image)) {
    throw Error(ErrorCode::NotAnAutomorphism, "I -> I - k does not preserve arrows and potential");
  }
  NakayamaResult r;
  r.permutation = *image;
  r.order = n / std::gcd(k, n);
  r.permutation_order = 1;
  std::vector<bool> seen(image->size(), false);
  for (std::size_t v = 0; v < image->size(); ++v) {
    if (seen[v]) continue;
    int length = 0;
    for (std::size_t w = v; !seen[w]; w = (*image)[w]) {
      seen[w] = true;
      ++length;
    }
    if (length == 1) ++r.fixed_vertices;
    r.permutation_order = std::lcm(r.permutation_order, length);
  }
  return r;
}

}  // namespace symnc
