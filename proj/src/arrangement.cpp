#include "covhom/arrangement.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>
#include <stdexcept>

namespace covhom {

namespace {

Rational line_value(const std::array<Int, 3>& ln, const Rational& x, const Rational& y) {
  return Rational(ln[0]) * x + Rational(ln[1]) * y + Rational(ln[2]);
}

std::int8_t sign8(const Rational& q) {
  int s = sgn(q);
  return s > 0 ? 1 : (s < 0 ? -1 : 0);
}

struct Vec2 {
  Rational x, y;
  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-() const { return {-x, -y}; }
};

Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

// 0 for the closed upper half starting at the positive x-axis, 1 below.
int half_plane(const Vec2& v) {
  if (sgn(v.y) != 0) return sgn(v.y) > 0 ? 0 : 1;
  return sgn(v.x) > 0 ? 0 : 1;
}

bool ccw_less(const Vec2& a, const Vec2& b) {
  int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return sgn(cross(a, b)) > 0;
}

}  // namespace

LineArrangement make_arrangement(const std::vector<std::array<Rational, 3>>& raw) {
  LineArrangement arr;
  for (std::size_t idx = 0; idx < raw.size(); ++idx) {
    const auto& t = raw[idx];
    Int lcm = 1;
    for (const Rational& q : t) {
      Int den = q.get_den();
      Int g = int_gcd(lcm, den);
      lcm = lcm / g * den;
    }
    std::array<Int, 3> ln;
    for (int k = 0; k < 3; ++k) {
      Rational scaled = t[k] * Rational(lcm);
      assert(scaled.get_den() == 1);
      ln[k] = scaled.get_num();
    }
    if (ln[0] == 0 && ln[1] == 0)
      fail(errc::parse_error, "line " + std::to_string(idx) + " has zero normal vector");
    Int g = int_gcd(int_gcd(abs(ln[0]), abs(ln[1])), abs(ln[2]));
    for (int k = 0; k < 3; ++k) ln[k] /= g;
    for (int k = 0; k < 3; ++k) {
      if (ln[k] == 0) continue;
      if (ln[k] < 0)
        for (int j = 0; j < 3; ++j) ln[j] = -ln[j];
      break;
    }
    for (std::size_t prev = 0; prev < arr.lines.size(); ++prev)
      if (arr.lines[prev] == ln)
        fail(errc::duplicate_line,
             "lines " + std::to_string(prev) + " and " + std::to_string(idx) + " coincide");
    arr.lines.push_back(ln);
  }
  return arr;
}

FacePoset face_poset(const LineArrangement& arr) {
  FacePoset p;
  const std::size_t n = arr.lines.size();
  p.n_lines = n;

  // intersection points, deduplicated and ordered by coordinates
  std::map<std::pair<Rational, Rational>, std::size_t> point_ids;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto &li = arr.lines[i], &lj = arr.lines[j];
      Int det = li[0] * lj[1] - lj[0] * li[1];
      if (det == 0) continue;  // parallel
      Rational x = Rational(li[1] * lj[2] - lj[1] * li[2]) / Rational(det);
      Rational y = Rational(lj[0] * li[2] - li[0] * lj[2]) / Rational(det);
      point_ids.emplace(std::make_pair(x, y), 0);
    }
  p.vertices.reserve(point_ids.size());
  for (auto& [pt, id] : point_ids) {
    id = p.vertices.size();
    FacePoset::Vertex v;
    v.x = pt.first;
    v.y = pt.second;
    v.sign.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      v.sign[k] = sign8(line_value(arr.lines[k], v.x, v.y));
      if (v.sign[k] == 0) v.lines_through.push_back(k);
    }
    assert(v.lines_through.size() >= 2);
    p.vertices.push_back(std::move(v));
  }

  // edges, line by line in parameter order
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ln = arr.lines[i];
    Vec2 dir{Rational(-ln[1]), Rational(ln[0])};
    auto param = [&](const FacePoset::Vertex& v) -> Rational {
      return dir.x * v.x + dir.y * v.y;
    };

    std::vector<std::size_t> on_line;
    for (std::size_t vi = 0; vi < p.vertices.size(); ++vi)
      if (p.vertices[vi].sign[i] == 0) on_line.push_back(vi);
    std::sort(on_line.begin(), on_line.end(), [&](std::size_t a, std::size_t b) {
      return param(p.vertices[a]) < param(p.vertices[b]);
    });

    auto push_edge = [&](const Rational& rx, const Rational& ry, std::size_t lo, std::size_t hi) {
      FacePoset::Edge e;
      e.line = i;
      e.rep_x = rx;
      e.rep_y = ry;
      e.v_lo = lo;
      e.v_hi = hi;
      e.sign.resize(n);
      for (std::size_t k = 0; k < n; ++k) e.sign[k] = sign8(line_value(arr.lines[k], rx, ry));
      assert(e.sign[i] == 0);
      p.edges.push_back(std::move(e));
    };

    if (on_line.empty()) {
      Rational x0 = 0, y0 = 0;
      if (ln[1] != 0)
        y0 = Rational(-ln[2]) / Rational(ln[1]);
      else
        x0 = Rational(-ln[2]) / Rational(ln[0]);
      push_edge(x0, y0, FacePoset::Edge::kNoVertex, FacePoset::Edge::kNoVertex);
      continue;
    }
    const auto& first = p.vertices[on_line.front()];
    push_edge(first.x - dir.x, first.y - dir.y, FacePoset::Edge::kNoVertex, on_line.front());
    for (std::size_t k = 0; k + 1 < on_line.size(); ++k) {
      const auto &a = p.vertices[on_line[k]], &b = p.vertices[on_line[k + 1]];
      push_edge((a.x + b.x) / 2, (a.y + b.y) / 2, on_line[k], on_line[k + 1]);
    }
    const auto& last = p.vertices[on_line.back()];
    push_edge(last.x + dir.x, last.y + dir.y, on_line.back(), FacePoset::Edge::kNoVertex);
  }

  // chambers arise as side flips of edges
  std::map<std::vector<std::int8_t>, std::size_t> chamber_ids;
  if (n == 0) {
    chamber_ids.emplace(std::vector<std::int8_t>{}, 0);
  } else {
    for (const auto& e : p.edges)
      for (std::int8_t side : {std::int8_t(1), std::int8_t(-1)}) {
        std::vector<std::int8_t> s = e.sign;
        s[e.line] = side;
        chamber_ids.emplace(std::move(s), 0);
      }
  }
  p.chambers.reserve(chamber_ids.size());
  for (auto& [sig, id] : chamber_ids) {
    id = p.chambers.size();
    p.chambers.push_back(FacePoset::Chamber{sig});
  }
  for (auto& e : p.edges) {
    std::vector<std::int8_t> s = e.sign;
    s[e.line] = 1;
    e.chamber_pos = chamber_ids.at(s);
    s[e.line] = -1;
    e.chamber_neg = chamber_ids.at(s);
  }

  if (n >= 1) {
    const long euler = static_cast<long>(p.chambers.size()) -
                       static_cast<long>(p.edges.size()) +
                       static_cast<long>(p.vertices.size());
    if (euler != 1) throw std::logic_error("face enumeration broke the Euler count");
  }

  // circular structure around each vertex
  p.stars.resize(p.vertices.size());
  std::vector<std::vector<std::pair<std::size_t, Vec2>>> spokes(p.vertices.size());
  for (std::size_t ei = 0; ei < p.edges.size(); ++ei) {
    const auto& e = p.edges[ei];
    const auto& ln = arr.lines[e.line];
    Vec2 dir{Rational(-ln[1]), Rational(ln[0])};
    if (e.v_lo != FacePoset::Edge::kNoVertex) spokes[e.v_lo].push_back({ei, dir});
    if (e.v_hi != FacePoset::Edge::kNoVertex) spokes[e.v_hi].push_back({ei, -dir});
  }
  for (std::size_t vi = 0; vi < p.vertices.size(); ++vi) {
    auto& sp = spokes[vi];
    const auto& v = p.vertices[vi];
    std::sort(sp.begin(), sp.end(),
              [](const auto& a, const auto& b) { return ccw_less(a.second, b.second); });
    const std::size_t spoke_count = sp.size();
    assert(spoke_count == 2 * v.lines_through.size());
    auto& star = p.stars[vi];
    star.edges.reserve(spoke_count);
    star.chambers.reserve(spoke_count);
    for (std::size_t j = 0; j < spoke_count; ++j) {
      star.edges.push_back(sp[j].first);
      // a sector between consecutive spokes contains their vector sum
      Vec2 w = sp[j].second + sp[(j + 1) % spoke_count].second;
      std::vector<std::int8_t> s(n);
      for (std::size_t k = 0; k < n; ++k) {
        if (v.sign[k] != 0) {
          s[k] = v.sign[k];
        } else {
          const auto& lk = arr.lines[k];
          s[k] = sign8(Rational(lk[0]) * w.x + Rational(lk[1]) * w.y);
          assert(s[k] != 0);
        }
      }
      star.chambers.push_back(chamber_ids.at(s));
    }
  }
  return p;
}

std::array<std::size_t, 3> combinatorial_betti(const LineArrangement& arr) {
  FacePoset p = face_poset(arr);
  std::size_t b2 = 0;
  for (const auto& v : p.vertices) b2 += v.lines_through.size() - 1;
  return {1, arr.lines.size(), b2};
}

// ---------------------------------------------------------------------------
// Salvetti boundaries

namespace {

struct SalvettiCells {
  const FacePoset& p;
  std::size_t n0, n1, n2;
  std::vector<std::size_t> vertex_offset;                 // into the 2-cell range
  std::vector<std::vector<std::size_t>> cell2_chambers;   // per vertex, sorted

  explicit SalvettiCells(const FacePoset& poset) : p(poset) {
    n0 = p.chambers.size();
    n1 = 2 * p.edges.size();
    n2 = 0;
    vertex_offset.resize(p.vertices.size());
    cell2_chambers.resize(p.vertices.size());
    for (std::size_t vi = 0; vi < p.vertices.size(); ++vi) {
      vertex_offset[vi] = n2;
      cell2_chambers[vi] = p.stars[vi].chambers;
      std::sort(cell2_chambers[vi].begin(), cell2_chambers[vi].end());
      n2 += cell2_chambers[vi].size();
    }
  }

  std::size_t opposite(std::size_t edge, std::size_t chamber) const {
    const auto& e = p.edges[edge];
    assert(chamber == e.chamber_pos || chamber == e.chamber_neg);
    return e.chamber_pos + e.chamber_neg - chamber;
  }

  // 1-cell [edge, chamber]; the side with the smaller chamber id comes first
  std::size_t cell1(std::size_t edge, std::size_t chamber) const {
    const auto& e = p.edges[edge];
    assert(chamber == e.chamber_pos || chamber == e.chamber_neg);
    std::size_t lo = std::min(e.chamber_pos, e.chamber_neg);
    return 2 * edge + (chamber == lo ? 0 : 1);
  }

  std::size_t cell2(std::size_t vertex, std::size_t chamber) const {
    const auto& list = cell2_chambers[vertex];
    auto it = std::lower_bound(list.begin(), list.end(), chamber);
    assert(it != list.end() && *it == chamber);
    return vertex_offset[vertex] + static_cast<std::size_t>(it - list.begin());
  }
};

EquivariantComplex build_salvetti(const FacePoset& p, const std::vector<char>& selected,
                                  std::size_t base_chamber) {
  SalvettiCells cells(p);

  // crossing weight of the 1-cell [e, c]: one when the supporting line is
  // selected and the walk leaves its negative side
  auto crossing = [&](std::size_t e, std::size_t c) -> long {
    const auto& edge = p.edges[e];
    return (selected[edge.line] && p.chambers[c].sign[edge.line] < 0) ? 1 : 0;
  };

  // lift heights along a breadth-first tree of the chamber dual graph
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(cells.n0);
  for (std::size_t e = 0; e < p.edges.size(); ++e) {
    adj[p.edges[e].chamber_pos].push_back({e, p.edges[e].chamber_neg});
    adj[p.edges[e].chamber_neg].push_back({e, p.edges[e].chamber_pos});
  }
  std::vector<long> height(cells.n0, 0);
  std::vector<char> visited(cells.n0, 0);
  std::queue<std::size_t> bfs;
  bfs.push(base_chamber);
  visited[base_chamber] = 1;
  while (!bfs.empty()) {
    std::size_t c = bfs.front();
    bfs.pop();
    for (auto [e, c2] : adj[c]) {
      if (visited[c2]) continue;
      visited[c2] = 1;
      height[c2] = height[c] + crossing(e, c);
      bfs.push(c2);
    }
  }
  for (char flag : visited)
    if (!flag) throw std::logic_error("chamber graph is not connected");

  // the 1-cell [e, c] runs from its base chamber c to the opposite one
  auto lift_weight = [&](std::size_t e, std::size_t c) -> long {
    return height[c] + crossing(e, c) - height[cells.opposite(e, c)];
  };

  LaurentMatrix d1(cells.n0, cells.n1);
  for (std::size_t e = 0; e < p.edges.size(); ++e)
    for (std::size_t c : {p.edges[e].chamber_pos, p.edges[e].chamber_neg}) {
      std::size_t col = cells.cell1(e, c);
      d1.at(cells.opposite(e, c), col) += LaurentPoly::t(lift_weight(e, c));
      d1.at(c, col) -= LaurentPoly(1);
    }

  LaurentMatrix d2(cells.n1, cells.n2);
  for (std::size_t vi = 0; vi < p.vertices.size(); ++vi) {
    const auto& star = p.stars[vi];
    const std::size_t spokes = star.edges.size();
    const std::size_t m = spokes / 2;
    for (std::size_t c0 : cells.cell2_chambers[vi]) {
      const std::size_t col = cells.cell2(vi, c0);
      std::size_t rho = 0;
      while (star.chambers[rho] != c0) ++rho;
      auto chamber_at = [&](std::size_t j) { return star.chambers[(rho + j) % spokes]; };
      auto edge_at = [&](std::size_t j) { return star.edges[(rho + j) % spokes]; };

      // both arcs run from c0 to its antipode; the return arc enters negatively
      long level = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        std::size_t e = edge_at(j), c = chamber_at(j - 1);
        d2.at(cells.cell1(e, c), col) += LaurentPoly::t(level);
        level += lift_weight(e, c);
      }
      for (std::size_t j = m + 1; j <= spokes; ++j) {
        std::size_t e = edge_at(j), c = chamber_at(j);
        level -= lift_weight(e, c);
        d2.at(cells.cell1(e, c), col) -= LaurentPoly::t(level);
      }
      if (level != 0) throw std::logic_error("lift levels fail to close around a vertex");
    }
  }

  return EquivariantComplex{{cells.n0, cells.n1, cells.n2}, {std::move(d1), std::move(d2)}};
}

}  // namespace

IntComplex salvetti_complex(const FacePoset& poset) {
  std::vector<char> none(poset.n_lines, 0);
  return specialize(build_salvetti(poset, none, 0), 1);
}

EquivariantComplex equivariant_salvetti(const FacePoset& poset, const OmegaSubset& omega,
                                        std::optional<std::size_t> base_chamber) {
  if (omega.indices.empty()) fail(errc::empty_omega, "the selected subset of lines is empty");
  std::vector<char> selected(poset.n_lines, 0);
  for (std::size_t i : omega.indices) {
    if (i >= poset.n_lines)
      fail(errc::parse_error, "omega index " + std::to_string(i) + " out of range for " +
                                  std::to_string(poset.n_lines) + " lines");
    selected[i] = 1;
  }
  std::size_t base = base_chamber.value_or(0);
  if (base >= poset.chambers.size()) fail(errc::parse_error, "base chamber index out of range");
  EquivariantComplex c = build_salvetti(poset, selected, base);
  validate_equivariant(c);
  return c;
}

ArrangementReport pipeline(const LineArrangement& arr, const OmegaSubset& omega) {
  ArrangementReport out;
  FacePoset poset = face_poset(arr);
  out.n_chambers = poset.chambers.size();
  out.n_edges = poset.edges.size();
  out.n_vertices = poset.vertices.size();
  out.betti = combinatorial_betti(arr);

  IntComplex salv = salvetti_complex(poset);
  HomologyProfile salv_h = homology(salv);
  out.betti_match = salv_h.size() == 3;
  for (std::size_t i = 0; i < salv_h.size() && out.betti_match; ++i)
    out.betti_match = salv_h[i] == AbelianGroup::free_of_rank(out.betti[i]);

  EquivariantComplex eq = equivariant_salvetti(poset, omega);
  if (!(specialize(eq, 1) == salv))
    throw std::logic_error("equivariant boundary does not specialize to the Salvetti boundary");

  EquivariantComplex red = unit_reduce(eq);
  out.reduced_ranks = red.ranks;
  out.minimal_reached = is_minimal(red);

  if (out.minimal_reached) {
    for (std::size_t i = 0; i < red.ranks.size(); ++i)
      if (red.ranks[i] != out.betti[i])
        throw std::logic_error("minimal form has ranks away from the Betti numbers");
    out.report = verify_theorem(red);
  } else {
    PipelineReport rep;
    rep.non_minimal_residue = true;
    rep.h_base = homology(specialize(red, 1));
    rep.h_local = homology(specialize(red, -1));
    IntComplex doubled = double_cover_complex(red);
    rep.h_cover_direct = homology(doubled);
    rep.corollary2_consistent = corollary2_check(rep.h_local, rep.h_cover_direct);
    rep.mod2_consistent = (betti_mod2(doubled) == uct_mod2_dims(rep.h_cover_direct));
    out.report = std::move(rep);
  }
  return out;
}

}  // namespace covhom
