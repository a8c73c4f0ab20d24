#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "fischer/spaces.hpp"

using namespace fischer;

namespace {

int count_quadratic_points(int dim, bool plus) {
  // Independent evaluation of the quadratic form, coordinate by coordinate.
  int count = 0;
  for (int v = 1; v < (1 << dim); ++v) {
    std::vector<int> x(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) x[static_cast<std::size_t>(i)] = (v >> i) & 1;
    int q = 0;
    for (int i = 0; i + 1 < dim; i += 2) q += x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i + 1)];
    if (!plus) q += x[static_cast<std::size_t>(dim - 2)] + x[static_cast<std::size_t>(dim - 1)];
    count += q % 2;
  }
  return count;
}

bool has_line(const FischerSpace& s, Line l) {
  std::sort(l.begin(), l.end());
  return std::binary_search(s.lines().begin(), s.lines().end(), l);
}

}  // namespace

TEST(Spaces, SymmetricGroupSpaces) {
  const auto s3 = sym_space(3);
  EXPECT_EQ(s3.point_count(), 3);
  EXPECT_EQ(s3.lines().size(), 1U);
  const auto s4 = sym_space(4);
  EXPECT_EQ(s4.point_count(), 6);
  EXPECT_EQ(s4.valency(), 4);
  // Points are pairs in lexicographic order; lines are {ij, ik, jk}.
  EXPECT_TRUE(has_line(s4, {0, 1, 3}));  // (12) (13) (23)
  EXPECT_EQ(s4.name(5), "(3 4)");
  EXPECT_THROW(sym_space(1), std::domain_error);
}

TEST(Spaces, ClassicalGroupSpaces) {
  const auto sp6 = symplectic_space(6);
  EXPECT_EQ(sp6.point_count(), 63);
  EXPECT_EQ(sp6.valency(), 32);
  const auto om6 = orthogonal_space(6, false);
  EXPECT_EQ(om6.point_count(), 36);
  EXPECT_EQ(om6.valency(), 20);
  const auto op4 = orthogonal_space(4, true);
  EXPECT_EQ(op4.point_count(), 6);
  EXPECT_EQ(op4.valency(), 2);
  const auto comps = connected_components(op4);
  ASSERT_EQ(comps.size(), 2U);
  EXPECT_EQ(comps[0].size(), 3U);
  EXPECT_EQ(comps[1].size(), 3U);
  for (int dim : {4, 6, 8}) {
    EXPECT_EQ(orthogonal_space(dim, true).point_count(), count_quadratic_points(dim, true));
    EXPECT_EQ(orthogonal_space(dim, false).point_count(), count_quadratic_points(dim, false));
  }
  EXPECT_THROW(symplectic_space(5), std::domain_error);
  EXPECT_THROW(orthogonal_space(2, true), std::domain_error);
}

TEST(Spaces, Extensions) {
  const auto e14 = extend_space(sym_space(4), 1);
  EXPECT_EQ(e14.point_count(), 12);
  EXPECT_EQ(e14.valency(), 8);
  const auto e25 = extend_space(sym_space(5), 2);
  EXPECT_EQ(e25.point_count(), 40);
  EXPECT_EQ(e25.valency(), 24);
  const auto e13 = extend_space(sym_space(3), 1);
  EXPECT_EQ(e13.point_count(), 6);
  EXPECT_EQ(e13.lines().size(), 4U);
  for (Point x = 0; x < 6; ++x) EXPECT_EQ(e13.degree(x), 4);  // two lines per point
  EXPECT_THROW(extend_space(sym_space(4), 0), std::domain_error);
}

TEST(Spaces, ExtensionAdjacencyIsKroneckerWithAllOnes) {
  const auto base = sym_space(5);
  const auto ext = extend_space(base, 2);
  const int nu = base.point_count();
  for (Point a = 0; a < ext.point_count(); ++a)
    for (Point b = 0; b < ext.point_count(); ++b)
      EXPECT_EQ(ext.collinear(a, b), base.collinear(a % nu, b % nu)) << a << "," << b;
}

TEST(Spaces, RootSystemSpaces) {
  const auto a2 = root_space('A', 2);
  EXPECT_EQ(a2.point_count(), 3);
  EXPECT_EQ(a2.lines().size(), 1U);
  const auto e8 = root_space('E', 8);
  EXPECT_EQ(e8.point_count(), 120);
  EXPECT_EQ(e8.valency(), 56);
  const auto d4 = root_space('D', 4);
  EXPECT_EQ(d4.point_count(), 12);
  EXPECT_EQ(d4.valency(), 8);
  EXPECT_EQ(root_space('E', 7).point_count(), 63);
  EXPECT_EQ(root_space('E', 6).point_count(), 36);
  EXPECT_THROW(root_space('B', 3), std::domain_error);
  EXPECT_THROW(root_space('E', 9), std::domain_error);
}

TEST(Spaces, ThirdPoint) {
  const auto s4 = sym_space(4);
  EXPECT_EQ(third_point(s4, 0, 3), 1);  // (12) o (23) = (13)
  const auto a3 = affine_plane();
  EXPECT_EQ(third_point(a3, 0, 1), 2);  // (0,0) o (0,1) = (0,2)
  const auto sp6 = symplectic_space(6);
  // Points of Sp(6) are the nonzero vectors 1..63 in increasing order.
  for (Point x = 0; x < 63; ++x)
    for (Point y : sp6.neighbors(x)) EXPECT_EQ(third_point(sp6, x, y), ((x + 1) ^ (y + 1)) - 1);
  EXPECT_THROW(third_point(s4, 0, 0), std::domain_error);
  EXPECT_THROW(third_point(s4, 0, 5), std::domain_error);
}

TEST(Spaces, ThirdPointIsConsistentOnEveryLine) {
  for (const auto& s : {sym_space(6), symplectic_space(6), orthogonal_space(8, true), extend_space(sym_space(4), 2),
                        root_space('E', 7), affine_plane(), fano_plane()}) {
    for (const Line& l : s.lines()) {
      EXPECT_EQ(s.third(l[0], l[1]), l[2]);
      EXPECT_EQ(s.third(l[1], l[2]), l[0]);
      EXPECT_EQ(s.third(l[0], l[2]), l[1]);
    }
  }
}

TEST(Spaces, PlaneSpans) {
  const auto s4 = sym_space(4);
  const auto span = plane_span(s4, s4.lines()[0], s4.lines()[1]);
  EXPECT_EQ(span.points.size(), 6U);
  EXPECT_TRUE(is_dual_affine_plane(span.space));

  const auto a3 = affine_plane();
  const auto aspan = plane_span(a3, a3.lines()[0], a3.lines()[1]);
  EXPECT_EQ(aspan.points.size(), 9U);
  EXPECT_TRUE(is_affine_plane(aspan.space));

  const auto fano = fano_plane();
  EXPECT_EQ(plane_span(fano, {0, 1, 2}, {0, 3, 4}).points.size(), 7U);
  EXPECT_THROW(plane_span(s4, s4.lines()[0], s4.lines()[0]), std::domain_error);
}

TEST(Spaces, FischerAxiom) {
  for (const auto& s : {sym_space(5), sym_space(7), symplectic_space(6), orthogonal_space(6, false),
                        orthogonal_space(8, true), extend_space(sym_space(5), 1), root_space('D', 5),
                        dual_affine_plane()}) {
    const auto r = verify_fischer_axiom(s);
    EXPECT_TRUE(r.is_fischer) << s.label();
    EXPECT_EQ(r.affine_planes, 0) << s.label();
    EXPECT_TRUE(r.symplectic_type());
  }
  // Sym(4) is a single dual affine plane.
  EXPECT_EQ(verify_fischer_axiom(sym_space(4)).dual_affine_planes, 1);

  const auto a3 = verify_fischer_axiom(affine_plane());
  EXPECT_TRUE(a3.is_fischer);
  EXPECT_EQ(a3.affine_planes, 1);
  EXPECT_FALSE(a3.symplectic_type());

  const auto fano = verify_fischer_axiom(fano_plane());
  EXPECT_FALSE(fano.is_fischer);
  ASSERT_TRUE(fano.witness.has_value());
}

TEST(Spaces, ExtensionKeepsAffineCensusStatus) {
  EXPECT_EQ(verify_fischer_axiom(extend_space(sym_space(4), 1)).affine_planes, 0);
  const auto ext = verify_fischer_axiom(extend_space(affine_plane(), 1));
  EXPECT_GT(ext.affine_planes, 0);
}

TEST(Spaces, SigmaPointMaps) {
  const auto s3 = sym_space(3);
  EXPECT_EQ(sigma_point_map(s3, 0).image, (std::vector<Point>{0, 2, 1}));

  const auto s4 = sym_space(4);
  // (12) fixes (12), (34); swaps (13)<->(23), (14)<->(24).
  EXPECT_EQ(sigma_point_map(s4, 0).image, (std::vector<Point>{0, 3, 4, 1, 2, 5}));

  const auto fano = fano_plane();
  const auto s = sigma_point_map(fano, 0);
  // Line {x2,x4,x6} goes to {x3,x5,x7}, which is not a line.
  EXPECT_TRUE(has_line(fano, {1, 3, 5}));
  EXPECT_EQ(s.image[1], 2);
  EXPECT_EQ(s.image[3], 4);
  EXPECT_EQ(s.image[5], 6);
  EXPECT_FALSE(has_line(fano, {2, 4, 6}));
  EXPECT_TRUE(non_preserved_line(fano, s).has_value());

  for (const auto& sp : {symplectic_space(6), extend_space(sym_space(4), 1)})
    for (Point x = 0; x < sp.point_count(); ++x) {
      const auto p = sigma_point_map(sp, x);
      EXPECT_EQ(p.image[static_cast<std::size_t>(x)], x);
      EXPECT_TRUE(p.compose(p).is_identity());
    }
}

TEST(Spaces, ThreeTranspositionProperty) {
  const auto s5 = sym_space(5);
  const auto r = verify_3transposition(s5);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.injective);
  EXPECT_EQ(r.max_order, 3);
  for (Point x = 0; x < 10; ++x)
    for (Point y = 0; y < 10; ++y) {
      const auto ord = sigma_point_map(s5, x).compose(sigma_point_map(s5, y)).order();
      EXPECT_EQ(ord, x == y ? 1 : (s5.collinear(x, y) ? 3 : 2));
    }
  EXPECT_TRUE(verify_3transposition(affine_plane()).passed());

  const auto fano = verify_3transposition(fano_plane());
  EXPECT_FALSE(fano.automorphisms);
  ASSERT_TRUE(fano.line_witness.has_value());
}

TEST(Spaces, ComponentsAndOrbits) {
  EXPECT_EQ(connected_components(sym_space(5)).size(), 1U);
  EXPECT_EQ(connected_components(orthogonal_space(4, true)).size(), 2U);
  EXPECT_EQ(connected_components(disjoint_union(sym_space(3), sym_space(3))).size(), 2U);
  EXPECT_EQ(sigma_orbits(symplectic_space(6)).size(), 1U);
  EXPECT_EQ(orbit_representatives(orthogonal_space(8, true)), (std::vector<Point>{0}));
}

TEST(Spaces, SubspaceClosure) {
  const auto s5 = sym_space(5);
  // (12)=0, (23)=4 close to {(12),(13),(23)}.
  const auto c = subspace_closure(s5, {0, 4});
  EXPECT_EQ(c.points, (std::vector<Point>{0, 1, 4}));
  EXPECT_EQ(c.space.lines().size(), 1U);
  // (12) and (34) are not collinear.
  EXPECT_EQ(subspace_closure(s5, {0, 7}).points.size(), 2U);
  // Two points of the affine plane close to their line; three non-collinear
  // points generate the whole plane.
  EXPECT_EQ(subspace_closure(affine_plane(), {3, 8}).points.size(), 3U);
  EXPECT_EQ(subspace_closure(affine_plane(), {0, 1, 3}).points.size(), 9U);
}

TEST(Spaces, RejectsInvalidLineSets) {
  EXPECT_THROW(FischerSpace(4, {{0, 1, 2}, {0, 1, 3}}), std::invalid_argument);
  EXPECT_THROW(FischerSpace(3, {{0, 0, 1}}), std::invalid_argument);
  EXPECT_THROW(FischerSpace(3, {{0, 1, 3}}), std::invalid_argument);
}

TEST(SpaceIo, ParsesTextFormat) {
  const auto s = parse_space_text("# five points\npoints 5\nline 1 2 3\nline 0 3 4  # second\n");
  EXPECT_EQ(s.point_count(), 5);
  EXPECT_EQ(s.lines().size(), 2U);
  EXPECT_EQ(s.third(0, 4), 3);
}

TEST(SpaceIo, ReportsLineNumbers) {
  auto line_of = [](const std::string& text) {
    try {
      parse_space_text(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("points 4\nline 0 1 2\n\nline 0 1 3\n"), 4);  // overlapping
  EXPECT_EQ(line_of("points 4\nline 0 1 2\nline 2 1 0\n"), 3);    // duplicate
  EXPECT_EQ(line_of("points 3\nline 0 1 5\n"), 2);
  EXPECT_EQ(line_of("line 0 1 2\n"), 1);
  EXPECT_EQ(line_of("points 3\nplane 0 1 2\n"), 2);
  EXPECT_EQ(line_of("points 3\nline 0 1\n"), 2);
  EXPECT_EQ(line_of("points 3\nline 0 0 1\n"), 2);
  EXPECT_EQ(line_of("# nothing\n"), 1);
}

TEST(SpaceIo, RoundTrips) {
  const auto s = extend_space(sym_space(4), 1);
  const auto json = to_json_text(s);
  EXPECT_EQ(json.rfind("{\"label\":\"Ext(1,Sym(4))\",\"points\":12,\"lines\":[[", 0), 0U);
  const auto back = space_from_json_text(json);
  EXPECT_EQ(back.lines(), s.lines());
  EXPECT_EQ(to_json_text(back), json);
  EXPECT_EQ(parse_space_text(to_space_text(s)).lines(), s.lines());
}
