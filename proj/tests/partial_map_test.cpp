#include <gtest/gtest.h>

#include <random>

#include "maplab/partial_map.hpp"
#include "oracle.hpp"

namespace maplab {
namespace {

PartialPairing pairing_of(std::size_t n, const std::map<std::size_t, std::size_t>& edges) {
  PartialPairing p(n);
  for (const auto& [i, j] : edges) p.set(i, j);
  return p;
}

PartialMap worked_map() {
  const Permutation pi = Permutation::from_cycles(7, {{2, 3, 5}, {4, 7, 6}});
  return map_from_permutation(Partition({4, 3}), Partition({3, 2, 2}), pi);
}

// Five edges, bad dart t1, one mixed face.
PartialMap one_mixed_face() {
  return PartialMap(Partition({4, 3}), Partition({3, 2, 2}), pairing_of(7, {{1, 5}, {2, 3}, {3, 2}, {4, 4}, {7, 7}}));
}

TEST(Dart, FormatAndParse) {
  EXPECT_EQ(s_dart(3).to_string(), "s3");
  EXPECT_EQ(t_dart(12).to_string(), "t12");
  EXPECT_EQ(parse_dart("t7"), t_dart(7));
  EXPECT_EQ(parse_dart("s1"), s_dart(1));
  EXPECT_THROW(parse_dart("x1"), std::invalid_argument);
  EXPECT_THROW(parse_dart("s0"), std::invalid_argument);
  EXPECT_THROW(parse_dart("s"), std::invalid_argument);
  EXPECT_LT(s_dart(9), t_dart(1));
}

TEST(PartialPairing, SetAndQuery) {
  PartialPairing p(3);
  p.set(1, 2);
  EXPECT_EQ(p.image(1), 2u);
  EXPECT_EQ(p.preimage(2), 1u);
  EXPECT_FALSE(p.image(2).has_value());
  EXPECT_EQ(p.partner(t_dart(2)), s_dart(1));
  EXPECT_EQ(p.size(), 1u);
  EXPECT_THROW(p.set(1, 3), std::invalid_argument);
  EXPECT_THROW(p.set(2, 2), std::invalid_argument);
  EXPECT_THROW(p.set(4, 1), std::out_of_range);
  EXPECT_THROW(p.set(0, 1), std::out_of_range);
}

TEST(PartialMap, RejectsSizeMismatchAndBadPairs) {
  EXPECT_THROW(PartialMap(Partition({4}), Partition({3})), std::invalid_argument);
  PartialMap m(Partition({2}), Partition({2}));
  EXPECT_THROW(m.pair(s_dart(1), s_dart(2)), std::invalid_argument);
  m.pair(s_dart(1), t_dart(2));
  EXPECT_THROW(m.pair(t_dart(1), s_dart(1)), std::invalid_argument);
  m.pair(t_dart(1), s_dart(2));
  EXPECT_TRUE(m.is_complete());
}

TEST(MapModel, WorkedExampleRotationScheme) {
  EXPECT_EQ(rotation_scheme(Partition({4, 3}), Partition({3, 2, 2})).to_string(),
            "(s1 s2 s3 s4)(s5 s6 s7)(t1 t2 t3)(t4 t5)(t6 t7)");
}

TEST(MapModel, WorkedExampleEdgeInvolution) {
  EXPECT_EQ(edge_involution(worked_map().pairing()).to_string(),
            "(s1 t1)(s2 t3)(s3 t5)(s4 t7)(s5 t2)(s6 t4)(s7 t6)");
}

TEST(MapModel, WorkedExampleFaces) {
  const PartialMap m = worked_map();
  EXPECT_EQ(face_permutation(m).to_string(), "(s1 t3)(s2 t5 s6 t6 s4 t1 s5 t4 s3 t7 s7 t2)");
  EXPECT_EQ(completed_faces(m), 2u);
  EXPECT_EQ(project_to_permutation(m).to_string(), "(1)(2 6 4 5 3 7)");
  EXPECT_TRUE(unpaired_permutation(m).to_string() == "()");
  EXPECT_TRUE(bad_darts(m).empty());
  EXPECT_TRUE(is_bad_map(m));
}

TEST(MapModel, EmptyPairing) {
  const PartialMap m(Partition({4, 3}), Partition({3, 2, 2}));
  EXPECT_EQ(completed_faces(m), 0u);
  EXPECT_EQ(unpaired_permutation(m), rotation_scheme(m.alpha(), m.beta()));
  EXPECT_TRUE(bad_darts(m).empty());
  // Every partial face is a vertex, so none is mixed.
  EXPECT_TRUE(is_bad_map(m));
}

TEST(MapModel, DegreeTwoCases) {
  // Oracle: walk R then E by hand in the naive model.
  oracle::NaiveMap one{{2}, {2}, {{1, 1}}};
  const PartialMap m = one.to_map();
  EXPECT_EQ(face_permutation(m).to_string(), "(s1 s2 t1 t2)");
  EXPECT_EQ(unpaired_permutation(m).to_string(), "(s2 t2)");
  EXPECT_EQ(one.u(s_dart(2)), t_dart(2));
  EXPECT_EQ(one.u(t_dart(2)), s_dart(2));

  // Both complete maps of degree 2 have two faces: sigma0 omega0 = id.
  oracle::NaiveMap id{{2}, {2}, {{1, 1}, {2, 2}}};
  EXPECT_EQ(id.completed_faces(), 2u);
  EXPECT_EQ(completed_faces(id.to_map()), 2u);
  EXPECT_EQ(oracle::product_cycles({2}, {2}, {0, 1}), 2u);
  EXPECT_EQ(face_permutation(id.to_map()).to_string(), "(s1 t2)(s2 t1)");

  const Permutation swap = Permutation::from_cycles(2, {{1, 2}});
  const PartialMap m12 = map_from_permutation(Partition({2}), Partition({2}), swap);
  EXPECT_TRUE(project_to_permutation(m12).is_identity());
  EXPECT_EQ(project_to_permutation(m12).cycle_count(), 2u);
  EXPECT_EQ(oracle::product_cycles({2}, {2}, {1, 0}), 2u);
  EXPECT_EQ(completed_faces(m12), 2u);
}

TEST(MapModel, MixedFaceMap) {
  const PartialMap m = one_mixed_face();
  EXPECT_EQ(unpaired_permutation(m).to_string(), "(s5 s6 t6)(t1)");
  EXPECT_EQ(bad_darts(m), std::vector<Dart>{t_dart(1)});
  const auto mixed = mixed_partial_faces(m);
  ASSERT_EQ(mixed.size(), 1u);
  EXPECT_EQ(mixed[0], (std::vector<Dart>{s_dart(5), s_dart(6), t_dart(6)}));
  EXPECT_FALSE(is_bad_map(m));
  EXPECT_EQ(completed_faces(m), 2u);
}

TEST(MapModel, ProjectionRequiresCompleteMap) {
  EXPECT_THROW(project_to_permutation(one_mixed_face()), std::invalid_argument);
  EXPECT_THROW(map_from_permutation(Partition({2}), Partition({2}), Permutation::identity(3)), std::invalid_argument);
}

TEST(MapModel, DotExportListsVerticesAndEdges) {
  const std::string dot = to_dot(one_mixed_face());
  EXPECT_NE(dot.find("graph"), std::string::npos);
  EXPECT_NE(dot.find("s1"), std::string::npos);
  EXPECT_NE(dot.find("[t1]"), std::string::npos);
}

TEST(MapModel, PropertyAgreesWithNaiveModel) {
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 1500; ++iter) {
    const std::size_t n = 1 + rng() % 10;
    oracle::NaiveMap naive{oracle::random_parts(n, rng, true), oracle::random_parts(n, rng, true), {}};
    naive.s_to_t = oracle::random_pairing(n, rng() % (n + 1), rng);
    const PartialMap m = naive.to_map();

    const DartPermutation f = face_permutation(m);
    const DartPermutation e = edge_involution(m.pairing());
    const DartPermutation u = unpaired_permutation(m);
    for (Dart d : naive.darts()) {
      ASSERT_EQ(f(d), naive.face(d));
      ASSERT_EQ(e(e(d)), d);
      ASSERT_EQ(u.contains(d), !naive.paired(d));
      if (!naive.paired(d)) ASSERT_EQ(u(d), naive.u(d));
    }
    ASSERT_EQ(completed_faces(m), naive.completed_faces());
    ASSERT_EQ(bad_darts(m), naive.bad());
    ASSERT_EQ(bad_darts(m), u.fixed_points());
    ASSERT_EQ(is_bad_map(m), naive.is_bad_map());
    ASSERT_EQ(u.domain_size(), 2 * (n - m.pairing().size()));
    ASSERT_EQ(m.unpaired(Side::S), naive.unpaired(Side::S));
    ASSERT_EQ(m.unpaired(Side::T), naive.unpaired(Side::T));
  }
}

TEST(MapModel, PropertyFaceTypeIsDoubledProjectionType) {
  std::mt19937_64 rng(22);
  for (int iter = 0; iter < 500; ++iter) {
    const std::size_t n = 1 + rng() % 12;
    const Partition alpha(oracle::random_parts(n, rng, true));
    const Partition beta(oracle::random_parts(n, rng, true));
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t{1});
    std::shuffle(images.begin(), images.end(), rng);
    const Permutation pi = Permutation::from_images(images);
    const PartialMap m = map_from_permutation(alpha, beta, pi);
    const Permutation proj = project_to_permutation(m);
    ASSERT_EQ(proj, compose(compose(compose(canonical_permutation(alpha), pi), canonical_permutation(beta)),
                            inverse(pi)));
    const Partition type = proj.cycle_type();
    std::vector<std::size_t> doubled;
    for (std::size_t p : type.parts()) doubled.push_back(2 * p);
    auto lengths = face_permutation(m).cycle_lengths();
    std::sort(lengths.rbegin(), lengths.rend());
    ASSERT_EQ(lengths, doubled);
    ASSERT_EQ(completed_faces(m), proj.cycle_count());
  }
}

TEST(MapModel, BruteForceFacesEqualProductCyclesUpToFive) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& alpha : all_partitions(n)) {
      for (const auto& beta : all_partitions(n)) {
        std::vector<std::size_t> pi(n);
        std::iota(pi.begin(), pi.end(), std::size_t{0});
        const std::vector<std::size_t> a(alpha.parts().begin(), alpha.parts().end());
        const std::vector<std::size_t> b(beta.parts().begin(), beta.parts().end());
        do {
          std::vector<std::size_t> images(n);
          for (std::size_t i = 0; i < n; ++i) images[i] = pi[i] + 1;
          const PartialMap m = map_from_permutation(alpha, beta, Permutation::from_images(images));
          ASSERT_EQ(completed_faces(m), oracle::product_cycles(a, b, pi));
        } while (std::next_permutation(pi.begin(), pi.end()));
      }
    }
  }
}

}  // namespace
}  // namespace maplab
