#include <gtest/gtest.h>

#include <vknot/error.hpp>
#include <vknot/gauss.hpp>
#include <vknot/generate.hpp>
#include <vknot/invariants.hpp>
#include <vknot/moves.hpp>

using namespace vknot;

namespace {

GaussDiagram G(const char* text) { return parse_gauss(text); }

bool any_chords_alternate(const GaussDiagram& d) {
  const auto table = chord_table(d);
  for (const auto& a : table) {
    for (const auto& b : table) {
      if (a.left_pos < b.left_pos && b.left_pos < a.right_pos && a.right_pos < b.right_pos) {
        return true;
      }
    }
  }
  return false;
}

const std::vector<MoveKind> kReidemeister = equivalence_moves(DiagramClass::Virtual);

}  // namespace

TEST(Sites, SpecExamples) {
  EXPECT_EQ(enumerate_sites(G("O1+ U1+"), MoveKind::R1Delete).size(), 1u);
  EXPECT_TRUE(enumerate_sites(G("O1+ U1+"), MoveKind::Welded).empty());
  EXPECT_TRUE(enumerate_sites(G("O1+ U2+ U1+ O2+"), MoveKind::Welded).empty());
  EXPECT_EQ(enumerate_sites(G("O1+ O2- U2- U1+"), MoveKind::R2Delete).size(), 1u);
  EXPECT_TRUE(enumerate_sites(G("O1+ O2+ U2+ U1+"), MoveKind::R2Delete).empty());
  EXPECT_EQ(enumerate_sites(G("O1+ O2+ U1+ U2+"), MoveKind::Welded).size(), 1u);
}

TEST(Apply, SpecExamples) {
  EXPECT_TRUE(apply_move(G("O1+ U1+"), R1Delete{0}).empty());
  EXPECT_EQ(serialize(apply_move(G("O1+ U1+"), CrossingChange{chord_id(1)})), "U1- O1-");
  EXPECT_TRUE(apply_move(G("O1+ U1+"), Virtualize{chord_id(1)}).empty());
  EXPECT_EQ(serialize(apply_move(G("O1+ O2- U2- U1+"), R2Delete{0, 2})), "");
  EXPECT_EQ(serialize(apply_move(G("O1+ O2+ U1+ U2+"), WeldedMove{0})), "O1+ O2+ U2+ U1+");
}

TEST(Apply, RejectsMissingPattern) {
  EXPECT_THROW(apply_move(G("O1+ U2+ U1+ O2+"), R1Delete{0}), MoveError);
  EXPECT_THROW(apply_move(G("O1+ U1+"), R1Delete{5}), MoveError);
  EXPECT_THROW(apply_move(G("O1+ U1+"), CrossingChange{chord_id(3)}), MoveError);
  EXPECT_THROW(apply_move(G("O1+ O2+ U2+ U1+"), R2Delete{0, 2}), MoveError);
  EXPECT_THROW(apply_move(G("O1+ U1+"), R1Insert{3, Passage::Over, Sign::Positive}), MoveError);
}

TEST(Apply, InsertionsAreUndone) {
  Rng rng(17);
  for (int k = 0; k < 60; ++k) {
    const auto d = random_diagram(rng.below(4), rng);
    for (const auto& site : enumerate_sites(d, MoveKind::R1Insert)) {
      const auto& ins = std::get<R1Insert>(site);
      const auto after = apply_move(d, site);
      EXPECT_EQ(after.chord_count(), d.chord_count() + 1);
      EXPECT_EQ(apply_move(after, R1Delete{ins.slot}), d);
      EXPECT_EQ(v_polys(after), v_polys(d));
    }
    for (const auto& site : enumerate_sites(d, MoveKind::R2Insert)) {
      const auto after = apply_move(d, site);
      bool undone = false;
      for (const auto& del : enumerate_sites(after, MoveKind::R2Delete)) {
        undone = undone || apply_move(after, del) == d;
      }
      EXPECT_TRUE(undone) << serialize(d) << " / " << format_site(site);
      EXPECT_EQ(v_polys(after), v_polys(d));
    }
  }
}

TEST(Apply, TrianglesAreInvolutions) {
  Rng rng(5);
  for (MoveKind kind : {MoveKind::R3, MoveKind::Delta}) {
    for (int k = 0; k < 200; ++k) {
      const auto d = plant_triangle(random_diagram(rng.below(4), rng), kind, rng).canonical();
      const auto sites = enumerate_sites(d, kind);
      ASSERT_FALSE(sites.empty()) << serialize(d);
      for (const auto& site : sites) {
        const auto after = apply_move(d, site);
        const auto p = v_polys(d);
        const auto q = v_polys(after);
        if (kind == MoveKind::R3) {
          EXPECT_EQ(p, q) << serialize(d) << " / " << format_site(site);
        } else {
          EXPECT_EQ(q.v1 - p.v1, q.v2 - p.v2);
          EXPECT_EQ(one_norm(q.v1 - p.v1), 1);
        }
        bool undone = false;
        for (const auto& back : enumerate_sites(after, kind)) {
          undone = undone || apply_move(after, back) == d;
        }
        EXPECT_TRUE(undone);
      }
    }
  }
}

TEST(Apply, DeltaDirectionsPair) {
  Rng rng(8);
  for (int k = 0; k < 100; ++k) {
    const auto d = plant_triangle(GaussDiagram{}, MoveKind::Delta, rng);
    const auto sites = enumerate_sites(d, MoveKind::Delta);
    ASSERT_EQ(sites.size(), 1u);
    const auto& first = std::get<DeltaMove>(sites[0]);
    const auto after = apply_move(d, sites[0]);
    const auto back = enumerate_sites(after, MoveKind::Delta);
    ASSERT_EQ(back.size(), 1u);
    EXPECT_NE(std::get<DeltaMove>(back[0]).forward, first.forward);
    EXPECT_EQ(apply_move(after, back[0]), d);
  }
}

TEST(Sites, FormatParseRoundTrip) {
  Rng rng(9);
  for (int k = 0; k < 100; ++k) {
    auto d = random_diagram(rng.below(5), rng);
    d = plant_triangle(d, k % 2 ? MoveKind::R3 : MoveKind::Delta, rng).canonical();
    for (MoveKind kind : kAllMoveKinds) {
      EXPECT_EQ(parse_move_kind(to_string(kind)), kind);
      for (const auto& site : enumerate_sites(d, kind)) {
        EXPECT_EQ(kind_of(site), kind);
        const auto text = format_site(site);
        EXPECT_EQ(format_site(parse_site(kind, text)), text);
        EXPECT_EQ(apply_move(d, parse_site(kind, text)), apply_move(d, site));
      }
    }
  }
  EXPECT_THROW(parse_move_kind("R4"), ParseError);
  EXPECT_THROW(parse_site(MoveKind::R1Delete, "pos=x"), ParseError);
  EXPECT_THROW(parse_site(MoveKind::R1Delete, "slot=1"), ParseError);
}

TEST(Sample, UniformOverSites) {
  const auto d = G("O1+ U2- U1+ O2-");
  Rng rng(1);
  for (MoveKind kind : kAllMoveKinds) {
    const auto sites = enumerate_sites(d, kind);
    for (int k = 0; k < 20; ++k) {
      const auto s = sample_site(d, kind, rng);
      EXPECT_EQ(s.has_value(), !sites.empty());
      if (s) {
        EXPECT_NO_THROW(apply_move(d, *s));
      }
    }
  }
}

TEST(Walk, SpecExamples) {
  const auto d = G("O1+ U2- U1+ O2-");
  EXPECT_EQ(random_walk(d, kReidemeister, 0, 3).diagram, d);
  const std::vector<MoveKind> r1{MoveKind::R1Insert};
  const auto grown = random_walk(GaussDiagram{}, r1, 5, 4).diagram;
  EXPECT_EQ(grown.chord_count(), 5u);
  EXPECT_FALSE(any_chords_alternate(grown));
  const auto a = random_walk(d, kReidemeister, 12, 77);
  const auto b = random_walk(d, kReidemeister, 12, 77);
  EXPECT_EQ(a.transcript, b.transcript);
  EXPECT_EQ(a.transcript.size(), 13u);
  EXPECT_EQ(a.transcript[0], "0 start | O1+ U2- U1+ O2-");
}

TEST(Walk, ReplayReproduces) {
  Rng rng(31);
  std::vector<MoveKind> all(kAllMoveKinds.begin(), kAllMoveKinds.end());
  for (int k = 0; k < 100; ++k) {
    const auto d = random_diagram(rng.below(6), rng);
    const auto walk = random_walk(d, all, 10, rng);
    const auto steps = replay(walk.transcript);
    ASSERT_EQ(steps.size(), 10u);
    EXPECT_EQ(steps.back().after, walk.diagram);
    std::size_t skipped = 0;
    for (const auto& s : steps) {
      skipped += s.site ? 0 : 1;
    }
    EXPECT_EQ(skipped, walk.skipped);
  }
}

TEST(Walk, ReplayDetectsTampering) {
  auto walk = random_walk(G("O1+ U2- U1+ O2-"), kReidemeister, 6, 2);
  auto tampered = walk.transcript;
  tampered.back() = tampered.back().substr(0, tampered.back().find('|')) + "| O1+ U1-";
  EXPECT_THROW(replay(tampered), Error);
  auto wrong = walk.transcript;
  wrong.back() = wrong.back().substr(0, wrong.back().find('|')) + "| O1+ U1+ O2- U2-";
  EXPECT_THROW(replay(wrong), MoveError);
  std::vector<std::string> garbage{"0 start | O1+ U1+", "1 Bogus pos=0 | "};
  EXPECT_THROW(replay(garbage), ParseError);
}

TEST(WalkProperty, ReidemeisterInvariance) {
  Rng rng(1001);
  for (int k = 0; k < 300; ++k) {
    auto d = random_diagram(rng.below(9), rng);
    if (k % 2) {
      d = plant_triangle(random_diagram(rng.below(6), rng), MoveKind::R3, rng);
    }
    const auto walk = random_walk(d, kReidemeister, rng.below(13), rng);
    EXPECT_EQ(v_polys(walk.diagram), v_polys(d)) << serialize(d);
  }
}

TEST(WalkProperty, WeldedKeepsDerivative) {
  Rng rng(4);
  const auto kinds = equivalence_moves(DiagramClass::Welded);
  EXPECT_EQ(kinds.size(), kReidemeister.size() + 1);
  for (int k = 0; k < 200; ++k) {
    const auto d = random_diagram(rng.below(7), rng);
    const auto walk = random_walk(d, kinds, 10, rng);
    EXPECT_EQ(derivative_at_one(v_polys(walk.diagram).v1), derivative_at_one(v_polys(d).v1));
    EXPECT_EQ(alpha3(walk.diagram), alpha3(d));
  }
}
