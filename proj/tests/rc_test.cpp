#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "schubert/poly.hpp"
#include "schubert/rc.hpp"
#include "schubert/schubert.hpp"

using namespace schubert;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

std::string golden(const std::string& name) {
  std::ifstream is(std::string(GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

RCGraph graph(std::size_t n, std::vector<Cell> cells) {
  return RCGraph(n, std::move(cells));
}

const RCGraph kFig1 = graph(5, {{1, 2}, {1, 4}, {2, 1}, {2, 2}, {4, 1}});

}  // namespace

TEST(RCGraph, RejectsCellsOutsideStaircase) {
  EXPECT_THROW(graph(3, {{1, 4}}), std::invalid_argument);
  EXPECT_THROW(graph(3, {{1, 1}, {1, 1}}), std::invalid_argument);
}

TEST(RcFromPair, Examples) {
  Word a{4, 2, 3, 2, 4};
  std::vector<int> alpha{1, 1, 2, 2, 4};
  EXPECT_EQ(rc_from_pair(a, alpha, 5), kFig1);
  EXPECT_TRUE(rc_from_pair(Word{}, std::vector<int>{}, 3).empty());
  EXPECT_EQ(rc_from_pair(Word{1}, std::vector<int>{1}, 2), graph(2, {{1, 1}}));
  EXPECT_EQ(word_product(Word{1}, 2), P("21"));
  EXPECT_EQ(word_product(a, 5), P("15342"));
}

TEST(RcFromPair, RejectsIncompatible) {
  // Strict increase required at the ascent 1 < 2.
  EXPECT_THROW(rc_from_pair(Word{1, 2}, std::vector<int>{1, 1}, 3),
               IncompatibleSequence);
  EXPECT_THROW(rc_from_pair(Word{2}, std::vector<int>{3}, 3), IncompatibleSequence);
  EXPECT_THROW(rc_from_pair(Word{2, 1}, std::vector<int>{2, 1}, 3),
               IncompatibleSequence);
  // Two letters landing on the same box.
  EXPECT_THROW(rc_from_pair(Word{2, 2}, std::vector<int>{1, 1}, 3),
               IncompatibleSequence);
}

TEST(RcWord, Examples) {
  auto [a, alpha] = rc_word(kFig1);
  EXPECT_EQ(a, (Word{4, 2, 3, 2, 4}));
  EXPECT_EQ(alpha, (std::vector<int>{1, 1, 2, 2, 4}));
  auto [e, ea] = rc_word(RCGraph(4));
  EXPECT_TRUE(e.empty() && ea.empty());
  auto [s, sa] = rc_word(graph(2, {{1, 1}}));
  EXPECT_EQ(s, Word{1});
  EXPECT_EQ(sa, std::vector<int>{1});
  EXPECT_TRUE(is_rc_graph_of(kFig1, P("15342")));
}

TEST(BottomTop, Examples) {
  const auto w = P("25143");
  EXPECT_EQ(render(bottom_rc(w)), golden("rc_25143_bottom.txt"));
  EXPECT_EQ(top_rc(w), graph(5, {{1, 1}, {1, 3}, {1, 4}, {2, 1}, {2, 3}}));
  EXPECT_EQ(render(top_rc(w)), golden("rc_25143_top.txt"));
  EXPECT_EQ(render(kFig1), golden("rc_15342_example.txt"));
  EXPECT_TRUE(bottom_rc(Permutation::identity(4)).empty());
  EXPECT_TRUE(top_rc(Permutation::identity(4)).empty());
  EXPECT_EQ(bottom_rc(P("4321")),
            graph(4, {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}}));
  // bottom of 132^{-1} = 132 is {(2,1)}, transposed.
  EXPECT_EQ(top_rc(P("132")), graph(3, {{1, 2}}));
}

TEST(LadderMoves, Examples) {
  auto d = bottom_rc(P("132"));
  EXPECT_EQ(d, graph(3, {{2, 1}}));
  EXPECT_EQ(ladder_moves(d), (std::vector<LadderMove>{{2, 1, 1}}));
  EXPECT_TRUE(ladder_moves(bottom_rc(Permutation::longest(5))).empty());

  auto moved = apply_ladder(d, {2, 1, 1});
  EXPECT_EQ(moved, graph(3, {{1, 2}}));
  EXPECT_THROW(apply_ladder(moved, {2, 1, 1}), IllegalMove);
  EXPECT_THROW(apply_ladder(d, {2, 1, 0}), IllegalMove);
}

TEST(LadderMoves, ClimbsThroughPairedRows) {
  // Row 2 holds crosses at both columns 2 and 3, so the cross at (3,2)
  // jumps to row 1.
  auto d = graph(6, {{1, 1}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}});
  auto moves = ladder_moves(d);
  EXPECT_NE(std::find(moves.begin(), moves.end(), LadderMove{3, 2, 1}), moves.end());
  EXPECT_EQ(apply_ladder(d, {3, 2, 1}),
            graph(6, {{1, 1}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}}));
}

// Sequence of moves starting at the bottom graph with rows 1, 2, 3 holding
// 1, 2, 3 left-justified crosses (n = 6).
TEST(LadderMoves, CaseTwoChain) {
  const auto w = code_to_perm({1, 2, 3, 0, 0, 0});
  auto d0 = bottom_rc(w);
  EXPECT_EQ(d0, graph(6, {{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}}));
  auto d1 = apply_ladder(d0, {2, 2, 1});
  EXPECT_EQ(d1, graph(6, {{1, 1}, {1, 3}, {2, 1}, {3, 1}, {3, 2}, {3, 3}}));
  auto d2 = apply_ladder(d1, {3, 3, 2});
  EXPECT_EQ(d2, graph(6, {{1, 1}, {1, 3}, {2, 1}, {2, 4}, {3, 1}, {3, 2}}));
  auto d3 = apply_ladder(d2, {2, 4, 1});
  EXPECT_EQ(d3, graph(6, {{1, 1}, {1, 3}, {1, 5}, {2, 1}, {3, 1}, {3, 2}}));
  auto d4 = apply_ladder(d3, {3, 2, 2});
  EXPECT_EQ(d4, graph(6, {{1, 1}, {1, 3}, {1, 5}, {2, 1}, {2, 3}, {3, 1}}));
  for (const auto& d : {d1, d2, d3, d4}) EXPECT_TRUE(is_rc_graph_of(d, w));
}

// Bottom graph with rows holding 1, 3, 2 crosses; four new graphs reached.
TEST(LadderMoves, CaseThreeFourNewGraphs) {
  const auto w = code_to_perm({1, 3, 2, 0, 0, 0});
  auto bot = bottom_rc(w);
  auto a = apply_ladder(bot, {2, 3, 1});
  EXPECT_EQ(a, graph(6, {{1, 1}, {1, 4}, {2, 1}, {2, 2}, {3, 1}, {3, 2}}));
  auto b = apply_ladder(a, {2, 2, 1});
  EXPECT_EQ(b, graph(6, {{1, 1}, {1, 3}, {1, 4}, {2, 1}, {3, 1}, {3, 2}}));
  auto c = apply_ladder(b, {3, 2, 2});
  EXPECT_EQ(c, graph(6, {{1, 1}, {1, 3}, {1, 4}, {2, 1}, {2, 3}, {3, 1}}));
  auto e = apply_ladder(bot, {3, 2, 1});
  EXPECT_EQ(e, graph(6, {{1, 1}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}}));
  auto all = all_rc_graphs(w);
  for (const auto& d : {a, b, c, e}) EXPECT_TRUE(all.contains(d));
}

TEST(AllRcGraphs, Examples) {
  EXPECT_EQ(all_rc_graphs(P("1432")).size(), 5u);
  EXPECT_EQ(all_rc_graphs(Permutation::identity(4)).size(), 1u);
  EXPECT_EQ(all_rc_graphs(Permutation::longest(5)).size(), 1u);
}

TEST(RcWeight, Examples) {
  EXPECT_EQ(rc_weight(kFig1), (ExponentVec{2, 2, 0, 1, 0}));
  EXPECT_EQ(rc_weight(RCGraph(3)), ExponentVec(3));
  for (const auto& w : all_permutations(5))
    ASSERT_EQ(rc_weight(bottom_rc(w)), inversion_code(w));
}

TEST(RcProperties, ExhaustiveUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& w : all_permutations(n)) {
      const auto graphs = all_rc_graphs(w);
      const auto top = top_rc(w);
      ASSERT_TRUE(graphs.contains(top)) << w;
      const auto top_weight = rc_weight(top);
      const auto bot_weight = rc_weight(bottom_rc(w));
      for (const auto& d : graphs) {
        ASSERT_EQ(d.size(), w.length());
        auto [a, alpha] = rc_word(d);
        ASSERT_EQ(word_product(a, n), w);
        ASSERT_EQ(rc_from_pair(a, alpha, n), d);
        const auto wt = rc_weight(d);
        if (d != bottom_rc(w)) ASSERT_TRUE(revlex_compare(wt, bot_weight) < 0) << w;
        if (d != top) ASSERT_TRUE(revlex_compare(wt, top_weight) > 0) << w;
        for (auto m : ladder_moves(d))
          ASSERT_TRUE(revlex_compare(rc_weight(apply_ladder(d, m)), wt) < 0);
      }
    }
}
