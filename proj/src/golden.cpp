#include "knotsig/triangle.hpp"

#include <initializer_list>
#include <utility>

namespace knotsig {

namespace {

SignatureRow make_row(int c, std::initializer_list<std::pair<int, long long>> cells) {
  SignatureRow row;
  row.c = c;
  for (const auto& [sigma, v] : cells) row.counts.emplace(sigma, v);
  return row;
}

Triangle build_golden() {
  Triangle g;
  g.rows.push_back(make_row(3, {{2, 1}}));
  g.rows.push_back(make_row(4, {{0, 1}}));
  g.rows.push_back(make_row(5, {{2, 2}, {4, 1}}));
  g.rows.push_back(make_row(6, {{-2, 1}, {0, 3}, {2, 1}}));
  g.rows.push_back(make_row(7, {{0, 1}, {2, 5}, {4, 4}, {6, 1}}));
  g.rows.push_back(make_row(8, {{-4, 1}, {-2, 5}, {0, 9}, {2, 5}, {4, 1}}));
  g.rows.push_back(make_row(9, {{-2, 1}, {0, 6}, {2, 15}, {4, 14}, {6, 6}, {8, 1}}));
  g.rows.push_back(
      make_row(10, {{-6, 1}, {-4, 7}, {-2, 20}, {0, 29}, {2, 20}, {4, 7}, {6, 1}}));
  g.rows.push_back(make_row(
      11, {{-4, 1}, {-2, 8}, {0, 27}, {2, 50}, {4, 49}, {6, 27}, {8, 8}, {10, 1}}));
  g.rows.push_back(make_row(
      12, {{-8, 1}, {-6, 9}, {-4, 35}, {-2, 76}, {0, 99}, {2, 76}, {4, 35}, {6, 9}, {8, 1}}));
  g.rows.push_back(make_row(13, {{-6, 1},
                                 {-4, 10},
                                 {-2, 44},
                                 {0, 111},
                                 {2, 176},
                                 {4, 175},
                                 {6, 111},
                                 {8, 44},
                                 {10, 10},
                                 {12, 1}}));
  g.rows.push_back(make_row(14, {{-10, 1},
                                 {-8, 11},
                                 {-6, 54},
                                 {-4, 155},
                                 {-2, 286},
                                 {0, 351},
                                 {2, 286},
                                 {4, 155},
                                 {6, 54},
                                 {8, 11},
                                 {10, 1}}));
  return g;
}

}  // namespace

const Triangle& golden_table() {
  static const Triangle g = build_golden();
  return g;
}

}  // namespace knotsig
