#include "sl2tiling/fixtures.hpp"

#include <cstdlib>

namespace sl2::fixtures {

TilingWindow enough_ones_window() {
  static const int rows[11][11] = {
      {10, 23, 13, 3, 5, 2, 3, 7, 11, 4, 1},   {23, 53, 30, 7, 12, 5, 8, 19, 30, 11, 3},
      {13, 30, 17, 4, 7, 3, 5, 12, 19, 7, 2},  {16, 37, 21, 5, 9, 4, 7, 17, 27, 10, 3},
      {3, 7, 4, 1, 2, 1, 2, 5, 8, 3, 1},       {5, 12, 7, 2, 5, 3, 7, 18, 29, 11, 4},
      {2, 5, 3, 1, 3, 2, 5, 13, 21, 8, 3},     {5, 13, 8, 3, 10, 7, 18, 47, 76, 29, 11},
      {3, 8, 5, 2, 7, 5, 13, 34, 55, 21, 8},   {4, 11, 7, 3, 11, 8, 21, 55, 89, 34, 13},
      {1, 3, 2, 1, 4, 3, 8, 21, 34, 13, 5},
  };
  std::vector<BigInt> values;
  for (const auto& row : rows) {
    for (int v : row) values.emplace_back(v);
  }
  return TilingWindow({1, 11}, {1, 11}, std::move(values));
}

std::map<Cell, BigInt> sparse_ones_seeds() {
  std::map<Cell, BigInt> seeds;
  for (std::int64_t k = -5; k <= 5; ++k) {
    seeds[{0, k}] = BigInt(std::abs(k) + 1);
    seeds[{k, 0}] = BigInt(std::abs(k) + 1);
  }
  return seeds;
}

TilingWindow sparse_ones_window() { return determinant_fill(sparse_ones_seeds(), {-5, 5}, {-5, 5}); }

PeriodicTriangulationSpec staircase_spec() {
  return {{Arc::connecting(0, 0), Arc::connecting(0, 1)}, {-1, 1}, {{}, {}}};
}

PeriodicTriangulationSpec square_spec() {
  return {{Arc::connecting(0, 0), Arc::connecting(-2, 0)}, {-2, 1}, {{Arc::upper(-2, 0)}, {}}};
}

PeriodicTriangulationSpec period4_spec() {
  return {{Arc::connecting(0, 0), Arc::connecting(-3, 0), Arc::connecting(-3, 2), Arc::connecting(-5, 2)},
          {-5, 5},
          {{Arc::upper(-3, -1), Arc::upper(-3, 0)},
           {Arc::lower(0, 2)},
           {Arc::upper(-5, -3)},
           {Arc::lower(2, 4), Arc::lower(2, 5)}}};
}

}  // namespace sl2::fixtures
