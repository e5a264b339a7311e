#include "walsh/enumeration.hpp"

#include <array>

namespace walsh::reference {

namespace {

CountTable from_triples(std::initializer_list<std::array<unsigned, 3>> triples) {
  CountTable t;
  for (const auto& r : triples) t.rows.push_back({r[0], r[1], Integer(r[2])});
  return t;
}

}  // namespace

CountTable toroidal_cores() {
  static constexpr unsigned kCounts[] = {
      1, 0, 0, 2, 1, 1, 0, 1, 1, 1, 1, 1, 1, 2, 1, 2, 1, 2, 2, 2,
      2, 3, 3, 4, 2, 4, 4, 5, 4, 5, 6, 9, 6, 8, 8, 12, 11, 12, 12, 18,
      18, 21, 18, 26, 28, 33, 32, 40, 44, 57, 53, 65, 70, 89, 93, 106, 115, 147, 158, 184,
  };
  CountTable t;
  for (unsigned i = 0; i < std::size(kCounts); ++i) t.rows.push_back({5 + i, std::nullopt, Integer(kCounts[i])});
  return t;
}

CountTable crowns() {
  return from_triples({
      {9, 19, 1}, {10, 20, 1}, {12, 27, 1}, {13, 28, 1},
      {14, 29, 1}, {15, 30, 1}, {16, 36, 1}, {17, 37, 1},
      {18, 38, 2}, {19, 39, 1}, {20, 40, 1}, {20, 45, 1},
      {21, 46, 1}, {22, 47, 2}, {23, 48, 2}, {24, 49, 1},
      {24, 54, 1}, {25, 50, 1}, {25, 55, 1}, {26, 56, 3},
      {27, 57, 3}, {28, 58, 3}, {28, 63, 1}, {29, 59, 1},
      {29, 64, 1}, {30, 60, 1}, {30, 65, 3}, {31, 66, 4},
      {32, 67, 4}, {32, 72, 1}, {33, 68, 3}, {33, 73, 1},
      {34, 69, 1}, {34, 74, 4}, {35, 70, 1}, {35, 75, 5},
      {36, 76, 8}, {36, 81, 1}, {37, 77, 5}, {37, 82, 1},
      {38, 78, 4}, {38, 83, 4}, {39, 79, 1}, {39, 84, 7},
      {40, 80, 1}, {40, 85, 10}, {40, 90, 1}, {41, 86, 10},
      {41, 91, 1}, {42, 87, 7}, {42, 92, 5}, {43, 88, 4},
      {43, 93, 8}, {44, 89, 1}, {44, 94, 16}, {44, 99, 1},
      {45, 90, 1}, {45, 95, 16}, {45, 100, 1}, {46, 96, 16},
      {46, 101, 5}, {47, 97, 8}, {47, 102, 10}, {48, 98, 5},
      {48, 103, 20}, {48, 108, 1}, {49, 99, 1}, {49, 104, 26},
      {49, 109, 1}, {50, 100, 1}, {50, 105, 26}, {50, 110, 6},
      {51, 106, 20}, {51, 111, 12}, {52, 107, 10}, {52, 112, 29},
      {52, 117, 1}, {53, 108, 5}, {53, 113, 38}, {53, 118, 1},
      {54, 109, 1}, {54, 114, 50}, {54, 119, 6}, {55, 110, 1},
      {55, 115, 38}, {55, 120, 14}, {56, 116, 29}, {56, 121, 35},
      {56, 126, 1}, {57, 117, 12}, {57, 122, 57}, {57, 127, 1},
      {58, 118, 6}, {58, 123, 76}, {58, 128, 7}, {59, 119, 1},
      {59, 124, 76}, {59, 129, 16}, {60, 120, 1}, {60, 125, 57},
      {60, 130, 47}, {60, 135, 1}, {61, 126, 35}, {61, 131, 79},
      {61, 136, 1}, {62, 127, 14}, {62, 132, 126}, {62, 137, 7},
      {63, 128, 6}, {63, 133, 133}, {63, 138, 19}, {64, 129, 1},
      {64, 134, 126}, {64, 139, 56}, {64, 144, 1},
  });
}

CountTable projective() {
  return from_triples({
      {5, 10, 1}, {6, 11, 1}, {6, 12, 1}, {7, 12, 3},
      {7, 13, 5}, {7, 14, 5}, {7, 15, 1}, {8, 13, 7},
      {8, 14, 21}, {8, 15, 34}, {8, 16, 28}, {8, 17, 10},
      {8, 18, 2}, {9, 14, 17}, {9, 15, 76}, {9, 16, 197},
      {9, 17, 272}, {9, 18, 234}, {9, 19, 120}, {9, 20, 40},
      {9, 21, 6},
  });
}

CountTable toroidal() {
  return from_triples({
      {8, 18, 1}, {8, 19, 1}, {9, 19, 3}, {9, 20, 5},
      {9, 21, 3}, {10, 20, 17}, {10, 21, 39}, {10, 22, 44},
      {10, 23, 24}, {10, 24, 3}, {11, 21, 67}, {11, 22, 245},
      {11, 23, 419}, {11, 24, 396}, {11, 25, 204}, {11, 26, 50},
      {11, 27, 7}, {12, 22, 277}, {12, 23, 1361}, {12, 24, 3274},
      {12, 25, 4598}, {12, 26, 4061}, {12, 27, 2295}, {12, 28, 823},
      {12, 29, 195}, {12, 30, 21},
  });
}

}  // namespace walsh::reference
