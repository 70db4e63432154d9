#include "flatcat/golden.hpp"

namespace flatcat::golden {

const std::vector<Matrix>& matrices() {
  static const std::vector<Matrix> kMatrices{
      {"R", StatKind::runs(), 1, 1,
       {{1, 0, 0, 0, 0, 0, 0, 0},
        {1, 1, 0, 0, 0, 0, 0, 0},
        {1, 3, 1, 0, 0, 0, 0, 0},
        {1, 6, 6, 1, 0, 0, 0, 0},
        {1, 10, 19, 10, 1, 0, 0, 0},
        {1, 15, 45, 45, 15, 1, 0, 0},
        {1, 21, 90, 141, 90, 21, 1, 0},
        {1, 28, 161, 357, 357, 161, 28, 1}}},
      {"W", StatKind::wruns(), 1, 1,
       {{1, 0, 0, 0, 0},
        {2, 0, 0, 0, 0},
        {4, 1, 0, 0, 0},
        {8, 6, 0, 0, 0},
        {16, 24, 1, 0, 0},
        {32, 80, 10, 0, 0},
        {64, 240, 60, 1, 0},
        {128, 672, 280, 14, 0},
        {256, 1792, 1120, 112, 1}}},
      {"Rbar", StatKind::druns(), 1, 1,
       {{1, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 2, 0, 0, 0, 0, 0, 0, 0},
        {0, 1, 4, 0, 0, 0, 0, 0, 0},
        {0, 0, 6, 8, 0, 0, 0, 0, 0},
        {0, 0, 1, 24, 16, 0, 0, 0, 0},
        {0, 0, 0, 10, 80, 32, 0, 0, 0},
        {0, 0, 0, 1, 60, 240, 64, 0, 0},
        {0, 0, 0, 0, 14, 280, 672, 128, 0}}},
      {"V2", StatKind::ell_val(2), 4, 0,
       {{14, 0, 0, 0},
        {40, 1, 0, 0},
        {115, 7, 0, 0},
        {331, 34, 0, 0},
        {953, 140, 1, 0},
        {2744, 527, 10, 0},
        {7901, 1877, 64, 0}}},
      {"V1", StatKind::ell_val(1), 1, 0,
       {{1, 0, 0, 0},
        {2, 0, 0, 0},
        {5, 0, 0, 0},
        {13, 1, 0, 0},
        {34, 7, 0, 0},
        {89, 32, 1, 0},
        {233, 122, 10, 0},
        {610, 422, 61, 1},
        {1597, 1376, 295, 13}}},
      {"V", StatKind::val(), 1, 0,
       {{1, 0, 0, 0},
        {2, 0, 0, 0},
        {5, 0, 0, 0},
        {13, 1, 0, 0},
        {33, 8, 0, 0},
        {81, 40, 1, 0},
        {193, 160, 12, 0},
        {449, 560, 84, 1},
        {1025, 1792, 448, 16}}},
      {"S", StatKind::symv(), 1, 0,
       {{1, 0, 0, 0, 0},
        {2, 0, 0, 0, 0},
        {5, 0, 0, 0, 0},
        {13, 1, 0, 0, 0},
        {34, 7, 0, 0, 0},
        {90, 31, 1, 0, 0},
        {242, 113, 10, 0, 0},
        {659, 375, 59, 1, 0}}},
      {"P1", StatKind::ell_peak(1), 1, 0,
       {{1, 0, 0, 0, 0},
        {2, 0, 0, 0, 0},
        {4, 1, 0, 0, 0},
        {9, 5, 0, 0, 0},
        {22, 18, 1, 0, 0},
        {56, 58, 8, 0, 0},
        {145, 178, 41, 1, 0},
        {378, 532, 173, 11, 0},
        {988, 1563, 656, 73, 1}}},
      {"P", StatKind::peak(), 1, 0,
       {{1, 0, 0, 0, 0},
        {2, 0, 0, 0, 0},
        {4, 1, 0, 0, 0},
        {8, 6, 0, 0, 0},
        {16, 24, 1, 0, 0},
        {32, 80, 10, 0, 0},
        {64, 240, 60, 1, 0},
        {128, 672, 280, 14, 0},
        {256, 1792, 1120, 112, 1}}},
      {"T", StatKind::symp(), 1, 0,
       {{1, 0, 0, 0, 0},
        {2, 0, 0, 0, 0},
        {4, 1, 0, 0, 0},
        {9, 5, 0, 0, 0},
        {23, 17, 1, 0, 0},
        {63, 51, 8, 0, 0},
        {176, 149, 39, 1, 0},
        {491, 439, 153, 11, 0}}},
  };
  return kMatrices;
}

const Sequence& a007051_flattened_counts() {
  static const Sequence s{"A007051", "f(n), flattened Catalan words of length n", 1,
                          {1, 2, 5, 14, 41, 122, 365, 1094, 3281, 9842}};
  return s;
}

const Sequence& a052963_two_valley_free() {
  static const Sequence s{"A052963", "v_2(n,0), first column of the 2-valley table", 4,
                          {14, 40, 115, 331, 953, 2744, 7901}};
  return s;
}

const Sequence& a005183_valley_free() {
  static const Sequence s{"A005183", "v(n,0), words without valleys", 1,
                          {1, 2, 5, 13, 33, 81, 193, 449, 1025}};
  return s;
}

const Sequence& a212337_valley_totals() {
  static const Sequence s{"A212337", "v(n), total valleys", 4,
                          {1, 8, 42, 184, 731, 2736, 9844, 34448, 118101, 398584}};
  return s;
}

const Sequence& a055588_short_peak_free() {
  static const Sequence s{"A055588", "p_1(n,0), words without short peaks", 1,
                          {1, 2, 4, 9, 22, 56, 145, 378, 988}};
  return s;
}

const Sequence& a261064_peak_totals() {
  static const Sequence s{"A261064", "p(n), total peaks", 3,
                          {1, 6, 26, 100, 363, 1274, 4372, 14760, 14760, 49205}};
  return s;
}

const Sequence& a369328_symmetric_peak_free() {
  static const Sequence s{"A369328", "t(n,0), first column of the symmetric-peak table", 1,
                          {1, 2, 4, 9, 23, 63, 176, 491}};
  return s;
}

const Sequence& a290900_one_symmetric_peak() {
  static const Sequence s{"A290900", "t(n,1), second column of the symmetric-peak table", 1,
                          {0, 0, 1, 5, 17, 51, 149, 439}};
  return s;
}

const Sequence& a056241_runs_by_rows() {
  static const Sequence s{"A056241", "r(n,k) read by rows, 1 <= k <= n", 1,
                          {1,                         //
                           1, 1,                      //
                           1, 3, 1,                   //
                           1, 6, 6, 1,                //
                           1, 10, 19, 10, 1,          //
                           1, 15, 45, 45, 15, 1,      //
                           1, 21, 90, 141, 90, 21, 1,  //
                           1, 28, 161, 357, 357, 161, 28, 1}};
  return s;
}

const Sequence& runs_totals() {
  static const Sequence s{"runs-totals", "r(n), total runs of ascents", 1,
                          {1, 3, 10, 35, 123, 427, 1460, 4923, 16405, 54131}};
  return s;
}

const Sequence& wruns_totals() {
  static const Sequence s{"wruns-totals", "w(n), total runs of weak ascents", 1,
                          {1, 2, 6, 20, 67, 222, 728, 2368, 7653, 24602}};
  return s;
}

const Sequence& druns_totals() {
  static const Sequence s{"druns-totals", "rbar(n), total runs of descents", 1,
                          {1, 4, 14, 50, 179, 632, 2192, 7478, 25157, 83660}};
  return s;
}

const Sequence& symv_totals() {
  static const Sequence s{"symv-totals", "s(n), total symmetric valleys", 4,
                          {1, 7, 33, 133, 496, 1770, 6142, 20902, 70107, 232489}};
  return s;
}

const Sequence& symp_totals() {
  static const Sequence s{"symp-totals", "t(n), total symmetric peaks", 3,
                          {1, 5, 19, 67, 230, 778, 2602, 8618, 28303, 92275}};
  return s;
}

}  // namespace flatcat::golden
