#pragma once

// Published signed Hultman numbers S_H^+-(n, k) for 1 <= n <= 11, 1 <= k <= n+1.

#include <array>
#include <string_view>

namespace hultman::golden {

struct SignedHultmanEntry {
  int n;
  int k;
  std::string_view count;
};

inline constexpr std::array<SignedHultmanEntry, 77> kSignedHultmanTable = {{
    {1, 1, "1"}, {1, 2, "1"},
    {2, 1, "4"}, {2, 2, "3"}, {2, 3, "1"},
    {3, 1, "20"}, {3, 2, "21"}, {3, 3, "6"}, {3, 4, "1"},
    {4, 1, "148"}, {4, 2, "160"}, {4, 3, "65"}, {4, 4, "10"}, {4, 5, "1"},
    {5, 1, "1348"}, {5, 2, "1620"}, {5, 3, "701"}, {5, 4, "155"}, {5, 5, "15"}, {5, 6, "1"},
    {6, 1, "15104"}, {6, 2, "19068"}, {6, 3, "9324"}, {6, 4, "2247"}, {6, 5, "315"}, {6, 6, "21"}, {6, 7, "1"},
    {7, 1, "198144"}, {7, 2, "264420"}, {7, 3, "138016"}, {7, 4, "38029"}, {7, 5, "5908"}, {7, 6, "574"}, {7, 7, "28"}, {7, 8, "1"},
    {8, 1, "2998656"}, {8, 2, "4166880"}, {8, 3, "2325740"}, {8, 4, "692088"}, {8, 5, "124029"}, {8, 6, "13524"}, {8, 7, "966"}, {8, 8, "36"}, {8, 9, "1"},
    {9, 1, "51290496"}, {9, 2, "74011488"}, {9, 3, "43448940"}, {9, 4, "13945700"}, {9, 5, "2723469"}, {9, 6, "344961"}, {9, 7, "27930"}, {9, 8, "1530"}, {9, 9, "45"}, {9, 10, "1"},
    {10, 1, "979732224"}, {10, 2, "1459381440"}, {10, 3, "897020784"}, {10, 4, "305142068"}, {10, 5, "64711856"}, {10, 6, "8996295"}, {10, 7, "850905"}, {10, 8, "53262"}, {10, 9, "2310"}, {10, 10, "55"}, {10, 11, "1"},
    {11, 1, "20661458688"}, {11, 2, "31674232128"}, {11, 3, "20241273264"}, {11, 4, "7255047116"}, {11, 5, "1640552028"}, {11, 6, "249029717"}, {11, 7, "26004330"}, {11, 8, "1910403"}, {11, 9, "95304"}, {11, 10, "3355"}, {11, 11, "66"}, {11, 12, "1"},
}};

}  // namespace hultman::golden
