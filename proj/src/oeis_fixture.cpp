#include "collatz/io.hpp"

namespace collatz {

// Orbit rows as published in OEIS A070165 (Collatz trajectory of n):
// n = 1..20 plus the long row for 27.
const OeisFixture& oeis_fixture() {
  static const OeisFixture fixture = [] {
    OeisFixture f;
    const auto add = [&f](Value n, std::vector<Value> terms) {
      f.rows.push_back({n, std::move(terms)});
    };
    add(1, {1});
    add(2, {2, 1});
    add(3, {3, 10, 5, 16, 8, 4, 2, 1});
    add(4, {4, 2, 1});
    add(5, {5, 16, 8, 4, 2, 1});
    add(6, {6, 3, 10, 5, 16, 8, 4, 2, 1});
    add(7, {7, 22, 11, 34, 17, 52, 26, 13, 40, 20, 10, 5, 16, 8, 4, 2, 1});
    add(8, {8, 4, 2, 1});
    add(9, {9, 28, 14, 7, 22, 11, 34, 17, 52, 26, 13, 40, 20, 10, 5, 16, 8, 4, 2, 1});
    add(10, {10, 5, 16, 8, 4, 2, 1});
    add(11, {11, 34, 17, 52, 26, 13, 40, 20, 10, 5, 16, 8, 4, 2, 1});
    add(12, {12, 6, 3, 10, 5, 16, 8, 4, 2, 1});
    add(13, {13, 40, 20, 10, 5, 16, 8, 4, 2, 1});
    add(14, {14, 7, 22, 11, 34, 17, 52, 26, 13, 40, 20, 10, 5, 16, 8, 4, 2, 1});
    add(15, {15, 46, 23, 70, 35, 106, 53, 160, 80, 40, 20, 10, 5, 16, 8, 4, 2, 1});
    add(16, {16, 8, 4, 2, 1});
    add(17, {17, 52, 26, 13, 40, 20, 10, 5, 16, 8, 4, 2, 1});
    add(18, {18, 9, 28, 14, 7, 22, 11, 34, 17, 52, 26, 13, 40, 20, 10, 5, 16, 8, 4, 2, 1});
    add(19, {19, 58, 29, 88, 44, 22, 11, 34, 17, 52, 26, 13, 40, 20, 10, 5, 16, 8, 4, 2, 1});
    add(20, {20, 10, 5, 16, 8, 4, 2, 1});
    add(27, {27, 82, 41, 124, 62, 31, 94, 47, 142, 71, 214, 107, 322, 161, 484, 242, 121, 364, 182, 91, 274, 137, 412, 206, 103, 310, 155, 466, 233, 700, 350, 175, 526, 263, 790, 395, 1186, 593, 1780, 890, 445, 1336, 668, 334, 167, 502, 251, 754, 377, 1132, 566, 283, 850, 425, 1276, 638, 319, 958, 479, 1438, 719, 2158, 1079, 3238, 1619, 4858, 2429, 7288, 3644, 1822, 911, 2734, 1367, 4102, 2051, 6154, 3077, 9232, 4616, 2308, 1154, 577, 1732, 866, 433, 1300, 650, 325, 976, 488, 244, 122, 61, 184, 92, 46, 23, 70, 35, 106, 53, 160, 80, 40, 20, 10, 5, 16, 8, 4, 2, 1});
    return f;
  }();
  return fixture;
}

}  // namespace collatz
