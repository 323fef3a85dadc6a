#pragma once

// Pinned test vectors: one walk in each wedge together with its images under
// the bijections, used as bit-exact fixtures across the suites.
namespace figures {

inline constexpr const char* kSymWalk = "sym:0,-1,2,2,0,2,0,-7,-6,-9,-10,-5";
inline constexpr const char* kAsymWalk = "asym:0,0,-2,-2,-2,-1,-6,-7,-8,-7,-7,-9,-7,-7";
inline constexpr const char* kMatching =
    "match:1-8,2-10,3-4,5-9,6-7,11-18,12-21,13-14,15-19,16-23,17-20,22-24";
inline constexpr const char* kDyck =
    "dyck:U U U D2 U U D3 D0 D1 D0 U U U D2 U U U D0 D1 D2 D0 U D0 D0";
inline constexpr const char* kPerm = "perm:7 2 5 1 4 3 6 8 13 9 10 14 12 11";
inline constexpr const char* kMotzkin = "motzkin:U0 F1 U0 C1 D1 C0 D0 F0 U0 C0 C0 U1 D0 D0";

}  // namespace figures
