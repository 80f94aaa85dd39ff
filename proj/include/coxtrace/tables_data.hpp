#pragma once

#include <string_view>

// Embedded copies of the cell tables shipped under data/.  The build keeps
// both in lockstep (a test compares them byte for byte) and every load is
// checksummed, so an edit in either place without the other is caught.

namespace coxtrace::tables_data {
inline constexpr std::string_view kE6 = R"TBL(# E6 Coxeter-class cell decomposition.
# One cell per "cell" line (index, gamma group, special member or "-"),
# one epsilon term per "term" line: coefficient, label d_b, f denominator.
type E6
rank 6
h 12
nu 36
exponents 1 4 5 7 8 11
regular-sum 0
cell 0 gamma S1 special 1_0
term +1 1_0 1
cell 1 gamma S1 special 6_1
term -1 6_1 1
cell 2 gamma S2 special 30_3
term +1 30_3 2
term -1 15_4 2
cell 3 gamma S3 special -
term +1 60_8 2
term -1 90_8 3
term -1 10_9 3
term +1 20_10 6
cell 4 gamma S2 special 30_15
term +1 30_15 2
term -1 15_16 2
cell 5 gamma S1 special 6_25
term -1 6_25 1
cell 6 gamma S1 special 1_36
term +1 1_36 1
)TBL";
inline constexpr unsigned long long kE6Checksum = 0x173e954cefbc5f15ULL;

inline constexpr std::string_view kE7 = R"TBL(# E7 Coxeter-class cell decomposition.
# One cell per "cell" line (index, gamma group, special member or "-"),
# one epsilon term per "term" line: coefficient, label d_b, f denominator.
type E7
rank 7
h 18
nu 63
exponents 1 5 7 9 11 13 17
regular-sum 0
cell 0 gamma S1 special 1_0
term +1 1_0 1
cell 1 gamma S1 special 7_1
term -1 7_1 1
cell 2 gamma S2 special 56_3
term +1 56_3 2
term -1 35_4 2
cell 3 gamma S3 special -
term +1 280_8 2
term -1 280_9 3
term -1 70_9 3
term +1 35_13 6
cell 7/2 gamma ex special -
term +1 512_11 2
term -1 512_12 2
cell 4 gamma S3 special -
term -1 280_17 2
term +1 280_18 3
term +1 70_18 3
term -1 35_22 6
cell 5 gamma S2 special 56_30
term -1 56_30 2
term +1 35_31 2
cell 6 gamma S1 special 7_46
term +1 7_46 1
cell 7 gamma S1 special 1_63
term -1 1_63 1
)TBL";
inline constexpr unsigned long long kE7Checksum = 0x0f73b367c1c1841fULL;

inline constexpr std::string_view kE8 = R"TBL(# E8 Coxeter-class cell decomposition.
# One cell per "cell" line (index, gamma group, special member or "-"),
# one epsilon term per "term" line: coefficient, label d_b, f denominator.
# The b-subscripts of the 56-dimensional members of cells 3 and 5 are the
# wedge values 19 and 49 forced by the exponent sums (the source catalogue
# prints 10 and 40 there, which no E8 character carries).
type E8
rank 8
h 30
nu 120
exponents 1 7 11 13 17 19 23 29
regular-sum 0
cell 0 gamma S1 special 1_0
term +1 1_0 1
cell 1 gamma S1 special 8_1
term -1 8_1 1
cell 2 gamma S2 special 112_3
term +1 112_3 2
term -1 84_4 2
cell 3 gamma S3 special -
term +1 1344_8 2
term -1 1008_9 3
term -1 448_9 3
term +1 56_19 6
cell 7/2 gamma ex special -
term +1 4096_11 2
term -1 4096_12 2
cell 4 gamma S5 special 4480_16
term +1 4480_16 120
term -1 7168_17 12
term -1 5670_18 30
term +1 2016_19 6
term +1 1134_20 6
term -1 420_20 5
term +1 1680_22 20
term +1 4536_23 24
term -1 448_25 12
term -1 70_32 30
cell 9/2 gamma ex special -
term -1 4096_26 2
term +1 4096_27 2
cell 5 gamma S3 special -
term +1 1344_38 2
term -1 1008_39 3
term -1 448_39 3
term +1 56_49 6
cell 6 gamma S2 special 112_63
term +1 112_63 2
term -1 84_64 2
cell 7 gamma S1 special 8_91
term -1 8_91 1
cell 8 gamma S1 special 1_120
term +1 1_120 1
)TBL";
inline constexpr unsigned long long kE8Checksum = 0x56966d6a289acbc4ULL;

inline constexpr std::string_view kF4 = R"TBL(# F4 Coxeter-class cell decomposition.
# One cell per "cell" line (index, gamma group, special member or "-"),
# one epsilon term per "term" line: coefficient, label d_b, f denominator.
type F4
rank 4
h 12
nu 24
exponents 1 5 7 11
regular-sum 0
cell 0 gamma S1 special 1_0
term +1 1_0 1
cell 1 gamma S2 special 4_1
term -1 2_4 2
term -1 2'_4 2
cell 2 gamma S4 special 12_4
term +1 12_4 24
term -1 6_6 12
term -1 6'_6 3
term +1 4_8 8
term +1 1_12 8
term +1 1'_12 8
cell 3 gamma S2 special 4_13
term -1 2_16 2
term -1 2'_16 2
cell 4 gamma S1 special 1_24
term +1 1_24 1
)TBL";
inline constexpr unsigned long long kF4Checksum = 0x005e5086c4b1e1f4ULL;

inline constexpr std::string_view kG2 = R"TBL(# G2 Coxeter-class cell decomposition.
# One cell per "cell" line (index, gamma group, special member or "-"),
# one epsilon term per "term" line: coefficient, label d_b, f denominator.
# The middle cell is stored in the sign convention of the source catalogue,
# which is globally opposite to the traces this library computes through its
# I2(6) engine; the regular-sum records that convention, and the dihedral
# cross-check is by support and orthogonality only.
type G2
rank 2
h 6
nu 6
exponents 1 5
regular-sum 4
cell 0 gamma S1 special 1_0
term +1 1_0 1
cell 1 gamma S3 special 2_1
term -1 2_1 6
term +1 2_2 2
term +1 1_3 3
term +1 1'_3 3
cell 2 gamma S1 special 1_6
term +1 1_6 1
)TBL";
inline constexpr unsigned long long kG2Checksum = 0xf1a781a3cd0afd71ULL;

inline constexpr std::string_view kH3 = R"TBL(# H3 Coxeter-class cell decomposition; coefficients lie in Q(z5).
# One cell per "cell" line, one epsilon term per "term" line: coefficient,
# label d_b, f denominator ("-" when not catalogued).
# Cells 2 and 3 are stored in the sign convention of the source catalogue,
# globally opposite on those cells to the tensor-by-sign symmetry; the
# regular-sum records that convention.
type H3
rank 3
h 10
nu 15
exponents 1 5 9
regular-sum -4
cell 0 gamma - special 1_0
term 1 1_0 -
cell 1 gamma - special -
term z5+z5^4 3_1 -
term z5^2+z5^3 3_3 -
cell 3/2 gamma ex special -
term 1 4_3 -
term -1 4_4 -
cell 2 gamma - special -
term z5+z5^4 3_6 -
term z5^2+z5^3 3_8 -
cell 3 gamma - special 1_15
term 1 1_15 -
)TBL";
inline constexpr unsigned long long kH3Checksum = 0x918129ef092c2a5aULL;

inline constexpr std::string_view kH4 = R"TBL(# H4 Coxeter-class cell decomposition; coefficients lie in Q(z5).
# One cell per "cell" line, one epsilon term per "term" line: coefficient,
# label d_b, f denominator ("-" when not catalogued).
type H4
rank 4
h 30
nu 60
exponents 1 11 19 29
regular-sum 0
cell 0 gamma - special 1_0
term 1 1_0 -
cell 1 gamma - special -
term z5+z5^4 4_1 -
term z5^2+z5^3 4_7 -
cell 3/2 gamma ex special -
term 1 16_3 -
term -1 16_6 -
cell 2 gamma - special -
term -z5^2-z5^3 24_6 -
term 1 24_7 -
term 1 40_8 -
term -1 48_9 -
term z5+z5^4 30_10 -
term z5^2+z5^3 30'_10 -
term z5^2+z5^3 16_11 -
term 1 24_11 -
term -z5-z5^4 6_12 -
term -z5-z5^4 24_12 -
term -1 10_12 -
term -1 8_13 -
term z5+z5^4 16_13 -
term -z5^2-z5^3 6_20 -
cell 5/2 gamma ex special -
term -1 16_18 -
term 1 16_21 -
cell 3 gamma - special -
term z5+z5^4 4_31 -
term z5^2+z5^3 4_37 -
cell 4 gamma - special 1_60
term 1 1_60 -
)TBL";
inline constexpr unsigned long long kH4Checksum = 0x9fc3ce4df1a53d84ULL;

}  // namespace coxtrace::tables_data
