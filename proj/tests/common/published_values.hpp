#pragma once

// Published reference values used as golden data by the unit and acceptance tests.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace published {

struct SphereRow {
    std::string center;
    std::vector<std::string> members;
};

struct WordPair {
    std::string quaternary;
    std::string binary;
};

// VT_{1,2}(4;4) codewords and their phi8 images.
inline const std::vector<WordPair> vt_1_2_len4_phi8 = {
    {"0321", "00101101"},
    {"1001", "01000001"},
    {"1023", "01001110"},
    {"1320", "01111000"},
    {"2000", "11000000"},
    {"2013", "11000110"},
    {"2022", "11001111"},
    {"2112", "11010111"},
    {"2310", "11100100"},
    {"3003", "10000010"},
    {"3012", "10000111"},
    {"3111", "10010101"},
    {"3133", "10011010"},
    {"3223", "10111110"},
};

// H(4,4,1,13) codewords and their phi9 images.
inline const std::vector<WordPair> helberg_4_4_1_13_phi9 = {
    {"0010", "11110111"},
    {"1013", "01110100"},
    {"1300", "01001111"},
    {"2303", "10001100"},
    {"3332", "00000010"},
};

// H(10,2,2,66) codewords and their phi9 inverse images.
inline const std::vector<WordPair> helberg_10_2_2_66_phi9_inverse = {
    {"33213", "0000100100"},
    {"13020", "0100111011"},
    {"10310", "0111000111"},
    {"10123", "0111011000"},
    {"23210", "1000100111"},
    {"23023", "1000111000"},
    {"20313", "1011000100"},
    {"00120", "1111011011"},
};

// H(4,4,1,40), its phi9 image, and H(8,2,2,12), row-aligned.
inline const std::vector<std::vector<std::string>> helberg_4_4_1_40_vs_8_2_2_12 = {
    {"0001", "11111101", "11111101"},
    {"1030", "01110011", "01110011"},
    {"2033", "10110000", "10110000"},
    {"2320", "10001011", "10001011"},
    {"3323", "00001000", "00001000"},
};

// H(5,4,1,134), its phi9 image, and H(10,2,2,32), row-aligned.
inline const std::vector<std::vector<std::string>> helberg_5_4_1_134_vs_10_2_2_32 = {
    {"00101", "1111011101", "1111011101"},
    {"10130", "0111010011", "0111010011"},
    {"13001", "0100111101", "0100111101"},
    {"20133", "1011010000", "1011010000"},
    {"23030", "1000110011", "1000110011"},
    {"33033", "0000110000", "0000110000"},
    {"33320", "0000001011", "0000001011"},
};

// One-deletion spheres of the phi9 inverse images of H(10,2,2,66).
inline const std::vector<SphereRow> spheres_phi9_inverse_10_2_2_66 = {
    {"00120", {"0120", "0020", "0010", "0012"}},
    {"10123", {"0123", "1123", "1023", "1013", "1012"}},
    {"10310", {"0310", "1310", "1010", "1030", "1031"}},
    {"13020", {"3020", "1020", "1320", "1300", "1302"}},
    {"20313", {"0313", "2313", "2013", "2033", "2031"}},
    {"23023", {"3023", "2023", "2323", "2303", "2302"}},
    {"23210", {"3210", "2210", "2310", "2320", "2321"}},
    {"33213", {"3213", "3313", "3323", "3321"}},
};

// One-deletion spheres of the phi8 images of VT_{1,2}(4;4).
inline const std::vector<SphereRow> spheres_phi8_vt_1_2_len4 = {
    {"00101101", {"0010110", "0010101", "0001101", "0011101", "0101101", "0010111"}},
    {"01000001", {"0100000", "0000001", "1000001", "0100001"}},
    {"01001110", {"0101110", "0100110", "1001110", "0001110", "0100111"}},
    {"01111000", {"0111000", "0111100", "1111000"}},
    {"11000000", {"1100000", "1000000"}},
    {"11000110", {"1000110", "1100011", "1100110", "1100010"}},
    {"11001111", {"1101111", "1001111", "1100111"}},
    {"11010111", {"1101011", "1101111", "1100111", "1010111", "1110111"}},
    {"11100100", {"1100100", "1110100", "1110000", "1110010"}},
    {"10000010", {"1000010", "1000000", "1000001", "0000010"}},
    {"10000111", {"1000111", "1000011", "0000111"}},
    {"10010101", {"1001010", "1010101", "0010101", "1001001", "1000101", "1001101", "1001011"}},
    {"10011010", {"1001010", "1001110", "1001101", "1001100", "0011010", "1011010"}},
    {"10111110", {"1111110", "1011110", "1011111", "0111110"}},
};

// Two-deletion spheres as listed for phi9(H(4,4,1,13)); known to disagree with recomputation.
inline const std::vector<SphereRow> spheres_phi9_helberg_4_4_1_13_listed = {
    {"00000001", {"000001", "000000"}},
    {"01001000", {"001000", "101000", "100100", "000100", "011000", "010000", "010100", "010010"}},
    {"10101110", {"101010", "100110", "110110", "101110", "010110", "101011"}},
    {"11001010", {"100100", "001010", "101010", "100010", "100110", "100101", "111010", "110010", "110110", "110100", "110101"}},
    {"11101100", {"111010", "110110", "110100", "101100", "111100", "111110", "111000", "111011"}},
};

struct WeightShiftRow {
    unsigned n;
    std::string X;
    std::string Y;
    unsigned abs_delta_a;
    unsigned abs_delta_b;
};

// Image pairs one weight apart with intersecting one-deletion spheres, under phi8.
inline const std::vector<WeightShiftRow> weight_shift_pairs = {
    {1, "10", "00", 0, 3},
    {2, "0001", "0000", 0, 1},
    {3, "110001", "100001", 0, 3},
    {4, "11100001", "11000001", 1, 1},
    {5, "1011110111", "1011101101", 1, 1},
    {6, "001000111001", "001000011001", 0, 1},
    {7, "10111111100001", "10011111100001", 0, 1},
    {8, "0001000011101000", "0000100001101000", 1, 1},
    {9, "010111011010011101", "010111010100101101", 3, 3},
    {10, "11110101011101111011", "11110101011011110101", 1, 1},
};

// Class sizes of H(4,4,1,.) grouped by size.
inline const std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> helberg_4_4_1_census = {
    {2, {16, 17, 18, 19, 20, 21, 22, 23, 24, 29, 30, 31, 32, 33, 34, 35, 36, 37, 55, 66, 67, 68, 79, 82, 83, 84, 85, 86, 87, 88, 89, 90, 91, 92, 95, 106, 107, 108, 119}},
    {3, {1, 2, 3, 5, 6, 7, 8, 9, 10, 11, 15, 25, 28, 38, 42, 43, 46, 47, 48, 49, 50, 51, 52, 80, 81, 93, 94, 120}},
    {4, {0, 12, 26, 39, 41, 53}},
    {5, {13, 40}},
};

// Class sizes of VT(4;4) grouped by size: (size, [(a, b)]).
inline const std::vector<std::pair<std::uint64_t, std::vector<std::pair<unsigned, unsigned>>>> vt_len4_census = {
    {20, {{2, 0}}},
    {18, {{2, 2}, {0, 2}}},
    {16, {{2, 1}, {1, 3}, {2, 3}, {3, 1}, {3, 3}, {0, 1}, {0, 3}, {0, 0}, {1, 1}}},
    {14, {{3, 2}, {3, 0}, {1, 0}, {1, 2}}},
};

struct MaxResidueMapping {
    unsigned n;
    std::uint64_t max_codewords;
    std::vector<std::uint64_t> residues;
    std::vector<std::uint64_t> image_residues;
};

// Maximum classes of H(n,4,1,.) and the H(2n,2,2,.) residues their phi9 images land in.
inline const std::vector<MaxResidueMapping> max_residue_mappings = {
    {3, 3, {0, 1, 13, 14}, {13, 12, 1, 0}},
    {4, 5, {13, 40}, {33, 12}},
    {5, 7, {39, 40, 133, 134}, {100, 99, 33, 32}},
    {6, 11, {133, 403}, {264, 99}},
    {7, 17, {403, 1225}, {707, 264}},
};

struct MaxClassRow {
    unsigned n;
    unsigned s;
    std::uint64_t max_codewords;
    std::vector<std::uint64_t> residues;  // as listed, possibly a subset of all achievers
};

// Maximum phi9-image classes of H(n,4,s,.) that pass (s+1)-deletion correction.
inline const std::vector<MaxClassRow> image_max_classes = {
    {3, 1, 3, {0, 13}},
    {3, 2, 2, {0, 1}},
    {4, 1, 5, {40, 13}},
    {4, 2, 2, {0, 61, 122, 183, 4, 3, 8, 7, 12, 11}},
    {4, 3, 2, {0, 1}},
    {5, 1, 7, {40, 39, 134, 133}},
    {5, 2, 3, {0, 61}},
    {5, 3, 2, {0, 253, 506, 759, 4, 3, 8, 7, 12, 11}},
    {5, 4, 2, {0, 1}},
    {6, 1, 11, {403, 133}},
    {6, 2, 4, {61, 122, 183, 62, 123, 184}},
    {6, 3, 2, {0, 1000, 2000, 3000, 253, 1253, 2253, 3253, 506, 1506, 2506, 3506, 759, 1759, 2759, 3759, 16, 15, 32, 31, 48, 47, 4, 1004, 2004, 3004, 3, 20, 19, 36, 35, 52, 1003, 2003, 3003, 51, 8, 1008, 2008, 3008, 7, 24, 23, 40, 39, 56, 1007, 2007, 3007, 55, 12, 1004, 2004, 3004, 11, 28, 27, 44, 43, 60, 1003, 2003, 3003, 59, 1, 1001, 2001, 3001, 254, 1254, 2254, 3254, 507, 1507, 2507, 3507, 760, 1760, 2760, 3760, 17, 33, 49, 5, 1005, 2005, 3005, 21, 37, 53, 9, 1009, 2009, 3009, 25, 41, 57, 13, 1013, 2013, 3013, 29, 45, 61, 2, 1002, 2002, 3002, 255, 1255, 2255, 3255, 508, 1508, 2508, 3508, 761, 1761, 2761, 3761, 18, 34, 50, 6, 1006, 2006, 3006, 22, 38, 54, 10, 4082, 8154, 12226, 26, 42, 58, 14, 4086, 8158, 12230, 30, 46, 62}},
    {6, 4, 2, {0, 1021, 2042, 3063, 4, 3, 8, 7, 12, 11, 1, 1022, 2043, 3064, 5, 9, 13, 2, 1023, 2044, 3065, 6, 10, 14}},
    {6, 5, 2, {0, 1, 2}},
    {7, 1, 17, {403, 1225}},
    {7, 2, 5, {880, 61}},
    {7, 3, 3, {0, 253, 1, 254}},
    {7, 4, 2, {0, 4072, 8144, 12216, 1021, 5093, 9165, 13237, 2042, 6114, 10186, 14258, 3063, 7135, 11207, 15279, 16, 15, 32, 31, 48, 47, 4, 4076, 8148, 12220, 3, 20, 19, 36, 35, 52, 4075, 8147, 12219, 51, 8, 4080, 8152, 12224, 7, 24, 23, 40, 39, 56, 4079, 8151, 12223, 55, 12, 4084, 8156, 12228, 11, 28, 27, 44, 43, 60, 4083, 8155, 12227, 59, 1, 4073, 8145, 12217, 1022, 5094, 9166, 13238, 2043, 6115, 10187, 14259, 3064, 7136, 11208, 15280, 17, 33, 49, 5, 4077, 8149, 12221, 21, 37, 53, 9, 4081, 8153, 12225, 25, 41, 57, 13, 4085, 8157, 12229, 29, 45, 61, 2, 4074, 8146, 12218, 1023, 5095, 9167, 13239, 2044, 6116, 10188, 14260, 3065, 7137, 11209, 15281, 18, 34, 50, 6, 4078, 8150, 12222, 22, 38, 54, 10, 4082, 8154, 12226, 26, 42, 58, 14, 4086, 8158, 12230, 30, 46, 62}},
    {7, 5, 2, {0, 4093, 8186, 12279, 4, 3, 8, 7, 12, 11, 1, 4094, 8187, 12280, 5, 9, 13, 2, 4095, 8188, 12281, 6, 10, 14}},
    {7, 6, 2, {0, 1, 2}},
};

struct CardinalityRow {
    unsigned n;
    double lower;
    double upper;
    std::uint64_t binary_max;
    std::uint64_t image_max;
};

// Printed bound columns and class maxima; the bound columns do not follow from the stated formulas.
inline const std::vector<CardinalityRow> cardinality_rows = {
    {2, 1.0, 2.0, 2, 2},
    {3, 0.819, 2.56, 3, 3},
    {4, 0.79, 3.556, 5, 5},
    {5, 0.853, 5.224, 9, 8},
    {6, 1.0, 8.0, 11, 11},
};

}  // namespace published
