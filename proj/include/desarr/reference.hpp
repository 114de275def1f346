#ifndef DESARR_REFERENCE_HPP
#define DESARR_REFERENCE_HPP

// Published values, transcribed as data. Everything else in the library
// recomputes these; the verifier compares against them.

#include <array>
#include <string_view>
#include <vector>

namespace desarr::reference
{

// d_n, n = 0..11
inline constexpr std::array<long long, 12> derangement_numbers{1,    0,      1,      2,       9,       44,
                                                               265,  1854,   14833,  133496,  1334961, 14684570};

// Desarrangements of length 1..5.
inline const std::vector<std::vector<std::string_view>> &desarrangements_up_to_5()
{
    static const std::vector<std::vector<std::string_view>> table{
        {},
        {"21"},
        {"213", "312"},
        {"2134", "2143", "3124", "3142", "3241", "4123", "4132", "4231", "4321"},
        {"21345", "21354", "21435", "21453", "21534", "21543", "31245", "31254", "31425", "31452", "31524",
         "31542", "32415", "32451", "32514", "32541", "41235", "41253", "41325", "41352", "41523", "41532",
         "42315", "42351", "42513", "42531", "43215", "43512", "43521", "51234", "51243", "51324", "51342",
         "51423", "51432", "52314", "52341", "52413", "52431", "53214", "53412", "53421", "54213", "54312"},
    };
    return table;
}

using Rows = std::vector<std::vector<long long>>; // row n: coefficients of t^0, t^1, ...

// Distributions over D_n, n = 0..9.
inline const Rows &des_table()
{
    static const Rows r{{1},
                        {0},
                        {0, 1},
                        {0, 2},
                        {0, 3, 5, 1},
                        {0, 4, 27, 13},
                        {0, 5, 94, 137, 28, 1},
                        {0, 6, 270, 952, 566, 60},
                        {0, 7, 699, 5093, 6825, 2085, 123, 1},
                        {0, 8, 1701, 23195, 60513, 40649, 7179, 251}};
    return r;
}

inline const Rows &pk_table()
{
    static const Rows r{{1},       {0},           {1},
                        {2},       {4, 5},        {8, 36},
                        {16, 188, 61}, {32, 864, 958}, {64, 3728, 9656, 1385},
                        {128, 15552, 79760, 38056}};
    return r;
}

inline const Rows &val_table()
{
    static const Rows r{{1},          {0},          {1},
                        {0, 2},       {1, 8},       {0, 28, 16},
                        {1, 88, 176}, {0, 270, 1312, 272}, {1, 816, 8256, 5760},
                        {0, 2456, 47520, 75584, 7936}};
    return r;
}

inline const Rows &dasc_table()
{
    static const Rows r{{1},
                        {0},
                        {1},
                        {2},
                        {6, 3},
                        {29, 11, 4},
                        {130, 111, 19, 5},
                        {798, 705, 316, 29, 6},
                        {5125, 6242, 2626, 792, 41, 7},
                        {38726, 52830, 31794, 8220, 1863, 55, 8}};
    return r;
}

inline const Rows &ddes_table()
{
    static const Rows r{{1},
                        {0},
                        {1},
                        {2},
                        {8, 0, 1},
                        {31, 9, 4},
                        {160, 66, 38, 0, 1},
                        {910, 622, 262, 54, 6},
                        {6077, 5254, 2781, 576, 144, 0, 1},
                        {45026, 49708, 27682, 9264, 1565, 243, 8}};
    return r;
}

// n = 0..11
inline constexpr std::array<long long, 12> fine_table{0, 1, 0, 1, 2, 6, 18, 57, 186, 622, 2120, 7338};
inline constexpr std::array<long long, 12> jacobsthal_table{0, 1, 1, 3, 5, 11, 21, 43, 85, 171, 341, 683};
// As printed; the last entry contradicts the recurrence a_{n+1} = C_n - a_n,
// which gives a_11 = C_10 - a_10 = 16796 - 3761 = 13035.
inline constexpr std::array<long long, 12> a_sequence_table{1, 0, 1, 1, 4, 10, 32, 100, 329, 1101, 3761, 3761};
inline constexpr std::size_t a_sequence_misprint_index = 11;

} // namespace desarr::reference

#endif
