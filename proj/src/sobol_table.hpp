// Direction-number table for the Sobol generator (Joe-Kuo style initialization),
// 360 dimensions, polynomial degree <= 12.
#pragma once

#include <cstdint>
#include <cstddef>

namespace ldseds::detail {

inline constexpr std::size_t kSobolMaxDimension = 360;
inline constexpr std::size_t kSobolMaxDegree = 12;

// Primitive polynomial over GF(2) per dimension, full bit encoding
// (leading term through constant). Degree is bit_length - 1.
inline constexpr std::uint32_t kSobolPoly[kSobolMaxDimension] = {
    1, 3, 7, 11, 13, 19, 25, 37, 41, 47, 55, 59, 61, 67, 91, 97,
    103, 109, 115, 131, 137, 143, 145, 157, 167, 171, 185, 191, 193, 203, 211, 213,
    229, 239, 241, 247, 253, 285, 299, 301, 333, 351, 355, 357, 361, 369, 391, 397,
    425, 451, 463, 487, 501, 529, 539, 545, 557, 563, 601, 607, 617, 623, 631, 637,
    647, 661, 675, 677, 687, 695, 701, 719, 721, 731, 757, 761, 787, 789, 799, 803,
    817, 827, 847, 859, 865, 875, 877, 883, 895, 901, 911, 949, 953, 967, 971, 973,
    981, 985, 995, 1001, 1019, 1033, 1051, 1063, 1069, 1125, 1135, 1153, 1163, 1221, 1239, 1255,
    1267, 1279, 1293, 1305, 1315, 1329, 1341, 1347, 1367, 1387, 1413, 1423, 1431, 1441, 1479, 1509,
    1527, 1531, 1555, 1557, 1573, 1591, 1603, 1615, 1627, 1657, 1663, 1673, 1717, 1729, 1747, 1759,
    1789, 1815, 1821, 1825, 1849, 1863, 1869, 1877, 1881, 1891, 1917, 1933, 1939, 1969, 2011, 2035,
    2041, 2053, 2071, 2091, 2093, 2119, 2147, 2149, 2161, 2171, 2189, 2197, 2207, 2217, 2225, 2255,
    2257, 2273, 2279, 2283, 2293, 2317, 2323, 2341, 2345, 2363, 2365, 2373, 2377, 2385, 2395, 2419,
    2421, 2431, 2435, 2447, 2475, 2477, 2489, 2503, 2521, 2533, 2551, 2561, 2567, 2579, 2581, 2601,
    2633, 2657, 2669, 2681, 2687, 2693, 2705, 2717, 2727, 2731, 2739, 2741, 2773, 2783, 2793, 2799,
    2801, 2811, 2819, 2825, 2833, 2867, 2879, 2881, 2891, 2905, 2911, 2917, 2927, 2941, 2951, 2955,
    2963, 2965, 2991, 2999, 3005, 3017, 3035, 3037, 3047, 3053, 3083, 3085, 3097, 3103, 3159, 3169,
    3179, 3187, 3205, 3209, 3223, 3227, 3229, 3251, 3263, 3271, 3277, 3283, 3285, 3299, 3305, 3319,
    3331, 3343, 3357, 3367, 3373, 3393, 3399, 3413, 3417, 3427, 3439, 3441, 3475, 3487, 3497, 3515,
    3517, 3529, 3543, 3547, 3553, 3559, 3573, 3589, 3613, 3617, 3623, 3627, 3635, 3641, 3655, 3659,
    3669, 3679, 3697, 3707, 3709, 3713, 3731, 3743, 3747, 3771, 3791, 3805, 3827, 3833, 3851, 3865,
    3889, 3895, 3933, 3947, 3949, 3957, 3971, 3985, 3991, 3995, 4007, 4013, 4021, 4045, 4051, 4069,
    4073, 4179, 4201, 4219, 4221, 4249, 4305, 4331, 4359, 4383, 4387, 4411, 4431, 4439, 4449, 4459,
    4485, 4531, 4569, 4575, 4621, 4663, 4669, 4711,
};

// Initial odd direction integers m_1..m_s per dimension (zero padded).
inline constexpr std::uint32_t kSobolMinit[kSobolMaxDimension][kSobolMaxDegree] = {
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 3, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 3, 3, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 3, 5, 13, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 5, 5, 17, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 5, 5, 5, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 7, 11, 19, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 5, 1, 1, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 1, 3, 11, 0, 0, 0, 0, 0, 0, 0},
    {1, 3, 5, 5, 31, 0, 0, 0, 0, 0, 0, 0},
    {1, 3, 3, 9, 7, 49, 0, 0, 0, 0, 0, 0},
    {1, 1, 1, 15, 21, 21, 0, 0, 0, 0, 0, 0},
    {1, 3, 1, 13, 27, 49, 0, 0, 0, 0, 0, 0},
    {1, 1, 1, 15, 7, 5, 0, 0, 0, 0, 0, 0},
    {1, 3, 1, 15, 13, 25, 0, 0, 0, 0, 0, 0},
    {1, 1, 5, 5, 19, 61, 0, 0, 0, 0, 0, 0},
    {1, 3, 7, 11, 23, 15, 103, 0, 0, 0, 0, 0},
    {1, 3, 7, 13, 13, 15, 69, 0, 0, 0, 0, 0},
    {1, 1, 3, 13, 7, 35, 63, 0, 0, 0, 0, 0},
    {1, 3, 5, 9, 1, 25, 53, 0, 0, 0, 0, 0},
    {1, 3, 1, 13, 9, 35, 107, 0, 0, 0, 0, 0},
    {1, 3, 1, 5, 27, 61, 31, 0, 0, 0, 0, 0},
    {1, 1, 5, 11, 19, 41, 61, 0, 0, 0, 0, 0},
    {1, 3, 5, 3, 3, 13, 69, 0, 0, 0, 0, 0},
    {1, 1, 7, 13, 1, 19, 1, 0, 0, 0, 0, 0},
    {1, 3, 7, 5, 13, 19, 59, 0, 0, 0, 0, 0},
    {1, 1, 3, 9, 25, 29, 41, 0, 0, 0, 0, 0},
    {1, 3, 5, 13, 23, 1, 55, 0, 0, 0, 0, 0},
    {1, 3, 7, 3, 13, 59, 17, 0, 0, 0, 0, 0},
    {1, 3, 1, 3, 5, 53, 69, 0, 0, 0, 0, 0},
    {1, 1, 5, 5, 23, 33, 13, 0, 0, 0, 0, 0},
    {1, 1, 7, 7, 1, 61, 123, 0, 0, 0, 0, 0},
    {1, 1, 7, 9, 13, 61, 49, 0, 0, 0, 0, 0},
    {1, 3, 3, 5, 3, 55, 33, 0, 0, 0, 0, 0},
    {1, 3, 1, 15, 31, 13, 49, 245, 0, 0, 0, 0},
    {1, 3, 5, 15, 31, 59, 63, 97, 0, 0, 0, 0},
    {1, 3, 1, 11, 11, 11, 77, 249, 0, 0, 0, 0},
    {1, 3, 1, 11, 27, 43, 71, 9, 0, 0, 0, 0},
    {1, 1, 7, 15, 21, 11, 81, 45, 0, 0, 0, 0},
    {1, 3, 7, 3, 25, 31, 65, 79, 0, 0, 0, 0},
    {1, 3, 1, 1, 19, 11, 3, 205, 0, 0, 0, 0},
    {1, 1, 5, 9, 19, 21, 29, 157, 0, 0, 0, 0},
    {1, 3, 7, 11, 1, 33, 89, 185, 0, 0, 0, 0},
    {1, 3, 3, 3, 15, 9, 79, 71, 0, 0, 0, 0},
    {1, 3, 7, 11, 15, 39, 119, 27, 0, 0, 0, 0},
    {1, 1, 3, 1, 11, 31, 97, 225, 0, 0, 0, 0},
    {1, 1, 1, 3, 23, 43, 57, 177, 0, 0, 0, 0},
    {1, 3, 7, 7, 17, 17, 37, 71, 0, 0, 0, 0},
    {1, 3, 1, 5, 27, 63, 123, 213, 0, 0, 0, 0},
    {1, 1, 3, 5, 11, 43, 53, 133, 0, 0, 0, 0},
    {1, 3, 5, 5, 29, 17, 47, 173, 479, 0, 0, 0},
    {1, 3, 3, 11, 3, 1, 109, 9, 69, 0, 0, 0},
    {1, 1, 1, 5, 17, 39, 23, 5, 343, 0, 0, 0},
    {1, 3, 1, 5, 25, 15, 31, 103, 499, 0, 0, 0},
    {1, 1, 1, 11, 11, 17, 63, 105, 183, 0, 0, 0},
    {1, 1, 5, 11, 9, 29, 97, 231, 363, 0, 0, 0},
    {1, 1, 5, 15, 19, 45, 41, 7, 383, 0, 0, 0},
    {1, 3, 7, 7, 31, 19, 83, 137, 221, 0, 0, 0},
    {1, 1, 1, 3, 23, 15, 111, 223, 83, 0, 0, 0},
    {1, 1, 5, 13, 31, 15, 55, 25, 161, 0, 0, 0},
    {1, 1, 3, 13, 25, 47, 39, 87, 257, 0, 0, 0},
    {1, 1, 1, 11, 21, 53, 125, 249, 293, 0, 0, 0},
    {1, 1, 7, 11, 11, 7, 57, 79, 323, 0, 0, 0},
    {1, 1, 5, 5, 17, 13, 81, 3, 131, 0, 0, 0},
    {1, 1, 7, 13, 23, 7, 65, 251, 475, 0, 0, 0},
    {1, 3, 5, 1, 9, 43, 3, 149, 11, 0, 0, 0},
    {1, 1, 3, 13, 31, 13, 13, 255, 487, 0, 0, 0},
    {1, 3, 3, 1, 5, 63, 89, 91, 127, 0, 0, 0},
    {1, 1, 3, 3, 1, 19, 123, 127, 237, 0, 0, 0},
    {1, 1, 5, 7, 23, 31, 37, 243, 289, 0, 0, 0},
    {1, 1, 5, 11, 17, 53, 117, 183, 491, 0, 0, 0},
    {1, 1, 1, 5, 1, 13, 13, 209, 345, 0, 0, 0},
    {1, 1, 3, 15, 1, 57, 115, 7, 33, 0, 0, 0},
    {1, 3, 1, 11, 7, 43, 81, 207, 175, 0, 0, 0},
    {1, 3, 1, 1, 15, 27, 63, 255, 49, 0, 0, 0},
    {1, 3, 5, 3, 27, 61, 105, 171, 305, 0, 0, 0},
    {1, 1, 5, 3, 1, 3, 57, 249, 149, 0, 0, 0},
    {1, 1, 3, 5, 5, 57, 15, 13, 159, 0, 0, 0},
    {1, 1, 1, 11, 7, 11, 105, 141, 225, 0, 0, 0},
    {1, 3, 3, 5, 27, 59, 121, 101, 271, 0, 0, 0},
    {1, 3, 5, 9, 11, 49, 51, 59, 115, 0, 0, 0},
    {1, 1, 7, 1, 23, 45, 125, 71, 419, 0, 0, 0},
    {1, 1, 3, 5, 23, 5, 105, 109, 75, 0, 0, 0},
    {1, 1, 7, 15, 7, 11, 67, 121, 453, 0, 0, 0},
    {1, 3, 7, 3, 9, 13, 31, 27, 449, 0, 0, 0},
    {1, 3, 1, 15, 19, 39, 39, 89, 15, 0, 0, 0},
    {1, 1, 1, 1, 1, 33, 73, 145, 379, 0, 0, 0},
    {1, 3, 1, 15, 15, 43, 29, 13, 483, 0, 0, 0},
    {1, 1, 7, 3, 19, 27, 85, 131, 431, 0, 0, 0},
    {1, 3, 3, 3, 5, 35, 23, 195, 349, 0, 0, 0},
    {1, 3, 3, 7, 9, 27, 39, 59, 297, 0, 0, 0},
    {1, 1, 3, 9, 11, 17, 13, 241, 157, 0, 0, 0},
    {1, 3, 7, 15, 25, 57, 33, 189, 213, 0, 0, 0},
    {1, 1, 7, 1, 9, 55, 73, 83, 217, 0, 0, 0},
    {1, 3, 3, 13, 19, 27, 23, 113, 249, 0, 0, 0},
    {1, 3, 5, 3, 23, 43, 3, 253, 479, 0, 0, 0},
    {1, 1, 5, 5, 11, 5, 45, 117, 217, 0, 0, 0},
    {1, 3, 3, 7, 29, 37, 33, 123, 147, 0, 0, 0},
    {1, 3, 1, 15, 5, 5, 37, 227, 223, 459, 0, 0},
    {1, 1, 7, 5, 5, 39, 63, 255, 135, 487, 0, 0},
    {1, 3, 1, 7, 9, 7, 87, 249, 217, 599, 0, 0},
    {1, 1, 3, 13, 9, 47, 7, 225, 363, 247, 0, 0},
    {1, 3, 7, 13, 19, 13, 9, 67, 9, 737, 0, 0},
    {1, 3, 5, 5, 19, 59, 7, 41, 319, 677, 0, 0},
    {1, 1, 5, 3, 31, 63, 15, 43, 207, 789, 0, 0},
    {1, 1, 7, 9, 13, 39, 3, 47, 497, 169, 0, 0},
    {1, 3, 1, 7, 21, 17, 97, 19, 415, 905, 0, 0},
    {1, 3, 7, 1, 3, 31, 71, 111, 165, 127, 0, 0},
    {1, 1, 5, 11, 1, 61, 83, 119, 203, 847, 0, 0},
    {1, 3, 3, 13, 9, 61, 19, 97, 47, 35, 0, 0},
    {1, 1, 7, 7, 15, 29, 63, 95, 417, 469, 0, 0},
    {1, 3, 1, 9, 25, 9, 71, 57, 213, 385, 0, 0},
    {1, 3, 5, 13, 31, 47, 101, 57, 39, 341, 0, 0},
    {1, 1, 3, 3, 31, 57, 125, 173, 365, 551, 0, 0},
    {1, 3, 7, 1, 13, 57, 67, 157, 451, 707, 0, 0},
    {1, 1, 1, 7, 21, 13, 105, 89, 429, 965, 0, 0},
    {1, 1, 5, 9, 17, 51, 45, 119, 157, 141, 0, 0},
    {1, 3, 7, 7, 13, 45, 91, 9, 129, 741, 0, 0},
    {1, 3, 7, 1, 23, 57, 67, 141, 151, 571, 0, 0},
    {1, 1, 3, 11, 17, 47, 93, 107, 375, 157, 0, 0},
    {1, 3, 3, 5, 11, 21, 43, 51, 169, 915, 0, 0},
    {1, 1, 5, 3, 15, 55, 101, 67, 455, 625, 0, 0},
    {1, 3, 5, 9, 1, 23, 29, 47, 345, 595, 0, 0},
    {1, 3, 7, 7, 5, 49, 29, 155, 323, 589, 0, 0},
    {1, 3, 3, 7, 5, 41, 127, 61, 261, 717, 0, 0},
    {1, 3, 7, 7, 17, 23, 117, 67, 129, 1009, 0, 0},
    {1, 1, 3, 13, 11, 39, 21, 207, 123, 305, 0, 0},
    {1, 1, 3, 9, 29, 3, 95, 47, 231, 73, 0, 0},
    {1, 3, 1, 9, 1, 29, 117, 21, 441, 259, 0, 0},
    {1, 3, 1, 13, 21, 39, 125, 211, 439, 723, 0, 0},
    {1, 1, 7, 3, 17, 63, 115, 89, 49, 773, 0, 0},
    {1, 3, 7, 13, 11, 33, 101, 107, 63, 73, 0, 0},
    {1, 1, 5, 5, 13, 57, 63, 135, 437, 177, 0, 0},
    {1, 1, 3, 7, 27, 63, 93, 47, 417, 483, 0, 0},
    {1, 1, 3, 1, 23, 29, 1, 191, 49, 23, 0, 0},
    {1, 1, 3, 15, 25, 55, 9, 101, 219, 607, 0, 0},
    {1, 3, 1, 7, 7, 19, 51, 251, 393, 307, 0, 0},
    {1, 3, 3, 3, 25, 55, 17, 75, 337, 3, 0, 0},
    {1, 1, 1, 13, 25, 17, 65, 45, 479, 413, 0, 0},
    {1, 1, 7, 7, 27, 49, 99, 161, 213, 727, 0, 0},
    {1, 3, 5, 1, 23, 5, 43, 41, 251, 857, 0, 0},
    {1, 3, 3, 7, 11, 61, 39, 87, 383, 835, 0, 0},
    {1, 1, 3, 15, 13, 7, 29, 7, 505, 923, 0, 0},
    {1, 3, 7, 1, 5, 31, 47, 157, 445, 501, 0, 0},
    {1, 1, 3, 7, 1, 43, 9, 147, 115, 605, 0, 0},
    {1, 3, 3, 13, 5, 1, 119, 211, 455, 1001, 0, 0},
    {1, 1, 3, 5, 13, 19, 3, 243, 75, 843, 0, 0},
    {1, 3, 7, 7, 1, 19, 91, 249, 357, 589, 0, 0},
    {1, 1, 1, 9, 1, 25, 109, 197, 279, 411, 0, 0},
    {1, 3, 1, 15, 23, 57, 59, 135, 191, 75, 0, 0},
    {1, 1, 5, 15, 29, 21, 39, 253, 383, 349, 0, 0},
    {1, 3, 3, 5, 19, 45, 61, 151, 199, 981, 0, 0},
    {1, 3, 5, 13, 9, 61, 107, 141, 141, 1, 0, 0},
    {1, 3, 1, 11, 27, 25, 85, 105, 309, 979, 0, 0},
    {1, 3, 3, 11, 19, 7, 115, 223, 349, 43, 0, 0},
    {1, 1, 7, 9, 21, 39, 123, 21, 275, 927, 0, 0},
    {1, 1, 7, 13, 15, 41, 47, 243, 303, 437, 0, 0},
    {1, 1, 1, 7, 7, 3, 15, 99, 409, 719, 0, 0},
    {1, 3, 3, 15, 27, 49, 113, 123, 113, 67, 469, 0},
    {1, 3, 7, 11, 3, 23, 87, 169, 119, 483, 199, 0},
    {1, 1, 5, 15, 7, 17, 109, 229, 179, 213, 741, 0},
    {1, 1, 5, 13, 11, 17, 25, 135, 403, 557, 1433, 0},
    {1, 3, 1, 1, 1, 61, 67, 215, 189, 945, 1243, 0},
    {1, 1, 7, 13, 17, 33, 9, 221, 429, 217, 1679, 0},
    {1, 1, 3, 11, 27, 3, 15, 93, 93, 865, 1049, 0},
    {1, 3, 7, 7, 25, 41, 121, 35, 373, 379, 1547, 0},
    {1, 3, 3, 9, 11, 35, 45, 205, 241, 9, 59, 0},
    {1, 3, 1, 7, 3, 51, 7, 177, 53, 975, 89, 0},
    {1, 1, 3, 5, 27, 1, 113, 231, 299, 759, 861, 0},
    {1, 3, 3, 15, 25, 29, 5, 255, 139, 891, 2031, 0},
    {1, 3, 1, 1, 13, 9, 109, 193, 419, 95, 17, 0},
    {1, 1, 7, 9, 3, 7, 29, 41, 135, 839, 867, 0},
    {1, 1, 7, 9, 25, 49, 123, 217, 113, 909, 215, 0},
    {1, 1, 7, 3, 23, 15, 43, 133, 217, 327, 901, 0},
    {1, 1, 3, 3, 13, 53, 63, 123, 477, 711, 1387, 0},
    {1, 1, 3, 15, 7, 29, 75, 119, 181, 957, 247, 0},
    {1, 1, 1, 11, 27, 25, 109, 151, 267, 99, 1461, 0},
    {1, 3, 7, 15, 5, 5, 53, 145, 11, 725, 1501, 0},
    {1, 3, 7, 1, 9, 43, 71, 229, 157, 607, 1835, 0},
    {1, 3, 3, 13, 25, 1, 5, 27, 471, 349, 127, 0},
    {1, 1, 1, 1, 23, 37, 9, 221, 269, 897, 1685, 0},
    {1, 1, 3, 3, 31, 29, 51, 19, 311, 553, 1969, 0},
    {1, 3, 7, 5, 5, 55, 17, 39, 475, 671, 1529, 0},
    {1, 1, 7, 1, 1, 35, 47, 27, 437, 395, 1635, 0},
    {1, 1, 7, 3, 13, 23, 43, 135, 327, 139, 389, 0},
    {1, 3, 7, 3, 9, 25, 91, 25, 429, 219, 513, 0},
    {1, 1, 3, 5, 13, 29, 119, 201, 277, 157, 2043, 0},
    {1, 3, 5, 3, 29, 57, 13, 17, 167, 739, 1031, 0},
    {1, 3, 3, 5, 29, 21, 95, 27, 255, 679, 1531, 0},
    {1, 3, 7, 15, 9, 5, 21, 71, 61, 961, 1201, 0},
    {1, 3, 5, 13, 15, 57, 33, 93, 459, 867, 223, 0},
    {1, 1, 1, 15, 17, 43, 127, 191, 67, 177, 1073, 0},
    {1, 1, 1, 15, 23, 7, 21, 199, 75, 293, 1611, 0},
    {1, 3, 7, 13, 15, 39, 21, 149, 65, 741, 319, 0},
    {1, 3, 7, 11, 23, 13, 101, 89, 277, 519, 711, 0},
    {1, 3, 7, 15, 19, 27, 85, 203, 441, 97, 1895, 0},
    {1, 3, 1, 3, 29, 25, 21, 155, 11, 191, 197, 0},
    {1, 1, 7, 5, 27, 11, 81, 101, 457, 675, 1687, 0},
    {1, 3, 1, 5, 25, 5, 65, 193, 41, 567, 781, 0},
    {1, 3, 1, 5, 11, 15, 113, 77, 411, 695, 1111, 0},
    {1, 1, 3, 9, 11, 53, 119, 171, 55, 297, 509, 0},
    {1, 1, 1, 1, 11, 39, 113, 139, 165, 347, 595, 0},
    {1, 3, 7, 11, 9, 17, 101, 13, 81, 325, 1733, 0},
    {1, 3, 1, 1, 21, 43, 115, 9, 113, 907, 645, 0},
    {1, 1, 7, 3, 9, 25, 117, 197, 159, 471, 475, 0},
    {1, 3, 1, 9, 11, 21, 57, 207, 485, 613, 1661, 0},
    {1, 1, 7, 7, 27, 55, 49, 223, 89, 85, 1523, 0},
    {1, 1, 5, 3, 19, 41, 45, 51, 447, 299, 1355, 0},
    {1, 3, 1, 13, 1, 33, 117, 143, 313, 187, 1073, 0},
    {1, 1, 7, 7, 5, 11, 65, 97, 377, 377, 1501, 0},
    {1, 3, 1, 1, 21, 35, 95, 65, 99, 23, 1239, 0},
    {1, 1, 5, 9, 3, 37, 95, 167, 115, 425, 867, 0},
    {1, 3, 3, 13, 1, 37, 27, 189, 81, 679, 773, 0},
    {1, 1, 3, 11, 1, 61, 99, 233, 429, 969, 49, 0},
    {1, 1, 1, 7, 25, 63, 99, 165, 245, 793, 1143, 0},
    {1, 1, 5, 11, 11, 43, 55, 65, 71, 283, 273, 0},
    {1, 1, 5, 5, 9, 3, 101, 251, 355, 379, 1611, 0},
    {1, 1, 1, 15, 21, 63, 85, 99, 49, 749, 1335, 0},
    {1, 1, 5, 13, 27, 9, 121, 43, 255, 715, 289, 0},
    {1, 3, 1, 5, 27, 19, 17, 223, 77, 571, 1415, 0},
    {1, 1, 5, 3, 13, 59, 125, 251, 195, 551, 1737, 0},
    {1, 3, 3, 15, 13, 27, 49, 105, 389, 971, 755, 0},
    {1, 3, 5, 15, 23, 43, 35, 107, 447, 763, 253, 0},
    {1, 3, 5, 11, 21, 3, 17, 39, 497, 407, 611, 0},
    {1, 1, 7, 13, 15, 31, 113, 17, 23, 507, 1995, 0},
    {1, 1, 7, 15, 3, 15, 31, 153, 423, 79, 503, 0},
    {1, 1, 7, 9, 19, 25, 23, 171, 505, 923, 1989, 0},
    {1, 1, 5, 9, 21, 27, 121, 223, 133, 87, 697, 0},
    {1, 1, 5, 5, 9, 19, 107, 99, 319, 765, 1461, 0},
    {1, 1, 3, 3, 19, 25, 3, 101, 171, 729, 187, 0},
    {1, 1, 3, 1, 13, 23, 85, 93, 291, 209, 37, 0},
    {1, 1, 1, 15, 25, 25, 77, 253, 333, 947, 1073, 0},
    {1, 1, 3, 9, 17, 29, 55, 47, 255, 305, 2037, 0},
    {1, 3, 3, 9, 29, 63, 9, 103, 489, 939, 1523, 0},
    {1, 3, 7, 15, 7, 31, 89, 175, 369, 339, 595, 0},
    {1, 3, 7, 13, 25, 5, 71, 207, 251, 367, 665, 0},
    {1, 3, 3, 3, 21, 25, 75, 35, 31, 321, 1603, 0},
    {1, 1, 1, 9, 11, 1, 65, 5, 11, 329, 535, 0},
    {1, 1, 5, 3, 19, 13, 17, 43, 379, 485, 383, 0},
    {1, 3, 5, 13, 13, 9, 85, 147, 489, 787, 1133, 0},
    {1, 3, 1, 1, 5, 51, 37, 129, 195, 297, 1783, 0},
    {1, 1, 3, 15, 19, 57, 59, 181, 455, 697, 2033, 0},
    {1, 3, 7, 1, 27, 9, 65, 145, 325, 189, 201, 0},
    {1, 3, 1, 15, 31, 23, 19, 5, 485, 581, 539, 0},
    {1, 1, 7, 13, 11, 15, 65, 83, 185, 847, 831, 0},
    {1, 3, 5, 7, 7, 55, 73, 15, 303, 511, 1905, 0},
    {1, 3, 5, 9, 7, 21, 45, 15, 397, 385, 597, 0},
    {1, 3, 7, 3, 23, 13, 73, 221, 511, 883, 1265, 0},
    {1, 1, 3, 11, 1, 51, 73, 185, 33, 975, 1441, 0},
    {1, 3, 3, 9, 19, 59, 21, 39, 339, 37, 143, 0},
    {1, 1, 7, 1, 31, 33, 19, 167, 117, 635, 639, 0},
    {1, 1, 1, 3, 5, 13, 59, 83, 355, 349, 1967, 0},
    {1, 1, 1, 5, 19, 3, 53, 133, 97, 863, 983, 0},
    {1, 3, 1, 13, 9, 41, 91, 105, 173, 97, 625, 0},
    {1, 1, 5, 3, 7, 49, 115, 133, 71, 231, 1063, 0},
    {1, 1, 7, 5, 17, 43, 47, 45, 497, 547, 757, 0},
    {1, 3, 5, 15, 21, 61, 123, 191, 249, 31, 631, 0},
    {1, 3, 7, 9, 17, 7, 11, 185, 127, 169, 1951, 0},
    {1, 1, 5, 13, 11, 11, 9, 49, 29, 125, 791, 0},
    {1, 1, 1, 15, 31, 41, 13, 167, 273, 429, 57, 0},
    {1, 3, 5, 3, 27, 7, 35, 209, 65, 265, 1393, 0},
    {1, 3, 1, 13, 31, 19, 53, 143, 135, 9, 1021, 0},
    {1, 1, 7, 13, 31, 5, 115, 153, 143, 957, 623, 0},
    {1, 1, 5, 11, 25, 19, 29, 31, 297, 943, 443, 0},
    {1, 3, 3, 5, 21, 11, 127, 81, 479, 25, 699, 0},
    {1, 1, 3, 11, 25, 31, 97, 19, 195, 781, 705, 0},
    {1, 1, 5, 5, 31, 11, 75, 207, 197, 885, 2037, 0},
    {1, 1, 1, 11, 9, 23, 29, 231, 307, 17, 1497, 0},
    {1, 1, 5, 11, 11, 43, 111, 233, 307, 523, 1259, 0},
    {1, 1, 7, 5, 1, 21, 107, 229, 343, 933, 217, 0},
    {1, 1, 1, 11, 3, 21, 125, 131, 405, 599, 1469, 0},
    {1, 3, 5, 5, 9, 39, 33, 81, 389, 151, 811, 0},
    {1, 1, 7, 7, 7, 1, 59, 223, 265, 529, 2021, 0},
    {1, 3, 1, 3, 9, 23, 85, 181, 47, 265, 49, 0},
    {1, 3, 5, 11, 19, 23, 9, 7, 157, 299, 1983, 0},
    {1, 3, 1, 5, 15, 5, 21, 105, 29, 339, 1041, 0},
    {1, 1, 1, 1, 5, 33, 65, 85, 111, 705, 479, 0},
    {1, 1, 1, 7, 9, 35, 77, 87, 151, 321, 101, 0},
    {1, 1, 5, 7, 17, 1, 51, 197, 175, 811, 1229, 0},
    {1, 3, 3, 15, 23, 37, 85, 185, 239, 543, 731, 0},
    {1, 3, 1, 7, 7, 55, 111, 109, 289, 439, 243, 0},
    {1, 1, 7, 11, 17, 53, 35, 217, 259, 853, 1667, 0},
    {1, 3, 1, 9, 1, 63, 87, 17, 73, 565, 1091, 0},
    {1, 1, 3, 3, 11, 41, 1, 57, 295, 263, 1029, 0},
    {1, 1, 5, 1, 27, 45, 109, 161, 411, 421, 1395, 0},
    {1, 3, 5, 11, 25, 35, 47, 191, 339, 417, 1727, 0},
    {1, 1, 5, 15, 21, 1, 93, 251, 351, 217, 1767, 0},
    {1, 3, 3, 11, 3, 7, 75, 155, 313, 211, 491, 0},
    {1, 3, 3, 5, 11, 9, 101, 161, 453, 913, 1067, 0},
    {1, 1, 3, 1, 15, 45, 127, 141, 163, 727, 1597, 0},
    {1, 3, 3, 7, 1, 33, 63, 73, 73, 341, 1691, 0},
    {1, 3, 5, 13, 15, 39, 53, 235, 77, 99, 949, 0},
    {1, 1, 5, 13, 31, 17, 97, 13, 215, 301, 1927, 0},
    {1, 1, 7, 1, 1, 37, 91, 93, 441, 251, 1131, 0},
    {1, 3, 7, 9, 25, 5, 105, 69, 81, 943, 1459, 0},
    {1, 3, 7, 11, 31, 43, 13, 209, 27, 1017, 501, 0},
    {1, 1, 7, 15, 1, 33, 31, 233, 161, 507, 387, 0},
    {1, 3, 3, 5, 5, 53, 33, 177, 503, 627, 1927, 0},
    {1, 1, 7, 11, 7, 61, 119, 31, 457, 229, 1875, 0},
    {1, 1, 5, 15, 19, 5, 53, 201, 157, 885, 1057, 0},
    {1, 3, 7, 9, 1, 35, 51, 113, 249, 425, 1009, 0},
    {1, 3, 5, 7, 21, 53, 37, 155, 119, 345, 631, 0},
    {1, 3, 5, 7, 15, 31, 109, 69, 503, 595, 1879, 0},
    {1, 3, 3, 1, 25, 35, 65, 131, 403, 705, 503, 0},
    {1, 3, 7, 7, 19, 33, 11, 153, 45, 633, 499, 0},
    {1, 3, 3, 5, 11, 3, 29, 93, 487, 33, 703, 0},
    {1, 1, 3, 15, 21, 53, 107, 179, 387, 927, 1757, 0},
    {1, 1, 3, 7, 21, 45, 51, 147, 175, 317, 361, 0},
    {1, 1, 1, 7, 7, 13, 15, 243, 269, 795, 1965, 0},
    {1, 1, 3, 5, 19, 33, 57, 115, 443, 537, 627, 0},
    {1, 3, 3, 9, 3, 39, 25, 61, 185, 717, 1049, 0},
    {1, 3, 7, 3, 7, 37, 107, 153, 7, 269, 1581, 0},
    {1, 1, 7, 3, 7, 41, 91, 41, 145, 489, 1245, 0},
    {1, 1, 5, 9, 7, 7, 105, 81, 403, 407, 283, 0},
    {1, 1, 7, 9, 27, 55, 29, 77, 193, 963, 949, 0},
    {1, 1, 5, 3, 25, 51, 107, 63, 403, 917, 815, 0},
    {1, 1, 7, 3, 7, 61, 19, 51, 457, 599, 535, 0},
    {1, 3, 7, 1, 23, 51, 105, 153, 239, 215, 1847, 0},
    {1, 1, 3, 5, 27, 23, 79, 49, 495, 45, 1935, 0},
    {1, 1, 1, 11, 11, 47, 55, 133, 495, 999, 1461, 0},
    {1, 1, 3, 15, 27, 51, 93, 17, 355, 763, 1675, 0},
    {1, 3, 1, 3, 1, 3, 79, 119, 499, 17, 995, 0},
    {1, 1, 1, 1, 15, 43, 45, 17, 167, 973, 799, 0},
    {1, 1, 1, 3, 27, 49, 89, 29, 483, 913, 2023, 0},
    {1, 1, 3, 3, 5, 11, 75, 7, 41, 851, 611, 0},
    {1, 3, 1, 3, 7, 57, 39, 123, 257, 283, 507, 0},
    {1, 3, 3, 11, 27, 23, 113, 229, 187, 299, 133, 0},
    {1, 1, 3, 13, 9, 63, 101, 77, 451, 169, 337, 0},
    {1, 3, 7, 3, 3, 59, 45, 195, 229, 415, 409, 0},
    {1, 3, 5, 3, 11, 19, 71, 93, 43, 857, 369, 0},
    {1, 3, 7, 9, 19, 33, 115, 19, 241, 703, 247, 0},
    {1, 3, 5, 11, 5, 35, 21, 155, 463, 1005, 1073, 0},
    {1, 3, 7, 3, 25, 15, 109, 83, 93, 69, 1189, 0},
    {1, 3, 5, 7, 5, 21, 93, 133, 135, 167, 903, 0},
    {1, 1, 7, 7, 3, 59, 121, 161, 285, 815, 1769, 3705},
    {1, 3, 1, 1, 3, 47, 103, 171, 381, 609, 185, 373},
    {1, 3, 3, 15, 23, 33, 107, 131, 441, 445, 689, 2059},
    {1, 3, 3, 11, 7, 53, 101, 167, 435, 803, 1255, 3781},
    {1, 1, 5, 11, 15, 59, 41, 19, 135, 835, 1263, 505},
    {1, 1, 7, 11, 21, 49, 23, 219, 127, 961, 1065, 385},
    {1, 3, 5, 15, 7, 47, 117, 217, 45, 731, 1639, 733},
    {1, 1, 7, 11, 27, 57, 91, 87, 81, 35, 1269, 1007},
    {1, 1, 3, 11, 15, 37, 53, 219, 193, 937, 1899, 3733},
    {1, 3, 5, 3, 13, 11, 27, 19, 199, 393, 965, 2195},
    {1, 3, 1, 3, 5, 1, 37, 173, 413, 1023, 553, 409},
    {1, 3, 1, 7, 15, 29, 123, 95, 255, 373, 1799, 3841},
    {1, 3, 5, 13, 21, 57, 51, 17, 511, 195, 1157, 1831},
    {1, 1, 1, 15, 29, 19, 7, 73, 295, 519, 587, 3523},
    {1, 1, 5, 13, 13, 35, 115, 191, 123, 535, 717, 1661},
    {1, 3, 3, 5, 23, 21, 47, 251, 379, 921, 1119, 297},
    {1, 3, 3, 9, 29, 53, 121, 201, 135, 193, 523, 2943},
    {1, 1, 1, 7, 29, 45, 125, 9, 99, 867, 425, 601},
    {1, 3, 1, 9, 13, 15, 67, 181, 109, 293, 1305, 3079},
    {1, 3, 3, 9, 5, 35, 15, 209, 305, 87, 767, 2795},
    {1, 3, 3, 11, 27, 57, 113, 123, 179, 643, 149, 523},
    {1, 1, 3, 15, 11, 17, 67, 223, 63, 657, 335, 3309},
    {1, 1, 1, 9, 25, 29, 109, 159, 39, 513, 571, 1761},
};

}  // namespace ldseds::detail
