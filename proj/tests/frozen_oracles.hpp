// Generated by tools/oracles/gen_oracles.py. Do not edit by hand.
#pragma once

#include <array>
#include <cstdint>

namespace oracle {

inline constexpr std::array<std::uint8_t, 23> kHeaderBytes{0x01, 0x02, 0x03, 0x04, 0x05, 0x06, 0x07, 0x08, 0x0a, 0x0b, 0x0c, 0x0d, 0x00, 0x00, 0x03, 0xe8, 0xc0, 0xa8, 0x00, 0x01, 0x00, 0x03, 0x01};
inline constexpr std::array<std::uint8_t, 32> kHeaderDigest{0x82, 0x0b, 0x59, 0xd7, 0x8b, 0xef, 0xc7, 0x49, 0x22, 0x8c, 0x0d, 0xe3, 0x1b, 0x7d, 0x4c, 0xc8, 0x0d, 0x96, 0x9f, 0xfb, 0xb7, 0x4b, 0xf2, 0xae, 0x71, 0x8c, 0xce, 0xff, 0xbf, 0x5c, 0x4e, 0x0c};

struct ChecksumCase { std::uint16_t issuer; std::uint64_t serial; std::uint16_t checksum; };
inline constexpr ChecksumCase kChecksums[] = {
    {0x0000, 0x0000000000000000ULL, 0x0000},
    {0x0001, 0x00000000000003e8ULL, 0x03e9},
    {0xffff, 0xffffffffffffffffULL, 0xffff},
    {0x1234, 0x0123456789abcdefULL, 0xb059},
    {0x8000, 0x8000800080008000ULL, 0x8002},
};

struct BlockCase { std::uint64_t t, c, n, d; };
inline constexpr BlockCase kBlockDurations[] = {
    {10, 0, 1, 0},
    {10, 1, 1, 10},
    {10, 0, 2, 0},
    {10, 2, 2, 10},
    {10, 0, 3, 0},
    {10, 3, 3, 10},
    {10, 0, 7, 0},
    {10, 7, 7, 10},
    {10, 0, 100, 0},
    {10, 100, 100, 10},
    {265, 2765, 4980, 148},
    {735, 748, 1228, 448},
    {17, 1370, 3022, 8},
    {694, 1435, 1898, 525},
    {127, 2434, 2493, 124},
    {366, 208, 410, 186},
    {186, 344, 2454, 27},
    {207, 63, 1023, 13},
    {240, 13, 2677, 2},
    {844, 1233, 2457, 424},
    {215, 1640, 3401, 104},
    {701, 2546, 3788, 472},
    {957, 1689, 3068, 527},
    {727, 1752, 2021, 631},
    {585, 382, 457, 489},
    {285, 1517, 2118, 205},
    {853, 935, 3090, 259},
    {154, 1094, 1786, 95},
    {56, 2811, 3512, 45},
    {336, 123, 3082, 14},
    {370, 3327, 4251, 290},
    {425, 681, 781, 371},
    {808, 1356, 3616, 303},
    {578, 59, 490, 70},
    {700, 1472, 4943, 209},
    {730, 297, 511, 425},
    {998, 853, 2668, 320},
    {342, 89, 4272, 8},
    {972, 142, 4441, 32},
    {858, 508, 1946, 224},
    {790, 1524, 2945, 409},
    {714, 3489, 4319, 577},
    {785, 282, 374, 592},
    {760, 153, 1197, 98},
    {10, 1076, 2072, 6},
    {636, 1086, 3718, 186},
    {244, 177, 1107, 40},
    {449, 1426, 2576, 249},
    {49, 1539, 3829, 20},
    {227, 294, 640, 105},
    {920, 1009, 1295, 717},
    {188, 760, 3373, 43},
    {759, 236, 2336, 77},
    {722, 420, 4548, 67},
    {775, 3274, 3649, 696},
    {384, 292, 2750, 41},
    {100, 1698, 3043, 56},
    {369, 10, 2357, 2},
    {222, 342, 1583, 48},
    {939, 604, 2645, 215},
    {931, 3157, 3336, 882},
    {355, 611, 4892, 45},
    {435, 2607, 4879, 233},
    {636, 325, 2259, 92},
    {586, 211, 338, 366},
    {653, 2211, 3890, 372},
    {804, 1223, 2447, 402},
    {721, 850, 2010, 305},
    {868, 1330, 4445, 260},
    {890, 311, 729, 380},
    {227, 2106, 2488, 193},
    {392, 891, 1419, 247},
    {197, 2806, 3045, 182},
    {681, 3247, 3471, 638},
    {26, 3046, 3788, 21},
    {108, 15, 2019, 1},
    {137, 2340, 2978, 108},
    {352, 2456, 2589, 334},
    {464, 1079, 1945, 258},
    {22, 2156, 3495, 14},
    {736, 415, 504, 607},
    {449, 880, 4489, 89},
    {28, 1252, 1516, 24},
    {55, 142, 257, 31},
    {291, 2682, 3439, 227},
    {1, 1611, 1653, 1},
    {188, 1166, 3680, 60},
    {887, 523, 1504, 309},
    {824, 172, 3117, 46},
    {972, 1267, 1354, 910},
    {780, 7, 813, 7},
    {292, 609, 2743, 65},
    {838, 572, 864, 555},
    {379, 2035, 2678, 289},
    {382, 1037, 2822, 141},
    {954, 284, 1785, 152},
    {358, 2349, 3214, 262},
    {274, 1258, 1288, 268},
    {865, 61, 88, 600},
    {918, 1639, 2602, 579},
    {663, 249, 575, 288},
    {443, 2993, 3293, 403},
    {290, 1186, 2165, 159},
    {547, 959, 1366, 385},
    {595, 1892, 3961, 285},
    {862, 1327, 2940, 390},
    {10, 2536, 4535, 6},
    {72, 982, 4643, 16},
    {857, 10, 32, 268},
    {699, 53, 63, 589},
    {413, 38, 70, 225},
    {276, 1088, 1469, 205},
    {168, 371, 2433, 26},
    {867, 62, 256, 210},
    {77, 198, 3710, 5},
    {236, 547, 2889, 45},
    {327, 3885, 4926, 258},
    {660, 1155, 4885, 157},
    {784, 507, 609, 653},
    {818, 431, 2402, 147},
    {804, 1825, 3323, 442},
    {523, 2762, 4259, 340},
    {836, 3979, 4005, 831},
    {877, 509, 612, 730},
    {506, 1484, 3895, 193},
    {588, 773, 4605, 99},
    {593, 3807, 4810, 470},
    {207, 22, 57, 80},
    {964, 1248, 3792, 318},
    {723, 1420, 2803, 367},
    {159, 2609, 4291, 97},
    {460, 949, 1362, 321},
    {455, 1556, 4541, 156},
    {174, 1580, 2874, 96},
    {490, 1811, 1930, 460},
    {303, 352, 1106, 97},
    {159, 26, 75, 56},
    {941, 336, 4284, 74},
    {38, 3748, 4772, 30},
    {755, 3008, 3928, 579},
    {997, 163, 172, 945},
    {759, 742, 994, 567},
    {193, 521, 1816, 56},
    {493, 50, 66, 374},
    {738, 305, 728, 310},
    {544, 2711, 2801, 527},
    {656, 508, 3632, 92},
    {217, 362, 1710, 46},
    {867, 527, 981, 466},
    {376, 1053, 3527, 113},
    {195, 4306, 4809, 175},
    {612, 1335, 3394, 241},
    {982, 184, 528, 343},
    {653, 2604, 4513, 377},
    {648, 238, 1085, 143},
    {137, 1024, 2799, 51},
    {381, 914, 1742, 200},
    {521, 853, 1015, 438},
    {572, 228, 396, 330},
    {471, 1540, 1833, 396},
    {197, 583, 2703, 43},
    {941, 1640, 2145, 720},
    {772, 316, 1559, 157},
    {400, 64, 323, 80},
    {289, 3743, 4337, 250},
    {78, 1365, 3445, 31},
    {455, 1, 20, 23},
    {397, 255, 4753, 22},
    {746, 203, 4406, 35},
    {646, 3560, 4103, 561},
    {2, 161, 268, 2},
    {17, 1655, 3399, 9},
    {1, 126, 182, 1},
    {944, 901, 3601, 237},
    {904, 160, 447, 324},
    {41, 1165, 2028, 24},
    {51, 693, 1075, 33},
    {279, 958, 1622, 165},
    {401, 472, 508, 373},
    {330, 293, 299, 324},
    {630, 1731, 2660, 410},
    {198, 106, 741, 29},
    {122, 3003, 3501, 105},
    {424, 274, 397, 293},
    {29, 2001, 3813, 16},
    {432, 1223, 2946, 180},
    {292, 318, 594, 157},
    {684, 691, 925, 511},
    {112, 410, 4172, 12},
    {753, 735, 1136, 488},
    {914, 1595, 1675, 871},
    {350, 1285, 4155, 109},
    {124, 2895, 3056, 118},
    {834, 1672, 2718, 514},
    {69, 457, 3949, 8},
    {893, 2695, 3011, 800},
    {391, 205, 307, 262},
    {341, 1956, 2258, 296},
    {793, 335, 1561, 171},
    {972, 137, 173, 770},
    {430, 2864, 4157, 297},
    {760, 2856, 3918, 554},
    {308, 346, 1706, 63},
    {525, 433, 1005, 227},
    {970, 438, 4482, 95},
    {37, 842, 2951, 11},
    {375, 606, 2873, 80},
    {250, 327, 344, 238},
    {93, 184, 393, 44},
    {700, 2176, 3884, 393},
    {648, 935, 4306, 141},
    {291, 2535, 2636, 280},
    {285, 1082, 4013, 77},
    {452, 2518, 4757, 240},
    {510, 1327, 3655, 186},
    {476, 474, 1946, 116},
    {23, 2195, 3682, 14},
    {129, 1407, 2531, 72},
    {206, 579, 1178, 102},
    {473, 58, 3659, 8},
    {821, 909, 3389, 221},
    {384, 1950, 2587, 290},
    {339, 1398, 3840, 124},
    {714, 772, 2126, 260},
    {969, 3501, 4964, 684},
    {549, 501, 3258, 85},
    {687, 483, 4026, 83},
    {151, 407, 1236, 50},
    {814, 526, 2266, 189},
    {321, 2406, 4148, 187},
    {167, 539, 2252, 40},
    {839, 192, 3523, 46},
    {959, 3936, 4153, 909},
    {126, 801, 1911, 53},
    {860, 23, 2728, 8},
    {969, 493, 1523, 314},
    {496, 2546, 4285, 295},
    {93, 79, 185, 40},
    {531, 71, 620, 61},
    {514, 331, 2762, 62},
    {766, 2674, 3064, 669},
    {84, 1697, 3837, 38},
    {809, 697, 1883, 300},
    {803, 1314, 4148, 255},
    {433, 560, 2191, 111},
    {854, 57, 596, 82},
    {149, 741, 2910, 38},
    {266, 1309, 4003, 87},
    {915, 956, 2319, 378},
    {812, 110, 987, 91},
    {941, 231, 2267, 96},
    {970, 3698, 4082, 879},
    {142, 4699, 4777, 140},
    {692, 33, 415, 56},
    {335, 8, 2582, 2},
    {312, 1008, 1082, 291},
    {524, 1389, 3957, 184},
    {605, 183, 1245, 89},
    {111, 855, 882, 108},
    {954, 1298, 4492, 276},
    {590, 88, 207, 251},
    {524, 689, 4180, 87},
    {290, 102, 968, 31},
    {685, 700, 901, 533},
    {783, 313, 414, 592},
    {179, 1360, 3343, 73},
    {175, 509, 999, 90},
    {945, 10, 24, 394},
    {630, 91, 150, 383},
    {88, 738, 3797, 18},
    {997, 2320, 3519, 658},
    {224, 45, 162, 63},
    {364, 104, 3750, 11},
    {18, 2489, 3379, 14},
    {767, 1182, 1277, 710},
    {104, 1516, 2658, 60},
    {564, 0, 48, 0},
    {692, 1192, 1412, 585},
    {676, 276, 1050, 178},
    {202, 142, 150, 192},
    {391, 1137, 2388, 187},
    {293, 407, 2195, 55},
    {305, 4533, 4534, 305},
    {58, 1813, 2072, 51},
    {845, 22, 1925, 10},
    {972, 1292, 4451, 283},
    {234, 1527, 3004, 119},
    {236, 2647, 4209, 149},
    {730, 2084, 2814, 541},
    {910, 2526, 4039, 570},
    {83, 420, 821, 43},
    {976, 2308, 3695, 610},
    {762, 513, 528, 741},
    {182, 169, 1045, 30},
    {316, 1304, 2982, 139},
    {807, 547, 1715, 258},
    {245, 41, 527, 20},
    {301, 154, 4530, 11},
    {740, 63, 4998, 10},
    {752, 994, 1345, 556},
    {408, 915, 1048, 357},
    {100, 679, 1359, 50},
    {487, 1195, 2378, 245},
    {600, 2362, 3277, 433},
    {813, 501, 1098, 371},
    {182, 3903, 4973, 143},
    {658, 3669, 4767, 507},
    {764, 1419, 3362, 323},
    {536, 1737, 2810, 332},
    {893, 671, 2733, 220},
    {801, 74, 413, 144},
    {278, 359, 3607, 28},
    {963, 759, 2021, 362},
    {921, 4266, 4399, 894},
    {191, 119, 2753, 9},
    {198, 466, 1274, 73},
    {877, 1492, 2341, 559},
    {41, 631, 2623, 10},
    {985, 2988, 3291, 895},
    {777, 2980, 4117, 563},
    {737, 540, 2930, 136},
    {935, 972, 1120, 812},
    {248, 11, 4754, 1},
    {689, 218, 1357, 111},
    {551, 42, 2338, 10},
    {603, 268, 874, 185},
    {585, 28, 2006, 9},
    {43, 1134, 1891, 26},
    {531, 440, 629, 372},
    {681, 1325, 4385, 206},
    {988, 3000, 3983, 745},
    {122, 1261, 1546, 100},
    {422, 2561, 4523, 239},
    {347, 2057, 3910, 183},
    {289, 749, 872, 249},
    {855, 848, 1415, 513},
    {491, 775, 1634, 233},
    {810, 4052, 4402, 746},
    {733, 650, 911, 523},
    {454, 165, 507, 148},
    {15, 1340, 3741, 6},
    {644, 819, 4290, 123},
    {429, 2938, 4455, 283},
    {85, 1291, 2930, 38},
    {720, 93, 1654, 41},
    {183, 1718, 2792, 113},
    {333, 49, 2315, 8},
    {782, 1449, 3192, 355},
    {486, 754, 3170, 116},
    {741, 2923, 4259, 509},
    {455, 760, 2907, 119},
    {307, 1489, 3142, 146},
    {920, 388, 2069, 173},
    {155, 2919, 4302, 106},
    {713, 10, 361, 20},
    {920, 2875, 3725, 711},
    {497, 1048, 1586, 329},
    {278, 1514, 4277, 99},
    {850, 1850, 3475, 453},
    {301, 1460, 2463, 179},
    {980, 3372, 3524, 938},
    {826, 414, 1526, 225},
    {954, 153, 331, 441},
    {984, 230, 388, 584},
    {282, 713, 4298, 47},
    {587, 309, 3245, 56},
    {95, 2227, 4030, 53},
    {269, 912, 4999, 50},
    {407, 1786, 2181, 334},
    {17, 463, 4163, 2},
    {325, 2547, 3401, 244},
    {361, 1530, 4312, 129},
    {718, 3687, 4052, 654},
    {671, 1375, 3842, 241},
    {586, 4356, 4933, 518},
    {449, 3228, 4708, 308},
    {825, 1786, 4054, 364},
    {993, 612, 1783, 341},
    {928, 1894, 4940, 356},
    {50, 532, 912, 30},
    {539, 538, 570, 509},
    {367, 2287, 2847, 295},
    {277, 2774, 4578, 168},
    {495, 333, 519, 318},
    {103, 1121, 2408, 48},
    {546, 2985, 3798, 430},
    {422, 2484, 2806, 374},
    {607, 2704, 3595, 457},
    {62, 2624, 3316, 50},
    {884, 32, 82, 345},
    {256, 125, 2871, 12},
    {658, 478, 3085, 102},
    {1, 1859, 3283, 1},
    {474, 184, 1493, 59},
    {259, 874, 2316, 98},
    {310, 381, 430, 275},
    {690, 1052, 3072, 237},
    {108, 1614, 2593, 68},
    {925, 868, 3797, 212},
    {708, 3579, 4809, 527},
    {996, 4019, 4484, 893},
    {563, 3037, 3667, 467},
    {123, 832, 2875, 36},
    {806, 2415, 3229, 603},
    {46, 3044, 3165, 45},
    {696, 1010, 1955, 360},
    {996, 2061, 3452, 595},
    {148, 139, 233, 89},
    {14, 703, 3584, 3},
    {989, 277, 395, 694},
    {577, 616, 1038, 343},
    {249, 693, 2464, 71},
    {449, 413, 1297, 143},
    {45, 1223, 1653, 34},
    {722, 843, 3537, 173},
    {578, 1266, 2888, 254},
    {401, 286, 310, 370},
    {528, 3463, 4675, 392},
    {900, 580, 2662, 197},
    {416, 31, 301, 43},
    {445, 2173, 3944, 246},
    {488, 154, 2018, 38},
    {974, 160, 343, 455},
    {868, 155, 1020, 132},
    {724, 461, 1029, 325},
    {230, 2681, 3111, 199},
    {744, 324, 1192, 203},
    {523, 551, 3287, 88},
    {801, 1633, 2295, 570},
    {971, 23, 52, 430},
    {1, 2066, 2370, 1},
    {940, 136, 2683, 48},
    {556, 738, 1666, 247},
    {920, 3310, 3709, 822},
    {113, 600, 777, 88},
    {880, 1071, 2125, 444},
    {711, 1005, 3708, 193},
    {952, 215, 4092, 51},
    {880, 427, 1119, 336},
    {877, 908, 2536, 315},
    {856, 3741, 4071, 787},
    {19, 13, 34, 8},
    {237, 178, 888, 48},
    {632, 649, 1914, 215},
    {983, 853, 2574, 326},
    {552, 684, 3279, 116},
    {26, 930, 1452, 17},
    {292, 129, 3578, 11},
    {126, 3403, 3540, 122},
    {627, 1477, 4529, 205},
    {767, 163, 2002, 63},
    {210, 143, 464, 65},
    {162, 3224, 3683, 142},
    {32, 384, 2014, 7},
    {566, 247, 2976, 47},
    {668, 1236, 1427, 579},
    {370, 151, 641, 88},
    {25, 3257, 3901, 21},
    {7, 2513, 2820, 7},
    {800, 2521, 4633, 436},
    {255, 1108, 4763, 60},
    {174, 3095, 4799, 113},
    {349, 1433, 3684, 136},
    {47, 22, 136, 8},
    {58, 121, 2001, 4},
    {747, 462, 1051, 329},
    {200, 547, 818, 134},
    {463, 61, 451, 63},
    {194, 2202, 3917, 110},
    {87, 2747, 3297, 73},
    {28, 2363, 3589, 19},
    {509, 3701, 3722, 507},
    {797, 375, 2098, 143},
    {538, 2909, 4968, 316},
    {548, 472, 4815, 54},
    {499, 1051, 1441, 364},
    {192, 526, 3285, 31},
    {486, 1202, 1849, 316},
    {104, 1252, 3701, 36},
    {744, 2394, 3825, 466},
    {911, 183, 2254, 74},
    {187, 1673, 3583, 88},
    {841, 2201, 2224, 833},
    {714, 2566, 4942, 371},
    {970, 193, 200, 937},
    {725, 2245, 3276, 497},
    {496, 454, 487, 463},
    {608, 2072, 2556, 493},
    {59, 708, 2789, 15},
    {586, 1463, 2969, 289},
    {782, 1207, 1352, 699},
    {818, 1188, 3556, 274},
    {570, 1412, 4014, 201},
    {922, 645, 777, 766},
    {490, 938, 4939, 94},
    {811, 1896, 3501, 440},
    {864, 1728, 2951, 506},
    {934, 22, 33, 623},
    {807, 790, 3432, 186},
    {306, 1324, 3018, 135},
    {107, 456, 796, 62},
    {544, 622, 3262, 104},
    {347, 21, 376, 20},
    {197, 42, 189, 44},
    {184, 948, 3351, 53},
    {125, 462, 916, 64},
    {516, 1636, 1856, 455},
    {868, 1000, 2264, 384},
    {216, 868, 1655, 114},
    {947, 3295, 3546, 880},
    {641, 3365, 4343, 497},
    {290, 1938, 2443, 231},
    {720, 1236, 3049, 292},
    {176, 2865, 4025, 126},
    {628, 1218, 3845, 199},
    {2, 1345, 1920, 2},
    {655, 880, 1906, 303},
    {356, 711, 1403, 181},
    {645, 1217, 3408, 231},
    {808, 109, 825, 107},
    {840, 520, 3799, 115},
    {64, 2615, 4392, 39},
    {430, 117, 1048, 49},
    {948, 1551, 4218, 349},
    {306, 58, 1311, 14},
    {730, 1865, 2430, 561},
    {884, 2768, 3718, 659},
    {741, 2130, 3260, 485},
    {134, 6, 108, 8},
    {479, 7, 19, 177},
    {334, 886, 3167, 94},
    {844, 331, 442, 633},
    {886, 2961, 4506, 583},
    {522, 16, 84, 100},
    {346, 871, 1126, 268},
    {529, 65, 4617, 8},
    {601, 1444, 4945, 176},
    {129, 1304, 3198, 53},
    {985, 1777, 3600, 487},
    {694, 156, 2198, 50},
    {13, 215, 246, 12},
    {584, 768, 1243, 361},
    {760, 279, 4392, 49},
    {391, 1895, 3503, 212},
    {475, 1918, 2133, 428},
    {564, 110, 480, 130},
    {196, 655, 765, 168},
    {555, 409, 1076, 211},
    {745, 4075, 4444, 684},
    {707, 1322, 3929, 238},
    {24, 352, 2525, 4},
    {147, 4572, 4826, 140},
    {830, 250, 3097, 68},
    {554, 2144, 3142, 379},
    {782, 1879, 2323, 633},
    {376, 3616, 4336, 314},
    {897, 1040, 1279, 730},
    {413, 1081, 2101, 213},
    {533, 872, 1724, 270},
    {342, 2598, 2670, 333},
    {375, 2386, 4530, 198},
    {508, 1307, 1878, 354},
    {428, 2214, 3123, 304},
    {451, 388, 889, 197},
    {36, 257, 691, 14},
    {81, 2035, 2241, 74},
    {559, 975, 1558, 350},
    {222, 3893, 4329, 200},
    {862, 2227, 3040, 632},
    {504, 3390, 3847, 445},
    {155, 160, 735, 34},
    {303, 256, 4676, 17},
    {311, 1538, 2346, 204},
    {87, 197, 2022, 9},
    {361, 217, 659, 119},
    {728, 1664, 1913, 634},
    {759, 73, 532, 105},
    {149, 1394, 1570, 133},
    {358, 304, 360, 303},
    {284, 28, 34, 234},
    {93, 290, 500, 54},
    {297, 3778, 4972, 226},
    {247, 541, 4896, 28},
    {223, 1840, 4394, 94},
    {6, 373, 3817, 1},
    {614, 1257, 1378, 561},
    {753, 348, 378, 694},
    {945, 4560, 4839, 891},
    {533, 1585, 3105, 273},
    {289, 2870, 2925, 284},
    {70, 2746, 2940, 66},
    {953, 1345, 3041, 422},
    {738, 1900, 3590, 391},
    {187, 298, 1033, 54},
    {433, 1912, 2065, 401},
    {895, 437, 3047, 129},
    {784, 2900, 3234, 704},
    {980, 3335, 3755, 871},
    {976, 512, 1453, 344},
    {871, 905, 1857, 425},
    {95, 397, 1277, 30},
    {507, 157, 4219, 19},
    {118, 1782, 3252, 65},
    {138, 1307, 2412, 75},
    {836, 1039, 3370, 258},
    {332, 151, 705, 72},
    {856, 3002, 3650, 705},
    {627, 2840, 4690, 380},
    {854, 1153, 4020, 245},
    {743, 701, 3172, 165},
    {705, 1652, 3685, 317},
    {637, 1658, 4603, 230},
    {36, 61, 636, 4},
    {536, 498, 3566, 75},
    {429, 207, 3424, 26},
    {292, 22, 4400, 2},
    {186, 83, 374, 42},
    {396, 181, 3742, 20},
    {652, 2380, 3450, 450},
    {25, 1786, 2369, 19},
    {454, 212, 4511, 22},
    {25, 875, 1297, 17},
    {259, 1439, 1900, 197},
    {514, 317, 1073, 152},
    {830, 2346, 3432, 568},
    {579, 687, 2497, 160},
    {546, 2937, 3044, 527},
    {682, 138, 276, 341},
    {343, 400, 3130, 44},
    {574, 553, 773, 411},
    {631, 143, 4400, 21},
    {202, 994, 3070, 66},
    {74, 69, 100, 52},
    {758, 28, 158, 135},
    {884, 2053, 2636, 689},
    {882, 3948, 4816, 724},
    {177, 3685, 4757, 138},
    {418, 2158, 2401, 376},
    {946, 586, 1124, 494},
    {445, 921, 1675, 245},
    {52, 197, 1650, 7},
    {148, 2762, 3786, 108},
    {66, 373, 1127, 22},
    {652, 89, 1111, 53},
    {691, 859, 1285, 462},
    {210, 2181, 3925, 117},
    {20, 4141, 4447, 19},
    {83, 2970, 4039, 62},
    {439, 120, 2321, 23},
    {135, 2391, 4596, 71},
    {239, 3405, 4741, 172},
    {457, 1975, 3656, 247},
    {963, 1586, 3107, 492},
    {721, 4297, 4961, 625},
    {72, 541, 637, 62},
    {597, 627, 2572, 146},
    {963, 693, 3748, 179},
    {789, 3545, 4737, 591},
    {897, 414, 1152, 323},
    {828, 972, 2342, 344},
    {319, 1377, 3612, 122},
    {893, 922, 4175, 198},
    {772, 3897, 4498, 669},
    {840, 2237, 3844, 489},
    {378, 597, 1590, 142},
    {927, 1364, 4367, 290},
    {555, 176, 735, 133},
    {53, 255, 1965, 7},
    {705, 350, 867, 285},
    {289, 1795, 3809, 137},
    {738, 1285, 2430, 391},
    {591, 1691, 3424, 292},
    {438, 818, 1569, 229},
    {61, 1647, 1841, 55},
    {830, 2759, 3069, 747},
    {662, 1079, 2209, 324},
    {884, 12, 2534, 5},
    {206, 2519, 2748, 189},
    {305, 528, 728, 222},
    {543, 1616, 2306, 381},
    {782, 69, 210, 257},
    {297, 4395, 4794, 273},
    {408, 225, 611, 151},
    {915, 1795, 2576, 638},
    {745, 1202, 1332, 673},
    {142, 540, 1964, 40},
    {547, 742, 2235, 182},
    {319, 135, 237, 182},
    {624, 61, 72, 529},
    {68, 2990, 4272, 48},
    {825, 278, 1535, 150},
    {630, 329, 3186, 66},
    {820, 1157, 2610, 364},
    {670, 306, 2335, 88},
    {923, 2199, 2576, 788},
    {362, 734, 1418, 188},
    {133, 203, 949, 29},
    {230, 1354, 1355, 230},
    {766, 853, 885, 739},
    {810, 591, 1672, 287},
    {692, 145, 597, 169},
    {986, 827, 4684, 175},
    {793, 223, 1390, 128},
    {655, 1442, 4929, 192},
    {448, 1729, 2362, 328},
    {952, 232, 993, 223},
    {874, 2474, 3889, 556},
    {626, 310, 4300, 46},
    {754, 409, 4982, 62},
    {662, 1277, 3674, 231},
    {577, 508, 1465, 201},
    {237, 871, 1862, 111},
    {680, 732, 3341, 149},
    {357, 2197, 2703, 291},
    {736, 4202, 4231, 731},
    {528, 1748, 3854, 240},
    {367, 2873, 3252, 325},
    {502, 274, 1571, 88},
    {31, 510, 841, 19},
    {537, 391, 1092, 193},
    {23, 1816, 2098, 20},
    {533, 1740, 4710, 197},
    {543, 2219, 4330, 279},
    {554, 378, 2786, 76},
    {776, 394, 2547, 121},
    {63, 111, 4578, 2},
    {511, 2406, 4020, 306},
    {270, 1503, 3545, 115},
    {49, 218, 233, 46},
    {613, 471, 1729, 167},
    {122, 509, 2284, 28},
    {249, 250, 669, 94},
    {414, 1676, 1952, 356},
    {584, 154, 162, 556},
    {633, 230, 554, 263},
    {331, 2067, 2705, 253},
    {418, 3197, 3348, 400},
    {475, 1947, 3004, 308},
    {164, 596, 4139, 24},
    {219, 1490, 2290, 143},
    {119, 1964, 4299, 55},
    {685, 794, 1668, 327},
    {961, 2114, 4618, 440},
    {631, 819, 4960, 105},
    {412, 1379, 2083, 273},
    {395, 3512, 4999, 278},
    {835, 731, 1190, 513},
    {910, 2637, 2836, 847},
    {71, 1243, 3677, 25},
    {124, 1214, 1396, 108},
    {489, 2044, 4962, 202},
    {788, 629, 702, 707},
    {207, 304, 3954, 16},
    {491, 3222, 3880, 408},
    {591, 301, 572, 311},
    {832, 2348, 3074, 636},
    {985, 1, 305, 4},
    {380, 207, 580, 136},
    {162, 751, 3733, 33},
    {393, 2080, 2813, 291},
    {144, 860, 2419, 52},
    {742, 267, 350, 567},
    {703, 546, 793, 485},
    {624, 188, 471, 250},
    {565, 1427, 4596, 176},
    {168, 704, 738, 161},
    {10, 31, 38, 9},
    {359, 457, 1540, 107},
    {987, 296, 1945, 151},
    {671, 3129, 4918, 427},
    {661, 1718, 4532, 251},
    {724, 1497, 2059, 527},
    {455, 221, 3363, 30},
    {87, 3403, 3829, 78},
    {185, 1806, 4871, 69},
    {261, 346, 470, 193},
    {553, 546, 3599, 84},
    {668, 1747, 2861, 408},
    {39, 921, 1690, 22},
    {671, 3744, 3824, 657},
    {164, 420, 1191, 58},
    {286, 1005, 2668, 108},
    {478, 318, 546, 279},
    {125, 1632, 2976, 69},
    {649, 190, 639, 193},
    {436, 3045, 4359, 305},
    {612, 1178, 2333, 310},
    {944, 101, 1124, 85},
    {45, 566, 880, 29},
    {935, 911, 2132, 400},
    {889, 1644, 4102, 357},
    {717, 19, 96, 142},
    {765, 3681, 4310, 654},
    {758, 1902, 2107, 685},
    {354, 147, 4014, 13},
    {609, 304, 4984, 38},
    {321, 515, 539, 307},
    {360, 85, 2254, 14},
    {665, 1081, 4050, 178},
    {566, 517, 2132, 138},
    {240, 24, 952, 7},
    {371, 1383, 4631, 111},
    {888, 2007, 2031, 878},
    {45, 3391, 4406, 35},
    {854, 1480, 4007, 316},
    {389, 244, 1651, 58},
    {597, 176, 4781, 22},
    {621, 2482, 2662, 580},
    {297, 389, 3421, 34},
    {698, 728, 2452, 208},
    {442, 2850, 2891, 436},
    {302, 783, 1610, 147},
    {652, 1703, 1724, 645},
    {437, 2928, 3867, 331},
    {253, 218, 3674, 16},
    {247, 2355, 4658, 125},
    {372, 2601, 4412, 220},
    {896, 974, 3352, 261},
    {698, 97, 696, 98},
    {63, 3663, 4647, 50},
    {293, 3477, 4030, 253},
    {149, 987, 1271, 116},
    {491, 6, 97, 31},
    {215, 72, 90, 172},
    {14, 154, 618, 4},
    {382, 1736, 1913, 347},
    {284, 2739, 3523, 221},
    {877, 1610, 3794, 373},
    {962, 1979, 3658, 521},
    {869, 922, 1138, 705},
    {711, 500, 1627, 219},
    {91, 13, 24, 50},
    {84, 1199, 1554, 65},
    {462, 199, 3024, 31},
    {403, 121, 675, 73},
    {653, 549, 3262, 110},
    {895, 809, 1877, 386},
    {865, 905, 4365, 180},
    {726, 1919, 3692, 378},
    {517, 603, 929, 336},
    {470, 1335, 2275, 276},
    {771, 367, 501, 565},
    {278, 941, 1087, 241},
    {997, 606, 1262, 479},
    {483, 1165, 1557, 362},
    {511, 674, 4916, 71},
    {717, 1630, 2742, 427},
    {890, 2096, 3359, 556},
    {797, 1353, 4725, 229},
    {901, 1466, 2669, 495},
    {650, 366, 940, 254},
    {506, 396, 1118, 180},
    {790, 1761, 2426, 574},
    {800, 2770, 3396, 653},
    {782, 1264, 2635, 376},
    {390, 66, 404, 64},
    {17, 73, 4531, 1},
    {435, 389, 493, 344},
    {191, 1472, 2710, 104},
    {733, 152, 1498, 75},
    {955, 2585, 3212, 769},
    {117, 3094, 4010, 91},
    {653, 523, 3163, 108},
    {501, 310, 2973, 53},
    {563, 1741, 3492, 281},
    {32, 345, 834, 14},
    {421, 2420, 3645, 280},
    {509, 1635, 2275, 366},
    {950, 50, 109, 436},
    {560, 2003, 3296, 341},
    {463, 937, 1437, 302},
    {457, 116, 896, 60},
    {902, 878, 3045, 261},
    {423, 1940, 3421, 240},
    {252, 460, 1697, 69},
    {865, 41, 4895, 8},
    {111, 527, 3353, 18},
    {343, 100, 3715, 10},
    {943, 505, 590, 808},
    {342, 4688, 4947, 325},
    {226, 244, 2323, 24},
    {455, 933, 2170, 196},
    {616, 2580, 4075, 391},
    {897, 2388, 4048, 530},
    {869, 2925, 3000, 848},
    {49, 557, 584, 47},
    {941, 47, 610, 73},
    {795, 648, 3189, 162},
    {203, 147, 203, 147},
    {864, 2280, 2938, 671},
    {393, 2322, 2747, 333},
    {983, 532, 2102, 249},
    {968, 497, 555, 867},
    {328, 970, 1496, 213},
    {299, 86, 568, 46},
    {511, 629, 3477, 93},
    {67, 1592, 4183, 26},
    {553, 61, 2785, 13},
    {30, 310, 536, 18},
    {797, 1250, 3226, 309},
    {249, 188, 3481, 14},
    {768, 934, 1074, 668},
    {224, 902, 4728, 43},
    {424, 356, 936, 162},
    {761, 2957, 4489, 502},
    {950, 394, 2008, 187},
    {641, 3008, 4119, 469},
    {322, 405, 744, 176},
    {55, 2283, 2513, 50},
    {988, 749, 1951, 380},
    {187, 813, 1161, 131},
    {524, 3417, 4179, 429},
    {69, 4284, 4514, 66},
    {939, 325, 504, 606},
    {512, 72, 1982, 19},
    {873, 4227, 4601, 803},
    {429, 1601, 2073, 332},
    {631, 2442, 3634, 425},
    {310, 68, 525, 41},
    {233, 1483, 1552, 223},
    {742, 3655, 4233, 641},
    {314, 1968, 2043, 303},
    {948, 344, 4014, 82},
    {87, 1307, 1404, 81},
    {289, 12, 200, 18},
    {543, 1003, 3814, 143},
    {811, 1691, 2202, 623},
    {785, 89, 4425, 16},
    {893, 262, 3626, 65},
    {93, 300, 568, 50},
    {202, 974, 3544, 56},
    {972, 887, 926, 932},
    {833, 731, 773, 788},
    {423, 1096, 4269, 109},
    {753, 30, 949, 24},
    {783, 1019, 1715, 466},
    {455, 1407, 4841, 133},
    {908, 181, 4018, 41},
    {235, 382, 4206, 22},
    {659, 4135, 4567, 597},
    {708, 1064, 2513, 300},
    {773, 2915, 3390, 665},
    {643, 57, 1078, 34},
    {380, 1914, 2529, 288},
    {187, 1425, 1944, 138},
    {540, 814, 2436, 181},
    {441, 481, 606, 351},
    {693, 580, 965, 417},
    {335, 13, 149, 30},
    {602, 2217, 2221, 601},
    {411, 768, 1100, 287},
    {628, 612, 2130, 181},
    {727, 2820, 3810, 539},
    {352, 2574, 4227, 215},
    {191, 533, 2095, 49},
    {290, 2988, 3814, 228},
    {424, 1225, 3154, 165},
    {579, 425, 2202, 112},
    {811, 572, 1422, 327},
    {980, 2266, 2541, 874},
    {5, 1081, 2789, 2},
    {6, 1440, 2013, 5},
    {478, 3579, 3854, 444},
    {679, 735, 3187, 157},
    {152, 2453, 2453, 152},
    {561, 3435, 4214, 458},
    {237, 347, 380, 217},
    {284, 949, 2771, 98},
    {351, 711, 851, 294},
    {731, 203, 4332, 35},
    {624, 1236, 1638, 471},
    {385, 1357, 2736, 191},
    {271, 487, 644, 205},
    {509, 182, 219, 424},
    {15, 996, 2358, 7},
    {183, 186, 371, 92},
    {614, 754, 782, 593},
    {679, 2821, 3700, 518},
    {526, 1360, 2904, 247},
    {415, 1306, 4723, 115},
    {340, 604, 1536, 134},
    {622, 2113, 3323, 396},
    {220, 1830, 3546, 114},
    {689, 75, 1034, 50},
    {171, 1424, 4974, 49},
    {598, 554, 897, 370},
    {251, 2685, 2874, 235},
    {631, 116, 1511, 49},
    {817, 71, 349, 167},
    {812, 1710, 1945, 714},
    {964, 836, 1453, 555},
    {835, 47, 81, 485},
    {172, 727, 1855, 68},
    {889, 68, 798, 76},
    {835, 12, 14, 716},
    {20, 2062, 3184, 13},
    {294, 3, 7, 126},
    {422, 1053, 3923, 114},
    {160, 3119, 4259, 118},
    {591, 177, 535, 196},
};

inline constexpr std::array<std::uint8_t, 32> kMaster{0x00, 0x01, 0x02, 0x03, 0x04, 0x05, 0x06, 0x07, 0x08, 0x09, 0x0a, 0x0b, 0x0c, 0x0d, 0x0e, 0x0f, 0x10, 0x11, 0x12, 0x13, 0x14, 0x15, 0x16, 0x17, 0x18, 0x19, 0x1a, 0x1b, 0x1c, 0x1d, 0x1e, 0x1f};
inline constexpr std::array<std::uint8_t, 32> kDerived_7_3{0x78, 0x88, 0x14, 0x9a, 0x56, 0x5a, 0x4e, 0x9e, 0xc6, 0x34, 0x3a, 0x36, 0x11, 0x95, 0x5a, 0xe9, 0x7f, 0x77, 0x3e, 0xf7, 0xfb, 0x2a, 0x3b, 0x3e, 0x2e, 0x00, 0x3b, 0x5e, 0xa0, 0x72, 0xc7, 0xd5};
inline constexpr std::array<std::uint8_t, 49> kSealed_stampgate{0x4d, 0x1f, 0xcc, 0x3a, 0x79, 0xd0, 0xc2, 0x11, 0x51, 0x35, 0x8a, 0xb7, 0xd9, 0xe6, 0x79, 0x92, 0xda, 0x53, 0x0a, 0xd4, 0x0a, 0x9f, 0xbd, 0xf2, 0x55, 0x90, 0x89, 0x78, 0x43, 0x8e, 0xe6, 0x89, 0xf7, 0x4c, 0xb6, 0x61, 0x1f, 0x0c, 0x6e, 0xfa, 0xf8, 0x91, 0xec, 0xb7, 0x54, 0x87, 0x6a, 0xfc, 0x67};
inline constexpr std::array<std::uint8_t, 32> kMasterFromSeed_1_1{0x7a, 0x60, 0xba, 0x53, 0x45, 0x29, 0x9e, 0xa2, 0x10, 0x81, 0x4d, 0xd4, 0xd8, 0x55, 0xb5, 0x01, 0x3a, 0x4e, 0x87, 0x07, 0xd7, 0x92, 0x01, 0x48, 0xfb, 0x76, 0xdc, 0x54, 0xd8, 0x62, 0xdc, 0x27};

inline constexpr std::uint64_t kCapacity_1200_12 = 100;
inline constexpr std::uint64_t kFloodT_50_50_4_1 = 400;
inline constexpr std::uint64_t kShare_I4_N100 = 25;
inline constexpr std::uint64_t kSaved_1000_5_1 = 4000;
inline constexpr double kChecksumPassRate = 1.52587890625e-05;

}  // namespace oracle
