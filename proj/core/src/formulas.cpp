#include "supercong/formulas.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>

#include "supercong/difference.hpp"
#include "supercong/oracles.hpp"

namespace supercong {

namespace {

// Six-term ladder, (p-1)! mod p^6.
const std::vector<OmegaForm> kOmega1 = {
    {"-5 B1 + 10 B2 - 10 B3 + 5 B4 - B5", 5},
    {"-5/2 B1^2 + 15/2 B2^2 + 5/2 B3^2 + B1 B4 - 9 B2 B3", 4},
    {"-1/2 B1 B2^2 - B1^2 (5/3 B1 - 5/2 B2 + 1/2 B3) - B1_2 + B2_2 - 1/3 B3_2", 3},
    {"-5/24 B1^4 + 1/6 B1^3 B2 - 2/3 B1 B1_2 + 1/3 B2 B2_2", 2},
    {"-1/120 B1^5 - 1/6 B1^2 B1_2 - 1/5 B1_4", 1},
};

// Seven-term ladder, (p-1)! mod p^7.
const std::vector<OmegaForm> kOmega2 = {
    {"-6 B1 + 15 B2 - 20 B3 + 15 B4 - 6 B5 + B6", 6},
    {"B1 (-13/2 B1 + 15 B2 - 9 B3 + 2 B4) + B2 (-7/2 B2 + 3 B4 - B5) - 1/2 B3^2", 5},
    {"B1^2 (-10/3 B1 + 15/2 B2 - 3 B3 + 1/2 B4) + B2^2 (-3 B1 + 1/6 B2) + B1 B2 B3"
     " - 4/3 B1_2 + 2 B2_2 - 4/3 B3_2 + 1/3 B4_2",
     4},
    {"B1^3 (-5/8 B1 + B2 - 1/6 B3) - 1/4 B1^2 B2^2 - B1 B1_2 + B2 B2_2 - 1/3 B3 B3_2", 3},
    {"-1/20 B1^5 + 1/24 B1^4 B2 - 1/3 B1 B2 B1_2 - 1/2 B1^2 B2_2 + 2/3 B1 B2 B2_2"
     " - 2/5 B1_4 + 1/5 B2_4",
     2},
    {"-1/720 B1^6 - 1/18 B1^3 B1_2 - 1/18 B1_2^2 - 1/5 B1 B1_4", 1},
};

struct PowerSumForm {
  int n;
  int level;
  const char* text;
};

// Congruences for Q̃_n at levels 5 and 6.
const std::vector<PowerSumForm> kPowerSumForms = {
    {1, 6, "(p-1) B1 - p^2 B1_2 + 11/6 p^3 B1_2 - p^4 (B1_2 + B1_4) + p^5 (1/6 B1_2 + 137/60 B1_4)"},
    {1, 5, "(p-1) B1 - p^2 B1_2 + 11/6 p^3 B1_2 - p^4 (B1_2 + B1_4)"},
    {2, 6,
     "(p-1) (B2 - B1) + p^2 (B1_2 - 2 B2_2) + p^3 (-11/6 B1_2 + 13/3 B2_2)"
     " + p^4 (B1_2 - 3 B2_2 + B1_4 - 3 B2_4) + p^5 (1/2 B1_2 + 77/12 B1_4)"},
    {2, 5,
     "(p-1) (B2 - B1) + p^2 (B1_2 - 2 B2_2) + p^3 (-11/6 B1_2 + 13/3 B2_2) - p^4 (2 B1_2 + 2 B1_4)"},
    {3, 6,
     "(p-1) (B3 - 2 B2 + B1) + p^2 (-B1_2 + 4 B2_2 - 10/3 B3_2)"
     " + p^3 (11/6 B1_2 - 26/3 B2_2 + 47/6 B3_2) + p^4 (5 B1_2 - 6 B2_2 + 6 B1_4 - 8 B2_4)"
     " + p^5 (1/3 B1_2 + 47/6 B1_4)"},
    {3, 5,
     "(p-1) (B3 - 2 B2 + B1) + p^2 (-B1_2 + 4 B2_2 - 10/3 B3_2) + p^3 (-6 B1_2 + 7 B2_2)"
     " - p^4 (B1_2 + 2 B1_4)"},
    {4, 6,
     "(p-1) (B4 - 3 B3 + 3 B2 - B1) + p^2 (B1_2 - 6 B2_2 + 10 B3_2 - 5 B4_2)"
     " + p^3 (21/2 B1_2 - 24 B2_2 + 27/2 B3_2) + p^4 (3 B1_2 - 3 B2_2 + 8 B1_4 - 9 B2_4)"
     " + 9/2 p^5 B1_4"},
    {4, 5,
     "(p-1) (B4 - 3 B3 + 3 B2 - B1) + p^2 (-4 B1_2 + 9 B2_2 - 5 B3_2) + p^3 (-3 B1_2 + 3 B2_2)"
     " - p^4 B1_4"},
    {5, 6,
     "(p-1) (B5 - 4 B4 + 6 B3 - 4 B2 + B1) + p^2 (6 B1_2 - 20 B2_2 + 22 B3_2 - 8 B4_2)"
     " + p^3 (6 B1_2 - 12 B2_2 + 6 B3_2) + p^4 (23/5 B1_4 - 24/5 B2_4) + p^5 B1_4"},
    {5, 5, "-(B5 - 4 B4 + 6 B3 - 4 B2 + B1) + p^2 (-2 B1_2 + 4 B2_2 - 2 B3_2) - 1/5 p^4 B1_4"},
    {6, 6,
     "-(B6 - 5 B5 + 10 B4 - 10 B3 + 5 B2 - B1)"
     " + p^2 (10/3 B1_2 - 10 B2_2 + 10 B3_2 - 10/3 B4_2) + p^4 (B1_4 - B2_4)"},
};

// The reduced n = 5 form with the unreduced leading factor.
constexpr const char* kPowerSumAltN5 =
    "(p-1) (B5 - 4 B4 + 6 B3 - 4 B2 + B1) + p^2 (-2 B1_2 + 4 B2_2 - 2 B3_2) - 1/5 p^4 B1_4";

// The Q̃ restatements, transcribed independently of kPowerSumForms.
const std::vector<PowerSumForm> kRestatedForms = {
    {1, 5, "(p-1) B1 - p^2 B1_2 + 11/6 p^3 B1_2 - p^4 (B1_2 + B1_4)"},
    {2, 5,
     "(p-1) (B2 - B1) + p^2 (B1_2 - 2 B2_2) + p^3 (-11/6 B1_2 + 13/3 B2_2) - p^4 (2 B1_2 + 2 B1_4)"},
    {3, 5,
     "(p-1) (B3 - 2 B2 + B1) + p^2 (-B1_2 + 4 B2_2 - 10/3 B3_2) + p^3 (-6 B1_2 + 7 B2_2)"
     " - p^4 (B1_2 + 2 B1_4)"},
    {4, 5,
     "(p-1) (B4 - 3 B3 + 3 B2 - B1) + p^2 (-4 B1_2 + 9 B2_2 - 5 B3_2) + p^3 (-3 B1_2 + 3 B2_2)"
     " - p^4 B1_4"},
    {5, 5, "-(B5 - 4 B4 + 6 B3 - 4 B2 + B1) + p^2 (-2 B1_2 + 4 B2_2 - 2 B3_2) - 1/5 p^4 B1_4"},
    {1, 6, "(p-1) B1 - p^2 B1_2 + 11/6 p^3 B1_2 - p^4 (B1_2 + B1_4) + p^5 (1/6 B1_2 + 137/60 B1_4)"},
    {2, 6,
     "(p-1) (B2 - B1) + p^2 (B1_2 - 2 B2_2) + p^3 (-11/6 B1_2 + 13/3 B2_2)"
     " + p^4 (B1_2 - 3 B2_2 + B1_4 - 3 B2_4) + p^5 (1/2 B1_2 + 77/12 B1_4)"},
    {3, 6,
     "(p-1) (B3 - 2 B2 + B1) + p^2 (-B1_2 + 4 B2_2 - 10/3 B3_2)"
     " + p^3 (11/6 B1_2 - 26/3 B2_2 + 47/6 B3_2) + p^4 (5 B1_2 - 6 B2_2 + 6 B1_4 - 8 B2_4)"
     " + p^5 (1/3 B1_2 + 47/6 B1_4)"},
    {4, 6,
     "(p-1) (B4 - 3 B3 + 3 B2 - B1) + p^2 (B1_2 - 6 B2_2 + 10 B3_2 - 5 B4_2)"
     " + p^3 (21/2 B1_2 - 24 B2_2 + 27/2 B3_2) + p^4 (3 B1_2 - 3 B2_2 + 8 B1_4 - 9 B2_4)"
     " + 9/2 p^5 B1_4"},
    {5, 6,
     "(p-1) (B5 - 4 B4 + 6 B3 - 4 B2 + B1) + p^2 (6 B1_2 - 20 B2_2 + 22 B3_2 - 8 B4_2)"
     " + p^3 (6 B1_2 - 12 B2_2 + 6 B3_2) + p^4 (23/5 B1_4 - 24/5 B2_4) + p^5 B1_4"},
    {6, 6,
     "-(B6 - 5 B5 + 10 B4 - 10 B3 + 5 B2 - B1)"
     " + p^2 (10/3 B1_2 - 10 B2_2 + 10 B3_2 - 10/3 B4_2) + p^4 (B1_4 - B2_4)"},
};

const std::array<const char*, 6> kPsi = {
    "x1",
    "2 x1 - x1^2 - x2",
    "6 x1 - 6 x1^2 + x1^3 + 3 x1 x2 - 3 x2 + 2 x3",
    "24 x1 - 36 x1^2 + 12 x1^3 - x1^4 - 6 x1^2 x2 + 24 x1 x2 - 8 x1 x3 - 12 x2 - 3 x2^2 + 8 x3 - 6 x4",
    "120 x1 - 240 x1^2 + 120 x1^3 - 20 x1^4 + x1^5 + 10 x1^3 x2 - 90 x1^2 x2 + 20 x1^2 x3 + 180 x1 x2"
    " + 15 x1 x2^2 - 80 x1 x3 + 30 x1 x4 - 60 x2 - 30 x2^2 + 20 x2 x3 + 40 x3 - 30 x4 + 24 x5",
    "720 x1 - 1800 x1^2 + 1200 x1^3 - 300 x1^4 + 30 x1^5 - x1^6 - 15 x1^4 x2 + 240 x1^3 x2 - 40 x1^3 x3"
    " - 1080 x1^2 x2 - 45 x1^2 x2^2 + 360 x1^2 x3 - 90 x1^2 x4 + 1440 x1 x2 + 270 x1 x2^2 - 120 x1 x2 x3"
    " - 720 x1 x3 + 360 x1 x4 - 144 x1 x5 - 360 x2 - 270 x2^2 - 15 x2^3 + 240 x2 x3 - 90 x2 x4"
    " + 240 x3 - 40 x3^2 - 180 x4 + 144 x5 - 120 x6",
};

const std::array<const char*, 6> kPtilde = {
    "x1",
    "p (x1 - 1/2 x1^2) - x2",
    "p^2 (x1 - x1^2 + 1/6 x1^3) + p (x1 x2 - x2) + x3",
    "p^3 (x1 - 3/2 x1^2 + 1/2 x1^3 - 1/24 x1^4) + p^2 (2 x1 x2 - 1/2 x1^2 x2 - x2)"
    " + p (-1/2 x2^2 - x1 x3 + x3) - x4",
    "p^4 (x1 - 2 x1^2 + x1^3 - 1/6 x1^4 + 1/120 x1^5) + p^3 (3 x1 x2 - 3/2 x1^2 x2 + 1/6 x1^3 x2 - x2)"
    " + p^2 (1/2 x1 x2^2 - x2^2 - 2 x1 x3 + 1/2 x1^2 x3 + x3) + p (x2 x3 + x1 x4 - x4) + x5",
    "p^5 (x1 - 5/2 x1^2 + 5/3 x1^3 - 5/12 x1^4 + 1/24 x1^5 - 1/720 x1^6)"
    " + p^4 (4 x1 x2 - 3 x1^2 x2 + 2/3 x1^3 x2 - 1/24 x1^4 x2 - x2)"
    " + p^3 (3/2 x1 x2^2 - 1/4 x1^2 x2^2 - 3/2 x2^2 - 3 x1 x3 + 3/2 x1^2 x3 - 1/6 x1^3 x3 + x3)"
    " + p^2 (-x1 x2 x3 + 2 x2 x3 - 1/6 x2^3 + 2 x1 x4 - 1/2 x1^2 x4 - x4)"
    " + p (-1/2 x3^2 - x2 x4 - x1 x5 + x5) - x6",
};

// Intermediate forms from the ω derivations; each pair must agree at the
// stated precision for every prime above the bound.
const std::vector<Congruence> kZero = {
    // Derivation of the mod p^6 ladder, p >= 7.
    {"t1.w2.square", "5/2 (B1 - 2 B2 + B3)^2", "0", 4, 7},
    {"t1.w2.forms", "B1 (-5 B1 + 10 B2 - 5 B3 + B4) + B2 (-5/2 B2 + B3)",
     "-5/2 B1^2 + 15/2 B2^2 + 5/2 B3^2 + B1 B4 - 9 B2 B3", 4, 7},
    {"t1.w31.step", "B1 (3 B1 - 9 B2 + 5 B3 - B4)", "B1 (2 B1 - 6 B2 + 2 B3)", 3, 7},
    {"t1.w31.zero", "-2 (B1 - B2) (B1 - 2 B2 + B3)", "0", 3, 7},
    {"t1.w31.forms",
     "B1 (3 B1 - 9 B2 + 5 B3 - B4) + B1^2 (-5/3 B1 + 5/2 B2 - 1/2 B3) + B2 (-1/2 B1 B2 + 4 B2 - 2 B3)",
     "-1/2 B1 B2^2 - B1^2 (5/3 B1 - 5/2 B2 + 1/2 B3)", 3, 7},
    {"t1.w41.first", "3/2 B1^2 - 2 B1 B2 - 1/2 B2^2 + B2 B3 + B1 (5/2 B1^2 - 5 B1 B2 + B1 B3 + 3/2 B2^2)", "0", 2,
     7},
    {"t1.w41.second", "(3/2 B1^2 - 3 B1 B2 + 3/2 B2^2) (1 + B1)", "0", 2, 7},
    {"t1.w41.third", "3/2 (B1 - B2)^2 (1 + B1)", "0", 2, 7},
    {"t1.w42.forms", "B1_2 (-10/3 B1 + 20/3 B2 - 5 B3 + B4) + B2_2 (5/3 B1 - 10/3 B2 + 2 B3)",
     "-1/3 B1_2 (B1 + B2) - 1/3 B2_2 (B1 - 2 B2)", 2, 7},
    {"t1.w42.zero", "-1/3 (B1_2 - B2_2) (B1 - B2)", "0", 2, 7},
    {"t1.w42.final", "-1/3 B1_2 (B1 + B2) - 1/3 B2_2 (B1 - 2 B2)", "-2/3 B1 B1_2 + 1/3 B2 B2_2", 2, 7},
    // Derivation of the mod p^7 ladder, p >= 11.
    {"t2.w2.forms",
     "B1 (-15/2 B1 + 20 B2 - 15 B3 + 6 B4 - B5) + B2 (-15/2 B2 + 6 B3 - B4) - 1/2 B3^2",
     "B1 (-13/2 B1 + 15 B2 - 9 B3 + 2 B4) + B2 (-7/2 B2 + 3 B4 - B5) - 1/2 B3^2", 5, 11},
    {"t2.w2.zero", "(B1 - B2) (B1 - 4 B2 + 6 B3 - 4 B4 + B5)", "0", 5, 11},
    {"t2.w31.step", "B1 (4 B1 - 16 B2 + 14 B3 - 6 B4 + B5)", "B1 (3 B1 - 12 B2 + 8 B3 - 2 B4)", 4, 11},
    {"t2.w31.zero", "-(B1 - 2 B2 + B3)^2 - 2 (B1 - B2) (B1 - 3 B2 + 3 B3 - B4)", "0", 4, 11},
    {"t2.w31.vanish", "B1 (4 B1 - 16 B2 + 14 B3 - 6 B4 + B5) + B2 (10 B2 - 10 B3 + 2 B4) + B3^2", "0", 4, 11},
    {"t2.w41.forms",
     "B1 (5/2 B1 - 6 B2 + 2 B3) + B1^2 (9/2 B1 - 27/2 B2 + 6 B3 - B4)"
     " + B2 (B2 + 2 B3 - B4 - 3 B1 B3) + B2^2 (15/2 B1 - 1/2 B2) - 1/2 B3^2",
     "B1 (5/2 B1 - 7 B2 + 2 B3) + B1^2 (7/2 B1 - 21/2 B2 + 3 B3)"
     " + B2 (4 B2 - B3 - 3 B1 B3) + B2^2 (15/2 B1 - 1/2 B2) - 1/2 B3^2",
     3, 11},
    {"t2.w41.zero", "1/2 (B1 - 2 B2 + B3)^2 - 1/2 (B1 - B2)^3 - 3 (B1 - B2) (B1 - 2 B2 + B3) (1 + B1)", "0", 3,
     11},
    {"t2.w41.vanish",
     "B1 (5/2 B1 - 6 B2 + 2 B3) + B1^2 (9/2 B1 - 27/2 B2 + 6 B3 - B4)"
     " + B2 (B2 + 2 B3 - B4 - 3 B1 B3) + B2^2 (15/2 B1 - 1/2 B2) - 1/2 B3^2",
     "0", 3, 11},
    {"t2.w43.forms",
     "B1_2 (-6 B1 + 15 B2 - 15 B3 + 6 B4 - B5) + B2_2 (6 B1 - 15 B2 + 12 B3 - 2 B4)"
     " + B3_2 (-2 B1 + 5 B2 - 10/3 B3)",
     "B1_2 (-3 B1 + 5 B2 - 3 B3) + B2_2 (4 B1 - 9 B2 + 6 B3) + B3_2 (-2 B1 + 5 B2 - 10/3 B3)", 3, 11},
    {"t2.w43.zero", "(3 (B1 - 2 B2 + B3) - (B1 - B2)) (B1_2 - 2 B2_2 + B3_2)", "0", 3, 11},
    {"t2.w43.final", "B1_2 (-3 B1 + 5 B2 - 3 B3) + B2_2 (4 B1 - 9 B2 + 6 B3) + B3_2 (-2 B1 + 5 B2 - 10/3 B3)",
     "-B1 B1_2 + B2 B2_2 - 1/3 B3 B3_2", 3, 11},
    {"t2.w51.forms",
     "B1 (B1 - 9/2 B2^2 + B1 B2^2) + B2 (-2 B2 + 1/2 B2^2) + B1^2 (1/2 B1 + 3 B2 - 3 B3 + 1/2 B4)"
     " + B1^3 (3/2 B1 - 3 B2 + 1/2 B3) + B3 (-B1 + 2 B2 + 3 B1 B2)",
     "B1 (B1 - 9/2 B2^2 + B1 B2^2) + B2 (-2 B2 + 1/2 B2^2) + B1^2 (5/2 B1 - 3/2 B2)"
     " + B1^3 (B1 - 2 B2) + (-B1 + 2 B2) (-B1 + 2 B2 + 3 B1 B2)",
     2, 11},
    {"t2.w51.factored",
     "B1 (B1 - 9/2 B2^2 + B1 B2^2) + B2 (-2 B2 + 1/2 B2^2) + B1^2 (5/2 B1 - 3/2 B2)"
     " + B1^3 (B1 - 2 B2) + (-B1 + 2 B2) (-B1 + 2 B2 + 3 B1 B2)",
     "1/2 (B1 - B2)^2 (4 + 5 B1 + 2 B1^2 + B2)", 2, 11},
    {"t2.w51.vanish", "1/2 (B1 - B2)^2 (4 + 5 B1 + 2 B1^2 + B2)", "0", 2, 11},
    {"t2.w52.forms",
     "B1_2 (17/6 B1 - 12 B2 + 56/3 B3 - 11 B4 + 11/6 B5) + B2_2 (-5 B1 + 49/3 B2 - 55/3 B3 + 19/3 B4)"
     " + B3_2 (2 B1 - 5 B2 + 10/3 B3)",
     "B1_2 (2/3 B1 - 1/3 B2) + B2_2 (2/3 B1 - 4/3 B2) + (-B1_2 + 2 B2_2) (-4/3 B1 + 5/3 B2)", 2, 11},
    {"t2.w52.factored",
     "B1_2 (2/3 B1 - 1/3 B2) + B2_2 (2/3 B1 - 4/3 B2) + (-B1_2 + 2 B2_2) (-4/3 B1 + 5/3 B2)",
     "2 (B1_2 - B2_2) (B1 - B2)", 2, 11},
    {"t2.w52.vanish", "2 (B1_2 - B2_2) (B1 - B2)", "0", 2, 11},
    {"t2.w53.forms",
     "B1_2 (-5 B1^2 + 35/3 B1 B2 - 6 B1 B3 + B1 B4 - 3 B2^2 + B2 B3)"
     " + B2_2 (5/2 B1^2 - 16/3 B1 B2 + 2 B1 B3 + B2^2)",
     "B1_2 (-B1^2 + 5/3 B1 B2 - B2^2) + B2_2 (1/2 B1^2 - 4/3 B1 B2 + B2^2)", 2, 11},
    {"t2.w53.final", "B1_2 (-B1^2 + 5/3 B1 B2 - B2^2) + B2_2 (1/2 B1^2 - 4/3 B1 B2 + B2^2)",
     "-1/3 B1 B2 B1_2 - 1/2 B1^2 B2_2 + 2/3 B1 B2 B2_2", 2, 11},
    {"t2.w53.zero", "(B1_2 - B2_2) (B1 - B2)^2", "0", 2, 11},
};

const std::vector<std::string> kOmegaModP = {
    "-B1",
    "-1/2 B1^2",
    "-1/6 B1^3 - 1/3 B1_2",
    "-1/24 B1^4 - 1/3 B1 B1_2",
    "-1/120 B1^5 - 1/6 B1^2 B1_2 - 1/5 B1_4",
    "-1/720 B1^6 - 1/18 B1^3 B1_2 - 1/5 B1 B1_4 - 1/18 B1_2^2",
};

const std::vector<Congruence> kOmega5Reduction = {
    {"row1", "-1/20 B1^5 + 1/24 B1^4 B2", "-1/120 B1^5", 1, 7},
    {"row2", "-1/3 B1 B2 B1_2 - 1/2 B1^2 B2_2 + 2/3 B1 B2 B2_2", "-1/6 B1^2 B1_2", 1, 7},
    {"row3", "-2/5 B1_4 + 1/5 B2_4", "-1/5 B1_4", 1, 7},
};

// Parsed forms are cached by their text; parsing is deterministic so a
// process-wide table built on first use is enough.
const MultiPoly& parsed(const std::string& text) {
  static std::mutex mutex;
  static std::map<std::string, MultiPoly> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(text);
  if (it == cache.end()) it = cache.emplace(text, MultiPoly::parse(text)).first;
  return it->second;
}

const char* find_form(const std::vector<PowerSumForm>& table, int n, int level) {
  for (const auto& f : table) {
    if (f.n == n && f.level == level) return f.text;
  }
  throw std::out_of_range("no power-sum congruence for n = " + std::to_string(n) + " mod p^" +
                          std::to_string(level));
}

void require_level(int n, int level, u64 p) {
  if (level != 5 && level != 6) throw std::out_of_range("level must be 5 or 6");
  if (n < 1 || n > level) throw std::out_of_range("n out of range for level " + std::to_string(level));
  const u64 bound = level == 5 ? 7 : 11;
  if (p < bound) {
    throw NotPrimeError("mod p^" + std::to_string(level) + " forms need p >= " + std::to_string(bound));
  }
}

OmegaVector make_omegas(const DividedBernoulliSet& set, const std::vector<OmegaForm>& forms, u64 bound) {
  const u64 p = set.prime();
  if (p < bound) throw NotPrimeError("ω formulas need p >= " + std::to_string(bound));
  OmegaVector out;
  out.p = p;
  out.top = static_cast<int>(forms.size()) + 1;
  out.omegas.push_back(-Residue::one(make_modulus(p, out.top)));
  for (const auto& f : forms) out.omegas.push_back(evaluate_form(parsed(f.text), set, f.precision));
  return out;
}

std::string subst_case(const std::string& tag, int v) { return tag + std::to_string(v); }

}  // namespace

MultiPoly::Binding bernoulli_binding(const DividedBernoulliSet& set) {
  return [&set](Symbol s) -> std::optional<Residue> {
    const int i = static_cast<int>(s);
    if (s >= Symbol::B1 && s <= Symbol::B6) {
      const int n = i - static_cast<int>(Symbol::B1) + 1;
      if (set.contains(n)) return set.bar(n);
      return std::nullopt;
    }
    if (s >= Symbol::B1_2 && s <= Symbol::B4_2) {
      const int n = i - static_cast<int>(Symbol::B1_2) + 1;
      if (set.contains(n, 2)) return set.bar(n, 2);
      return std::nullopt;
    }
    if (s == Symbol::B1_4 || s == Symbol::B2_4) {
      const int n = s == Symbol::B1_4 ? 1 : 2;
      if (set.contains(n, 4)) return set.bar(n, 4);
      return std::nullopt;
    }
    return std::nullopt;
  };
}

Residue evaluate_form(const MultiPoly& form, const DividedBernoulliSet& set, int precision) {
  try {
    return form.evaluate(bernoulli_binding(set), set.prime(), precision);
  } catch (const UnboundSymbolError& e) {
    throw MissingEntryError(e.what());
  }
}

const std::vector<OmegaForm>& omega_forms(int theorem) {
  if (theorem == 1) return kOmega1;
  if (theorem == 2) return kOmega2;
  throw std::out_of_range("theorem must be 1 or 2");
}

Residue OmegaVector::partial_factorial_sum(int k) const {
  if (k < 0 || k >= top) throw std::out_of_range("partial sum index out of range");
  const Modulus mod = make_modulus(p, k + 1);
  Residue acc = Residue::zero(mod);
  for (int v = 0; v <= k; ++v) acc = acc + shift_up(omegas[v].reduce(k + 1 - v), v);
  return acc;
}

Residue OmegaVector::wilson_sum() const {
  const int r = top - 1;
  Residue acc = Residue::zero(make_modulus(p, r));
  for (int v = 1; v <= r; ++v) {
    const Residue w = omegas[v].reduce(r - (v - 1));
    acc = acc + (v == 1 ? w : shift_up(w, v - 1));
  }
  return acc;
}

OmegaVector omega_thm1(const DividedBernoulliSet& set) { return make_omegas(set, kOmega1, 7); }
OmegaVector omega_thm2(const DividedBernoulliSet& set) { return make_omegas(set, kOmega2, 11); }

Residue qp_rhs_thm3(int n, int level, const DividedBernoulliSet& set, Lead lead) {
  require_level(n, level, set.prime());
  const char* text = (lead == Lead::p_minus_one && n == 5 && level == 5) ? kPowerSumAltN5
                                                                        : find_form(kPowerSumForms, n, level);
  return evaluate_form(parsed(text), set, level);
}

Residue qtilde_lemma(int n, int level, const DividedBernoulliSet& set) {
  require_level(n, level, set.prime());
  return evaluate_form(parsed(find_form(kRestatedForms, n, level)), set, level);
}

Residue qtilde_direct(int n, u64 p, int level) { return q_tilde(n, p, level).back(); }

const CoefficientTables& CoefficientTables::published() {
  static const CoefficientTables tables = [] {
    using Q = Rational;
    CoefficientTables t;
    auto& a = t.level5;
    a.alpha = {Q(-1), Q(2), Q(-3), Q(-16), Q(-10)};
    a.alpha1 = {Q(0), Q(-4), Q(12), Q(36), Q(20)};
    a.alpha2 = {Q(0), Q(0), Q(-10), Q(-20), Q(-10)};
    a.beta = {Q(11, 6), Q(-11, 3), Q(-18), Q(-12), Q(0)};
    a.beta1 = {Q(0), Q(26, 3), Q(21), Q(12), Q(0)};
    a.gamma = {Q(-1), Q(-4), Q(-3), Q(0), Q(0)};
    a.delta = {Q(-1), Q(-4), Q(-6), Q(-4), Q(-1)};
    auto& b = t.level6;
    b.alpha = {Q(-1), Q(2), Q(-3), Q(4), Q(30), Q(20)};
    b.alpha1 = {Q(0), Q(-4), Q(12), Q(-24), Q(-100), Q(-60)};
    b.alpha2 = {Q(0), Q(0), Q(-10), Q(40), Q(110), Q(60)};
    b.alpha3 = {Q(0), Q(0), Q(0), Q(-20), Q(-40), Q(-20)};
    b.beta = {Q(11, 6), Q(-11, 3), Q(11, 2), Q(42), Q(30), Q(0)};
    b.beta1 = {Q(0), Q(26, 3), Q(-26), Q(-96), Q(-60), Q(0)};
    b.beta2 = {Q(0), Q(0), Q(47, 2), Q(54), Q(30), Q(0)};
    b.gamma = {Q(-1), Q(2), Q(15), Q(12), Q(0), Q(0)};
    b.gamma1 = {Q(0), Q(-6), Q(-18), Q(-12), Q(0), Q(0)};
    b.delta = {Q(1, 6), Q(1), Q(1), Q(0), Q(0), Q(0)};
    b.epsilon = {Q(-1), Q(2), Q(18), Q(32), Q(23), Q(6)};
    b.epsilon1 = {Q(0), Q(-6), Q(-24), Q(-36), Q(-24), Q(-6)};
    b.eta = {Q(137, 60), Q(77, 6), Q(47, 2), Q(18), Q(5), Q(0)};
    return t;
  }();
  return tables;
}

Residue qp_rhs_props(int n, int level, const DividedBernoulliSet& set, const CoefficientTables& tables) {
  const u64 p = set.prime();
  require_level(n, level, p);
  const long step = static_cast<long>(p) - 1;

  auto entry = [&](long index, int r) {
    auto v = set.at_index(index, r);
    if (!v) {
      throw MissingEntryError("divided Bernoulli number at index " + std::to_string(index) + " mod p^" +
                              std::to_string(r) + " is not cached");
    }
    return *v;
  };

  const IndexedSequence bbar = [&](long v) { return entry(v, level); };
  const Modulus top = make_modulus(p, level);
  Residue acc = Residue::from_int(static_cast<std::int64_t>(p) - 1, top) * forward_difference(bbar, step, n - 1, step);

  // One tail term: (1/n) p^k c B̂̄_{j(p-1)-d}.
  const Rational inv_n(1, n);
  auto tail = [&](int k, const Rational& c, int j, int d) {
    if (c == 0 || k >= level) return;
    const int r = level - k;
    const Residue x = rational_to_residue(c * inv_n, make_modulus(p, r)) * entry(j * step - d, r);
    acc = acc + shift_up(x, k);
  };

  const std::size_t i = static_cast<std::size_t>(n - 1);
  if (level == 5) {
    const auto& t = tables.level5;
    tail(2, t.alpha[i], 1, 2);
    tail(2, t.alpha1[i], 2, 2);
    tail(2, t.alpha2[i], 3, 2);
    tail(3, t.beta[i], 1, 2);
    tail(3, t.beta1[i], 2, 2);
    tail(4, t.gamma[i], 1, 2);
    tail(4, t.delta[i], 1, 4);
  } else {
    const auto& t = tables.level6;
    tail(2, t.alpha[i], 1, 2);
    tail(2, t.alpha1[i], 2, 2);
    tail(2, t.alpha2[i], 3, 2);
    tail(2, t.alpha3[i], 4, 2);
    tail(3, t.beta[i], 1, 2);
    tail(3, t.beta1[i], 2, 2);
    tail(3, t.beta2[i], 3, 2);
    tail(4, t.gamma[i], 1, 2);
    tail(4, t.gamma1[i], 2, 2);
    tail(4, t.epsilon[i], 1, 4);
    tail(4, t.epsilon1[i], 2, 4);
    tail(5, t.delta[i], 1, 2);
    tail(5, t.eta[i], 1, 4);
  }
  return acc;
}

const MultiPoly& psi_poly(int nu) {
  if (nu < 1 || nu > 6) throw std::out_of_range("ψ is tabulated for 1 <= nu <= 6");
  return parsed(kPsi[static_cast<std::size_t>(nu - 1)]);
}

const MultiPoly& ptilde_poly(int nu) {
  if (nu < 1 || nu > 6) throw std::out_of_range("P̃ is tabulated for 1 <= nu <= 6");
  return parsed(kPtilde[static_cast<std::size_t>(nu - 1)]);
}

namespace {

Residue eval_x(const MultiPoly& poly, int nu, const std::vector<Residue>& values) {
  if (static_cast<int>(values.size()) != nu) {
    throw std::invalid_argument("expected " + std::to_string(nu) + " values, got " + std::to_string(values.size()));
  }
  int r = values.front().precision();
  for (const auto& v : values) r = std::min(r, v.precision());
  const auto bind = [&](Symbol s) -> std::optional<Residue> {
    const int i = static_cast<int>(s);
    if (i < nu) return values[static_cast<std::size_t>(i)];
    return std::nullopt;
  };
  return poly.evaluate(bind, values.front().prime(), r);
}

}  // namespace

Residue psi_eval(int nu, const std::vector<Residue>& values) { return eval_x(psi_poly(nu), nu, values); }

Residue ptilde_eval(int nu, const std::vector<Residue>& values) { return eval_x(ptilde_poly(nu), nu, values); }

bool psi_ptilde_consistency(std::string* diff) {
  mpz_class factorial = 1;
  for (int n = 1; n <= 6; ++n) {
    factorial *= n;
    std::map<Symbol, std::pair<Rational, int>> subst;
    for (int k = 1; k <= n; ++k) subst[static_cast<Symbol>(k - 1)] = {Rational(k), -(k - 1)};
    const MultiPoly lhs =
        MultiPoly::symbol(Symbol::p, n - 1) * MultiPoly(Rational(1) / Rational(factorial)) * psi_poly(n).rescale(subst);
    const MultiPoly delta = lhs - ptilde_poly(n);
    if (!delta.is_zero()) {
      if (diff != nullptr) *diff = "n = " + std::to_string(n) + ": " + delta.to_string();
      return false;
    }
  }
  return true;
}

Residue wilson_via_psi(u64 p, int r) {
  if (r < 1 || r > 6) throw std::out_of_range("wilson_via_psi needs 1 <= r <= 6");
  if (p <= static_cast<u64>(r)) throw NotUnitError("wilson_via_psi needs p > r");
  const std::vector<Residue> qt = q_tilde(r, p, r);
  Residue acc = Residue::zero(make_modulus(p, r));
  for (int v = 1; v <= r; ++v) {
    acc = acc + ptilde_eval(v, std::vector<Residue>(qt.begin(), qt.begin() + v));
  }
  return acc;
}

Residue wilson_via_psi_direct(u64 p, int r) {
  if (r < 1 || r > 6) throw std::out_of_range("wilson_via_psi_direct needs 1 <= r <= 6");
  if (p <= static_cast<u64>(r)) throw NotUnitError("wilson_via_psi_direct needs p > r");
  const std::vector<Residue> q = q_power_sums(r, p, r);
  Residue acc = Residue::zero(make_modulus(p, r));
  mpz_class factorial = 1;
  for (int v = 1; v <= r; ++v) {
    factorial *= v;
    // p^(v-1)/v! · ψ_v needs ψ_v only mod p^(r-v+1).
    const int work = r - v + 1;
    std::vector<Residue> args;
    for (int k = 0; k < v; ++k) args.push_back(q[static_cast<std::size_t>(k)].reduce(work));
    const Residue term = psi_eval(v, args) * rational_to_residue(Rational(1) / Rational(factorial), make_modulus(p, work));
    acc = acc + shift_up(term, v - 1);
  }
  return acc;
}

const std::vector<Congruence>& zero_expressions() { return kZero; }
const std::vector<std::string>& omega_mod_p_forms() { return kOmegaModP; }
const std::vector<Congruence>& omega5_reduction_table() { return kOmega5Reduction; }

namespace {

std::vector<CheckResult> congruence_suite(const std::vector<Congruence>& list, const std::string& tag,
                                          const DividedBernoulliSet& set) {
  std::vector<CheckResult> out;
  const u64 p = set.prime();
  for (const auto& c : list) {
    if (p < c.min_prime) {
      out.push_back(skipped(p, tag, c.name, "needs p >= " + std::to_string(c.min_prime)));
      continue;
    }
    try {
      out.push_back(compare_residues(p, tag, c.name, evaluate_form(parsed(c.lhs), set, c.precision),
                                     evaluate_form(parsed(c.rhs), set, c.precision)));
    } catch (const std::exception& e) {
      out.push_back(errored(p, tag, c.name, e.what()));
    }
  }
  return out;
}

}  // namespace

std::vector<CheckResult> zero_expression_suite(const DividedBernoulliSet& set) {
  return congruence_suite(kZero, "zero-exprs", set);
}

std::vector<CheckResult> table3_suite(const DividedBernoulliSet& set) {
  const std::string tag = "table3";
  const u64 p = set.prime();
  std::vector<CheckResult> out;
  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      out.push_back(errored(p, tag, name, e.what()));
    }
  };

  if (p < 7) {
    out.push_back(skipped(p, tag, "all", "needs p >= 7"));
    return out;
  }
  std::optional<OmegaVector> w1, w2;
  guarded("omega-thm1", [&] { w1 = omega_thm1(set); });
  if (p >= 11) guarded("omega-thm2", [&] { w2 = omega_thm2(set); });

  auto mod_p_rows = [&](const OmegaVector& w, const std::string& prefix) {
    for (int v = 1; v < w.top; ++v) {
      const std::string name = prefix + subst_case("omega", v);
      guarded(name, [&] {
        out.push_back(compare_residues(p, tag, name, w.omegas[static_cast<std::size_t>(v)].reduce(1),
                                       evaluate_form(parsed(kOmegaModP[static_cast<std::size_t>(v - 1)]), set, 1)));
      });
    }
  };
  if (w1) mod_p_rows(*w1, "thm1.");
  if (w2) mod_p_rows(*w2, "thm2.");
  if (p < 11) out.push_back(skipped(p, tag, "thm2", "needs p >= 11"));
  if (w1 && w2) {
    for (int v = 1; v <= 5; ++v) {
      const std::string name = subst_case("chain.omega", v);
      const Residue& coarse = w1->omegas[static_cast<std::size_t>(v)];
      out.push_back(compare_residues(p, tag, name, w2->omegas[static_cast<std::size_t>(v)].reduce(coarse.precision()),
                                     coarse));
    }
  }
  for (auto& r : congruence_suite(kOmega5Reduction, tag, set)) {
    r.sub_case = "reduction." + r.sub_case;
    out.push_back(std::move(r));
  }
  guarded("wilson.mod-p", [&] {
    out.push_back(compare_residues(p, tag, "wilson.mod-p", wilson_quotient(p, 1).wilson_quotient,
                                   -set.bar(1).reduce(1)));
  });
  return out;
}

}  // namespace supercong
