#pragma once

#include <array>
#include <string_view>

// Frozen expected values for the bundled example networks. The enumeration
// order and the per-vector results below are reference data; tests compare
// engine output against them bit-for-bit / within stated tolerances.

namespace relcalc::testfix {

// Expected counting order for six mutable components (coordinate 1 fastest).
inline constexpr std::array<std::string_view, 64> kSixComponentOrder = {
    "000000",
    "100000",
    "010000",
    "110000",
    "001000",
    "101000",
    "011000",
    "111000",
    "000100",
    "100100",
    "010100",
    "110100",
    "001100",
    "101100",
    "011100",
    "111100",
    "000010",
    "100010",
    "010010",
    "110010",
    "001010",
    "101010",
    "011010",
    "111010",
    "000110",
    "100110",
    "010110",
    "110110",
    "001110",
    "101110",
    "011110",
    "111110",
    "000001",
    "100001",
    "010001",
    "110001",
    "001001",
    "101001",
    "011001",
    "111001",
    "000101",
    "100101",
    "010101",
    "110101",
    "001101",
    "101101",
    "011101",
    "111101",
    "000011",
    "100011",
    "010011",
    "110011",
    "001011",
    "101011",
    "011011",
    "111011",
    "000111",
    "100111",
    "010111",
    "110111",
    "001111",
    "101111",
    "011111",
    "111111"
};

// Expected rows for the three-chain eight-node example: state bits, the
// occurrence probability as printed in the reference output (-1 when the
// vector is disconnected and no probability is reported), and the verdict.
struct ThreeChainRow {
    std::string_view bits;
    double probability;
    bool connected;
};

inline constexpr std::array<ThreeChainRow, 64> kThreeChainRows = {{
    {"10000001", -1.0, false},
    {"11000001", -1.0, false},
    {"10100001", -1.0, false},
    {"11100001", -1.0, false},
    {"10010001", -1.0, false},
    {"11010001", -1.0, false},
    {"10110001", -1.0, false},
    {"11110001", -1.0, false},
    {"10001001", -1.0, false},
    {"11001001", 2.82e-06, true},
    {"10101001", -1.0, false},
    {"11101001", 4.46e-05, true},
    {"10011001", -1.0, false},
    {"11011001", 0.000561, true},
    {"10111001", -1.0, false},
    {"11111001", 0.008869, true},
    {"10000101", -1.0, false},
    {"11000101", -1.0, false},
    {"10100101", 1.3e-06, true},
    {"11100101", 5.21e-06, true},
    {"10010101", -1.0, false},
    {"11010101", -1.0, false},
    {"10110101", 0.000259, true},
    {"11110101", 0.001036, true},
    {"10001101", -1.0, false},
    {"11001101", 2.54e-05, true},
    {"10101101", 0.0001, true},
    {"11101101", 0.000401, true},
    {"10011101", -1.0, false},
    {"11011101", 0.005049, true},
    {"10111101", 0.019954, true},
    {"11111101", 0.079817, true},
    {"10000011", -1.0, false},
    {"11000011", -1.0, false},
    {"10100011", -1.0, false},
    {"11100011", -1.0, false},
    {"10010011", 1.34e-05, true},
    {"11010011", 5.34e-05, true},
    {"10110011", 0.000211, true},
    {"11110011", 0.000844, true},
    {"10001011", -1.0, false},
    {"11001011", 2.07e-05, true},
    {"10101011", -1.0, false},
    {"11101011", 0.000327, true},
    {"10011011", 0.001029, true},
    {"11011011", 0.004114, true},
    {"10111011", 0.016259, true},
    {"11111011", 0.065036, true},
    {"10000111", -1.0, false},
    {"11000111", -1.0, false},
    {"10100111", 9.55e-06, true},
    {"11100111", 3.82e-05, true},
    {"10010111", 0.00012, true},
    {"11010111", 0.000481, true},
    {"10110111", 0.0019, true},
    {"11110111", 0.007598, true},
    {"10001111", -1.0, false},
    {"11001111", 0.000186, true},
    {"10101111", 0.000735, true},
    {"11101111", 0.002941, true},
    {"10011111", 0.009257, true},
    {"11011111", 0.037028, true},
    {"10111111", 0.146331, true},
    {"11111111", 0.585325, true}
}};

}  // namespace relcalc::testfix
