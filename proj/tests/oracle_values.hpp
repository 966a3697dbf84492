#pragma once

// Reference values produced by tests/oracles/generate.py (SciPy / mpmath,
// independent of the library). Frozen here so the test suite needs no Python.

namespace oracle {

inline constexpr double kDrudeAtOne = 100.00990099009901;
inline constexpr double kShortDrudeReduced = -0.0078092936674165541;
inline constexpr double kLongNonmagnetic100 = 0.99151173636843225;
inline constexpr double kLongBoyer1000 = -0.87425727693223782;
inline constexpr double kScaledFrequency = 2997924580000000.0;
inline constexpr double kEtaDrudePairShort = 0.0059582249178533313;
inline constexpr double kEtaBoyer100 = -0.86761396597650442;
inline constexpr double kEtaMainlyMagnetic1 = -0.14245819161448406;
inline constexpr double kEtaMainlyMagnetic01 = 0.0093086298457238301;
inline constexpr double kPlasmaPairRatio = 0.92054670248925807;
inline constexpr double kEtaGoldMetamaterial1um = 0.64494475454302236;
inline constexpr double kEtaCoatedAtLambda0 = -0.10337716171517382;

}  // namespace oracle
