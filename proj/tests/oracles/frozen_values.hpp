// Generated by tests/oracles/derive_values.py; do not edit by hand.
#pragma once

namespace frozen {

inline constexpr const char* kUniformMuK1 = "12";
inline constexpr const char* kUniformMuK2 = "720";
inline constexpr const char* kUniformMuK3 = "100800";
inline constexpr const char* kUniformMuK4 = "25401600";
inline constexpr const char* kUniformMuK5 = "10059033600";

inline constexpr const char* kChiZeroHalfK1 = "48/5";
inline constexpr const char* kChiZeroHalfK2 = "46080/73";
inline constexpr const char* kChiQuarterK1 = "6";
inline constexpr const char* kChiQuarterK2 = "46080/163";
inline constexpr const char* kChiThirdHalfK3 = "1523747635200/60944329";
inline constexpr const char* kOnePlusXK1 = "90/17";
inline constexpr const char* kOnePlusXK2 = "25200/79";
inline constexpr const char* kOnePlusXK3 = "3175200/71";
inline constexpr const char* kSquareK2 = "8100";
inline constexpr const char* kPiecewiseK1 = "720/43";
inline constexpr const char* kPiecewiseK2 = "2150400/2057";
inline constexpr const char* kPowHalfK1 = "9/2";
inline constexpr const char* kPowHalfK2 = "1225/4";
inline constexpr const char* kPowThirdK3 = "130224556/2187";

inline constexpr const char* kDiracK1A1Over2 = "4";
inline constexpr const char* kDiracK1A1Over3 = "9/2";
inline constexpr const char* kDiracK1A1Over10 = "100/9";
inline constexpr const char* kDiracK2A1Over2 = "192";
inline constexpr const char* kDiracK2A1Over3 = "2187/8";
inline constexpr const char* kDiracK2A1Over10 = "1000000/243";
inline constexpr const char* kDiracK3A1Over2 = "20480";
inline constexpr const char* kDiracK3A1Over3 = "295245/8";
inline constexpr const char* kDiracK3A1Over10 = "200000000000/59049";
inline constexpr const char* kDiracK4A1Over2 = "4128768";
inline constexpr const char* kDiracK4A1Over3 = "301327047/32";
inline constexpr const char* kDiracK4A1Over10 = "2800000000000000/531441";

// k = 1, Dirac(1/2), monomial bubble basis, N = 12
inline constexpr const char* kGalerkinDiracHalfK1N12 = "4010263/16777216";
inline constexpr const char* kGalerkinDiracHalfK1N4 = "231/1024";
// u = -x ln x
inline constexpr const char* kHardyEnergy = "1";
inline constexpr const char* kHardyNormalization = "1";

inline constexpr const char* kBeamUniformW0 = "0";
inline constexpr const char* kBeamUniformW1 = "0";
inline constexpr const char* kBeamUniformW2 = "1/24";
inline constexpr const char* kBeamUniformW3 = "-1/12";
inline constexpr const char* kBeamUniformW4 = "1/24";
// w / (x^3 (1-x)^3) for k = 3, f = 1
inline constexpr const char* kPolyharmonicK3Uniform = "1/720";

}  // namespace frozen
