// Generated by tests/oracles/goldens.py; do not edit by hand.
#pragma once
#include <array>
#include "dma/constants.hpp"
namespace dma::golden {
inline const cplx kAlpha61GHz{-9.7822124211052329, -7.3972928638936265};
inline const cplx kLeakage60GHz{0.0, -2.0};
inline constexpr double kBeta60GHz = 1440.6552686984949;
inline constexpr double kPhaseStep60GHz = -2.8813105373969898;
inline const std::array<cplx, 16> kAlternatingMoments60GHz = {
    cplx{0.0, -20.0},
    cplx{0.0, 0.0},
    cplx{9.9187739282228011, -17.300852700141112},
    cplx{0.0, 0.0},
    cplx{17.160324669818271, -10.046871395639381},
    cplx{0.0, 0.0},
    cplx{19.827044772919944, -0.18050305891930334},
    cplx{0.0, 0.0},
    cplx{17.240757506508199, 9.6768558966528374},
    cplx{0.0, 0.0},
    cplx{10.114863004203063, 16.921251726342388},
    cplx{0.0, 0.0},
    cplx{0.35788422308420341, 19.653956153654642},
    cplx{0.0, 0.0},
    cplx{-9.4375722828009753, 17.17899865453304},
    cplx{0.0, 0.0},
};
// alternating code, 59..63 GHz in 0.5 GHz steps: dense-search peak, spatial-harmonic angle
inline constexpr std::array<double, 9> kAlternatingPeakDeg = {-8.6340653918482012, -7.2665980566740723, -5.9402518884472846, -4.6522765032025078, -3.4001954421329979, -2.1817697643427347, -0.99496758768107187, 0.16206156366560506, 1.2910084968207944};
inline constexpr std::array<double, 9> kAlternatingHarmonicDeg = {-8.6340653918482012, -7.2665980566740723, -5.9402518884472846, -4.6522765032025078, -3.4001954421329979, -2.1817697643427347, -0.99496758768107187, 0.16206156366560506, 1.2910084968207944};
inline constexpr double kPairedPeak60GHz = -47.538781293427515;
inline constexpr double kAlternatingCorrelation60vs62 = 0.4467270852069305;
inline constexpr double kAnomalousBandLo = 59178565465.439258;
inline constexpr double kAnomalousBandHi = 60856414569.384882;
inline constexpr const char* kSynthesizedMinus30 = "1001001001011011";
inline constexpr const char* kExhaustiveMinus30 = "1001001001001001";
inline constexpr double kExhaustiveGainMinus30 = 114.8593707448134;
inline constexpr const char* kSynthesizedZero = "1010101101010101";
inline constexpr const char* kExhaustiveZero = "1010101001010101";
inline constexpr double kExhaustiveGainZero = 122.243274622855;
inline constexpr const char* kSynthesizedPlus30 = "1001100110011001";
inline constexpr const char* kExhaustivePlus30 = "1001100110011001";
inline constexpr double kExhaustiveGainPlus30 = 117.10154963870835;
inline const cplx kCascadeS11AllOn60GHz{-0.26952906228579264, -0.21432230128811282};
inline const cplx kCascadeS21AllOn60GHz{-0.0053128374253382197, 0.041475222069344853};
inline const cplx kCascadeS11Alternating60GHz{-0.17966507795644745, -0.13943283508255801};
inline const cplx kCascadeS21Alternating60GHz{0.076238330644772387, 0.14155858089163887};
}  // namespace dma::golden
