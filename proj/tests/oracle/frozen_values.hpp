#pragma once

// Generated by generate_frozen.py from 60-digit mpmath/sympy computations. Do not edit.

#include <vector>

#include "circdiff/core.hpp"

namespace circdiff::frozen {

inline const CVector kRootsA{
    {2.0, 0.0},
    {-1.0, 1.0},
    {0.5, -2.0},
    {0.0, -1.5},
    {3.0, 0.25}};

inline const CVector kCanonicalA{
    {3.0, 0.25},
    {0.5, -2.0},
    {2.0, 0.0},
    {0.0, -1.5},
    {-1.0, 1.0}};

inline const CVector kCriticalA{
    {2.6073760535302116, 0.13384071423382395},
    {0.2993578962987257, -1.7259832677767478},
    {1.1538026440569585, -0.67087034010115814},
    {-0.46053659388589581, 0.46301289364408199}};

inline const cplx kS1A{4.5, -2.25};

inline const cplx kS2A{6.9375, -2.5};

inline constexpr double kM2A = 21.5625;

inline constexpr double kM4A = 125.25390625;

inline constexpr double kSchoenbergRhsA = 13.95;

inline constexpr double kQuarticRhsA = 63.7845;

inline constexpr double kSumW2A = 12.092759060680061;

inline constexpr double kSumW4A = 59.233781836208528;

inline const CVector kFirstRowA{
    {0.9, -0.45},
    {-0.14880683127682392, -0.28952935636804058},
    {0.16652039092344376, 0.32318533139282475},
    {1.4424966034515037, -0.084988730267814233},
    {0.63978983690187649, 0.75133275524303007}};

inline constexpr double kTraceBBA = 63.7845;

inline const RVector kSubSingularA{2.6831433442577436, 1.9678771633155704, 1.6322597901159492, 0.46252485537219796};

inline const RVector kHermPartA{2.6309526060988881, 1.3901924352016059, 0.24592052675776124, -0.66706556805825527};

inline const RVector kGramSubA{7.917502722301515, 4.1312189298504896, 3.085166041134108, 2.1161123067138873};

inline const CVector kRootsB{
    {1.0, 2.0},
    {-2.0, 0.5},
    {0.5, -1.0},
    {1.0, -1.0},
    {-0.5, -0.5}};

inline const CVector kCriticalB{
    {0.72329113990607834, 1.3613118163877874},
    {-1.4730043144374833, 0.26598959389553563},
    {0.77973532526331816, -0.9776705590669739},
    {-0.030022150731913153, -0.64963085121634918}};

inline constexpr double kQuarticCenteredRhsB = 16.545;

inline constexpr double kDeBruinSharmaRhsB = 23.295;

inline constexpr double kSumW4B = 13.291118842804582;

inline const RVector kXiC{2.5773502691896258, 1.4226497308103742};

inline const RVector kEtaC{7.0, 2.3333333333333333};

inline const std::vector<CVector> kMatrixD{
    {{2.0, 1.0}, {1.0, 0.0}, {0.0, 0.0}, {0.0, -3.0}},
    {{4.0, 0.0}, {-1.0, 2.0}, {5.0, 0.0}, {1.0, 0.0}},
    {{0.0, 0.0}, {1.0, -1.0}, {3.0, 0.0}, {2.0, 0.0}},
    {{1.0, 0.0}, {0.0, 0.0}, {-2.0, 1.0}, {-4.0, 0.0}}};

inline const CVector kCharPolyD{
    {49.0, -59.0},
    {-5.0, 35.0},
    {-22.0, 6.0},
    {0.0, -3.0},
    {1.0, 0.0}};

inline const CVector kEigD{
    {4.4411399261773147, 0.30263032560960856},
    {-3.5457176428382563, 0.58430715072975981},
    {-2.3807396667358248, 2.1755509135765935},
    {1.4853173833967664, -0.062488389915961914}};

inline const RVector kSingularD{7.7845904147494547, 5.5923540877094055, 2.5806399827123904, 0.68266031955651858};

inline const std::vector<CVector> kMatrixE{
    {{4.0, 0.0}, {1.0, -2.0}, {0.0, 1.0}},
    {{1.0, 2.0}, {-1.0, 0.0}, {3.0, 0.0}},
    {{0.0, -1.0}, {3.0, 0.0}, {2.0, 0.0}}};

inline const RVector kEigE{5.0, 3.6055512754639893, -3.6055512754639893};

inline const CVector kCoeffsF{
    {3.0, -1.0},
    {0.0, 2.0},
    {-5.0, 0.0},
    {1.0, 1.0},
    {0.0, 0.0},
    {7.0, -2.0},
    {-1.0, 0.0},
    {2.0, 3.0},
    {0.0, -4.0},
    {1.0, 0.0},
    {1.0, 0.0}};

inline const CVector kRootsF{
    {-2.2074023500786571, -1.1906478951996428},
    {0.35698076970382832, 1.5665264391981678},
    {0.84475610065239705, 1.276900341658029},
    {-1.0650903321189115, -0.70266624442164581},
    {0.91108691982436947, -0.8531967198386761},
    {-0.20859208354904427, -0.97419843346403245},
    {0.79175321512523799, -0.27914911412435069},
    {-0.42399106926902788, 0.70413268389920171},
    {0.64371892525921222, 0.2875708004220987},
    {-0.64322009554940428, 0.16472814187085061}};

}  // namespace circdiff::frozen
