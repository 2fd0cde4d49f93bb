// Copyright 2026 The elabc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Polynomial coefficients shared by the scalar and AVX2 transcendental
// kernels (classic fdlibm minimax sets). Both backends must evaluate the
// same expressions in the same order on these exact constants; that is what
// the bit-equality contract in kern.hpp rests on.

namespace elabc::kern::coeffs {

// log: log(1+f) = 2s + s*R(z), s = f/(2+f), z = s^2, f in [sqrt(2)/2-1, sqrt(2)-1]
inline constexpr double kLg1 = 6.666666666666735130e-01;
inline constexpr double kLg2 = 3.999999999940941908e-01;
inline constexpr double kLg3 = 2.857142874366239149e-01;
inline constexpr double kLg4 = 2.222219843214978396e-01;
inline constexpr double kLg5 = 1.818357216161805012e-01;
inline constexpr double kLg6 = 1.531383769920937332e-01;
inline constexpr double kLg7 = 1.479819860511658591e-01;
inline constexpr double kLn2Hi = 6.93147180369123816490e-01;
inline constexpr double kLn2Lo = 1.90821492927058770002e-10;

// exp: exp(r) on |r| <= ln2/2 via r - r^2*P(r^2) correction
inline constexpr double kExpP1 = 1.66666666666666019037e-01;
inline constexpr double kExpP2 = -2.77777777770155933842e-03;
inline constexpr double kExpP3 = 6.61375632143793436117e-05;
inline constexpr double kExpP4 = -1.65339022054652515390e-06;
inline constexpr double kExpP5 = 4.13813679705723846039e-08;
inline constexpr double kInvLn2 = 1.44269504088896338700e+00;

// sin/cos kernels on |r| <= pi/4
inline constexpr double kS1 = -1.66666666666666324348e-01;
inline constexpr double kS2 = 8.33333333332248946124e-03;
inline constexpr double kS3 = -1.98412698298579493134e-04;
inline constexpr double kS4 = 2.75573137070700676789e-06;
inline constexpr double kS5 = -2.50507602534068634195e-08;
inline constexpr double kS6 = 1.58969099521155010221e-10;
inline constexpr double kC1 = 4.16666666666666019037e-02;
inline constexpr double kC2 = -1.38888888888741095749e-03;
inline constexpr double kC3 = 2.48015872894767294178e-05;
inline constexpr double kC4 = -2.75573143513906633035e-07;
inline constexpr double kC5 = 2.08757232129817482790e-09;
inline constexpr double kC6 = -1.13596475577881948265e-11;

// Cody-Waite split of pi/2 and 2/pi for quadrant reduction of t in [0, 2*pi)
inline constexpr double kPiO2Hi = 1.57079632679489655800e+00;
inline constexpr double kPiO2Lo = 6.12323399573676603587e-17;
inline constexpr double kTwoOverPi = 6.36619772367581382433e-01;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace elabc::kern::coeffs
