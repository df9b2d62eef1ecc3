// Generated by tools/derive_series_coefficients.py. Do not edit by hand.
#pragma once

#include <array>

namespace anharm::detail {

struct QTerm {
  int x_power;
  int q_power;
  double coefficient;
};

// order 2: K(x) = sum c x^p q^j / (1 - q)^4
inline constexpr std::array<QTerm, 5> kQForm2{{
    {0, 0, 12.0},
    {0, 1, 96.0},
    {0, 3, -96.0},
    {0, 4, -12.0},
    {1, 2, 144.0},
}};

// order 2: x^3 K(x) = sum_i a_i x^i
inline constexpr std::array<double, 24> kTaylor2{{
    384.0,
    0.0,
    0.0,
    0.0,
    3.2,
    0.0,
    -0.10158730158730159,
    0.0,
    0.004761904761904762,
    0.0,
    -0.00023088023088023088,
    0.0,
    1.0590526463542337e-05,
    0.0,
    -4.528099766195004e-07,
    0.0,
    1.8163723229082705e-08,
    0.0,
    -6.906618544126048e-10,
    0.0,
    2.5130765541629516e-11,
    0.0,
    -8.818241766689826e-13,
    0.0,
}};

// order 3: K(x) = sum c x^p q^j / (1 - q)^6
inline constexpr std::array<QTerm, 12> kQForm3{{
    {0, 0, 648.0},
    {0, 1, 10368.0},
    {0, 2, -648.0},
    {0, 3, -20736.0},
    {0, 4, -648.0},
    {0, 5, 10368.0},
    {0, 6, 648.0},
    {1, 2, 23328.0},
    {1, 4, -23328.0},
    {2, 2, 1728.0},
    {2, 3, 13824.0},
    {2, 4, 1728.0},
}};

// order 3: x^4 K(x) = sum_i a_i x^i
inline constexpr std::array<double, 24> kTaylor3{{
    110592.0,
    0.0,
    0.0,
    0.0,
    460.8,
    0.0,
    7.314285714285714,
    0.0,
    0.0,
    0.0,
    -0.022164502164502164,
    0.0,
    0.0022231736517450804,
    0.0,
    -0.00015920587349158778,
    0.0,
    9.607002604201483e-06,
    0.0,
    -5.156322607279598e-07,
    0.0,
    2.5314427972620436e-08,
    0.0,
    -1.1575842512852533e-09,
    0.0,
}};

// order 4: K(x) = sum c x^p q^j / (1 - q)^8
inline constexpr std::array<QTerm, 24> kQForm4{{
    {0, 0, 113904.0},
    {0, 1, 2620800.0},
    {0, 2, 2917152.0},
    {0, 3, -14152320.0},
    {0, 5, 14152320.0},
    {0, 6, -2917152.0},
    {0, 7, -2620800.0},
    {0, 8, -113904.0},
    {1, 1, 62208.0},
    {1, 2, 7418304.0},
    {1, 3, 6227712.0},
    {1, 4, -27416448.0},
    {1, 5, 6227712.0},
    {1, 6, 7418304.0},
    {1, 7, 62208.0},
    {2, 2, 808704.0},
    {2, 3, 9455616.0},
    {2, 5, -9455616.0},
    {2, 6, -808704.0},
    {3, 2, 20736.0},
    {3, 3, 1161216.0},
    {3, 4, 3732480.0},
    {3, 5, 1161216.0},
    {3, 6, 20736.0},
}};

// order 4: x^5 K(x) = sum_i a_i x^i
inline constexpr std::array<double, 24> kTaylor4{{
    93782016.0,
    0.0,
    0.0,
    0.0,
    383385.6,
    0.0,
    -468.1142857142857,
    0.0,
    857.2342857142858,
    0.0,
    -46.634112554112555,
    0.0,
    2.1341573981573982,
    0.0,
    -0.10318536489965062,
    0.0,
    0.005808148486019634,
    0.0,
    -0.0003627151969642182,
    0.0,
    2.2820275083681245e-05,
    0.0,
    -1.3673275428562417e-06,
    0.0,
}};

}  // namespace anharm::detail
