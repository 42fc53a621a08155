// Generated by tools/gen_mcculloch_tables; do not edit by hand.
#include "fractalis/stable.hpp"

namespace fractalis::detail {

const McCullochTables& mcculloch_tables() {
  static const McCullochTables tables{
      // nu_alpha nodes
      {2.438664, 2.500000, 2.600000, 2.700000, 2.800000, 3.000000, 3.200000, 3.500000, 4.000000, 5.000000, 6.000000, 8.000000, 10.000000, 15.000000, 25.000000},
      // nu_beta nodes
      {0.000000, 0.100000, 0.200000, 0.300000, 0.500000, 0.700000, 1.000000},
      // alpha(nu_alpha, nu_beta)
      {
          {2.000000, 2.000000, 2.000000, 2.000000, 2.000000, 2.000000, 2.000000},
          {1.915521, 1.918168, 1.918168, 1.918168, 1.918168, 1.918168, 1.918168},
          {1.809012, 1.812858, 1.816482, 1.816482, 1.816482, 1.816482, 1.816482},
          {1.727413, 1.728563, 1.734718, 1.734725, 1.734725, 1.734725, 1.734725},
          {1.661776, 1.661224, 1.661528, 1.664484, 1.664484, 1.664484, 1.664484},
          {1.560008, 1.557660, 1.551756, 1.546284, 1.546394, 1.546394, 1.546394},
          {1.482043, 1.478982, 1.470512, 1.459075, 1.449718, 1.449718, 1.449718},
          {1.390665, 1.387327, 1.377742, 1.363272, 1.334410, 1.333656, 1.333656},
          {1.277340, 1.274120, 1.264751, 1.250068, 1.211025, 1.192533, 1.192533},
          {1.125651, 1.122908, 1.114851, 1.102009, 1.065692, 1.024055, 1.017299},
          {1.025188, 1.022857, 1.015960, 1.004813, 0.972448, 0.933058, 0.911277},
          {0.896430, 0.894671, 0.889421, 0.880772, 0.854408, 0.820517, 0.785777},
          {0.815326, 0.813908, 0.809664, 0.802621, 0.780510, 0.750479, 0.711523},
          {0.698220, 0.697224, 0.694239, 0.689269, 0.673367, 0.649705, 0.608875},
          {0.589484, 0.588797, 0.586736, 0.583304, 0.572301, 0.555354, 0.516421},
      },
      // beta(nu_alpha, nu_beta); values above 1 are clipped by the fit
      {
          {0.000000, 1.737431, 3.474861, 5.212292, 8.687153, 12.162014, 17.374305},
          {0.000000, 1.737431, 3.474861, 5.212292, 8.687153, 12.162014, 17.374305},
          {0.000000, 0.711529, 1.482225, 2.223337, 3.705562, 5.187786, 7.411123},
          {0.000000, 0.457168, 0.999555, 1.499478, 2.499130, 3.498781, 4.998259},
          {0.000000, 0.346468, 0.730672, 1.167788, 1.946313, 2.724838, 3.892625},
          {0.000000, 0.245935, 0.501177, 0.797115, 1.418987, 1.986581, 2.837973},
          {0.000000, 0.199752, 0.400990, 0.614990, 1.164235, 1.629929, 2.328470},
          {0.000000, 0.163926, 0.326304, 0.489256, 0.921316, 1.345924, 1.922748},
          {0.000000, 0.134544, 0.267240, 0.397476, 0.669668, 1.117271, 1.596101},
          {0.000000, 0.108127, 0.215172, 0.320513, 0.529231, 0.793312, 1.333046},
          {0.000000, 0.094885, 0.189183, 0.282548, 0.468463, 0.674464, 1.222663},
          {0.000000, 0.080704, 0.161318, 0.241846, 0.404417, 0.582709, 1.126517},
          {0.000000, 0.072822, 0.145781, 0.219071, 0.368624, 0.533852, 1.084481},
          {0.000000, 0.062328, 0.125011, 0.188444, 0.320098, 0.468430, 1.042327},
          {0.000000, 0.053093, 0.106645, 0.161159, 0.276046, 0.409127, 1.018484},
      },
      // alpha nodes
      {0.500000, 0.600000, 0.700000, 0.800000, 0.900000, 1.000000, 1.100000, 1.200000, 1.300000, 1.400000, 1.500000, 1.600000, 1.700000, 1.800000, 1.900000, 2.000000},
      // beta nodes
      {0.000000, 0.250000, 0.500000, 0.750000, 1.000000},
      // nu_gamma(alpha, beta) = (q75 - q25) / gamma
      {
          {2.567666, 3.051464, 4.507601, 6.600270, 9.093520},
          {2.324208, 2.621975, 3.527840, 4.789851, 6.222852},
          {2.180128, 2.382507, 2.994907, 3.832951, 4.761422},
          {2.091069, 2.237293, 2.669868, 3.257615, 3.903464},
          {2.035167, 2.143917, 2.456015, 2.881128, 3.349932},
          {2.000000, 2.081036, 2.307843, 2.620058, 2.968580},
          {1.977705, 2.037127, 2.201459, 2.431559, 2.693246},
          {1.963074, 2.005556, 2.123201, 2.291603, 2.487683},
          {1.952758, 1.982222, 2.064681, 2.185765, 2.330636},
          {1.944735, 1.964446, 2.020433, 2.104896, 2.208984},
          {1.937866, 1.950446, 1.986724, 2.042924, 2.114325},
          {1.931547, 1.939037, 1.960933, 1.995681, 2.041151},
          {1.925476, 1.929453, 1.941207, 1.960244, 1.985825},
          {1.919513, 1.921209, 1.926262, 1.934574, 1.945985},
          {1.913606, 1.914020, 1.915261, 1.917321, 1.920191},
          {1.907745, 1.907745, 1.907745, 1.907745, 1.907745},
      },
      // nu_delta(alpha, beta) = (delta0 - q50) / gamma
      {
          {-0.000000, -0.060877, -0.279429, -0.658716, -1.198109},
          {-0.000000, -0.077627, -0.271981, -0.580997, -0.996638},
          {-0.000000, -0.088873, -0.262060, -0.519743, -0.853269},
          {-0.000000, -0.095509, -0.250487, -0.468534, -0.742705},
          {-0.000000, -0.098311, -0.237596, -0.423838, -0.652470},
          {-0.000000, -0.097957, -0.223492, -0.383478, -0.575630},
          {-0.000000, -0.095035, -0.208179, -0.345981, -0.507961},
          {-0.000000, -0.090031, -0.191620, -0.310271, -0.446671},
          {-0.000000, -0.083321, -0.173764, -0.275502, -0.389775},
          {-0.000000, -0.075179, -0.154540, -0.240960, -0.335742},
          {-0.000000, -0.065780, -0.133853, -0.206001, -0.283289},
          {-0.000000, -0.055212, -0.111556, -0.169997, -0.231236},
          {-0.000000, -0.043481, -0.087431, -0.132278, -0.178381},
          {-0.000000, -0.030507, -0.061154, -0.092072, -0.123387},
          {-0.000000, -0.016114, -0.032245, -0.048412, -0.064632},
          {-0.000000, -0.000000, -0.000000, -0.000000, -0.000000},
      },
  };
  return tables;
}

}  // namespace fractalis::detail
