#pragma once

#include <array>
#include <utility>

namespace syl::detail {

// Reference pairs (x, asin(x)) with the second member correctly rounded to
// double (error <= 0.5 ulp).  Used by the startup self-test that licenses
// the fixed 4-ulp outward slack applied to the native asin in arcsin_i():
// if the native result matches each reference to within 2 ulps, the native
// error is under 2.5 ulps on these probes, and the 4-ulp slack is sound for
// the containment contract.
inline constexpr std::array<std::pair<double, double>, 64> arcsin_references{{
    {0x1.999999999999ap-4, 0x1.9a49276037884p-4},
    {0x1.999999999999ap-3, 0x1.9c618aa4ae23dp-3},
    {0x1.3333333333333p-2, 0x1.380159e14f6ffp-2},
    {0x1.999999999999ap-2, 0x1.a564ac0e73a34p-2},
    {0x1.0000000000000p-1, 0x1.0c152382d7366p-1},
    {0x1.3333333333333p-1, 0x1.4978fa3269ee1p-1},
    {0x1.6666666666666p-1, 0x1.8d00e692afd95p-1},
    {0x1.999999999999ap-1, 0x1.dac670561bb50p-1},
    {0x1.ccccccccccccdp-1, 0x1.1ea93705fa172p+0},
    {0x1.0000000000000p-1, 0x1.0c152382d7366p-1},
    {0x1.8000000000000p-1, 0x1.b235315c680dcp-1},
    {0x1.c000000000000p-1, 0x1.10c066d3e6932p+0},
    {0x1.e000000000000p-1, 0x1.3722d2feb24c8p+0},
    {0x1.f000000000000p-1, 0x1.51f4bd13f8591p+0},
    {0x1.f800000000000p-1, 0x1.64cf55148366fp+0},
    {0x1.fc00000000000p-1, 0x1.721a5d8718655p+0},
    {0x1.fe00000000000p-1, 0x1.7b7d33b928c5bp+0},
    {0x1.fffeb074a771dp-1, 0x1.90fa9f3695aa5p+0},
    {0x1.999999999999ap-1, 0x1.dac670561bb50p-1},
    {0x1.0000000000000p-1, 0x1.0c152382d7366p-1},
    {0x1.999999999999ap-2, 0x1.a564ac0e73a34p-2},
    {0x1.6a09e667f3bcdp-1, 0x1.921fb54442d19p-1},
    {0x1.bb67ae8584caap-1, 0x1.0c152382d7365p+0},
    {0x1.45f306dc9c883p-2, 0x1.4bb8873bc1ebdp-2},
    {0x1.4bc6a7ef9db23p-1, 0x1.68eff027c4a59p-1},
    {0x1.999999999999ap-5, 0x1.99c5570328659p-5},
    {0x1.3333333333333p-3, 0x1.345d237b20eb3p-3},
    {0x1.0000000000000p-2, 0x1.02be9ce0b87cdp-2},
    {0x1.6666666666666p-2, 0x1.6e271e909bbe4p-2},
    {0x1.199999999999ap-1, 0x1.2a2ba538032f0p-1},
    {0x1.4cccccccccccdp-1, 0x1.6a4881ddc9b84p-1},
    {0x1.b333333333333p-1, 0x1.04179cba26d0ep+0},
    {0x1.f9add3739635fp-4, 0x1.faf8f2eb6ec2cp-4},
    {0x1.45f306dc8bdc4p-2, 0x1.4bb8873bb055cp-2},
    {0x1.921fb54442d18p-1, 0x1.ce8276c3e139cp-1},
    {0x1.5555555555555p-2, 0x1.5bfe34f051112p-2},
    {0x1.5555555555555p-1, 0x1.759edd04f68dep-1},
    {0x1.2492492492492p-3, 0x1.2593690346f6fp-3},
    {0x1.b6db6db6db6dbp-2, 0x1.c58a7905557f6p-2},
    {0x1.6db6db6db6db7p-1, 0x1.97594533a2597p-1},
    {0x1.0000000000000p+0, 0x1.921fb54442d18p+0},
    {-0x1.999999999999ap-4, -0x1.9a49276037884p-4},
    {-0x1.999999999999ap-3, -0x1.9c618aa4ae23dp-3},
    {-0x1.3333333333333p-2, -0x1.380159e14f6ffp-2},
    {-0x1.999999999999ap-2, -0x1.a564ac0e73a34p-2},
    {-0x1.0000000000000p-1, -0x1.0c152382d7366p-1},
    {-0x1.3333333333333p-1, -0x1.4978fa3269ee1p-1},
    {-0x1.6666666666666p-1, -0x1.8d00e692afd95p-1},
    {-0x1.999999999999ap-1, -0x1.dac670561bb50p-1},
    {-0x1.ccccccccccccdp-1, -0x1.1ea93705fa172p+0},
    {-0x1.0000000000000p-1, -0x1.0c152382d7366p-1},
    {-0x1.8000000000000p-1, -0x1.b235315c680dcp-1},
    {-0x1.c000000000000p-1, -0x1.10c066d3e6932p+0},
    {-0x1.e000000000000p-1, -0x1.3722d2feb24c8p+0},
    {-0x1.f000000000000p-1, -0x1.51f4bd13f8591p+0},
    {-0x1.f800000000000p-1, -0x1.64cf55148366fp+0},
    {-0x1.fc00000000000p-1, -0x1.721a5d8718655p+0},
    {-0x1.fe00000000000p-1, -0x1.7b7d33b928c5bp+0},
    {-0x1.fffeb074a771dp-1, -0x1.90fa9f3695aa5p+0},
    {-0x1.999999999999ap-1, -0x1.dac670561bb50p-1},
    {-0x1.0000000000000p-1, -0x1.0c152382d7366p-1},
    {-0x1.999999999999ap-2, -0x1.a564ac0e73a34p-2},
    {-0x1.6a09e667f3bcdp-1, -0x1.921fb54442d19p-1},
    {-0x1.bb67ae8584caap-1, -0x1.0c152382d7365p+0},
}};

} // namespace syl::detail
