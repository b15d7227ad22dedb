// Generated by tools/gen_reference_tables.py. Do not edit by hand.
// Reference values computed with mpmath at 50 decimal digits.
#![allow(dead_code, clippy::excessive_precision, clippy::approx_constant)]

pub struct StatsCase {
    pub groups: &'static [&'static [f64]],
    pub anova_f: f64,
    pub anova_df: (f64, f64),
    pub anova_p: f64,
    /// Pooled t-test of groups[0] vs groups[1]: (t, df, p).
    pub pooled: (f64, f64, f64),
    /// Welch t-test of groups[0] vs groups[1]: (t, df, p).
    pub welch: (f64, f64, f64),
    /// Variance-ratio F-test of groups[0] vs groups[1]:
    /// (F, df1, df2, p, critical at 0.05), larger variance in the numerator.
    pub var_f: (f64, f64, f64, f64, f64),
}

pub const STATS_CASES: [StatsCase; 20] = [
    StatsCase {
        groups: &[
            &[
                3537.0, 3485.0, 3505.0, 3548.0, 3549.0, 3530.0, 3552.0, 3395.0, 3450.0, 3553.0,
                3455.0, 3481.0, 3442.0, 3504.0, 3469.0, 3388.0, 3468.0, 3408.0, 3427.0, 3431.0,
            ],
            &[
                2126.0, 2509.0, 2223.0, 2607.0, 2758.0, 2556.0, 2391.0, 2379.0, 2273.0, 2434.0,
                2201.0, 2122.0, 2267.0, 2349.0, 2654.0, 2397.0, 2653.0, 2039.0, 2344.0, 2570.0,
                2205.0, 2434.0, 2603.0, 2450.0, 2205.0,
            ],
        ],
        anova_f: 606.47890405813506,
        anova_df: (1.0000000000000000, 43.000000000000000),
        anova_p: 5.5756728075479825e-27,
        pooled: (
            24.626792402952827,
            43.000000000000000,
            5.5756728075479825e-27,
        ),
        welch: (
            27.129380214835215,
            28.723366719230251,
            5.0993797943557460e-22,
        ),
        var_f: (
            12.374469482974581,
            24.000000000000000,
            19.000000000000000,
            3.3416946810345697e-7,
            2.1141428529180047,
        ),
    },
    StatsCase {
        groups: &[
            &[
                2343.0, 1693.0, 2443.0, 2323.0, 2412.0, 2471.0, 1999.0, 1742.0, 1808.0, 1997.0,
                1953.0, 2231.0, 1925.0, 2480.0, 2021.0, 2380.0, 2000.0, 1861.0,
            ],
            &[
                3163.0, 3014.0, 3217.0, 3017.0, 2999.0, 3029.0, 2986.0, 2968.0, 3109.0, 2962.0,
                2952.0, 3154.0, 3039.0, 3207.0, 3049.0, 3319.0, 3069.0, 3034.0, 2958.0, 3210.0,
                3337.0,
            ],
            &[1891.0, 1400.0, 1874.0, 518.0, 1177.0, 1382.0, 747.0],
        ],
        anova_f: 137.51124058631135,
        anova_df: (2.0000000000000000, 43.000000000000000),
        anova_p: 2.0736174132915206e-19,
        pooled: (
            -14.998332089770489,
            37.000000000000000,
            2.6354214372194864e-17,
        ),
        welch: (
            -14.214894316489501,
            22.544537931220443,
            9.7179179365955177e-13,
        ),
        var_f: (
            5.2010346151904292,
            17.000000000000000,
            20.000000000000000,
            0.00034189320849906317,
            2.1667009968119798,
        ),
    },
    StatsCase {
        groups: &[
            &[
                2669.0, 2867.0, 2419.0, 2682.0, 2876.0, 3128.0, 2325.0, 3092.0, 3089.0, 2985.0,
                2365.0, 2553.0, 2921.0, 3290.0, 2959.0, 2406.0,
            ],
            &[
                1435.0, 82.0, 287.0, 192.0, 150.0, 110.0, 1357.0, 1082.0, 1359.0, 709.0,
            ],
            &[
                1038.0, 965.0, 1696.0, 1429.0, 1318.0, 1294.0, 1036.0, 1335.0, 1643.0, 1719.0,
                1546.0, 1312.0, 1134.0,
            ],
            &[
                2341.0, 1352.0, 1885.0, 2439.0, 2202.0, 2017.0, 2479.0, 1475.0, 2055.0, 1872.0,
                2586.0, 2024.0, 1515.0, 1423.0, 2493.0, 2569.0, 2247.0, 1873.0, 2630.0, 2684.0,
                1819.0, 1400.0,
            ],
        ],
        anova_f: 66.247682803893034,
        anova_df: (3.0000000000000000, 57.000000000000000),
        anova_p: 1.4219694477313511e-18,
        pooled: (
            12.221509011602781,
            24.000000000000000,
            8.5508723218154746e-12,
        ),
        welch: (
            10.660695578606437,
            12.207650742976081,
            1.5274535522861689e-7,
        ),
        var_f: (
            3.5644794544096077,
            9.0000000000000000,
            15.000000000000000,
            0.014628264270021817,
            2.5876264352275847,
        ),
    },
    StatsCase {
        groups: &[
            &[
                2675.0, 3223.0, 3482.0, 3729.0, 3366.0, 3289.0, 2830.0, 3944.0, 2945.0, 2819.0,
                3548.0, 3431.0,
            ],
            &[
                1608.0, 1556.0, 724.0, 797.0, 1354.0, 1224.0, 619.0, 993.0, 654.0, 1364.0, 1194.0,
                463.0, 715.0, 387.0, 576.0, 320.0, 1502.0, 1120.0, 1134.0, 247.0, 1219.0, 942.0,
                1180.0, 841.0, 1273.0, 1314.0, 1030.0,
            ],
            &[
                1085.0, 889.0, 208.0, 750.0, 1055.0, 718.0, 851.0, 618.0, 315.0, 463.0, 116.0,
                505.0, 608.0, 1012.0, 630.0, 1044.0, 1048.0, 542.0, 1133.0, 896.0, 559.0, 1212.0,
                242.0, 1065.0, 404.0, 109.0, 1034.0,
            ],
            &[
                897.0, 824.0, 894.0, 854.0, 863.0, 898.0, 903.0, 849.0, 909.0, 830.0, 852.0, 874.0,
                861.0,
            ],
            &[
                2171.0, 3221.0, 3530.0, 3094.0, 2194.0, 3409.0, 2296.0, 2853.0, 2442.0, 2589.0,
                3076.0, 3129.0, 3421.0, 2550.0, 2445.0, 3043.0, 3527.0, 1975.0, 3223.0, 3553.0,
            ],
        ],
        anova_f: 183.22488214515548,
        anova_df: (4.0000000000000000, 94.000000000000000),
        anova_p: 1.7649076000608121e-43,
        pooled: (
            17.030090628568881,
            37.000000000000000,
            4.2813155969652642e-19,
        ),
        welch: (
            16.977969154236832,
            21.029872989916517,
            9.3954693291679076e-14,
        ),
        var_f: (
            1.0156398721150184,
            11.000000000000000,
            26.000000000000000,
            0.46040699602274413,
            2.1810665988755176,
        ),
    },
    StatsCase {
        groups: &[
            &[3809.0, 3621.0, 3736.0, 3333.0, 3557.0],
            &[
                2991.0, 2457.0, 2899.0, 1828.0, 2476.0, 2678.0, 2802.0, 2745.0, 2474.0, 2531.0,
                1940.0, 1869.0, 2304.0, 2461.0, 2781.0, 1988.0, 2405.0, 1877.0, 1929.0, 2608.0,
                2884.0, 2355.0, 2572.0, 3068.0, 2522.0, 2676.0,
            ],
        ],
        anova_f: 45.562516886953663,
        anova_df: (1.0000000000000000, 29.000000000000000),
        anova_p: 2.0828170409973053e-7,
        pooled: (
            6.7500012508853406,
            29.000000000000000,
            2.0828170409973053e-7,
        ),
        welch: (
            10.482297374112560,
            11.405399030094461,
            3.3658309023957231e-7,
        ),
        var_f: (
            3.9837161399972585,
            25.000000000000000,
            4.0000000000000000,
            0.093702050911761173,
            5.7687152631469667,
        ),
    },
    StatsCase {
        groups: &[
            &[
                670.0, 135.0, 1.0, 373.0, 304.0, 645.0, 984.0, 635.0, 427.0, 308.0, 1.0, 648.0,
                992.0, 372.0, 988.0, 364.0, 675.0, 44.0, 337.0, 1.0, 759.0,
            ],
            &[
                3614.0, 3493.0, 3758.0, 3542.0, 3683.0, 3508.0, 3359.0, 3500.0, 3884.0, 3820.0,
                3460.0, 3462.0, 3266.0, 3190.0, 3853.0, 3541.0, 3481.0, 3435.0, 3344.0, 3263.0,
                3403.0,
            ],
            &[
                2608.0, 3416.0, 3410.0, 3561.0, 3478.0, 3442.0, 2901.0, 2368.0, 2691.0, 2763.0,
                3528.0, 2446.0, 3147.0, 2599.0, 2826.0, 2584.0, 2751.0, 2426.0, 2898.0, 3520.0,
                2378.0,
            ],
        ],
        anova_f: 502.25783009813444,
        anova_df: (2.0000000000000000, 60.000000000000000),
        anova_p: 3.3882532875262101e-38,
        pooled: (
            -36.990581792303270,
            40.000000000000000,
            1.4839798350135974e-32,
        ),
        welch: (
            -36.990581792303270,
            32.640869320364799,
            3.1684620073302258e-28,
        ),
        var_f: (
            2.8082450536531236,
            20.000000000000000,
            20.000000000000000,
            0.012774661793229519,
            2.1241552129197360,
        ),
    },
    StatsCase {
        groups: &[
            &[
                3183.0, 3726.0, 3945.0, 3012.0, 2708.0, 2857.0, 4000.0, 2704.0, 2763.0, 3574.0,
                3371.0, 3818.0, 4000.0,
            ],
            &[
                3396.0, 3160.0, 3063.0, 2730.0, 3154.0, 2192.0, 2940.0, 2415.0, 2469.0,
            ],
            &[
                902.0, 742.0, 1046.0, 1023.0, 1034.0, 643.0, 576.0, 589.0, 612.0, 679.0, 986.0,
                581.0, 704.0, 868.0, 964.0, 766.0, 742.0, 1060.0, 1153.0, 1039.0, 633.0, 870.0,
                1085.0,
            ],
            &[
                1911.0, 1723.0, 1874.0, 1796.0, 1937.0, 1721.0, 1818.0, 1705.0,
            ],
        ],
        anova_f: 187.42963608355268,
        anova_df: (3.0000000000000000, 49.000000000000000),
        anova_p: 7.6376095659003519e-27,
        pooled: (2.5464601261903813, 20.000000000000000, 0.019222292491681090),
        welch: (2.6610195663906771, 19.548924550892949, 0.015189734005017564),
        var_f: (
            1.6002318771900450,
            12.000000000000000,
            8.0000000000000000,
            0.25693556821777225,
            3.2839390057264063,
        ),
    },
    StatsCase {
        groups: &[
            &[
                1838.0, 1934.0, 1962.0, 2066.0, 2117.0, 1953.0, 2117.0, 1764.0,
            ],
            &[
                1805.0, 752.0, 1003.0, 1023.0, 1487.0, 731.0, 1382.0, 1676.0, 1836.0, 1688.0,
            ],
            &[
                2603.0, 3214.0, 3624.0, 2644.0, 2555.0, 3631.0, 2933.0, 3131.0, 3069.0, 2959.0,
                3000.0, 2536.0, 2825.0, 2539.0, 2484.0, 2750.0,
            ],
            &[
                487.0, 722.0, 599.0, 730.0, 577.0, 538.0, 544.0, 440.0, 441.0, 687.0, 868.0,
            ],
            &[
                1728.0, 1455.0, 1570.0, 1551.0, 1316.0, 1655.0, 1738.0, 1354.0, 1477.0, 1370.0,
                1721.0,
            ],
        ],
        anova_f: 117.03979924078539,
        anova_df: (4.0000000000000000, 51.000000000000000),
        anova_p: 4.8194330590310398e-25,
        pooled: (
            4.0034227423554442,
            16.000000000000000,
            0.0010246253971114356,
        ),
        welch: (
            4.4180681353237240,
            10.934915705533301,
            0.0010466012881075520,
        ),
        var_f: (
            11.265772548577885,
            9.0000000000000000,
            7.0000000000000000,
            0.0021302908914668362,
            3.6766746989395122,
        ),
    },
    StatsCase {
        groups: &[
            &[
                3053.0, 2990.0, 3004.0, 3025.0, 3062.0, 3046.0, 2973.0, 2991.0, 3059.0, 2980.0,
                3044.0, 3007.0, 3059.0, 3048.0, 3060.0, 3012.0, 3022.0, 3020.0, 3062.0, 2985.0,
                3067.0, 3052.0, 2999.0, 3011.0, 3023.0, 2987.0, 3061.0, 2988.0, 3057.0,
            ],
            &[
                3652.0, 3625.0, 3531.0, 3378.0, 3686.0, 3705.0, 3464.0, 3524.0, 3333.0, 3621.0,
                3534.0, 3433.0, 3723.0, 3519.0, 3460.0, 3552.0, 3423.0, 3385.0, 3398.0, 3577.0,
                3444.0, 3502.0, 3601.0, 3314.0, 3488.0, 3389.0,
            ],
        ],
        anova_f: 479.38968249760291,
        anova_df: (1.0000000000000000, 53.000000000000000),
        anova_p: 3.2201839151178896e-28,
        pooled: (
            -21.894969342239393,
            53.000000000000000,
            3.2201839151178896e-28,
        ),
        welch: (
            -20.865047343482349,
            28.230428065989767,
            1.0708063936531507e-18,
        ),
        var_f: (
            13.872980511254173,
            25.000000000000000,
            28.000000000000000,
            4.8501712348748615e-10,
            1.9056693344884304,
        ),
    },
    StatsCase {
        groups: &[
            &[
                3091.0, 4000.0, 3904.0, 3596.0, 4000.0, 3947.0, 3559.0, 3307.0, 3031.0, 3578.0,
            ],
            &[
                3842.0, 3175.0, 3317.0, 3439.0, 2401.0, 2460.0, 3577.0, 2484.0, 3285.0, 3124.0,
                3028.0, 3416.0, 3699.0,
            ],
            &[
                5.0, 695.0, 154.0, 470.0, 588.0, 595.0, 953.0, 313.0, 637.0, 253.0, 563.0, 1066.0,
                712.0, 726.0, 946.0, 631.0, 1.0, 555.0, 259.0, 558.0, 529.0, 1.0, 909.0, 953.0,
                1.0, 1.0, 333.0,
            ],
        ],
        anova_f: 360.88077928017506,
        anova_df: (2.0000000000000000, 47.000000000000000),
        anova_p: 3.0074310887786590e-29,
        pooled: (2.3769075786305110, 21.000000000000000, 0.027043373914831218),
        welch: (2.4581236322580176, 20.988374825872964, 0.022744814055761251),
        var_f: (
            1.6530814700938972,
            12.000000000000000,
            9.0000000000000000,
            0.22846166057972311,
            3.0729471218780928,
        ),
    },
    StatsCase {
        groups: &[
            &[
                1242.0, 1093.0, 1326.0, 1091.0, 976.0, 1083.0, 1070.0, 1517.0, 1501.0, 1263.0,
                717.0, 1211.0, 526.0, 986.0, 849.0, 1180.0, 878.0, 480.0, 993.0,
            ],
            &[
                3642.0, 3487.0, 3611.0, 3487.0, 3625.0, 3443.0, 3556.0, 3568.0, 3555.0, 3560.0,
                3568.0, 3655.0, 3650.0, 3450.0, 3469.0, 3577.0, 3646.0, 3528.0, 3490.0, 3505.0,
                3488.0, 3457.0, 3652.0, 3638.0, 3570.0, 3603.0, 3444.0, 3523.0, 3541.0,
            ],
            &[
                1032.0, 1680.0, 1533.0, 1310.0, 1673.0, 1686.0, 1378.0, 1069.0, 1341.0, 1530.0,
                1444.0, 1281.0, 1158.0, 1556.0, 1584.0, 1257.0, 1023.0, 1659.0, 1689.0, 1586.0,
                1404.0,
            ],
            &[
                611.0, 736.0, 1029.0, 988.0, 1081.0, 582.0, 1072.0, 773.0, 808.0, 1164.0, 652.0,
                1156.0, 447.0, 1258.0, 1271.0, 1185.0, 658.0,
            ],
        ],
        anova_f: 845.34987174896855,
        anova_df: (3.0000000000000000, 82.000000000000000),
        anova_p: 1.5322138068630994e-61,
        pooled: (
            -46.012611811417400,
            46.000000000000000,
            4.0650080669719659e-40,
        ),
        welch: (
            -38.013553718970098,
            19.476339985743122,
            9.6305390920847373e-20,
        ),
        var_f: (
            16.075242794306812,
            18.000000000000000,
            28.000000000000000,
            2.7880414848166703e-10,
            1.9867847814964754,
        ),
    },
    StatsCase {
        groups: &[
            &[
                752.0, 841.0, 1005.0, 1342.0, 1550.0, 1120.0, 1757.0, 248.0, 1014.0, 879.0, 1628.0,
                1524.0, 158.0, 1590.0, 1421.0, 1038.0, 739.0, 887.0, 1327.0, 586.0, 1441.0, 281.0,
                316.0, 950.0,
            ],
            &[
                1827.0, 1785.0, 2742.0, 2627.0, 1878.0, 2590.0, 2856.0, 2364.0, 2669.0, 1647.0,
                2332.0, 1792.0, 2969.0, 2789.0, 1882.0, 2702.0, 2497.0, 2749.0,
            ],
            &[
                1053.0, 1233.0, 1960.0, 1124.0, 902.0, 1133.0, 1060.0, 1098.0, 989.0, 1760.0,
                1614.0, 912.0, 1913.0, 1550.0, 1634.0, 1096.0,
            ],
            &[
                972.0, 1007.0, 1169.0, 808.0, 1161.0, 1062.0, 778.0, 1146.0, 805.0, 1135.0, 750.0,
                484.0, 727.0, 1078.0,
            ],
            &[
                2087.0, 1594.0, 1997.0, 1460.0, 1607.0, 2150.0, 1718.0, 1514.0, 1422.0, 1751.0,
                1835.0, 1608.0, 1448.0, 1726.0, 1492.0, 1663.0, 1784.0, 1686.0, 1840.0, 1402.0,
                1926.0, 1502.0, 1781.0, 1705.0, 1633.0, 2061.0, 1831.0, 1421.0,
            ],
        ],
        anova_f: 49.486092235683193,
        anova_df: (4.0000000000000000, 95.000000000000000),
        anova_p: 1.9469401650211309e-22,
        pooled: (
            -9.4473161851537519,
            40.000000000000000,
            9.6950983262597970e-12,
        ),
        welch: (
            -9.5292725220369814,
            37.868403534720988,
            1.3273515564988634e-11,
        ),
        var_f: (
            1.1253984982976347,
            23.000000000000000,
            17.000000000000000,
            0.40737798099242032,
            2.1987093664647849,
        ),
    },
    StatsCase {
        groups: &[
            &[1917.0, 1821.0, 1948.0, 1604.0, 1736.0],
            &[
                1779.0, 2109.0, 2031.0, 1893.0, 1625.0, 1522.0, 2140.0, 1563.0, 2004.0, 1921.0,
            ],
        ],
        anova_f: 0.23061735483565874,
        anova_df: (1.0000000000000000, 13.000000000000000),
        anova_p: 0.63904631839507808,
        pooled: (
            -0.48022635791432641,
            13.000000000000000,
            0.63904631839507808,
        ),
        welch: (
            -0.56315487877234478,
            12.088822404372189,
            0.58362384377783102,
        ),
        var_f: (
            2.6040069310180060,
            9.0000000000000000,
            4.0000000000000000,
            0.18508597535042530,
            5.9987790312102519,
        ),
    },
    StatsCase {
        groups: &[
            &[
                1132.0, 628.0, 611.0, 1096.0, 1295.0, 1288.0, 842.0, 1011.0, 970.0, 619.0, 551.0,
            ],
            &[
                2081.0, 2825.0, 2355.0, 2363.0, 2541.0, 2224.0, 1843.0, 1969.0, 2003.0, 2199.0,
                2350.0, 2459.0, 2358.0, 2408.0, 1881.0, 2313.0, 2316.0, 2075.0, 2686.0, 2492.0,
                2106.0, 2513.0, 2258.0, 2704.0, 2579.0, 2225.0,
            ],
            &[
                3386.0, 2851.0, 3320.0, 2824.0, 2589.0, 2488.0, 2019.0, 2798.0, 2903.0, 2008.0,
                2036.0, 2286.0, 2465.0, 2033.0, 2606.0, 3100.0, 2405.0, 3203.0, 3467.0, 1910.0,
                2692.0, 2118.0, 3205.0, 3269.0, 2483.0,
            ],
        ],
        anova_f: 87.032047322794568,
        anova_df: (2.0000000000000000, 59.000000000000000),
        anova_p: 2.5096367399601355e-18,
        pooled: (
            -14.953887357737990,
            35.000000000000000,
            9.0406932059627482e-17,
        ),
        welch: (
            -14.355259967631121,
            17.324887108742587,
            4.7112748946875895e-11,
        ),
        var_f: (
            1.2168294362170864,
            10.000000000000000,
            25.000000000000000,
            0.32769328885136043,
            2.2364735810505132,
        ),
    },
    StatsCase {
        groups: &[
            &[
                1921.0, 1846.0, 1590.0, 2318.0, 2289.0, 2135.0, 2377.0, 1848.0, 2965.0, 3107.0,
                3028.0, 1573.0, 2659.0, 1597.0, 2046.0, 3071.0, 1720.0, 2316.0, 2067.0, 2018.0,
                2465.0, 2907.0, 2090.0, 3014.0, 2733.0, 2060.0, 3009.0,
            ],
            &[
                4000.0, 4000.0, 4000.0, 2963.0, 4000.0, 3611.0, 4000.0, 4000.0, 4000.0, 3166.0,
                3547.0, 3336.0, 3989.0, 3308.0, 4000.0, 3032.0, 4000.0,
            ],
            &[
                1848.0, 908.0, 1070.0, 1731.0, 849.0, 1706.0, 1223.0, 1188.0, 1116.0,
            ],
            &[
                1379.0, 1679.0, 2360.0, 1330.0, 958.0, 1132.0, 888.0, 1031.0, 1602.0, 1221.0,
            ],
        ],
        anova_f: 83.413532687831023,
        anova_df: (3.0000000000000000, 59.000000000000000),
        anova_p: 3.3489790833133642e-21,
        pooled: (
            -9.5309711577668793,
            42.000000000000000,
            4.6149948784811826e-12,
        ),
        welch: (
            -10.092778391377982,
            39.984750903372818,
            1.4851341392567315e-12,
        ),
        var_f: (
            1.6532300358889020,
            26.000000000000000,
            16.000000000000000,
            0.14851396181117500,
            2.2195931083405957,
        ),
    },
    StatsCase {
        groups: &[
            &[
                3353.0, 3329.0, 2606.0, 2881.0, 3046.0, 2848.0, 2928.0, 3329.0, 3226.0, 3157.0,
                3064.0, 2872.0, 2662.0, 3277.0, 2733.0, 2673.0, 3280.0,
            ],
            &[
                635.0, 951.0, 591.0, 666.0, 890.0, 561.0, 852.0, 518.0, 691.0, 665.0,
            ],
            &[
                163.0, 484.0, 420.0, 594.0, 233.0, 262.0, 433.0, 576.0, 411.0, 283.0, 501.0, 597.0,
                418.0, 332.0, 677.0, 504.0, 329.0, 287.0, 440.0, 155.0, 575.0, 174.0, 312.0, 429.0,
                211.0, 340.0, 448.0,
            ],
            &[
                2642.0, 1840.0, 2394.0, 2725.0, 2186.0, 2291.0, 2010.0, 1901.0, 1885.0, 1868.0,
                2554.0, 2138.0, 2619.0, 2161.0, 2669.0, 2403.0, 2262.0, 2519.0, 2340.0, 2709.0,
                2231.0, 2627.0, 2180.0, 2531.0, 2394.0, 1886.0,
            ],
            &[
                1791.0, 1916.0, 1946.0, 1689.0, 1680.0, 1694.0, 1735.0, 2028.0, 1687.0, 1729.0,
                1825.0, 1840.0, 2000.0, 1691.0, 2007.0, 1974.0, 1869.0, 1783.0, 2032.0, 1692.0,
                1699.0, 2004.0, 1664.0, 1713.0, 1699.0, 1774.0, 1949.0, 1757.0, 1912.0,
            ],
        ],
        anova_f: 570.79742708987477,
        anova_df: (4.0000000000000000, 104.00000000000000),
        anova_p: 8.7280480231213610e-70,
        pooled: (
            25.718328645464145,
            25.000000000000000,
            1.6705370370683967e-19,
        ),
        welch: (
            29.575265778285254,
            24.990759355771171,
            5.7234190782880205e-21,
        ),
        var_f: (
            3.1464808743901540,
            16.000000000000000,
            9.0000000000000000,
            0.042916184175794895,
            2.9889655573087758,
        ),
    },
    StatsCase {
        groups: &[
            &[
                1105.0, 987.0, 1223.0, 1077.0, 1184.0, 1079.0, 1152.0, 1206.0, 978.0, 1201.0,
                1206.0,
            ],
            &[3661.0, 3378.0, 3630.0, 3288.0, 3552.0, 3605.0],
        ],
        anova_f: 1732.1515410692790,
        anova_df: (1.0000000000000000, 15.000000000000000),
        anova_p: 6.4791496745932717e-17,
        pooled: (
            -41.619124703305319,
            15.000000000000000,
            6.4791496745932717e-17,
        ),
        welch: (
            -35.587730226943105,
            6.9194563086826166,
            4.2782195990731195e-9,
        ),
        var_f: (
            2.9233815703438952,
            5.0000000000000000,
            10.000000000000000,
            0.070003638931638097,
            3.3258345304130120,
        ),
    },
    StatsCase {
        groups: &[
            &[
                3449.0, 3718.0, 3722.0, 3933.0, 2781.0, 2834.0, 3003.0, 3052.0, 3238.0, 3171.0,
                2867.0, 3304.0, 3206.0, 2736.0,
            ],
            &[
                2019.0, 1679.0, 1515.0, 2039.0, 1321.0, 1774.0, 1606.0, 1462.0, 1760.0, 1706.0,
                1985.0, 1728.0, 1356.0, 1796.0, 1268.0, 2092.0, 1328.0, 2100.0,
            ],
            &[2717.0, 3251.0, 2796.0, 2983.0, 2930.0, 3047.0],
        ],
        anova_f: 104.40684075647774,
        anova_df: (2.0000000000000000, 35.000000000000000),
        anova_p: 1.7687828226000430e-15,
        pooled: (
            13.125480251646500,
            30.000000000000000,
            5.7526481282074356e-14,
        ),
        welch: (
            12.635698982985695,
            23.183340226489099,
            6.9985793941146225e-12,
        ),
        var_f: (
            1.8325339553143423,
            13.000000000000000,
            17.000000000000000,
            0.12034451226197823,
            2.3530625335528835,
        ),
    },
    StatsCase {
        groups: &[
            &[
                2713.0, 2986.0, 3019.0, 2552.0, 2571.0, 2857.0, 2785.0, 2913.0, 2820.0, 2832.0,
            ],
            &[
                3419.0, 3167.0, 3229.0, 3212.0, 3270.0, 3496.0, 3727.0, 3258.0, 3528.0, 3219.0,
                3170.0, 3305.0, 3221.0, 3555.0, 3367.0, 3636.0, 3367.0, 3451.0, 3513.0, 3548.0,
                3572.0, 3438.0, 3408.0, 3663.0, 3157.0, 3279.0, 3346.0, 3413.0, 3517.0, 3327.0,
            ],
            &[
                1054.0, 1256.0, 1215.0, 1565.0, 1435.0, 2580.0, 1920.0, 1381.0, 2001.0, 1637.0,
                1922.0, 1461.0, 2629.0, 2520.0, 1573.0, 2591.0, 1069.0, 2638.0, 2021.0, 1273.0,
                1859.0, 1556.0, 1174.0, 2131.0,
            ],
            &[
                1120.0, 454.0, 638.0, 876.0, 472.0, 1036.0, 1171.0, 567.0, 1027.0, 1225.0,
            ],
        ],
        anova_f: 184.85671568240165,
        anova_df: (3.0000000000000000, 70.000000000000000),
        anova_p: 3.4445624114184220e-33,
        pooled: (
            -10.177530590731471,
            38.000000000000000,
            2.0887231146658964e-12,
        ),
        welch: (
            -10.233390828829204,
            15.611204927324654,
            2.5214799306526469e-8,
        ),
        var_f: (
            1.0215657580613253,
            29.000000000000000,
            9.0000000000000000,
            0.52258319818915256,
            2.8687831715839087,
        ),
    },
    StatsCase {
        groups: &[
            &[
                1471.0, 1515.0, 1565.0, 1499.0, 1535.0, 1450.0, 1496.0, 1434.0, 1448.0, 1463.0,
                1467.0, 1484.0, 1539.0, 1585.0, 1521.0, 1429.0, 1529.0, 1494.0, 1399.0, 1528.0,
                1554.0, 1386.0, 1481.0, 1570.0,
            ],
            &[
                957.0, 322.0, 250.0, 1142.0, 1293.0, 311.0, 1594.0, 1554.0, 158.0,
            ],
            &[
                2401.0, 1859.0, 2377.0, 2078.0, 2314.0, 1743.0, 2446.0, 2527.0, 2421.0,
            ],
            &[
                3054.0, 2628.0, 3689.0, 3580.0, 2650.0, 4000.0, 4000.0, 4000.0, 3815.0, 3810.0,
                3318.0, 2589.0, 3175.0, 3327.0, 2873.0, 2821.0, 2691.0, 2739.0, 3499.0, 3015.0,
                2655.0, 3954.0, 3257.0, 3371.0,
            ],
            &[
                3212.0, 3072.0, 3863.0, 3260.0, 3918.0, 3995.0, 3404.0, 3732.0, 3842.0, 4000.0,
                3498.0, 3784.0, 3094.0, 3390.0,
            ],
        ],
        anova_f: 139.68684401730919,
        anova_df: (4.0000000000000000, 75.000000000000000),
        anova_p: 5.9595355411861666e-34,
        pooled: (
            5.5279589176675860,
            31.000000000000000,
            4.7259934500247508e-6,
        ),
        welch: (3.3264967482406780, 8.0494046003496478, 0.010347750337838493),
        var_f: (
            121.56793804894677,
            8.0000000000000000,
            23.000000000000000,
            5.8163543005322088e-17,
            2.3748121258206283,
        ),
    },
];

/// Four groups whose ANOVA p-values force the partition {A,B,C} | {OUT}.
pub const PARTITION_GROUPS: &[&[f64]] = &[
    &[
        1643.0, 1359.0, 1413.0, 1318.0, 1412.0, 1367.0, 1270.0, 1312.0, 1245.0, 1496.0, 1224.0,
        1426.0, 1629.0, 1761.0, 1532.0, 1652.0, 1689.0, 1580.0, 1522.0, 1716.0, 1241.0, 1751.0,
        1566.0, 1308.0, 1377.0, 1282.0, 1362.0, 1704.0, 1538.0, 1323.0,
    ],
    &[
        1490.0, 1238.0, 1437.0, 1749.0, 1255.0, 1764.0, 1358.0, 1708.0, 1507.0, 1546.0, 1714.0,
        1419.0, 1720.0, 1389.0, 1260.0, 1581.0, 1655.0, 1202.0, 1303.0, 1645.0, 1757.0, 1293.0,
        1776.0, 1576.0, 1695.0, 1228.0, 1310.0, 1668.0, 1345.0, 1379.0,
    ],
    &[
        1452.0, 1246.0, 1498.0, 1285.0, 1714.0, 1507.0, 1255.0, 1419.0, 1387.0, 1647.0, 1407.0,
        1441.0, 1384.0, 1213.0, 1241.0, 1530.0, 1724.0, 1693.0, 1247.0, 1479.0, 1680.0, 1546.0,
        1586.0, 1295.0, 1625.0, 1259.0, 1244.0, 1305.0, 1499.0, 1351.0,
    ],
    &[
        3982.0, 3829.0, 3856.0, 3974.0, 3859.0, 3851.0, 3807.0, 3951.0, 3977.0, 3933.0, 3895.0,
        3832.0, 3864.0, 3821.0, 3901.0, 3825.0, 3932.0, 3932.0, 3899.0, 3806.0, 3800.0, 3921.0,
        3984.0, 3990.0, 3950.0, 3938.0, 3871.0, 3860.0, 3818.0, 3839.0,
    ],
];

/// ANOVA p over all four partition groups.
pub const PARTITION_P_ALL: f64 = 1.7433535838807043e-97;
/// ANOVA p over the three base groups once OUT is removed.
pub const PARTITION_P_REMAINING: f64 = 0.41619884362343652;
