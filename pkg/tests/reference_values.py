"""Frozen reference values generated by tests/oracles.py (mpmath, 40 digits)."""

LOG_GAMMA = {
    0.001: 6.907178885383853,
    0.1: 2.252712651734206,
    0.5: 0.5723649429247001,
    1.5: -0.12078223763524522,
    2.5: 0.2846828704729192,
    7.3: 7.147892523022249,
    33.3: 82.60372358165495,
    1000.5: 5908.674175848678,
    123456.7: 1323900.9753909183,
    1000000.0: 12815504.569147611,
}
DIGAMMA = {
    0.001: -1000.5755719318103,
    0.1: -10.423754940411078,
    0.5: -1.9635100260214235,
    1.5: 0.03648997397857652,
    3.7: 1.1671535393615113,
    10.0: 2.251752589066721,
    250.25: 5.520461085528791,
    1000000.0: 13.815510057964191,
}
REG_LOWER_GAMMA = {
    (0.01, 0.001): 0.938570652526129,
    (0.5, 0.3): 0.5614219739190002,
    (3.0, 2.5): 0.45618688411667047,
    (9.6, 9.5): 0.5301090734918903,
    (50.0, 47.0): 0.34987546433902095,
    (1000.0, 990.0): 0.3795213785379639,
    (250.0, 300.0): 0.9986225281224718,
}
REG_LOWER_GAMMA_DX = {
    (1.0, 1.0): -0.4317297106348987,
    (0.01, 0.5): -0.5655459117152578,
    (0.3, 0.2): -1.0233803072203944,
    (5.0, 4.2): -0.18398574290989428,
    (1000.0, 999.6): -0.012618228241978514,
}
MEDIAN = {
    0.001: 5.244206408277902e-302,
    0.01: 4.465535018910349e-31,
    0.1: 0.0005933911044602259,
    0.5: 0.2274682115597864,
    3.0: 2.6740603137235603,
    10.0: 9.668714614714132,
    100.0: 99.66686491931549,
    1000.0: 999.6666864269652,
    12345.6: 12345.266668266724,
    1000000.0: 999999.6666666864,
}
MEDIAN_PRIME = {
    0.001: 3.6350111951608094e-296,
    0.01: 3.095636740913867e-27,
    0.1: 0.04159774236484446,
    1.0: 0.9680448304420445,
    2.0: 0.9932948937261024,
    10.0: 0.9997879018331384,
    1000.0: 0.9999999802324887,
}
MEDIAN_SECOND = {
    0.001: 2.5123307342198418e-290,
    0.01: 2.0840785338064727e-23,
    0.1: 2.0941554904699284,
    1.0: 0.07161694213508339,
    2.0: 0.007501742148719071,
    10.0: 4.388552851076881e-05,
    1000.0: 3.9549449311770797e-11,
}
TOWER = {
    0.01: {"m": 4.465535018910349e-31, "phi": 65.2785786646134, "phi_prime": -6832.2863392732825, "xphi": 0.6527857866461341, "xphi_prime": -3.044284728119417, "xphi_second": 98.37878647168678, "g": 0.6427857866461341, "A": 0.4642979190952242, "neg_A_prime": 3.1020474432278515, "B": 1.1364647541761332, "neg_B_prime": 42.15409143900346},
    0.1: {"m": 0.0005933911044602259, "phi": 5.127071748024276, "phi_prime": -60.10172894769556, "xphi": 0.5127071748024276, "xphi_prime": -0.88310114674528, "xphi_second": 8.308589799378865, "g": 0.41330056590688785, "A": 0.2518042597239495, "neg_A_prime": 1.8768408688911766, "B": 0.3323348623062932, "neg_B_prime": 2.5432933360812733},
    1.0: {"m": 0.6931471805599453, "phi": 0.36651292058166435, "phi_prime": -0.396593476236935, "xphi": 0.36651292058166435, "xphi_prime": -0.030080555655270694, "xphi_second": 0.053964978131779674, "g": 0.059660101141609634, "A": 0.006614556434652679, "neg_A_prime": 0.013349907234467068, "B": 0.0217238745955426, "neg_B_prime": 0.03573167748403073},
    2.0: {"m": 1.6783469900166605, "phi": 0.1753378060399931, "phi_prime": -0.09182928180795444, "xphi": 0.3506756120799862, "xphi_prime": -0.008320757575915777, "xphi_second": 0.007925792754816809, "g": 0.02902260209664686, "A": 0.001618884094059847, "neg_A_prime": 0.0016465519103211015, "B": 0.006463854123125049, "neg_B_prime": 0.005931069524546938},
    10.0: {"m": 9.668714614714132, "phi": 0.03368971741957647, "phi_prime": -0.0034044277521266425, "xphi": 0.3368971741957647, "xphi_prime": -0.0003545601016899548, "xphi_second": 7.05120766044307e-05, "g": 0.005611788909895852, "A": 6.245622358702766e-05, "neg_A_prime": 1.256126016396257e-05, "B": 0.00029011973416193505, "neg_B_prime": 5.7356435684542024e-05},
    100.0: {"m": 99.66686491931549, "phi": 0.00333691211048141, "phi_prime": -3.3404893982856256e-05, "xphi": 0.333691211048141, "xphi_prime": -3.5772878042152826e-06, "xphi_second": 7.15155788491576e-08, "g": 0.0005561303636297446, "A": 6.180358441957641e-07, "neg_A_prime": 1.2368210059964028e-08, "B": 2.9572630747431585e-06, "neg_B_prime": 5.908770403504718e-08},
    1000.0: {"m": 999.6666864269652, "phi": 0.00033336913435037265, "phi_prime": -3.3340493391334685e-07, "xphi": 0.33336913435037263, "xphi_prime": -3.5799562974228585e-08, "xphi_second": 7.159621388240343e-11, "g": 5.556131555468322e-05, "A": 6.1735937089053155e-09, "neg_A_prime": 1.2347941364998968e-11, "B": 2.9623980249764808e-08, "neg_B_prime": 5.924230548163166e-11},
}
MEDIAN_TWO_BISECTION = 1.6783469900166605
XPHI_SMALL = {0.001: 0.6868158188792466}
