"""Frozen expected values for the regression and acceptance suites.

TABLE1: curated crosscorrelation values (n -> tuple of (shift, value)).
TABLE2: coefficient-table entries (t -> tuple of (j, A, B, Gamma, Delta)).
TABLE3: peak crosscorrelation reports (n -> tuple of (shift, signed value)).
TABLE4: peak sidelobe reports at positive shifts (n -> same layout;
        level 0 has no nonzero sidelobes).
"""

TABLE1 = {
    0: ((0, 1),),
    1: ((-1, -1), (1, 1)),
    2: ((-3, 1), (-1, 1), (1, 3), (3, -1)),
    3: ((-5, -1), (-3, -5), (-1, 3), (1, 1), (3, 1), (5, 1)),
    4: ((-11, 5), (-7, 1), (-5, 1), (-3, 5), (3, 7), (5, 3), (7, 3), (11, -5)),
    5: (
        (-21, -1),
        (-13, -9),
        (-11, -13),
        (-9, 3),
        (-5, 7),
        (5, -3),
        (9, 9),
        (11, -7),
        (13, 5),
        (21, 1),
    ),
    6: (
        (-43, 13),
        (-41, -3),
        (-27, 13),
        (-23, -7),
        (-21, 9),
        (-11, 5),
        (11, 7),
        (19, 15),
        (21, -5),
        (27, 7),
        (41, 3),
        (43, -13),
    ),
    7: (
        (-85, -9),
        (-53, -9),
        (-45, -33),
        (-43, -21),
        (-23, 15),
        (-21, -1),
        (21, -27),
        (23, 21),
        (37, 21),
        (43, -31),
        (53, 5),
        (85, 9),
    ),
    8: (
        (-107, 53),
        (-105, -27),
        (-91, 5),
        (-85, 49),
        (-43, -19),
        (43, -1),
        (75, 15),
        (85, -13),
        (105, 15),
        (107, -1),
        (171, -21),
    ),
    9: (
        (-181, -33),
        (-171, -29),
        (85, -83),
        (149, -3),
        (151, 45),
        (171, -55),
        (213, -19),
    ),
    10: ((-363, 109), (-361, -99), (-341, 153), (299, -57)),
}

TABLE2 = {
    1: ((-1, -1, 0, 2, 0), (0, 0, 1, 0, 2)),
    2: ((-1, 2, -1, 0, -2), (0, 1, 2, 2, 0)),
    3: ((-2, -3, -2, 2, 0), (-1, 0, 3, 0, 2), (0, 1, 0, 6, 0), (1, 2, -1, 0, 6)),
    4: ((-4, 1, 0, -10, 0), (-3, 2, -1, 0, -10), (1, 6, 1, 0, 2), (2, -3, 6, 2, 0)),
    5: ((-6, -3, -10, 2, 0), (2, -5, 2, 14, 0), (4, 9, 0, 6, 0), (5, 2, -9, 0, 6)),
    6: (
        (-12, -7, 0, -26, 0),
        (-11, 2, 7, 0, -26),
        (5, 14, -7, 0, -6),
        (9, 6, 9, 0, 18),
        (10, -11, 6, -14, 0),
    ),
    7: (
        (-23, -26, -7, 0, -14),
        (-22, 5, -26, 18, 0),
        (10, -21, -6, 14, 0),
        (11, 0, 21, 0, 14),
        (18, 3, 18, 30, 0),
        (21, -14, -17, 0, -10),
    ),
    8: (
        (-46, 19, -14, -66, 0),
        (-43, 18, 31, 0, -42),
        (21, 14, -15, 0, -54),
        (37, 30, -15, 0, 42),
        (42, -3, -10, -62, 0),
    ),
    9: (
        (-91, -66, 33, 0, 10),
        (-86, 13, -42, 98, 0),
        (42, -29, -54, -2, 0),
        (74, -45, 42, 30, 0),
    ),
    10: (
        (-182, 99, 10, -66, 0),
        (-181, 0, -99, 0, -66),
        (-171, 98, 55, 0, -58),
        (149, 30, -87, 0, -6),
    ),
}

TABLE3 = {
    0: ((0, 1),),
    1: ((-1, -1), (1, 1)),
    2: ((1, 3),),
    3: ((-3, -5),),
    4: ((3, 7),),
    5: ((-11, -13),),
    6: ((13, 19),),
    7: ((-45, -33),),
    8: ((-107, 53),),
    9: ((-179, -85),),
    10: ((-341, 153),),
    11: ((-717, -217),),
    12: ((-1451, 373),),
    13: ((-2867, -557),),
    14: ((-5453, 961),),
    15: ((-10923, -1717),),
    16: ((-22955, 2445),),
    17: ((-43691, -4285),),
    18: ((-91733, 6257),),
    19: ((-174765, -11153),),
    20: ((-349525, 19041),),
    21: ((-699059, -28293),),
    22: ((-1398101, 53321),),
    23: ((-2796237, -72905),),
    24: ((-5592403, 129485),),
    25: ((-11184811, -214365),),
    26: ((-22369613, 342769),),
}

TABLE4 = {
    0: (),
    1: ((1, 1),),
    2: ((1, 1), (3, -1)),
    3: ((3, 3),),
    4: ((11, -5),),
    5: ((13, 7),),
    6: ((43, -13),),
    7: ((51, 19),),
    8: ((173, -33),),
    9: ((363, 53),),
    10: ((691, -85),),
    11: ((1365, 153),),
    12: ((2765, -217),),
    13: ((5547, 373),),
    14: ((11059, -557),),
    15: ((21837, 961),),
    16: ((43691, -1717),),
    17: ((88491, 2445),),
    18: ((174763, -4285),),
    19: ((353877, 6257),),
    20: ((699053, -11153),),
    21: ((1398101, 19041),),
    22: ((2796211, -28293),),
    23: ((5592405, 53321),),
    24: ((11184845, -72905),),
    25: ((22369619, 129485),),
    26: ((44739243, -214365),),
    27: ((89478477, 342769),),
}
