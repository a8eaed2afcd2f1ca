"""Golden obstruction tables for p in {2, 3, 5, 7, 11}, n < 1000.

Keyed by (p, a_p, b_p) in row order. Each entry is the full ordered list
of obstructed n; entries that disappear under an index-2 image ("red")
are wrapped as ("red", n).
"""

R = lambda n: ("red", n)

TABLE_2 = {
    (0, 1): [3, R(5), 9, 11, 15, R(17), 21, R(27), 33, 43, 51, 57, 63, 85, 91,
             93, 105, 117, 129, 171, 195, 255, R(257), 273, 315, 331, 341, 381,
             455, 513, 585, R(657), 683, 771, 819, 993],
    (1, 1): [11],
    (-1, 1): [11, 23],
    (2, 1): [5, 13, 15, R(17), 41, 51, 65, 85, 91, 105, 117, R(145), 195, 205,
             255, R(257), 273, 315, 455, 565, 585, 771, 819],
    (-2, 1): [5, 13, 15, R(17), 41, 51, 65, 85, 91, 105, 117, R(145), 195, 205,
              255, R(257), 273, 315, 455, 565, 585, 771, 819],
}

_SS3 = [4, 7, 8, 14, 16, 20, 28, 40, 52, 56, 61, 80, 91, 104, 122, 160, 164,
        182, 205, 244, 259, 266, 328, 364, 410, 484, 488, 518, 532, 547, 656,
        661, 671, 703, 728, 820, 949, 968]

TABLE_3 = {
    (0, 1): list(_SS3),
    (0, 2): [R(2)] + list(_SS3),
    (1, 1): [5, R(40)],
    (-1, 1): [5, R(23), R(40)],
    (2, 1): [R(4), 11, R(22), 136, 272],
    (-2, 1): [R(4), R(22), 136, 272],
    (3, 1): [7, 14, 28, 52, 56, 91, 104, 182, 259, 266, 364, 518, 532, 703,
             728, 949],
    (-3, 1): [7, 14, 28, 52, 56, 91, 104, 182, 259, 266, 364, 518, 532, 703,
              728, 949],
}

TABLE_5 = {
    (0, 1): [3, 6, 8, 12, R(18), 21, 24, 39, 42, 48, 52, 63, 78, 104, 126, 156,
             R(186), 208, 217, 248, 252, 279, 312, 372, 434, 449, 504, 521, 558,
             624, 651, 744, 868, 898, 939],
    (1, 1): [11, 28, 56],
    (-1, 1): [28, 56],
    (2, 1): [],
    (-2, 1): [],
    (2, 2): [R(2), 4, 8, 48],
    (-2, 2): [R(2), 4, 8, 48],
    (3, 1): [3, R(18), 24, 36, 72],
    (-3, 1): [3, R(18), 24, 36, 72],
    (4, 1): [8, 48],
    (-4, 1): [8, 48],
}

_SS7 = [4, 8, R(12), 16, 24, 43, 48, 75, 80, 86, 96, 100, 120, 150, 160, 172,
        191, 200, 240, 300, 344, 382, 400, 480, R(516), 600, 684, 688, 764,
        774, 800, 817, R(911), 912]

TABLE_7 = {
    (0, 1): list(_SS7),
    (0, 2): list(_SS7),
    (1, 1): [],
    (-1, 1): [],
    (1, 3): [R(3), 36, 936],
    (-1, 3): [3, 9, 18, 36, 936],
    (2, 1): [R(10), 20],
    (-2, 1): [R(10), 20],
    (3, 1): [15],
    (-3, 1): [15],
    (4, 1): [4, 36, 936],
    (-4, 1): [4, 9, 36, 936],
    (4, 2): [4, 36, 936],
    (-4, 2): [4, 9, 18, 36, 936],
    (5, 1): [9, 18, 36, 936],
    (-5, 1): [36, 936],
}

_SS11 = [6, 12, R(15), 20, 24, 30, R(37), 40, 60, 74, 111, 120, 148, 183, 222,
         240, 244, 305, 333, 366, 444, 488, 610, 666, 732, 915, 976]

TABLE_11 = {
    (0, 1): list(_SS11),
    (0, 2): list(_SS11),
    (1, 1): [],
    (-1, 1): [10],
    (2, 1): [],
    (-2, 1): [R(7)],
    (3, 1): [],
    (-3, 1): [],
    (4, 1): [],
    (-4, 1): [],
    (4, 2): [8, 10, R(16)],
    (-4, 2): [8, R(16), R(86)],
    (5, 1): [R(7), 14],
    (-5, 1): [],
    (6, 1): [6, R(45), 90],
    (-6, 1): [6, R(45), 90],
}

GOLDEN = {2: TABLE_2, 3: TABLE_3, 5: TABLE_5, 7: TABLE_7, 11: TABLE_11}


def normalize(row):
    """Row as ordered list of (n, is_red)."""
    out = []
    for entry in row:
        if isinstance(entry, tuple):
            out.append((entry[1], True))
        else:
            out.append((entry, False))
    return out
