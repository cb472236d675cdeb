"""Reference count tables for the four path families (values for n >= 1),
keyed by the pattern groups that share a sequence."""

DYCK_ROWS = [
    (("U", "D", "UD", "UU", "DD", "UDD", "UUD"), [1, 2, 4, 9, 21, 51, 127, 323]),
    (("DU",), [1, 2, 4, 8, 17, 39, 94, 233, 588]),
    (("UUU", "DDD"), [1, 2, 5, 13, 35, 97, 274, 786, 2282]),
    (("UDU", "DUD"), [1, 2, 4, 9, 22, 56, 146, 389, 1053]),
    (("DUU", "DDU"), [1, 2, 5, 13, 34, 89, 234, 621, 1669]),
]

MOTZKIN_ROWS = [
    (("U", "D"), [1, 2, 3, 6, 11, 22, 43, 87, 176]),
    (("F",), [1, 2, 4, 8, 17, 36, 78, 170, 374]),
    (("UU", "DD"), [1, 2, 4, 9, 20, 46, 107, 253, 604]),
    (("UD",), [1, 2, 3, 7, 13, 29, 61, 138, 308]),
    (("DU",), [1, 2, 4, 9, 20, 46, 107, 252, 599]),
    (("UF", "FD"), [1, 2, 4, 8, 17, 37, 82, 185, 422]),
    (("DF", "FU"), [1, 2, 4, 8, 17, 36, 79, 175, 395]),
    (("FF",), [1, 2, 4, 9, 20, 47, 111, 268, 653]),
]

SKEW_DYCK_ROWS = [
    (("U", "D", "UU", "UD"), [1, 3, 8, 23, 68, 211, 668, 2169, 7145]),
    (("L", "DL"), [1, 3, 9, 28, 91, 307, 1062, 3748, 13429]),
    (("DD",), [1, 3, 9, 29, 96, 327, 1136, 4014, 14365]),
    (("DU",), [1, 3, 9, 27, 82, 255, 813, 2655, 8847]),
    (("LD",), [1, 3, 10, 35, 126, 463, 1728, 6529, 24916]),
    (("LL",), [1, 3, 10, 35, 128, 485, 1890, 7531, 30545]),
]

SKEW_MOTZKIN_ROWS = [
    (("U",), [1, 2, 4, 9, 20, 45, 101, 229, 524, 1211, 2820]),
    (("D",), [1, 2, 4, 10, 23, 55, 131, 318, 774, 1899, 4678]),
    (("F",), [1, 2, 5, 11, 27, 64, 157, 383, 946, 2347, 5854]),
    (("L",), [1, 2, 5, 12, 30, 76, 196, 513, 1359, 3639, 9831]),
]


def patterns_of(rows):
    return [pi for group, _values in rows for pi in group]


def row_of(rows, pi):
    for group, values in rows:
        if pi in group:
            return values
    raise KeyError(pi)
