"""Disjoint-cycle covers of S_4^2 for u = 1234, transcribed verbatim with their typos.

Each row maps a length to ``(first_cycle, second_cycle)`` as printed; a cycle
string repeats its first vertex at the end.  Rows are validated and repaired by
:mod:`splitstar.base`; the printed text is never trusted directly.
"""

U = "1234"

# vertices each table keeps on the second cycle
TARGETS = {
    1: ["2134"],
    2: ["3124", "1324", "3214", "2314"],
    3: ["1342", "3142", "1432", "4132", "3412", "4312"],
}

PRINTED = {
    1: {
        3: (
            "1234, 3124, 2314, 1234",
            "2134, 1432, 4132, 1342, 3142, 4312, 2143, 4213, 2413, 1243, 2413, 4123, 1423, 4321, 3241, 2431, 4231, 2341, 3421, 1324, 3214, 2134",
        ),
        4: (
            "1234, 4132, 3412, 2314, 1234",
            "2134, 3214, 1324, 3124, 1423, 4123, 1243, 2143, 4213, 2413, 4312, 1432, 3142, 1342, 3241, 2431, 4321, 3421, 2341, 4231, 2134",
        ),
        5: (
            "1234, 2314, 3214, 1324, 3124, 1234",
            "2134, 1432, 4132, 1342, 3142, 4312, 3412, 4213, 2413, 1243, 4123, 1423, 2143, 3241, 2341, 3421, 4321, 2431, 4231, 2134",
        ),
        6: (
            "1234, 3124, 2314, 3412, 1342, 4132, 1234",
            "2134, 1324, 3214, 4312, 1432, 3142, 1243, 4123, 2413, 4213, 1423, 2143, 3241, 2341, 3421, 4321, 2431, 4231, 2134",
        ),
        7: (
            "1234, 4132, 3412, 2314, 3214, 1324, 3124, 1234",
            "2134, 1432, 4312, 3142, 1342, 2143, 1243, 4123, 2413, 4213, 1423, 4321, 3421, 2341, 3241, 2431, 4231, 2134",
        ),
        8: (
            "1234, 4132, 1342, 3412, 2314, 3214, 1324, 3124, 1234",
            "2134, 1432, 4312, 3142, 2143, 1243, 4123, 1423, 4321, 3421, 2341, 3241, 2431, 4231, 2134",
        ),
        9: (
            "1234, 3124, 2314, 3412, 1432, 3142, 1342, 4132, 1234",
            "2134, 1324, 3214, 2413, 4123, 1243, 2143, 4213, 1423, 4321, 3421, 2341, 3241, 2431, 4231, 2134",
        ),
        10: (
            "1234, 3124, 2314, 4213, 3412, 4312, 1432, 3142, 1342, 4132, 1234",
            "2134, 1324, 3214, 2413, 4123, 1243, 2143, 1423, 4321, 3421, 2341, 3241, 2431, 4231, 2134",
        ),
        11: (
            "1234, 3124, 2314, 4213, 2143, 1342, 3412, 4312, 3142, 4132, 1234",
            "2134, 1324, 3214, 2413, 1243, 4123, 1423, 4321, 3421, 2341, 3241, 2431, 4231, 2134",
        ),
        12: (
            "1234, 3124, 2314, 4213, 1423, 2143, 1342, 3412, 4312, 3142, 1432, 4132, 1234",
            "2134, 1324, 3214, 2413, 1243, 4123, 3421, 4321, 2431, 3241, 2341, 4231, 2134",
        ),
    },
    2: {
        3: (
            "1234, 4132, 2431, 1234",
            "3124, 1324, 2134, 3214, 2314, 3412, 3412, 1342, 3142, 1432, 4312, 2413, 4213, 1423, 4123, 1243, 2143, 3241, 2341, 4231, 3421, 4321, 3124",
        ),
        4: (
            "1234, 4132, 1432, 2134, 1234",
            "3124, 1324, 3214, 2314, 3412, 1342, 3142, 4312, 2413, 4213, 1423, 4123, 1243, 2143, 3241, 2341, 3421, 4231, 2431, 4321, 3124",
        ),
        5: (
            "1234, 4132, 2431, 4231, 2134, 1234",
            "3124, 1324, 3214, 2314, 3412, 1342, 3142, 1432, 4312, 2413, 4213, 1423, 4123, 1243, 2143, 3241, 2341, 3421, 4231, 3421, 4321, 3124",
        ),
        6: (
            "1234, 4132, 1342, 3142, 1432, 2134, 1234",
            "3124, 1324, 3214, 2314, 3412, 4312, 2413, 4213, 1423, 4123, 1243, 2143, 3241, 2341, 3421, 4231, 2431, 4321, 3124",
        ),
        7: (
            "1234, 4132, 1342, 3142, 4312, 1432, 2134, 1234",
            "3124, 1324, 3214, 2314, 3412, 4213, 2413, 1243, 4123, 1423, 2143, 3241, 2341, 3421, 4231, 2431, 4321, 3124",
        ),
        8: (
            "1234, 4132, 1342, 3412, 4312, 3142, 1432, 2134, 1234",
            "3124, 1324, 3214, 2314, 4213, 2413, 1243, 4123, 1423, 2143, 3241, 2341, 3421, 4231, 2431, 4321, 3124",
        ),
        9: (
            "1234, 2431, 4132, 1342, 3412, 4312, 3142, 1432, 2134, 1234",
            "3124, 1324, 3214, 2314, 4213, 2413, 1243, 4123, 1423, 2143, 3241, 2341, 4231, 3421, 4321, 3124",
        ),
        10: (
            "1234, 4132, 1342, 2143, 4213, 3412, 4312, 3142, 1432, 2134, 1234",
            "3124, 1324, 3214, 2314, 4213, 2413, 1243, 4123, 1423, 2143, 3241, 2341, 4231, 3421, 4321, 3124",
        ),
        11: (
            "1234, 4132, 1342, 2143, 1423, 4213, 3412, 4312, 3142, 1432, 2134, 1234",
            "3124, 1324, 3214, 2314, 4213, 2413, 1243, 4123, 1423, 2143, 3241, 2341, 4231, 3421, 4321, 3124",
        ),
        12: (
            "1234, 4132, 1342, 2143, 1243, 2413, 4213, 3412, 4312, 3142, 1432, 2134, 1234",
            "3124, 1324, 3214, 2314, 4123, 3421, 4231, 2341, 3421, 4321, 3124",
        ),
    },
    3: {
        3: (
            "1234, 3124, 2314, 1234",
            "2134, 1432, 4132, 1342, 3142, 4312, 3412, 4213, 2143, 1243, 2413, 4123, 1423, 4321, 3241, 2431, 4231, 2341, 3421, 1324, 3214, 2134",
        ),
        4: (
            "1234, 2134, 1324, 3124, 1234",
            "4132, 1432, 3142, 1342, 4312, 3412, 4213, 2314, 2314, 4213, 2413, 1243, 4123, 1423, 2143, 3241, 2341, 4231, 3421, 4321, 2431, 4132",
        ),
        5: (
            "1234, 2134, 3214, 1324, 3124, 1234",
            "4132, 1432, 4312, 3142, 1342, 3412, 2314, 4213, 2413, 1243, 4123, 1423, 2143, 3241, 2341, 4231, 3421, 4321, 2431, 4132",
        ),
        6: (
            "1234, 2134, 1324, 3214, 2314, 3124, 1234",
            "4132, 1432, 4312, 3142, 1342, 3412, 4213, 2413, 1243, 4123, 1423, 2143, 3241, 2341, 4231, 3421, 4321, 2431, 4132",
        ),
        7: (
            "1234, 2134, 3214, 1324, 3124, 4321, 2431, 1234",
            "1432, 4132, 1342, 3142, 4312, 3412, 2314, 4213, 2413, 1243, 4123, 1423, 2143, 3241, 2341, 3421, 4231, 1432",
        ),
        8: (
            "1234, 2314, 3214, 2134, 1324, 3124, 4321, 2431, 1234",
            "1432, 4132, 1342, 3142, 4312, 3412, 4213, 2413, 1243, 4123, 1423, 2143, 3241, 2341, 3421, 4231, 1432",
        ),
        9: (
            "1234, 2314, 3214, 2134, 1324, 3124, 4321, 3241, 2431, 1234",
            "1432, 4132, 1342, 3142, 4312, 3412, 4213, 2413, 1243, 4123, 1423, 2143, 3241, 2341, 3421, 4231, 1432",
        ),
        10: (
            "1234, 2134, 1324, 3214, 2314, 4213, 2413, 4123, 3124, 1234",
            "1432, 4132, 1342, 3412, 4312, 3142, 1243, 2143, 3241, 2341, 4321, 2431, 4231, 1432",
        ),
        11: (
            "1234, 2134, 1324, 3214, 2314, 4213, 2413, 1243, 4123, 3124, 1234",
            "1432, 4132, 3412, 4312, 3142, 1342, 2143, 3241, 2341, 4321, 2431, 4231, 1432",
        ),
        12: (
            "1234, 2134, 1324, 3214, 2314, 4213, 2143, 1243, 4123, 3124, 1234",
            "1432, 4132, 3412, 4312, 3142, 1342, 3241, 2341, 4321, 2431, 4231, 1432",
        ),
    },
}
