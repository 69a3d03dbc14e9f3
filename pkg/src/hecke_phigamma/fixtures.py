"""Reference reduced words for translations in the affine E-types.

The strings are kept byte-for-byte as published (Bourbaki node labels,
affine node 0, in the s*-convention of the relabeling pipeline).  They are
evaluated and relabeled by :mod:`hecke_phigamma.cli`; our own reduced words
are compared to them only by evaluation and length.
"""
from __future__ import annotations

# t_{3 omega_1} in affine E6
E6_STRING = (
    "0, 2, 4, 3, 5, 4, 2, 0, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 0, 6, 5, 4, 2, "
    "3, 1, 4, 3, 5, 4, 2, 0, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1"
)

# t_{3 omega_6} in affine E6
E6DUAL_STRING = (
    "0, 2, 4, 3, 1, 5, 4, 2, 0, 3, 4, 2, 5, 4, 3, 1, 6, 5, 4, 2, 0, 3, 4, 2, "
    "5, 4, 3, 1, 6, 5, 4, 2, 0, 3, 4, 2, 5, 4, 3, 1, 6, 5, 4, 2, 3, 4, 5, 6"
)

# t_{2 omega_7} in affine E7
E7_STRING = (
    "0, 1, 3, 4, 2, 5, 4, 3, 1, 0, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, "
    "3, 1, 0, 7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 7, 6, 5, 4, "
    "2, 3, 4, 5, 6, 7"
)


def parse_word(s: str) -> list[int]:
    return [int(tok) for tok in s.split(",")]


# case -> (root system, string, fundamental coweight index, multiple,
#          w0-relabeling of the nodes, phi power)
APPENDIX_CASES: dict[str, dict] = {
    "e6": {"type": "E6", "string": E6_STRING, "coweight": 1, "multiple": 3,
           "relabel": {3: 5, 5: 3, 1: 6, 6: 1}, "power": 12, "datum": "E6"},
    "e6dual": {"type": "E6", "string": E6DUAL_STRING, "coweight": 6, "multiple": 3,
               "relabel": {3: 5, 5: 3, 1: 6, 6: 1}, "power": 12, "datum": "E6dual"},
    "e7": {"type": "E7", "string": E7_STRING, "coweight": 7, "multiple": 2,
           "relabel": {}, "power": 6, "datum": "E7"},
}
