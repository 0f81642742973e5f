"""Gram matrix of the Leech lattice (generated by scripts/build_leech_gram.py)."""

LEECH_GRAM = (
    ( 4,  1,  2,  1,  2,  2, -2,  1,  2, -2,  2, -1,  2,  1,  2,  1, -2,  2,  2, -2,  1,  1,  2, -2),
    ( 1,  4,  2,  2,  2,  2,  1,  2,  0, -1,  0, -2,  0,  2,  2,  2,  1, -1,  1, -2,  1,  2,  0,  0),
    ( 2,  2,  4,  2,  2,  1,  0,  2,  2, -2,  2, -2,  1,  2,  1,  1, -1,  1,  2, -1,  2,  1,  1, -1),
    ( 1,  2,  2,  4,  2,  2,  1,  2,  1, -2,  0, -2, -1,  0,  1,  0,  1,  1,  0,  0,  2,  0,  1, -1),
    ( 2,  2,  2,  2,  4,  2, -1,  1,  2, -1,  0, -2,  0,  2,  2,  0, -1,  1,  2, -1,  1,  0,  0, -2),
    ( 2,  2,  1,  2,  2,  4,  0,  2,  1, -1,  1, -2,  0,  0,  2,  0,  0,  1,  0, -2,  0,  0,  0, -2),
    (-2,  1,  0,  1, -1,  0,  4,  1, -2,  1, -1, -1, -1, -1,  0,  1,  2, -1, -1,  1,  1,  1,  0,  2),
    ( 1,  2,  2,  2,  1,  2,  1,  4,  0, -1,  1, -1,  1,  0,  1,  0,  1,  1,  1, -2,  0,  1,  0,  0),
    ( 2,  0,  2,  1,  2,  1, -2,  0,  4, -1,  2, -1,  0,  1,  1, -1, -2,  2,  1,  0,  1, -1,  0, -2),
    (-2, -1, -2, -2, -1, -1,  1, -1, -1,  4, -1,  1,  0,  0,  0, -1,  1, -1,  0,  1, -1,  0, -1,  2),
    ( 2,  0,  2,  0,  0,  1, -1,  1,  2, -1,  4,  0,  1,  0,  0,  0, -1,  2,  1, -1,  0,  0,  1, -1),
    (-1, -2, -2, -2, -2, -2, -1, -1, -1,  1,  0,  4,  1, -1, -2, -1,  1,  0,  0,  0, -1, -1,  0,  1),
    ( 2,  0,  1, -1,  0,  0, -1,  1,  0,  0,  1,  1,  4,  1,  1,  1, -1,  1,  2, -2,  0,  1,  1,  0),
    ( 1,  2,  2,  0,  2,  0, -1,  0,  1,  0,  0, -1,  1,  4,  1,  1, -1, -1,  2, -1,  1,  1,  0,  0),
    ( 2,  2,  1,  1,  2,  2,  0,  1,  1,  0,  0, -2,  1,  1,  4,  1, -1,  0,  1, -1,  1,  2,  0, -1),
    ( 1,  2,  1,  0,  0,  0,  1,  0, -1, -1,  0, -1,  1,  1,  1,  4,  0, -1,  1, -1,  1,  2,  1,  1),
    (-2,  1, -1,  1, -1,  0,  2,  1, -2,  1, -1,  1, -1, -1, -1,  0,  4, -1, -1,  0,  0,  0,  0,  2),
    ( 2, -1,  1,  1,  1,  1, -1,  1,  2, -1,  2,  0,  1, -1,  0, -1, -1,  4,  1,  0,  0, -1,  1, -1),
    ( 2,  1,  2,  0,  2,  0, -1,  1,  1,  0,  1,  0,  2,  2,  1,  1, -1,  1,  4, -1,  1,  1,  1,  0),
    (-2, -2, -1,  0, -1, -2,  1, -2,  0,  1, -1,  0, -2, -1, -1, -1,  0,  0, -1,  4,  1, -1,  0,  1),
    ( 1,  1,  2,  2,  1,  0,  1,  0,  1, -1,  0, -1,  0,  1,  1,  1,  0,  0,  1,  1,  4,  1,  2,  0),
    ( 1,  2,  1,  0,  0,  0,  1,  1, -1,  0,  0, -1,  1,  1,  2,  2,  0, -1,  1, -1,  1,  4,  1,  1),
    ( 2,  0,  1,  1,  0,  0,  0,  0,  0, -1,  1,  0,  1,  0,  0,  1,  0,  1,  1,  0,  2,  1,  4,  0),
    (-2,  0, -1, -1, -2, -2,  2,  0, -2,  2, -1,  1,  0,  0, -1,  1,  2, -1,  0,  1,  0,  1,  0,  4),
)
