"""Names and parameter ranges of the built-in algebras"""

CATALOG_ABELIAN = 'abelian'
CATALOG_SOLVABLE2 = 'solvable2'
CATALOG_HEISENBERG3 = 'heisenberg3'
CATALOG_SO = 'so'
CATALOG_SL2 = 'sl2'
CATALOG_STRICT_UPPER = 'strict_upper_triangular'

FIXED_ALGEBRAS = (CATALOG_SOLVABLE2, CATALOG_HEISENBERG3, CATALOG_SL2)
FAMILIES = (CATALOG_ABELIAN, CATALOG_SO, CATALOG_STRICT_UPPER)

PARAMETER_RANGES = {
    CATALOG_ABELIAN: (1, 20),
    CATALOG_SO: (2, 6),
    CATALOG_STRICT_UPPER: (2, 6),
}

BASIS_CONVENTIONS = {
    CATALOG_ABELIAN: "e1..en, zero bracket",
    CATALOG_SOLVABLE2: "[e1,e2] = e2",
    CATALOG_HEISENBERG3: "[e1,e2] = e3, e3 central",
    CATALOG_SO: ("so3: [ei,ej] = eps_ijk ek; n>3: E_ij - E_ji for i<j "
                 "in lexicographic order"),
    CATALOG_SL2: "(h, e, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h",
    CATALOG_STRICT_UPPER: "elementary matrices E_ij for i<j in lexicographic order",
}

CATALOG_FIXTURES = (
    ('abelian', 1), ('abelian', 2), ('abelian', 3), ('abelian', 4), ('abelian', 5),
    ('solvable2', None), ('heisenberg3', None),
    ('so', 3), ('so', 4), ('so', 5), ('sl2', None),
    ('strict_upper_triangular', 3), ('strict_upper_triangular', 4),
    ('strict_upper_triangular', 5),
)
