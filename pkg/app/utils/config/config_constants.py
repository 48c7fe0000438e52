"""
config_constants.py - Constantes globales para evitar strings hardcodeados

Uso:
    from app.utils.config.config_constants import KIND_REAL_LINE, SIDE_YES, VALID_SUITES
"""

# ========== TIPOS DE DOMINIO ==========
KIND_REAL_LINE = "real-line"
KIND_REAL_SPACE = "real-space"
KIND_CUBE = "cube"
KIND_POSET = "poset"
KIND_ABSTRACT = "abstract"

VALID_DOMAIN_KINDS = {KIND_REAL_LINE, KIND_REAL_SPACE, KIND_CUBE, KIND_POSET, KIND_ABSTRACT}


# ========== LADOS DE INSTANCIAS ==========
SIDE_YES = "yes"
SIDE_NO = "no"

VALID_SIDES = {SIDE_YES, SIDE_NO}


# ========== RESPUESTAS DEL DISTINGUIDOR ==========
SUPPORT_SMALL = "small"
SUPPORT_LARGE = "large"


# ========== FORMATOS DE SALIDA ==========
FORMAT_CSV = "csv"
FORMAT_JSON = "json"
FORMAT_SVG = "svg"

VALID_FORMATS = {FORMAT_CSV, FORMAT_JSON, FORMAT_SVG}

# Columnas exactas del CSV de experimentos (orden fijo)
CSV_COLUMNS = [
    "class", "params", "n", "vc", "lvc", "eps", "m",
    "trials", "accept_rate", "ci_low", "ci_high", "seed",
]


# ========== SUITES DE VERIFICACIÓN ==========
SUITE_DIMS = "dims"
SUITE_SAUER = "sauer"
SUITE_ALTERNATING = "alternating"
SUITE_MAXIMUM = "maximum"
SUITE_FARNESS = "farness"
SUITE_SSD = "ssd"
SUITE_JUNTA = "junta"
SUITE_MONOTONE = "monotone"
SUITE_SYMMETRIC = "symmetric"
SUITE_WENDEL = "wendel"
SUITE_CLUSTER = "cluster"
SUITE_ASW = "asw"
SUITE_SSD_BIRTHDAY = "ssd-birthday"
SUITE_LVC_ONE_SIDED = "lvc-one-sided"
SUITE_LP = "lp"

VALID_SUITES = [
    SUITE_DIMS, SUITE_SAUER, SUITE_ALTERNATING, SUITE_MAXIMUM, SUITE_FARNESS,
    SUITE_SSD, SUITE_JUNTA, SUITE_MONOTONE, SUITE_SYMMETRIC, SUITE_WENDEL,
    SUITE_CLUSTER, SUITE_ASW, SUITE_SSD_BIRTHDAY, SUITE_LVC_ONE_SIDED, SUITE_LP,
]


# ========== CLAVES DEL ARCHIVO DE CONFIGURACIÓN ==========
CFG_SEED = "seed"
CFG_THREADS = "threads"
CFG_EPS = "eps"
CFG_TRIALS = "trials"
CFG_GRID = "grid"
CFG_TARGET = "target"
CFG_CLASS = "class"
CFG_GENERATOR = "generator"
