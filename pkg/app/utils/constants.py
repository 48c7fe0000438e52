# app/utils/constants.py

# ========== PRESUPUESTOS DE ENUMERACIÓN ==========
MAX_SHATTER_POINTS = 22          # |T| máximo para is_shattered (2^|T| consultas)
MAX_GROWTH_POINTS = 22           # |S| máximo para enumerar la función de crecimiento
DEFAULT_ORACLE_CALL_BUDGET = 1_000_000  # consultas al oráculo en barridos de subconjuntos
MAX_DISTANCE_SUPPORT = 22        # soporte máximo para la distancia genérica
MAX_TREE_SEARCH_POINTS = 16      # puntos máximos en la búsqueda exacta de árboles
MAX_TREE_SEARCH_STATES = 1_000_000
MAX_JUNTA_SUBSETS = 200_000      # C(n,k) máximo en el oráculo de juntas
MAX_COVER_POINTS = 14            # puntos por componente en la búsqueda de particiones
MAX_COVER_BALL_CALLS = 200_000
MAX_RANK_COLUMNS = 5_000         # C(n,≤k) máximo en cube_rank_check
SMALL_CUBE_BITS = 20             # cubos hasta 2^20 puntos se muestrean sin reemplazo

# ========== CONSTANTES DE LOS TESTERS ==========
ONE_SIDED_CONSTANT = 8           # m = ⌈(8/ε)(d·ln(16/ε) + ln 3)⌉
JUNTA_CHERNOFF_CONSTANT = 24     # término 24/ε del tamaño de muestra de juntas
MONOTONE_CONSTANT = 10           # m = ⌈10·√n/ε⌉
SYMMETRIC_CONSTANT = 50          # m = ⌈(50/ε²)·ln 3⌉
BIRTHDAY_CONSTANT = 8            # m = ⌈8·√d⌉
LP_CONSTANT = 4                  # m = ⌈4n/ε⌉
CLUSTER_CONSTANT = 4             # m = ⌈4·(nk·ln(k+1)/ε)·ln(e/ε)⌉
SYMMETRIC_FRACTION = 5           # t = ⌊n/5⌋

# ========== REDUCCIÓN SSD ==========
DEFAULT_SSD_MULTIPLIER = 4       # K
SSD_SET_FACTOR = 5               # |S| ≥ 5·VC

# ========== GEOMETRÍA ==========
DEFAULT_BALL_TOLERANCE = 1e-9
CLUSTER_SPHERE_GAP = 3.0
MEB_MAX_ITERATIONS_FACTOR = 20

# ========== EXPERIMENTOS ==========
DEFAULT_TARGET = 2 / 3
DEFAULT_WILSON_Z = 1.959963984540054
MIN_SWEEP_TRIALS = 30
DEFAULT_SEED = 20240601
DEFAULT_THREADS = 4
DEFAULT_REGENERATION_ATTEMPTS = 8

# Primo de Mersenne 2^31 − 1: productos caben en int64
RANK_PRIME = 2_147_483_647
