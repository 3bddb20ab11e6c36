"""Constantes et configuration pour Cyclic Structures."""

# Troncature par défaut des ensembles cycliques finis
DEFAULT_TRUNCATION = 4

# Audits par échantillonnage (reproductibles)
DEFAULT_SEED = 0
DEFAULT_SAMPLES = 200
DEFAULT_NMAX = 4

# Limites d'échantillonnage
SAMPLE_MAX_DENOMINATOR = 12
SAMPLE_INTEGER_SPAN = 3  # partie entière tirée dans [-span, span]
PL_SAMPLE_MAX_BREAKPOINTS = 3
PL_SAMPLE_MAX_DENOMINATOR = 6

# Recherche de la décomposition g = z^k v (nombre maximal de pas)
GPRIME_SEARCH_LIMIT = 10_000

# Codes de sortie CLI
EXIT_SUCCESS = 0
EXIT_AUDIT_FAILURE = 1
EXIT_USAGE_ERROR = 2

# Formats de sortie
OUTPUT_FORMATS = ("text", "json")
DEFAULT_OUTPUT_FORMAT = "text"

# Modèles de groupes ordonnés livrés
MODEL_NAMES = ("finite", "rational", "pl")
DEFAULT_MODEL = "rational"

# Ensembles cycliques nommés pour la CLI
NAMED_CYCLIC_SETS = ("point", "circle", "circle-square", "circle-cube")

# Classification: audit de la structure cyclique avant construction du groupe
CLASSIFY_STRUCTURE_NMAX = 3
CLASSIFY_STRUCTURE_SAMPLES = 20

# Tables d'indices du cocycle (dimensions 1 à 3)
COCYCLE_TABLE_DIMENSIONS = (1, 2, 3)

# Bornes acceptées par le validateur de la CLI
MAX_NMAX = 8
MAX_TRUNCATION = 6
MAX_SAMPLES = 100_000

# Vérification des formes canoniques (troncature, rang de l'intervalle fini)
CANONICAL_CHECK_TRUNCATION = 3
CANONICAL_CHECK_INTERVAL_RANK = 2
