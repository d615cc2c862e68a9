"""
configuration constants for layout, generation, rendering and the command line

layout:
    SEPARATOR       blank grid lines left between sibling regions
    SIZE_CONSTANT   documented bound C, every bounding box side is at most C * n

generation defaults are used when the cli flag is not given,
GRIDPATHS_SEED in the environment overrides --seed
"""

# blank rows / columns between stacked block bands and between components
SEPARATOR = 1

# bounding box side length <= SIZE_CONSTANT * number of vertices
SIZE_CONSTANT = 8

# random instance generation
DEFAULT_SEED = 0
DEFAULT_CYCLE_BIAS = 0.5
DEFAULT_CYCLE_MIN = 3
DEFAULT_CYCLE_MAX = 8
DEFAULT_CLIQUE_MAX = 5
SEED_ENV_VAR = "GRIDPATHS_SEED"

# exit status contract of the command line tool
EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_HYPOTHESIS = 3
EXIT_MISMATCH = 4

# rendering, sizes in pixels
CELL_SIZE = 24
MARGIN = 2  # in cells
GRID_COLOR = "#e6e6e6"
BACKGROUND_COLOR = "#ffffff"
LABEL_FONT_SIZE = 10
STROKE_WIDTH = 3
# sub-cell offset between coincident paths, as a fraction of the cell
COINCIDENT_OFFSET = 0.12

# distinct colors cycled over the paths
PALETTE = [
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4",
    "#46f0f0", "#f032e6", "#bcf60c", "#008080", "#9a6324",
    "#800000", "#808000", "#000075", "#808080", "#fabebe",
    "#ffd8b1", "#aaffc3", "#e6beff",
]

# characters used by the ascii raster, index = path number modulo len
ASCII_SYMBOLS = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789"
ASCII_EMPTY = "."
ASCII_SHARED = "#"
