"""The 7-class semantic palette shared by geometry, rendering and evaluation.

Class ids are stable across the whole pipeline: triangle tags, groundtruth
label maps, confusion counts and indexed-palette label images all use the
same ids. Road surfaces are part of GROUND (they get their own material but
not their own class). SKY is not geometry; it is the ray-miss case. VOID is
reserved for unlabeled pixels in imported data and is excluded from metrics.
"""

import numpy as np

BUILDING = 0
PEDESTRIAN = 1
TREES = 2
VEHICLES = 3
GROUND = 4
SKY = 5
VOID = 6

NUM_CLASSES = 7

CLASS_NAMES = ("building", "pedestrian", "trees", "vehicles", "ground", "sky", "void")

NAME_TO_ID = {name: i for i, name in enumerate(CLASS_NAMES)}

# Display colors for indexed-palette label PNGs, one RGB triple per class id.
CLASS_COLORS = np.array(
    [
        [70, 70, 70],     # building
        [220, 20, 60],    # pedestrian
        [107, 142, 35],   # trees
        [0, 0, 142],      # vehicles
        [128, 64, 128],   # ground
        [70, 130, 180],   # sky
        [0, 0, 0],        # void
    ],
    dtype=np.uint8,
)
