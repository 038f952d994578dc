from .brunn import AffineMap, LineBody, brunn_midpoint_locus, chord_centers, fit_hyperplane, skew_map, skew_reflection
from .constructions import e3_containment_witness, e4_containment
from .lemmas import check_square_completion, check_volume_lemma, normalize_det, square_completion_residual, volume_margin
from .report import VerificationReport, combine
from .suites import SUITES, run_suite
from .symmetry import check_bm_symmetric_implies_complex, check_polarity_duality, circle_average
