"""Exact weighted blow-ups of cA germs xy + f(z, u) = 0."""
from .blowup import (Chart, ExceptionalDivisor, WeightVector, discrepancy, exceptional_part,
                     make_charts, quotient_blowup_charts)
from .classify import ClassificationReport, classify_extractions, count_discrepancy_one
from .errors import (CABlowupError, GermParseError, Inconsistency, InvalidInput,
                     UnsupportedShape)
from .exact import HJChain, hj_expand
from .germ import GermModel, deg_min, parse_germ, weighted_mult
from .quotient import (CyclicQuotient, duval_of_surface_quotient, is_isolated_action,
                       is_terminal_hyperquotient, is_terminal_quotient, parse_quotient,
                       reid_tai_quotient)
from .surface import (CurveSection, SurfacePoint, SurfaceReport, resolve_invariants,
                      surface_k2, surface_report, surface_singularities, x_section_curves)
from .terminality import BlowupVerdict, SingularPoint, blowup_verdict, chart_singularities

__version__ = "0.1.0"
