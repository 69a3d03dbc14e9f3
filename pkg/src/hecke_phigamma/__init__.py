"""Exact computations for supersingular Hecke modules of classical groups and the
rank-one (phi^r, Gamma)-modules attached to them.

Modules:
  rootdata       root systems, coroots, fundamental coweights (exact rationals)
  affine_weyl    extended affine Weyl group, lengths, reduced words, straightness
  gallery        minimal galleries attached to a straight element, crossed roots
  matrix_models  explicit generators of GSp, SO, GSO, GL over Z[p^+-1, x^+-1]
  phigamma       truncated Laurent series over F_q and rank-one (phi^r, Gamma)-modules
  classifier     quotient sets of class points, involutions, supersingular data
  cli            batch driver
"""
from __future__ import annotations

from .affine_weyl import (AffineWeylElement, from_word, is_straight, length, reduced_word,
                          translation, translation_power)
from .classifier import (ClassPoint, SupersingularDatum, enumerate_classes, functor_output,
                         is_symmetric, iota0, iota1, supersingular_to_classpoint,
                         verify_bijection)
from .finite_field import FiniteField
from .gallery import check_concept, crossing_profile, standard_gallery_datum
from .matrix_models import build_group_model, full_report
from .phigamma import (PhiGammaModule, RankOneClass, RankOneModule, TruncatedSeries,
                       classify_rank_one, construct_rank_one, congruence_holds,
                       dual_oracle_check, induce_to_phi)
from .rootdata import RootSystem, build_root_system

__version__ = "0.1.0"

__all__ = [
    "AffineWeylElement", "ClassPoint", "FiniteField", "PhiGammaModule", "RankOneClass",
    "RankOneModule", "RootSystem", "SupersingularDatum", "TruncatedSeries",
    "build_group_model", "build_root_system", "check_concept", "classify_rank_one",
    "congruence_holds", "construct_rank_one", "crossing_profile", "dual_oracle_check",
    "enumerate_classes", "from_word", "full_report", "functor_output", "induce_to_phi",
    "iota0", "iota1", "is_straight", "is_symmetric", "length", "reduced_word",
    "standard_gallery_datum", "supersingular_to_classpoint", "translation",
    "translation_power", "verify_bijection",
]
