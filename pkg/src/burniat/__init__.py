"""Exact-arithmetic Picard-group computations for Burniat surfaces.

Modules:
  lattice      Picard lattices of blowups of the plane, mixed-group indices
  delpezzo     effective/nef semigroups on the degree-6 del Pezzo surface
  config       the five branch configurations and their blowups
  picard       the coordinate model of the Picard group and its torsion
  effective    the effective-semigroup decision procedures
  degeneration the semistable degenerate fibre and its exceptional collection
  verify       the acceptance suite
  cli          command-line front end
"""
from .lattice import (SurfaceLattice, YClass, MixedGroup, MixedElement,
                      intersect, canonical_class, arithmetic_genus,
                      negative_curves, subgroup_index, DimensionError)
from .delpezzo import (SymmetricCoords, ExceptionalType, to_symmetric,
                       from_symmetric, eff_decompose, nef_decompose,
                       classify_exceptional, dk_effective, enumerate_nef,
                       NotInLattice)
from .config import (BurniatConfig, CurveRecord, standard_config,
                     all_standard_configs, make_config, validate_building_data,
                     minus_two_curves, is_canonical_ample,
                     ramification_span_index, config_to_text, config_from_text,
                     InvalidBuildingData)
from .picard import (Block, XClass, GeneratorTable, build_generator_table,
                     torsion_subgroup, image_index, picard_image_index,
                     canonical_lift, parse_xclass, xclass_to_text,
                     NotARepresentableClass, NotLiftable, TableInconsistent)
from .effective import (InS, NonEffective, Unresolved, ReductionTrace,
                        minimal_form, is_minimal, s_membership,
                        prove_non_effective, decide, scan, step3_tables,
                        exceptional_induction)
from .degeneration import (FiberContext, SMOOTH, DEGENERATE,
                           ReducibleCurveBundle, EllipticBundle,
                           norm_pushforward, phi0, reduce_degenerate,
                           exceptional_collection_check)
