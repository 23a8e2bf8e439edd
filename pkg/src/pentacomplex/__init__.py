"""Commutative 5-dimensional polar complex numbers.

Elements have the form u = x0 + h1*x1 + h2*x2 + h3*x3 + h4*x4 with real
components and the cyclic basis rule h_j h_k = h_{(j+k) mod 5}.  The ring
splits canonically into a real line and two complex planes, which gives a
polar/exponential geometry, five interleaved cosexponential functions,
elementary functions, analytic power series, contour integrals with a
residue identity on the two plane projections, and polynomial factorization
into linear or quadratic factors.
"""

from .algebra import (DIM, H1, H2, H3, H4, ONE, ZERO, PentaComplex, add,
                      basis_product, from_matrix, inverse, multiply, to_matrix)
from .analytic import (CoefficientSpectrum, ConvergenceReport, FirstOrderReport,
                       PowerSeries, SecondOrderReport, check_cr_relations,
                       check_second_order, coefficient_spectrum,
                       convergence_radii, series_eval, series_eval_components,
                       taylor_coefficients)
from .canonical import (CONSTANTS, E1, E1_TILDE, E2, E2_TILDE, E_PLUS,
                        CanonicalForm, IrreducibleRep, RotatedCoords,
                        TransformConstants, canonical_basis, canonical_multiply,
                        from_canonical, irreducible_rep, rotated_coords,
                        rotation_matrix, to_canonical)
from .contour import (Path, PlaneProjection, integrate, plane_circle, project,
                      project_point, residue_formula, winding)
from .cosexp import (RADICALS, CosexpVector, PowerCoefficients, PowerKind,
                     RadicalConstants, cosexp_power, cosexp_values, exp_basis,
                     exp_h1_minus_h4, exp_h1_plus_h4, g5_closed,
                     g5_closed_radical, g5_series, power_coeffs)
from .elementary import (ExponentialForm, cos, cosh, exp, exponential_form,
                         log, modulus_amplitude_relation, pow_real, sin, sinh,
                         trigonometric_form)
from .errors import (AngleUndefined, Degenerate, DomainTooLarge,
                     EvaluationFailed, FormDomain, InsufficientTerms,
                     InvalidPairing, LogDomain, NoConvergence, NonInvertible,
                     NonInvertibleLeading, NonInvertibleOnPath, NotCirculant,
                     OnBoundary, Overflow, PentaError, PoleOnPath, PowDomain,
                     ZeroTail)
from .geometry import (PolarForm, amplitude, modulus, modulus_product_bound,
                       polar_form)
from .polyfactor import (ComponentPolynomials, LinearFactor, PentaPolynomial,
                         QuadraticFactor, RootSet, assemble_roots,
                         component_roots, count_factorizations, decompose,
                         expand_factors, factor)

__version__ = "0.1.0"
