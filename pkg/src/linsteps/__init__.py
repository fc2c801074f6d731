"""Exact rational linear algebra with replayable step-by-step traces.

Every supported method (including the 7-product block multiplications) emits
a trace that can be replay-verified against an independent oracle, compared
side by side with other methods, and serialized to a stable JSON schema.
"""

from .bench import BenchConfig, BenchReport, bench_inputs, random_rational_matrix, run_bench
from .determinant import det_laplace, det_lu, det_sarrus
from .eigen import EigenResult, eigen_rational
from .errors import (ConfigInvalid, DimensionCapExceeded, DimensionMismatch,
                     DivisionByZero, EmptyTrace, EngineError, InputMismatch,
                     MethodInapplicable, NotPowerOfTwo, NotSquare,
                     NotThreeByThree, NotTwoByTwo, ParseError, SingularMatrix,
                     TaskMismatch, UnknownMethod, ZeroDenominator)
from .inverse import CharPoly, charpoly, inverse_cayley_hamilton, inverse_cramer
from .limits import DIMENSION_CAP, LAPLACE_CAP
from .linsolve import SolveResult, solve_cramer, solve_gauss
from .matmul import (StrassenConfig, mul_naive, mul_strassen,
                     naive_product_counted, strassen_mult_count,
                     strassen_product_counted)
from .matrix import Matrix
from .pedagogy import BasisCheckReport, basis_decomposition_demo, verify_sw_basis
from .rational import (Rational, format_rational, parse_rational, rational_add,
                       rational_div, rational_from, rational_mul, rational_sub)
from .registry import METHODS, MethodDescriptor, compute, compute_payload, find_method
from .trace import (ComparisonTable, OpCount, Step, Trace, TraceBuilder,
                    VerifyReport, align_traces, canonical_json, trace_from_json,
                    trace_to_json, verify_trace)

__version__ = "0.1.0"
