"""Size policy for trace-emitting computations.

Traces are meant to be read by humans, so the engine refuses inputs above
DIMENSION_CAP unless the caller raises the limit explicitly.  The benchmark
harness uses the non-tracing code paths and is bound by BENCH_SIZE_CAP only.
"""

# Largest n for which any trace-emitting operation accepts an n x n input.
DIMENSION_CAP = 16

# Laplace expansion is factorial-time; above this it refuses and points at LU.
LAPLACE_CAP = 8

# Benchmark runs skip trace construction, so they may go much larger.
BENCH_SIZE_CAP = 256
