"""Integer arithmetic on sparse radix-2 index lists.

An integer is held as the descending list of positions of its set bits, so
``97 == 0b1100001`` becomes ``[6, 5, 0]``. Addition concatenates lists and
carries duplicates upward; multiplication adds every index pair.
"""

from ._core import (
    CSV_HEADER,
    BenchCorrectnessError,
    CapacityExceeded,
    DomainError,
    IndexOverflow,
    IndexRadixError,
    InsufficientData,
    JobError,
    MaxCpuExceeded,
    ParseError,
    add,
    add_indices,
    crossover_report,
    dec2binary,
    deconstruct,
    gen_operand,
    karatsuba_multiply,
    multiply,
    multiply_indices,
    normalize,
    ntt_multiply,
    parallel_multiply,
    read_csv,
    reconstruct,
    reconstruct_fraction,
    run_bench,
    schoolbook_multiply,
    split,
)

__all__ = [name for name in dir() if not name.startswith("_")]
