import csv
import os
import random
import subprocess

import pytest

import indexradix as ir


def set_bits(n):
    return [i for i in range(n.bit_length() - 1, -1, -1) if n >> i & 1]


def test_worked_examples():
    assert ir.deconstruct(97) == [6, 5, 0]
    assert ir.deconstruct(0) == []
    assert ir.reconstruct([4, 0, 4, 2, 0]) == 38
    assert ir.add_indices([4, 0], [4, 2, 0]) == [5, 2, 1]
    assert ir.multiply_indices([4, 0], [4, 1, 0]) == [8, 6, 1, 0]
    assert ir.dec2binary("0.390625") == [-2, -3, -6]
    assert ir.dec2binary("0.1", 4) == [-4, -5, -8, -9]
    assert ir.reconstruct_fraction([-2, -3, -6]) == "0.390625"
    assert ir.split([5, 3, 1], 2) == [[1, 3], [5]]


def test_big_integers_cross_the_boundary():
    a = 37975227936943673922808872755445627854565536638199
    b = 40094690950920881030683735292761468389214899724061
    assert ir.multiply(a, b) == a * b
    assert ir.add(a, b) == 78069918887864554953492608048207096243780436362260
    rng = random.Random(3)
    for _ in range(50):
        x = rng.getrandbits(rng.randint(1, 3000))
        y = rng.getrandbits(rng.randint(1, 3000))
        assert ir.deconstruct(x) == set_bits(x)
        assert ir.reconstruct(ir.deconstruct(x)) == x
        expected = x * y
        assert ir.multiply(x, y) == expected
        assert ir.schoolbook_multiply(x, y) == expected
        assert ir.karatsuba_multiply(x, y, cutoff_limbs=2) == expected
        assert ir.ntt_multiply(x, y) == expected


def test_parallel_multiply():
    a = 2**521 - 1
    b = 2**607 - 1
    product, tasks = ir.parallel_multiply(a, b, 4, 5, 100, workers=3, aggregation="index_concat")
    assert product == a * b
    # 521 entries in parts of 130 and 607 in parts of 121 leave a short tail part each.
    assert tasks == 5 * 6
    with pytest.raises(ir.MaxCpuExceeded):
        ir.parallel_multiply(a, b, 10, 10, 5)


def test_errors_map_to_exceptions():
    with pytest.raises(ValueError):
        ir.deconstruct(-1)
    with pytest.raises(ir.ParseError):
        ir.add_indices([1, 3], [0])
    with pytest.raises(ir.DomainError):
        ir.dec2binary("1.5")
    with pytest.raises(ir.IndexOverflow):
        ir.normalize([2**63 - 2, 2**63 - 2])
    assert issubclass(ir.ParseError, ir.IndexRadixError)


def test_bench_csv_interface(tmp_path):
    out = tmp_path / "bench.csv"
    records = ir.run_bench([4, 16, 64], ["poly_index", "karatsuba", "ntt"], output=out)
    assert len(records) == 9
    assert all(r["correct"] for r in records)
    with open(out, newline="") as f:
        rows = list(csv.DictReader(f))
    assert ",".join(rows[0].keys()) == ir.CSV_HEADER
    assert [r["algorithm"] for r in rows][:3] == ["poly_index"] * 3
    assert all(float(r["median_seconds"]) > 0 for r in rows)
    assert ir.read_csv(out) == records
    text, _ = ir.crossover_report(out)
    assert "ranking" in text
    assert ir.gen_operand(256, 7).bit_length() == 256


@pytest.mark.skipif("INDEXRADIX_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_pipe_round_trip():
    cli = os.environ["INDEXRADIX_CLI"]
    n = str(random.Random(9).getrandbits(900))
    listed = subprocess.run([cli, "deconstruct", n], capture_output=True, text=True, check=True)
    back = subprocess.run([cli, "reconstruct", listed.stdout.strip()], capture_output=True,
                          text=True, check=True)
    assert back.stdout.strip() == n
    bad = subprocess.run([cli, "mul", "12", "x"], capture_output=True, text=True)
    assert bad.returncode == 2
    assert bad.stdout == ""
