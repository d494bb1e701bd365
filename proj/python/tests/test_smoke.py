"""End-to-end checks of the python bindings against known small values."""

import json
import os
import subprocess
from fractions import Fraction

import pytest

import triprimes


def test_sieve_and_nth_prime():
    assert triprimes.sieve_upto(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert triprimes.nth_prime(6) == 13
    assert triprimes.nth_prime(10000) == 104729


def test_triples_and_classification():
    trips = triprimes.triples(100)
    assert (trips[0].n, trips[0].p, trips[0].p1, trips[0].p2) == (1, 2, 3, 5)
    assert triprimes.classify_triple(trips[3], 2) == triprimes.Relation.lhs_greater
    verdict = triprimes.check_triple(trips[3], 2)
    assert verdict.relation == triprimes.Relation.lhs_greater
    assert verdict.lhs == 170 and verdict.rhs == 169


def test_find_threshold():
    r = triprimes.find_threshold(2, 2000)
    assert r.threshold == 4
    assert r.failures == [1, 2, 3]


def test_certificate_derivation():
    nagura = triprimes.builtin_gap_bounds()[0]
    cert = triprimes.derive_certificate(2, nagura)
    assert cert.scale == 625
    assert cert.coeffs == [-2400, -2460, 229]
    assert cert.alpha == Fraction(6, 5)
    # Q(11) < 0 < Q(12)
    assert triprimes.evaluate_certificate(cert, 11) == -1751
    assert triprimes.evaluate_certificate(cert, 12) == 1056
    assert triprimes.positivity_threshold(cert) == 12


def test_weak_bound_rejected():
    nagura = triprimes.builtin_gap_bounds()[0]
    with pytest.raises(triprimes.WeakBoundError):
        triprimes.derive_certificate(3, nagura)


def test_theorem_assembly():
    report = triprimes.assemble_theorem(2, triprimes.builtin_gap_bounds()[0])
    assert report.n_min == 4
    assert report.status == triprimes.AssemblyStatus.complete


def test_limit_values():
    sample = triprimes.a_value(4, 2)
    assert sample.value == Fraction(170, 169)
    assert sample.deviation == Fraction(168, 169)
    et = triprimes.epsilon_threshold(2, Fraction(1, 2), 10000)
    assert et.threshold == 16
    assert et.exact
    assert "tail" in et.caveat


def test_report_serialization():
    r = triprimes.find_threshold(2, 2000)
    doc = json.loads(r.report())
    assert doc["schema_version"] == 1
    assert doc["type"] == "threshold"
    assert doc["threshold"] == 4


def _cli():
    path = os.environ.get("TRIPRIMES_CLI")
    if not path or not os.path.exists(path):
        pytest.skip("TRIPRIMES_CLI not set")
    return path


def test_cli_exit_codes():
    cli = _cli()
    assert subprocess.run([cli, "verify", "--theorem", "1", "--max-n", "100"],
                          capture_output=True).returncode == 0
    assert subprocess.run([cli, "threshold", "--k", "2", "--max-n", "3"],
                          capture_output=True).returncode == 1
    assert subprocess.run([cli, "verify", "--theorem", "9", "--max-n", "100"],
                          capture_output=True).returncode == 2


def test_cli_json_output():
    cli = _cli()
    out = subprocess.run([cli, "threshold", "--k", "2", "--max-n", "1000"],
                         capture_output=True, check=True)
    doc = json.loads(out.stdout)
    assert doc["schema_version"] == 1
    assert doc["threshold"] == 4
    assert doc["failures"] == [1, 2, 3]
