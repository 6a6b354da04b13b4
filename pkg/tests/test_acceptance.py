"""Acceptance gate: every criterion runs at its stated tolerance and prints
one pass/fail line.  Suite bodies live in jackpaths.verify so the
command-line `verify` runs the identical checks."""

import sys

import pytest

from jackpaths.verify import SUITES, run_suites

CRITERIA = [
    # (suite, criterion summary)
    ("normalization",
     "1. exact normalization of every ensemble variant, d <= 8, four alphas"),
    ("jack-orthogonality",
     "2. Jack orthogonality and norms <J_lam, J_nu> = delta j_lam, |lam| <= 6"),
    ("eigenrelation",
     "3. band-operator eigenrelation on the Jack basis, |lam| <= 5, ell <= 4"),
    ("poisson-oracle",
     "4. ribbon expectations match the Poisson-truncated oracle, radius < 1e-12"),
    ("depoissonized",
     "5. falling-factorial formula equals fixed-size conditional expectation"),
    ("moment-universality",
     "6. operator/Motzkin/Lukasiewicz triple agreement + functional equation"),
    ("moment-duality",
     "7. moment reflection duality as exact polynomial identity, ell <= 10"),
    ("free-cumulant-reduction",
     "8. g = 0 moments equal the non-crossing moment map, ell <= 10"),
    ("bessel-edge",
     "9. Bessel order-zeros and edge limits at g = -1/4 within 1e-3"),
    ("clt-anchors",
     "10. fluctuation-formula anchors: cov(2,2), afp cov(2,2), mean(2)"),
    ("sampler-law",
     "11. growth sampler law validation + Monte Carlo means within 4 sigma"),
    ("lln-low-temperature",
     "12. empirical first-row mean at d = 1600 within 0.05 of 1.336"),
]


@pytest.fixture(scope="module")
def results(tmp_path_factory):
    out = tmp_path_factory.mktemp("overlay")
    kwargs = {"lln-low-temperature": {"out_dir": str(out)}}
    res = run_suites([name for name, _ in CRITERIA], stream=sys.stderr,
                     **kwargs)
    emitted = list(out.iterdir())
    assert any(p.name == "lln_overlay.csv" for p in emitted)
    assert any(p.name == "lln_overlay.svg" for p in emitted)
    return {name: (passed, detail, secs) for name, passed, detail, secs in res}


@pytest.mark.parametrize("suite,summary", CRITERIA,
                         ids=[c[1].split(".")[0] for c in CRITERIA])
def test_criterion(results, suite, summary):
    passed, detail, secs = results[suite]
    line = f"criterion {summary}: {'PASS' if passed else 'FAIL'} ({detail})"
    print(line)
    assert passed, line


def test_runtime_targets(results):
    assert results["normalization"][2] < 30.0
    assert results["bessel-edge"][2] < 5.0
    assert results["lln-low-temperature"][2] < 120.0


def test_every_suite_has_a_criterion():
    assert set(SUITES) == {name for name, _ in CRITERIA}
