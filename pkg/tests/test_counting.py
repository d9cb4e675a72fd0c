import cmath

import pytest

import multirank.counting as counting
from multirank.counting import (
    FOURCOLOR_REPRESENTATIVES,
    class_count_tables_dft,
    class_counts_dft,
    closed_form_rhs,
    component_weights,
    counting_series,
    generalized_series,
    is_supported,
    rank_gf_at_root,
    supported_entries,
    vector_crank_series,
    vector_crank_vanishing,
)
from multirank.cyclotomic import cyclotomic_ring
from multirank.errors import ConsistencyError, UsageError
from multirank.families import (
    CUBIC,
    OVER,
    OVERCUBIC,
    PLAIN,
    POD,
    R4,
    RBAR,
    RETI,
    RSTAR,
    colored,
    fourcolor,
    generalized,
    parse_family,
)
from multirank.partitions import class_counts_bruteforce
from multirank.series import TruncatedSeries
from oracles import naive_count, naive_tuple_count


def test_cubic_coefficient_of_q5():
    assert counting_series(CUBIC, 5)[5] == 12


def test_generalized_constant_term():
    assert counting_series(generalized(1, 2, 2, 2), 0)[0] == 1


def test_colored_over_2_at_q2():
    assert counting_series(colored(OVER, 2), 2)[2] == 12


@pytest.mark.parametrize("kind", [PLAIN, OVER, POD])
def test_single_component_matches_naive(kind):
    s = counting_series(colored(kind, 1), 15)
    assert list(s) == [naive_count(n, kind) for n in range(16)]


def test_overcubic_known_values():
    s = counting_series(OVERCUBIC, 2)
    assert s[2] == 6 == naive_tuple_count(2, OVER, (1, 2))


def test_generalized_series_matches_family():
    assert generalized_series(1, 2, 2, 2, 20) == counting_series(generalized(1, 2, 2, 2), 20)
    assert generalized_series(1, 2, 3, 2, 20) == counting_series(fourcolor(1, 3), 20)


def test_counting_series_values_exceed_64_bits():
    assert counting_series(fourcolor(1, 1), 400)[400] > 2**64


def test_negative_truncation():
    with pytest.raises(UsageError):
        counting_series(CUBIC, -1)


# --- component weights -------------------------------------------------------


def test_component_weights():
    assert component_weights(colored(OVER, 4), RBAR) == (1, 2, -2, -1)
    assert component_weights(colored(PLAIN, 5), RSTAR) == (1, 2, -2, -1, 0)
    assert component_weights(colored(PLAIN, 3), RSTAR) == (1, -1, 0)
    assert component_weights(fourcolor(1, 2), R4) == (1, -1, 1, -1)
    with pytest.raises(UsageError):
        component_weights(colored(OVER, 3), RBAR)
    with pytest.raises(UsageError):
        component_weights(CUBIC, RETI)


# --- proof chains ------------------------------------------------------------


def test_colored_over_2_routes_agree_first_terms():
    spec = colored(OVER, 2)
    assert rank_gf_at_root(spec, RBAR, 3, 4) == closed_form_rhs(spec, RBAR, 3, 4)


def test_overcubic_closed_form_vanishes_at_q2():
    assert not closed_form_rhs(OVERCUBIC, RETI, 3, 10)[2]
    assert not rank_gf_at_root(OVERCUBIC, RETI, 3, 10)[2]


@pytest.mark.parametrize(
    "spec,stat,t",
    [(e[0], e[1], t) for t in (3, 5, 7) for e in supported_entries(t)],
    ids=lambda x: str(x),
)
def test_proof_chain_through_q60(spec, stat, t):
    assert rank_gf_at_root(spec, stat, t, 60) == closed_form_rhs(spec, stat, t, 60)


def test_supported_entries_size():
    assert len(supported_entries(3)) == 8
    assert len(supported_entries(5)) == 7 + len(FOURCOLOR_REPRESENTATIVES)
    assert len(supported_entries(7)) == 7


@pytest.mark.parametrize(
    "spec,stat,t",
    [
        (colored(OVER, 3), RBAR, 3),
        (colored(PLAIN, 2), RSTAR, 3),
        (CUBIC, RETI, 5),
        (fourcolor(1, 2), R4, 3),
        (CUBIC, RBAR, 3),
        (colored(PLAIN, 2), RBAR, 9),
        (colored(OVER, 2), RBAR, 5),
    ],
    ids=str,
)
def test_unsupported_combinations_rejected(spec, stat, t):
    assert not is_supported(spec, stat, t)
    with pytest.raises(UsageError):
        rank_gf_at_root(spec, stat, t, 10)
    with pytest.raises(UsageError):
        closed_form_rhs(spec, stat, t, 10)
    with pytest.raises(UsageError):
        class_counts_dft(spec, stat, t, 3)


# --- DFT class recovery ------------------------------------------------------


def test_dft_examples():
    assert class_counts_dft(colored(OVER, 2), RBAR, 3, 2).counts == (4, 4, 4)
    assert class_counts_dft(CUBIC, RETI, 3, 5).counts == (4, 4, 4)


@pytest.mark.parametrize("t", [3, 5])
def test_dft_at_zero_weight(t):
    for spec, stat in supported_entries(t):
        assert class_counts_dft(spec, stat, t, 0).counts == (1,) + (0,) * (t - 1)


BRUTE_LIMITS = {1: 20, 2: 20, 3: 16, 4: 12, 5: 9, 6: 8}
OVER_LIMITS = {2: 14, 3: 10, 4: 9, 5: 7, 6: 6}


def _dft_cases():
    for t in (3, 5, 7):
        for spec, stat in supported_entries(t):
            if spec.kind == "fourcolor" and (spec.params not in ((1, 1), (1, 4), (2, 3), (5, 5))):
                continue
            limits = OVER_LIMITS if spec.base == OVER else BRUTE_LIMITS
            yield pytest.param(spec, stat, t, min(limits.get(spec.components, 6), 20), id=f"{spec}-{stat}-t{t}")


@pytest.mark.parametrize("spec,stat,t,n_max", list(_dft_cases()))
def test_dft_matches_bruteforce(spec, stat, t, n_max):
    tables = class_count_tables_dft(spec, stat, t, n_max)
    series = counting_series(spec, n_max)
    for n in range(n_max + 1):
        brute = class_counts_bruteforce(spec, stat, t, n)
        assert tables[n].counts == brute.counts, n
        assert tables[n].total == series[n]


def test_dft_detects_inconsistent_evaluations(monkeypatch):
    real = counting._rank_gf

    def broken(spec, stat, t, n, power):
        s = real(spec, stat, t, n, power)
        coeffs = list(s.coeffs)
        coeffs[1] = coeffs[1] + 1
        return TruncatedSeries(coeffs, n, s.ring)

    monkeypatch.setattr(counting, "_rank_gf", broken)
    with pytest.raises(ConsistencyError):
        class_count_tables_dft(colored(OVER, 2), RBAR, 3, 3)


# --- vector crank ------------------------------------------------------------


def _complex_vector_crank(t, n):
    z = cmath.exp(2j * cmath.pi / t)
    s = [1 + 0j] + [0j] * n
    for k in range(1, n + 1):
        # multiply by (1 - q^k), then divide by (1 - z q^k)(1 - q^k / z)
        for i in range(n, k - 1, -1):
            s[i] -= s[i - k]
        for w in (z, 1 / z):
            for i in range(k, n + 1):
                s[i] += w * s[i - k]
    return s


@pytest.mark.parametrize("t,n_max", [(5, 54), (7, 40), (11, 28)])
def test_vector_crank_vanishing(t, n_max):
    ok, bad = vector_crank_vanishing(t, n_max)
    residue = {5: 4, 7: 5, 11: 6}[t]
    assert bad == []
    assert ok == list(range(residue, n_max + 1, t))


@pytest.mark.parametrize("t", [5, 7, 11])
def test_vector_crank_series_matches_complex_oracle(t):
    n = 40
    exact = vector_crank_series(t, n)
    approx = _complex_vector_crank(t, n)
    w = cmath.exp(2j * cmath.pi / t)
    for k in range(n + 1):
        value = sum(c * w**i for i, c in enumerate(exact[k].coords))
        assert abs(value - approx[k]) < 1e-6 * max(1, abs(approx[k]))


def test_vector_crank_does_not_vanish_off_progression():
    s = vector_crank_series(5, 20)
    assert s[1] and s[2] and s[3]


def test_vector_crank_bad_modulus():
    with pytest.raises(UsageError):
        vector_crank_vanishing(13, 20)


def test_closed_form_ring():
    assert closed_form_rhs(CUBIC, RETI, 3, 5).ring == cyclotomic_ring(3)


def test_parse_family_round_trip():
    for spec in (CUBIC, colored(POD, 4), generalized(1, 2, 2, 2), fourcolor(2, 3)):
        assert parse_family(str(spec)) == spec
