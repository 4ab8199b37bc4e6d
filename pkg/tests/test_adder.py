import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qftadd import (
    AdderSpec,
    DigitString,
    GateKind,
    Mode,
    RegisterLayout,
    adder_layout,
    basis_state,
    build_adder_component,
    build_full_adder,
    build_iqft,
    build_qft,
    classical_oracle,
    concat,
    execute,
    required_ancillas,
)


def result_probability(spec, state, value):
    """Marginal probability that the output register reads ``value``."""
    width = spec.result_width
    probs = state.probabilities().reshape(spec.base**width, -1).sum(axis=1)
    return probs[value]


def test_required_ancillas_examples():
    assert required_ancillas(4, 2) == 2
    assert required_ancillas(4, 4) == 1
    assert required_ancillas(1, 7) == 0
    assert required_ancillas(5, 2) == 3


@given(st.integers(1, 10**6), st.integers(2, 16))
def test_required_ancillas_is_minimal(num_inputs, base):
    t = required_ancillas(num_inputs, base)
    assert base**t >= num_inputs
    assert t == 0 or base ** (t - 1) < num_inputs


def test_required_ancillas_rejects_bad_args():
    with pytest.raises(ValueError):
        required_ancillas(0, 2)
    with pytest.raises(ValueError):
        required_ancillas(3, 1)


def test_adder_layout_shape():
    layout = adder_layout(2, 2, 4)
    assert layout.registers == (("anc", 2), ("a0", 2), ("a1", 2), ("a2", 2), ("a3", 2))
    layout1 = adder_layout(5, 3, 1)
    assert layout1.registers == (("anc", 0), ("a0", 3))


def test_spec_validation():
    with pytest.raises(ValueError):
        AdderSpec(base=2, digits_per_input=2, num_inputs=2, mode=Mode.ADD, inputs=(4, 0))
    with pytest.raises(ValueError):
        AdderSpec(base=2, digits_per_input=2, num_inputs=3, mode=Mode.ADD, inputs=(1, 0))
    with pytest.raises(ValueError):
        AdderSpec(base=2, digits_per_input=0, num_inputs=1, mode=Mode.ADD, inputs=(0,))


def test_component_tally():
    # n*( (n+1)/2 + t ) phase gates per component, nothing else
    for d, t, n in [(2, 2, 2), (3, 1, 2), (4, 1, 1), (2, 0, 3)]:
        layout = RegisterLayout(d, (("anc", t), ("a0", n), ("b", n)))
        comp = build_adder_component(layout, 2, +1)
        tally = comp.tally()
        expected = sum(t + n - j for j in range(n))
        assert tally[GateKind.CPHASE] == expected
        assert tally[GateKind.HADAMARD] == 0
        assert tally[GateKind.SWAP] == 0
    assert expected == 6  # the last case: t=0, n=3 gives 3+2+1


def test_component_seven_gates_for_case_study_sizes():
    layout = RegisterLayout(2, (("anc", 2), ("a0", 2), ("b", 2)))
    comp = build_adder_component(layout, 2, +1)
    assert comp.num_ops == 7


def test_component_rejects_fourier_span_sources():
    layout = RegisterLayout(2, (("anc", 1), ("a0", 1), ("b", 1)))
    for bad in (0, 1):
        with pytest.raises(ValueError):
            build_adder_component(layout, bad, +1)
    with pytest.raises(IndexError):
        build_adder_component(layout, 3, +1)
    with pytest.raises(ValueError):
        build_adder_component(layout, 2, 2)


def digit_rows(d, layout, joint_index):
    """Split a global basis index into one DigitString per register."""
    row = []
    rest = joint_index
    for _ in range(layout.total_qudits):
        row.append(rest % d)
        rest //= d
    row.reverse()
    digits = []
    pos = 0
    for _, size in layout.registers:
        digits.append(DigitString(d, tuple(row[pos : pos + size])))
        pos += size
    return digits


def test_component_shifts_fourier_state():
    """QFT, one component, IQFT moves |S> to |S+b> for every S and b."""
    d, t, n = 2, 2, 2
    layout = RegisterLayout(d, (("anc", t), ("a0", n), ("b", n)))
    span = range(t + n)
    dim = d ** (t + n)
    for sign in (+1, -1):
        frag = concat(
            [
                build_qft(layout, span),
                build_adder_component(layout, 2, sign),
                build_iqft(layout, span),
            ]
        )
        for s_val in range(dim):
            for b_val in range(d**n):
                joint = s_val * (d**n) + b_val
                init = basis_state(layout, digit_rows(d, layout, joint))
                state = execute(frag, init)
                want = ((s_val + sign * b_val) % dim) * (d**n) + b_val
                assert abs(state.amplitudes[want]) > 1 - 1e-9


def test_full_adder_qubit_case_study():
    spec = AdderSpec(base=2, digits_per_input=2, num_inputs=4, mode=Mode.ADD, inputs=(3, 2, 1, 2))
    state = execute(build_full_adder(spec))
    assert classical_oracle(spec) == 8
    assert result_probability(spec, state, 8) > 1 - 1e-9


def test_full_adder_ququart_case_study():
    spec = AdderSpec(base=4, digits_per_input=1, num_inputs=4, mode=Mode.ADD, inputs=(3, 2, 1, 2))
    state = execute(build_full_adder(spec))
    assert classical_oracle(spec) == 8
    assert result_probability(spec, state, 8) > 1 - 1e-9


def test_full_adder_single_input_is_identity_pipeline():
    spec = AdderSpec(base=3, digits_per_input=2, num_inputs=1, mode=Mode.ADD, inputs=(5,))
    circ = build_full_adder(spec)
    tally = circ.tally()
    assert tally[GateKind.CPHASE] == 2  # one per QFT and IQFT, no components
    state = execute(circ)
    assert result_probability(spec, state, 5) > 1 - 1e-9


def test_full_adder_sub_wraps_modulo():
    spec = AdderSpec(base=2, digits_per_input=2, num_inputs=2, mode=Mode.SUB, inputs=(1, 3))
    state = execute(build_full_adder(spec))
    assert classical_oracle(spec) == 6
    assert result_probability(spec, state, 6) > 1 - 1e-9


def test_full_adder_preserves_other_registers():
    spec = AdderSpec(base=2, digits_per_input=2, num_inputs=3, mode=Mode.ADD, inputs=(2, 3, 1))
    state = execute(build_full_adder(spec))
    # joint outcome: result 6 in the span, inputs 3 and 1 still encoded behind it
    width = spec.result_width
    joint = (6 * 4 + 3) * 4 + 1
    assert abs(state.amplitudes[joint]) > 1 - 1e-9


def test_classical_oracle_examples():
    add = AdderSpec(base=2, digits_per_input=2, num_inputs=4, mode=Mode.ADD, inputs=(3, 2, 1, 2))
    assert classical_oracle(add) == 8
    zeros = AdderSpec(base=2, digits_per_input=2, num_inputs=4, mode=Mode.ADD, inputs=(0, 0, 0, 0))
    assert classical_oracle(zeros) == 0
    sub = AdderSpec(base=2, digits_per_input=2, num_inputs=2, mode=Mode.SUB, inputs=(1, 3))
    assert classical_oracle(sub) == 6


@settings(deadline=None, max_examples=40)
@given(st.data())
def test_full_adder_matches_oracle_random(data):
    d = data.draw(st.integers(2, 4), label="base")
    n = data.draw(st.integers(1, 2), label="digits")
    max_inputs = 4 if d == 2 else 3
    count = data.draw(st.integers(1, max_inputs), label="inputs")
    t = required_ancillas(count, d)
    if t + (count + 1) * n > 10:  # keep the dense state small
        count = 2
        t = required_ancillas(count, d)
    values = tuple(
        data.draw(st.integers(0, d**n - 1), label=f"a{i}") for i in range(count)
    )
    mode = data.draw(st.sampled_from([Mode.ADD, Mode.SUB]), label="mode")
    spec = AdderSpec(
        base=d, digits_per_input=n, num_inputs=count, mode=mode, inputs=values
    )
    state = execute(build_full_adder(spec))
    assert result_probability(spec, state, classical_oracle(spec)) > 1 - 1e-9


def test_sum_never_overflows_capacity():
    for d in (2, 3, 4, 5):
        for n in (1, 2, 3):
            for count in (1, 2, 5, 9):
                t = required_ancillas(count, d)
                worst = count * (d**n - 1)
                assert worst < d ** (t + n)
