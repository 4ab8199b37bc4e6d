"""Run the two reference adder configurations and print their histograms.

Both sum the inputs 3, 2, 1, 2 to 8: once with two-bit binary registers
(ten qubits total) and once with single ququart registers (five qudits).
The second needs under a third of the phase gates at equal output range.
"""

import argparse

from qftadd import (
    AdderSpec,
    Mode,
    NoiseConfig,
    build_full_adder,
    classical_oracle,
    execute,
    gate_count_formula,
    measure,
)


def run_one(base: int, digits: int, shots: int, noise_p: float, seed: int) -> None:
    spec = AdderSpec(
        base=base,
        digits_per_input=digits,
        num_inputs=4,
        mode=Mode.ADD,
        inputs=(3, 2, 1, 2),
    )
    circuit = build_full_adder(spec)
    state = execute(circuit)
    formula = gate_count_formula(digits, 4, spec.ancillas)
    print(f"base {base}, {digits} digit(s) per input, {spec.ancillas} ancilla(s), "
          f"{formula} gates (encoding shifts aside)")
    print(f"  expected sum: {classical_oracle(spec)}")
    for p in (0.0, noise_p):
        noise = NoiseConfig(readout_flip_probability=p, seed=seed)
        hist = measure(state, range(spec.result_width), shots, noise)
        ordered = sorted(hist.counts.items(), key=lambda kv: -kv[1])
        shown = ", ".join(f"{key}:{count}" for key, count in ordered[:6])
        extra = "" if len(ordered) <= 6 else f" (+{len(ordered) - 6} more)"
        print(f"  p={p:0.2f}: {shown}{extra}")
    print()


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--shots", type=int, default=4096)
    parser.add_argument("--noise", type=float, default=0.05)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    run_one(2, 2, args.shots, args.noise, args.seed)
    run_one(4, 1, args.shots, args.noise, args.seed)


if __name__ == "__main__":
    main()
