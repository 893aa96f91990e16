"""How well does the log-log estimator recover a known exponent?

Draws corpora from truncated power laws with known n, fits them, and
tabulates the error three ways: noiseless tables, sampled tables, and
sampled tables refit with the long tail truncated. The experiment shows
the estimator's one real weakness: equal-weight least squares on a raw
frequency table is dragged down by tail levels observed only once, and
growing the corpus or truncating the tail removes the bias.
"""

import numpy as np

from lotkalaw import SynthSpec, exact_distribution, fit_exponent_lsq, sample_distribution

TARGETS = (1.8, 2.0, 2.54, 3.0)
X_MAX = 100
SEEDS = range(20)


def mean_sampled_fit(n: float, authors: int, max_x: int | None = None) -> float:
    fits = [
        fit_exponent_lsq(
            sample_distribution(SynthSpec(n, authors, X_MAX, seed)), max_x=max_x
        ).n
        for seed in SEEDS
    ]
    return float(np.mean(fits))


def main() -> None:
    print("noiseless tables (expected counts rounded to integers):")
    print(f"{'target':>8} {'authors 10^4':>14} {'authors 10^6':>14}")
    for n in TARGETS:
        small = fit_exponent_lsq(exact_distribution(n, 10_000, X_MAX)).n
        large = fit_exponent_lsq(exact_distribution(n, 1_000_000, X_MAX)).n
        print(f"{n:>8.2f} {small:>14.4f} {large:>14.4f}")
    print()

    print("sampled tables, mean fit over 20 seeds:")
    print(f"{'target':>8} {'authors 10^4':>14} {'authors 10^6':>14} {'10^4, x<=10':>14}")
    for n in TARGETS:
        plain = mean_sampled_fit(n, 10_000)
        large = mean_sampled_fit(n, 1_000_000)
        truncated = mean_sampled_fit(n, 10_000, max_x=10)
        print(f"{n:>8.2f} {plain:>14.4f} {large:>14.4f} {truncated:>14.4f}")
    print()

    print("reading the table:")
    print("- with 10^4 authors the raw fit lands far below steep targets;")
    print("  most support levels hold a single author, and that plateau of")
    print("  y=1 rows flattens the regression line.")
    print("- a hundred times more authors fills the tail with real mass and")
    print("  the bias all but disappears.")
    print("- so does refitting the small corpora on levels x <= 10 only,")
    print("  which is what the fit truncation knob is for.")


if __name__ == "__main__":
    main()
