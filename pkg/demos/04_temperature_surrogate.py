"""Temperature-indexed surrogate: train on a few temperatures, simulate
anywhere in (and a little beyond) the training range.

One shared TARX structure is identified at each training temperature;
querying an unseen temperature interpolates every coefficient across
temperature and runs the interpolated model as a simulator. The printed
table mirrors the usual accuracy-vs-scheme comparison.
"""

import os

import numpy as np

from tvarx import (EstimationOptions, ModelStructure, build_surrogate,
                   evaluate, write_surrogate_json)
from tvarx import (SynthConfig, crop, decimate, synth_guided_wave,
                   tone_burst)
from tvarx.errors import DomainRefusalError, NumericalError
from tvarx.signal_core import Signal

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

TS_FAST = 1.0 / 24e6
DECIM = 12
TS = TS_FAST * DECIM
N = 401
CROP = int((0.4 / 5500.0) / TS) - 4


def make_record(temp, noise_std=2e-3, seed=0):
    cfg = SynthConfig(
        plate_length=0.04, propagation_distance=0.4,
        mode_velocities=(5500.0, 4400.0), mode_amplitudes=(1.0, 0.7),
        reflection_count=15, reflection_decay=0.75,   # echo-rich coda
        temperature=temp, temp_ref=30.0,
        delay_sensitivity=1e-4, amplitude_sensitivity=-2e-3,
        noise_std=noise_std, seed=seed)
    act = tone_burst(5, 250e3, 1.0, TS_FAST)
    fast = synth_guided_wave(cfg, act, duration=450e-6)
    return crop(decimate(fast, DECIM), CROP, N)


burst = tone_burst(5, 250e3, 1.0, TS)
x_samples = np.zeros(N)
x_samples[: burst.n] = burst.samples
x = Signal(x_samples, TS)

temps = [30.0, 40.0, 50.0, 60.0, 70.0, 80.0, 90.0]
training = [(t, make_record(t, seed=100 + i), x) for i, t in enumerate(temps)]
structure = ModelStructure(6, 6, 0.7)
model = build_surrogate(training, structure, EstimationOptions(),
                        scheme="linear")
write_surrogate_json(model, os.path.join(OUT, "surrogate.json"))
print(f"surrogate: {structure.label()} trained at {temps} C")

queries = [35.0, 55.0, 62.5, 87.0, 95.0, 100.0]
schemes = ("linear", "spline", "v5cubic")
print(f"\nESS/SSS(%) of the zero-noise simulation against held-out truth")
print(f"{'T (C)':>7} " + " ".join(f"{s:>10}" for s in schemes))
for t_query in queries:
    truth = make_record(t_query, noise_std=0.0)
    cells = []
    for scheme in schemes:
        try:
            score = evaluate(model, t_query, x, truth, scheme)
            cells.append(f"{100 * score:10.4f}")
        except DomainRefusalError:
            cells.append(f"{'refused':>10}")
        except NumericalError:
            cells.append(f"{'diverged':>10}")
    tag = "" if model.temps[0] <= t_query <= model.temps[-1] else "  (extrapolated)"
    print(f"{t_query:>7.1f} " + " ".join(cells) + tag)

print("\ncubic convolution refuses out-of-range queries by design; the")
print("linear and spline schemes extrapolate but degrade away from the")
print("training range, so far-out temperatures need more training sets.")
