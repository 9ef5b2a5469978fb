"""Frozen-time spectral analysis of an identified input-output model.

At every instant the current coefficient row defines a stationary filter;
sweeping the instants yields a time-frequency power map, a response
magnitude map, and continuous tracks of natural frequency and damping.
"""

import os

import numpy as np

from tvarx import (EstimationOptions, ModelStructure, TimeFrequencyGrid,
                   frozen_frf, frozen_modes, frozen_psd,
                   three_pass_estimate, write_grid_csv)
from tvarx.frozen_spectral import write_modal_csvs

import importlib.util

OUT = os.path.join(os.path.dirname(__file__), "output")
record_path = os.path.join(OUT, "record_30C.csv")
if not os.path.exists(record_path):
    _spec = importlib.util.spec_from_file_location(
        "synth_demo", os.path.join(os.path.dirname(__file__),
                                   "01_synthesize_and_inspect.py"))
    _mod = importlib.util.module_from_spec(_spec)
    _spec.loader.exec_module(_mod)

from tvarx import read_signal_csv, tone_burst
from tvarx.signal_core import Signal

y = read_signal_csv(record_path)
burst = tone_burst(5, 250e3, 1.0, y.ts)
x_samples = np.zeros(y.n)
x_samples[: burst.n] = burst.samples
x = Signal(x_samples, y.ts, y.t0)

structure = ModelStructure(6, 6, 0.7)
traj = three_pass_estimate(y, x, structure, EstimationOptions())
print(f"identified {structure.label()} on N={y.n}")

freqs = np.linspace(0.0, 1e6, 501)
psd = frozen_psd(traj, freqs)
write_grid_csv(TimeFrequencyGrid(psd.times, psd.freqs, psd.psd, 0.0),
               os.path.join(OUT, "frozen_psd.csv"))
frf = frozen_frf(traj, freqs)
write_grid_csv(TimeFrequencyGrid(frf.times, frf.freqs, frf.frf_mag, 0.0),
               os.path.join(OUT, "frozen_frf.csv"))

track = frozen_modes(traj)
write_modal_csvs(track, os.path.join(OUT, "frozen"))
print(f"modal track: {track.n_modes} modes per instant")

# summarize where the oscillatory modes live (packet region of the record)
packet = slice(0, 200)
for i in range(track.n_modes):
    freqs_i = track.frequencies[i, packet]
    present = np.isfinite(freqs_i)
    if not present.any():
        print(f"  mode {i + 1}: absent in the packet region")
        continue
    f_med = np.nanmedian(freqs_i)
    z_med = np.nanmedian(track.dampings[i, packet])
    share_real = float(np.mean(track.real_mode[i, packet][present]))
    print(f"  mode {i + 1}: median {f_med / 1e3:7.1f} kHz, "
          f"median damping {z_med:6.3f}, real-pole share {share_real:.0%}, "
          f"present {present.mean():.0%} of instants")

ridge = psd.freqs[np.argmax(psd.psd[:, packet], axis=0)]
print(f"frozen-spectrum ridge over the packet region spans "
      f"{np.min(ridge) / 1e3:.0f}-{np.max(ridge) / 1e3:.0f} kHz; "
      f"plot-ready CSVs in {OUT}")
