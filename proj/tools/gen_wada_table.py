#!/usr/bin/env python3
# Copyright 2026 The speechdesc Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Generates the WADA-SNR lookup table used by src/attributes/snr.cc.

Model: clean speech amplitude is Gamma(0.4) distributed with random sign,
noise is zero-mean Gaussian. For each SNR the statistic
  G = log E|x| - E log|x|
of the mixture is evaluated by quadrature.
"""
import math

import numpy as np
from scipy import integrate, special

ALPHA = 0.4


def g_statistic(snr_db: float) -> float:
    speech_power = ALPHA * (ALPHA + 1.0)
    sigma = math.sqrt(speech_power / 10 ** (snr_db / 10.0))
    norm = 1.0 / special.gamma(ALPHA + 1.0)

    # s = t**(1/alpha) removes the density singularity at s = 0.
    def weight(t):
        return norm * math.exp(-t ** (1.0 / ALPHA))

    def folded_mean(t):
        s = t ** (1.0 / ALPHA)
        z = s / sigma
        return weight(t) * (sigma * math.sqrt(2.0 / math.pi) * math.exp(-0.5 * z * z) +
                            s * (1.0 - 2.0 * special.ndtr(-z)))

    def mean_log_abs(t):
        s = t ** (1.0 / ALPHA)
        z = s / sigma
        if z > 12.0:
            # log|s + n| = log s + log|1 + n/s|, second term expanded to O((sigma/s)^2).
            return weight(t) * (math.log(s) - 0.5 / (z * z))

        def inner(n):
            return math.log(abs(s + sigma * n) + 1e-300) * math.exp(-0.5 * n * n)

        val, _ = integrate.quad(inner, -12.0, 12.0, points=[-z], limit=400)
        return weight(t) * val / math.sqrt(2.0 * math.pi)

    mean_abs, _ = integrate.quad(folded_mean, 0.0, 6.0, limit=400)
    mean_log, _ = integrate.quad(mean_log_abs, 0.0, 6.0, limit=400, epsabs=1e-10)
    return math.log(mean_abs) - mean_log


def main() -> None:
    values = [(snr, g_statistic(float(snr))) for snr in range(-20, 101)]
    print("// SNR (dB) from -20 to 100 in 1 dB steps.")
    for i in range(0, len(values), 4):
        print("    " + " ".join(f"{g:.6f}," for _, g in values[i:i + 4]))


if __name__ == "__main__":
    main()
