#!/usr/bin/env python3
# Copyright 2026 The coarsequant Authors
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

"""Writes the synthetic station-temperature fixture used by the test suite.

25 stations, 4000 consecutive daily maximum temperatures each, in degrees C
rounded to 0.1, station after station. The series mimics a continental
climate: a seasonal cycle, a per-station offset, and day-to-day noise.
Output is deterministic for a given seed.
"""

import argparse
import math
import random

STATIONS = 25
DAYS = 4000


def station_series(rng, station):
    offset = rng.gauss(0.0, 2.5)
    amplitude = 14.0 + rng.uniform(-2.0, 2.0)
    start = rng.randrange(365)
    anomaly = 0.0
    for day in range(DAYS):
        season = math.sin(2.0 * math.pi * (day + start - 110) / 365.25)
        anomaly = 0.7 * anomaly + rng.gauss(0.0, 3.5)
        yield 9.0 + offset + amplitude * season + anomaly


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("output")
    parser.add_argument("--seed", type=int, default=20260115)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    with open(args.output, "w", encoding="utf-8", newline="\n") as out:
        for station in range(STATIONS):
            for value in station_series(rng, station):
                text = f"{value:.1f}"
                out.write(("0.0" if text == "-0.0" else text) + "\n")


if __name__ == "__main__":
    main()
