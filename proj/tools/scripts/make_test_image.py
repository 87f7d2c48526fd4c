# Copyright 2026 The difflab Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes data/scene_321x481.pgm, a synthetic greyscale test scene."""

import sys

import numpy as np

W, H = 321, 481


def scene():
    y, x = np.mgrid[0:H, 0:W].astype(np.float64)
    img = 70.0 + 90.0 * y / (H - 1)                      # sky-like ramp
    hill = H * 0.62 + 40.0 * np.sin(x / 37.0)
    img = np.where(y > hill, 45.0 + 25.0 * np.cos(x / 9.0) * np.sin(y / 7.0), img)
    disc = (x - 210.0) ** 2 + (y - 120.0) ** 2 < 48.0 ** 2
    img = np.where(disc, 225.0, img)
    box = (np.abs(x - 90.0) < 38.0) & (np.abs(y - 250.0) < 70.0)
    img = np.where(box, 150.0 + 40.0 * ((x // 8 + y // 8) % 2), img)
    ring = np.abs(np.hypot(x - 160.0, y - 400.0) - 30.0) < 4.0
    img = np.where(ring, 245.0, img)
    return np.clip(np.rint(img), 1, 255).astype(np.uint8)


def main(path):
    data = scene()
    with open(path, "wb") as f:
        f.write(b"P5\n%d %d\n255\n" % (W, H))
        f.write(data.tobytes())


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/scene_321x481.pgm")
