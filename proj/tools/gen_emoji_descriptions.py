#!/usr/bin/env python3
# Copyright 2026 The Hasoc Joint Authors.
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

"""Writes emoji<TAB>description lines from Unicode character names."""

import sys
import unicodedata

RANGES = [(0x2600, 0x27BF), (0x1F300, 0x1FAFF)]
SKIN_TONES = range(0x1F3FB, 0x1F400)


def main():
    out = sys.stdout
    for lo, hi in RANGES:
        for cp in range(lo, hi + 1):
            if cp in SKIN_TONES:
                continue
            ch = chr(cp)
            name = unicodedata.name(ch, "")
            if not name or unicodedata.category(ch) != "So":
                continue
            out.write("%s\t%s\n" % (ch, name.lower()))


if __name__ == "__main__":
    main()
