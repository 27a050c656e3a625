#!/usr/bin/env python3
# Copyright 2026 The stcvrp Authors
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
"""Solves an exported LP file with HiGHS and prints `name value` lines.

Usage: solve_lp.py MODEL.lp [SOLUTION.txt] [--time-limit SECONDS]

Exit status is 0 on a proven optimum, 4 if highspy is missing, 5 otherwise.
"""

import argparse
import sys


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("model")
    parser.add_argument("solution", nargs="?")
    parser.add_argument("--time-limit", type=float, default=600.0)
    args = parser.parse_args()

    try:
        import highspy
    except ImportError:
        print("highspy is not installed", file=sys.stderr)
        return 4

    h = highspy.Highs()
    h.setOptionValue("output_flag", False)
    h.setOptionValue("time_limit", args.time_limit)
    h.setOptionValue("mip_rel_gap", 0.0)
    if h.readModel(args.model) != highspy.HighsStatus.kOk:
        print(f"cannot read {args.model}", file=sys.stderr)
        return 5
    h.run()
    if h.getModelStatus() != highspy.HighsModelStatus.kOptimal:
        print(f"status: {h.modelStatusToString(h.getModelStatus())}",
              file=sys.stderr)
        return 5

    lp = h.getLp()
    values = h.getSolution().col_value
    lines = [f"{name} {value:.12g}" for name, value in zip(lp.col_names_, values)]
    text = "\n".join(lines) + "\n"
    if args.solution:
        with open(args.solution, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    print(f"objective {h.getInfo().objective_function_value:.12g}",
          file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
