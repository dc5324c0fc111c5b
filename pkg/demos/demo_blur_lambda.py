"""Blurriness metric walkthrough: from an image to its style weight.

Scores the bundled backgrounds with the FFT high-pass metric, then shows
how the step schedule turns each score into the style-loss weight the
second pass will use.

Run from the repo root:  python demos/demo_blur_lambda.py
"""

import os

from iburd import blurriness_mean, lambda_for, load_png, to_gray
from iburd.blur import DEFAULT_SCHEDULE

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def main():
    print("schedule (lower bound -> weight):")
    for bound, weight in DEFAULT_SCHEDULE.entries:
        print(f"  mean >= {bound:>6}: lambda = {weight:g}")
    print()

    for name in ("sharp_reef.png", "blurry_pool.png", "constant.png"):
        img, _ = load_png(os.path.join(ROOT, "fixtures", name))
        mean = blurriness_mean(to_gray(img))
        print(f"{name:>18}: {mean:8.2f} dB -> lambda {lambda_for(mean):g}")

    print("\nSharper backgrounds keep more high-frequency energy, score higher,")
    print("and earn a stronger style weight; blurry ones are restyled gently")
    print("so the pasted object's shape survives.")


if __name__ == "__main__":
    main()
