"""Second-pass walkthrough: restyling a composite toward its background.

Loads the 128x128 fixture pair, runs a short bounded L-BFGS loop on the
total objective (style + content + smoothness), and prints the loss trace.
Uses the deterministic random-weight archive, so the images change texture
rather than becoming photorealistic; swap in a real exported archive to see
the production behavior.

Run from the repo root:  python demos/demo_style_transfer.py
"""

import os

from iburd import load_png, save_png, second_pass
from iburd.vgg import load_weights

HERE = os.path.dirname(os.path.abspath(__file__))
ROOT = os.path.dirname(HERE)
OUT = os.path.join(HERE, "output")


def ensure_weights() -> str:
    path = os.path.join(ROOT, "fixtures", "random_vgg_prefix.ibwt")
    if not os.path.exists(path):
        import sys

        sys.path.insert(0, os.path.join(ROOT, "tests"))
        from conftest import ensure_random_prefix

        ensure_random_prefix()
    return path


def main():
    os.makedirs(OUT, exist_ok=True)
    net = load_weights(ensure_weights())
    first_pass, _ = load_png(os.path.join(ROOT, "fixtures", "first_pass_128.png"))
    background, _ = load_png(os.path.join(ROOT, "fixtures", "background_128.png"))

    result = second_pass(first_pass, background, lambda_style=800.0, iters=15, net=net)
    print("loss trace (accepted steps):")
    for i, loss in enumerate(result.loss_trace):
        print(f"  step {i:2d}: {loss:.4e}")

    out_path = os.path.join(OUT, "second_pass_result.png")
    save_png(result.image, out_path)
    print(f"\nwrote {out_path}")
    print(f"total loss fell {result.initial_loss / max(result.final_loss, 1e-12):.1f}x "
          f"over {len(result.loss_trace) - 1} accepted steps.")


if __name__ == "__main__":
    main()
