"""Annotation geometry walkthrough: polygons that track their patch.

Shows the transform chain a source annotation goes through (scale into the
letterbox square, quarter turn, translate to the grid cell) and exports a
one-image COCO document.

Run from the repo root:  python demos/demo_annotations.py
"""

import json
import os

from iburd import Annotation, CocoDataset, coco_export, transform_annotation
from iburd.pipeline import SourceSpec, load_source

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def describe(tag, ann):
    x, y, w, h = ann.bbox
    print(f"{tag:>28}: bbox=({x:.1f}, {y:.1f}, {w:.1f}, {h:.1f}) area={ann.area:.1f}")


def main():
    source = load_source(SourceSpec(
        image=os.path.join(ROOT, "fixtures", "starfish.png"),
        mask=None, category="starfish",
    ))
    ann = Annotation.from_polygons(1, source.polygons)
    describe("source frame (96x80)", ann)

    # scale into a 48x48 letterbox: content becomes 48x40 at dy=4
    boxed = transform_annotation(ann, (96, 80), (48, 40), 0, (0, 4))
    describe("letterboxed into 48x48", boxed)

    # quarter turn inside the square, then translate to a grid cell
    turned = transform_annotation(boxed, (48, 48), (48, 48), 1, (0, 0))
    describe("rotated 90 degrees CW", turned)
    placed = transform_annotation(turned, (48, 48), (48, 48), 0, (72, 16))
    describe("placed at cell offset", placed)

    ds = CocoDataset()
    ds.add_category(1, "starfish")
    ds.add_image(1, "images/000000.png", 128, 128)
    ds.add_annotation(1, 1, placed)
    doc = json.loads(coco_export(ds))
    print("\nCOCO fragment:")
    print(json.dumps(doc["annotations"][0], indent=2)[:400], "...")


if __name__ == "__main__":
    main()
