"""Analyze a framework of your own through the JSON document format.

A triangle base with two joints hanging off one bar: each pendant can flip
across that bar independently, and a bar between the pendants decides which
flips survive.
"""
import json

from rigidkit import FrameworkDocument, decide_global_rigidity, detect_pendant_structure

text = json.dumps({
    "dim": 2,
    "vertices": [
        {"id": 1, "coords": ["0", "0"]},
        {"id": 2, "coords": ["2", "0"]},
        {"id": 3, "coords": ["1", "3/2"]},
        {"id": 4, "coords": ["1/2", "1"]},
        {"id": 5, "coords": ["3/2", "-1/2"]},
    ],
    "edges": [[1, 2], [1, 3], [2, 3], [1, 4], [2, 4], [1, 5], [2, 5], [4, 5]],
    "base": [1, 2, 3],
})
doc = FrameworkDocument.loads(text)
ps = detect_pendant_structure(doc.framework, doc.base)
print("pendants", ps.pendants, "filter bars", ps.filter_edges)
for pendant in ps.pendants:
    print(f"  pendant {pendant} hangs on {ps.attachments(pendant)}")

verdict = decide_global_rigidity(ps)
print(verdict.status.value, f"({verdict.survivors} of {verdict.classes} mirror choices keep every bar)")
if verdict.witness is not None:
    print("an equivalent, non-congruent placement:", verdict.witness)
