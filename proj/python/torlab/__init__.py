"""Python access to the torlab corpus checks and testers."""

import json

from . import _core
from ._core import TorlabError, check_ids

__all__ = ["TorlabError", "check_ids", "reference_index", "verify", "nonwpr_descriptor", "wpr_principal"]


def reference_index():
    return [dict(zip(("check_id", "paper_ref", "summary"), row)) for row in _core.reference_index()]


def verify(ids="all", *, bound=12, window=8, samples=100, seed=1, p=None, levels=2, timing=True):
    """Run checks and return the suite document as a dict."""
    if ids == "all":
        ids = check_ids()
    elif isinstance(ids, str):
        ids = [ids]
    return json.loads(_core.verify_json(list(ids), bound, window, samples, seed, p, levels, timing))


def nonwpr_descriptor(V=8):
    return json.loads(_core.nonwpr_descriptor_json(V))


def wpr_principal(ring, element, U=3, V=8):
    if not isinstance(ring, str):
        ring = json.dumps(ring)
    return json.loads(_core.wpr_principal_json(ring, element, U, V))
