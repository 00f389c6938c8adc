"""Persist and reload quadrature rules as plain text tables.

Format (version 1): a header line ``GAUSSTAB 1``, then for each rule a
line ``N <n>`` followed by n lines ``<node> <weight>`` with 17
significant digits, nodes ascending.  17 digits round-trip doubles
bit-exactly, writes go through a temp file plus rename so a crash never
leaves a torn table, and every loaded rule is re-validated: a cache is
derived data and must never be trusted blindly.
"""

from __future__ import annotations

import math
import os
import sys
import tempfile
from typing import Iterable

from . import quadrature
from .errors import TableError
from .quadrature import QuadratureRule

FORMAT_NAME = "GAUSSTAB"
FORMAT_VERSION = 1

_SUM_TOL = 1e-12


def _fmt(v: float) -> str:
    return f"{v:.17g}"


def rule_violation(rule: QuadratureRule) -> str | None:
    """Description of the first violated rule invariant, or None."""
    n, nodes, weights = rule.n, rule.nodes, rule.weights
    if n < 1 or len(nodes) != n or len(weights) != n:
        return f"expected {n} node/weight pairs, found {len(nodes)}"
    for x in nodes:
        if not -1.0 < x < 1.0:
            return f"node {x!r} outside the open interval (-1, 1)"
    for a, b in zip(nodes, nodes[1:]):
        if not a < b:
            return "nodes are not strictly ascending"
    for w in weights:
        if not w > 0.0:
            return f"non-positive weight {w!r}"
    if abs(math.fsum(weights) - 2.0) > _SUM_TOL:
        return f"weights sum to {math.fsum(weights)!r}, not 2"
    if abs(math.fsum(w * x for w, x in zip(weights, nodes))) > _SUM_TOL:
        return "first moment of the weights is not 0"
    for i in range(n // 2):
        if abs(weights[i] - weights[n - 1 - i]) > _SUM_TOL:
            return f"weights are not symmetric at index {i}"
    return None


def dumps_tables(rules: Iterable[QuadratureRule]) -> str:
    """Serialize rules (deduplicated by n, ascending) to the text format."""
    by_n = {rule.n: rule for rule in rules}
    lines = [f"{FORMAT_NAME} {FORMAT_VERSION}"]
    for n in sorted(by_n):
        rule = by_n[n]
        lines.append(f"N {n}")
        lines.extend(f"{_fmt(x)} {_fmt(w)}" for x, w in zip(rule.nodes, rule.weights))
    return "\n".join(lines) + "\n"


def save_tables(rules: Iterable[QuadratureRule], path: str) -> None:
    """Write rules to ``path`` atomically (temp file + rename)."""
    path = os.fspath(path)
    text = dumps_tables(rules)
    directory = os.path.dirname(path) or "."
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".gausstab.")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def load_tables(path: str) -> dict[int, QuadratureRule]:
    """Load and validate every rule in the file, keyed by point count.

    Raises TableError for a bad header, version mismatch, malformed or
    truncated lines (with the line number), or any invariant violation;
    FileNotFoundError passes through for a missing file.
    """
    path = os.fspath(path)
    try:
        with open(path, encoding="ascii") as fh:
            lines = fh.read().splitlines()
    except UnicodeDecodeError as exc:
        raise TableError(f"{path}: not a text table ({exc})") from None
    if not lines:
        raise TableError(f"{path}:1: empty file, expected '{FORMAT_NAME} <version>'")
    header = lines[0].split()
    if len(header) != 2 or header[0] != FORMAT_NAME:
        raise TableError(f"{path}:1: not a rule table, expected '{FORMAT_NAME} <version>'")
    if header[1] != str(FORMAT_VERSION):
        raise TableError(f"{path}:1: unsupported format version {header[1]!r}")
    rules: dict[int, QuadratureRule] = {}
    ln = 1
    while ln < len(lines):
        parts = lines[ln].split()
        if len(parts) != 2 or parts[0] != "N":
            raise TableError(f"{path}:{ln + 1}: malformed line, expected 'N <n>'")
        try:
            n = int(parts[1])
        except ValueError:
            raise TableError(f"{path}:{ln + 1}: malformed point count {parts[1]!r}") from None
        if n < 1:
            raise TableError(f"{path}:{ln + 1}: point count must be positive, got {n}")
        if n in rules:
            raise TableError(f"{path}:{ln + 1}: duplicate rule for n={n}")
        nodes, weights = [], []
        for k in range(n):
            ln += 1
            if ln >= len(lines):
                raise TableError(
                    f"{path}:{ln + 1}: truncated rule block for n={n} "
                    f"(expected {n} node/weight lines, found {k})"
                )
            pair = lines[ln].split()
            try:
                if len(pair) != 2:
                    raise ValueError
                nodes.append(float(pair[0]))
                weights.append(float(pair[1]))
            except ValueError:
                raise TableError(
                    f"{path}:{ln + 1}: malformed line, expected '<node> <weight>'"
                ) from None
        rule = QuadratureRule(n=n, nodes=tuple(nodes), weights=tuple(weights))
        violation = rule_violation(rule)
        if violation is not None:
            raise TableError(f"{path}: rule n={n} violates an invariant: {violation}")
        rules[n] = rule
        ln += 1
    return rules


def get_or_build(cache_path: str, n: int) -> QuadratureRule:
    """Return the cached n-point rule, building and appending on a miss.

    A corrupt cache is rebuilt from scratch after a warning on stderr;
    the cache is derived data, so this is recovery, not failure.
    """
    cache_path = os.fspath(cache_path)
    rules: dict[int, QuadratureRule] = {}
    try:
        rules = load_tables(cache_path)
    except FileNotFoundError:
        pass
    except TableError as exc:
        print(
            f"warning: discarding corrupt rule cache ({exc}); rebuilding",
            file=sys.stderr,
        )
        rules = {}
    if n in rules:
        return rules[n]
    rule = quadrature.gauss_rule(n)
    rules[n] = rule
    save_tables(rules.values(), cache_path)
    return rule


def default_cache_path() -> str:
    """CALCVERIFY_CACHE if set, else a per-user cache directory."""
    env = os.environ.get("CALCVERIFY_CACHE")
    if env:
        return env
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return os.path.join(base, "calcverify", "rules.gausstab")
