"""JSON config parsing and report serialization.

Configs use 1-based direction indices and human notation throughout;
the library itself is 0-based.  A pattern config looks like

    {"b": [[0, 1], [-1, 0]],
     "degrees": [2, 1],
     "semifield": ["w"],
     "y": ["1", "w^-1"],
     "z": {"1": ["w"]}}

``degrees`` defaults to all 1, ``semifield`` to no generators, ``y`` to
all "1" and ``z`` to all interior coefficients "1".  With
``"principal": true`` only ``b`` and ``degrees`` may appear; the formal
coefficient pattern is constructed automatically.
"""

from __future__ import annotations

from .errors import ConfigError
from .invariants import PrincipalPattern
from .seeds import ClusterPattern, ExchangeMatrix, MutationPair
from .semifield import TropicalSemifield


def _require(cond, path, message):
    if not cond:
        raise ConfigError("%s: %s" % (path, message))


def _int_matrix(value, path):
    _require(isinstance(value, list) and value, path, "expected a nonempty matrix")
    n = len(value)
    rows = []
    for i, row in enumerate(value):
        _require(isinstance(row, list) and len(row) == n,
                 "%s[%d]" % (path, i), "expected a row of length %d" % n)
        for j, v in enumerate(row):
            _require(isinstance(v, int) and not isinstance(v, bool),
                     "%s[%d][%d]" % (path, i, j), "expected an integer")
        rows.append(tuple(row))
    return tuple(rows)


def _parse_monomial(semifield, text, path):
    _require(isinstance(text, str), path, "expected a monomial string")
    try:
        return semifield.parse(text)
    except Exception as e:
        raise ConfigError("%s: %s" % (path, e))


def pattern_from_config(cfg, path="") -> ClusterPattern:
    prefix = path + "." if path else ""
    _require(isinstance(cfg, dict), path or "config", "expected an object")
    known = {"b", "degrees", "semifield", "y", "z", "principal"}
    for key in cfg:
        _require(key in known, prefix + key, "unknown field")
    _require("b" in cfg, prefix + "b", "required field missing")
    rows = _int_matrix(cfg["b"], prefix + "b")
    n = len(rows)

    degrees = cfg.get("degrees", [1] * n)
    _require(isinstance(degrees, list) and len(degrees) == n,
             prefix + "degrees", "expected a list of %d integers" % n)
    for i, r in enumerate(degrees):
        _require(isinstance(r, int) and not isinstance(r, bool) and r >= 1,
                 "%s[%d]" % (prefix + "degrees", i), "expected a positive integer")

    if cfg.get("principal", False):
        for key in ("semifield", "y", "z"):
            _require(key not in cfg, prefix + key,
                     "not allowed with principal=true")
        try:
            return PrincipalPattern(ExchangeMatrix(rows), degrees)
        except Exception as e:
            raise ConfigError("%s: %s" % (prefix + "b", e))

    gens = cfg.get("semifield", [])
    _require(isinstance(gens, list), prefix + "semifield",
             "expected a list of generator names")
    for i, g in enumerate(gens):
        _require(isinstance(g, str) and g, "%s[%d]" % (prefix + "semifield", i),
                 "expected a nonempty name")
    try:
        semifield = TropicalSemifield(tuple(gens))
    except Exception as e:
        raise ConfigError("%s: %s" % (prefix + "semifield", e))

    y_texts = cfg.get("y", ["1"] * n)
    _require(isinstance(y_texts, list) and len(y_texts) == n,
             prefix + "y", "expected a list of %d monomials" % n)
    y0 = tuple(_parse_monomial(semifield, t, "%s[%d]" % (prefix + "y", i))
               for i, t in enumerate(y_texts))

    z_cfg = cfg.get("z", {})
    _require(isinstance(z_cfg, dict), prefix + "z",
             "expected an object keyed by 1-based direction")
    one = semifield.one()
    frozen = [[one] * (degrees[k] - 1) for k in range(n)]
    for key, values in z_cfg.items():
        zpath = "%sz.%s" % (prefix, key)
        _require(isinstance(key, str) and key.isdigit() and 1 <= int(key) <= n,
                 zpath, "expected a direction between 1 and %d" % n)
        k = int(key) - 1
        _require(isinstance(values, list) and len(values) == degrees[k] - 1,
                 zpath, "expected %d interior coefficients" % (degrees[k] - 1))
        frozen[k] = [_parse_monomial(semifield, t, "%s[%d]" % (zpath, i))
                     for i, t in enumerate(values)]
    try:
        pair = MutationPair(semifield, degrees, [tuple(zk) for zk in frozen])
        return ClusterPattern(ExchangeMatrix(rows), pair, y0)
    except ConfigError:
        raise
    except Exception as e:
        raise ConfigError("%s: %s" % (path or "config", e))


def pattern_to_config(pattern: ClusterPattern) -> dict:
    cfg = {"b": pattern.b0.to_lists()}
    if isinstance(pattern, PrincipalPattern):
        cfg["degrees"] = list(pattern.pair.degrees)
        cfg["principal"] = True
        return cfg
    pair = pattern.pair
    if any(r != 1 for r in pair.degrees):
        cfg["degrees"] = list(pair.degrees)
    if pattern.semifield.generators:
        cfg["semifield"] = list(pattern.semifield.generators)
    if any(not c.is_one() for c in pattern.y0):
        cfg["y"] = [str(c) for c in pattern.y0]
    z = {}
    for k, zk in enumerate(pair.frozen):
        if any(not v.is_one() for v in zk):
            z[str(k + 1)] = [str(v) for v in zk]
    if z:
        cfg["z"] = z
    return cfg


def pair_from_config(cfg) -> "AlgebraPair":
    from .correspondence import make_pair
    _require(isinstance(cfg, dict), "config", "expected an object")
    _require("left" in cfg, "left", "required field missing")
    left = pattern_from_config(cfg["left"], "left")
    right = None
    if "right" in cfg:
        right = pattern_from_config(cfg["right"], "right")
    for key in cfg:
        _require(key in ("left", "right"), key, "unknown field")
    return make_pair(left, right)


def parse_path(text, n):
    """Comma-separated 1-based direction list; '' means the empty path."""
    if text is None or text.strip() == "":
        return ()
    out = []
    for piece in text.split(","):
        piece = piece.strip()
        _require(piece.isdigit() and 1 <= int(piece) <= n, "path",
                 "%r is not a direction between 1 and %d" % (piece, n))
        out.append(int(piece) - 1)
    return tuple(out)


def seed_dump(pattern: ClusterPattern, path) -> dict:
    """Full JSON rendering of the seed reached along ``path``."""
    from .invariants import (c_matrix, d_matrix_from_laurent, f_polynomials,
                             g_matrix)
    path = tuple(path)
    seed = pattern.seed_at(path)
    out = {"path": [k + 1 for k in path]}
    out.update(seed.render())
    out["d_matrix"] = [list(c) for c in d_matrix_from_laurent(seed)]
    if isinstance(pattern, PrincipalPattern):
        out["c_matrix"] = [list(c) for c in c_matrix(pattern, path)]
        out["g_matrix"] = [list(c) for c in g_matrix(pattern, seed)]
        out["f_polynomials"] = [str(f) for f in f_polynomials(pattern, seed)]
    return out
