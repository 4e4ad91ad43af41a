from dataclasses import fields, is_dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Union
import json
import math

from mpmath import mp, mpf

from ..config import DEFAULT_PRECISION_BITS
from ..core.carpet import CarpetSpec, parse_spec
from ..errors import MalformedCarpet


def io_fs(operation: str, path: Union[str, Path], content: str = None) -> Union[str, bool, None]:
    """UTF-8 file system operations for carpet files, reports and figures"""
    path = Path(path)

    def write():
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(content, encoding="utf-8")
        return True

    operations = {
        'read': lambda: path.read_text(encoding="utf-8") if path.exists() else None,
        'write': write,
    }

    if operation not in operations:
        raise ValueError(f"Unsupported operation: {operation}")

    return operations[operation]()


def carpet_to_dict(spec: CarpetSpec) -> dict:
    return {"n": spec.n, "m": spec.m, "digits": [[i, j] for i, j in spec.digits]}


def load_carpet_json(text: str) -> CarpetSpec:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedCarpet(f"Carpet file is not valid JSON: {e}")
    return parse_spec(raw)


def read_carpet(path: Union[str, Path]) -> CarpetSpec:
    text = io_fs("read", path)
    if text is None:
        raise MalformedCarpet(f"Carpet file not found: {path}")
    return load_carpet_json(text)


def write_carpet(spec: CarpetSpec, path: Union[str, Path]) -> Path:
    io_fs("write", path, dump_json(carpet_to_dict(spec)))
    return Path(path)


def format_rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def real_digits(precision_bits: int) -> int:
    return max(int(math.floor(precision_bits * math.log10(2))) - 4, 15)


def format_real(x, precision_bits: int = DEFAULT_PRECISION_BITS) -> str:
    if mp.isinf(x):
        return "inf" if x > 0 else "-inf"
    with mp.workprec(precision_bits):
        return mp.nstr(mpf(x), real_digits(precision_bits), strip_zeros=False)


def to_jsonable(obj: Any, precision_bits: int = DEFAULT_PRECISION_BITS) -> Any:
    """Convert results into JSON values; rationals and reals become strings"""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, (mpf, float)):
        return format_real(obj, precision_bits)
    if isinstance(obj, CarpetSpec):
        return carpet_to_dict(obj)
    if is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name), precision_bits)
                for f in fields(obj) if f.compare}
    if isinstance(obj, dict):
        return {str(to_jsonable(k, precision_bits)): to_jsonable(v, precision_bits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [to_jsonable(v, precision_bits) for v in obj]
        return sorted(items, key=json.dumps) if isinstance(obj, (set, frozenset)) else items
    raise TypeError(f"Cannot serialise {type(obj).__name__}")


def dump_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"
