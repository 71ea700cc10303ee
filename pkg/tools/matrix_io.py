"""
NumRange Toolkit - Matrix files
Text and JSON matrix formats with position-annotated parse errors and a
bit-exact serializer (shortest round-trip float representation).

text:  first line "m n", then m lines of n complex tokens: a, bi, a+bi, a-bi, i
json:  {"rows": m, "cols": n, "data": [[[re, im], ...], ...]}
"""

import json
import logging
import re
from pathlib import Path
from typing import List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, FiniteFloat, PositiveInt, ValidationError, model_validator

from tools.errors import MatrixParseError
from tools.matrix_core import ComplexMatrix, as_matrix

logger = logging.getLogger(__name__)

MatrixFormat = Literal["json", "text"]

_DECIMAL = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?\Z")
_FIELD = re.compile(r"\S+")


class MatrixPayload(BaseModel):
    """JSON matrix document"""

    rows: PositiveInt
    cols: PositiveInt
    data: List[List[Tuple[FiniteFloat, FiniteFloat]]]

    @model_validator(mode="after")
    def _check_shape(self):
        if len(self.data) != self.rows:
            raise ValueError(f"data has {len(self.data)} rows, expected rows = {self.rows}")
        for k, row in enumerate(self.data):
            if len(row) != self.cols:
                raise ValueError(f"data row {k} has {len(row)} entries, expected cols = {self.cols}")
        return self

    def to_matrix(self) -> ComplexMatrix:
        values = np.array([[complex(re_, im_) for re_, im_ in row] for row in self.data], dtype=np.complex128)
        return as_matrix(values)


class MatrixFile(BaseModel):
    """A matrix file on disk; the format follows the extension unless given"""

    path: Path
    format: MatrixFormat

    @classmethod
    def from_path(cls, path, fmt: Optional[MatrixFormat] = None) -> "MatrixFile":
        path = Path(path)
        return cls(path=path, format=fmt or ("json" if path.suffix.lower() == ".json" else "text"))

    def load(self) -> ComplexMatrix:
        try:
            content = self.path.read_text(encoding="utf-8")
        except OSError as e:
            raise MatrixParseError(f"cannot read {self.path}: {e.strerror or e}") from e
        logger.debug(f"Parsing {self.format} matrix from {self.path}")
        return parse_matrix(content, self.format)

    def save(self, matrix) -> None:
        self.path.write_text(serialize_matrix(matrix, self.format), encoding="utf-8")


def _parse_real(text: str) -> Optional[float]:
    if not _DECIMAL.match(text):
        return None
    return float(text)


def parse_complex_token(token: str) -> Optional[complex]:
    """Parse one complex token, or None when malformed"""
    if not token.endswith("i"):
        value = _parse_real(token)
        return None if value is None else complex(value, 0.0)

    body = token[:-1]
    split = -1
    for k in range(len(body) - 1, 0, -1):
        if body[k] in "+-" and body[k - 1] not in "eE":
            split = k
            break
    real_text, imag_text = (body[:split], body[split:]) if split > 0 else ("", body)

    if imag_text in ("", "+", "-"):
        imag = -1.0 if imag_text == "-" else 1.0
    else:
        imag = _parse_real(imag_text)
        if imag is None:
            return None
    if real_text == "":
        return complex(0.0, imag)
    real = _parse_real(real_text)
    return None if real is None else complex(real, imag)


def _parse_text(content: str) -> ComplexMatrix:
    lines = content.splitlines()
    numbered = [(k + 1, line) for k, line in enumerate(lines) if line.strip()]
    if not numbered:
        raise MatrixParseError("empty matrix file")

    header_line, header = numbered[0]
    fields = header.split()
    if len(fields) != 2 or not all(f.isdigit() for f in fields):
        raise MatrixParseError(f"header must be 'rows cols', got {header.strip()!r}", line=header_line, column=1)
    rows, cols = int(fields[0]), int(fields[1])
    if rows < 1 or cols < 1:
        raise MatrixParseError(f"dimensions must be positive, got {rows} x {cols}", line=header_line, column=1)

    body = numbered[1:]
    if len(body) != rows:
        last = body[-1][0] if body else header_line
        raise MatrixParseError(f"expected {rows} rows, got {len(body)}", line=last)

    values = np.zeros((rows, cols), dtype=np.complex128)
    for i, (line_no, line) in enumerate(body):
        tokens = list(_FIELD.finditer(line))
        if len(tokens) != cols:
            raise MatrixParseError(f"expected {cols} entries, got {len(tokens)}", line=line_no, column=1)
        for j, match in enumerate(tokens):
            value = parse_complex_token(match.group())
            if value is None:
                raise MatrixParseError(
                    f"malformed complex token {match.group()!r}", line=line_no, column=match.start() + 1
                )
            values[i, j] = value
    return as_matrix(values)


def _parse_json(content: str) -> ComplexMatrix:
    try:
        document = json.loads(content)
    except json.JSONDecodeError as e:
        raise MatrixParseError(f"invalid JSON: {e.msg}", line=e.lineno, column=e.colno) from e
    try:
        payload = MatrixPayload.model_validate(document)
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(p) for p in err['loc']) or 'document'}: {err['msg']}" for err in e.errors()
        )
        raise MatrixParseError(f"invalid matrix document: {problems}") from e
    return payload.to_matrix()


def parse_matrix(content: str, fmt: MatrixFormat = "text") -> ComplexMatrix:
    """Parse matrix file content in the given format"""
    if not content or not content.strip():
        raise MatrixParseError("empty matrix file")
    if fmt == "json":
        return _parse_json(content)
    if fmt == "text":
        return _parse_text(content)
    raise MatrixParseError(f"unknown matrix format {fmt!r}")


def _format_entry(z: complex) -> str:
    re_, im_ = float(z.real), float(z.imag)
    if im_ == 0.0 and not np.signbit(im_):
        return repr(re_)
    sign = "" if np.signbit(im_) else "+"
    return f"{re_!r}{sign}{im_!r}i"


def serialize_matrix(matrix, fmt: MatrixFormat = "text") -> str:
    """Inverse of parse_matrix; floats use the shortest round-trip repr"""
    m = as_matrix(matrix)
    rows, cols = m.shape
    if fmt == "json":
        payload = {
            "rows": rows,
            "cols": cols,
            "data": [[[float(z.real), float(z.imag)] for z in row] for row in m],
        }
        return json.dumps(payload) + "\n"
    if fmt == "text":
        lines = [f"{rows} {cols}"] + [" ".join(_format_entry(z) for z in row) for row in m]
        return "\n".join(lines) + "\n"
    raise MatrixParseError(f"unknown matrix format {fmt!r}")


def load_matrix(path, fmt: Optional[MatrixFormat] = None) -> ComplexMatrix:
    return MatrixFile.from_path(path, fmt).load()
