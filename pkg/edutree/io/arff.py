"""
ARFF 子集的读写

支持 @relation、@attribute <name> {v,...}、@attribute <name> numeric|real|integer、@data、
'%' 注释、单/双引号包裹的名称与取值；关键字大小写不敏感，LF 与 CRLF 均可。
稀疏行以及 string/date/relational 类型给出明确的诊断后拒绝。

解析不抛出底层异常，所有失败都是带行列位置的 ParseDiagnostic。
"""

import math
import re
from pathlib import Path
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from edutree.core.exceptions import ArffParseError, DomainError
from edutree.models.dataset import MISSING, AttributeSpec, Dataset, Instance, Schema, Value
from edutree.models.enums import Severity
from edutree.utils.log_control import logger

MISSING_TOKEN = "?"
NUMERIC_TYPES = ("numeric", "real", "integer")
UNSUPPORTED_TYPES = ("string", "date", "relational")

_WS = " \t"
_QUOTES = "'\""
_UNESCAPE = {"n": "\n", "r": "\r", "t": "\t"}
_KEYWORD_RE = re.compile(r"@([A-Za-z]+)")
_NEEDS_QUOTES_RE = re.compile(r"[\s,%{}'\"\\]")


class ParseDiagnostic(BaseModel):
    model_config = ConfigDict(frozen=True)

    line: int = Field(..., ge=1, description="行号，从 1 开始")
    column: int = Field(..., ge=1, description="列号，从 1 开始")
    message: str
    severity: Severity = Severity.ERROR

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.severity}: {self.message}"


class ArffReadResult(NamedTuple):
    dataset: Optional[Dataset]
    diagnostics: List[ParseDiagnostic]

    @property
    def errors(self) -> List[ParseDiagnostic]:
        return [d for d in self.diagnostics if d.severity == Severity.ERROR]

    @property
    def warnings(self) -> List[ParseDiagnostic]:
        return [d for d in self.diagnostics if d.severity == Severity.WARNING]


class _Field(NamedTuple):
    text: str
    column: int
    quoted: bool


class _LexError(Exception):
    def __init__(self, column: int, message: str):
        super().__init__(message)
        self.column = column
        self.message = message


def _read_quoted(line: str, i: int, stop: int) -> Tuple[str, int]:
    """从 line[i] 处的引号读到配对引号，返回 (内容, 引号之后的位置)"""
    quote = line[i]
    out: List[str] = []
    j = i + 1
    while j < stop:
        ch = line[j]
        if ch == "\\" and j + 1 < stop:
            nxt = line[j + 1]
            out.append(_UNESCAPE.get(nxt, nxt))
            j += 2
            continue
        if ch == quote:
            return "".join(out), j + 1
        out.append(ch)
        j += 1
    raise _LexError(i + 1, "unterminated quoted value")


def _skip_ws(line: str, i: int, stop: int) -> int:
    while i < stop and line[i] in _WS:
        i += 1
    return i


def _split_fields(line: str, start: int = 0, stop: Optional[int] = None) -> List[_Field]:
    """按逗号切分，感知引号；未加引号的 '%' 之后为注释"""
    stop = len(line) if stop is None else stop
    fields: List[_Field] = []
    i = _skip_ws(line, start, stop)
    if i >= stop or line[i] == "%":
        return fields

    while True:
        i = _skip_ws(line, i, stop)
        column = i + 1
        if i < stop and line[i] in _QUOTES:
            text, i = _read_quoted(line, i, stop)
            i = _skip_ws(line, i, stop)
            if i < stop and line[i] not in ",%":
                raise _LexError(i + 1, "unexpected text after quoted value")
            fields.append(_Field(text, column, True))
        else:
            j = i
            while j < stop and line[j] not in ",%":
                j += 1
            fields.append(_Field(line[i:j].rstrip(_WS), column, False))
            i = j
        if i < stop and line[i] == ",":
            i += 1
            continue
        return fields


def _read_token(line: str, i: int) -> Tuple[Optional[_Field], int]:
    """读取一个名称：引号串或到空白/'{'/'%' 为止"""
    i = _skip_ws(line, i, len(line))
    if i >= len(line) or line[i] == "%":
        return None, i
    if line[i] in _QUOTES:
        text, j = _read_quoted(line, i, len(line))
        return _Field(text, i + 1, True), j
    j = i
    while j < len(line) and line[j] not in _WS + "{%":
        j += 1
    return _Field(line[i:j], i + 1, False), j


def _find_unquoted(line: str, target: str, start: int) -> int:
    i = start
    while i < len(line):
        ch = line[i]
        if ch in _QUOTES:
            _, i = _read_quoted(line, i, len(line))
            continue
        if ch == target:
            return i
        i += 1
    return -1


def _only_comment_left(line: str, i: int) -> bool:
    i = _skip_ws(line, i, len(line))
    return i >= len(line) or line[i] == "%"


def convert_value(spec: AttributeSpec, text: str, quoted: bool) -> Value:
    """
    单元格文本 -> 内部取值

    Raises:
        DomainError: 未声明的名义值或无法解析的数值
    """
    if not quoted and text == MISSING_TOKEN:
        return MISSING
    if spec.is_nominal:
        if text not in spec.values:
            raise DomainError(f"undeclared nominal value '{text}'")
        return spec.values.index(text)
    try:
        number = float(text)
    except ValueError:
        raise DomainError(f"invalid numeric value '{text}'")
    if not math.isfinite(number):
        raise DomainError(f"non-finite numeric value '{text}'")
    return number


class _ArffReader:
    """单次解析的状态机：头部声明 -> @data -> 数据行"""

    def __init__(self, text: str, class_attribute: Optional[str]):
        if text.startswith("\ufeff"):
            text = text[1:]
        self.lines = [raw[:-1] if raw.endswith("\r") else raw for raw in text.split("\n")]
        self.class_attribute = class_attribute
        self.diagnostics: List[ParseDiagnostic] = []
        self.relation: Optional[str] = None
        self.attributes: List[AttributeSpec] = []
        self.attribute_lines: Dict[str, int] = {}
        self.schema: Optional[Schema] = None
        self.data_line: Optional[int] = None
        self.instances: List[Instance] = []

    def error(self, line: int, column: int, message: str) -> None:
        self.diagnostics.append(ParseDiagnostic(line=line, column=column, message=message))

    def warning(self, line: int, column: int, message: str) -> None:
        self.diagnostics.append(
            ParseDiagnostic(line=line, column=column, message=message, severity=Severity.WARNING)
        )

    def run(self) -> ArffReadResult:
        for number, line in enumerate(self.lines, start=1):
            try:
                if self.data_line is None:
                    self._header_line(number, line)
                elif self.schema is not None:
                    self._data_line(number, line)
            except _LexError as e:
                self.error(number, e.column, e.message)

        if self.data_line is None:
            self.error(len(self.lines), 1, "missing @data section")
        if self.relation is None:
            self.warning(1, 1, "missing @relation declaration, using 'dataset'")

        self.diagnostics.sort(key=lambda d: (d.line, d.column))
        if any(d.severity == Severity.ERROR for d in self.diagnostics) or self.schema is None:
            return ArffReadResult(None, self.diagnostics)
        dataset = Dataset(relation=self.relation or "dataset", header=self.schema, instances=tuple(self.instances))
        return ArffReadResult(dataset, self.diagnostics)

    def _header_line(self, number: int, line: str) -> None:
        start = _skip_ws(line, 0, len(line))
        if start >= len(line) or line[start] == "%":
            return
        match = _KEYWORD_RE.match(line, start)
        if line[start] != "@" or match is None:
            self.error(number, start + 1, "expected a declaration (@relation, @attribute or @data)")
            return
        keyword = match.group(1).lower()
        rest = match.end()
        if keyword == "relation":
            self._relation(number, line, rest)
        elif keyword == "attribute":
            self._attribute(number, line, rest)
        elif keyword == "data":
            if not _only_comment_left(line, rest):
                self.error(number, rest + 1, "unexpected text after @data")
            self.data_line = number
            self._resolve_schema(number)
        else:
            self.error(number, start + 1, f"unknown declaration '@{match.group(1)}'")

    def _relation(self, number: int, line: str, i: int) -> None:
        token, j = _read_token(line, i)
        if token is None or token.text == "":
            self.error(number, i + 1, "missing relation name")
            return
        if self.relation is not None:
            self.error(number, token.column, "duplicate @relation declaration")
            return
        if not _only_comment_left(line, j):
            self.error(number, j + 1, "unexpected text after relation name")
            return
        self.relation = token.text

    def _attribute(self, number: int, line: str, i: int) -> None:
        token, j = _read_token(line, i)
        if token is None or token.text == "":
            self.error(number, i + 1, "missing attribute name")
            return
        name = token.text
        if name in self.attribute_lines:
            self.error(number, token.column, f"duplicate attribute name '{name}'")
            return

        j = _skip_ws(line, j, len(line))
        if j < len(line) and line[j] == "{":
            close = _find_unquoted(line, "}", j + 1)
            if close < 0:
                self.error(number, j + 1, "unterminated nominal value list")
                return
            if not _only_comment_left(line, close + 1):
                self.error(number, close + 2, "unexpected text after nominal value list")
                return
            fields = _split_fields(line, j + 1, close)
            values: List[str] = []
            for field in fields:
                if field.text == "" and not field.quoted:
                    self.error(number, field.column, f"empty value in nominal list of '{name}'")
                    return
                if field.text in values:
                    self.error(number, field.column, f"nominal value '{field.text}' declared twice for '{name}'")
                    return
                values.append(field.text)
            if not values:
                self.error(number, j + 1, f"nominal attribute '{name}' declares no values")
                return
            spec = AttributeSpec.nominal(name, values)
        else:
            type_token, k = _read_token(line, j)
            if type_token is None:
                self.error(number, j + 1, f"missing type for attribute '{name}'")
                return
            kind = type_token.text.lower()
            if kind in UNSUPPORTED_TYPES:
                self.error(number, type_token.column, f"unsupported attribute type '{type_token.text}'")
                return
            if kind not in NUMERIC_TYPES:
                self.error(number, type_token.column, f"unknown attribute type '{type_token.text}'")
                return
            if not _only_comment_left(line, k):
                self.error(number, k + 1, "unexpected text after attribute type")
                return
            spec = AttributeSpec.numeric(name)

        self.attributes.append(spec)
        self.attribute_lines[name] = number

    def _resolve_schema(self, number: int) -> None:
        if len(self.attributes) < 2:
            self.error(number, 1, "at least two attributes are required")
            return
        try:
            self.schema = Schema.of(self.attributes, class_attribute=self.class_attribute)
        except DomainError as e:
            self.error(number, 1, e.detail)
        except ValidationError as e:
            self.error(number, 1, e.errors()[0]["msg"])

    def _data_line(self, number: int, line: str) -> None:
        start = _skip_ws(line, 0, len(line))
        if start >= len(line) or line[start] == "%":
            return
        if line[start] == "{":
            self.error(number, start + 1, "sparse data rows are not supported")
            return
        schema = self.schema
        fields = _split_fields(line)
        if len(fields) != len(schema.attributes):
            self.error(number, start + 1, f"expected {len(schema.attributes)} values, found {len(fields)}")
            return

        values: List[Value] = []
        ok = True
        for spec, field in zip(schema.attributes, fields):
            if field.text == "" and not field.quoted:
                self.error(number, field.column, f"empty value for attribute '{spec.name}'")
                ok = False
                continue
            try:
                values.append(convert_value(spec, field.text, field.quoted))
            except DomainError as e:
                self.error(number, field.column, e.detail)
                ok = False
        if not ok:
            return
        if values[schema.class_index] is MISSING:
            self.warning(number, fields[schema.class_index].column, "missing class value")
        self.instances.append(Instance(values=tuple(values)))


def read_arff(text: str, class_attribute: Optional[str] = None) -> ArffReadResult:
    """
    解析 ARFF 文本，不抛出异常

    Args:
        text: 文件内容
        class_attribute: 类别属性名，默认最后一个属性

    Returns:
        (dataset, diagnostics)；存在 error 级诊断时 dataset 为 None
    """
    result = _ArffReader(text, class_attribute).run()
    if result.dataset is not None:
        logger.debug(
            "ARFF 解析完成: relation={}, 属性 {} 个, 实例 {} 个",
            result.dataset.relation,
            len(result.dataset.header.attributes),
            len(result.dataset),
        )
    return result


def parse_arff(text: str, class_attribute: Optional[str] = None) -> Dataset:
    """
    解析 ARFF 文本

    Raises:
        ArffParseError: 存在任一 error 级诊断
    """
    result = read_arff(text, class_attribute)
    if result.dataset is None:
        raise ArffParseError(result.diagnostics)
    for warning in result.warnings:
        logger.warning("ARFF {}", warning)
    return result.dataset


def load_arff(path: str | Path, class_attribute: Optional[str] = None) -> Dataset:
    return parse_arff(Path(path).read_text(encoding="utf-8"), class_attribute)


def quote_token(text: str) -> str:
    """必要时加单引号并转义"""
    if text and text != MISSING_TOKEN and not text.startswith("@") and not _NEEDS_QUOTES_RE.search(text):
        return text
    escaped = (
        text.replace("\\", "\\\\").replace("'", "\\'").replace("\n", "\\n").replace("\r", "\\r").replace("\t", "\\t")
    )
    return f"'{escaped}'"


def format_number(value: float) -> str:
    return repr(float(value))


def _format_cell(spec: AttributeSpec, value: Value) -> str:
    if value is MISSING:
        return MISSING_TOKEN
    if spec.is_nominal:
        return quote_token(spec.values[int(value)])
    return format_number(value)


def write_arff(dataset: Dataset, relation_name: Optional[str] = None) -> str:
    """
    Dataset -> ARFF 文本，属性按模式顺序输出，每个实例一行

    类别属性不在最后时，读回需要传入 class_attribute。
    """
    relation = dataset.relation if relation_name is None else relation_name
    lines = [f"@relation {quote_token(relation)}", ""]
    for spec in dataset.header.attributes:
        if spec.is_nominal:
            values = ",".join(quote_token(v) for v in spec.values)
            lines.append(f"@attribute {quote_token(spec.name)} {{{values}}}")
        else:
            lines.append(f"@attribute {quote_token(spec.name)} numeric")
    lines.extend(["", "@data"])
    for inst in dataset.instances:
        lines.append(",".join(_format_cell(spec, v) for spec, v in zip(dataset.header.attributes, inst.values)))
    return "\n".join(lines) + "\n"


def format_diagnostics(diagnostics: Sequence[ParseDiagnostic], source: str = "") -> str:
    prefix = f"{source}:" if source else ""
    return "".join(f"{prefix}{d}\n" for d in diagnostics)
