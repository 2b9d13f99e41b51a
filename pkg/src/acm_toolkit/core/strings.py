"""Language-tagged strings and role placeholders.

``LangString`` records a text together with the language it is written in. The
language may be a natural language ("en", "de") or a computer language ("ocl").
``MultiLangString`` holds the same text in several languages, one entry per tag.

Role placeholders are ``{label}`` segments inside any of these texts. Doubled
braces (``{{`` and ``}}``) are escapes and are kept verbatim.
"""

from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from typing import ClassVar

from pydantic import ConfigDict

from .exceptions import EmptyString, InvalidArgument, UnbalancedBraces


@dataclass(frozen=True)
class LangString:
    """A text in one language."""

    __pydantic_config__: ClassVar[ConfigDict] = ConfigDict(extra="forbid")

    lang: str
    content: str

    def __post_init__(self) -> None:
        if not self.lang or not self.lang.strip():
            raise InvalidArgument("LangString.lang must be a non-empty language tag")

    def with_content(self, content: str) -> "LangString":
        return LangString(lang=self.lang, content=content)


@dataclass(frozen=True)
class ExpressionLangString(LangString):
    """A LangString that also points at the Expression it renders."""

    expression_ref: str | None = None

    def with_content(self, content: str) -> "LangString":
        # rewritten text no longer renders the Expression
        if content != self.content:
            return LangString(lang=self.lang, content=content)
        return self


@dataclass
class MultiLangString:
    """The same text in several languages, in document order."""

    values: list[LangString | ExpressionLangString] = field(default_factory=list)

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for value in self.values:
            if value.lang in seen:
                raise InvalidArgument(f"MultiLangString has two entries for lang {value.lang!r}")
            seen.add(value.lang)

    @classmethod
    def of(cls, content: str, lang: str = "en") -> "MultiLangString":
        return cls([LangString(lang=lang, content=content)])

    def __bool__(self) -> bool:
        return bool(self.values)

    def __iter__(self) -> Iterator[LangString]:
        return iter(self.values)

    def localize(self, lang: str) -> str:
        return localize(self, lang)

    def map_content(self, fn: Callable[[LangString], LangString]) -> "MultiLangString":
        """Return a copy with every entry replaced by ``fn(entry)``."""
        return MultiLangString([fn(value) for value in self.values])


def localize(s: MultiLangString, lang: str) -> str:
    """Return the content for ``lang``, falling back to the first entry."""
    if not s.values:
        raise EmptyString("Cannot localize an empty MultiLangString")
    for value in s.values:
        if value.lang == lang:
            return value.content
    return s.values[0].content


# ---------------------------------------------------------------------------
# Role placeholders
# ---------------------------------------------------------------------------
def split_roles(text: str, gid: str = "") -> list[tuple[bool, str]]:
    """Split ``text`` into ``(is_role, chunk)`` segments.

    Literal chunks keep escaped braces as written; role chunks are the label
    without braces. Raises UnbalancedBraces on an unmatched, nested or empty role.
    """
    segments: list[tuple[bool, str]] = []
    buf: list[str] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in "{}" and text.startswith(ch * 2, i):
            buf.append(ch * 2)
            i += 2
            continue
        if ch == "}":
            raise UnbalancedBraces(gid, text)
        if ch == "{":
            end = text.find("}", i + 1)
            label = text[i + 1 : end] if end != -1 else ""
            if end == -1 or "{" in label or not label.strip():
                raise UnbalancedBraces(gid, text)
            if buf:
                segments.append((False, "".join(buf)))
                buf = []
            segments.append((True, label))
            i = end + 1
            continue
        buf.append(ch)
        i += 1
    if buf:
        segments.append((False, "".join(buf)))
    return segments


def role_labels(text: str, gid: str = "") -> list[str]:
    """Role labels in order of first appearance."""
    labels: list[str] = []
    for is_role, chunk in split_roles(text, gid):
        if is_role and chunk not in labels:
            labels.append(chunk)
    return labels


def substitute_roles(
    text: str, lookup: Callable[[str], str | None], gid: str = "", unescape: bool = False
) -> str:
    """Replace each role with ``lookup(label)``; roles mapped to None stay as ``{label}``.

    With ``unescape``, doubled braces in the literal text come out single.
    """
    out: list[str] = []
    for is_role, chunk in split_roles(text, gid):
        if not is_role:
            out.append(chunk.replace("{{", "{").replace("}}", "}") if unescape else chunk)
            continue
        value = lookup(chunk)
        out.append("{" + chunk + "}" if value is None else value)
    return "".join(out)
