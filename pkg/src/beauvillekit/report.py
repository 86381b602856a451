"""Sectioned output documents: a human table form and a key/value form that parses back."""
from __future__ import annotations

import configparser
import io


class Document:
    def __init__(self, kind: str):
        self.kind = kind
        self.sections: list[tuple[str, dict[str, str]]] = [("meta", {"kind": kind})]

    @property
    def meta(self) -> dict[str, str]:
        return self.sections[0][1]

    def add(self, name: str, values: dict) -> None:
        self.sections.append((name, {k: _fmt(v) for k, v in values.items()}))

    def section(self, name: str) -> dict[str, str]:
        for n, v in self.sections:
            if n == name:
                return v
        raise KeyError(name)

    def rows(self) -> list[dict[str, str]]:
        return [v for n, v in self.sections if n.startswith("row.")]

    def structured(self) -> str:
        cp = configparser.ConfigParser(interpolation=None)
        cp.optionxform = str
        for name, values in self.sections:
            cp[name] = values
        buf = io.StringIO()
        cp.write(buf)
        return buf.getvalue()

    @classmethod
    def parse(cls, text: str) -> "Document":
        cp = configparser.ConfigParser(interpolation=None)
        cp.optionxform = str
        cp.read_string(text)
        doc = cls(cp["meta"]["kind"])
        doc.sections = [(name, dict(cp[name])) for name in cp.sections()]
        return doc

    def text(self) -> str:
        out = []
        meta = {k: v for k, v in self.meta.items() if k != "kind"}
        if meta:
            out.extend(f"{k}: {v}" for k, v in meta.items())
        rows = self.rows()
        if rows:
            keys = list(rows[0])
            widths = [max(len(k), *(len(r.get(k, "")) for r in rows)) for k in keys]
            out.append("  ".join(k.ljust(w) for k, w in zip(keys, widths)))
            for r in rows:
                out.append("  ".join(r.get(k, "").ljust(w) for k, w in zip(keys, widths)))
        for name, values in self.sections[1:]:
            if name.startswith("row."):
                continue
            out.append(f"[{name}]")
            out.extend(f"  {k}: {v}" for k, v in values.items())
        return "\n".join(out) + "\n"


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "PASS" if v else "FAIL"
    if isinstance(v, float):
        return f"{v:.12g}"
    if isinstance(v, (list, tuple)):
        return ",".join(_fmt(x) for x in v)
    if v is None:
        return "-"
    return str(v)
