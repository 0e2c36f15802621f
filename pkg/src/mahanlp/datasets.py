"""Download, verify, cache, and load the three supervised Marathi corpora.

Catalog entries pin a SHA-256 digest per split. Splits are cached under
``<MAHANLP_HOME>/datasets/<name>/<split>.<ext>``; a verified cache hit never
touches the fetcher, a digest mismatch quarantines the bad file with a
``.corrupt`` suffix, and writes go through a temp-file-then-rename so a crash
never leaves a partial file at the final path.

The shipped catalog points at snapshot splits bundled with the package
(``pkg://`` URLs served by the default fetcher); registering descriptors with
``https://`` URLs makes the same machinery fetch remote releases.
"""

import hashlib
import os
import tempfile
from dataclasses import dataclass, field
from importlib import resources
from types import MappingProxyType
from typing import Callable, Mapping

from filelock import FileLock

from .config import datasets_dir
from .errors import CatalogError, FetchError, IntegrityError, ResourceError

__all__ = [
    "ColumnSpec",
    "DatasetDescriptor",
    "DatasetTable",
    "list_datasets",
    "load_dataset",
    "clear_cache",
    "default_fetcher",
]

Fetcher = Callable[[str], bytes]

SPLITS = ("train", "test", "validation")

NER_TAGSET = ("O", "NEP", "NEL", "NEO", "NEM", "NETI", "NED", "ED")

PKG_URL_PREFIX = "pkg://datasets/"


@dataclass(frozen=True)
class ColumnSpec:
    name: str
    kind: str  # text | label | tokens | tags


@dataclass(frozen=True)
class DatasetDescriptor:
    """Catalog entry: where each split lives and what its rows look like."""

    name: str
    splits: tuple[str, ...]
    source_urls: Mapping[str, str]
    checksums: Mapping[str, str]  # sha256 hex per split
    schema: tuple[ColumnSpec, ...]
    file_format: str  # tsv | conll
    label_values: tuple[str, ...] = ()
    label_map: Mapping[str, str] = field(default_factory=dict)

    @property
    def extension(self) -> str:
        return {"tsv": "tsv", "conll": "conll"}[self.file_format]


@dataclass
class DatasetTable:
    """In-memory rows of one cached split."""

    rows: list[dict]
    split: str
    descriptor: DatasetDescriptor

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    @property
    def columns(self) -> list[str]:
        return [c.name for c in self.descriptor.schema]

    def to_pandas(self):
        """Rows as a pandas DataFrame (column order follows the schema)."""
        import pandas as pd

        return pd.DataFrame(self.rows, columns=self.columns)


_CLASSIFICATION_SCHEMA = (ColumnSpec("text", "text"), ColumnSpec("label", "label"))
_NER_SCHEMA = (ColumnSpec("tokens", "tokens"), ColumnSpec("tags", "tags"))


def _pkg_urls(name: str, ext: str) -> Mapping[str, str]:
    return MappingProxyType(
        {s: f"{PKG_URL_PREFIX}{name}/{s}.{ext}" for s in SPLITS})


_CATALOG: tuple[DatasetDescriptor, ...] = (
    DatasetDescriptor(
        name="mahasent",
        splits=SPLITS,
        source_urls=_pkg_urls("mahasent", "tsv"),
        checksums=MappingProxyType({
            "train": "e401460d345a321b3fd58a90bd39666467b23b5edc84aab81c7f553ea5f2db65",
            "test": "d8e06e542cd04605232eb534b63e544738b634321c21a271fadd956eef2ef7ca",
            "validation": "abb3d368b4e12da18239f9c1c8dacb8a45a78f937418e802fe883e28c7ea6278",
        }),
        schema=_CLASSIFICATION_SCHEMA,
        file_format="tsv",
        label_values=("positive", "negative", "neutral"),
        label_map=MappingProxyType({"1": "positive", "-1": "negative", "0": "neutral"}),
    ),
    DatasetDescriptor(
        name="mahahate",
        splits=SPLITS,
        source_urls=_pkg_urls("mahahate", "tsv"),
        checksums=MappingProxyType({
            "train": "fbb5e4bdf63d92fbb4311f3fccb686951893d626821d9a21312d36cd1667b454",
            "test": "1540c82d44d8ed835e50b54eda27cc3631e00eebc4a31917f2222ac935722211",
            "validation": "4b2be0725639e3a39ef372a9f1ba3dce9fb0f4bdbb3c072d3216461968eb9b6a",
        }),
        schema=_CLASSIFICATION_SCHEMA,
        file_format="tsv",
        label_values=("hate", "non-hate"),
        label_map=MappingProxyType({"1": "hate", "0": "non-hate"}),
    ),
    DatasetDescriptor(
        name="mahaner",
        splits=SPLITS,
        source_urls=_pkg_urls("mahaner", "conll"),
        checksums=MappingProxyType({
            "train": "650639f61f9f939c429adc039cbfce03ddc582ec7f72b6da448296ee355d2bcd",
            "test": "4c87a5c43fe172120b6075133afa28f31e017eb0017e64fea061dff34cc78fb7",
            "validation": "d7bb72eb0b286133612ad12a12100eb15090bec193434d0db3f1064a56fd35d7",
        }),
        schema=_NER_SCHEMA,
        file_format="conll",
        label_values=NER_TAGSET,
    ),
)


def list_datasets() -> list[DatasetDescriptor]:
    """The catalog, in stable order."""
    return list(_CATALOG)


def _lookup(name: str) -> DatasetDescriptor:
    for desc in _CATALOG:
        if desc.name == name:
            return desc
    valid = ", ".join(d.name for d in _CATALOG)
    raise CatalogError(f"unknown dataset {name!r}; valid datasets: {valid}")


def default_fetcher(url: str) -> bytes:
    """Fetch bytes for ``pkg://`` (bundled) and ``http(s)://`` URLs."""
    if url.startswith(PKG_URL_PREFIX):
        rel = url[len(PKG_URL_PREFIX):]
        ref = resources.files(__package__) / "resources" / "data"
        for part in rel.split("/"):
            ref = ref / part
        try:
            return ref.read_bytes()
        except (FileNotFoundError, OSError) as exc:
            raise ResourceError(f"bundled dataset resource missing: {url}",
                                path=url) from exc
    if url.startswith(("http://", "https://")):
        import urllib.error
        import urllib.request

        try:
            with urllib.request.urlopen(url, timeout=60) as resp:
                return resp.read()
        except (urllib.error.URLError, OSError) as exc:
            raise FetchError(f"could not fetch {url}: {exc}", url=url) from exc
    raise FetchError(f"unsupported URL scheme: {url}", url=url)


def _sha256(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _cache_path(desc: DatasetDescriptor, split: str):
    return datasets_dir() / desc.name / f"{split}.{desc.extension}"


def _read_verified_cache(path, expected: str) -> bytes | None:
    """Return cached bytes when present and intact; quarantine otherwise."""
    if not path.exists():
        return None
    data = path.read_bytes()
    actual = _sha256(data)
    if actual == expected:
        return data
    corrupt = path.with_name(path.name + ".corrupt")
    os.replace(path, corrupt)
    raise IntegrityError(
        f"cache file {path} failed checksum verification "
        f"(expected {expected}, got {actual}); quarantined as {corrupt.name}",
        path=str(path), expected=expected, actual=actual,
    )


def _write_atomic(path, data: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_dataset(name: str, split: str,
                 fetcher: Fetcher | None = None) -> DatasetTable:
    """Load one split, fetching and caching it on first use.

    A cache file whose digest matches the catalog is loaded without calling
    the fetcher at all.
    """
    desc = _lookup(name)
    if split not in desc.splits:
        raise CatalogError(
            f"dataset {name!r} has no split {split!r}; "
            f"valid splits: {', '.join(desc.splits)}")
    if fetcher is None:
        fetcher = default_fetcher

    expected = desc.checksums[split]
    path = _cache_path(desc, split)

    data = _read_verified_cache(path, expected)
    if data is None:
        path.parent.mkdir(parents=True, exist_ok=True)
        lock = FileLock(str(path) + ".lock")
        with lock:
            data = _read_verified_cache(path, expected)
            if data is None:
                url = desc.source_urls[split]
                try:
                    data = fetcher(url)
                except (FetchError, ResourceError):
                    raise
                except Exception as exc:
                    raise FetchError(f"fetch of {url} failed: {exc}", url=url) from exc
                actual = _sha256(data)
                if actual != expected:
                    raise IntegrityError(
                        f"downloaded {url} failed checksum verification "
                        f"(expected {expected}, got {actual})",
                        path=url, expected=expected, actual=actual,
                    )
                _write_atomic(path, data)
    return _parse(data, desc, split)


def _parse(data: bytes, desc: DatasetDescriptor, split: str) -> DatasetTable:
    text = data.decode("utf-8")
    if desc.file_format == "tsv":
        rows = _parse_tsv(text, desc)
    else:
        rows = _parse_conll(text, desc)
    if not rows:
        raise IntegrityError(f"dataset {desc.name}/{split} contains no rows")
    return DatasetTable(rows=rows, split=split, descriptor=desc)


def _parse_tsv(text: str, desc: DatasetDescriptor) -> list[dict]:
    lines = text.splitlines()
    if not lines or lines[0].split("\t") != ["text", "label"]:
        raise IntegrityError(f"dataset {desc.name}: expected 'text<TAB>label' header")
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise IntegrityError(
                f"dataset {desc.name} line {lineno}: expected 2 columns, "
                f"got {len(parts)}")
        raw_text, raw_label = parts
        label = desc.label_map.get(raw_label, raw_label)
        if label not in desc.label_values:
            raise IntegrityError(
                f"dataset {desc.name} line {lineno}: label {raw_label!r} not in "
                f"declared set {list(desc.label_values)}")
        rows.append({"text": raw_text, "label": label})
    return rows


def _parse_conll(text: str, desc: DatasetDescriptor) -> list[dict]:
    rows = []
    tokens: list[str] = []
    tags: list[str] = []
    for lineno, line in enumerate(text.splitlines() + [""], start=1):
        if not line.strip():
            if tokens:
                rows.append({"tokens": tokens, "tags": tags})
                tokens, tags = [], []
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise IntegrityError(
                f"dataset {desc.name} line {lineno}: expected 'token<TAB>tag', "
                f"got {line!r}")
        token, tag = parts
        if tag not in desc.label_values:
            raise IntegrityError(
                f"dataset {desc.name} line {lineno}: tag {tag!r} not in "
                f"declared set {list(desc.label_values)}")
        tokens.append(token)
        tags.append(tag)
    return rows


def clear_cache(name: str | None = None) -> int:
    """Delete cached files for one dataset, or all of them; returns the count."""
    root = datasets_dir()
    if name is not None:
        dirs = [root / name]
    else:
        dirs = [root / d.name for d in _CATALOG]
    removed = 0
    for directory in dirs:
        if not directory.is_dir():
            continue
        for entry in sorted(directory.iterdir()):
            if entry.is_file():
                entry.unlink()
                removed += 1
        try:
            directory.rmdir()
        except OSError:
            pass
    return removed
