"""Typological database ingestion.

A database is a directory of four UTF-8 CSV tables with header rows:

  languages.csv   id,name
  parameters.csv  id,name
  codes.csv       id,parameter_id,value_index,name
  values.csv      language_id,parameter_id,code_id

``value_index`` is 1-based and contiguous per parameter. Every value row
must reference known languages, parameters and codes; a second value for
the same (language, parameter) is a hard error rather than last-wins, since
a silent overwrite would skew every downstream distance.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .errors import DataValidationError, ParseError

TABLE_COLUMNS = {
    "languages.csv": ("id", "name"),
    "parameters.csv": ("id", "name"),
    "codes.csv": ("id", "parameter_id", "value_index", "name"),
    "values.csv": ("language_id", "parameter_id", "code_id"),
}

# official CLDF export column names -> canonical names, per table
_CLDF_COLUMNS = {
    "languages.csv": {"ID": "id", "Name": "name"},
    "parameters.csv": {"ID": "id", "Name": "name"},
    "codes.csv": {"ID": "id", "Parameter_ID": "parameter_id",
                  "Number": "value_index", "Name": "name"},
    "values.csv": {"Language_ID": "language_id",
                   "Parameter_ID": "parameter_id", "Code_ID": "code_id"},
}


@dataclass(frozen=True)
class FeatureCode:
    """One possible value of a categorical feature."""

    code_id: str
    feature_id: str
    value_index: int   # 1-based position in the feature's value list
    value_name: str
    value_count: int   # total values the feature can take

    def __post_init__(self):
        if not (1 <= self.value_index <= self.value_count):
            raise DataValidationError(
                f"code {self.code_id!r}: value_index {self.value_index} "
                f"outside 1..{self.value_count}")


@dataclass(frozen=True)
class LanguageProfile:
    """A language's feature assignments (feature id -> FeatureCode)."""

    language_id: str
    language_name: str
    assignments: dict[str, FeatureCode] = field(default_factory=dict)

    def feature_ids(self) -> frozenset[str]:
        return frozenset(self.assignments)


@dataclass(frozen=True)
class CommonFeatureSet:
    """Features assigned in every one of the listed languages."""

    language_ids: tuple[str, ...]
    feature_ids: tuple[str, ...]   # lexicographic, for determinism


@dataclass(frozen=True)
class TypologyDatabase:
    languages: dict[str, str]                  # id -> display name
    features: dict[str, str]                   # id -> display name
    codes: dict[str, FeatureCode]              # code id -> code
    profiles: dict[str, LanguageProfile]       # language id -> profile
    row_counts: dict[str, int]

    @property
    def language_ids(self) -> tuple[str, ...]:
        return tuple(self.languages)

    def profile(self, language_id: str) -> LanguageProfile:
        try:
            return self.profiles[language_id]
        except KeyError:
            known = ", ".join(sorted(self.languages))
            raise DataValidationError(
                f"unknown language id {language_id!r}; known: {known}") from None


def _read_table(path: Path, columns: tuple[str, ...],
                rename: dict[str, str] | None = None) -> Iterator[tuple[int, dict]]:
    if not path.is_file():
        raise ParseError(f"missing table {path.name}", path=path)
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ParseError("empty file, header row required", path=path, line=1)
        if rename:
            header = [rename.get(h, h) for h in header]
        missing = [c for c in columns if c not in header]
        if missing:
            raise ParseError(f"header lacks column(s) {missing}", path=path, line=1)
        idx = {c: header.index(c) for c in columns}
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(header):
                raise ParseError(
                    f"expected {len(header)} columns, got {len(row)}",
                    path=path, line=lineno)
            yield lineno, {c: row[i].strip() for c, i in idx.items()}


def load_database(path: str | Path) -> TypologyDatabase:
    """Load a canonical database directory into an immutable in-memory form."""
    root = Path(path)
    if not root.is_dir():
        raise ParseError("database directory not found", path=root)
    return _build_database(root, rename_by_table=None)


def convert_wals_cldf(src: str | Path, dest: str | Path) -> TypologyDatabase:
    """Convert an official CLDF-style export to the canonical layout.

    Reads the four tables using the official column names (ID, Name,
    Parameter_ID, Number, Language_ID, Code_ID), writes the canonical
    files under ``dest`` and returns the loaded database.
    """
    db = _build_database(Path(src), rename_by_table=_CLDF_COLUMNS)
    save_database(db, dest)
    return db


def _build_database(root: Path, rename_by_table) -> TypologyDatabase:
    def rd(table):
        rename = rename_by_table[table] if rename_by_table else None
        return _read_table(root / table, TABLE_COLUMNS[table], rename)

    counts: dict[str, int] = {}

    languages: dict[str, str] = {}
    for lineno, row in rd("languages.csv"):
        if row["id"] in languages:
            raise ParseError(f"duplicate language id {row['id']!r}",
                             path=root / "languages.csv", line=lineno)
        languages[row["id"]] = row["name"]
    counts["languages"] = len(languages)

    features: dict[str, str] = {}
    for lineno, row in rd("parameters.csv"):
        if row["id"] in features:
            raise ParseError(f"duplicate parameter id {row['id']!r}",
                             path=root / "parameters.csv", line=lineno)
        features[row["id"]] = row["name"]
    counts["parameters"] = len(features)

    # two passes over codes: collect rows, then fix value_count per feature
    code_rows: dict[str, list[tuple[int, str, int, str]]] = {}
    code_feature: dict[str, str] = {}
    codes_path = root / "codes.csv"
    for lineno, row in rd("codes.csv"):
        if row["id"] in code_feature:
            raise ParseError(f"duplicate code id {row['id']!r}",
                             path=codes_path, line=lineno)
        if row["parameter_id"] not in features:
            raise ParseError(
                f"code {row['id']!r} references unknown parameter "
                f"{row['parameter_id']!r}", path=codes_path, line=lineno)
        try:
            index = int(row["value_index"])
        except ValueError:
            raise ParseError(f"non-integer value_index {row['value_index']!r}",
                             path=codes_path, line=lineno)
        code_feature[row["id"]] = row["parameter_id"]
        code_rows.setdefault(row["parameter_id"], []).append(
            (lineno, row["id"], index, row["name"]))
    counts["codes"] = len(code_feature)

    codes: dict[str, FeatureCode] = {}
    for feature_id, rows in code_rows.items():
        k = len(rows)
        seen_idx = {}
        for lineno, code_id, index, name in rows:
            if index in seen_idx:
                raise ParseError(
                    f"parameter {feature_id!r} has two codes with "
                    f"value_index {index}", path=codes_path, line=lineno)
            seen_idx[index] = code_id
            if not (1 <= index <= k):
                raise ParseError(
                    f"parameter {feature_id!r}: value_index {index} outside "
                    f"contiguous range 1..{k}", path=codes_path, line=lineno)
            codes[code_id] = FeatureCode(code_id, feature_id, index, name, k)

    assignments: dict[str, dict[str, FeatureCode]] = {lid: {} for lid in languages}
    values_path = root / "values.csv"
    n_values = 0
    for lineno, row in rd("values.csv"):
        lid, fid, cid = row["language_id"], row["parameter_id"], row["code_id"]
        if lid not in languages:
            raise ParseError(f"value row references unknown language {lid!r}",
                             path=values_path, line=lineno)
        if fid not in features:
            raise ParseError(f"value row references unknown parameter {fid!r}",
                             path=values_path, line=lineno)
        code = codes.get(cid)
        if code is None:
            raise ParseError(f"value row references unknown code {cid!r}",
                             path=values_path, line=lineno)
        if code.feature_id != fid:
            raise ParseError(
                f"code {cid!r} belongs to parameter {code.feature_id!r}, "
                f"not {fid!r}", path=values_path, line=lineno)
        if fid in assignments[lid]:
            raise ParseError(
                f"duplicate value for language {lid!r}, parameter {fid!r}",
                path=values_path, line=lineno)
        assignments[lid][fid] = code
        n_values += 1
    counts["values"] = n_values

    profiles = {
        lid: LanguageProfile(lid, languages[lid], assignments[lid])
        for lid in languages
    }
    return TypologyDatabase(languages, features, codes, profiles, counts)


def save_database(db: TypologyDatabase, path: str | Path) -> None:
    """Write the canonical four-table layout (deterministically sorted)."""
    root = Path(path)
    root.mkdir(parents=True, exist_ok=True)

    def write(table, header, rows):
        with open(root / table, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh)
            w.writerow(header)
            w.writerows(rows)

    write("languages.csv", ("id", "name"),
          ((lid, db.languages[lid]) for lid in db.languages))
    write("parameters.csv", ("id", "name"),
          ((fid, name) for fid, name in sorted(db.features.items())))
    write("codes.csv", ("id", "parameter_id", "value_index", "name"),
          ((c.code_id, c.feature_id, c.value_index, c.value_name)
           for c in sorted(db.codes.values(),
                           key=lambda c: (c.feature_id, c.value_index))))
    write("values.csv", ("language_id", "parameter_id", "code_id"),
          ((lid, fid, code.code_id)
           for lid in db.languages
           for fid, code in sorted(db.profiles[lid].assignments.items())))


def common_features(db: TypologyDatabase,
                    languages: Iterable[str]) -> CommonFeatureSet:
    """Select the features assigned in all of the requested languages.

    The result's feature order is lexicographic so repeated runs and
    permuted language lists produce identical tables.
    """
    ordered: list[str] = []
    for lid in languages:
        if lid not in ordered:
            ordered.append(lid)
    if len(ordered) < 2:
        raise DataValidationError(
            f"need at least 2 distinct languages, got {len(ordered)}")
    shared: frozenset[str] | None = None
    for lid in ordered:
        profile = db.profile(lid)
        shared = profile.feature_ids() if shared is None \
            else shared & profile.feature_ids()
    if not shared:
        raise DataValidationError(
            "the requested languages share no documented features")
    return CommonFeatureSet(tuple(ordered), tuple(sorted(shared)))
