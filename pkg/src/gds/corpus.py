"""Corpus files, analysis caching, and corpus-level orchestration.

A corpus is a directory of JSON group files; each file parses into a
permutation group.  Analysis records are cached keyed by a content hash of
the group file plus the analysis configuration, so repeat verification runs
are incremental.  The GDS_CACHE_DIR environment variable overrides the cache
location.
"""

from __future__ import annotations

import hashlib
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .analysis import SCHEMA_VERSION, AnalysisConfig, AnalysisRecord, analyze_group
from .builders import builtin_group
from .errors import InputError
from .groups import DEFAULT_ELEMENT_CAP, PermutationGroup, group_from_generators
from .verifier import theorem_verdicts

CACHE_ENV_VAR = "GDS_CACHE_DIR"
DEFAULT_CACHE_DIR = ".gds_cache"


@dataclass(frozen=True)
class GroupFile:
    """On-disk description of one group: 1-based generator image arrays."""

    name: str
    degree: int
    generators: tuple[tuple[int, ...], ...]
    tags: tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "degree": self.degree,
            "generators": [list(g) for g in self.generators],
            "tags": list(self.tags),
        }

    def canonical_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))

    def content_hash(self) -> str:
        return hashlib.sha256(self.canonical_json().encode("utf-8")).hexdigest()


def parse_group_file(data: dict, source: str = "<memory>") -> GroupFile:
    if not isinstance(data, dict):
        raise InputError(f"{source}: group file must be a JSON object")
    for key in ("name", "degree", "generators"):
        if key not in data:
            raise InputError(f"{source}: missing required field {key!r}")
    name = data["name"]
    degree = data["degree"]
    gens = data["generators"]
    if not isinstance(name, str) or not name:
        raise InputError(f"{source}: field 'name' must be a nonempty string")
    if not isinstance(degree, int) or degree < 1:
        raise InputError(f"{source}: field 'degree' must be a positive integer")
    if not isinstance(gens, list):
        raise InputError(f"{source}: field 'generators' must be a list of image arrays")
    parsed = []
    for arr in gens:
        if not isinstance(arr, list) or len(arr) != degree or any(
            not isinstance(v, int) or isinstance(v, bool) for v in arr
        ):
            raise InputError(
                f"{source}: generator {arr!r} is not an image array of length {degree}"
            )
        if sorted(arr) != list(range(1, degree + 1)):
            raise InputError(
                f"{source}: generator {arr!r} is not a bijection of 1..{degree}"
            )
        parsed.append(tuple(arr))
    tags = data.get("tags", [])
    if not isinstance(tags, list) or any(not isinstance(t, str) for t in tags):
        raise InputError(f"{source}: field 'tags' must be a list of strings")
    return GroupFile(name=name, degree=degree, generators=tuple(parsed), tags=tuple(tags))


def load_group_file(path: Path) -> GroupFile:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from exc
    return parse_group_file(data, source=str(path))


def write_group_file(gf: GroupFile, path: Path) -> None:
    Path(path).write_text(
        json.dumps(gf.to_json_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )


def load_corpus(directory: Path) -> list[GroupFile]:
    """All group files in a directory, validated, ordered by name."""
    directory = Path(directory)
    if not directory.is_dir():
        raise InputError(f"corpus directory {directory} does not exist")
    out = []
    seen: dict[str, str] = {}
    for path in sorted(directory.glob("*.json")):
        gf = load_group_file(path)
        if gf.name in seen:
            raise InputError(
                f"duplicate group name {gf.name!r} in {path} (already in {seen[gf.name]})"
            )
        seen[gf.name] = str(path)
        out.append(gf)
    return sorted(out, key=lambda gf: gf.name)


def build_group(gf: GroupFile, cap: int = DEFAULT_ELEMENT_CAP) -> PermutationGroup:
    return group_from_generators(gf.degree, gf.generators, name=gf.name, cap=cap)


def group_file_from_group(G: PermutationGroup, tags=()) -> GroupFile:
    from .perms import perm_to_one_based

    return GroupFile(
        name=G.name,
        degree=G.degree,
        generators=tuple(tuple(perm_to_one_based(g)) for g in G.generators),
        tags=tuple(tags),
    )


def resolve_group_ref(ref: str, cap: int = DEFAULT_ELEMENT_CAP) -> PermutationGroup:
    """Resolve 'builtin:<spec>' or a path to a JSON group file."""
    if ref.startswith("builtin:"):
        return builtin_group(ref[len("builtin:") :], cap=cap)
    path = Path(ref)
    if path.suffix == ".json" or path.exists():
        return build_group(load_group_file(path), cap=cap)
    raise InputError(f"cannot resolve group reference {ref!r}")


# -- cache -----------------------------------------------------------------


class AnalysisCache:
    def __init__(self, directory: Path | str | None = None):
        if directory is None:
            directory = os.environ.get(CACHE_ENV_VAR) or DEFAULT_CACHE_DIR
        self.directory = Path(directory)

    def key(self, gf: GroupFile, config: AnalysisConfig) -> str:
        payload = json.dumps(
            {
                "schema": SCHEMA_VERSION,
                "group": gf.to_json_dict(),
                "config": config.fingerprint(),
            },
            sort_keys=True,
            separators=(",", ":"),
        )
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()

    def _path(self, key: str) -> Path:
        return self.directory / f"{key}.json"

    def get(self, key: str) -> AnalysisRecord | None:
        path = self._path(key)
        if not path.exists():
            return None
        try:
            return AnalysisRecord.from_json_dict(
                json.loads(path.read_text(encoding="utf-8"))
            )
        except (json.JSONDecodeError, KeyError):
            return None

    def put(self, key: str, record: AnalysisRecord) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        tmp = self._path(key).with_suffix(".tmp")
        tmp.write_text(
            json.dumps(record.to_json_dict(), sort_keys=True), encoding="utf-8"
        )
        tmp.replace(self._path(key))


# -- corpus analysis ---------------------------------------------------------


def analyze_group_file(
    gf: GroupFile,
    config: AnalysisConfig | None = None,
    cache: AnalysisCache | None = None,
    cap: int = DEFAULT_ELEMENT_CAP,
) -> AnalysisRecord:
    config = config or AnalysisConfig()
    key = cache.key(gf, config) if cache is not None else None
    if cache is not None:
        hit = cache.get(key)
        if hit is not None:
            return hit
    record = analyze_group(build_group(gf, cap=cap), config)
    record = record.with_theorems(theorem_verdicts(record, config))
    if cache is not None:
        cache.put(key, record)
    return record


def _analysis_worker(args: tuple) -> dict:
    gf_dict, config_dict, cache_dir = args
    gf = parse_group_file(gf_dict)
    config = AnalysisConfig(**config_dict)
    cache = AnalysisCache(cache_dir) if cache_dir is not None else None
    return analyze_group_file(gf, config, cache).to_json_dict()


def analyze_corpus(
    group_files,
    config: AnalysisConfig | None = None,
    jobs: int = 1,
    cache: AnalysisCache | None = None,
) -> list[AnalysisRecord]:
    """Analyze a corpus, optionally in parallel; output sorted by name."""
    config = config or AnalysisConfig()
    ordered = sorted(group_files, key=lambda gf: gf.name)
    if jobs <= 1:
        records = [analyze_group_file(gf, config, cache) for gf in ordered]
    else:
        cache_dir = str(cache.directory) if cache is not None else None
        work = [
            (gf.to_json_dict(), config.fingerprint(), cache_dir) for gf in ordered
        ]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            dicts = list(pool.map(_analysis_worker, work))
        records = [AnalysisRecord.from_json_dict(d) for d in dicts]
    return sorted(records, key=lambda r: r.name)
