"""Corpus ingestion.

One JSON document:
{ "problems": [ { "id": str, "description": str,
                  "solution": {"source": str},
                  "candidates": [{"id": str, "source": str}],
                  "responses": [{"id": str, "text": str}] } ] }
"""

import json
from dataclasses import dataclass, field


class SchemaError(Exception):
    pass


class IoError(Exception):
    pass


@dataclass(frozen=True)
class SourceText:
    text: str
    origin_id: str

    def __post_init__(self):
        if not self.origin_id:
            raise ValueError("origin_id must be non-empty")


@dataclass(frozen=True)
class ProblemRecord:
    problem_id: str
    description: str
    solution: SourceText
    candidates: tuple = field(default_factory=tuple)   # of SourceText
    responses: tuple = field(default_factory=tuple)    # of (id, text)


def _require(mapping, key, problem_id):
    if key not in mapping:
        raise SchemaError(f"problem {problem_id!r}: missing {key!r}")
    return mapping[key]


def load_corpus(path, *, need_candidates=False, need_responses=False) -> list:
    """Parse and validate the corpus file; rejects duplicate ids."""
    try:
        with open(path, encoding="utf-8") as handle:
            doc = json.load(handle)
    except OSError as exc:
        raise IoError(f"cannot read corpus {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"corpus {path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "problems" not in doc:
        raise SchemaError("corpus document must contain a 'problems' list")
    records = []
    seen = set()
    for raw in doc["problems"]:
        pid = raw.get("id")
        if not pid:
            raise SchemaError("problem without an 'id'")
        if pid in seen:
            raise SchemaError(f"duplicate problem id {pid!r}")
        seen.add(pid)
        solution = _require(raw, "solution", pid)
        if "source" not in solution:
            raise SchemaError(f"problem {pid!r}: solution missing 'source'")
        if need_candidates and not raw.get("candidates"):
            raise SchemaError(f"problem {pid!r}: missing 'candidates' for a selection run")
        if need_responses and not raw.get("responses"):
            raise SchemaError(f"problem {pid!r}: missing 'responses' for a reward run")
        for key in ("candidates", "responses"):
            if not isinstance(raw.get(key, []), list):
                raise SchemaError(f"problem {pid!r}: {key!r} must be a list")
        candidates = []
        for cand in raw.get("candidates", []):
            if "id" not in cand or "source" not in cand:
                raise SchemaError(f"problem {pid!r}: candidate missing 'id' or 'source'")
            candidates.append(SourceText(text=cand["source"], origin_id=cand["id"]))
        responses = []
        for resp in raw.get("responses", []):
            if "id" not in resp or "text" not in resp:
                raise SchemaError(f"problem {pid!r}: response missing 'id' or 'text'")
            responses.append((resp["id"], resp["text"]))
        records.append(ProblemRecord(
            problem_id=pid,
            description=raw.get("description", ""),
            solution=SourceText(text=solution["source"], origin_id=f"{pid}/solution"),
            candidates=tuple(candidates),
            responses=tuple(responses),
        ))
    return records
