import json

import pytest

ABS_SOLUTION = "fn f(x) { if (x < 0) { return 0 - x; } return x; }"
ABS_BUGGY = "fn f(x) { return x; }"
ABS_ERRORING = "fn f(x) { return x / 0; }"

MAX_SOLUTION = "fn m(a, b) { if (a > b) { return a; } return b; }"
MAX_BUGGY = "fn m(a, b) { return b; }"
MAX_ERRORING = "fn m(a, b) { return missing(a); }"

ABS_FULL_SUITE = """suite AbsTests {
  case negatives { assert f(-2) == 2; }
  case positives { assert f(3) == 3; }
}"""
ABS_PARTIAL_SUITE = "suite AbsPartial { case one { assert f(5) == 5; } }"
MAX_SUITE = """suite MaxTests {
  case left { assert m(5, 1) == 5; }
  case right { assert m(1, 5) == 5; }
}"""


def fenced(code):
    return f"Here is the test suite.\n```\n{code}\n```\n"


CORPUS = {
    "problems": [
        {
            "id": "abs",
            "description": "absolute value",
            "solution": {"source": ABS_SOLUTION},
            "candidates": [
                {"id": "abs-good", "source": ABS_SOLUTION},
                {"id": "abs-buggy", "source": ABS_BUGGY},
                {"id": "abs-error", "source": ABS_ERRORING},
            ],
            "responses": [
                {"id": "r-full", "text": fenced(ABS_FULL_SUITE)},
                {"id": "r-partial", "text": fenced(ABS_PARTIAL_SUITE)},
                {"id": "r-prose", "text": "no code block at all"},
            ],
        },
        {
            "id": "max2",
            "description": "maximum of two ints",
            "solution": {"source": MAX_SOLUTION},
            "candidates": [
                {"id": "max-good", "source": MAX_SOLUTION},
                {"id": "max-buggy", "source": MAX_BUGGY},
                {"id": "max-error", "source": MAX_ERRORING},
            ],
            "responses": [
                {"id": "r-max", "text": fenced(MAX_SUITE)},
            ],
        },
    ]
}


@pytest.fixture
def corpus_path(tmp_path):
    path = tmp_path / "corpus.json"
    path.write_text(json.dumps(CORPUS))
    return str(path)
