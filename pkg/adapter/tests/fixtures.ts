// Shared fixture pairs: three solutions crossed with a valid and an
// invalid test artifact, with hand-labeled expected outcomes.

export const SOLUTION_CORRECT = `def classify(x):
    if x < 0:
        return "neg"
    return "nonneg"
`;

export const SOLUTION_BUGGY = `def classify(x):
    if x < 0:
        return "nonneg"
    return "nonneg"
`;

export const SOLUTION_ERRORING = `def classify(x):
    if x < 0:
        return unknown_name
    return "nonneg"
`;

// Exercises both arms of the condition.
export const TEST_BOTH_ARMS = `import unittest

from solution import classify


class ClassifyTests(unittest.TestCase):
    def test_negative(self):
        self.assertEqual(classify(-1), "neg")

    def test_positive(self):
        self.assertEqual(classify(2), "nonneg")
`;

// Exercises only the negative arm.
export const TEST_NEGATIVE_ONLY = `import unittest

from solution import classify


class ClassifyTests(unittest.TestCase):
    def test_negative(self):
        self.assertEqual(classify(-1), "neg")
`;

// Structurally invalid: no unittest.TestCase subclass declared.
export const TEST_NO_DECLARATION = `from solution import classify


def check():
    assert classify(-1) == "neg"
`;

export interface FixturePair {
  name: string;
  solution: string;
  test: string;
  expectedStatus: "pass" | "failure" | "error";
  expectedCoverage: number | null; // null: not pinned by hand
}

export const FIXTURE_PAIRS: FixturePair[] = [
  {
    name: "correct solution / valid test",
    solution: SOLUTION_CORRECT,
    test: TEST_BOTH_ARMS,
    expectedStatus: "pass",
    expectedCoverage: 1.0,
  },
  {
    name: "buggy solution / valid test",
    solution: SOLUTION_BUGGY,
    test: TEST_BOTH_ARMS,
    expectedStatus: "failure",
    expectedCoverage: 1.0,
  },
  {
    name: "erroring solution / valid test",
    solution: SOLUTION_ERRORING,
    test: TEST_NEGATIVE_ONLY,
    expectedStatus: "error",
    expectedCoverage: 0.5,
  },
  {
    name: "correct solution / invalid test",
    solution: SOLUTION_CORRECT,
    test: TEST_NO_DECLARATION,
    expectedStatus: "error",
    expectedCoverage: 0.0,
  },
  {
    name: "buggy solution / invalid test",
    solution: SOLUTION_BUGGY,
    test: TEST_NO_DECLARATION,
    expectedStatus: "error",
    expectedCoverage: 0.0,
  },
  {
    name: "erroring solution / invalid test",
    solution: SOLUTION_ERRORING,
    test: TEST_NO_DECLARATION,
    expectedStatus: "error",
    expectedCoverage: 0.0,
  },
];
