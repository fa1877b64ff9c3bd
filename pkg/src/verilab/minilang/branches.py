"""Branch-arm enumeration for MiniLang programs.

Every `if` and `while` site contributes exactly two arms (taken /
not-taken), even when no `else` block is written. Arms are numbered in
depth-first source order: a site's own two arms precede any arms nested
inside its bodies.
"""

from dataclasses import dataclass

from .nodes import FnDef, If, ProgramTree, Span, While


@dataclass(frozen=True)
class BranchArm:
    arm_id: int
    site: Span
    site_kind: str   # 'if' | 'while'
    arm_kind: str    # 'taken' | 'not_taken'


@dataclass(frozen=True)
class BranchMap:
    arms: tuple  # of BranchArm, ids 0..len-1

    def __len__(self):
        return len(self.arms)

    def arm_ids(self) -> set:
        return {arm.arm_id for arm in self.arms}


def enumerate_branches(prog: ProgramTree) -> BranchMap:
    """List all branch arms of the program in depth-first source order."""
    arms = []

    def visit(stmts):
        for stmt in stmts:
            if isinstance(stmt, If):
                base = len(arms)
                arms.append(BranchArm(base, stmt.span, "if", "taken"))
                arms.append(BranchArm(base + 1, stmt.span, "if", "not_taken"))
                visit(stmt.then_body)
                if stmt.else_body is not None:
                    visit(stmt.else_body)
            elif isinstance(stmt, While):
                base = len(arms)
                arms.append(BranchArm(base, stmt.span, "while", "taken"))
                arms.append(BranchArm(base + 1, stmt.span, "while", "not_taken"))
                visit(stmt.body)

    for fn in prog.functions:
        visit(fn.body)
    return BranchMap(arms=tuple(arms))


def site_arm_ids(prog: ProgramTree) -> dict:
    """Map each branch-site node (by identity) to its (taken, not_taken) ids.

    Mirrors enumerate_branches ordering; used by the interpreter to record
    covered arms.
    """
    mapping = {}
    counter = [0]

    def visit(stmts):
        for stmt in stmts:
            if isinstance(stmt, (If, While)):
                base = counter[0]
                counter[0] += 2
                mapping[id(stmt)] = (base, base + 1)
                if isinstance(stmt, If):
                    visit(stmt.then_body)
                    if stmt.else_body is not None:
                        visit(stmt.else_body)
                else:
                    visit(stmt.body)

    for fn in prog.functions:
        visit(fn.body)
    return mapping
