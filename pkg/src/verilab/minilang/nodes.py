"""AST node definitions for MiniLang programs and test suites."""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Span:
    line: int
    col: int


# --- expressions ---

@dataclass(frozen=True)
class IntLit:
    value: int
    span: Span


@dataclass(frozen=True)
class BoolLit:
    value: bool
    span: Span


@dataclass(frozen=True)
class Name:
    ident: str
    span: Span


@dataclass(frozen=True)
class Unary:
    op: str            # '!' or '-'
    operand: "Expr"
    span: Span


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Expr"
    right: "Expr"
    span: Span


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple
    span: Span


Expr = IntLit | BoolLit | Name | Unary | Binary | Call


# --- statements ---

@dataclass(frozen=True)
class Let:
    name: str
    value: Expr
    span: Span


@dataclass(frozen=True)
class Assign:
    name: str
    value: Expr
    span: Span


@dataclass(frozen=True)
class If:
    cond: Expr
    then_body: tuple
    else_body: tuple | None
    span: Span


@dataclass(frozen=True)
class While:
    cond: Expr
    body: tuple
    span: Span


@dataclass(frozen=True)
class Return:
    value: Expr
    span: Span


@dataclass(frozen=True)
class ExprStmt:
    value: Expr
    span: Span


@dataclass(frozen=True)
class AssertStmt:
    """Only valid inside suite cases."""
    value: Expr
    span: Span


Stmt = Let | Assign | If | While | Return | ExprStmt | AssertStmt


# --- top level ---

@dataclass(frozen=True)
class FnDef:
    name: str
    params: tuple
    body: tuple
    span: Span


@dataclass(frozen=True)
class ProgramTree:
    functions: tuple  # of FnDef, unique names


@dataclass(frozen=True)
class CaseDef:
    name: str
    stmts: tuple
    span: Span


@dataclass(frozen=True)
class SuiteTree:
    name: str
    cases: tuple  # of CaseDef, at least one

    def assertion_count(self) -> int:
        """Static count of assert statements across all cases."""
        total = 0
        stack = [s for case in self.cases for s in case.stmts]
        while stack:
            stmt = stack.pop()
            if isinstance(stmt, AssertStmt):
                total += 1
            elif isinstance(stmt, If):
                stack.extend(stmt.then_body)
                if stmt.else_body is not None:
                    stack.extend(stmt.else_body)
            elif isinstance(stmt, While):
                stack.extend(stmt.body)
        return total
