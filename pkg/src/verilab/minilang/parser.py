"""Recursive-descent parser for MiniLang programs and suites.

Grammar (whitespace-insensitive, `#` comments):

    program  := fndef+
    fndef    := "fn" IDENT "(" [IDENT {"," IDENT}] ")" block
    block    := "{" stmt* "}"
    stmt     := "let" IDENT "=" expr ";" | IDENT "=" expr ";"
              | "if" "(" expr ")" block ["else" block]
              | "while" "(" expr ")" block
              | "return" expr ";" | expr ";"
    suite    := "suite" IDENT "{" case+ "}"
    case     := "case" IDENT "{" (stmt | "assert" expr ";")* "}"

Expressions use precedence climbing; `!` and unary `-` bind tightest,
then * / %, + -, comparisons, equality, &&, ||.
"""

from .lexer import ParseError, Token, tokenize
from .nodes import (
    AssertStmt, Assign, Binary, BoolLit, Call, CaseDef, ExprStmt, FnDef, If,
    IntLit, Let, Name, ProgramTree, Return, Span, SuiteTree, Unary, While,
)


class MissingSuiteError(Exception):
    """Source parsed cleanly but declared no test suite."""


_BIN_PRECEDENCE = {
    "||": 1,
    "&&": 2,
    "==": 3, "!=": 3,
    "<": 4, "<=": 4, ">": 4, ">=": 4,
    "+": 5, "-": 5,
    "*": 6, "/": 6, "%": 6,
}


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            got = tok.text if tok.kind != "eof" else "end of input"
            raise ParseError(f"expected {kind!r}, found {got!r}", tok.line, tok.col)
        return self.advance()

    def span(self) -> Span:
        tok = self.peek()
        return Span(tok.line, tok.col)

    # --- top level ---

    def parse_program(self) -> ProgramTree:
        functions = []
        while self.peek().kind != "eof":
            functions.append(self.fndef())
        if not functions:
            tok = self.peek()
            raise ParseError("expected at least one function definition", tok.line, tok.col)
        names = set()
        for fn in functions:
            if fn.name in names:
                raise ParseError(f"duplicate function {fn.name!r}", fn.span.line, fn.span.col)
            names.add(fn.name)
        return ProgramTree(functions=tuple(functions))

    def parse_suite(self) -> SuiteTree:
        suites = []
        saw_fndef = False
        while self.peek().kind != "eof":
            if self.peek().kind == "suite":
                suites.append(self.suite())
            elif self.peek().kind == "fn":
                self.fndef()
                saw_fndef = True
            else:
                tok = self.peek()
                raise ParseError(
                    f"expected 'suite' declaration, found {tok.text!r}", tok.line, tok.col)
        if not suites:
            raise MissingSuiteError("no suite declaration found")
        if len(suites) > 1:
            raise ParseError("more than one suite declaration", 1, 1)
        if saw_fndef:
            raise ParseError("suite source must contain only the suite declaration", 1, 1)
        return suites[0]

    def fndef(self) -> FnDef:
        span = self.span()
        self.expect("fn")
        name = self.expect("ident").text
        self.expect("(")
        params = []
        if self.peek().kind != ")":
            params.append(self.expect("ident").text)
            while self.peek().kind == ",":
                self.advance()
                params.append(self.expect("ident").text)
        self.expect(")")
        body = self.block()
        return FnDef(name=name, params=tuple(params), body=body, span=span)

    def suite(self) -> SuiteTree:
        span = self.span()
        self.expect("suite")
        name = self.expect("ident").text
        self.expect("{")
        cases = []
        while self.peek().kind == "case":
            cases.append(self.case())
        self.expect("}")
        if not cases:
            raise ParseError("suite requires at least one case", span.line, span.col)
        return SuiteTree(name=name, cases=tuple(cases))

    def case(self) -> CaseDef:
        span = self.span()
        self.expect("case")
        name = self.expect("ident").text
        self.expect("{")
        stmts = []
        while self.peek().kind != "}":
            if self.peek().kind == "assert":
                aspan = self.span()
                self.advance()
                expr = self.expr()
                self.expect(";")
                stmts.append(AssertStmt(value=expr, span=aspan))
            else:
                stmts.append(self.stmt())
        self.expect("}")
        return CaseDef(name=name, stmts=tuple(stmts), span=span)

    # --- statements ---

    def block(self) -> tuple:
        self.expect("{")
        stmts = []
        while self.peek().kind != "}":
            stmts.append(self.stmt())
        self.expect("}")
        return tuple(stmts)

    def stmt(self):
        tok = self.peek()
        span = Span(tok.line, tok.col)
        if tok.kind == "let":
            self.advance()
            name = self.expect("ident").text
            self.expect("=")
            value = self.expr()
            self.expect(";")
            return Let(name=name, value=value, span=span)
        if tok.kind == "if":
            self.advance()
            self.expect("(")
            cond = self.expr()
            self.expect(")")
            then_body = self.block()
            else_body = None
            if self.peek().kind == "else":
                self.advance()
                else_body = self.block()
            return If(cond=cond, then_body=then_body, else_body=else_body, span=span)
        if tok.kind == "while":
            self.advance()
            self.expect("(")
            cond = self.expr()
            self.expect(")")
            body = self.block()
            return While(cond=cond, body=body, span=span)
        if tok.kind == "return":
            self.advance()
            value = self.expr()
            self.expect(";")
            return Return(value=value, span=span)
        if tok.kind == "ident" and self.tokens[self.pos + 1].kind == "=":
            name = self.advance().text
            self.advance()  # '='
            value = self.expr()
            self.expect(";")
            return Assign(name=name, value=value, span=span)
        value = self.expr()
        self.expect(";")
        return ExprStmt(value=value, span=span)

    # --- expressions ---

    def expr(self, min_prec: int = 1):
        left = self.unary()
        while True:
            op = self.peek().kind
            prec = _BIN_PRECEDENCE.get(op)
            if prec is None or prec < min_prec:
                return left
            tok = self.advance()
            right = self.expr(prec + 1)
            left = Binary(op=op, left=left, right=right, span=Span(tok.line, tok.col))

    def unary(self):
        tok = self.peek()
        if tok.kind in ("!", "-"):
            self.advance()
            operand = self.unary()
            return Unary(op=tok.kind, operand=operand, span=Span(tok.line, tok.col))
        return self.primary()

    def primary(self):
        tok = self.peek()
        span = Span(tok.line, tok.col)
        if tok.kind == "int":
            self.advance()
            return IntLit(value=int(tok.text), span=span)
        if tok.kind in ("true", "false"):
            self.advance()
            return BoolLit(value=tok.kind == "true", span=span)
        if tok.kind == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        if tok.kind == "ident":
            self.advance()
            if self.peek().kind == "(":
                self.advance()
                args = []
                if self.peek().kind != ")":
                    args.append(self.expr())
                    while self.peek().kind == ",":
                        self.advance()
                        args.append(self.expr())
                self.expect(")")
                return Call(func=tok.text, args=tuple(args), span=span)
            return Name(ident=tok.text, span=span)
        got = tok.text if tok.kind != "eof" else "end of input"
        raise ParseError(f"expected expression, found {got!r}", tok.line, tok.col)


def parse_program(text: str) -> ProgramTree:
    """Parse a MiniLang program (one or more function definitions)."""
    return _Parser(text).parse_program()


def parse_suite(text: str) -> SuiteTree:
    """Parse a single suite declaration.

    Raises ParseError on malformed input and MissingSuiteError when the
    source parses but declares no suite.
    """
    return _Parser(text).parse_suite()
