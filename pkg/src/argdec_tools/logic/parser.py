"""Formula parser

A LALR grammar for the propositional language shared by formulas and
instance files. Precedence is encoded by rule hierarchy, from loosest
(``<->``) to tightest (``~``).
"""

from collections.abc import Collection

from lark import Lark, Token, Transformer, UnexpectedEOF, UnexpectedInput

from argdec_tools.errors import ParseError, UnknownAtom
from argdec_tools.logic.formula import (
    FALSE,
    TRUE,
    And,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Var,
    atoms,
)

FORMULA_GRAMMAR = r"""
    ?start: iff

    ?iff: imp
        | iff "<->" imp          -> iff

    ?imp: disj
        | disj "->" imp          -> implies

    ?disj: conj
         | disj "|" conj         -> or_

    ?conj: neg
         | conj "&" neg          -> and_

    ?neg: "~" neg                -> not_
        | primary

    ?primary: "true"             -> true
            | "false"            -> false
            | NAME               -> var
            | "(" iff ")"

    NAME: /[a-z_][a-z0-9_]*/

    %import common.WS
    %ignore WS
"""


class _FormulaBuilder(Transformer):
    def var(self, children):
        return Var(str(children[0]))

    def true(self, _):
        return TRUE

    def false(self, _):
        return FALSE

    def not_(self, children):
        return Not(children[0])

    def and_(self, children):
        return And(children[0], children[1])

    def or_(self, children):
        return Or(children[0], children[1])

    def implies(self, children):
        return Implies(children[0], children[1])

    def iff(self, children):
        return Iff(children[0], children[1])


_PARSER = Lark(FORMULA_GRAMMAR, parser="lalr")
_BUILDER = _FormulaBuilder()


def parse_formula(
    text: str,
    vocabulary: Collection[str] | None = None,
    line: int = 1,
    column_offset: int = 0,
) -> Formula:
    """Parse ``text`` into a formula.

    Args:
        text: Formula source, e.g. ``"(r & ~u) -> w"``.
        vocabulary: When given, every atom must belong to it (strict mode).
        line: Line number reported in errors (for formulas inside files).
        column_offset: Added to reported columns (for formulas inside lines).

    Returns:
        Formula: The unique tree under the grammar's precedence.

    Raises:
        ParseError: On malformed input, with line and column.
        UnknownAtom: If strict mode finds an undeclared atom.
    """
    try:
        tree = _PARSER.parse(text)
    except UnexpectedEOF as error:
        raise ParseError("unexpected end of formula", line, column_offset + len(text) + 1) from error
    except UnexpectedInput as error:
        column = getattr(error, "column", None)
        if not isinstance(column, int) or column < 1:
            column = len(text) + 1
        found = text[column - 1 : column] or "end of input"
        raise ParseError(f"unexpected {found!r}", line, column_offset + column) from error
    phi = _BUILDER.transform(tree)
    if vocabulary is not None and not atoms(phi) <= set(vocabulary):
        names = tree.scan_values(lambda v: isinstance(v, Token) and v.type == "NAME")
        first = min((t for t in names if t not in vocabulary), key=lambda t: t.start_pos)
        raise UnknownAtom(f"undeclared atom {str(first)!r}", line, column_offset + first.column)
    return phi
